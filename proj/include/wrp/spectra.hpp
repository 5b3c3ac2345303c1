#pragma once

#include <vector>

#include "wrp/graph.hpp"
#include "wrp/matrix.hpp"

namespace wrp {

struct DistinctEigenvalue {
    double value = 0.0;
    int multiplicity = 0;
};

/// Full eigendecomposition of an adjacency matrix: eigenvalues in descending
/// order, nearby values grouped into distinct eigenvalues, and one orthogonal
/// projector (spectral idempotent) per group.
struct SpectralData {
    std::vector<double> eigenvalues;          // lambda_1 >= ... >= lambda_n
    std::vector<DistinctEigenvalue> distinct; // theta_0 > theta_1 > ... > theta_d
    Matrix eigenbasis;                        // orthonormal columns, column k <-> eigenvalues[k]
    std::vector<Matrix> idempotents;          // E_0 .. E_d

    double lambda1() const { return eigenvalues.front(); }
    double lambda_min() const { return eigenvalues.back(); }
    /// d = number of distinct eigenvalues minus one.
    int d() const { return static_cast<int>(distinct.size()) - 1; }
};

/// Eigenvalues within tol_group * max(1, |lambda1|) of each other (by
/// transitive closure on the sorted list) collapse into one distinct value.
SpectralData eigendecompose(const Graph& g, double tol_group = 1e-9);

/// Positive eigenvector for the top eigenvalue, scaled so its minimum entry
/// is exactly 1. Requires a connected graph.
struct PerronVector {
    std::vector<double> entries;
    double lambda1 = 0.0;

    double norm_squared() const;
    double max_entry() const;
};

PerronVector perron_vector(const Graph& g, const SpectralData& s);

/// True iff lambda_i + lambda_{n-i+1} vanishes for all i, within
/// tol * max(1, |lambda1|).
bool is_spectrum_symmetric(const SpectralData& s, double tol = 1e-9);

/// Plain symmetric eigensolver (cyclic Jacobi), for quotient matrices and
/// the like. Values descending; vectors holds orthonormal eigenvector columns.
struct SymmetricEigen {
    std::vector<double> values;
    Matrix vectors;
};

SymmetricEigen eigh(const Matrix& a, int max_sweeps = 100);
std::vector<double> symmetric_eigenvalues(const Matrix& a);

} // namespace wrp
