#pragma once

#include <cstddef>
#include <vector>

namespace wrp {

/// Dense row-major matrix of doubles. Sized for desk-scale spectral work
/// (n up to a couple of thousand); no blocking or BLAS.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);
    static Matrix ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);

    double max_abs() const;
    double frobenius_norm() const;
    bool is_symmetric(double tol) const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double s, Matrix a);

std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

/// x y^T as a matrix.
Matrix outer_product(const std::vector<double>& x, const std::vector<double>& y);

double max_abs_diff(const Matrix& a, const Matrix& b);
double dot(const std::vector<double>& x, const std::vector<double>& y);
double norm2(const std::vector<double>& x);

} // namespace wrp
