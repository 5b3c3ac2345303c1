#include "wrp/matrix.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace wrp {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, 1.0);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

bool Matrix::is_symmetric(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.rows());
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator+(Matrix a, const Matrix& b) {
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix& b) {
    a -= b;
    return a;
}

Matrix operator*(double s, Matrix a) {
    a *= s;
    return a;
}

std::vector<double> operator*(const Matrix& a, const std::vector<double>& x) {
    assert(a.cols() == x.size());
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Matrix outer_product(const std::vector<double>& x, const std::vector<double>& y) {
    Matrix m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            m(i, j) = x[i] * y[j];
    return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::fabs(a(i, j) - b(i, j)));
    return m;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    assert(x.size() == y.size());
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm2(const std::vector<double>& x) {
    return std::sqrt(dot(x, x));
}

} // namespace wrp
