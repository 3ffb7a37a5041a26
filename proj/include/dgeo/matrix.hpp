#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dgeo/error.hpp"
#include "dgeo/rational.hpp"

namespace dgeo {

/// The two numeric modes: exact rationals and binary64 floats. A computation
/// never mixes them; the mode is the template argument of every container.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

inline Rational abs_value(const Rational& x) { return x.abs(); }
inline double abs_value(double x) { return std::fabs(x); }

inline std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(double x);

template <Scalar T>
T scalar_from_string(std::string_view text);

/// Throws Error(NonFinite) for NaN/Inf in float mode; no-op for rationals.
inline void require_finite(const Rational&) {}
inline void require_finite(double x) {
    if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "non-finite floating-point value");
}

template <Scalar T>
T integer_power(const T& base, unsigned exponent) {
    T out(1);
    for (unsigned i = 0; i < exponent; ++i) out = out * base;
    return out;
}

template <Scalar T>
T factorial(unsigned n) {
    T out(1);
    for (unsigned i = 2; i <= n; ++i) out = out * T(i);
    return out;
}

/// Dense row-major matrix with at least one row and one column.
template <Scalar T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw Error(ErrorKind::Dimension, "matrix must have positive size");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw Error(ErrorKind::Dimension, "ragged matrix literal");
            std::size_t c = 0;
            for (const auto& v : row) (*this)(r, c++) = v;
            ++r;
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix column(std::span<const T> values) {
        Matrix m(values.size(), 1);
        for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = values[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> values() const { return data_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool symmetric() const {
        if (!square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (!((*this)(r, c) == (*this)(c, r))) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::Dimension, "matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& v : m.data_) v = s * v;
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw Error(ErrorKind::Dimension, "matrix shape mismatch");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

/// Float singularity threshold for linear_solve, relative to the largest |entry|.
inline constexpr double kDefaultPivotTolerance = 1e-12;

/// Exact mode: Bareiss fraction-free elimination. Float mode: partial pivoting.
template <Scalar T>
T determinant(const Matrix<T>& m);

/// Solves a·x = b. Throws Error(Singular) on a vanishing pivot; in float mode
/// "vanishing" means below pivot_tolerance·max|a_ij|.
template <Scalar T>
std::vector<T> linear_solve(const Matrix<T>& a, std::span<const T> b,
                            double pivot_tolerance = kDefaultPivotTolerance);

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& a, double pivot_tolerance = kDefaultPivotTolerance);

/// Converts every entry to binary64.
Matrix<double> to_float(const Matrix<Rational>& m);

}  // namespace dgeo
