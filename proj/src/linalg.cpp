#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "dgeo/matrix.hpp"

namespace dgeo {

std::string to_string(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <>
Rational scalar_from_string<Rational>(std::string_view text) {
    return Rational::parse(text);
}

template <>
double scalar_from_string<double>(std::string_view text) {
    const double v = Rational::parse(text).to_double();
    require_finite(v);
    return v;
}

namespace {

void require_square(const auto& m, const char* what) {
    if (!m.square()) throw Error(ErrorKind::Dimension, std::string(what) + " requires a square matrix");
}

Rational bareiss_determinant(Matrix<Rational> m) {
    const std::size_t n = m.rows();
    Rational previous(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Rational(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            }
        }
        previous = m(k, k);
    }
    const Rational& det = m(n - 1, n - 1);
    return negate ? -det : det;
}

double pivoted_determinant(Matrix<double> m) {
    const std::size_t n = m.rows();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m(i, k)) > std::fabs(m(pivot, k))) pivot = i;
        if (m(pivot, k) == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

// Gauss-Jordan on [a | rhs] with row pivoting; rhs may hold several columns.
template <Scalar T>
Matrix<T> eliminate(Matrix<T> a, Matrix<T> rhs, double pivot_tolerance) {
    const std::size_t n = a.rows();
    double threshold = 0.0;
    if constexpr (!is_exact_v<T>) {
        double max_entry = 0.0;
        for (double v : a.values()) max_entry = std::max(max_entry, std::fabs(v));
        threshold = pivot_tolerance * max_entry;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        if constexpr (is_exact_v<T>) {
            for (std::size_t i = k; i < n; ++i) {
                if (!a(i, k).is_zero()) { pivot = i; break; }
            }
        } else {
            double best = -1.0;
            for (std::size_t i = k; i < n; ++i) {
                if (std::fabs(a(i, k)) > best) { best = std::fabs(a(i, k)); pivot = i; }
            }
            if (best <= threshold || best == 0.0) pivot = n;
        }
        if (pivot == n) throw Error(ErrorKind::Singular, "matrix is singular");
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
            for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(k, c), rhs(pivot, c));
        }
        const T p = a(k, k);
        for (std::size_t c = k; c < n; ++c) a(k, c) = a(k, c) / p;
        for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(k, c) = rhs(k, c) / p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(a(i, k))) continue;
            const T f = a(i, k);
            for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
            for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(i, c) -= f * rhs(k, c);
        }
    }
    return rhs;
}

}  // namespace

template <>
Rational determinant(const Matrix<Rational>& m) {
    require_square(m, "determinant");
    return bareiss_determinant(m);
}

template <>
double determinant(const Matrix<double>& m) {
    require_square(m, "determinant");
    const double det = pivoted_determinant(m);
    require_finite(det);
    return det;
}

template <Scalar T>
std::vector<T> linear_solve(const Matrix<T>& a, std::span<const T> b, double pivot_tolerance) {
    require_square(a, "linear_solve");
    if (b.size() != a.rows()) throw Error(ErrorKind::Dimension, "right-hand side length mismatch");
    const Matrix<T> x = eliminate(a, Matrix<T>::column(b), pivot_tolerance);
    std::vector<T> out(b.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        require_finite(x(i, 0));
        out[i] = x(i, 0);
    }
    return out;
}

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& a, double pivot_tolerance) {
    require_square(a, "inverse");
    return eliminate(a, Matrix<T>::identity(a.rows()), pivot_tolerance);
}

Matrix<double> to_float(const Matrix<Rational>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_double();
    return out;
}

template std::vector<Rational> linear_solve(const Matrix<Rational>&, std::span<const Rational>, double);
template std::vector<double> linear_solve(const Matrix<double>&, std::span<const double>, double);
template Matrix<Rational> inverse(const Matrix<Rational>&, double);
template Matrix<double> inverse(const Matrix<double>&, double);

}  // namespace dgeo
