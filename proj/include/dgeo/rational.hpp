#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace dgeo {

/// Arbitrary-precision rational number, always kept in canonical form
/// (reduced, positive denominator).
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : q_(static_cast<long>(value)) {}

    template <std::unsigned_integral I>
    Rational(I value) : q_(static_cast<unsigned long>(value)) {}

    /// Throws Error(Validation) when den == 0.
    Rational(long num, long den);

    /// Accepts "7", "-3/4", "0.5", "1.25e-3". Throws Error(Parse).
    static Rational parse(std::string_view text);

    /// Exact binary value of a finite double. Throws Error(NonFinite).
    static Rational from_double(double value);

    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }
    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    double to_double() const { return q_.get_d(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Square root when this is the square of a rational, nullopt otherwise.
    std::optional<Rational> exact_sqrt() const;

    Rational abs() const;
    Rational reciprocal() const;
    Rational pow(unsigned exponent) const;

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

}  // namespace dgeo
