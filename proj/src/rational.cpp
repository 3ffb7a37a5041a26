#include "dgeo/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "dgeo/error.hpp"

namespace dgeo {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Signed integer literal: [+-]digits
std::optional<mpz_class> parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) return std::nullopt;
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

// [+-]digits[.digits][(e|E)[+-]digits], at least one digit in the mantissa.
std::optional<mpq_class> parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        const auto exp_part = parse_integer(s.substr(e + 1));
        if (!exp_part || !exp_part->fits_slong_p()) return std::nullopt;
        exponent = exp_part->get_si();
        if (exponent > 4096 || exponent < -4096) return std::nullopt;
        s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
    if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits, 10);
    mpz_class ten_frac;
    mpz_ui_pow_ui(ten_frac.get_mpz_t(), 10, frac_part.size());
    mpq_class q(mantissa, ten_frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) {
        q *= scale;
    } else {
        q /= scale;
    }
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::Validation, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto num = parse_integer(trim(s.substr(0, slash)));
        const auto den = parse_integer(trim(s.substr(slash + 1)));
        if (!num || !den) throw Error(ErrorKind::Parse, "malformed rational: '" + std::string(text) + "'");
        if (*den == 0) throw Error(ErrorKind::Validation, "zero denominator in '" + std::string(text) + "'");
        mpq_class q(*num, *den);
        q.canonicalize();
        return Rational(std::move(q));
    }
    if (const auto q = parse_decimal(s)) return Rational(*q);
    throw Error(ErrorKind::Parse, "malformed number: '" + std::string(text) + "'");
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw Error(ErrorKind::NonFinite, "non-finite value");
    return Rational(mpq_class(value));
}

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class& num = q_.get_num();
    const mpz_class& den = q_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const { return Rational(1) / *this; }

Rational Rational::pow(unsigned exponent) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::Singular, "division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

}  // namespace dgeo
