#include "dgeo/proof_witness.hpp"

#include <algorithm>
#include <sstream>

namespace dgeo {

namespace {

Matrix<Rational> scalar_matrix(const Rational& v) { return Matrix<Rational>(1, 1, v); }

Rational sign_power(std::size_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

Matrix<Rational> ones_outer(std::size_t size) { return Matrix<Rational>(size, size, Rational(1)); }

}  // namespace

void ProofReport::add(std::string name, std::size_t n, Matrix<Rational> lhs, Matrix<Rational> rhs) {
    const bool ok = lhs == rhs;
    entries_.push_back({std::move(name), n, ok, std::move(lhs), std::move(rhs)});
}

void ProofReport::add(std::string name, std::size_t n, const Rational& lhs, const Rational& rhs) {
    add(std::move(name), n, scalar_matrix(lhs), scalar_matrix(rhs));
}

void ProofReport::append(const ProofReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::size_t ProofReport::failures() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const ProofEntry& e) { return !e.passed; }));
}

std::string ProofReport::to_text() const {
    std::ostringstream out;
    for (const auto& e : entries_) {
        out << (e.passed ? "PASS " : "FAIL ") << e.name << " n=" << e.n << " lhs=" << format_matrix(e.lhs)
            << " rhs=" << format_matrix(e.rhs) << '\n';
    }
    return out.str();
}

std::string format_matrix(const Matrix<Rational>& m) {
    if (m.rows() == 1 && m.cols() == 1) return m(0, 0).str();
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r ? ",[" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += m(r, c).str();
        }
        out += ']';
    }
    return out + "]";
}

Matrix<Rational> build_U(std::span<const Point<Rational>> points) {
    const std::size_t m = points.size();
    if (m < 2) throw Error(ErrorKind::Dimension, "need at least two points");
    Matrix<Rational> u(m + 1, m + 1);
    u(0, 0) = Rational(1);
    for (std::size_t j = 0; j < m; ++j) {
        if (points[j].size() != m - 1)
            throw Error(ErrorKind::Dimension, "U needs m points of dimension m - 1");
        Rational norm2(0);
        for (const auto& x : points[j]) norm2 += x * x;
        u(0, j + 1) = norm2;
        u(1, j + 1) = Rational(1);
        for (std::size_t c = 0; c + 1 < m; ++c) u(c + 2, j + 1) = points[j][c];
    }
    return u;
}

Matrix<Rational> build_W(std::size_t m) {
    if (m < 2) throw Error(ErrorKind::Dimension, "W needs m >= 2");
    Matrix<Rational> w(m + 1, m + 1);
    w(0, 1) = Rational(1);
    w(1, 0) = Rational(1);
    for (std::size_t i = 2; i <= m; ++i) w(i, i) = Rational(-2);
    return w;
}

Matrix<Rational> build_P(const SignedRadii<Rational>& r) {
    auto p = Matrix<Rational>::identity(r.size() + 1);
    for (std::size_t i = 0; i < r.size(); ++i) p(0, i + 1) = -(r[i] * r[i]);
    return p;
}

Matrix<Rational> build_Q(const SignedRadii<Rational>& r) {
    auto q = Matrix<Rational>::identity(r.size() + 1);
    for (std::size_t i = 0; i < r.size(); ++i) q(i + 1, i + 1) = r[i].reciprocal();
    return q;
}

Matrix<Rational> build_S(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "S needs n >= 1");
    const std::size_t size = n + 2;
    return Rational(2) * ones_outer(size) - Rational(4) * Matrix<Rational>::identity(size);
}

Matrix<Rational> closed_form_S_inverse(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "S needs n >= 1");
    const std::size_t size = n + 2;
    return Rational(1, static_cast<long>(4 * n)) * ones_outer(size) -
           Rational(1, 4) * Matrix<Rational>::identity(size);
}

Rational block_determinant(const Matrix<Rational>& a, std::size_t split) {
    if (!a.square() || split == 0 || split >= a.rows())
        throw Error(ErrorKind::Dimension, "block split must leave two nonempty diagonal blocks");
    const std::size_t tail = a.rows() - split;
    Matrix<Rational> a11(split, split), a12(split, tail), a21(tail, split), a22(tail, tail);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r < split && c < split) a11(r, c) = a(r, c);
            else if (r < split) a12(r, c - split) = a(r, c);
            else if (c < split) a21(r - split, c) = a(r, c);
            else a22(r - split, c - split) = a(r, c);
        }
    return determinant(a22) * determinant(a11 - a12 * inverse(a22) * a21);
}

ProofReport check_UWU_congruence(std::span<const Point<Rational>> points) {
    const std::size_t m = points.size();
    const Matrix<Rational> u = build_U(points);
    const Matrix<Rational> w = build_W(m);
    const Matrix<Rational> d = build_cm_matrix(SquaredDistanceMatrix<Rational>::from_points(points));
    const std::size_t n = m >= 2 ? m - 2 : 0;

    const Rational det_u = determinant(u);
    const Rational det_d = determinant(d);
    const Rational fact = factorial<Rational>(static_cast<unsigned>(m - 1));
    const Rational v2 = volume_squared_from_coordinates(points).value;

    ProofReport report;
    report.add("UtWU=D", n, u.transposed() * w * u, d);
    report.add("det(W)=-(-2)^(m-1)", n, determinant(w), -integer_power(Rational(-2), static_cast<unsigned>(m - 1)));
    report.add("det(D)=det(U)^2*det(W)", n, det_d, det_u * det_u * determinant(w));
    report.add("det(U)^2=((m-1)!)^2*v^2", n, det_u * det_u, fact * fact * v2);
    report.add("det(D)=(-1)^n*2^(n+1)*((n+1)!*v)^2", n, det_d,
               sign_power(n) * integer_power(Rational(2), static_cast<unsigned>(n + 1)) * fact * fact * v2);
    return report;
}

ProofReport check_S_properties(std::size_t n) {
    const Matrix<Rational> s = build_S(n);
    const Matrix<Rational> s_inv = closed_form_S_inverse(n);
    const auto size = n + 2;
    const Rational det_s = determinant(s);

    ProofReport report;
    report.add("det(S)=(-1)^(n+1)*2^(2n+3)*n", n, det_s,
               sign_power(n + 1) * integer_power(Rational(2), static_cast<unsigned>(2 * n + 3)) * Rational(n));
    report.add("S*Sinv=I", n, s * s_inv, Matrix<Rational>::identity(size));
    report.add("inverse(S)=Sinv", n, inverse(s), s_inv);
    if (n == 2) {
        report.add("S^2=16I", n, s * s, Rational(16) * Matrix<Rational>::identity(size));
        report.add("det(S)=-256", n, det_s, Rational(-256));
        report.add("Sinv=S/16", n, s_inv, Rational(1, 16) * s);
    }
    return report;
}

ProofReport check_reduction_chain(const SignedRadii<Rational>& r) {
    const std::size_t n = r.dimension();
    const std::size_t m = r.size();
    const auto d2 = tangency_squared_distances(r);
    const Matrix<Rational> d = build_cm_matrix(d2);
    const Matrix<Rational> p = build_P(r);
    const Matrix<Rational> q = build_Q(r);
    const Matrix<Rational> s = build_S(n);
    const Matrix<Rational> s_inv = closed_form_S_inverse(n);

    ProofReport report;

    // (a) the r_i^2 terms are cleared from every row and column.
    const Matrix<Rational> ptdp = p.transposed() * d * p;
    Matrix<Rational> expected_ptdp(m + 1, m + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        expected_ptdp(0, i) = expected_ptdp(i, 0) = Rational(1);
        for (std::size_t j = 1; j <= m; ++j) {
            const Rational rr = r[i - 1] * r[j - 1];
            expected_ptdp(i, j) = i == j ? Rational(-2) * rr : Rational(2) * rr;
        }
    }
    report.add("PtDP", n, ptdp, expected_ptdp);

    // (b) pulling out 1/r_i leaves [[0, R^T], [R, S]].
    const Matrix<Rational> reduced = q.transposed() * ptdp * q;
    Matrix<Rational> block(m + 1, m + 1);
    Matrix<Rational> rvec(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        rvec(i, 0) = r[i].reciprocal();
        block(0, i + 1) = block(i + 1, 0) = rvec(i, 0);
        for (std::size_t j = 0; j < m; ++j) block(i + 1, j + 1) = s(i, j);
    }
    report.add("QtPtDPQ=[[0,Rt],[R,S]]", n, reduced, block);

    // (c) block rule with the 1x1 zero corner.
    const Rational det_s = determinant(s);
    const Rational rt_sinv_r = (rvec.transposed() * s_inv * rvec)(0, 0);
    const Rational block_value = -det_s * rt_sinv_r;
    const Rational det_reduced = determinant(reduced);
    report.add("det(QtPtDPQ)=-det(S)*Rt*Sinv*R", n, det_reduced, block_value);
    report.add("block_rule(QtPtDPQ)", n, block_determinant(reduced, 1), det_reduced);

    // (d) the quadratic form collapses to the residual.
    const Rational residual = descartes_residual(curvatures_from_radii(r));
    report.add("-det(S)*Rt*Sinv*R=(-1)^n*2^(2n+1)*residual", n, block_value,
               sign_power(n) * integer_power(Rational(2), static_cast<unsigned>(2 * n + 1)) * residual);
    if (n == 2) {
        report.add("-det(S)*Rt*Sinv*R=16*Rt*S*R", n, block_value,
                   Rational(16) * (rvec.transposed() * s * rvec)(0, 0));
    }

    // (e) undoing the congruence.
    const Rational det_d = determinant(d);
    const Rational prod = r.product();
    report.add("det(QtPtDPQ)=det(P)^2*det(Q)^2*det(D)", n, det_reduced,
               determinant(p) * determinant(p) * determinant(q) * determinant(q) * det_d);
    report.add("det(D)=(prod r)^2*block_value", n, det_d, prod * prod * block_value);
    report.add("volume_squared=factored_volume_squared", n, volume_squared(d2).value,
               factored_volume_squared(r).value);
    return report;
}

namespace {

Rational random_fraction(std::mt19937_64& rng, long max_abs_num, bool allow_zero) {
    std::uniform_int_distribution<long> num_dist(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den_dist(1, 10);
    long num = 0;
    do {
        num = num_dist(rng);
    } while (!allow_zero && num == 0);
    return Rational(num, den_dist(rng));
}

}  // namespace

SignedRadii<Rational> random_radii(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> r;
    r.reserve(n + 2);
    for (std::size_t i = 0; i < n + 2; ++i) r.push_back(random_fraction(rng, 10, false).abs());
    std::uniform_int_distribution<std::size_t> pick(0, 2 * (n + 2) - 1);
    if (const std::size_t idx = pick(rng); idx < n + 2) r[idx] = -r[idx];
    return validate_radii(std::move(r), n, true);
}

std::vector<Point<Rational>> random_points(std::mt19937_64& rng, std::size_t m, std::size_t dim) {
    std::vector<Point<Rational>> points(m, Point<Rational>(dim));
    for (auto& p : points)
        for (auto& x : p) x = random_fraction(rng, 10, true);
    return points;
}

ProofReport verify_random(std::size_t count, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension n must be at least 1");
    std::mt19937_64 rng(seed);
    ProofReport report = check_S_properties(n);
    for (std::size_t i = 0; i < count; ++i) report.append(check_reduction_chain(random_radii(rng, n)));
    for (std::size_t i = 0; i < count; ++i) {
        const auto points = random_points(rng, n + 2, n + 1);
        report.append(check_UWU_congruence(points));
    }
    return report;
}

}  // namespace dgeo
