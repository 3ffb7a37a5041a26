#include "dgeo/embedding.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace dgeo {

namespace {

double max_pairwise_d2(const std::vector<Point<double>>& points) {
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < points[i].size(); ++c) {
                const double delta = points[i][c] - points[j][c];
                s += delta * delta;
            }
            best = std::max(best, s);
        }
    return best;
}

double squared_distance(const Point<double>& a, const Point<double>& b) {
    double s = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
    return s;
}

// Rotates rows of `coords` (points 1.. relative to the origin) so the result is
// lower triangular with a nonnegative leading entry in each column.
Eigen::MatrixXd normalize_orientation(const Eigen::MatrixXd& coords) {
    const Eigen::MatrixXd at = coords.transpose();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(at);
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index row = 0; row < r.rows(); ++row) {
        for (Eigen::Index col = row; col < r.cols(); ++col) {
            if (r(row, col) == 0.0) continue;
            if (r(row, col) < 0.0) r.row(row) *= -1.0;
            break;
        }
    }
    return r.transpose();
}

}  // namespace

EmbeddedPoints realize_points(const SquaredDistanceMatrix<double>& d, std::size_t dim, double tol) {
    if (dim < 1) throw Error(ErrorKind::InvalidArgument, "target dimension must be at least 1");
    if (tol < 0.0) throw Error(ErrorKind::InvalidArgument, "tolerance must be nonnegative");
    const std::size_t m = d.point_count();
    const double scale = d.max_entry();

    EmbeddedPoints out{std::vector<Point<double>>(m, Point<double>(dim, 0.0)), dim};
    if (scale == 0.0) return out;

    const auto k = static_cast<Eigen::Index>(m - 1);
    Eigen::MatrixXd gram(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            gram(i, j) = 0.5 * (d(0, i + 1) + d(0, j + 1) - d(i + 1, j + 1));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    if (eig.info() != Eigen::Success) throw Error(ErrorKind::Internal, "eigendecomposition failed");
    const Eigen::VectorXd& values = eig.eigenvalues();  // ascending
    const double threshold = tol * scale;

    std::size_t positive = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
        if (values(i) < -threshold)
            throw Error(ErrorKind::NonEuclidean,
                        "distances are not Euclidean (Gram eigenvalue " + to_string(values(i)) + ")");
        if (values(i) > threshold) ++positive;
    }
    if (positive > dim)
        throw Error(ErrorKind::RankExceedsDim, "configuration needs " + std::to_string(positive) +
                                                   " dimensions, target is " + std::to_string(dim));

    const auto used = static_cast<Eigen::Index>(std::min<std::size_t>(dim, m - 1));
    Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(k, static_cast<Eigen::Index>(dim));
    for (Eigen::Index c = 0; c < used; ++c) {
        const Eigen::Index src = k - 1 - c;
        coords.col(c) = eig.eigenvectors().col(src) * std::sqrt(std::max(values(src), 0.0));
    }
    const Eigen::MatrixXd normalized = normalize_orientation(coords);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index c = 0; c < normalized.cols(); ++c)
            out.points[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)] = normalized(i, c);
    return out;
}

std::vector<Point<double>> trilaterate(const EmbeddedPoints& existing, std::span<const double> d2_new,
                                       double tol) {
    const auto& pts = existing.points;
    const std::size_t count = pts.size();
    const std::size_t dim = existing.dim;
    if (count == 0) throw Error(ErrorKind::InvalidArgument, "no existing points");
    if (d2_new.size() != count) throw Error(ErrorKind::Dimension, "one squared distance per existing point");
    for (const auto& p : pts)
        if (p.size() != dim) throw Error(ErrorKind::Dimension, "existing point of wrong dimension");
    for (double v : d2_new) {
        require_finite(v);
        if (v < 0.0) throw Error(ErrorKind::Validation, "negative squared distance");
    }

    double scale = max_pairwise_d2(pts);
    for (double v : d2_new) scale = std::max(scale, v);
    if (scale == 0.0) return {pts.front()};

    const Eigen::Map<const Eigen::VectorXd> origin(pts.front().data(), static_cast<Eigen::Index>(dim));
    const auto rows = static_cast<Eigen::Index>(count - 1);
    Eigen::VectorXd offset = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
    Eigen::Index rank = 0;
    Eigen::MatrixXd basis;
    if (rows > 0) {
        // Differenced sphere equations: 2 (p_i - p_0) . (x - p_0) = d_0 - d_i + |p_i - p_0|^2.
        Eigen::MatrixXd a(rows, static_cast<Eigen::Index>(dim));
        Eigen::VectorXd rhs(rows);
        for (Eigen::Index i = 0; i < rows; ++i) {
            const Eigen::Map<const Eigen::VectorXd> p(pts[static_cast<std::size_t>(i + 1)].data(),
                                                      static_cast<Eigen::Index>(dim));
            a.row(i) = (p - origin).transpose();
            rhs(i) = 0.5 * (d2_new[0] - d2_new[static_cast<std::size_t>(i + 1)] + (p - origin).squaredNorm());
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
        svd.setThreshold(1e-9);
        rank = svd.rank();
        offset = svd.solve(rhs);
        basis = svd.matrixV();
    } else {
        basis = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    }

    const double threshold = tol * scale;
    const double h2 = d2_new[0] - offset.squaredNorm();
    if (h2 < -threshold) throw Error(ErrorKind::NoSolution, "distances are inconsistent (no real intersection)");

    const Eigen::VectorXd base = origin + offset;
    std::vector<Point<double>> candidates;
    auto to_point = [](const Eigen::VectorXd& v) { return Point<double>(v.data(), v.data() + v.size()); };

    if (h2 <= threshold) {
        candidates.push_back(to_point(base));
    } else {
        const Eigen::Index free = static_cast<Eigen::Index>(dim) - rank;
        if (free == 0) throw Error(ErrorKind::NoSolution, "distances are inconsistent with the existing points");
        if (free > 1) throw Error(ErrorKind::Ambiguous, "position is undetermined beyond a reflection");
        const Eigen::VectorXd normal = basis.col(rank);
        const double h = std::sqrt(h2);
        Point<double> plus = to_point(base + h * normal);
        Point<double> minus = to_point(base - h * normal);
        const bool plus_first = std::lexicographical_compare(minus.rbegin(), minus.rend(), plus.rbegin(), plus.rend());
        if (plus_first) {
            candidates = {std::move(plus), std::move(minus)};
        } else {
            candidates = {std::move(minus), std::move(plus)};
        }
    }

    const double verify = std::max(tol, kDefaultEmbeddingTolerance) * scale;
    for (const auto& c : candidates) {
        for (std::size_t i = 0; i < count; ++i) {
            if (std::fabs(squared_distance(c, pts[i]) - d2_new[i]) > verify)
                throw Error(ErrorKind::NoSolution, "distances are inconsistent with the existing points");
        }
    }
    return candidates;
}

Point<double> append_point(const EmbeddedPoints& existing, std::span<const double> d2_new, double tol) {
    return trilaterate(existing, d2_new, tol).front();
}

}  // namespace dgeo
