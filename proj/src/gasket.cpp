#include "dgeo/gasket.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>

#include "dgeo/embedding.hpp"
#include "dgeo/tangency.hpp"

namespace dgeo {

namespace {

double squared_gap(const Circle& a, const Circle& b) {
    const double dx = a.center[0] - b.center[0];
    const double dy = a.center[1] - b.center[1];
    return dx * dx + dy * dy;
}

Circle make_circle(const Point<double>& center, double curvature, std::size_t depth,
                   std::vector<std::size_t> parents) {
    return {{center[0], center[1]}, 1.0 / curvature, curvature, depth, std::move(parents)};
}

// Candidates at tangency distance from the given circles.
std::vector<Point<double>> tangent_positions(const std::vector<const Circle*>& neighbours, double curvature) {
    EmbeddedPoints existing{{}, 2};
    std::vector<double> d2;
    const double radius = 1.0 / curvature;
    for (const Circle* c : neighbours) {
        existing.points.push_back({c->center[0], c->center[1]});
        d2.push_back((radius + c->radius) * (radius + c->radius));
    }
    try {
        return trilaterate(existing, d2);
    } catch (const Error& e) {
        throw Error(ErrorKind::Geometry, std::string("cannot place tangent circle: ") + e.what());
    }
}

void validate_seed(const std::array<double, 3>& seed) {
    int negatives = 0;
    for (double k : seed) {
        if (!std::isfinite(k)) throw Error(ErrorKind::Seed, "seed curvatures must be finite");
        if (k == 0.0) throw Error(ErrorKind::Seed, "zero curvature (straight line) is not supported");
        if (k < 0.0) ++negatives;
    }
    if (negatives > 1) throw Error(ErrorKind::Seed, "at most one seed circle may enclose the others");
}

class Expander {
public:
    explicit Expander(Gasket& g) : g_(g) {
        for (std::size_t i = 0; i < g_.circles.size(); ++i) {
            index_.emplace(g_.circles[i].curvature, i);
            max_radius_ = std::max(max_radius_, std::fabs(g_.circles[i].radius));
        }
    }

    // Replaces `replaced` in the tangent quadruple (replaced, a, b, c) by its
    // Vieta partner. Returns the new index, or nullopt for a duplicate.
    std::optional<std::size_t> reflect(std::size_t replaced, const std::array<std::size_t, 3>& triple,
                                       std::size_t depth) {
        const Circle& old = g_.circles[replaced];
        const Curvatures<double> k({old.curvature, g_.circles[triple[0]].curvature,
                                    g_.circles[triple[1]].curvature, g_.circles[triple[2]].curvature},
                                   2);
        const double partner = vieta_partner(k, 0);
        if (partner == 0.0) throw Error(ErrorKind::Seed, "packing contains a straight line");

        const auto positions = tangent_positions(
            {&g_.circles[triple[0]], &g_.circles[triple[1]], &g_.circles[triple[2]]}, partner);
        // With a free reflection the replaced circle occupies one candidate.
        const Point<double>* best = &positions.front();
        if (positions.size() == 2) {
            const auto gap = [&](const Point<double>& p) {
                return std::hypot(p[0] - old.center[0], p[1] - old.center[1]);
            };
            if (gap(positions[1]) > gap(positions[0])) best = &positions[1];
        }
        Circle circle = make_circle(*best, partner, depth, {triple[0], triple[1], triple[2]});
        if (is_duplicate(circle)) return std::nullopt;
        const std::size_t idx = g_.circles.size();
        index_.emplace(partner, idx);
        max_radius_ = std::max(max_radius_, std::fabs(circle.radius));
        g_.circles.push_back(std::move(circle));
        return idx;
    }

private:
    bool is_duplicate(const Circle& c) const {
        const double ktol = 1e-9 * std::fabs(c.curvature);
        const double ctol = 1e-9 * max_radius_;
        for (auto it = index_.lower_bound(c.curvature - ktol);
             it != index_.end() && it->first <= c.curvature + ktol; ++it) {
            if (std::sqrt(squared_gap(g_.circles[it->second], c)) <= ctol) return true;
        }
        return false;
    }

    Gasket& g_;
    std::multimap<double, std::size_t> index_;
    double max_radius_ = 0.0;
};

void canonicalize(Gasket& g) {
    std::vector<std::size_t> order(g.circles.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Circle& x = g.circles[a];
        const Circle& y = g.circles[b];
        if (x.depth != y.depth) return x.depth < y.depth;
        if (x.curvature != y.curvature) return x.curvature < y.curvature;
        return x.center < y.center;
    });
    std::vector<std::size_t> new_index(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = i;
    std::vector<Circle> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order) {
        Circle c = std::move(g.circles[i]);
        for (auto& p : c.parents) p = new_index[p];
        sorted.push_back(std::move(c));
    }
    g.circles = std::move(sorted);
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s.erase(0, 1);
    return s;
}

}  // namespace

Gasket initial_configuration(const std::array<double, 3>& seed) {
    validate_seed(seed);
    Gasket g{{}, seed, 0};
    g.circles.push_back(make_circle({0.0, 0.0}, seed[0], 0, {}));
    const double r0 = 1.0 / seed[0];
    const double r1 = 1.0 / seed[1];
    g.circles.push_back(make_circle({std::fabs(r0 + r1), 0.0}, seed[1], 0, {}));
    g.circles.push_back(make_circle(tangent_positions({&g.circles[0], &g.circles[1]}, seed[2]).front(),
                                    seed[2], 0, {}));

    double fourth = 0.0;
    try {
        fourth = solve_missing_curvature<double>(seed, 2).larger;
    } catch (const Error& e) {
        throw Error(ErrorKind::Seed, std::string("seed has no fourth tangent circle: ") + e.what());
    }
    if (fourth == 0.0) throw Error(ErrorKind::Seed, "fourth tangent circle is a straight line");
    const auto positions = tangent_positions({&g.circles[0], &g.circles[1], &g.circles[2]}, fourth);
    g.circles.push_back(make_circle(positions.front(), fourth, 0, {0, 1, 2}));

    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const double expected = (g.circles[i].radius + g.circles[j].radius) *
                                    (g.circles[i].radius + g.circles[j].radius);
            if (std::fabs(squared_gap(g.circles[i], g.circles[j]) - expected) > 1e-9 * std::max(1.0, expected))
                throw Error(ErrorKind::Geometry, "seed circles are not mutually tangent");
        }
    canonicalize(g);
    return g;
}

Gasket generate(const std::array<double, 3>& seed, std::size_t max_depth) {
    if (max_depth > kMaxGasketDepth)
        throw Error(ErrorKind::DepthExceeded,
                    "depth " + std::to_string(max_depth) + " exceeds the limit of " + std::to_string(kMaxGasketDepth));
    Gasket g = initial_configuration(seed);
    g.max_depth = max_depth;
    if (max_depth == 0) return g;

    struct Task {
        std::size_t circle;
        std::array<std::size_t, 3> tangent;
    };
    Expander expander(g);
    std::vector<Task> frontier;

    // Depth 1: each circle of the root quadruple is replaced once.
    for (std::size_t i = 0; i < 4; ++i) {
        std::array<std::size_t, 3> rest{};
        std::size_t t = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) rest[t++] = j;
        if (const auto idx = expander.reflect(i, rest, 1)) frontier.push_back({*idx, rest});
    }

    for (std::size_t depth = 2; depth <= max_depth; ++depth) {
        std::vector<Task> next;
        next.reserve(frontier.size() * 3);
        for (const Task& task : frontier) {
            for (std::size_t o = 0; o < 3; ++o) {
                const std::array<std::size_t, 3> triple{task.circle, task.tangent[(o + 1) % 3],
                                                        task.tangent[(o + 2) % 3]};
                if (const auto idx = expander.reflect(task.tangent[o], triple, depth))
                    next.push_back({*idx, triple});
            }
        }
        frontier = std::move(next);
    }
    canonicalize(g);
    return g;
}

std::string render_svg(const Gasket& g, const SvgOptions& options) {
    if (g.circles.empty()) throw Error(ErrorKind::Validation, "cannot render an empty gasket");
    if (options.width <= 0) throw Error(ErrorKind::Validation, "SVG width must be positive");
    if (options.palette.empty()) throw Error(ErrorKind::Validation, "palette must not be empty");

    // Work in flipped y so larger y is drawn higher.
    double min_x = 0, min_y = 0, span_x = 0, span_y = 0;
    const auto enclosing = std::find_if(g.circles.begin(), g.circles.end(),
                                        [](const Circle& c) { return c.radius < 0.0; });
    if (enclosing != g.circles.end()) {
        const double half = std::fabs(enclosing->radius) * 1.02;
        min_x = enclosing->center[0] - half;
        min_y = -enclosing->center[1] - half;
        span_x = span_y = 2.0 * half;
    } else {
        double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
        for (const Circle& c : g.circles) {
            const double r = std::fabs(c.radius);
            lo_x = std::min(lo_x, c.center[0] - r);
            hi_x = std::max(hi_x, c.center[0] + r);
            lo_y = std::min(lo_y, -c.center[1] - r);
            hi_y = std::max(hi_y, -c.center[1] + r);
        }
        const double margin = 0.02 * std::max(hi_x - lo_x, hi_y - lo_y);
        min_x = lo_x - margin;
        min_y = lo_y - margin;
        span_x = hi_x - lo_x + 2.0 * margin;
        span_y = hi_y - lo_y + 2.0 * margin;
    }
    const long height = std::lround(options.width * span_y / span_x);
    const std::string stroke_width = fixed6(options.stroke_width * span_x / options.width);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(options.width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"" + fixed6(min_x) + " " + fixed6(min_y) + " " +
           fixed6(span_x) + " " + fixed6(span_y) + "\">\n";
    for (const Circle& c : g.circles) {
        const std::string fill =
            c.radius < 0.0 ? "none" : options.palette[c.depth % options.palette.size()];
        out += "<circle cx=\"" + fixed6(c.center[0]) + "\" cy=\"" + fixed6(-c.center[1]) + "\" r=\"" +
               fixed6(std::fabs(c.radius)) + "\" fill=\"" + fill + "\" stroke=\"" + options.stroke +
               "\" stroke-width=\"" + stroke_width + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace dgeo
