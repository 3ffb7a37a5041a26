#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace dgeo {

struct Circle {
    std::array<double, 2> center;
    double radius;  // negative for the enclosing circle
    double curvature;
    std::size_t depth;
    std::vector<std::size_t> parents;  // tangent triple that spawned it; empty for seeds
};

/// Circles in canonical order: depth, then curvature, then center.
struct Gasket {
    std::vector<Circle> circles;
    std::array<double, 3> seed;
    std::size_t max_depth;
};

inline constexpr std::size_t kMaxGasketDepth = 12;

/// Three seed circles plus the inner fourth one (larger curvature root).
/// Circle 0 sits at the origin, circle 1 on the positive x axis.
Gasket initial_configuration(const std::array<double, 3>& seed);

/// Breadth-first Apollonian expansion by Vieta reflection and trilateration.
Gasket generate(const std::array<double, 3>& seed, std::size_t max_depth);

struct SvgOptions {
    int width = 800;
    std::string stroke = "#1d3557";
    double stroke_width = 1.0;  // in output pixels
    std::vector<std::string> palette = {"#e63946", "#f4a261", "#e9c46a", "#2a9d8f", "#457b9d", "#8e7dbe"};
};

/// Deterministic SVG 1.1; y is flipped so the picture matches math axes.
std::string render_svg(const Gasket& g, const SvgOptions& options = {});

}  // namespace dgeo
