// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Tolerances are fixed here, not configurable.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "dgeo/embedding.hpp"
#include "dgeo/gasket.hpp"
#include "dgeo/proof_witness.hpp"
#include "oracles.hpp"

using namespace dgeo;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational sign_power(std::size_t n) { return n % 2 ? Rational(-1) : Rational(1); }

// 1. Central identity and factored volume on 1000 random radii.
Outcome central_identity_suite() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
        const auto r = random_radii(rng, n);
        const auto d = tangency_squared_distances(r);
        const Rational prod = r.product();
        const Rational rhs = sign_power(n) * Rational(2).pow(static_cast<unsigned>(2 * n + 1)) * prod * prod *
                             descartes_residual(curvatures_from_radii(r));
        out.require(cm_determinant(d) == rhs, "identity mismatch at sample " + std::to_string(i));
        out.require(factored_volume_squared(r).value == volume_squared(d).value,
                    "factored volume mismatch at sample " + std::to_string(i));
    }
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
    if (out.ok) out.detail = "1000 samples, n=1..6, " + std::to_string(elapsed) + " s";
    return out;
}

// 2. Radii (1,1,1,1): 256 and 8/9, cross-checked from coordinates.
Outcome tetrahedral_constant() {
    Outcome out;
    const SignedRadii<Rational> r({1, 1, 1, 1}, 2);
    const auto d = tangency_squared_distances(r);
    out.require(cm_determinant(d) == Rational(256), "cm_determinant != 256");
    const auto v = volume_squared(d);
    out.require(v.value == Rational(8, 9) && v.dim == 3, "volume_squared != 8/9");

    const auto tet = oracle::regular_tetrahedron(2.0);
    const double vf = volume_squared_from_coordinates<double>(tet).value;
    out.require(std::fabs(vf - 8.0 / 9.0) <= 1e-12 * (8.0 / 9.0), "float coordinates differ beyond 1e-12");

    // Side-2 tetrahedra have no rational coordinates; the cube-corner one has
    // side sqrt(2), and scaling lengths by sqrt(2) multiplies v^2 by 8.
    const std::vector<Point<Rational>> corner{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    const Rational vc = volume_squared_from_coordinates<Rational>(corner).value;
    out.require(vc * Rational(8) == v.value, "rational-coordinate oracle mismatch");
    if (out.ok) out.detail = "256, 8/9; float rel err " + to_string(std::fabs(vf - 8.0 / 9.0) / (8.0 / 9.0));
    return out;
}

// 3. Heron against the shoelace formula on random rational triangles.
Outcome heron_equivalence() {
    Outcome out;
    std::mt19937_64 rng(3003);
    for (int i = 0; i < 500; ++i) {
        std::vector<Point<Rational>> p(3, Point<Rational>(2));
        for (auto& q : p)
            for (auto& x : q) x = oracle::random_rational(rng, 10);
        const auto d = SquaredDistanceMatrix<Rational>::from_points(p);
        const Rational h = heron_area_squared_from_squares(d(1, 2), d(0, 2), d(0, 1));
        out.require(h == oracle::shoelace_area_squared(p[0], p[1], p[2]), "mismatch at sample " + std::to_string(i));
    }
    out.require(heron_area_squared<Rational>(3, 4, 5) == Rational(36), "(3,4,5) != 36");
    if (out.ok) out.detail = "500 triangles, (3,4,5) -> 36";
    return out;
}

// 4. Every proof-witness report passes.
Outcome proof_witness() {
    Outcome out;
    std::mt19937_64 rng(4004);
    std::size_t entries = 0;
    auto take = [&](const ProofReport& report, const std::string& what) {
        entries += report.entries().size();
        for (const auto& e : report.entries())
            out.require(e.passed && e.lhs == e.rhs, what + ": " + e.name);
    };
    for (std::size_t dim = 2; dim <= 4; ++dim)
        for (int i = 0; i < 100; ++i) take(check_UWU_congruence(random_points(rng, dim + 1, dim)), "UWU");
    bool saw_256 = false, saw_16i = false;
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto report = check_S_properties(n);
        take(report, "S n=" + std::to_string(n));
        for (const auto& e : report.entries()) {
            saw_256 = saw_256 || (e.name == "det(S)=-256" && e.passed);
            saw_16i = saw_16i || (e.name == "S^2=16I" && e.passed);
        }
    }
    out.require(saw_256 && saw_16i, "n=2 specials missing");
    for (std::size_t n = 1; n <= 6; ++n)
        for (int i = 0; i < 200; ++i) take(check_reduction_chain(random_radii(rng, n)), "chain n=" + std::to_string(n));
    if (out.ok) out.detail = std::to_string(entries) + " exact identities";
    return out;
}

// 5. Curvature solving.
Outcome descartes_solving() {
    Outcome out;
    const std::vector<Rational> double_root{-1, 2, 2};
    const auto e = solve_missing_curvature<Rational>(double_root, 2);
    out.require(e.larger == Rational(3) && e.smaller == Rational(3), "(-1,2,2) roots are not 3,3");

    auto check_float = [&](std::vector<double> known, std::size_t n, double hi, double lo) {
        const auto r = solve_missing_curvature<double>(known, n);
        out.require(std::fabs(r.larger - hi) <= 1e-12 && std::fabs(r.smaller - lo) <= 1e-12, "roots off");
        for (double root : {r.larger, r.smaller}) {
            auto all = known;
            all.push_back(root);
            out.require(std::fabs(descartes_residual(Curvatures<double>(all, n))) <= 1e-12, "residual above 1e-12");
        }
    };
    check_float({1, 1, 1}, 2, 3 + 2 * std::sqrt(3.0), 3 - 2 * std::sqrt(3.0));
    check_float({1, 1, 1, 1}, 3, 2 + std::sqrt(6.0), 2 - std::sqrt(6.0));
    if (out.ok) out.detail = "3 (double), 3+-2sqrt3, 2+-sqrt6";
    return out;
}

// 6. Solved quadruples are flat and realize in the plane.
Outcome flatness() {
    Outcome out;
    std::mt19937_64 rng(6006);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        // Seeds with a square discriminant: k3 = (t^2 - k1 k2)/(k1 + k2), t > (k1 + k2)/2.
        const auto k12 = oracle::random_positive(rng, 2);
        const Rational t = (k12[0] + k12[1]) / Rational(2) + oracle::random_positive(rng, 1)[0];
        const Rational k3 = (t * t - k12[0] * k12[1]) / (k12[0] + k12[1]);
        const std::vector<Rational> seed{k12[0], k12[1], k3};
        const auto roots = solve_missing_curvature<Rational>(seed, 2);
        const Curvatures<Rational> k({k12[0], k12[1], k3, roots.larger}, 2);
        const auto r = radii_from_curvatures(k);
        out.require(is_degenerate(tangency_squared_distances(r)), "not degenerate at sample " + std::to_string(i));

        std::vector<double> rf;
        for (const auto& v : r.values()) rf.push_back(v.to_double());
        const auto d = tangency_squared_distances(SignedRadii<double>(rf, 2));
        const auto e = realize_points(d, 2);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                const double dx = e.points[a][0] - e.points[b][0];
                const double dy = e.points[a][1] - e.points[b][1];
                worst = std::max(worst, std::fabs(dx * dx + dy * dy - d(a, b)) / d.max_entry());
            }
    }
    out.require(worst <= 1e-9, "round trip error " + to_string(worst));
    if (out.ok) out.detail = "100 quadruples, worst round trip " + to_string(worst);
    return out;
}

// 7. Depth-5 gasket audits and golden SVG.
Outcome gasket_suite() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const Gasket g = generate({-1, 2, 2}, 5);
    double kmax2 = 0.0;
    for (const auto& c : g.circles) kmax2 = std::max(kmax2, c.curvature * c.curvature);
    bool has3 = false, has6 = false, has15 = false;
    for (std::size_t i = 0; i < g.circles.size(); ++i) {
        const Circle& c = g.circles[i];
        out.require(std::fabs(c.curvature - std::round(c.curvature)) <= 1e-9, "non-integral curvature");
        has3 = has3 || c.curvature == 3.0;
        has6 = has6 || std::fabs(c.curvature - 6.0) <= 1e-9;
        has15 = has15 || std::fabs(c.curvature - 15.0) <= 1e-9;
        if (i > 0)
            out.require(std::hypot(c.center[0], c.center[1]) + c.radius <= 1.0 + 1e-9, "containment failed");
        if (c.parents.size() == 3) {
            std::vector<double> quad{c.curvature};
            for (std::size_t p : c.parents) quad.push_back(g.circles[p].curvature);
            out.require(std::fabs(descartes_residual(Curvatures<double>(quad, 2))) <= 1e-9 * kmax2,
                        "residual audit failed");
        }
    }
    out.require(has3 && has6 && has15, "missing curvature 3, 6 or 15");

    std::ifstream in(std::string(DGEO_TEST_DATA_DIR) + "/gasket_m1_2_2_depth3.svg", std::ios::binary);
    std::stringstream golden;
    golden << in.rdbuf();
    out.require(in.good() || !golden.str().empty(), "golden file missing");
    out.require(render_svg(generate({-1, 2, 2}, 3)) == golden.str(), "SVG differs from golden file");
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
    if (out.ok) out.detail = std::to_string(g.circles.size()) + " circles, " + std::to_string(elapsed) + " s";
    return out;
}

struct Run {
    int exit_code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string("'") + DGEO_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string text;
    std::array<char, 4096> buf{};
    while (const std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

bool only_rationals(const nlohmann::json& j) {
    if (j.is_number_float()) return false;
    if (j.is_structured())
        for (const auto& item : j) if (!only_rationals(item)) return false;
    return true;
}

// 8. CLI examples: exit codes, JSON shapes, and exact-mode encoding.
Outcome cli_suite() {
    Outcome out;
    using nlohmann::json;
    auto parse = [&](const Run& r, const std::string& what) {
        json j = json::parse(r.out, nullptr, false);
        out.require(!j.is_discarded(), what + ": output is not JSON");
        return j;
    };

    const Run residual = run_cli("residual --n 2 --curvatures -1,2,2,3");
    out.require(residual.exit_code == 0, "residual exit code " + std::to_string(residual.exit_code));
    const json rj = parse(residual, "residual");
    out.require(rj == json::parse(R"({"ok":true,"result":{"num":"0","den":"1"}})"), "residual JSON shape");

    const Run solve = run_cli("solve --n 2 --curvatures -1,2,2");
    out.require(solve.exit_code == 0, "solve exit code");
    const json sj = parse(solve, "solve");
    const json three = {{"num", "3"}, {"den", "1"}};
    out.require(sj.value("ok", false) && sj["result"]["roots"] == json::array({three, three}), "solve roots");

    const Run proof = run_cli("verify-proof --random 50 --dim 3");
    out.require(proof.exit_code == 0, "verify-proof exit code");
    const json pj = parse(proof, "verify-proof");
    out.require(pj.value("ok", false) && pj["result"]["passed"] == true && pj["result"]["failures"] == 0,
                "verify-proof report");

    for (const json* j : {&rj, &sj, &pj}) out.require(only_rationals(*j), "exact output contains a float");

    const Run needs_float = run_cli("solve --n 2 --curvatures 1,1,1");
    out.require(needs_float.exit_code == 2, "irrational exact solve should exit 2");
    const json nj = parse(needs_float, "needs-float");
    out.require(nj.value("ok", true) == false && nj["error"]["kind"] == "needs_float", "error JSON shape");
    out.require(run_cli("residual --n 2 --curvatures 1,2").exit_code == 1, "validation error should exit 1");

    if (out.ok) out.detail = "residual, solve, verify-proof; exit codes 0/1/2";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 central identity", central_identity_suite},
        {"2 tetrahedral constant", tetrahedral_constant},
        {"3 heron equivalence", heron_equivalence},
        {"4 proof witness", proof_witness},
        {"5 descartes solving", descartes_solving},
        {"6 flatness and zero residual", flatness},
        {"7 gasket", gasket_suite},
        {"8 cli", cli_suite},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        if (!o.ok) ++failed;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
