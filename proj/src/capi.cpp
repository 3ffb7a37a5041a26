#include "dgeo/dgeo.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <variant>

#include "dgeo/embedding.hpp"
#include "dgeo/gasket.hpp"
#include "dgeo/proof_witness.hpp"

using dgeo::Error;
using dgeo::ErrorKind;
using dgeo::Matrix;
using dgeo::Rational;

struct dg_array {
    std::variant<Matrix<Rational>, Matrix<double>> m;
};

struct dg_report {
    dgeo::ProofReport report;
};

struct dg_gasket {
    dgeo::Gasket gasket;
};

namespace {

thread_local std::string last_error;

template <class F>
dg_status guard(F&& body) noexcept {
    try {
        body();
        last_error.clear();
        return DG_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<dg_status>(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown failure";
    }
    return DG_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw Error(ErrorKind::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <dgeo::Scalar T>
const Matrix<T>& as(const dg_array* a, const char* what) {
    require(a, what);
    if (const auto* m = std::get_if<Matrix<T>>(&a->m)) return *m;
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + (dgeo::is_exact_v<T> ? " must be an exact array" : " must be a float array"));
}

template <dgeo::Scalar T>
dg_array* wrap(Matrix<T> m) {
    return new dg_array{std::move(m)};
}

template <dgeo::Scalar T>
dg_array* wrap_scalar(const T& v) {
    return wrap(Matrix<T>(1, 1, v));
}

template <dgeo::Scalar T>
dg_array* wrap_vector(const std::vector<T>& v) {
    return wrap(Matrix<T>::column(v));
}

template <dgeo::Scalar T>
std::vector<T> flatten(const Matrix<T>& m) {
    return {m.values().begin(), m.values().end()};
}

template <dgeo::Scalar T>
std::vector<dgeo::Point<T>> rows_of(const Matrix<T>& m) {
    std::vector<dgeo::Point<T>> pts;
    for (std::size_t r = 0; r < m.rows(); ++r) pts.emplace_back(m.row(r).begin(), m.row(r).end());
    return pts;
}

void check_index(const dg_array* a, size_t row, size_t col) {
    require(a, "array");
    const bool ok = std::visit([&](const auto& m) { return row < m.rows() && col < m.cols(); }, a->m);
    if (!ok) throw Error(ErrorKind::InvalidArgument, "array index out of range");
}

template <class F>
void visit_array(const dg_array* a, const char* what, F&& f) {
    require(a, what);
    std::visit(std::forward<F>(f), a->m);
}

dgeo::SvgOptions svg_options(const dg_svg_options* options) {
    dgeo::SvgOptions out;
    if (options != nullptr) {
        if (options->width > 0) out.width = options->width;
        if (options->stroke_width > 0.0) out.stroke_width = options->stroke_width;
        if (options->stroke != nullptr) out.stroke = options->stroke;
    }
    return out;
}

const dgeo::ProofEntry& entry(const dg_report* r, size_t i) {
    require(r, "report");
    if (i >= r->report.entries().size()) throw Error(ErrorKind::InvalidArgument, "report index out of range");
    return r->report.entries()[i];
}

}  // namespace

extern "C" {

const char* dg_status_kind(dg_status status) {
    if (status == DG_OK) return "ok";
    return dgeo::kind_name(static_cast<ErrorKind>(status)).data();
}

int dg_status_is_validation(dg_status status) {
    return status != DG_OK && dgeo::is_validation(static_cast<ErrorKind>(status)) ? 1 : 0;
}

const char* dg_last_error(void) { return last_error.c_str(); }

void dg_string_free(char* s) { std::free(s); }

dg_status dg_array_create(dg_mode mode, size_t rows, size_t cols, dg_array** out) {
    return guard([&] {
        require(out, "out");
        if (mode == DG_EXACT) {
            *out = wrap(Matrix<Rational>(rows, cols));
        } else if (mode == DG_FLOAT) {
            *out = wrap(Matrix<double>(rows, cols));
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown mode");
        }
    });
}

void dg_array_destroy(dg_array* a) { delete a; }

dg_mode dg_array_mode(const dg_array* a) {
    return a != nullptr && std::holds_alternative<Matrix<double>>(a->m) ? DG_FLOAT : DG_EXACT;
}

size_t dg_array_rows(const dg_array* a) {
    return a == nullptr ? 0 : std::visit([](const auto& m) { return m.rows(); }, a->m);
}

size_t dg_array_cols(const dg_array* a) {
    return a == nullptr ? 0 : std::visit([](const auto& m) { return m.cols(); }, a->m);
}

dg_status dg_array_set_str(dg_array* a, size_t row, size_t col, const char* text) {
    return guard([&] {
        check_index(a, row, col);
        require(text, "text");
        std::visit([&](auto& m) {
            using T = std::decay_t<decltype(m(0, 0))>;
            m(row, col) = dgeo::scalar_from_string<T>(text);
        }, a->m);
    });
}

dg_status dg_array_set_double(dg_array* a, size_t row, size_t col, double value) {
    return guard([&] {
        check_index(a, row, col);
        std::visit([&](auto& m) {
            using T = std::decay_t<decltype(m(0, 0))>;
            if constexpr (dgeo::is_exact_v<T>) {
                m(row, col) = Rational::from_double(value);
            } else {
                dgeo::require_finite(value);
                m(row, col) = value;
            }
        }, a->m);
    });
}

dg_status dg_array_get_double(const dg_array* a, size_t row, size_t col, double* out) {
    return guard([&] {
        check_index(a, row, col);
        require(out, "out");
        *out = std::visit([&](const auto& m) { return dgeo::to_double(m(row, col)); }, a->m);
    });
}

dg_status dg_array_get_rational(const dg_array* a, size_t row, size_t col, char** num, char** den) {
    return guard([&] {
        check_index(a, row, col);
        require(num, "num");
        require(den, "den");
        const Rational& v = as<Rational>(a, "array")(row, col);
        std::string n = v.num_str();
        std::string d = v.den_str();
        *num = dup_string(n);
        *den = dup_string(d);
    });
}

dg_status dg_array_get_str(const dg_array* a, size_t row, size_t col, char** out) {
    return guard([&] {
        check_index(a, row, col);
        require(out, "out");
        *out = dup_string(std::visit([&](const auto& m) { return dgeo::to_string(m(row, col)); }, a->m));
    });
}

dg_status dg_determinant(const dg_array* m, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(m, "matrix", [&](const auto& mat) { *out = wrap_scalar(dgeo::determinant(mat)); });
    });
}

dg_status dg_linear_solve(const dg_array* a, const dg_array* b, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(a, "a", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            const auto rhs = flatten(as<T>(b, "b"));
            *out = wrap_vector(dgeo::linear_solve<T>(mat, rhs));
        });
    });
}

dg_status dg_cm_matrix(const dg_array* d2, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(d2, "d2", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            *out = wrap(dgeo::build_cm_matrix(dgeo::SquaredDistanceMatrix<T>(mat)));
        });
    });
}

dg_status dg_cm_determinant(const dg_array* d2, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(d2, "d2", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            *out = wrap_scalar(dgeo::cm_determinant(dgeo::SquaredDistanceMatrix<T>(mat)));
        });
    });
}

dg_status dg_volume_squared(const dg_array* d2, dg_array** value, size_t* dim) {
    return guard([&] {
        require(value, "value");
        require(dim, "dim");
        visit_array(d2, "d2", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            const auto v = dgeo::volume_squared(dgeo::SquaredDistanceMatrix<T>(mat));
            *value = wrap_scalar(v.value);
            *dim = v.dim;
        });
    });
}

dg_status dg_heron_area_squared(const dg_array* sides, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(sides, "sides", [&](const auto& mat) {
            const auto s = flatten(mat);
            if (s.size() != 3) throw Error(ErrorKind::WrongLength, "Heron needs exactly three sides");
            *out = wrap_scalar(dgeo::heron_area_squared(s[0], s[1], s[2]));
        });
    });
}

dg_status dg_is_degenerate(const dg_array* d2, double tol, int* out) {
    return guard([&] {
        require(out, "out");
        visit_array(d2, "d2", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            *out = dgeo::is_degenerate(dgeo::SquaredDistanceMatrix<T>(mat), tol) ? 1 : 0;
        });
    });
}

dg_status dg_volume_squared_from_coordinates(const dg_array* points, dg_array** value, size_t* dim) {
    return guard([&] {
        require(value, "value");
        require(dim, "dim");
        visit_array(points, "points", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            const auto pts = rows_of(mat);
            const auto v = dgeo::volume_squared_from_coordinates<T>(pts);
            *value = wrap_scalar(v.value);
            *dim = v.dim;
        });
    });
}

dg_status dg_validate_radii(const dg_array* radii, size_t n, int strict) {
    return guard([&] {
        visit_array(radii, "radii", [&](const auto& mat) { (void)dgeo::validate_radii(flatten(mat), n, strict != 0); });
    });
}

dg_status dg_curvatures_from_radii(const dg_array* radii, size_t n, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(radii, "radii", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            const auto k = dgeo::curvatures_from_radii(dgeo::SignedRadii<T>(flatten(mat), n));
            *out = wrap_vector(std::vector<T>(k.values().begin(), k.values().end()));
        });
    });
}

dg_status dg_tangency_squared_distances(const dg_array* radii, size_t n, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(radii, "radii", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            *out = wrap(dgeo::tangency_squared_distances(dgeo::SignedRadii<T>(flatten(mat), n)).matrix());
        });
    });
}

dg_status dg_descartes_residual(const dg_array* curvatures, size_t n, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(curvatures, "curvatures", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            *out = wrap_scalar(dgeo::descartes_residual(dgeo::Curvatures<T>(flatten(mat), n)));
        });
    });
}

dg_status dg_factored_volume_squared(const dg_array* radii, size_t n, dg_array** value, size_t* dim) {
    return guard([&] {
        require(value, "value");
        require(dim, "dim");
        visit_array(radii, "radii", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            const auto v = dgeo::factored_volume_squared(dgeo::SignedRadii<T>(flatten(mat), n));
            *value = wrap_scalar(v.value);
            *dim = v.dim;
        });
    });
}

dg_status dg_identity_check(const dg_array* radii, size_t n, dg_array** cm_det, dg_array** factored) {
    return guard([&] {
        require(cm_det, "cm_det");
        require(factored, "factored");
        visit_array(radii, "radii", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            const auto sides = dgeo::central_identity(dgeo::SignedRadii<T>(flatten(mat), n));
            *cm_det = wrap_scalar(sides.cm_determinant);
            *factored = wrap_scalar(sides.factored);
        });
    });
}

dg_status dg_solve_missing_curvature(const dg_array* known, size_t n, dg_array** out, int* single) {
    return guard([&] {
        require(out, "out");
        visit_array(known, "known", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            const auto k = flatten(mat);
            const auto roots = dgeo::solve_missing_curvature<T>(k, n);
            *out = wrap_vector(std::vector<T>{roots.larger, roots.smaller});
            if (single != nullptr) *single = roots.single ? 1 : 0;
        });
    });
}

dg_status dg_vieta_partner(const dg_array* curvatures, size_t n, size_t index, dg_array** out) {
    return guard([&] {
        require(out, "out");
        visit_array(curvatures, "curvatures", [&](const auto& mat) {
            using T = std::decay_t<decltype(mat(0, 0))>;
            *out = wrap_scalar(dgeo::vieta_partner(dgeo::Curvatures<T>(flatten(mat), n), index));
        });
    });
}

dg_status dg_report_create(dg_report** out) {
    return guard([&] {
        require(out, "out");
        *out = new dg_report{};
    });
}

void dg_report_destroy(dg_report* r) { delete r; }

dg_status dg_report_append(dg_report* dst, const dg_report* src) {
    return guard([&] {
        require(dst, "dst");
        require(src, "src");
        dst->report.append(src->report);
    });
}

dg_status dg_check_uwu_congruence(const dg_array* points, dg_report** out) {
    return guard([&] {
        require(out, "out");
        const auto pts = rows_of(as<Rational>(points, "points"));
        *out = new dg_report{dgeo::check_UWU_congruence(pts)};
    });
}

dg_status dg_check_s_properties(size_t n, dg_report** out) {
    return guard([&] {
        require(out, "out");
        *out = new dg_report{dgeo::check_S_properties(n)};
    });
}

dg_status dg_check_reduction_chain(const dg_array* radii, size_t n, dg_report** out) {
    return guard([&] {
        require(out, "out");
        const dgeo::SignedRadii<Rational> r(flatten(as<Rational>(radii, "radii")), n);
        *out = new dg_report{dgeo::check_reduction_chain(r)};
    });
}

dg_status dg_verify_random(size_t count, size_t n, uint64_t seed, dg_report** out) {
    return guard([&] {
        require(out, "out");
        *out = new dg_report{dgeo::verify_random(count, n, seed)};
    });
}

size_t dg_report_size(const dg_report* r) { return r == nullptr ? 0 : r->report.entries().size(); }

size_t dg_report_failures(const dg_report* r) { return r == nullptr ? 0 : r->report.failures(); }

const char* dg_report_entry_name(const dg_report* r, size_t i) {
    if (r == nullptr || i >= r->report.entries().size()) return nullptr;
    return r->report.entries()[i].name.c_str();
}

size_t dg_report_entry_dim(const dg_report* r, size_t i) {
    if (r == nullptr || i >= r->report.entries().size()) return 0;
    return r->report.entries()[i].n;
}

int dg_report_entry_passed(const dg_report* r, size_t i) {
    if (r == nullptr || i >= r->report.entries().size()) return 0;
    return r->report.entries()[i].passed ? 1 : 0;
}

dg_status dg_report_entry_sides(const dg_report* r, size_t i, dg_array** lhs, dg_array** rhs) {
    return guard([&] {
        require(lhs, "lhs");
        require(rhs, "rhs");
        const auto& e = entry(r, i);
        *lhs = wrap(e.lhs);
        *rhs = wrap(e.rhs);
    });
}

dg_status dg_report_to_text(const dg_report* r, char** out) {
    return guard([&] {
        require(r, "report");
        require(out, "out");
        *out = dup_string(r->report.to_text());
    });
}

dg_status dg_realize_points(const dg_array* d2, size_t dim, double tol, dg_array** out) {
    return guard([&] {
        require(out, "out");
        const auto e = dgeo::realize_points(dgeo::SquaredDistanceMatrix<double>(as<double>(d2, "d2")), dim, tol);
        Matrix<double> m(e.points.size(), dim);
        for (std::size_t i = 0; i < e.points.size(); ++i)
            for (std::size_t c = 0; c < dim; ++c) m(i, c) = e.points[i][c];
        *out = wrap(std::move(m));
    });
}

dg_status dg_append_point(const dg_array* points, const dg_array* d2_new, double tol, dg_array** out) {
    return guard([&] {
        require(out, "out");
        const auto& pm = as<double>(points, "points");
        const dgeo::EmbeddedPoints existing{rows_of(pm), pm.cols()};
        const auto d2 = flatten(as<double>(d2_new, "d2_new"));
        const auto p = dgeo::append_point(existing, d2, tol);
        Matrix<double> m(1, p.size());
        for (std::size_t c = 0; c < p.size(); ++c) m(0, c) = p[c];
        *out = wrap(std::move(m));
    });
}

dg_status dg_gasket_generate(const double seed[3], size_t max_depth, dg_gasket** out) {
    return guard([&] {
        require(seed, "seed");
        require(out, "out");
        *out = new dg_gasket{dgeo::generate({seed[0], seed[1], seed[2]}, max_depth)};
    });
}

void dg_gasket_destroy(dg_gasket* g) { delete g; }

size_t dg_gasket_size(const dg_gasket* g) { return g == nullptr ? 0 : g->gasket.circles.size(); }

size_t dg_gasket_max_depth(const dg_gasket* g) { return g == nullptr ? 0 : g->gasket.max_depth; }

dg_status dg_gasket_circle(const dg_gasket* g, size_t i, dg_circle* out) {
    return guard([&] {
        require(g, "gasket");
        require(out, "out");
        if (i >= g->gasket.circles.size()) throw Error(ErrorKind::InvalidArgument, "circle index out of range");
        const dgeo::Circle& c = g->gasket.circles[i];
        *out = dg_circle{};
        out->cx = c.center[0];
        out->cy = c.center[1];
        out->radius = c.radius;
        out->curvature = c.curvature;
        out->depth = c.depth;
        out->parent_count = c.parents.size();
        for (std::size_t p = 0; p < c.parents.size() && p < 3; ++p) out->parents[p] = c.parents[p];
    });
}

dg_status dg_gasket_render_svg(const dg_gasket* g, const dg_svg_options* options, char** out) {
    return guard([&] {
        require(g, "gasket");
        require(out, "out");
        *out = dup_string(dgeo::render_svg(g->gasket, svg_options(options)));
    });
}

dg_status dg_gasket_write_svg(const dg_gasket* g, const dg_svg_options* options, const char* path) {
    return guard([&] {
        require(g, "gasket");
        require(path, "path");
        const std::string svg = dgeo::render_svg(g->gasket, svg_options(options));
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error(ErrorKind::Io, std::string("cannot open ") + path + " for writing");
        file << svg;
        if (!file.flush()) throw Error(ErrorKind::Io, std::string("failed writing ") + path);
    });
}

}  // extern "C"
