/*
 * C interface to the dgeo distance-geometry library.
 *
 * All objects are opaque handles created by a dg_*_create / producing call and
 * released with the matching dg_*_destroy. Functions return a dg_status; on
 * failure dg_last_error() holds a message for the calling thread. Strings
 * returned through char** must be released with dg_string_free.
 *
 * Numbers cross the boundary either as text ("-3/4", "0.5", "7") or as double.
 * An array's mode is fixed at creation; exact arrays never round.
 */
#ifndef DGEO_DGEO_H
#define DGEO_DGEO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DGEO_BUILDING_LIBRARY)
#    define DGEO_API __declspec(dllexport)
#  else
#    define DGEO_API __declspec(dllimport)
#  endif
#else
#  define DGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dg_status {
    DG_OK = 0,
    DG_ERR_INVALID_ARGUMENT = 1,
    DG_ERR_DIMENSION = 2,
    DG_ERR_VALIDATION = 3,
    DG_ERR_ZERO_RADIUS = 4,
    DG_ERR_TOO_MANY_NEGATIVE = 5,
    DG_ERR_WRONG_LENGTH = 6,
    DG_ERR_PARSE = 7,
    DG_ERR_NON_FINITE = 8,
    DG_ERR_SINGULAR = 9,
    DG_ERR_NO_REAL_ROOT = 10,
    DG_ERR_NEEDS_FLOAT = 11,
    DG_ERR_INCONSISTENT = 12,
    DG_ERR_RANK_EXCEEDS_DIM = 13,
    DG_ERR_NON_EUCLIDEAN = 14,
    DG_ERR_NO_SOLUTION = 15,
    DG_ERR_AMBIGUOUS = 16,
    DG_ERR_SEED = 17,
    DG_ERR_GEOMETRY = 18,
    DG_ERR_DEPTH_EXCEEDED = 19,
    DG_ERR_IO = 20,
    DG_ERR_INTERNAL = 21
} dg_status;

typedef enum dg_mode { DG_EXACT = 0, DG_FLOAT = 1 } dg_mode;

typedef struct dg_array dg_array;   /* rows x cols scalars of one mode */
typedef struct dg_report dg_report; /* proof witness report */
typedef struct dg_gasket dg_gasket; /* generated circle packing */

typedef struct dg_circle {
    double cx, cy;
    double radius;
    double curvature;
    size_t depth;
    size_t parents[3];
    size_t parent_count;
} dg_circle;

typedef struct dg_svg_options {
    int width;            /* pixels; <= 0 selects the default */
    double stroke_width;  /* pixels; <= 0 selects the default */
    const char* stroke;   /* NULL selects the default */
} dg_svg_options;

/* --- status ------------------------------------------------------------ */

/* Stable snake_case name of a status, e.g. "no_real_root". */
DGEO_API const char* dg_status_kind(dg_status status);
/* 1 when the status reports malformed input, 0 for computational failures. */
DGEO_API int dg_status_is_validation(dg_status status);
DGEO_API const char* dg_last_error(void);
DGEO_API void dg_string_free(char* s);

/* --- arrays ------------------------------------------------------------ */

DGEO_API dg_status dg_array_create(dg_mode mode, size_t rows, size_t cols, dg_array** out);
DGEO_API void dg_array_destroy(dg_array* a);
DGEO_API dg_mode dg_array_mode(const dg_array* a);
DGEO_API size_t dg_array_rows(const dg_array* a);
DGEO_API size_t dg_array_cols(const dg_array* a);
/* Parses "p", "p/q" or a decimal; float arrays round the parsed rational. */
DGEO_API dg_status dg_array_set_str(dg_array* a, size_t row, size_t col, const char* text);
DGEO_API dg_status dg_array_set_double(dg_array* a, size_t row, size_t col, double value);
DGEO_API dg_status dg_array_get_double(const dg_array* a, size_t row, size_t col, double* out);
/* Exact arrays only: numerator and denominator as decimal strings. */
DGEO_API dg_status dg_array_get_rational(const dg_array* a, size_t row, size_t col, char** num, char** den);
/* "p/q" for exact arrays, shortest round-trip decimal for float arrays. */
DGEO_API dg_status dg_array_get_str(const dg_array* a, size_t row, size_t col, char** out);

/* --- numeric kernel ---------------------------------------------------- */

DGEO_API dg_status dg_determinant(const dg_array* m, dg_array** out);
DGEO_API dg_status dg_linear_solve(const dg_array* a, const dg_array* b, dg_array** out);

/* --- Cayley-Menger ----------------------------------------------------- */

/* d2 is an m x m squared distance matrix. */
DGEO_API dg_status dg_cm_matrix(const dg_array* d2, dg_array** out);
DGEO_API dg_status dg_cm_determinant(const dg_array* d2, dg_array** out);
DGEO_API dg_status dg_volume_squared(const dg_array* d2, dg_array** value, size_t* dim);
/* sides is a 3-element array (any shape). */
DGEO_API dg_status dg_heron_area_squared(const dg_array* sides, dg_array** out);
DGEO_API dg_status dg_is_degenerate(const dg_array* d2, double tol, int* out);
/* points is m x (m-1), one point per row. */
DGEO_API dg_status dg_volume_squared_from_coordinates(const dg_array* points, dg_array** value, size_t* dim);

/* --- tangency ---------------------------------------------------------- */

DGEO_API dg_status dg_validate_radii(const dg_array* radii, size_t n, int strict);
DGEO_API dg_status dg_curvatures_from_radii(const dg_array* radii, size_t n, dg_array** out);
DGEO_API dg_status dg_tangency_squared_distances(const dg_array* radii, size_t n, dg_array** out);
DGEO_API dg_status dg_descartes_residual(const dg_array* curvatures, size_t n, dg_array** out);
DGEO_API dg_status dg_factored_volume_squared(const dg_array* radii, size_t n, dg_array** value, size_t* dim);
/* Both sides of det(CM(tangency)) = (-1)^n 2^(2n+1) (prod r)^2 residual. */
DGEO_API dg_status dg_identity_check(const dg_array* radii, size_t n, dg_array** cm_det, dg_array** factored);
/* out is 2 x 1 (larger, smaller); *single is set for the linear n = 1 case. */
DGEO_API dg_status dg_solve_missing_curvature(const dg_array* known, size_t n, dg_array** out, int* single);
DGEO_API dg_status dg_vieta_partner(const dg_array* curvatures, size_t n, size_t index, dg_array** out);

/* --- proof witness (exact arrays only) --------------------------------- */

DGEO_API dg_status dg_report_create(dg_report** out);
DGEO_API void dg_report_destroy(dg_report* r);
DGEO_API dg_status dg_report_append(dg_report* dst, const dg_report* src);
DGEO_API dg_status dg_check_uwu_congruence(const dg_array* points, dg_report** out);
DGEO_API dg_status dg_check_s_properties(size_t n, dg_report** out);
DGEO_API dg_status dg_check_reduction_chain(const dg_array* radii, size_t n, dg_report** out);
DGEO_API dg_status dg_verify_random(size_t count, size_t n, uint64_t seed, dg_report** out);
DGEO_API size_t dg_report_size(const dg_report* r);
DGEO_API size_t dg_report_failures(const dg_report* r);
DGEO_API const char* dg_report_entry_name(const dg_report* r, size_t i);
DGEO_API size_t dg_report_entry_dim(const dg_report* r, size_t i);
DGEO_API int dg_report_entry_passed(const dg_report* r, size_t i);
DGEO_API dg_status dg_report_entry_sides(const dg_report* r, size_t i, dg_array** lhs, dg_array** rhs);
DGEO_API dg_status dg_report_to_text(const dg_report* r, char** out);

/* --- embedding (float arrays only) ------------------------------------- */

/* out is m x dim, one point per row. */
DGEO_API dg_status dg_realize_points(const dg_array* d2, size_t dim, double tol, dg_array** out);
/* points is k x dim, d2_new has k entries; out is 1 x dim. */
DGEO_API dg_status dg_append_point(const dg_array* points, const dg_array* d2_new, double tol, dg_array** out);

/* --- gasket ------------------------------------------------------------ */

DGEO_API dg_status dg_gasket_generate(const double seed[3], size_t max_depth, dg_gasket** out);
DGEO_API void dg_gasket_destroy(dg_gasket* g);
DGEO_API size_t dg_gasket_size(const dg_gasket* g);
DGEO_API size_t dg_gasket_max_depth(const dg_gasket* g);
DGEO_API dg_status dg_gasket_circle(const dg_gasket* g, size_t i, dg_circle* out);
/* options may be NULL. */
DGEO_API dg_status dg_gasket_render_svg(const dg_gasket* g, const dg_svg_options* options, char** out);
DGEO_API dg_status dg_gasket_write_svg(const dg_gasket* g, const dg_svg_options* options, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* DGEO_DGEO_H */
