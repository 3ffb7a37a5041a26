// dgeo command-line front end. Talks to the library only through dgeo.h.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dgeo/dgeo.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using Options = std::map<std::string, std::string>;

// Thrown by handlers; carries a library status so the exit code can be derived.
struct Failure {
    dg_status status;
    std::string message;
};

void check(dg_status status) {
    if (status != DG_OK) throw Failure{status, dg_last_error()};
}

[[noreturn]] void invalid(const std::string& message) { throw Failure{DG_ERR_INVALID_ARGUMENT, message}; }

struct ArrayDeleter {
    void operator()(dg_array* a) const { dg_array_destroy(a); }
};
struct ReportDeleter {
    void operator()(dg_report* r) const { dg_report_destroy(r); }
};
struct GasketDeleter {
    void operator()(dg_gasket* g) const { dg_gasket_destroy(g); }
};
using Array = std::unique_ptr<dg_array, ArrayDeleter>;
using Report = std::unique_ptr<dg_report, ReportDeleter>;
using GasketPtr = std::unique_ptr<dg_gasket, GasketDeleter>;

std::string take_string(char* s) {
    std::string out(s);
    dg_string_free(s);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

dg_mode parse_mode(const std::string& text) {
    if (text == "exact") return DG_EXACT;
    if (text == "float") return DG_FLOAT;
    invalid("mode must be 'exact' or 'float', got '" + text + "'");
}

Array make_array(dg_mode mode, const std::vector<std::vector<std::string>>& cells) {
    if (cells.empty() || cells.front().empty()) invalid("empty numeric input");
    dg_array* raw = nullptr;
    check(dg_array_create(mode, cells.size(), cells.front().size(), &raw));
    Array a(raw);
    for (std::size_t r = 0; r < cells.size(); ++r) {
        if (cells[r].size() != cells.front().size()) invalid("ragged matrix: row " + std::to_string(r));
        for (std::size_t c = 0; c < cells[r].size(); ++c) check(dg_array_set_str(a.get(), r, c, cells[r][c].c_str()));
    }
    return a;
}

// "a,b,c" -> column of values.
Array parse_list(dg_mode mode, const std::string& text) {
    std::vector<std::vector<std::string>> cells;
    for (auto& v : split(text, ',')) cells.push_back({v});
    return make_array(mode, cells);
}

// "a,b;c,d" -> matrix, one row per ';'.
Array parse_matrix(dg_mode mode, const std::string& text) {
    std::vector<std::vector<std::string>> cells;
    for (auto& row : split(text, ';'))
        if (!row.empty()) cells.push_back(split(row, ','));
    return make_array(mode, cells);
}

std::size_t parse_count(const std::string& text, const char* name) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size() || v < 0) throw std::invalid_argument(name);
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        invalid(std::string("--") + name + " expects a nonnegative integer, got '" + text + "'");
    }
}

double parse_double(const std::string& text, const char* name) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size() || !std::isfinite(v)) throw std::invalid_argument(name);
        return v;
    } catch (const std::logic_error&) {
        invalid(std::string("--") + name + " expects a number, got '" + text + "'");
    }
}

json scalar_json(const dg_array* a, std::size_t r = 0, std::size_t c = 0) {
    if (dg_array_mode(a) == DG_EXACT) {
        char* num = nullptr;
        char* den = nullptr;
        check(dg_array_get_rational(a, r, c, &num, &den));
        return json{{"num", take_string(num)}, {"den", take_string(den)}};
    }
    double v = 0.0;
    check(dg_array_get_double(a, r, c, &v));
    return v;
}

json column_json(const dg_array* a) {
    json out = json::array();
    for (std::size_t r = 0; r < dg_array_rows(a); ++r)
        for (std::size_t c = 0; c < dg_array_cols(a); ++c) out.push_back(scalar_json(a, r, c));
    return out;
}

json matrix_json(const dg_array* a) {
    if (dg_array_rows(a) == 1 && dg_array_cols(a) == 1) return scalar_json(a);
    json out = json::array();
    for (std::size_t r = 0; r < dg_array_rows(a); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < dg_array_cols(a); ++c) row.push_back(scalar_json(a, r, c));
        out.push_back(std::move(row));
    }
    return out;
}

bool scalars_equal(const dg_array* a, const dg_array* b) {
    if (dg_array_mode(a) == DG_EXACT) {
        char* x = nullptr;
        char* y = nullptr;
        check(dg_array_get_str(a, 0, 0, &x));
        check(dg_array_get_str(b, 0, 0, &y));
        return take_string(x) == take_string(y);
    }
    double x = 0.0, y = 0.0;
    check(dg_array_get_double(a, 0, 0, &x));
    check(dg_array_get_double(b, 0, 0, &y));
    return std::fabs(x - y) <= 1e-9 * std::max({1.0, std::fabs(x), std::fabs(y)});
}

// JSON request values are folded into the same string form the flags use.
std::string request_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number_float()) return v.dump();
    if (v.is_object() && v.contains("num") && v.contains("den"))
        return request_value(v["num"]) + "/" + request_value(v["den"]);
    if (v.is_array()) {
        std::string out;
        const bool nested = !v.empty() && v.front().is_array();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += nested ? ";" : ",";
            out += request_value(v[i]);
        }
        return out;
    }
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    invalid("unsupported value in request: " + v.dump());
}

void merge_request(Options& opts) {
    const std::string path = opts["request"];
    if (path.empty()) return;
    json req;
    try {
        if (path == "-") {
            req = json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw Failure{DG_ERR_IO, "cannot read request file " + path};
            req = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw Failure{DG_ERR_PARSE, std::string("malformed request JSON: ") + e.what()};
    }
    if (!req.is_object()) invalid("request must be a JSON object");
    for (auto it = req.begin(); it != req.end(); ++it) {
        const auto slot = opts.find(it.key());
        if (slot == opts.end()) invalid("unknown request field '" + it.key() + "'");
        if (slot->second.empty()) slot->second = request_value(it.value());
    }
}

const std::string& need(const Options& opts, const std::string& key) {
    const auto it = opts.find(key);
    if (it == opts.end() || it->second.empty()) invalid("missing required option --" + key);
    return it->second;
}

bool has(const Options& opts, const std::string& key) {
    const auto it = opts.find(key);
    return it != opts.end() && !it->second.empty();
}

dg_mode mode_of(const Options& opts, const char* fallback) {
    return parse_mode(has(opts, "mode") ? opts.at("mode") : std::string(fallback));
}

std::size_t dimension_or_default(const Options& opts, const dg_array* list, std::size_t offset) {
    if (has(opts, "n")) return parse_count(opts.at("n"), "n");
    const std::size_t len = dg_array_rows(list);
    if (len <= offset) invalid("too few values to infer --n");
    return len - offset;
}

// ---- subcommands -------------------------------------------------------------

json cmd_cm_det(const Options& o) {
    const Array d2 = parse_matrix(mode_of(o, "exact"), need(o, "d2"));
    dg_array* det = nullptr;
    check(dg_cm_determinant(d2.get(), &det));
    return scalar_json(Array(det).get());
}

json cmd_volume(const Options& o) {
    const dg_mode mode = mode_of(o, "exact");
    dg_array* value = nullptr;
    std::size_t dim = 0;
    if (has(o, "points")) {
        const Array pts = parse_matrix(mode, o.at("points"));
        check(dg_volume_squared_from_coordinates(pts.get(), &value, &dim));
    } else {
        const Array d2 = parse_matrix(mode, need(o, "d2"));
        check(dg_volume_squared(d2.get(), &value, &dim));
    }
    const Array v(value);
    return json{{"value", scalar_json(v.get())}, {"dim", dim}};
}

json cmd_residual(const Options& o) {
    const Array k = parse_list(mode_of(o, "exact"), need(o, "curvatures"));
    const std::size_t n = dimension_or_default(o, k.get(), 2);
    dg_array* res = nullptr;
    check(dg_descartes_residual(k.get(), n, &res));
    return scalar_json(Array(res).get());
}

json cmd_solve(const Options& o) {
    const Array k = parse_list(mode_of(o, "exact"), need(o, "curvatures"));
    const std::size_t n = dimension_or_default(o, k.get(), 1);
    dg_array* roots = nullptr;
    int single = 0;
    check(dg_solve_missing_curvature(k.get(), n, &roots, &single));
    const Array r(roots);
    return json{{"roots", column_json(r.get())}, {"single", single != 0}};
}

json cmd_identity_check(const Options& o) {
    const Array r = parse_list(mode_of(o, "exact"), need(o, "radii"));
    const std::size_t n = dimension_or_default(o, r.get(), 2);
    check(dg_validate_radii(r.get(), n, has(o, "lenient") ? 0 : 1));
    dg_array* lhs = nullptr;
    dg_array* rhs = nullptr;
    check(dg_identity_check(r.get(), n, &lhs, &rhs));
    const Array l(lhs), h(rhs);
    return json{{"n", n},
                {"cm_determinant", scalar_json(l.get())},
                {"factored", scalar_json(h.get())},
                {"equal", scalars_equal(l.get(), h.get())}};
}

json report_json(const dg_report* report) {
    json entries = json::array();
    for (std::size_t i = 0; i < dg_report_size(report); ++i) {
        dg_array* lhs = nullptr;
        dg_array* rhs = nullptr;
        check(dg_report_entry_sides(report, i, &lhs, &rhs));
        const Array l(lhs), r(rhs);
        entries.push_back(json{{"name", dg_report_entry_name(report, i)},
                               {"n", dg_report_entry_dim(report, i)},
                               {"passed", dg_report_entry_passed(report, i) != 0},
                               {"lhs", matrix_json(l.get())},
                               {"rhs", matrix_json(r.get())}});
    }
    return json{{"passed", dg_report_failures(report) == 0},
                {"entries_checked", dg_report_size(report)},
                {"failures", dg_report_failures(report)},
                {"entries", std::move(entries)}};
}

int cmd_verify_proof(const Options& o) {
    if (mode_of(o, "exact") != DG_EXACT) invalid("the proof witness runs in exact mode only");
    dg_report* raw = nullptr;
    if (has(o, "random")) {
        const std::size_t count = parse_count(o.at("random"), "random");
        const std::size_t n = parse_count(need(o, "dim"), "dim");
        const std::uint64_t seed = has(o, "seed") ? parse_count(o.at("seed"), "seed") : 1;
        check(dg_verify_random(count, n, seed, &raw));
    } else {
        const Array r = parse_list(DG_EXACT, need(o, "radii"));
        const std::size_t n = dimension_or_default(o, r.get(), 2);
        check(dg_check_s_properties(n, &raw));
        Report s(raw);
        dg_report* chain = nullptr;
        check(dg_check_reduction_chain(r.get(), n, &chain));
        const Report c(chain);
        check(dg_report_append(s.get(), c.get()));
        raw = s.release();
    }
    const Report report(raw);
    const bool ok = dg_report_failures(report.get()) == 0;
    if (has(o, "format") && o.at("format") == "text") {
        char* text = nullptr;
        check(dg_report_to_text(report.get(), &text));
        std::cout << take_string(text);
    } else if (has(o, "format") && o.at("format") != "json") {
        invalid("--format must be 'json' or 'text'");
    } else {
        std::cout << json{{"ok", ok}, {"result", report_json(report.get())}}.dump() << '\n';
    }
    if (!ok) std::cerr << "proof witness: " << dg_report_failures(report.get()) << " identities failed\n";
    return ok ? 0 : 2;
}

json cmd_embed(const Options& o) {
    if (mode_of(o, "float") != DG_FLOAT) invalid("embedding produces coordinates and requires --mode float");
    const Array r = parse_list(DG_FLOAT, need(o, "radii"));
    const std::size_t n = dimension_or_default(o, r.get(), 2);
    check(dg_validate_radii(r.get(), n, has(o, "lenient") ? 0 : 1));
    const double tol = has(o, "tol") ? parse_double(o.at("tol"), "tol") : 1e-9;
    dg_array* d2 = nullptr;
    check(dg_tangency_squared_distances(r.get(), n, &d2));
    const Array dist(d2);
    dg_array* pts = nullptr;
    check(dg_realize_points(dist.get(), n, tol, &pts));
    const Array points(pts);
    json centers = json::array();
    for (std::size_t i = 0; i < dg_array_rows(points.get()); ++i) {
        json p = json::array();
        for (std::size_t c = 0; c < dg_array_cols(points.get()); ++c) p.push_back(scalar_json(points.get(), i, c));
        centers.push_back(std::move(p));
    }
    return json{{"dim", n}, {"radii", column_json(r.get())}, {"centers", std::move(centers)}};
}

json gasket_geometry(const dg_gasket* g, const double seed[3]) {
    json circles = json::array();
    for (std::size_t i = 0; i < dg_gasket_size(g); ++i) {
        dg_circle c{};
        check(dg_gasket_circle(g, i, &c));
        json parents = json::array();
        for (std::size_t p = 0; p < c.parent_count; ++p) parents.push_back(c.parents[p]);
        circles.push_back(json{{"center", {c.cx, c.cy}},
                               {"radius", c.radius},
                               {"curvature", c.curvature},
                               {"depth", c.depth},
                               {"parents", std::move(parents)}});
    }
    return json{{"seed", {seed[0], seed[1], seed[2]}},
                {"max_depth", dg_gasket_max_depth(g)},
                {"circles", std::move(circles)}};
}

json cmd_gasket(const Options& o) {
    if (mode_of(o, "float") != DG_FLOAT) invalid("gasket geometry requires --mode float");
    const Array seed_list = parse_list(DG_FLOAT, need(o, "seed"));
    if (dg_array_rows(seed_list.get()) != 3) throw Failure{DG_ERR_WRONG_LENGTH, "--seed takes three curvatures"};
    double seed[3];
    for (std::size_t i = 0; i < 3; ++i) check(dg_array_get_double(seed_list.get(), i, 0, &seed[i]));
    const std::size_t depth = has(o, "depth") ? parse_count(o.at("depth"), "depth") : 3;

    dg_gasket* raw = nullptr;
    check(dg_gasket_generate(seed, depth, &raw));
    const GasketPtr g(raw);

    json result{{"circles", dg_gasket_size(g.get())}, {"max_depth", depth}};
    if (has(o, "svg")) {
        dg_svg_options svg{};
        if (has(o, "width")) svg.width = static_cast<int>(parse_count(o.at("width"), "width"));
        check(dg_gasket_write_svg(g.get(), &svg, o.at("svg").c_str()));
        result["svg"] = o.at("svg");
    }
    if (has(o, "json")) {
        std::ofstream out(o.at("json"));
        if (!out) throw Failure{DG_ERR_IO, "cannot open " + o.at("json") + " for writing"};
        out << gasket_geometry(g.get(), seed).dump(1) << '\n';
        if (!out.flush()) throw Failure{DG_ERR_IO, "failed writing " + o.at("json")};
        result["json"] = o.at("json");
    }
    return result;
}

struct Command {
    const char* name;
    const char* description;
    std::vector<std::pair<const char*, const char*>> options;
    std::vector<std::pair<const char*, const char*>> flags;
    std::function<int(const Options&)> run;
};

int emit(const std::function<json(const Options&)>& body, const Options& o) {
    json result = body(o);
    std::cout << json{{"ok", true}, {"result", std::move(result)}}.dump() << '\n';
    return 0;
}

std::vector<Command> commands() {
    const std::pair<const char*, const char*> mode{"mode", "exact or float"};
    const std::pair<const char*, const char*> request{"request", "JSON request file supplying any option ('-' = stdin)"};
    const std::pair<const char*, const char*> lenient{"lenient", "allow any number of negative radii"};
    return {
        {"cm-det", "Cayley-Menger determinant of a squared distance matrix",
         {mode, request, {"d2", "squared distances, rows separated by ';' (e.g. 0,9,16;9,0,25;16,25,0)"}},
         {},
         [](const Options& o) { return emit(cmd_cm_det, o); }},
        {"volume", "squared simplex volume from squared distances or coordinates",
         {mode, request, {"d2", "squared distance matrix"}, {"points", "m points of dimension m-1, one per ';'"}},
         {},
         [](const Options& o) { return emit(cmd_volume, o); }},
        {"residual", "Descartes / Soddy-Gosset residual (sum k)^2 - n sum k^2",
         {mode, request, {"curvatures", "n+2 curvatures, comma separated"}, {"n", "sphere dimension"}},
         {},
         [](const Options& o) { return emit(cmd_residual, o); }},
        {"solve", "curvatures of the missing tangent sphere",
         {mode, request, {"curvatures", "n+1 known curvatures"}, {"n", "sphere dimension"}},
         {},
         [](const Options& o) { return emit(cmd_solve, o); }},
        {"identity-check", "both sides of det(CM) = (-1)^n 2^(2n+1) (prod r)^2 residual",
         {mode, request, {"radii", "n+2 signed radii"}, {"n", "sphere dimension"}},
         {lenient},
         [](const Options& o) { return emit(cmd_identity_check, o); }},
        {"verify-proof", "run the exact matrix-identity proof witness",
         {mode, request, {"radii", "n+2 signed radii"}, {"n", "sphere dimension"},
          {"random", "number of random instances"}, {"dim", "sphere dimension for --random"},
          {"seed", "random seed (default 1)"}, {"format", "json (default) or text"}},
         {},
         cmd_verify_proof},
        {"embed", "centers of mutually tangent spheres from their radii",
         {mode, request, {"radii", "n+2 signed radii"}, {"n", "sphere dimension"}, {"tol", "eigenvalue tolerance"}},
         {lenient},
         [](const Options& o) { return emit(cmd_embed, o); }},
        {"gasket", "Apollonian gasket from three seed curvatures",
         {mode, request, {"seed", "three curvatures, e.g. -1,2,2"}, {"depth", "expansion depth (default 3, max 12)"},
          {"svg", "write SVG to this path"}, {"json", "write circle geometry JSON to this path"},
          {"width", "SVG width in pixels"}},
         {},
         [](const Options& o) { return emit(cmd_gasket, o); }},
    };
}

int fail(dg_status status, const std::string& message) {
    std::cerr << "error (" << dg_status_kind(status) << "): " << message << '\n';
    std::cout << json{{"ok", false}, {"error", {{"kind", dg_status_kind(status)}, {"message", message}}}}.dump()
              << '\n';
    return dg_status_is_validation(status) ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dgeo: Cayley-Menger determinants, Descartes/Soddy-Gosset curvatures and Apollonian gaskets"};
    app.require_subcommand(1);

    const std::vector<Command> cmds = commands();
    std::map<std::string, Options> values;
    std::map<std::string, bool> flag_values;
    std::vector<CLI::App*> subs;
    for (const auto& cmd : cmds) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.description);
        Options& opts = values[cmd.name];
        for (const auto& [name, help] : cmd.options) {
            opts[name];
            sub->add_option(std::string("--") + name, opts[name], help);
        }
        for (const auto& [name, help] : cmd.flags) {
            opts[name];
            sub->add_flag(std::string("--") + name, flag_values[std::string(cmd.name) + "/" + name], help);
        }
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 1;
    }

    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        Options& opts = values[cmds[i].name];
        for (const auto& [name, help] : cmds[i].flags)
            if (flag_values[std::string(cmds[i].name) + "/" + name]) opts[name] = "true";
        try {
            merge_request(opts);
            if (opts.count("lenient") && opts["lenient"] == "false") opts["lenient"].clear();
            return cmds[i].run(opts);
        } catch (const Failure& f) {
            return fail(f.status, f.message);
        } catch (const std::exception& e) {
            return fail(DG_ERR_INTERNAL, e.what());
        }
    }
    return 1;
}
