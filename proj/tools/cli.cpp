#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arq/homology.hpp"
#include "arq/io.hpp"
#include "arq/kt.hpp"
#include "arq/models.hpp"
#include "arq/poincare.hpp"
#include "arq/quiver.hpp"
#include "arq/resolution.hpp"
#include "arq/selftest.hpp"

namespace arq {

namespace {

struct CliError {
    int code;
    std::string message;
};

std::string join_args(const std::vector<std::string>& args) {
    std::string echo;
    for (const auto& a : args) {
        if (!echo.empty()) echo += ' ';
        echo += a;
    }
    return echo;
}

Field parse_field_flag(const std::string& text) {
    if (text == "Q") return Field::rationals();
    if (text.rfind("p=", 0) == 0) {
        try {
            return Field::prime_field(std::stoull(text.substr(2)));
        } catch (const std::exception&) {
            throw CliError{2, "bad field '" + text + "'"};
        }
    }
    throw CliError{2, "field must be 'Q' or 'p=PRIME'"};
}

void require_char_zero(const std::optional<Field>& flag, const std::string& command) {
    if (flag && flag->characteristic() != 0)
        throw CliError{2, command + " works in characteristic zero; drop --field or pass Q"};
}

InputDocument load_checked(const std::string& path, const std::optional<Field>& flag) {
    InputDocument doc = load_input(path);
    const Field* actual = nullptr;
    if (doc.kind == "dga") actual = &doc.dga->field();
    if (doc.kind == "dg_module") actual = &doc.module->algebra().field();
    if (doc.kind == "kt_module") actual = &doc.kt->field();
    if (flag && actual && !(*actual == *flag))
        throw CliError{2, "'" + path + "' declares field " + actual->name() +
                              ", but --field asks for " + flag->name()};
    return doc;
}

std::string label_text(const SphereIndecLabel& l) {
    return "(" + std::to_string(l.j) + "," + std::to_string(l.m) + ")";
}

std::string dim_key(int degree) { return "h(" + std::to_string(degree) + ")"; }

void report_dims(Report& rep, const std::map<int, int>& dims) {
    if (dims.empty()) {
        rep.note("cohomology vanishes");
        rep.record("total", 0);
        return;
    }
    long long total = 0;
    for (auto [g, n] : dims) {
        rep.note("H^" + std::to_string(g) + " = " + std::to_string(n));
        rep.record(dim_key(g), n);
        total += n;
    }
    rep.record("total", total);
}

int finish(Report& rep, std::ostream& out, int code) {
    out << rep.render();
    return code;
}

int run_validate(const std::string& path, const std::optional<Field>& flag, Report& rep) {
    InputDocument doc = load_checked(path, flag);
    ValidationReport check;
    if (doc.kind == "dga") check = validate_dga(*doc.dga);
    if (doc.kind == "dg_module") check = validate_module(*doc.module);
    if (doc.kind == "kt_module") check = validate_kt_module(*doc.kt);
    rep.record("kind", doc.kind);
    rep.record("valid", check.ok() ? "true" : "false");
    rep.record("violations", static_cast<long long>(check.violations.size()));
    if (check.ok()) {
        rep.note("valid " + doc.kind);
        return 0;
    }
    for (std::size_t i = 0; i < check.violations.size(); ++i) {
        rep.note("violation: " + check.violations[i]);
        rep.record("violation(" + std::to_string(i) + ")", check.violations[i]);
    }
    return 1;
}

int run_cohomology(const std::string& path, const std::optional<Field>& flag, Report& rep) {
    InputDocument doc = load_checked(path, flag);
    std::map<int, int> dims;
    if (doc.kind == "dga") dims = cohomology(*regular_module(doc.dga, Side::left)).space().dims();
    if (doc.kind == "dg_module") dims = cohomology(*doc.module).space().dims();
    if (doc.kind == "kt_module")
        dims = doc.kt->has_differential() ? kt_cohomology(*doc.kt).space().dims()
                                          : doc.kt->space().dims();
    report_dims(rep, dims);
    return 0;
}

int run_poincare(const std::string& path, const std::optional<Field>& flag,
                 std::optional<int> window, Report& rep) {
    InputDocument doc = load_checked(path, flag);
    if (doc.kind != "dga") throw CliError{2, "poincare needs a dga document"};
    PoincareReport check = poincare_check(doc.dga, window);
    int d = top_degree(doc.dga);
    bool verdict = check.ar_exists();
    if (verdict) {
        rep.note("AR triangles exist (both sides), d = " + std::to_string(d));
    } else {
        rep.note("AR triangles do not exist over this algebra");
        if (!check.unit_ok) rep.note("H^0 is not spanned by the unit");
        if (!check.top_ok) rep.note("the top cohomology is not one-dimensional");
        if (!check.left_perfect) rep.note("the pairing into degree " + std::to_string(d) +
                                          " has a left kernel");
        if (!check.right_perfect) rep.note("the pairing into degree " + std::to_string(d) +
                                           " has a right kernel");
    }
    rep.record("verdict", verdict ? "true" : "false");
    rep.record("d", d);
    rep.record("unit_ok", check.unit_ok ? "true" : "false");
    rep.record("top_ok", check.top_ok ? "true" : "false");
    rep.record("left_perfect", check.left_perfect ? "true" : "false");
    rep.record("right_perfect", check.right_perfect ? "true" : "false");
    if (check.ext_window_check)
        rep.record("ext_window_check", *check.ext_window_check ? "true" : "false");
    return verdict ? 0 : 1;
}

int run_resolve(const std::string& path, const std::optional<Field>& flag, int window,
                Report& rep) {
    InputDocument doc = load_checked(path, flag);
    if (doc.kind != "dg_module") throw CliError{2, "resolve needs a dg_module document"};
    Resolution res = minimal_resolution(doc.module, window);
    std::map<int, int> counts = res.generator_counts();
    long long total = 0;
    for (auto [g, n] : counts) total += n;
    rep.note(std::to_string(total) + " generators through stage " + std::to_string(window));
    for (auto [g, n] : counts)
        rep.note("degree " + std::to_string(g) + ": " + std::to_string(n));
    rep.note(res.minimal() ? "differential is minimal" : "differential is not minimal");
    rep.record("window", window);
    rep.record("generators", total);
    for (auto [g, n] : counts) rep.record("generators(" + std::to_string(g) + ")", n);
    rep.record("minimal", res.minimal() ? "true" : "false");
    return 0;
}

int run_ar_translate(const std::string& path, const std::optional<Field>& flag, int window,
                     Report& rep) {
    InputDocument doc = load_checked(path, flag);
    if (doc.kind != "dg_module") throw CliError{2, "ar-translate needs a dg_module document"};
    WindowedModule t = ar_translate(doc.module, window);
    if (!t.valid_to) {
        rep.note("window certifies nothing; enlarge it");
        rep.record("valid_to", "none");
        return 0;
    }
    rep.note("cohomology certified in degrees <= " + std::to_string(*t.valid_to));
    rep.record("valid_to", static_cast<long long>(*t.valid_to));
    std::map<int, int> dims = cohomology(*t.module).space().dims();
    long long total = 0;
    for (auto [g, n] : dims) {
        if (g > *t.valid_to) continue;
        rep.note("H^" + std::to_string(g) + " = " + std::to_string(n));
        rep.record(dim_key(g), n);
        total += n;
    }
    rep.record("total", total);
    return 0;
}

int run_rhom(const std::string& path_m, const std::string& path_n,
             const std::optional<Field>& flag, int window, Report& rep) {
    InputDocument dm = load_checked(path_m, flag);
    InputDocument dn = load_checked(path_n, flag);
    if (dm.kind != "dg_module" || dn.kind != "dg_module")
        throw CliError{2, "rhom needs two dg_module documents"};
    if (serialize(*dm.module->algebra_ptr()) != serialize(*dn.module->algebra_ptr()))
        throw CliError{2, "the module files use different algebras"};
    ModulePtr n = share(DGModule(dm.module->algebra_ptr(), dn.module->side(), dn.module->space(),
                                 dn.module->action(), dn.module->differential_table()));
    RhomCohomology rh = rhom_cohomology(dm.module, n, window);
    if (!rh.valid_from) {
        rep.note("window certifies nothing; enlarge it");
        rep.record("valid_from", "none");
        return 0;
    }
    rep.note("cohomology certified in degrees >= " + std::to_string(*rh.valid_from));
    rep.record("valid_from", static_cast<long long>(*rh.valid_from));
    long long total = 0;
    for (auto [g, n] : rh.dims) {
        rep.note("H^" + std::to_string(g) + " = " + std::to_string(n));
        rep.record(dim_key(g), n);
        total += n;
    }
    rep.record("total", total);
    return 0;
}

int run_kt_decompose(const std::string& path, const std::optional<Field>& flag, Report& rep) {
    InputDocument doc = load_checked(path, flag);
    if (doc.kind != "kt_module") throw CliError{2, "kt-decompose needs a kt_module document"};
    GradedKTModule target =
        doc.kt->has_differential() ? kt_cohomology(*doc.kt) : *doc.kt;
    BlockMultiset blocks = decompose(target);
    rep.note(std::to_string(blocks.block_count()) + " indecomposable summands in " +
             std::to_string(blocks.entries.size()) + " isomorphism classes");
    rep.record("summands", static_cast<long long>(blocks.block_count()));
    rep.record("classes", static_cast<long long>(blocks.entries.size()));
    rep.record("d", doc.kt->d());
    for (auto [jm, count] : blocks.entries) {
        std::string name = "Σ^" + std::to_string(jm.first) + " C_" + std::to_string(jm.second);
        rep.note(count > 1 ? name + " (" + std::to_string(count) + " copies)" : name);
        rep.record("block(" + std::to_string(jm.first) + "," + std::to_string(jm.second) + ")",
                   count);
    }
    return 0;
}

int run_sphere_triangle(int d, int j, int m, Report& rep) {
    ARTriangleLabel tri = sphere_ar_triangle({d, j, m});
    std::string middle = vertex_name(tri.middle[0]);
    for (std::size_t i = 1; i < tri.middle.size(); ++i)
        middle += " (+) " + vertex_name(tri.middle[i]);
    SphereIndecLabel shifted_left{tri.left.d, tri.left.j + 1, tri.left.m};
    rep.note(vertex_name(tri.left) + " -> " + middle + " -> " + vertex_name(tri.right) + " -> " +
             vertex_name(shifted_left));
    rep.record("d", d);
    rep.record("left", label_text(tri.left));
    rep.record("middle_count", static_cast<long long>(tri.middle.size()));
    for (std::size_t i = 0; i < tri.middle.size(); ++i)
        rep.record("middle(" + std::to_string(i) + ")", label_text(tri.middle[i]));
    rep.record("right", label_text(tri.right));
    return 0;
}

int run_sphere_verify(int d, int j, int m, std::optional<int> left_j, std::optional<int> left_m,
                      Report& rep) {
    ARTriangleLabel tri = sphere_ar_triangle({d, j, m});
    if (left_j) tri.left.j = *left_j;
    if (left_m) tri.left.m = *left_m;
    ValidationReport check = verify_ar_triangle(tri);
    rep.record("ok", check.ok() ? "true" : "false");
    rep.record("violations", static_cast<long long>(check.violations.size()));
    if (check.ok()) {
        rep.note("AR triangle verified for " + vertex_name(tri.right));
        return 0;
    }
    for (std::size_t i = 0; i < check.violations.size(); ++i) {
        rep.note("violation: " + check.violations[i]);
        rep.record("violation(" + std::to_string(i) + ")", check.violations[i]);
    }
    return 1;
}

int run_sphere_quiver(int d, int j_min, int j_max, int m_max, const std::string& dot_path,
                      Report& rep) {
    TranslationQuiver q = build_quiver(d, j_min, j_max, m_max);
    auto parts = components(q);
    rep.note("components: " + std::to_string(parts.size()));
    rep.note("vertices: " + std::to_string(q.vertices.size()) + ", arrows: " +
             std::to_string(q.arrows.size()));
    rep.record("components", static_cast<long long>(parts.size()));
    rep.record("vertices", static_cast<long long>(q.vertices.size()));
    rep.record("arrows", static_cast<long long>(q.arrows.size()));
    rep.record("translation_pairs", static_cast<long long>(q.translation.size()));
    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        out << to_dot(q);
        if (!out) throw CliError{2, "cannot write '" + dot_path + "'"};
        rep.note("wrote " + dot_path);
        rep.record("dot", dot_path);
    }
    return 0;
}

int run_endo_cohomology(int d, const std::string& range, Report& rep) {
    auto colon = range.find(':');
    int lo = 0, hi = 0;
    try {
        if (colon == std::string::npos) throw std::invalid_argument(range);
        std::size_t used_lo = 0, used_hi = 0;
        std::string lo_text = range.substr(0, colon), hi_text = range.substr(colon + 1);
        lo = std::stoi(lo_text, &used_lo);
        hi = std::stoi(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size())
            throw std::invalid_argument(range);
    } catch (const std::exception&) {
        throw CliError{2, "bad range '" + range + "', expected LO:HI"};
    }
    if (lo > hi) throw CliError{2, "bad range '" + range + "', expected LO <= HI"};
    std::map<int, int> dims = endo_dga_cohomology(Field::rationals(), d, lo, hi);
    rep.record("d", d);
    rep.record("range", std::to_string(lo) + ":" + std::to_string(hi));
    report_dims(rep, dims);
    return 0;
}

int run_selftest_command(Report& rep) {
    auto results = run_selftest();
    for (const auto& r : results) {
        rep.note(std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail);
        rep.record(r.name, r.passed ? "pass" : "fail");
    }
    bool ok = all_passed(results);
    rep.record("all_passed", ok ? "true" : "false");
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite cochain DGA toolkit"};
    app.name("arq");
    app.require_subcommand(1);

    std::string field_text;
    app.add_option("--field", field_text, "coefficient field, Q or p=PRIME");

    std::string path, path_second, dot_path, range_text;
    int window = 0, d = 0, j = 0, m = 0, j_min = 0, j_max = 0, m_max = 0;
    std::optional<int> left_j, left_m, ext_window;

    CLI::App* c_validate = app.add_subcommand("validate", "check a document against its axioms");
    c_validate->add_option("file", path, "input document")->required();

    CLI::App* c_cohomology = app.add_subcommand("cohomology", "graded cohomology dimensions");
    c_cohomology->add_option("file", path, "input document")->required();

    CLI::App* c_poincare =
        app.add_subcommand("poincare", "test for Poincare duality, hence AR triangles");
    c_poincare->alias("ar-exists");
    c_poincare->add_option("file", path, "dga document")->required();
    c_poincare->add_option("--window", ext_window, "also cross-check Ext_R(k,R) in a window");

    CLI::App* c_resolve = app.add_subcommand("resolve", "minimal semi-free resolution generators");
    c_resolve->add_option("file", path, "dg_module document")->required();
    c_resolve->add_option("--window", window, "resolution stage count")->required();

    CLI::App* c_translate = app.add_subcommand("ar-translate", "cohomology of the AR translate");
    c_translate->add_option("file", path, "dg_module document")->required();
    c_translate->add_option("--window", window, "resolution window")->required();

    CLI::App* c_rhom = app.add_subcommand("rhom", "cohomology of the derived Hom");
    c_rhom->add_option("from", path, "source dg_module document")->required();
    c_rhom->add_option("to", path_second, "target dg_module document")->required();
    c_rhom->add_option("--window", window, "resolution window")->required();

    CLI::App* c_decompose =
        app.add_subcommand("kt-decompose", "split a loop-algebra module into cyclic blocks");
    c_decompose->add_option("file", path, "kt_module document")->required();

    CLI::App* c_triangle = app.add_subcommand("sphere-triangle", "AR triangle over a sphere");
    c_triangle->add_option("--d", d, "sphere dimension")->required();
    c_triangle->add_option("--j", j, "suspension of the right term")->required();
    c_triangle->add_option("--m", m, "block length of the right term")->required();

    CLI::App* c_verify = app.add_subcommand("sphere-verify", "verify an AR triangle over a sphere");
    c_verify->add_option("--d", d, "sphere dimension")->required();
    c_verify->add_option("--j", j, "suspension of the right term")->required();
    c_verify->add_option("--m", m, "block length of the right term")->required();
    c_verify->add_option("--left-j", left_j, "override the left suspension");
    c_verify->add_option("--left-m", left_m, "override the left block length");

    CLI::App* c_quiver = app.add_subcommand("sphere-quiver", "AR quiver of a sphere in a window");
    c_quiver->add_option("--d", d, "sphere dimension")->required();
    c_quiver->add_option("--jmin", j_min, "lowest suspension")->required();
    c_quiver->add_option("--jmax", j_max, "highest suspension")->required();
    c_quiver->add_option("--mmax", m_max, "highest block length")->required();
    c_quiver->add_option("--dot", dot_path, "write the quiver in DOT form");

    CLI::App* c_endo = app.add_subcommand("endo-cohomology",
                                          "cohomology of the residue endomorphism algebra");
    c_endo->add_option("--d", d, "sphere dimension")->required();
    c_endo->add_option("--range", range_text, "degree range LO:HI")->required();

    CLI::App* c_selftest = app.add_subcommand("selftest", "run the acceptance suite");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        CLI::App* scope = &app;
        for (CLI::App* sub : app.get_subcommands()) scope = sub;
        out << scope->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Report rep;
    rep.command = join_args(args);
    try {
        std::optional<Field> flag;
        if (!field_text.empty()) flag = parse_field_flag(field_text);

        if (c_validate->parsed()) return finish(rep, out, run_validate(path, flag, rep));
        if (c_cohomology->parsed()) return finish(rep, out, run_cohomology(path, flag, rep));
        if (c_poincare->parsed())
            return finish(rep, out, run_poincare(path, flag, ext_window, rep));
        if (c_resolve->parsed()) return finish(rep, out, run_resolve(path, flag, window, rep));
        if (c_translate->parsed())
            return finish(rep, out, run_ar_translate(path, flag, window, rep));
        if (c_rhom->parsed())
            return finish(rep, out, run_rhom(path, path_second, flag, window, rep));
        if (c_decompose->parsed()) {
            require_char_zero(flag, "kt-decompose");
            return finish(rep, out, run_kt_decompose(path, flag, rep));
        }
        if (c_triangle->parsed()) {
            require_char_zero(flag, "sphere-triangle");
            return finish(rep, out, run_sphere_triangle(d, j, m, rep));
        }
        if (c_verify->parsed()) {
            require_char_zero(flag, "sphere-verify");
            return finish(rep, out, run_sphere_verify(d, j, m, left_j, left_m, rep));
        }
        if (c_quiver->parsed()) {
            require_char_zero(flag, "sphere-quiver");
            return finish(rep, out, run_sphere_quiver(d, j_min, j_max, m_max, dot_path, rep));
        }
        if (c_endo->parsed()) {
            require_char_zero(flag, "endo-cohomology");
            return finish(rep, out, run_endo_cohomology(d, range_text, rep));
        }
        if (c_selftest->parsed()) {
            require_char_zero(flag, "selftest");
            return finish(rep, out, run_selftest_command(rep));
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace arq
