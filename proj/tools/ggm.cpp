// ggm: construct, verify, classify and deform nonnegatively curved graph
// metrics on lens spaces and prism manifolds.
//
// Subcommands: marking, slope, classify, equiv, build, verify, deform,
// moduli, cover, mesh, gen. All reports are deterministic: decimals print
// with 17 significant digits, JSON keys are sorted.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ggm/ggm.hpp"

namespace fs = std::filesystem;
using namespace ggm;

namespace {

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

ShapeFunction shape_by_name(const std::string& name) {
    if (name == "standard") return standard_shape();
    if (name == "flat_bump") return flat_bump_shape();
    raise(errc::invalid_parameter, "unknown shape '" + name + "' (standard, flat_bump)");
}

std::pair<Int, Int> parse_int_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        raise(errc::parse_error, "expected 'a,b', got '" + text + "'");
    try {
        return {Int(text.substr(0, comma)), Int(text.substr(comma + 1))};
    } catch (const std::exception&) {
        raise(errc::parse_error, "expected integers in '" + text + "'");
    }
}

DiskProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open '" + path + "'");
    return read_profile_csv(in);
}

ConformalDisk load_factor(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open '" + path + "'");
    return read_factor_csv(in);
}

struct Options {
    std::string input, input2, output;
    std::string shape = "standard";
    std::vector<std::string> lens, prism;
    std::string pair_b;
    long long bound = 10;
    int grid = 2048;
    int steps = 32;
    int radial = 256, angular = 256;
    int segments = 64;
    double tol_geodesic = 1e-10;
    double tol_flatness = 1e-6;
    double tol_sign = 1e-6;
    unsigned long long seed = 0;
    std::string kind = "two_sided";
    bool factors = false;
};

int run_marking(const Options& opt) {
    json in = read_json_file(opt.input);
    FlatTorus T = torus_from_json(in);
    LatticeVector v = vector_from_json(in.at("v"));
    Marking m = normalized_marking(T, v);
    MarkingParams p = marking_params(T, m);
    emit(to_json(m, p), opt.output);
    return 0;
}

int run_slope(const Options& opt) {
    GGMDescription g = description_from_json(read_json_file(opt.input));
    ClassificationResult r = classify(g);
    emit(json{{"data", to_json(r.data)}, {"class", to_json(r.slope)}}, opt.output);
    return 0;
}

int run_classify(const Options& opt) {
    GGMDescription g = description_from_json(read_json_file(opt.input));
    emit(to_json(classify(g)), opt.output);
    return 0;
}

int run_equiv(const Options& opt) {
    std::vector<SpaceForm> forms;
    for (const auto& text : opt.lens) {
        auto [p, q] = parse_int_pair(text);
        forms.push_back(lens_normalize(p, q));
    }
    for (const auto& text : opt.prism) {
        auto [m, n] = parse_int_pair(text);
        forms.push_back(PrismType(m, n));
    }
    if (forms.size() != 2)
        raise(errc::invalid_parameter, "equiv needs exactly two of --lens/--prism");
    emit(json{{"a", to_json(forms[0])},
              {"b", to_json(forms[1])},
              {"equivalent", spaceform_equivalent(forms[0], forms[1])}},
         opt.output);
    return 0;
}

int run_build(const Options& opt) {
    GGMDescription g = description_from_json(read_json_file(opt.input));
    if (opt.output.empty()) raise(errc::invalid_parameter, "build needs --output directory");
    MetricRealization mr = realize(g, shape_by_name(opt.shape), opt.grid);
    fs::create_directories(opt.output);
    json report = to_json(mr.classification);
    report["disks"] = json::array();
    for (size_t i = 0; i < mr.disks.size(); ++i) {
        std::string name = "disk" + std::to_string(i + 1) + ".csv";
        std::ofstream out(fs::path(opt.output) / name);
        write_profile_csv(mr.disks[i], out);
        json entry{{"file", name},
                   {"boundary_length", format_double(mr.disks[i].boundary_length())}};
        if (opt.factors) {
            std::string fname = "factor" + std::to_string(i + 1) + ".csv";
            ConformalDisk cd = standard_factor(mr.disks[i], opt.radial, opt.angular);
            std::ofstream fout(fs::path(opt.output) / fname);
            write_factor_csv(cd, fout);
            entry["factor_file"] = fname;
        }
        report["disks"].push_back(entry);
    }
    emit(report, (fs::path(opt.output) / "report.json").string());
    return 0;
}

int run_verify(const Options& opt) {
    DiskProfile d = load_profile(opt.input);
    DiskTolerances tol;
    tol.geodesic = opt.tol_geodesic;
    tol.flatness = opt.tol_flatness;
    emit(to_json(verify(d, tol)), opt.output);
    return 0;
}

int run_deform(const Options& opt) {
    ConformalDisk u0 = load_factor(opt.input);
    ConformalDisk u = load_factor(opt.input2);
    if (opt.output.empty()) raise(errc::invalid_parameter, "deform needs --output directory");
    IsotopyPath path = deform(u, u0, opt.steps, opt.tol_sign);
    fs::create_directories(opt.output);
    json manifest{{"steps", opt.steps},
                  {"boundary_length", format_double(path.boundary_length)},
                  {"members", json::array()}};
    for (size_t i = 0; i < path.members.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "step_%03zu.csv", i);
        std::ofstream out(fs::path(opt.output) / name);
        write_factor_csv(path.members[i], out);
        manifest["members"].push_back(json{{"file", name},
                                           {"s", format_double(path.s[i])},
                                           {"a", format_double(path.a[i])}});
    }
    emit(manifest, (fs::path(opt.output) / "manifest.json").string());
    return 0;
}

int run_moduli(const Options& opt) {
    if (!opt.lens.empty() && opt.prism.empty()) {
        auto [p, q] = parse_int_pair(opt.lens.front());
        LensType L = lens_normalize(p, q);
        auto comps = enumerate_lens_components(L, Int(opt.bound));
        json out{{"lens", to_json(SpaceForm(L))},
                 {"bound", opt.bound},
                 {"count", comps.size()},
                 {"components", json::array()}};
        for (const auto& c : comps) {
            json entry = to_json(c.id);
            entry["witness_description"] = to_json(GGMDescription(c.witness));
            out["components"].push_back(entry);
        }
        emit(out, opt.output);
        return 0;
    }
    if (!opt.prism.empty() && opt.lens.empty()) {
        auto [m, n] = parse_int_pair(opt.prism.front());
        PrismModuliReport rep = prism_component_count(PrismType(m, n));
        json out{{"prism", to_json(SpaceForm(PrismType(m, n)))},
                 {"prism_type_components", rep.prism_type_components},
                 {"lens_type", rep.lens_type_infinite ? "infinite" : "none"}};
        if (rep.lens_form) out["lens_form"] = to_json(SpaceForm(*rep.lens_form));
        emit(out, opt.output);
        return 0;
    }
    raise(errc::invalid_parameter, "moduli needs exactly one of --lens or --prism");
}

int run_cover(const Options& opt) {
    GGMDescription g = description_from_json(read_json_file(opt.input));
    if (!std::holds_alternative<OneSided>(g))
        raise(errc::invalid_parameter, "cover takes a one_sided description");
    TwoSided cover = double_cover(std::get<OneSided>(g));
    emit(json{{"cover", to_json(GGMDescription(cover))},
              {"classification", to_json(classify(GGMDescription(cover)))}},
         opt.output);
    return 0;
}

int run_mesh(const Options& opt) {
    DiskProfile d = load_profile(opt.input);
    if (opt.output.empty()) raise(errc::invalid_parameter, "mesh needs --output file");
    std::ofstream out(opt.output);
    if (!out) raise(errc::io_error, "cannot write '" + opt.output + "'");
    write_obj(d, opt.segments, out);
    return 0;
}

int run_gen(const Options& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long long> entry(-6, 6);
    std::uniform_int_distribution<long long> small(1, 6);
    auto primitive = [&](bool positive) {
        for (;;) {
            LatticeVector v = positive ? LatticeVector(small(rng), small(rng))
                                       : LatticeVector(entry(rng), entry(rng));
            if (v.is_primitive() && v.x != 0 && v.y != 0) return v;
        }
    };
    GGMDescription g = OneSided{Rational(1), Rational(1), {1, 1}, 0.0};
    if (opt.kind == "two_sided") {
        for (;;) {
            Rational g11(small(rng), small(rng)), g22(small(rng), small(rng));
            Rational g12(entry(rng), 2 * small(rng));
            if (!(g12 * g12 < g11 * g22)) continue;
            LatticeVector f1 = primitive(false), f2 = primitive(false);
            if (det2(f1, f2) == 0) continue;
            g = TwoSided{FlatTorus(GramMatrix(g11, g12, g22)), f1, f2, 0.0};
            break;
        }
    } else if (opt.kind == "one_sided") {
        g = OneSided{Rational(small(rng)), Rational(small(rng)), primitive(true), 0.0};
    } else {
        raise(errc::invalid_parameter, "unknown kind '" + opt.kind + "'");
    }
    require_valid(g);
    emit(to_json(g), opt.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric graph 3-manifold metrics: build, verify, classify, deform"};
    app.require_subcommand(1);
    Options opt;

    auto* marking = app.add_subcommand("marking", "normalized marking of a lattice vector");
    marking->add_option("-i,--input", opt.input, "torus + vector JSON")->required();
    marking->add_option("-o,--output", opt.output, "output file (default stdout)");

    auto* slope = app.add_subcommand("slope", "slope data and class of a description");
    slope->add_option("-i,--input", opt.input, "description JSON")->required();
    slope->add_option("-o,--output", opt.output);

    auto* classify_cmd = app.add_subcommand("classify", "space form and slope of a description");
    classify_cmd->add_option("-i,--input", opt.input, "description JSON")->required();
    classify_cmd->add_option("-o,--output", opt.output);

    auto* equiv = app.add_subcommand("equiv", "diffeomorphism equivalence of two space forms");
    equiv->add_option("--lens", opt.lens, "lens space as p,q (repeatable)");
    equiv->add_option("--prism", opt.prism, "prism manifold as m,n (repeatable)");
    equiv->add_option("-o,--output", opt.output);

    auto* build = app.add_subcommand("build", "cylinder parameters and disk profiles");
    build->add_option("-i,--input", opt.input, "description JSON")->required();
    build->add_option("-o,--output", opt.output, "output directory")->required();
    build->add_option("--grid", opt.grid, "profile grid intervals (default 2048)");
    build->add_option("--shape", opt.shape, "disk shape: standard | flat_bump");
    build->add_flag("--factors", opt.factors, "also emit conformal factor CSVs");
    build->add_option("--radial", opt.radial, "factor radial grid (default 256)");
    build->add_option("--angular", opt.angular, "factor angular grid (default 256)");

    auto* verify_cmd = app.add_subcommand("verify", "curvature report for a profile CSV");
    verify_cmd->add_option("-i,--input", opt.input, "profile CSV")->required();
    verify_cmd->add_option("-o,--output", opt.output);
    verify_cmd->add_option("--tol-geodesic", opt.tol_geodesic, "geodesic defect tolerance");
    verify_cmd->add_option("--tol-flatness", opt.tol_flatness, "flatness tolerance");

    auto* deform_cmd = app.add_subcommand("deform", "isotopy path between two factor CSVs");
    deform_cmd->add_option("--initial", opt.input, "base factor CSV (path starts here)")
        ->required();
    deform_cmd->add_option("--target", opt.input2, "target factor CSV")->required();
    deform_cmd->add_option("-o,--output", opt.output, "output directory")->required();
    deform_cmd->add_option("--steps", opt.steps, "number of steps (default 32)");
    deform_cmd->add_option("--tol-sign", opt.tol_sign, "curvature sign tolerance");

    auto* moduli_cmd = app.add_subcommand("moduli", "moduli components of a space form");
    moduli_cmd->add_option("--lens", opt.lens, "lens space as p,q");
    moduli_cmd->add_option("--prism", opt.prism, "prism manifold as m,n");
    moduli_cmd->add_option("--bound", opt.bound, "numerator bound (default 10)");
    moduli_cmd->add_option("-o,--output", opt.output);

    auto* cover = app.add_subcommand("cover", "orientation double cover of a one-sided metric");
    cover->add_option("-i,--input", opt.input, "one_sided description JSON")->required();
    cover->add_option("-o,--output", opt.output);

    auto* mesh = app.add_subcommand("mesh", "OBJ surface of revolution from a profile CSV");
    mesh->add_option("-i,--input", opt.input, "profile CSV")->required();
    mesh->add_option("-o,--output", opt.output, "OBJ file")->required();
    mesh->add_option("--segments", opt.segments, "angular segments (default 64)");

    auto* gen = app.add_subcommand("gen", "random valid description for property testing");
    gen->add_option("--seed", opt.seed, "PRNG seed (default 0)");
    gen->add_option("--kind", opt.kind, "two_sided | one_sided");
    gen->add_option("-o,--output", opt.output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (marking->parsed()) return run_marking(opt);
        if (slope->parsed()) return run_slope(opt);
        if (classify_cmd->parsed()) return run_classify(opt);
        if (equiv->parsed()) return run_equiv(opt);
        if (build->parsed()) return run_build(opt);
        if (verify_cmd->parsed()) return run_verify(opt);
        if (deform_cmd->parsed()) return run_deform(opt);
        if (moduli_cmd->parsed()) return run_moduli(opt);
        if (cover->parsed()) return run_cover(opt);
        if (mesh->parsed()) return run_mesh(opt);
        if (gen->parsed()) return run_gen(opt);
    } catch (const error& e) {
        std::cerr << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return is_validation_error(e.code()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return 1;
}
