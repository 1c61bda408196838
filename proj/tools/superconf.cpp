// Command-line driver. Results go to stdout as JSON; errors go to stderr as JSON
// with exit codes 2 (parse/precondition), 3 (numerical), 4 (I/O).
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superconf/acceptance.hpp"
#include "superconf/catalog.hpp"
#include "superconf/construct.hpp"
#include "superconf/error.hpp"
#include "superconf/io.hpp"
#include "superconf/minimal.hpp"
#include "superconf/moebius.hpp"
#include "superconf/parallel.hpp"

using namespace superconf;
using json = nlohmann::json;

namespace {

struct RunConfig {
    std::string curve;
    std::vector<double> domain;  // u0,u1,v0,v1
    std::vector<int> grid = {32, 32};
    std::string sign = "both";
    std::string out = ".";
    std::string project;
    std::vector<double> center = {0, 0, 0, 5};
    double radius = 1.0;
    std::string space = "sphere";
    double space_radius = 0.0;  // 0: infer from the quadric constant
    double tol_circle = 1e-8;
    double tol_H = 1e-9;
    unsigned threads = 0;
    std::string name;
    std::string export_path;
    std::string list_or_show;
};

json num(double x) { return std::isfinite(x) ? json(x) : json(io::format_double(x)); }

Rect make_rect(const std::vector<double>& d) {
    if (d.size() != 4) throw Error(ErrorKind::parse, "--domain expects u0,u1,v0,v1");
    const Rect r{d[0], d[1], d[2], d[3]};
    if (!(r.u1 > r.u0) || !(r.v1 > r.v0)) throw Error(ErrorKind::precondition, "--domain rectangle is degenerate");
    return r;
}

Grid make_grid(const RunConfig& cfg, const Rect& rect) {
    if (cfg.grid.size() != 2) throw Error(ErrorKind::parse, "--grid expects nu,nv");
    if (cfg.grid[0] < 2 || cfg.grid[1] < 2) throw Error(ErrorKind::precondition, "--grid dimensions must be >= 2");
    return Grid{rect, cfg.grid[0], cfg.grid[1]};
}

struct Resolved {
    std::string name;
    std::optional<MinimalPair> pair;
    std::optional<HolomorphicCurve> curve;
    Rect rect;
};

bool is_catalog_name(const std::string& s) {
    for (const std::string& n : catalog::names()) {
        if (n == s) return true;
    }
    return false;
}

// A catalog name or curve-expression text; 2-tuples are C² curves.
Resolved resolve(const RunConfig& cfg) {
    if (cfg.curve.empty()) throw Error(ErrorKind::precondition, "--curve is required");
    Resolved r;
    if (is_catalog_name(cfg.curve)) {
        const catalog::CatalogEntry e = catalog::get(cfg.curve);
        if (!e.pair && !e.curve) {
            throw Error(ErrorKind::precondition, "catalog entry '" + cfg.curve + "' is not a curve");
        }
        r.name = e.name;
        r.pair = e.pair;
        r.curve = e.curve;
        r.rect = cfg.domain.empty() ? e.grid : make_rect(cfg.domain);
        return r;
    }
    const Rect rect = cfg.domain.empty() ? Rect{0.2, 1.2, 0.2, 1.2} : make_rect(cfg.domain);
    HolomorphicCurve c = HolomorphicCurve::from_text(cfg.curve, Domain{rect, {}}, "curve");
    r.name = "curve";
    r.rect = rect;
    if (c.ast.declared == 2) {
        r.curve = c;
    } else {
        r.pair = MinimalPair{c, Eigen::Vector4d::Zero()};
    }
    return r;
}

const MinimalPair& need_pair(const Resolved& r) {
    if (!r.pair) throw Error(ErrorKind::precondition, "this command needs a 4-component curve");
    return *r.pair;
}

std::vector<Sign> signs(const std::string& s) {
    if (s == "plus") return {Sign::plus};
    if (s == "minus") return {Sign::minus};
    if (s == "both") return {Sign::plus, Sign::minus};
    throw Error(ErrorKind::parse, "--sign expects plus, minus or both");
}

json summary_json(const io::RowSummary& s) {
    return {{"points", s.points},
            {"flagged", s.flagged},
            {"max_res_orth", num(s.max_res_orth)},
            {"max_res_len", num(s.max_res_len)},
            {"max_wintgen_relative", num(s.max_wintgen_relative)}};
}

void print(const json& j) { std::cout << j.dump(2) << std::endl; }

int cmd_catalog(const RunConfig& cfg) {
    if (cfg.list_or_show == "list") {
        json arr = json::array();
        for (const std::string& n : catalog::names()) {
            const catalog::CatalogEntry e = catalog::get(n);
            arr.push_back({{"name", n}, {"kind", catalog::to_string(e.kind)}, {"description", e.description}});
        }
        print(arr);
        return 0;
    }
    if (cfg.list_or_show != "show") throw Error(ErrorKind::parse, "catalog expects 'list' or 'show NAME'");
    if (cfg.name.empty()) throw Error(ErrorKind::precondition, "catalog show needs a NAME");
    const catalog::CatalogEntry e = catalog::get(cfg.name);
    json j = {{"name", e.name},
              {"kind", catalog::to_string(e.kind)},
              {"description", e.description},
              {"grid", {e.grid.u0, e.grid.u1, e.grid.v0, e.grid.v1}},
              {"oracles", e.oracles}};
    std::string text;
    if (e.pair) text = e.pair->source.text();
    if (e.curve) text = e.curve->text();
    if (!text.empty()) j["expression"] = text;
    if (!cfg.export_path.empty()) {
        if (text.empty()) throw Error(ErrorKind::precondition, "entry has no curve expression to export");
        io::write_text(cfg.export_path, text + "\n");
        j["exported"] = cfg.export_path;
    }
    print(j);
    return 0;
}

int cmd_certify(const RunConfig& cfg) {
    const Resolved r = resolve(cfg);
    const Certificate c = certify(need_pair(r).source, make_grid(cfg, r.rect));
    print({{"curve", r.name},
           {"passed", c.passed},
           {"points", c.points},
           {"isotropy_max", num(c.isotropy_max)},
           {"minimality_max", num(c.minimality_max)},
           {"regularity_min", num(c.regularity_min)},
           {"conjugacy_max", num(c.conjugacy_max)}});
    return c.passed ? 0 : 3;
}

int cmd_construct(const RunConfig& cfg) {
    const Resolved r = resolve(cfg);
    const MinimalPair& pair = need_pair(r);
    const Grid grid = make_grid(cfg, r.rect);
    std::optional<io::Projection> proj;
    if (!cfg.project.empty()) proj = io::parse_projection(cfg.project);
    std::error_code ec;
    std::filesystem::create_directories(cfg.out, ec);
    if (ec) throw Error(ErrorKind::io, "cannot create output directory '" + cfg.out + "'");

    json summary = {{"curve", r.name}, {"grid", {grid.nu, grid.nv}}, {"signs", json::object()}};
    for (Sign s : signs(cfg.sign)) {
        const auto rows = io::construct_rows(pair, s, grid);
        const std::string stem = (std::filesystem::path(cfg.out) / (r.name + "_" + to_string(s))).string();
        io::write_text(stem + ".csv", io::csv_string(rows));
        const io::Mesh mesh = io::grid_mesh(rows, grid);
        io::write_text(stem + ".mesh.json", io::mesh_to_json(mesh).dump() + "\n");
        json files = {stem + ".csv", stem + ".mesh.json"};
        if (proj) {
            std::ostringstream obj;
            io::write_obj(obj, mesh, *proj);
            io::write_text(stem + ".obj", obj.str());
            files.push_back(stem + ".obj");
        }
        json js = summary_json(io::summarize(rows));
        js["files"] = files;
        summary["signs"][to_string(s)] = js;
    }
    io::write_text((std::filesystem::path(cfg.out) / (r.name + "_summary.json")).string(), summary.dump(2) + "\n");
    print(summary);
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const Resolved r = resolve(cfg);
    const MinimalPair& pair = need_pair(r);
    const Grid grid = make_grid(cfg, r.rect);
    json j = {{"curve", r.name}};
    bool ok = true;
    for (Sign s : signs(cfg.sign)) {
        const io::RowSummary sum = io::summarize(io::construct_rows(pair, s, grid));
        json js = summary_json(sum);
        const bool pass = sum.max_res_orth < cfg.tol_circle && sum.max_res_len < cfg.tol_circle &&
                          sum.max_wintgen_relative < cfg.tol_circle;
        js["superconformal"] = pass;
        ok = ok && pass;
        j["signs"][to_string(s)] = js;
    }
    double center = 0, conformal = 0, metric = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            const DualPairReport d = dual_pair_report(pair, grid.point(i));
            center = std::max({center, d.center_residual[0], d.center_residual[1]});
            conformal = std::max({conformal, d.conformal_residual[0], d.conformal_residual[1]});
            metric = std::max(metric, d.metric_relation);
            ++used;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::domain) throw;
        }
    }
    j["dual_pair"] = {{"points", used},
                      {"max_center_residual", num(center)},
                      {"max_conformal_residual", num(conformal)},
                      {"max_metric_relation", num(metric)}};
    print(j);
    return ok ? 0 : 3;
}

int cmd_invert(const RunConfig& cfg) {
    const Resolved r = resolve(cfg);
    if (cfg.center.size() != 4) throw Error(ErrorKind::parse, "--center expects four coordinates");
    const Inversion inv{Eigen::Vector4d(cfg.center[0], cfg.center[1], cfg.center[2], cfg.center[3]), cfg.radius};
    const PairTransformReport rep = pair_transform_check(need_pair(r), inv, make_grid(cfg, r.rect));
    json j = {{"curve", r.name}, {"hypothesis_violated", rep.hypothesis_violated}, {"points", rep.points},
              {"skipped", rep.skipped}};
    for (int s = 0; s < 2; ++s) {
        j["signs"][s == 0 ? "plus" : "minus"] = {
            {"sup_error_minus_im", num(rep.sup_error[s][0])},
            {"sup_error_plus_im", num(rep.sup_error[s][1])},
            {"matched_convention", rep.matched[s] == 0 ? "h~ = -Im T" : "h~ = +Im T"},
            {"sup_error", num(rep.best(s))}};
    }
    print(j);
    return rep.hypothesis_violated ? 2 : 0;
}

int cmd_dual(const RunConfig& cfg) {
    const Resolved r = resolve(cfg);
    if (!r.curve) throw Error(ErrorKind::precondition, "dual needs a C^2 curve (2-tuple)");
    const Grid grid = make_grid(cfg, r.rect);
    double anti = 0, invol = 0, conf = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const DualityResult d = duality(*r.curve, grid.point(i));
        anti = std::max(anti, d.anti_holomorphic);
        invol = std::max(invol, d.involution);
        conf = std::max(conf, d.conformality);
    }
    print({{"curve", r.name},
           {"points", grid.size()},
           {"max_anti_holomorphic", num(anti)},
           {"max_involution", num(invol)},
           {"max_conformality", num(conf)}});
    return 0;
}

int cmd_quadric(const RunConfig& cfg) {
    const Resolved r = resolve(cfg);
    const QuadricClassification q = quadric_criterion(need_pair(r), make_grid(cfg, r.rect));
    json j = {{"curve", r.name},
              {"classification", to_string(q.kind)},
              {"mean", {num(q.stats.mean.real()), num(q.stats.mean.imag())}},
              {"max_deviation", num(q.stats.max_deviation)}};
    if (q.kind == QuadricKind::real_constant) {
        j["k"] = num(q.k);
        j["inferred_R"] = num(q.inferred_R);
        j["sphere"] = {{"passes", q.sphere_passes}, {"max_H", num(q.sphere_H)}};
        j["hyperbolic"] = {{"passes", q.hyperbolic_passes}, {"max_H", num(q.hyperbolic_H)}};
    }
    print(j);
    return 0;
}

int cmd_project(const RunConfig& cfg) {
    const Resolved r = resolve(cfg);
    const MinimalPair& pair = need_pair(r);
    const Grid grid = make_grid(cfg, r.rect);
    SpaceForm space;
    if (cfg.space == "sphere") {
        space = SpaceForm::sphere;
    } else if (cfg.space == "hyperbolic") {
        space = SpaceForm::hyperbolic;
    } else {
        throw Error(ErrorKind::parse, "--space expects sphere or hyperbolic");
    }
    double R = cfg.space_radius;
    if (R <= 0.0) {
        const QuadricValue q = quadric_values(pair, grid);
        if (!is_constant(q) || std::abs(q.mean) < 1e-8) {
            throw Error(ErrorKind::precondition, "project: <<G,G>> is not a nonzero constant; pass --space-radius");
        }
        R = std::sqrt(std::abs(q.mean)) / 2.0;
    }
    json j = {{"curve", r.name}, {"space", cfg.space}, {"R", num(R)}};
    for (Sign s : signs(cfg.sign)) {
        std::vector<SurfaceJet> samples;
        std::size_t skipped = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            try {
                const PhiSample ph = build_phi(pair, s, grid.point(i));
                if (ph.flags.any()) {
                    ++skipped;
                    continue;
                }
                samples.push_back(stereo(ph.phi, R, space, StereoDirection::from_r4));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::domain) throw;
                ++skipped;
            }
        }
        const SuperminimalReport rep = superminimal_test(samples, R, space, cfg.tol_H, cfg.tol_circle);
        j["signs"][to_string(s)] = {{"points", rep.points},
                                    {"skipped", skipped},
                                    {"max_H", num(rep.max_H)},
                                    {"max_res_orth", num(rep.max_res_orth)},
                                    {"max_res_len", num(rep.max_res_len)},
                                    {"max_wintgen", num(rep.max_wintgen)},
                                    {"minimal", rep.minimal},
                                    {"superconformal", rep.superconformal},
                                    {"degenerate", rep.degenerate}};
    }
    print(j);
    return 0;
}

int cmd_selftest() {
    bool all = true;
    for (int id = 1; id <= acceptance::kCriteria; ++id) {
        const acceptance::CriterionResult r = acceptance::run(id);
        std::cout << acceptance::format(r) << std::endl;
        all = all && r.passed;
    }
    return all ? 0 : 3;
}

void error_json(const std::string& kind, const std::string& message, double magnitude) {
    json j = {{"error", kind}, {"message", message}};
    if (magnitude != 0.0) j["magnitude"] = num(magnitude);
    std::cerr << j.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superconformal surfaces in R^4 from pairs of conjugate minimal surfaces"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_curve = [&](CLI::App* c) {
        c->add_option("--curve", cfg.curve, "catalog name or curve expression, e.g. \"(cos(z), sin(z), -i*z, 0)\"")
            ->required();
        c->add_option("--domain", cfg.domain, "u0,u1,v0,v1")->delimiter(',')->expected(4);
        c->add_option("--grid", cfg.grid, "nu,nv")->delimiter(',')->expected(2);
        c->add_option("--threads", cfg.threads, "worker threads (default: SUPERCONF_THREADS or all cores)");
    };

    CLI::App* cat = app.add_subcommand("catalog", "list or show catalog entries");
    cat->add_option("action", cfg.list_or_show, "list | show")->required();
    cat->add_option("name", cfg.name, "entry name for show");
    cat->add_option("--export", cfg.export_path, "write the curve expression to this file");

    CLI::App* cert = app.add_subcommand("certify", "certify a holomorphic curve as a conjugate minimal pair");
    add_curve(cert);

    CLI::App* cons = app.add_subcommand("construct", "build phi+- over a grid; write CSV, JSON mesh, summary");
    add_curve(cons);
    cons->add_option("--sign", cfg.sign, "plus | minus | both");
    cons->add_option("--out", cfg.out, "output directory");
    cons->add_option("--project", cfg.project, "also write OBJ: drop:k | stereo | stereo:p0,p1,p2,p3");

    CLI::App* ver = app.add_subcommand("verify", "superconformality and dual-pair reports");
    add_curve(ver);
    ver->add_option("--sign", cfg.sign, "plus | minus | both");
    ver->add_option("--tol", cfg.tol_circle, "circularity / Wintgen tolerance");

    CLI::App* inv = app.add_subcommand("invert", "inversion of a pair, checked along two routes");
    add_curve(inv);
    inv->add_option("--center", cfg.center, "c0,c1,c2,c3")->delimiter(',')->expected(4);
    inv->add_option("--radius", cfg.radius, "inversion radius");

    CLI::App* dual = app.add_subcommand("dual", "duality map checks for a C^2 curve");
    add_curve(dual);

    CLI::App* quad = app.add_subcommand("quadric", "classify <<G, G>>");
    add_curve(quad);

    CLI::App* proj = app.add_subcommand("project", "lift phi+- to a space form and test superminimality");
    add_curve(proj);
    proj->add_option("--sign", cfg.sign, "plus | minus | both");
    proj->add_option("--space", cfg.space, "sphere | hyperbolic");
    proj->add_option("--space-radius", cfg.space_radius, "R (default: from the quadric constant)");
    proj->add_option("--tol-H", cfg.tol_H, "mean curvature tolerance");
    proj->add_option("--tol", cfg.tol_circle, "circularity tolerance");

    CLI::App* self = app.add_subcommand("selftest", "run the acceptance criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_json("parse", e.what(), 0.0);
        return 2;
    }

    try {
        if (cfg.threads > 0) set_thread_count(cfg.threads);
        if (*cat) return cmd_catalog(cfg);
        if (*cert) return cmd_certify(cfg);
        if (*cons) return cmd_construct(cfg);
        if (*ver) return cmd_verify(cfg);
        if (*inv) return cmd_invert(cfg);
        if (*dual) return cmd_dual(cfg);
        if (*quad) return cmd_quadric(cfg);
        if (*proj) return cmd_project(cfg);
        if (*self) return cmd_selftest();
    } catch (const expr::ParseError& e) {
        json j = {{"error", "parse"},
                  {"message", e.what()},
                  {"line", e.position().line},
                  {"column", e.position().column},
                  {"expected", e.expected()}};
        std::cerr << j.dump() << std::endl;
        return 2;
    } catch (const Error& e) {
        error_json(to_string(e.kind()), e.what(), e.magnitude());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        error_json("internal", e.what(), 0.0);
        return 3;
    }
    return 0;
}
