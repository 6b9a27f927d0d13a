// tropsand: relax | analyze | render | verify
//
// exit codes: 0 ok, 1 verify found a failing check, 2 config/validation, 3 toppling ceiling hit, 4 I/O

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropsand/config.hpp"
#include "tropsand/deviation.hpp"
#include "tropsand/grid_io.hpp"
#include "tropsand/least_action.hpp"
#include "tropsand/relax.hpp"
#include "tropsand/render.hpp"
#include "tropsand/sweep.hpp"
#include "tropsand/tropical_json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tropsand;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kConfig = 2, kNonTermination = 3, kIo = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "0.01" or "1/64" is absolute, "3/N" or "0.25/N" is a multiple of the site spacing
struct ScaledValue {
    Rational value{0};
    bool per_site = false;
};

ScaledValue parse_scaled(const std::string& text) {
    ScaledValue out;
    std::string s = text;
    if (s.size() > 2 && (s.ends_with("/N") || s.ends_with("/n"))) {
        out.per_site = true;
        s.resize(s.size() - 2);
    }
    try {
        out.value = parse_rational(s);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse '" + text + "' as a number, fraction or k/N");
    }
    if (out.value <= Rational(0)) throw ConfigError("'" + text + "' must be positive");
    return out;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

void write_json(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

struct Loaded {
    DomainConfig config;
    json raw;
};

Loaded load_config(const std::string& path) {
    json raw = read_json(path);
    return {parse_domain_config(raw), raw};
}

// flags override the optional keys of the config document
template <class T>
std::optional<T> config_value(const json& raw, const char* key) {
    if (!raw.contains(key)) return std::nullopt;
    try {
        return raw.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config key \"") + key + "\" has the wrong type");
    }
}

std::optional<std::string> scaled_text(const json& raw, const char* key) {
    if (!raw.contains(key)) return std::nullopt;
    const auto& v = raw.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    throw ConfigError(std::string("config key \"") + key + "\" must be a number or string");
}

// ---------------------------------------------------------------- relax

struct RelaxArgs {
    std::string config;
    std::string out = ".";
    std::optional<std::int64_t> ceiling;
    std::int64_t snapshot_every = 0;
};

int cmd_relax(const RelaxArgs& a) {
    const auto loaded = load_config(a.config);
    const auto& cfg = loaded.config;
    if (cfg.scales.size() != 1) throw ConfigError("relax needs exactly one scale");
    const auto scale = cfg.scales.front();

    auto domain = make_domain(cfg.polygon, scale);
    for (const auto& w : cfg.perturbation.collisions(*domain)) std::cerr << "warning: " << w << '\n';
    const auto initial = perturb(max_stable(domain), cfg.perturbation);

    const fs::path out(a.out);
    ensure_dir(out);
    RelaxOptions opts;
    opts.ceiling = a.ceiling.value_or(config_value<std::int64_t>(loaded.raw, "ceiling").value_or(opts.ceiling));
    std::size_t snapshots = 0;
    if (a.snapshot_every > 0) {
        opts.snapshot_every = a.snapshot_every;
        opts.on_snapshot = [&](const SandState& s, std::int64_t) {
            char name[32];
            std::snprintf(name, sizeof name, "snapshot_%05zu.grid", snapshots++);
            write_grid_file((out / name).string(), s);
        };
    }

    const auto t0 = std::chrono::steady_clock::now();
    const auto result = relax_queue(initial, opts);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_grid_file((out / "final.grid").string(), result.final);
    write_grid_file((out / "odometer.grid").string(), result.odometer);
    json stats{{"N", scale},
               {"sites", domain->size()},
               {"topplings_total", result.topplings_total},
               {"grains_lost", result.grains_lost},
               {"runtime", seconds},
               {"snapshots", snapshots}};
    json sites = json::array();
    for (const auto& v : cfg.perturbation.rounded_sites(*domain))
        sites.push_back({{"site", {v.x, v.y}}, {"final_height", result.final.at(v)}, {"topplings", result.odometer.at(v)}});
    stats["perturbation_sites"] = sites;
    write_json(out / "stats.json", stats);
    std::cout << "relaxed N=" << scale << ": " << result.topplings_total << " topplings, " << result.grains_lost
              << " grains lost, " << seconds << " s\n";
    return kOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string config;
    std::string out = ".";
    std::size_t jobs = 1;
    std::optional<std::string> strip_halfwidth;
    std::optional<std::string> probe_step;
    std::optional<std::int64_t> ceiling;
    bool no_probe = false;
    bool keep_grids = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
    const auto loaded = load_config(a.config);
    const auto& cfg = loaded.config;
    if (cfg.scales.empty()) throw ConfigError("config has no scale");
    auto scales = cfg.scales;
    std::sort(scales.begin(), scales.end());
    if (std::adjacent_find(scales.begin(), scales.end()) != scales.end()) throw ConfigError("repeated scale");

    SweepOptions opts;
    opts.jobs = std::max<std::size_t>(1, a.jobs);
    opts.run_probe = !a.no_probe;
    opts.ceiling = a.ceiling.value_or(config_value<std::int64_t>(loaded.raw, "ceiling").value_or(opts.ceiling));
    if (auto t = a.strip_halfwidth ? a.strip_halfwidth : scaled_text(loaded.raw, "strip_halfwidth")) {
        const auto v = parse_scaled(*t);
        if (v.per_site) opts.strip_halfwidth_sites = to_double(v.value);
        else opts.strip_halfwidth = to_double(v.value);
    }
    if (auto t = a.probe_step ? a.probe_step : scaled_text(loaded.raw, "probe_step")) {
        const auto v = parse_scaled(*t);
        if (v.per_site) opts.probe_step_sites = v.value;
        else opts.probe_step = v.value;
    }

    const fs::path out(a.out);
    ensure_dir(out);
    std::mutex io;
    if (a.keep_grids) {
        opts.on_relaxed = [&](std::int64_t n, const RelaxationResult& r) {
            const fs::path dir = out / ("N" + std::to_string(n));
            std::lock_guard lock(io);
            ensure_dir(dir);
            write_grid_file((dir / "final.grid").string(), r.final);
            write_grid_file((dir / "odometer.grid").string(), r.odometer);
        };
    }

    const auto report = convergence_sweep(cfg.polygon, cfg.perturbation.points(), scales, opts);
    write_json(out / "report.json", to_json(report));
    bool ceiling_hit = false;
    for (const auto& r : report.records) {
        const fs::path dir = out / ("N" + std::to_string(r.scale));
        ensure_dir(dir);
        if (r.fitted) write_json(dir / "fitted_polynomial.json", to_json(*r.fitted));
        if (r.polynomial) write_json(dir / "polynomial.json", to_json(*r.polynomial));
        if (r.curve) write_json(dir / "curve.json", to_json(*r.curve));
        if (r.weights) write_json(dir / "weights.json", to_json(*r.weights));

        std::cout << "N=" << r.scale << (r.ok ? " ok" : " FAILED at " + r.failed_stage + ": " + r.error);
        if (r.hausdorff_to_next) std::cout << "  hausdorff_to_next=" << *r.hausdorff_to_next;
        if (r.sup_odometer_gap) std::cout << "  sup_gap=" << *r.sup_odometer_gap;
        if (r.weights) {
            std::cout << "  weights=[";
            for (std::size_t i = 0; i < r.weights->entries.size(); ++i)
                std::cout << (i ? " " : "") << r.weights->entries[i].rounded << (r.weights->entries[i].flagged ? "?" : "");
            std::cout << "]";
        }
        if (r.minimality) std::cout << "  minimality=" << (r.minimality->ok() ? "pass" : "fail");
        std::cout << '\n';
        if (r.failed_stage == "relax" && r.error.find("ceiling") != std::string::npos) ceiling_hit = true;
    }
    if (report.any_success()) return kOk;
    return ceiling_hit ? kNonTermination : kConfig;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string grid;
    std::optional<std::string> config;
    std::string out = ".";
    std::string palette = "mono";
    std::optional<std::string> curve;
    std::optional<std::string> weights;
    int cell = 0;
    int margin = 2;
};

TropicalCurve load_curve(const std::string& path) {
    const json j = read_json(path);
    try {
        // accepts a bare curve or an omega curve document
        return curve_from_json(j.contains("curve") ? j.at("curve") : j);
    } catch (const std::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

int cmd_render(const RenderArgs& a) {
    std::ifstream probe(a.grid, std::ios::binary);
    if (!probe) throw IoError("cannot open " + a.grid);
    probe.close();
    const auto grid = read_grid_file(a.grid);
    if (grid.kind != GridKind::Heights) throw ConfigError(a.grid + " holds an odometer, not heights");
    if (a.config) {
        const auto loaded = load_config(*a.config);
        if (!(loaded.config.polygon == grid.domain->polygon()))
            throw ConfigError("grid polygon differs from the config polygon");
    }

    RenderOptions opts;
    opts.palette = parse_palette(a.palette);
    opts.cell = a.cell;
    opts.margin = a.margin;
    if (a.curve) opts.overlay = load_curve(*a.curve);
    if (a.weights) {
        try {
            opts.weights = weight_table_from_json(read_json(*a.weights));
        } catch (const json::exception& e) {
            throw ConfigError(*a.weights + ": " + e.what());
        }
    }

    const auto state = grid.as_state();
    const fs::path out(a.out);
    ensure_dir(out);
    const std::string stem = fs::path(a.grid).stem().string();

    RenderSummary summary;
    {
        std::ofstream ppm(out / (stem + ".ppm"), std::ios::binary);
        if (!ppm) throw IoError("cannot write " + (out / (stem + ".ppm")).string());
        write_ppm(ppm, render_raster(state, opts, &summary));
    }
    {
        std::ofstream svg(out / (stem + ".svg"));
        if (!svg) throw IoError("cannot write " + (out / (stem + ".svg")).string());
        svg << render_svg(state, opts);
    }
    std::cout << "rendered " << summary.width_cells << "x" << summary.height_cells << " cells at " << summary.cell
              << " px: crosses=" << summary.marks[0] << " circles=" << summary.marks[1] << " squares=" << summary.marks[2]
              << " discs=" << summary.marks[4];
    if (!summary.labels.empty()) std::cout << " labels=" << summary.labels.size();
    std::cout << '\n';
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string config;
    std::int64_t naive_limit = 20000;
};

int cmd_verify(const VerifyArgs& a) {
    const auto loaded = load_config(a.config);
    const auto& cfg = loaded.config;
    if (cfg.scales.empty()) throw ConfigError("config has no scale");
    bool all = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail = "") {
        all = all && pass;
        std::cout << (pass ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : "  (" + detail + ")") << '\n';
    };

    for (auto scale : cfg.scales) {
        const std::string tag = "N=" + std::to_string(scale) + " ";
        auto domain = make_domain(cfg.polygon, scale);
        const auto initial = perturb(max_stable(domain), cfg.perturbation);
        const auto queued = relax_queue(initial);

        if (static_cast<std::int64_t>(domain->size()) <= a.naive_limit) {
            const auto naive = relax_naive(initial);
            report(tag + "abelian: naive and queue relaxations agree",
                   naive.final == queued.final && naive.odometer == queued.odometer);
        } else {
            std::cout << "SKIP " << tag << "abelian: " << domain->size() << " sites above --naive-limit\n";
        }

        const auto la = verify_least_action(initial, queued);
        report(tag + "least action: final = initial + Laplacian(F), stable, minimal", la.ok(),
               std::to_string(la.identity_failures.size()) + " identity / " + std::to_string(la.probe_failures.size()) +
                   " probe failures");

        report(tag + "grains: added = final - initial + lost",
               queued.final.total() - initial.total() + queued.grains_lost == 0);

        std::stringstream buf;
        write_grid(buf, queued.final);
        const auto back = read_grid(buf);
        report(tag + "grid round trip", std::ranges::equal(back.values, queued.final.values()));
    }

    SweepOptions opts;
    auto scales = cfg.scales;
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    const auto sweep = convergence_sweep(cfg.polygon, cfg.perturbation.points(), scales, opts);
    for (const auto& r : sweep.records) {
        const std::string tag = "N=" + std::to_string(r.scale) + " ";
        if (!r.ok) {
            report(tag + "analysis pipeline", false, r.failed_stage + ": " + r.error);
            continue;
        }
        report(tag + "fitted curve balanced at interior vertices", r.balancing_ok);
        report(tag + "side labels are positive integers", r.curve.has_value());
        if (r.locus_to_curve)
            report(tag + "interior locus within 3/N of the fitted curve", *r.locus_to_curve <= 3.0 / static_cast<double>(r.scale) + 1e-12,
                   std::to_string(*r.locus_to_curve * static_cast<double>(r.scale)) + "/N");
        if (r.minimality) {
            bool lowering = true;
            for (const auto& p : r.minimality->probes) lowering = lowering && p.lower_breaks();
            report(tag + "no coefficient can be lowered admissibly", r.minimality->precondition && lowering);
        }
        if (r.area_check) report(tag + "area no larger than enumerated alternatives", r.area_check->consistent());
    }
    return all ? kOk : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sandpile relaxation and tropical scaling-limit diagnostics"};
    app.require_subcommand(1);

    RelaxArgs relax;
    auto* r = app.add_subcommand("relax", "relax 3 + sum of deltas on one scale; write final and odometer grids");
    r->add_option("--config", relax.config, "config JSON")->required();
    r->add_option("--out", relax.out, "output directory");
    r->add_option("--ceiling", relax.ceiling, "abort after this many topplings");
    r->add_option("--snapshot-every", relax.snapshot_every, "dump the heights every this many topplings");

    AnalyzeArgs analyze;
    auto* an = app.add_subcommand("analyze", "convergence sweep over the config's scales");
    an->add_option("--config", analyze.config, "config JSON")->required();
    an->add_option("--out", analyze.out, "output directory");
    an->add_option("--jobs", analyze.jobs, "scales processed concurrently");
    an->add_option("--strip-halfwidth", analyze.strip_halfwidth, "absolute, or k/N (default 3/N)");
    an->add_option("--probe-step", analyze.probe_step, "absolute, or k/N (default 0.25/N)");
    an->add_option("--ceiling", analyze.ceiling, "abort a scale after this many topplings");
    an->add_flag("--no-probe", analyze.no_probe, "skip minimality and area checks");
    an->add_flag("--keep-grids", analyze.keep_grids, "write final and odometer grids per scale");

    RenderArgs render;
    auto* re = app.add_subcommand("render", "draw a height grid with the height legend (PPM + SVG)");
    re->add_option("grid", render.grid, "binary height grid")->required();
    re->add_option("--config", render.config, "config JSON, checked against the grid");
    re->add_option("--out", render.out, "output directory");
    re->add_option("--palette", render.palette, "mono or color");
    re->add_option("--curve", render.curve, "curve JSON to overlay");
    re->add_option("--weights", render.weights, "weight table JSON for the overlay labels");
    re->add_option("--cell", render.cell, "pixels per site (0: automatic)");
    re->add_option("--margin", render.margin, "empty cells around the domain");

    VerifyArgs verify;
    auto* ve = app.add_subcommand("verify", "run the property checks on a config");
    ve->add_option("--config", verify.config, "config JSON")->required();
    ve->add_option("--naive-limit", verify.naive_limit, "largest site count for the reference relaxer");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (*r) return cmd_relax(relax);
        if (*an) return cmd_analyze(analyze);
        if (*re) return cmd_render(render);
        if (*ve) return cmd_verify(verify);
    } catch (const GridIoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const SandpileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == SandpileError::Kind::NonTermination ? kNonTermination : kConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        // lattice, config, grid format and tropical errors
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    }
    return kConfig;
}
