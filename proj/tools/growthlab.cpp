// growthlab — grow/sweep/mastereq/predictions/validate command-line driver.
//
// Config files are JSON; any flag given on the command line overrides the
// corresponding config field. Outputs are deterministic for a fixed config
// and seed, independent of the worker count (GROWTHLAB_WORKERS).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "growthlab/growth.hpp"
#include "growthlab/io.hpp"
#include "growthlab/master_eq.hpp"
#include "growthlab/parallel.hpp"
#include "growthlab/predictions.hpp"
#include "growthlab/validate.hpp"

namespace gl = growthlab;
using nlohmann::json;

namespace {

struct RunConfig {
    gl::ModelFamily family = gl::ModelFamily::QPA;
    double alpha = 1.0;
    double r = 0.0;
    std::size_t n_target = 100000;
    std::size_t replicas = 50;
    std::uint64_t seed = 1;
    std::vector<std::size_t> snapshots;  // empty -> default geometric grid
    std::string out;                     // summary JSONL; empty -> stdout
    std::string edges_out;               // per-replica parent arrays (prefix)
    std::string edges_format = "csv";    // csv | bin
    std::string hist_out;                // per-replica final histograms (prefix)
};

struct SweepPoint {
    gl::ModelFamily family;
    double alpha;
    double r;
};

struct SweepConfig {
    std::vector<SweepPoint> points;
    std::size_t n_target = 100000;
    std::size_t replicas = 50;
    std::uint64_t seed = 1;
    std::vector<std::size_t> snapshots;
    std::string out;  // CSV; empty -> stdout
};

double require_alpha(const std::string& token) {
    const auto v = gl::parse_alpha(token);
    if (!v) throw std::runtime_error("bad alpha: " + token);
    return *v;
}

gl::ModelFamily require_family(const std::string& name) {
    const auto f = gl::parse_family(name);
    if (!f) throw std::runtime_error("bad family (want qpa or cr): " + name);
    return *f;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> out;
    for (const auto& s : split_list(csv)) out.push_back(std::stoull(s));
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    return json::parse(in);
}

double alpha_from_json(const json& v) {
    if (v.is_string()) return require_alpha(v.get<std::string>());
    return v.get<double>();
}

void apply_json(RunConfig& cfg, const json& j) {
    if (j.contains("family")) cfg.family = require_family(j["family"]);
    if (j.contains("alpha")) cfg.alpha = alpha_from_json(j["alpha"]);
    if (j.contains("r")) cfg.r = j["r"].get<double>();
    if (j.contains("n_target")) cfg.n_target = j["n_target"].get<std::size_t>();
    if (j.contains("replicas")) cfg.replicas = j["replicas"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("snapshots")) cfg.snapshots = j["snapshots"].get<std::vector<std::size_t>>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("edges_out")) cfg.edges_out = j["edges_out"].get<std::string>();
    if (j.contains("edges_format")) cfg.edges_format = j["edges_format"].get<std::string>();
    if (j.contains("hist_out")) cfg.hist_out = j["hist_out"].get<std::string>();
}

void apply_json(SweepConfig& cfg, const json& j) {
    if (j.contains("points")) {
        cfg.points.clear();
        for (const auto& p : j["points"]) {
            cfg.points.push_back({require_family(p["family"]),
                                  alpha_from_json(p["alpha"]),
                                  p.value("r", 0.0)});
        }
    }
    if (j.contains("n_target")) cfg.n_target = j["n_target"].get<std::size_t>();
    if (j.contains("replicas")) cfg.replicas = j["replicas"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("snapshots")) cfg.snapshots = j["snapshots"].get<std::vector<std::size_t>>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
}

std::vector<std::size_t> normalized_snapshots(std::vector<std::size_t> snaps,
                                              std::size_t n_target) {
    if (snaps.empty()) return gl::default_snapshots(n_target);
    std::sort(snaps.begin(), snaps.end());
    snaps.erase(std::unique(snaps.begin(), snaps.end()), snaps.end());
    for (std::size_t s : snaps) {
        if (s < 2 || s > n_target) {
            throw std::runtime_error("snapshot size out of range: " + std::to_string(s));
        }
    }
    return snaps;
}

void check_params(gl::ModelFamily family, double r, std::size_t n_target,
                  std::size_t replicas) {
    if (family == gl::ModelFamily::CR && !(r >= 0.0 && r <= 1.0)) {
        throw std::runtime_error("r must lie in [0,1]");
    }
    if (n_target < 2) throw std::runtime_error("n_target must be >= 2");
    if (replicas < 1) throw std::runtime_error("replicas must be >= 1");
}

// All replicas of one (family, alpha, r) point. Replica k of point p draws
// from derived seed index p*replicas + k, so a one-point sweep reproduces
// cmd_grow exactly.
std::vector<std::vector<gl::RunSummary>> run_point(
    const gl::ModelParams& params, std::size_t n_target, std::size_t replicas,
    std::uint64_t master_seed, const std::vector<std::size_t>& snapshots,
    std::size_t point_index,
    const std::function<void(std::size_t, const gl::GrowingTree&)>& per_tree = {}) {
    std::vector<std::vector<gl::RunSummary>> results(replicas);
    gl::parallel_for_index(replicas, gl::worker_count(), [&](std::size_t k) {
        gl::GrowthRng rng(
            gl::GrowthRng::derive_seed(master_seed, point_index * replicas + k));
        gl::GrowingTree tree;
        results[k] = gl::grow_to(tree, params, n_target, rng, snapshots);
        if (per_tree) per_tree(k, tree);
    });
    return results;
}

struct Agg {
    double mean = 0.0;
    double sd = 0.0;  // sample stddev; 0 for a single replica
    std::size_t count = 0;
};

Agg aggregate(const std::vector<double>& values) {
    Agg a;
    a.count = values.size();
    if (values.empty()) return a;
    for (double v : values) a.mean += v;
    a.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - a.mean) * (v - a.mean);
        a.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return a;
}

struct SnapshotAggregates {
    std::uint64_t n = 0;
    Agg leaf_fraction, d1, d2, diameter, lead_changes, eta_cv;
};

std::vector<SnapshotAggregates> aggregate_snapshots(
    const std::vector<std::vector<gl::RunSummary>>& per_replica) {
    std::vector<SnapshotAggregates> out;
    if (per_replica.empty()) return out;
    const std::size_t n_snaps = per_replica.front().size();
    for (std::size_t s = 0; s < n_snaps; ++s) {
        SnapshotAggregates agg;
        agg.n = per_replica.front()[s].n;
        std::vector<double> leaf, d1, d2, diam, leads, eta;
        for (const auto& summaries : per_replica) {
            const auto& r = summaries[s];
            leaf.push_back(r.leaf_fraction);
            d1.push_back(r.d1);
            d2.push_back(r.d2);
            diam.push_back(r.diameter);
            leads.push_back(static_cast<double>(r.lead_changes));
            if (r.eta_cv) eta.push_back(*r.eta_cv);
        }
        agg.leaf_fraction = aggregate(leaf);
        agg.d1 = aggregate(d1);
        agg.d2 = aggregate(d2);
        agg.diameter = aggregate(diam);
        agg.lead_changes = aggregate(leads);
        agg.eta_cv = aggregate(eta);
        out.push_back(agg);
    }
    return out;
}

class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write: " + path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int cmd_grow(const RunConfig& cfg) {
    check_params(cfg.family, cfg.r, cfg.n_target, cfg.replicas);
    const auto snapshots = normalized_snapshots(cfg.snapshots, cfg.n_target);
    const gl::ModelParams params{cfg.family, cfg.alpha, cfg.r};

    auto per_tree = [&](std::size_t k, const gl::GrowingTree& tree) {
        if (!cfg.edges_out.empty()) {
            const bool binary = cfg.edges_format == "bin";
            const std::string path =
                cfg.edges_out + "_r" + std::to_string(k) + (binary ? ".bin" : ".csv");
            std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
            if (!f) throw std::runtime_error("cannot write: " + path);
            if (binary) gl::save_parents_binary(tree, f);
            else gl::save_parents_csv(tree, f);
        }
        if (!cfg.hist_out.empty()) {
            const std::string path = cfg.hist_out + "_r" + std::to_string(k) + ".csv";
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot write: " + path);
            gl::write_histogram_csv(gl::degree_histogram(tree), f);
        }
    };
    const auto results = run_point(params, cfg.n_target, cfg.replicas, cfg.seed,
                                   snapshots, 0, per_tree);

    OutputStream out(cfg.out);
    for (std::size_t k = 0; k < results.size(); ++k) {
        for (const auto& summary : results[k]) {
            out.get() << gl::summary_json(summary, params, cfg.seed, k).dump() << '\n';
        }
    }
    for (const auto& agg : aggregate_snapshots(results)) {
        json j;
        j["aggregate"] = true;
        j["model"] = gl::to_string(cfg.family);
        j["alpha"] = std::isinf(cfg.alpha) ? json(gl::format_alpha(cfg.alpha))
                                           : json(gl::round9(cfg.alpha));
        j["r"] = gl::round9(cfg.r);
        j["seed"] = cfg.seed;
        j["replicas"] = cfg.replicas;
        j["n"] = agg.n;
        json mean, sd;
        mean["leaf_fraction"] = gl::round9(agg.leaf_fraction.mean);
        sd["leaf_fraction"] = gl::round9(agg.leaf_fraction.sd);
        mean["d1"] = gl::round9(agg.d1.mean);
        sd["d1"] = gl::round9(agg.d1.sd);
        mean["d2"] = gl::round9(agg.d2.mean);
        sd["d2"] = gl::round9(agg.d2.sd);
        mean["diameter"] = gl::round9(agg.diameter.mean);
        sd["diameter"] = gl::round9(agg.diameter.sd);
        mean["lead_changes"] = gl::round9(agg.lead_changes.mean);
        sd["lead_changes"] = gl::round9(agg.lead_changes.sd);
        if (agg.eta_cv.count > 0) {
            mean["eta_cv"] = gl::round9(agg.eta_cv.mean);
            sd["eta_cv"] = gl::round9(agg.eta_cv.sd);
        } else {
            mean["eta_cv"] = nullptr;
            sd["eta_cv"] = nullptr;
        }
        j["mean"] = mean;
        j["stddev"] = sd;
        out.get() << j.dump() << '\n';
    }
    return 0;
}

int cmd_sweep(const SweepConfig& cfg) {
    if (cfg.points.empty()) throw std::runtime_error("sweep: empty point list");
    for (const auto& p : cfg.points) check_params(p.family, p.r, cfg.n_target, cfg.replicas);
    const auto snapshots = normalized_snapshots(cfg.snapshots, cfg.n_target);

    OutputStream out(cfg.out);
    out.get() << "family,alpha,r,n,metric,mean,stddev\n";
    for (std::size_t pi = 0; pi < cfg.points.size(); ++pi) {
        const auto& point = cfg.points[pi];
        const gl::ModelParams params{point.family, point.alpha, point.r};
        const auto results =
            run_point(params, cfg.n_target, cfg.replicas, cfg.seed, snapshots, pi);
        const auto aggs = aggregate_snapshots(results);

        const std::string prefix = gl::to_string(point.family) + "," +
                                   gl::format_alpha(point.alpha) + "," +
                                   gl::fmt9(point.r) + ",";
        auto row = [&](std::uint64_t n, const std::string& metric, const Agg& a) {
            if (a.count == 0) return;
            out.get() << prefix << n << ',' << metric << ',' << gl::fmt9(a.mean)
                      << ',' << gl::fmt9(a.sd) << '\n';
        };
        std::vector<std::pair<double, double>> d1_points;
        for (const auto& agg : aggs) {
            row(agg.n, "leaf_fraction", agg.leaf_fraction);
            row(agg.n, "d1", agg.d1);
            row(agg.n, "diameter", agg.diameter);
            row(agg.n, "eta_cv", agg.eta_cv);
            row(agg.n, "lead_changes", agg.lead_changes);
            d1_points.emplace_back(static_cast<double>(agg.n), agg.d1.mean);
        }
        if (d1_points.size() >= 3) {
            const auto fit = gl::scaling_exponent(d1_points);
            out.get() << prefix << cfg.n_target << ",d1_exponent,"
                      << gl::fmt9(fit.slope) << ',' << gl::fmt9(fit.std_error) << '\n';
        }
    }
    return 0;
}

int cmd_mastereq(std::size_t kmax, std::size_t lmax, const std::string& out_path,
                 const std::string& grid_path) {
    const gl::QGrid grid = gl::solve_q(kmax, lmax);
    const double mass = gl::truncation_mass(grid);
    const auto p = gl::degree_distribution(grid, std::min(kmax, lmax));

    OutputStream out(out_path);
    out.get() << "# truncation_mass = " << gl::fmt9(mass) << '\n';
    out.get() << "x,p_x\n";
    for (std::size_t x = 1; x < p.size(); ++x) {
        out.get() << x << ',' << gl::fmt9(p[x]) << '\n';
    }
    if (!grid_path.empty()) {
        std::ofstream g(grid_path);
        if (!g) throw std::runtime_error("cannot write: " + grid_path);
        g << "k,l,q\n";
        for (std::size_t k = 0; k <= grid.kmax; ++k) {
            for (std::size_t l = 0; l <= grid.lmax; ++l) {
                g << k << ',' << l << ',' << gl::fmt9(grid.at(k, l)) << '\n';
            }
        }
    }
    std::cout << "truncation_mass " << gl::fmt9(mass) << '\n';
    return 0;
}

int cmd_predictions(const std::string& alphas_csv, const std::string& rs_csv,
                    const std::string& out_path) {
    std::vector<double> alphas, rs;
    for (const auto& s : split_list(alphas_csv)) alphas.push_back(require_alpha(s));
    for (const auto& s : split_list(rs_csv)) rs.push_back(std::stod(s));

    OutputStream out(out_path);
    out.get() << "quantity,family,alpha,r,value,source\n";
    for (const auto& p : gl::prediction_table(alphas, rs)) {
        out.get() << p.quantity << ',' << gl::to_string(p.family) << ','
                  << gl::format_alpha(p.alpha) << ',' << gl::fmt9(p.r) << ','
                  << gl::fmt9(p.value) << ",\"" << p.source << "\"\n";
    }
    return 0;
}

int cmd_validate(std::uint64_t seed) {
    int failures = 0;
    for (const auto& check : gl::run_validation_suite(seed)) {
        std::cout << (check.pass ? "[ok]   " : "[FAIL] ") << check.name << ": "
                  << check.detail << '\n';
        failures += check.pass ? 0 : 1;
    }
    if (failures) std::cout << failures << " check(s) failed\n";
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"growing-tree simulator for preferential attachment with redirection"};
    app.require_subcommand(1);
    int rc = 0;

    // grow
    auto* grow = app.add_subcommand("grow", "grow replicas of one model point");
    std::string g_config, g_family, g_alpha, g_snapshots, g_out, g_edges, g_edges_fmt, g_hist;
    double g_r = 0.0;
    std::size_t g_n = 0, g_replicas = 0;
    std::uint64_t g_seed = 0;
    grow->add_option("--config", g_config, "JSON config file");
    grow->add_option("--family", g_family, "qpa | cr");
    grow->add_option("--alpha", g_alpha, "exponent: number, inf or -inf");
    grow->add_option("--r", g_r, "CR redirection probability in [0,1]");
    grow->add_option("--n", g_n, "target number of nodes");
    grow->add_option("--replicas", g_replicas, "number of replicas (default 50)");
    grow->add_option("--seed", g_seed, "master seed");
    grow->add_option("--snapshots", g_snapshots, "comma-separated snapshot sizes");
    grow->add_option("--out", g_out, "summary JSONL path (default stdout)");
    grow->add_option("--edges-out", g_edges, "parent-array path prefix, one file per replica");
    grow->add_option("--edges-format", g_edges_fmt, "csv | bin (default csv)");
    grow->add_option("--hist-out", g_hist, "final-histogram CSV path prefix");
    grow->callback([&] {
        RunConfig cfg;
        if (!g_config.empty()) apply_json(cfg, load_json(g_config));
        if (grow->count("--family")) cfg.family = require_family(g_family);
        if (grow->count("--alpha")) cfg.alpha = require_alpha(g_alpha);
        if (grow->count("--r")) cfg.r = g_r;
        if (grow->count("--n")) cfg.n_target = g_n;
        if (grow->count("--replicas")) cfg.replicas = g_replicas;
        if (grow->count("--seed")) cfg.seed = g_seed;
        if (grow->count("--snapshots")) cfg.snapshots = parse_sizes(g_snapshots);
        if (grow->count("--out")) cfg.out = g_out;
        if (grow->count("--edges-out")) cfg.edges_out = g_edges;
        if (grow->count("--edges-format")) cfg.edges_format = g_edges_fmt;
        if (grow->count("--hist-out")) cfg.hist_out = g_hist;
        rc = cmd_grow(cfg);
    });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "sweep a list of (family, alpha, r) points");
    std::string s_config, s_family = "cr", s_alphas, s_rs, s_snapshots, s_out;
    std::size_t s_n = 0, s_replicas = 0;
    std::uint64_t s_seed = 0;
    sweep->add_option("--config", s_config, "JSON config file with a points array");
    sweep->add_option("--family", s_family, "family for --alphas/--rs grid points");
    sweep->add_option("--alphas", s_alphas, "comma-separated alpha grid");
    sweep->add_option("--rs", s_rs, "comma-separated r grid");
    sweep->add_option("--n", s_n, "target number of nodes");
    sweep->add_option("--replicas", s_replicas, "replicas per point (default 50)");
    sweep->add_option("--seed", s_seed, "master seed");
    sweep->add_option("--snapshots", s_snapshots, "comma-separated snapshot sizes");
    sweep->add_option("--out", s_out, "CSV path (default stdout)");
    sweep->callback([&] {
        SweepConfig cfg;
        if (!s_config.empty()) apply_json(cfg, load_json(s_config));
        if (sweep->count("--alphas")) {
            cfg.points.clear();
            const auto family = require_family(s_family);
            std::vector<double> rs{0.0};
            if (sweep->count("--rs")) {
                rs.clear();
                for (const auto& t : split_list(s_rs)) rs.push_back(std::stod(t));
            }
            for (const auto& a : split_list(s_alphas)) {
                for (double r : rs) cfg.points.push_back({family, require_alpha(a), r});
            }
        }
        if (sweep->count("--n")) cfg.n_target = s_n;
        if (sweep->count("--replicas")) cfg.replicas = s_replicas;
        if (sweep->count("--seed")) cfg.seed = s_seed;
        if (sweep->count("--snapshots")) cfg.snapshots = parse_sizes(s_snapshots);
        if (sweep->count("--out")) cfg.out = s_out;
        rc = cmd_sweep(cfg);
    });

    // mastereq
    auto* mastereq = app.add_subcommand("mastereq", "solve the leaf/non-leaf recurrence");
    std::size_t m_kmax = gl::kQGridDefault, m_lmax = gl::kQGridDefault;
    std::string m_out, m_grid;
    mastereq->add_option("--kmax", m_kmax, "truncation in leaf neighbors (default 400)");
    mastereq->add_option("--lmax", m_lmax, "truncation in non-leaf neighbors (default 400)");
    mastereq->add_option("--out", m_out, "p_x CSV path (default stdout)");
    mastereq->add_option("--grid-out", m_grid, "raw q_{k,l} CSV path");
    mastereq->callback([&] { rc = cmd_mastereq(m_kmax, m_lmax, m_out, m_grid); });

    // predictions
    auto* pred = app.add_subcommand("predictions", "closed-form values over an (alpha, r) grid");
    std::string p_alphas = "-inf,0,1,2,inf", p_rs = "0,0.5,1", p_out;
    pred->add_option("--alphas", p_alphas, "comma-separated alpha grid");
    pred->add_option("--rs", p_rs, "comma-separated r grid");
    pred->add_option("--out", p_out, "CSV path (default stdout)");
    pred->callback([&] { rc = cmd_predictions(p_alphas, p_rs, p_out); });

    // validate
    auto* validate = app.add_subcommand("validate", "run the fast oracle self-checks");
    std::uint64_t v_seed = 20250811;
    validate->add_option("--seed", v_seed, "seed for the randomized checks");
    validate->callback([&] { rc = cmd_validate(v_seed); });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
