// Command-line front door: every subcommand is deterministic given its flags
// and seed, and embeds the run configuration in its output.
//
// Exit codes: 0 success, 2 usage error, 3 numerical non-convergence,
// 4 oracle mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosep/asymptotics.hpp"
#include "cosep/brownian.hpp"
#include "cosep/cotree.hpp"
#include "cosep/enumeration.hpp"
#include "cosep/errors.hpp"
#include "cosep/float_series.hpp"
#include "cosep/oracle.hpp"
#include "cosep/samplers.hpp"
#include "cosep/schroder.hpp"
#include "cosep/statistics.hpp"

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string json_to_csv_cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    std::ostringstream os;
    if (v.is_number_float()) {
        os.precision(17);
        os << v.get<double>();
        return os.str();
    }
    return v.dump();
}

void emit_table(std::ostream& os, const std::string& format,
                const std::vector<std::pair<std::string, std::string>>& config,
                const Table& table) {
    if (format == "json") {
        json out;
        out["schema_version"] = kSchemaVersion;
        json cfg = json::object();
        for (const auto& [k, v] : config) cfg[k] = v;
        out["config"] = cfg;
        out["columns"] = table.columns;
        json rows = json::array();
        for (const auto& row : table.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
            rows.push_back(obj);
        }
        out["rows"] = rows;
        os << out.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : config) os << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ",";
        os << table.columns[i];
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << json_to_csv_cell(row[i]);
        }
        os << "\n";
    }
}

struct OutputTarget {
    std::string path;  // empty = stdout
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file " + path);
        }
        return file;
    }
};

std::vector<double> parse_grid(const std::string& spec) {
    double a, b, step;
    char c1, c2;
    std::istringstream is(spec);
    if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
        throw CLI::ValidationError("--grid", "expected a:b:step with step > 0");
    std::vector<double> grid;
    for (double x = a; x <= b + 1e-12; x += step) grid.push_back(x);
    return grid;
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// ----------------------------------------------------------------- commands

int cmd_count(const std::string& model, int n_max, const std::string& format, OutputTarget& out) {
    Table t;
    t.columns = {"n", "count"};
    for (int n = 1; n <= n_max; ++n) {
        mpz_class c = model == "cograph" ? cosep::count_labeled_cographs(n)
                                         : cosep::count_separable(n);
        t.rows.push_back({n, json(c.get_str())});
    }
    emit_table(out.stream(), format, {{"command", "count"}, {"model", model},
                                      {"n_max", std::to_string(n_max)}}, t);
    return 0;
}

int cmd_sample(const std::string& model, std::vector<int> sizes, int reps, std::uint64_t seed,
               bool emit_objects, const std::string& format, OutputTarget& out) {
    std::vector<double> quantile_ps = {0.1, 0.25, 0.5, 0.75, 0.9};
    cosep::CountTables tables;
    cosep::MonteCarloResult res =
        model == "cograph" ? cosep::monte_carlo_alpha(sizes, reps, quantile_ps, seed, tables)
                           : cosep::monte_carlo_lis(sizes, reps, quantile_ps, seed, tables);
    bool cograph = model == "cograph";
    Table t;
    t.columns = cograph ? std::vector<std::string>{"n", "rep", "alpha", "omega", "alpha_over_n"}
                        : std::vector<std::string>{"n", "rep", "lis", "lds", "lis_over_n"};
    if (emit_objects) t.columns.push_back("object");
    for (std::size_t si = 0; si < sizes.size(); ++si)
        for (int rep = 0; rep < reps; ++rep) {
            const auto& s = res.samples[si * reps + rep];
            std::vector<json> row = {s.n, s.rep, s.stat, s.dual_stat,
                                     static_cast<double>(s.stat) / s.n};
            if (emit_objects) {
                cosep::RandomSource rng(cosep::RandomSource::mix(
                    seed, static_cast<std::uint64_t>(s.n), static_cast<std::uint64_t>(rep)));
                row.push_back(cograph
                                  ? cosep::sample_cotree(s.n, rng, tables).to_text()
                                  : cosep::sample_separable(s.n, rng, tables).to_text());
            }
            t.rows.push_back(std::move(row));
        }
    Table summary;
    summary.columns = {"n", "mean", "median", "q0.1", "q0.25", "q0.5", "q0.75", "q0.9",
                       "sqrt_bound_ok"};
    for (const auto& s : res.summaries) {
        std::vector<json> row = {s.n, s.mean, s.median};
        for (const auto& [p, v] : s.quantiles) row.push_back(v);
        row.push_back(s.sqrt_bound_ok ? 1 : 0);
        summary.rows.push_back(std::move(row));
    }
    std::vector<std::pair<std::string, std::string>> cfg = {
        {"command", "sample"}, {"model", model}, {"reps", std::to_string(reps)},
        {"seed", std::to_string(seed)}};
    emit_table(out.stream(), format, cfg, t);
    cfg[0].second = "sample-summary";
    emit_table(out.stream(), format, cfg, summary);
    return 0;
}

int cmd_expect(const std::string& model, int n, int k_lo, int k_hi, int trunc, int float_trunc,
               const std::string& format, OutputTarget& out) {
    Table t;
    t.columns = {"n", "k", "numerator", "denominator", "float"};
    if (n > float_trunc && n > trunc)
        throw cosep::TruncationExceeded("expect: n exceeds both --trunc and --float-trunc");
    bool exact = n <= trunc;
    if (model == "cograph") {
        std::optional<cosep::CographSeries> cs;
        std::optional<cosep::FloatCographSeries> fs;
        if (exact) cs = cosep::solve_cograph_series(std::min(trunc, std::max(n, 1)));
        else fs = cosep::solve_cograph_series_float(n);
        for (int k = k_lo; k <= k_hi; ++k) {
            if (exact) {
                mpq_class v = cosep::expected_X(*cs, n, k);
                t.rows.push_back({n, k, v.get_num().get_str(), v.get_den().get_str(),
                                  v.get_d()});
            } else {
                t.rows.push_back({n, k, "", "", cosep::float_expected_X(*fs, n, k)});
            }
        }
    } else {
        std::optional<cosep::SeparableSeries> ss;
        std::optional<cosep::FloatSeparableSeries> fs;
        if (exact) ss = cosep::solve_separable_series(std::min(trunc, std::max(n, 1)));
        else fs = cosep::solve_separable_series_float(n);
        for (int k = k_lo; k <= k_hi; ++k) {
            if (exact) {
                mpq_class v = cosep::expected_Z(*ss, n, k);
                t.rows.push_back({n, k, v.get_num().get_str(), v.get_den().get_str(),
                                  v.get_d()});
            } else {
                t.rows.push_back({n, k, "", "", cosep::float_expected_Z(*fs, n, k)});
            }
        }
    }
    emit_table(out.stream(), format,
               {{"command", "expect"}, {"model", model}, {"n", std::to_string(n)},
                {"trunc", std::to_string(trunc)}, {"float_trunc", std::to_string(float_trunc)}},
               t);
    return 0;
}

int cmd_curve(const std::string& model, const std::string& grid_spec, const std::string& format,
              OutputTarget& out) {
    std::vector<double> grid = parse_grid(grid_spec);
    auto pts = cosep::asymptotics::curve(model == "cograph"
                                             ? cosep::asymptotics::Model::cograph
                                             : cosep::asymptotics::Model::separable,
                                         grid);
    Table t;
    t.columns = {"beta", "value"};
    for (auto [b, v] : pts) t.rows.push_back({b, v});
    emit_table(out.stream(), format,
               {{"command", "curve"}, {"model", model}, {"grid", grid_spec}}, t);
    return 0;
}

int cmd_constants(const std::string& /*format*/, OutputTarget& out) {
    cosep::asymptotics::Constants k = cosep::asymptotics::compute_constants();
    json j;
    j["schema_version"] = kSchemaVersion;
    j["beta0"] = k.beta0;
    j["beta_star"] = k.beta_star;
    j["C_star"] = k.C_star;
    j["beta1"] = k.beta1;
    j["E_beta_argmax"] = k.E_beta_argmax;
    j["E_star"] = k.E_star;
    j["tolerances"] = {{"root", k.root_tol}, {"maximizer", k.max_tol}};
    out.stream() << j.dump(2) << "\n";
    return 0;
}

int cmd_brownian(const std::string& mode, int k, int bigN, double p, int reps, int iters,
                 int particles, std::uint64_t seed, const std::string& format,
                 OutputTarget& out) {
    std::vector<std::pair<std::string, std::string>> cfg = {
        {"command", "brownian"}, {"mode", mode}, {"p", fmt_double(p)},
        {"seed", std::to_string(seed)}};
    if (mode == "sample") {
        Table t;
        t.columns = {"k", "N", "rep", "edges", "is_cograph"};
        for (int rep = 0; rep < reps; ++rep) {
            cosep::RandomSource rng(cosep::RandomSource::mix(seed, k, rep));
            cosep::CographonSample s = cosep::sample_cographon_graph(k, bigN, p, rng);
            t.rows.push_back({k, bigN, rep, static_cast<long long>(s.graph.edge_count()),
                              cosep::is_cograph(s.graph) ? 1 : 0});
        }
        emit_table(out.stream(), format, cfg, t);
        return 0;
    }
    if (mode == "alphatilde") {
        cosep::AlphaTildeResult r = cosep::estimate_alpha_tilde(k, bigN, p, reps, seed);
        Table t;
        t.columns = {"k", "N", "rep", "alpha_over_k"};
        for (int rep = 0; rep < reps; ++rep)
            t.rows.push_back({k, bigN, rep, r.dist.samples[rep]});
        cfg.emplace_back("degenerate_draws", std::to_string(r.degenerate_draws));
        emit_table(out.stream(), format, cfg, t);
        return 0;
    }
    if (mode == "phi") {
        auto summaries = cosep::phi_p_iterate(p, iters, particles, seed);
        Table t;
        t.columns = {"iter", "mean", "median", "w1_prev"};
        for (const auto& s : summaries)
            t.rows.push_back({s.iteration, s.mean, s.median, s.w1_prev});
        emit_table(out.stream(), format, cfg, t);
        return 0;
    }
    throw CLI::ValidationError("--mode", "expected sample, alphatilde, or phi");
}

int cmd_oracle_check(OutputTarget& out) {
    std::ostream& os = out.stream();
    bool ok = true;
    auto fail = [&](const std::string& what) {
        os << "MISMATCH " << what << "\n";
        ok = false;
    };

    // counting series vs exhaustive catalogs
    for (int n = 1; n <= 5; ++n) {
        auto cat = cosep::oracle::enumerate_cographs(n);
        if (cosep::count_labeled_cographs(n) != static_cast<long>(cat.items.size()))
            fail("count_labeled_cographs n=" + std::to_string(n));
    }
    for (int n = 1; n <= 7; ++n) {
        auto cat = cosep::oracle::enumerate_separable(n);
        if (cosep::count_separable(n) != static_cast<long>(cat.items.size()))
            fail("count_separable n=" + std::to_string(n));
    }
    os << "counts: labeled cographs n<=5 and separable permutations n<=7 match catalogs\n";

    // expectations, exact rationals
    cosep::CographSeries cs = cosep::solve_cograph_series(8);
    for (int n = 1; n <= 5 && ok; ++n)
        for (int k = 1; k <= n; ++k)
            if (cosep::expected_X(cs, n, k) != cosep::oracle::oracle_expected_X(n, k)) {
                fail("expected_X at n=" + std::to_string(n) + " k=" + std::to_string(k));
                break;
            }
    os << "expected_X: exact match on all n<=5\n";
    cosep::SeparableSeries ss = cosep::solve_separable_series(8);
    for (int n = 1; n <= 7 && ok; ++n)
        for (int k = 1; k <= n; ++k)
            if (cosep::expected_Z(ss, n, k) != cosep::oracle::oracle_expected_Z(n, k)) {
                fail("expected_Z at n=" + std::to_string(n) + " k=" + std::to_string(k));
                break;
            }
    os << "expected_Z: exact match on all n<=7\n";

    // per-object: cotree polynomial vs raw subset counts
    for (int n = 1; n <= 5 && ok; ++n) {
        auto cat = cosep::oracle::enumerate_cographs(n);
        for (const auto& g : cat.items) {
            cosep::SizePolynomial poly =
                cosep::independent_set_polynomial(cosep::cotree_of_cograph(g));
            for (int k = 0; k <= n; ++k)
                if (poly.coeff(k) != cosep::oracle::count_independent_sets(g, k)) {
                    fail("independent_set_polynomial on a catalog graph, n=" +
                         std::to_string(n));
                    break;
                }
            if (!ok) break;
        }
    }
    os << "independent_set_polynomial: per-object match on all catalogs n<=5\n";
    for (int n = 1; n <= 6 && ok; ++n) {
        auto cat = cosep::oracle::enumerate_separable(n);
        for (const auto& sigma : cat.items) {
            cosep::SizePolynomial poly =
                cosep::increasing_subsequence_polynomial(cosep::tree_of_perm(sigma));
            for (int k = 0; k <= n; ++k)
                if (poly.coeff(k) !=
                    cosep::oracle::count_increasing_subsequences(sigma, k)) {
                    fail("increasing_subsequence_polynomial on a catalog permutation, n=" +
                         std::to_string(n));
                    break;
                }
            if (!ok) break;
        }
    }
    os << "increasing_subsequence_polynomial: per-object match on all catalogs n<=6\n";
    os << (ok ? "oracle-check: PASS (models: labeled cographs n<=5, separable n<=7)\n"
              : "oracle-check: FAIL\n");
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cosep: exact and asymptotic toolkit for random cographs and separable "
                 "permutations"};
    app.require_subcommand(1);

    std::string model = "cograph", format = "csv", out_path, grid_spec = "0.05:0.95:0.05";
    std::string mode = "phi";
    int n = 10, n_max = 10, k = 2, reps = 100, trunc = 128, float_trunc = 400;
    int bigN = 100000, iters = 60, particles = 100000;
    int k_lo = -1, k_hi = -1;
    std::string k_range;
    std::vector<int> sizes;
    std::uint64_t seed = 1;
    double p = 0.5, tol = 1e-12;
    bool emit_objects = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path);
    };

    CLI::App* count = app.add_subcommand("count", "exact counts up to n-max");
    count->add_option("--model", model)->check(CLI::IsMember({"cograph", "separable"}));
    count->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    add_common(count);

    CLI::App* sample = app.add_subcommand("sample", "uniform random samples and statistics");
    sample->add_option("--model", model)->check(CLI::IsMember({"cograph", "separable"}));
    sample->add_option("--n", sizes, "sizes to sample (repeatable)")->required();
    sample->add_option("--reps", reps)->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed);
    sample->add_flag("--emit-objects", emit_objects, "include canonical serializations");
    add_common(sample);

    CLI::App* expect = app.add_subcommand("expect", "expected marked-subset counts");
    expect->add_option("--model", model)->check(CLI::IsMember({"cograph", "separable"}));
    expect->add_option("--n", n)->check(CLI::PositiveNumber)->required();
    expect->add_option("--k", k);
    expect->add_option("--k-range", k_range, "a:b inclusive");
    expect->add_option("--trunc", trunc)->check(CLI::PositiveNumber);
    expect->add_option("--float-trunc", float_trunc)->check(CLI::PositiveNumber);
    add_common(expect);

    CLI::App* curve = app.add_subcommand("curve", "growth-constant curves");
    curve->add_option("--model", model)->check(CLI::IsMember({"cograph", "separable"}));
    curve->add_option("--grid", grid_spec, "a:b:step");
    add_common(curve);

    CLI::App* constants = app.add_subcommand("constants", "characteristic constants as JSON");
    constants->add_option("--tol", tol);
    add_common(constants);

    CLI::App* brownian = app.add_subcommand("brownian", "Brownian cographon simulations");
    brownian->add_option("--mode", mode)->check(CLI::IsMember({"sample", "alphatilde", "phi"}));
    brownian->add_option("--k", k)->check(CLI::PositiveNumber);
    brownian->add_option("--N", bigN, "half length of the Dyck path")->check(CLI::PositiveNumber);
    brownian->add_option("--p", p);
    brownian->add_option("--reps", reps)->check(CLI::PositiveNumber);
    brownian->add_option("--iters", iters)->check(CLI::PositiveNumber);
    brownian->add_option("--particles", particles)->check(CLI::PositiveNumber);
    brownian->add_option("--seed", seed);
    add_common(brownian);

    CLI::App* oracle_check = app.add_subcommand("oracle-check", "exhaustive oracle equivalence");
    add_common(oracle_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutputTarget out;
    out.path = out_path;
    try {
        if (count->parsed()) return cmd_count(model, n_max, format, out);
        if (sample->parsed()) return cmd_sample(model, sizes, reps, seed, emit_objects, format, out);
        if (expect->parsed()) {
            if (!k_range.empty()) {
                std::istringstream is(k_range);
                char c;
                if (!(is >> k_lo >> c >> k_hi) || c != ':')
                    throw cosep::DomainError("expect: bad --k-range, need a:b");
            } else {
                k_lo = k_hi = k;
            }
            if (k_lo < 1 || k_hi > n || k_lo > k_hi)
                throw cosep::DomainError("expect: need 1 <= k <= n");
            return cmd_expect(model, n, k_lo, k_hi, trunc, float_trunc, format, out);
        }
        if (curve->parsed()) return cmd_curve(model, grid_spec, format, out);
        if (constants->parsed()) return cmd_constants(format, out);
        if (brownian->parsed())
            return cmd_brownian(mode, k, bigN, p, reps, iters, particles, seed, format, out);
        if (oracle_check->parsed()) return cmd_oracle_check(out);
    } catch (const cosep::NonConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const cosep::NonMonotonic& e) {
        std::cerr << "non-monotonic: " << e.what() << "\n";
        return 3;
    } catch (const cosep::OverflowSignal& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
