// legcount: exact counts of rational contact (Legendrian) curves in odd
// projective space meeting general linear subspaces, by Bott localization
// over the torus-fixed-locus graphs with exact rational arithmetic.

#include "CLI11.hpp"
#include "json.hpp"
#include "legcount/census.hpp"
#include "legcount/chern_oracle.hpp"
#include "legcount/classes.hpp"
#include "legcount/engine.hpp"
#include "legcount/reference_counts.hpp"
#include "legcount/table_format.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace legcount;

constexpr int kExitUsage = 2;
constexpr int kExitDimension = 3;
constexpr int kExitVerification = 4;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> values;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        values.push_back(std::stol(tok));
    return values;
}

IncidenceSpec spec_from_conditions(int n, const std::string& conditions) {
    std::vector<long> counts;
    try {
        counts = parse_long_list(conditions);
    } catch (const std::exception&) {
        throw usage_error("--conditions must be a comma-separated integer "
                          "vector a_2,...,a_" +
                          std::to_string(2 * n + 1));
    }
    if (static_cast<int>(counts.size()) != 2 * n) {
        throw usage_error(
            "--conditions needs exactly " + std::to_string(2 * n) +
            " entries (a_2,...,a_" + std::to_string(2 * n + 1) +
            "), got " + std::to_string(counts.size()));
    }
    return IncidenceSpec{2 * n + 1, std::move(counts)};
}

struct CommonOptions {
    std::uint64_t seed = EngineConfig{}.seed;
    int passes = 2;
    int threads = 0;
    bool oracle_check = false;
    std::string cache_dir;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Base seed for the weight draws");
        cmd->add_option("--passes", passes,
                        "Independent weight assignments (minimum 2)")
            ->check(CLI::Range(2, 64));
        cmd->add_option("--threads", threads,
                        "Worker threads (0 = all available, 1 = serial)");
        cmd->add_flag("--oracle-check", oracle_check,
                      "Recompute every incidence class through the "
                      "Chern-character solve and require exact agreement");
        cmd->add_option("--cache-dir", cache_dir,
                        "Census cache directory (default: $LEGCOUNT_CACHE_DIR)");
    }

    EngineConfig engine_config() const {
        EngineConfig config;
        config.seed = seed;
        config.verification_passes = passes;
        config.threads = threads;
        config.oracle_check = oracle_check;
        if (!cache_dir.empty())
            config.cache_dir = std::filesystem::path(cache_dir);
        return config;
    }
};

std::string join_u64(const std::vector<std::uint64_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string join_u32(const std::vector<std::uint32_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

int run_count(int n, int degree, const std::string& conditions,
              const std::string& degrees, const CommonOptions& common,
              const std::string& format_name, bool debug_contributions) {
    const auto format = parse_format(format_name);
    if (format != OutputFormat::plain && format != OutputFormat::json)
        throw usage_error("count supports --format plain or json");

    auto spec = spec_from_conditions(n, conditions);

    std::vector<long> multipliers(spec.counts.size(), 1);
    if (!degrees.empty()) {
        multipliers = parse_long_list(degrees);
        if (multipliers.size() != spec.counts.size())
            throw usage_error("--subvariety-degrees needs exactly " +
                              std::to_string(spec.counts.size()) + " entries");
        for (long k : multipliers)
            if (k < 1)
                throw usage_error("--subvariety-degrees entries must be >= 1");
    }

    auto config = common.engine_config();
    config.collect_contributions = debug_contributions;
    auto result = count(n, degree, spec, config);

    // a degree-k subvariety imposes k times the class of the linear
    // subspace of its codimension
    Integer scale(1);
    for (std::size_t i = 0; i < multipliers.size(); ++i)
        scale *= int_pow(multipliers[i],
                         static_cast<unsigned long>(spec.counts[i]));
    Integer value = result.count * scale;

    if (format == OutputFormat::json) {
        nlohmann::json out;
        out["n"] = n;
        out["degree"] = degree;
        out["conditions"] = spec.counts;
        out["count"] = value.get_str();
        out["census_classes"] = result.census_size;
        out["passes"] = result.weight_seeds.size();
        out["weight_seeds"] = result.weight_seeds;
        out["attempts"] = result.attempts;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "count = " << value.get_str() << "\n"
                  << "conditions = " << spec.to_string() << "\n"
                  << "census classes = " << result.census_size << "\n"
                  << "passes = " << result.weight_seeds.size()
                  << " (seeds " << join_u64(result.weight_seeds)
                  << "; attempts " << join_u32(result.attempts) << ")\n"
                  << "elapsed = " << result.elapsed.count() << "s\n";
        if (debug_contributions) {
            std::cout << "per-class contributions (first pass):\n";
            for (const auto& [key, contribution] : result.contributions)
                std::cout << "  " << key << "  " << contribution.get_str()
                          << "\n";
        }
    }
    return 0;
}

int run_table(int n, int degree, const CommonOptions& common,
              const std::string& format_name) {
    const auto format = parse_format(format_name);
    auto table = full_table(n, degree, common.engine_config());
    std::vector<TableRow> rows;
    rows.reserve(table.size());
    for (const auto& entry : table)
        rows.push_back(TableRow{entry.spec.counts, entry.count.get_str()});
    std::cout << render_rows(rows, format);
    return 0;
}

int run_graphs(int bound, int degree, const std::string& out_path) {
    auto classes = enumerate_graphs(bound, degree);

    std::filesystem::path path;
    if (!out_path.empty()) {
        path = out_path;
    } else if (auto dir = cache_dir_from_env()) {
        std::filesystem::create_directories(*dir);
        path = census_cache_file(*dir, bound, degree);
    } else {
        path = census_cache_file(".", bound, degree);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    write_census(out, bound, degree, classes);

    std::map<std::uint64_t, int> histogram;
    for (const auto& gc : classes)
        ++histogram[gc.a_gamma];
    std::cout << "census N=" << bound << " d=" << degree << ": "
              << classes.size() << " classes\n"
              << "a_gamma histogram:";
    for (const auto& [a, count] : histogram)
        std::cout << " " << a << ":" << count;
    std::cout << "\nwrote " << path.string() << "\n";
    return 0;
}

// ---- verify -------------------------------------------------------------

struct VerifyReport {
    int failures = 0;

    void line(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[ ok ] " : "[FAIL] ") << name;
        if (!detail.empty())
            std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok)
            ++failures;
    }
};

struct VerifyScope {
    int n;
    int d;
    const ReferenceTable* reference;  // may be null
};

std::vector<VerifyScope> scopes_for(const std::string& name) {
    const VerifyScope p3d1{1, 1, &reference_p3(1)};
    const VerifyScope p3d2{1, 2, &reference_p3(2)};
    const VerifyScope p3d3{1, 3, &reference_p3(3)};
    const VerifyScope p5d1{2, 1, &reference_p5(1)};
    const VerifyScope p5d2{2, 2, &reference_p5(2)};
    if (name == "p3-d1")
        return {p3d1};
    if (name == "p3-d2")
        return {p3d2};
    if (name == "p3-d3")
        return {p3d3};
    if (name == "p3")
        return {p3d1, p3d2, p3d3};
    if (name == "p5-d1")
        return {p5d1};
    if (name == "p5-d2")
        return {p5d2};
    if (name == "p5")
        return {p5d1, p5d2};
    if (name == "all")
        return {p3d1, p3d2, p3d3, p5d1, p5d2};
    throw usage_error("unknown scope: " + name +
                      " (use p3, p3-d1..d3, p5, p5-d1, p5-d2, all)");
}

int run_verify(const std::string& scope_name, const CommonOptions& common) {
    VerifyReport report;
    const auto scopes = scopes_for(scope_name);
    auto config = common.engine_config();

    for (const auto& scope : scopes) {
        const int bound = 2 * scope.n + 1;
        const std::string tag = "P^" + std::to_string(bound) + " d=" +
                                std::to_string(scope.d);
        auto cache = config.cache_dir ? config.cache_dir : cache_dir_from_env();
        const auto census = load_census(bound, scope.d, cache);

        // incidence classes: closed form vs character solve, two draws
        {
            bool ok = true;
            for (std::uint32_t draw = 0; draw < 2 && ok; ++draw) {
                auto w = draw_weights(bound, config.seed + 1000 + draw, 0);
                for (const auto& gc : census) {
                    for (int r = 1; r <= std::min(4, bound - 1); ++r) {
                        if (incidence_via_cramer(gc.tree, r, w) !=
                            incidence_class(gc.tree, r, w)) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok)
                        break;
                }
            }
            report.line(tag + ": incidence closed form == character solve", ok);
        }

        // homogeneity of all three classes on a census sample
        {
            bool ok = true;
            auto w = draw_weights(bound, config.seed + 2000, 0);
            const Rational c(3, 7);
            WeightAssignment scaled;
            for (const Rational& l : w.lambdas)
                scaled.lambdas.push_back(c * l);
            for (std::size_t idx = 0; idx < census.size() && ok;
                 idx += std::max<std::size_t>(1, census.size() / 8)) {
                const ColoredTree& t = census[idx].tree;
                long d1 = 0;
                for (const Edge& e : t.edges)
                    d1 += 2 * e.degree - 1;
                for (int val : t.valences())
                    d1 += val - 1;
                const long d2 = static_cast<long>(bound + 1) * (scope.d + 1) - 4;
                ok = obstruction_euler(t, scaled) ==
                         pow_rational(c, d1) * obstruction_euler(t, w) &&
                     normal_bundle_euler(t, scaled) ==
                         pow_rational(c, d2) * normal_bundle_euler(t, w) &&
                     incidence_class(t, 1, scaled) ==
                         c * incidence_class(t, 1, w);
            }
            report.line(tag + ": homogeneity in the weights", ok);
        }

        // full table: multi-pass agreement, integrality, permutation
        // invariance, reference values
        try {
            auto table = full_table(scope.n, scope.d, config);

            {
                auto specs = enumerate_specs(scope.n, scope.d);
                auto w = draw_weights(bound, config.seed, 0);
                std::vector<int> perm(bound + 1);
                for (int i = 0; i <= bound; ++i)
                    perm[i] = (i + 1) % (bound + 1);
                WeightAssignment permuted;
                permuted.lambdas.resize(bound + 1);
                for (int i = 0; i <= bound; ++i)
                    permuted.lambdas[perm[i]] = w.lambdas[i];
                auto direct = bott_sums_serial(census, specs, w);
                auto shuffled = bott_sums_serial(census, specs, permuted);
                report.line(tag + ": totals invariant under weight permutation",
                            direct == shuffled);
            }

            bool reference_ok = true;
            std::string detail;
            if (scope.reference) {
                for (const auto& row : scope.reference->rows) {
                    bool matched = false;
                    for (const auto& entry : table) {
                        if (entry.spec.counts == row.conditions) {
                            matched = entry.count == row.count;
                            if (!matched)
                                detail = entry.spec.to_string() + " computed " +
                                         entry.count.get_str() +
                                         ", reference " +
                                         std::to_string(row.count);
                            break;
                        }
                    }
                    if (!matched) {
                        if (detail.empty())
                            detail = "missing row";
                        reference_ok = false;
                        break;
                    }
                }
            }
            report.line(tag + ": multi-pass agreement and integrality", true);
            report.line(tag + ": reference counts", reference_ok, detail);
        } catch (const verification_error& e) {
            report.line(tag + ": multi-pass agreement and integrality", false,
                        e.what());
        }
    }

    if (report.failures > 0) {
        std::cout << report.failures << " check(s) failed\n";
        return kExitVerification;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of rational contact curves in P^(2n+1) via "
                 "Bott localization"};
    app.require_subcommand(1);

    // count
    auto* cmd_count = app.add_subcommand(
        "count", "Count contact curves meeting a prescribed condition vector");
    int count_n = 1, count_degree = 1;
    std::string count_conditions, count_degrees, count_format = "plain";
    bool count_debug = false;
    CommonOptions count_common;
    cmd_count->add_option("--n", count_n, "Contact parameter n (ambient P^(2n+1))")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_count->add_option("--degree,-d", count_degree, "Curve degree")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_count->add_option("--conditions", count_conditions,
                          "Multiplicities a_2,...,a_{2n+1}")
        ->required();
    cmd_count->add_option("--subvariety-degrees", count_degrees,
                          "Per-codimension degrees of the imposed subvarieties "
                          "(default: all 1, i.e. linear subspaces)");
    cmd_count->add_option("--format", count_format, "plain or json");
    cmd_count->add_flag("--debug-contributions", count_debug,
                        "Print the weight-dependent per-class contributions");
    count_common.attach(cmd_count);

    // table
    auto* cmd_table = app.add_subcommand(
        "table", "Counts for every admissible condition vector");
    int table_n = 1, table_degree = 1;
    std::string table_format = "plain";
    CommonOptions table_common;
    cmd_table->add_option("--n", table_n, "Contact parameter n")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_table->add_option("--degree,-d", table_degree, "Curve degree")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_table->add_option("--format", table_format,
                          "plain, csv, json or markdown");
    table_common.attach(cmd_table);

    // graphs
    auto* cmd_graphs = app.add_subcommand(
        "graphs", "Enumerate the fixed-locus graph census");
    int graphs_bound = -1, graphs_n = -1, graphs_degree = 1;
    std::string graphs_out;
    auto* opt_bound = cmd_graphs->add_option(
        "--N", graphs_bound, "Fixed-point index bound (ambient P^N)");
    auto* opt_n = cmd_graphs->add_option(
        "--n", graphs_n, "Contact parameter n (sets N = 2n+1)");
    opt_bound->excludes(opt_n);
    cmd_graphs->add_option("--degree,-d", graphs_degree, "Total degree")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_graphs->add_option("--out", graphs_out,
                           "Output file (default: census cache location)");

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify", "Run the property suite and reference-count checks");
    std::string verify_scope = "p3";
    CommonOptions verify_common;
    cmd_verify->add_option("--scope", verify_scope,
                           "p3, p3-d1, p3-d2, p3-d3, p5, p5-d1, p5-d2 or all");
    verify_common.attach(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_count))
            return run_count(count_n, count_degree, count_conditions,
                             count_degrees, count_common, count_format,
                             count_debug);
        if (app.got_subcommand(cmd_table))
            return run_table(table_n, table_degree, table_common, table_format);
        if (app.got_subcommand(cmd_graphs)) {
            if (graphs_bound < 0 && graphs_n < 0)
                throw usage_error("graphs needs --N or --n");
            const int bound = graphs_bound >= 0 ? graphs_bound
                                                : 2 * graphs_n + 1;
            return run_graphs(bound, graphs_degree, graphs_out);
        }
        if (app.got_subcommand(cmd_verify))
            return run_verify(verify_scope, verify_common);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // spec_error derives from invalid_argument; distinguish it
        if (dynamic_cast<const spec_error*>(&e)) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitDimension;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const verification_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
