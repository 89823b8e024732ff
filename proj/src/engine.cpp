#include "legcount/engine.hpp"

#include "legcount/chern_oracle.hpp"
#include "legcount/classes.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>

namespace legcount {

long IncidenceSpec::multiplicity(int codim) const {
    if (codim < 2 || codim > label_bound)
        return 0;
    return counts[codim - 2];
}

long IncidenceSpec::total_conditions() const {
    long m = 0;
    for (long a : counts)
        m += a;
    return m;
}

long IncidenceSpec::dimension_sum() const {
    long s = 0;
    for (int c = 2; c <= label_bound; ++c)
        s += multiplicity(c) * (c - 1);
    return s;
}

std::string IncidenceSpec::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i)
        s += (i ? "," : "") + std::to_string(counts[i]);
    return s + ")";
}

void validate_spec(int n, int d, const IncidenceSpec& spec) {
    if (n < 1 || d < 1)
        throw spec_error("n and degree must both be >= 1");
    const int bound = 2 * n + 1;
    if (spec.label_bound != bound ||
        static_cast<int>(spec.counts.size()) != bound - 1)
        throw spec_error("condition vector must have exactly " +
                         std::to_string(bound - 1) + " entries (a_2..a_" +
                         std::to_string(bound) + ")");
    for (long a : spec.counts)
        if (a < 0)
            throw spec_error("condition multiplicities must be >= 0");
    const long want = expected_dimension(n, d);
    const long got = spec.dimension_sum();
    if (got != want) {
        std::ostringstream msg;
        msg << "dimension condition fails: sum a_c (c-1) = " << got
            << " but 2n(d+1)-1 = " << want;
        throw spec_error(msg.str());
    }
}

std::vector<IncidenceSpec> enumerate_specs(int n, int d) {
    if (n < 1 || d < 1)
        throw spec_error("n and degree must both be >= 1");
    const int bound = 2 * n + 1;
    std::vector<IncidenceSpec> out;
    std::vector<long> acc(bound - 1, 0);
    // descending lexicographic order, mirroring the table layout
    auto rec = [&](auto&& self, int idx, long rest) -> void {
        if (idx == bound - 2) {
            const int weight = bound - 1;  // c-1 for the last codimension
            if (rest % weight == 0) {
                acc[idx] = rest / weight;
                out.push_back(IncidenceSpec{bound, acc});
            }
            return;
        }
        const int weight = idx + 1;  // c-1 with c = idx+2
        for (long a = rest / weight; a >= 0; --a) {
            acc[idx] = a;
            self(self, idx + 1, rest - a * weight);
        }
    };
    rec(rec, 0, expected_dimension(n, d));
    return out;
}

namespace {

// Per-graph contributions to every requested condition vector at once; the
// incidence class for each needed r is computed once and reused across all
// rows and powers.
std::vector<Rational> evaluate_graph(const GraphClass& g,
                                     const std::vector<IncidenceSpec>& specs,
                                     const std::vector<int>& needed_r,
                                     const WeightAssignment& w,
                                     bool oracle_check) {
    std::vector<Rational> inc(needed_r.empty() ? 0 : needed_r.back() + 1);
    for (int r : needed_r) {
        inc[r] = incidence_class(g.tree, r, w);
        if (oracle_check) {
            Rational via_cramer = incidence_via_cramer(g.tree, r, w);
            if (via_cramer != inc[r])
                throw verification_error(
                    "incidence class disagrees with the Chern-character route "
                    "on class " +
                    g.canonical_key);
            inc[r] = via_cramer;
        }
    }
    Rational base = obstruction_euler(g.tree, w) /
                    normal_bundle_euler(g.tree, w);
    base /= make_rational(Integer(static_cast<unsigned long>(g.a_gamma)), 1);

    std::vector<Rational> rows;
    rows.reserve(specs.size());
    for (const IncidenceSpec& spec : specs) {
        Rational value = base;
        for (int c = 2; c <= spec.label_bound; ++c) {
            const long a = spec.multiplicity(c);
            if (a > 0)
                value *= pow_rational(inc[c - 1], a);
        }
        rows.push_back(std::move(value));
    }
    return rows;
}

std::vector<int> needed_incidence_orders(const std::vector<IncidenceSpec>& specs) {
    std::vector<int> rs;
    if (specs.empty())
        return rs;
    const int bound = specs.front().label_bound;
    for (int c = 2; c <= bound; ++c)
        for (const IncidenceSpec& spec : specs)
            if (spec.multiplicity(c) > 0) {
                rs.push_back(c - 1);
                break;
            }
    return rs;
}

}  // namespace

Rational graph_contribution(const GraphClass& g, const IncidenceSpec& spec,
                            const WeightAssignment& w) {
    std::vector<IncidenceSpec> one{spec};
    return evaluate_graph(g, one, needed_incidence_orders(one), w, false)[0];
}

std::vector<Rational> bott_sums_serial(const std::vector<GraphClass>& census,
                                       const std::vector<IncidenceSpec>& specs,
                                       const WeightAssignment& w,
                                       bool oracle_check) {
    const auto rs = needed_incidence_orders(specs);
    std::vector<Rational> totals(specs.size(), Rational(0));
    for (const GraphClass& g : census) {
        auto rows = evaluate_graph(g, specs, rs, w, oracle_check);
        for (std::size_t j = 0; j < totals.size(); ++j)
            totals[j] += rows[j];
    }
    return totals;
}

std::vector<Rational> bott_sums_parallel(const std::vector<GraphClass>& census,
                                         const std::vector<IncidenceSpec>& specs,
                                         const WeightAssignment& w, int threads,
                                         bool oracle_check) {
    const auto rs = needed_incidence_orders(specs);
    std::vector<Rational> totals(specs.size(), Rational(0));
    const long n = static_cast<long>(census.size());
    if (threads <= 0)
        threads = omp_get_max_threads();

    // exceptions may not cross the parallel region; record and rethrow
    std::atomic<int> failure{0};  // 0 none, 1 degenerate, 2 verification
    std::string failure_message;
    std::mutex failure_mutex;

#pragma omp parallel num_threads(threads)
    {
        std::vector<Rational> local(specs.size(), Rational(0));
#pragma omp for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) {
            if (failure.load(std::memory_order_relaxed))
                continue;
            try {
                auto rows =
                    evaluate_graph(census[i], specs, rs, w, oracle_check);
                for (std::size_t j = 0; j < local.size(); ++j)
                    local[j] += rows[j];
            } catch (const degenerate_weights_error& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure_message = e.what();
                failure.store(1, std::memory_order_relaxed);
            } catch (const verification_error& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure_message = e.what();
                failure.store(2, std::memory_order_relaxed);
            }
        }
#pragma omp critical
        {
            for (std::size_t j = 0; j < totals.size(); ++j)
                totals[j] += local[j];
        }
    }

    if (failure.load() == 1)
        throw degenerate_weights_error(failure_message);
    if (failure.load() == 2)
        throw verification_error(failure_message);
    return totals;
}

namespace {

constexpr std::uint32_t kMaxAttempts = 64;

struct Pass {
    std::vector<Rational> sums;
    std::uint64_t seed = 0;
    std::uint32_t attempt = 0;
    WeightAssignment weights;
};

Pass run_pass(const std::vector<GraphClass>& census,
              const std::vector<IncidenceSpec>& specs, int bound,
              std::uint64_t pass_seed, const EngineConfig& config) {
    for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        WeightAssignment w = draw_weights(bound, pass_seed, attempt);
        try {
            Pass pass;
            pass.sums = config.threads == 1
                            ? bott_sums_serial(census, specs, w,
                                               config.oracle_check)
                            : bott_sums_parallel(census, specs, w,
                                                 config.threads,
                                                 config.oracle_check);
            pass.seed = pass_seed;
            pass.attempt = attempt;
            pass.weights = std::move(w);
            return pass;
        } catch (const degenerate_weights_error&) {
            // the whole draw is rejected; per-graph redraws are not allowed
            continue;
        }
    }
    throw std::runtime_error("no generic weight assignment found");
}

struct Evaluation {
    std::vector<Integer> values;
    std::size_t census_size = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<std::uint32_t> attempts;
    std::chrono::duration<double> elapsed{0};
    std::vector<std::pair<std::string, Rational>> contributions;
};

Evaluation evaluate_specs(int n, int d, const std::vector<IncidenceSpec>& specs,
                          const EngineConfig& config) {
    for (const IncidenceSpec& spec : specs)
        validate_spec(n, d, spec);
    const auto start = std::chrono::steady_clock::now();
    const int bound = 2 * n + 1;

    auto cache = config.cache_dir ? config.cache_dir : cache_dir_from_env();
    const auto census = load_census(bound, d, cache);

    const int passes = std::max(2, config.verification_passes);
    Evaluation ev;
    ev.census_size = census.size();

    std::vector<Rational> reference;
    for (int p = 0; p < passes; ++p) {
        Pass pass = run_pass(census, specs, bound, config.seed + p, config);
        ev.seeds.push_back(pass.seed);
        ev.attempts.push_back(pass.attempt);
        if (p == 0) {
            reference = pass.sums;
            if (config.collect_contributions) {
                for (const GraphClass& g : census)
                    for (const IncidenceSpec& spec : specs)
                        ev.contributions.emplace_back(
                            g.canonical_key,
                            graph_contribution(g, spec, pass.weights));
            }
        } else if (pass.sums != reference) {
            throw verification_error(
                "independent weight assignments disagree; this is a bug");
        }
    }

    for (std::size_t j = 0; j < reference.size(); ++j) {
        if (reference[j].get_den() != 1)
            throw verification_error("Bott sum for " + specs[j].to_string() +
                                     " is not an integer: " +
                                     reference[j].get_str());
        Integer v = reference[j].get_num();
        if (v < 0)
            throw verification_error("negative count for " +
                                     specs[j].to_string() +
                                     "; enumerativity guarantees >= 0");
        ev.values.push_back(std::move(v));
    }
    ev.elapsed = std::chrono::steady_clock::now() - start;
    return ev;
}

}  // namespace

CountResult count(int n, int d, const IncidenceSpec& spec,
                  const EngineConfig& config) {
    auto ev = evaluate_specs(n, d, {spec}, config);
    CountResult result;
    result.count = std::move(ev.values[0]);
    result.census_size = ev.census_size;
    result.weight_seeds = std::move(ev.seeds);
    result.attempts = std::move(ev.attempts);
    result.elapsed = ev.elapsed;
    result.contributions = std::move(ev.contributions);
    return result;
}

std::vector<TableEntry> full_table(int n, int d, const EngineConfig& config) {
    const auto specs = enumerate_specs(n, d);
    auto ev = evaluate_specs(n, d, specs, config);
    std::vector<TableEntry> table;
    table.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
        table.push_back(TableEntry{specs[i], std::move(ev.values[i])});
    return table;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
    const char* dir = std::getenv("LEGCOUNT_CACHE_DIR");
    if (dir && *dir)
        return std::filesystem::path(dir);
    return std::nullopt;
}

}  // namespace legcount
