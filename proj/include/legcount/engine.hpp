#pragma once

#include "legcount/census.hpp"
#include "legcount/rational.hpp"
#include "legcount/weights.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legcount {

// Rejected user input: dimension-condition mismatch or codimension out of
// range. The CLI maps this to its own exit code.
class spec_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Multiplicities a_c of general codimension-c linear subspace conditions,
// c = 2..label_bound, stored as the vector (a_2, ..., a_N) with N = 2n+1.
struct IncidenceSpec {
    int label_bound = 3;
    std::vector<long> counts;

    long multiplicity(int codim) const;
    long total_conditions() const;
    // sum_c a_c (c-1); must equal 2n(d+1)-1 for the (n, d) in force
    long dimension_sum() const;
    std::string to_string() const;
};

inline long expected_dimension(int n, int d) {
    return 2L * n * (d + 1) - 1;
}

// Accepts iff sum_c a_c (c-1) = 2n(d+1)-1 and every codimension lies in
// [2, 2n+1]; otherwise throws spec_error with both sides of the equation.
void validate_spec(int n, int d, const IncidenceSpec& spec);

// Every non-negative solution of the dimension condition for (n, d), in
// descending lexicographic order of (a_2, ..., a_{2n+1}).
std::vector<IncidenceSpec> enumerate_specs(int n, int d);

struct EngineConfig {
    std::uint64_t seed = 20210831;
    int verification_passes = 2;  // < 2 is silently raised to 2
    int threads = 0;              // 0 = all available, 1 = serial reference
    bool oracle_check = false;    // route incidence classes through the
                                  // Chern-character/Cramer solve and compare
    bool collect_contributions = false;  // retain per-class values, first pass
    std::optional<std::filesystem::path> cache_dir;  // census cache override
};

struct CountResult {
    Integer count;
    std::size_t census_size = 0;
    std::vector<std::uint64_t> weight_seeds;  // derived per-pass seeds
    std::vector<std::uint32_t> attempts;      // redraws needed per pass
    std::chrono::duration<double> elapsed{0};
    // canonical key -> exact per-class value (debug; weight-dependent)
    std::vector<std::pair<std::string, Rational>> contributions;
};

// (1/a_gamma) * obstruction * prod_c incidence(c-1)^{a_c} / normal bundle.
// validate_spec must have accepted the spec beforehand.
Rational graph_contribution(const GraphClass& g, const IncidenceSpec& spec,
                            const WeightAssignment& w);

// Bott sums for several condition vectors over one census at one weight
// assignment. The serial kernel is the reference; the OpenMP kernel must
// produce identical values (exact rational addition commutes).
std::vector<Rational> bott_sums_serial(const std::vector<GraphClass>& census,
                                       const std::vector<IncidenceSpec>& specs,
                                       const WeightAssignment& w,
                                       bool oracle_check = false);
std::vector<Rational> bott_sums_parallel(const std::vector<GraphClass>& census,
                                         const std::vector<IncidenceSpec>& specs,
                                         const WeightAssignment& w, int threads,
                                         bool oracle_check = false);

// The exact count of degree-d contact curves in P^{2n+1} meeting the
// prescribed conditions: Bott sum over the census, evaluated at >= 2
// independent generic weight assignments which must agree and be integral.
CountResult count(int n, int d, const IncidenceSpec& spec,
                  const EngineConfig& config = {});

struct TableEntry {
    IncidenceSpec spec;
    Integer count;
};

// Counts for every spec from enumerate_specs(n, d), same verification
// contract as count(); per-graph class values are shared across rows.
std::vector<TableEntry> full_table(int n, int d,
                                   const EngineConfig& config = {});

// LEGCOUNT_CACHE_DIR, when set and nonempty.
std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace legcount
