#include "legcount/weights.hpp"

#include <set>
#include <stdexcept>

namespace legcount {

namespace {

// splitmix64; used both to combine (seed, attempt) and as the generator.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

void WeightAssignment::validate() const {
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw std::invalid_argument("weights are not pairwise distinct");
}

WeightAssignment make_weights(const std::vector<long>& values) {
    WeightAssignment w;
    w.lambdas.reserve(values.size());
    for (long v : values)
        w.lambdas.emplace_back(v);
    w.validate();
    return w;
}

WeightAssignment draw_weights(int label_bound, std::uint64_t seed,
                              std::uint32_t attempt) {
    if (label_bound < 1)
        throw std::invalid_argument("label bound must be >= 1");
    std::uint64_t state = mix(mix(seed) ^ (0xa5a5a5a5ULL + attempt));
    std::set<std::int64_t> used;
    WeightAssignment w;
    w.lambdas.reserve(label_bound + 1);
    while (static_cast<int>(w.lambdas.size()) <= label_bound) {
        state = mix(state);
        const auto value = static_cast<std::int64_t>(state);
        if (value == 0 || !used.insert(value).second)
            continue;
        // int64 -> mpz via string to stay correct on 32-bit long platforms
        w.lambdas.emplace_back(Integer(std::to_string(value)));
    }
    return w;
}

}  // namespace legcount
