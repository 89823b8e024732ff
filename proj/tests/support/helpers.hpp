#pragma once

#include "legcount/census.hpp"
#include "legcount/tree.hpp"
#include "legcount/weights.hpp"

#include <stdexcept>
#include <vector>

namespace testutil {

// Joins t2 to t1 by identifying t2's vertex `v2` with t1's vertex `v1`;
// both vertices must carry the same label.
inline legcount::ColoredTree glue_at(const legcount::ColoredTree& t1, int v1,
                                     const legcount::ColoredTree& t2, int v2) {
    if (t1.labels[v1] != t2.labels[v2])
        throw std::invalid_argument("glue_at: labels at the joint differ");
    legcount::ColoredTree out = t1;
    std::vector<int> remap(t2.vertex_count(), -1);
    remap[v2] = v1;
    for (int v = 0; v < t2.vertex_count(); ++v) {
        if (v == v2)
            continue;
        remap[v] = out.vertex_count();
        out.labels.push_back(t2.labels[v]);
    }
    for (const legcount::Edge& e : t2.edges)
        out.edges.push_back(legcount::Edge{remap[e.u], remap[e.v], e.degree});
    return out;
}

inline legcount::WeightAssignment small_weights(int label_bound) {
    // deliberately non-random fixtures with printable values
    static const std::vector<long> pool{3,  -7,  11,  17, -23, 29,
                                        31, -41, 43, -53};
    std::vector<long> values(pool.begin(), pool.begin() + label_bound + 1);
    return legcount::make_weights(values);
}

inline const legcount::GraphClass* find_class(
    const std::vector<legcount::GraphClass>& census, const std::string& key) {
    for (const auto& gc : census)
        if (gc.canonical_key == key)
            return &gc;
    return nullptr;
}

}  // namespace testutil
