#pragma once

#include <string>
#include <vector>

namespace legcount {

// One edge of a fixed-locus graph: a degree-d_e cover of the coordinate line
// joining the two fixed points labelled at its ends.
struct Edge {
    int u = 0;
    int v = 0;
    int degree = 1;
};

// A torus-fixed-locus graph: a tree whose vertices carry fixed-point labels
// in {0..label_bound}, adjacent labels distinct, and whose edge degrees sum
// to the total map degree.
struct ColoredTree {
    int label_bound = 0;
    std::vector<int> labels;  // labels[v] = fixed-point index of vertex v
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int total_degree() const;
    std::vector<int> valences() const;

    // Incident edge indices per vertex.
    std::vector<std::vector<int>> incidence_lists() const;

    // Label at the end of `edges[edge_index]` opposite to `vertex`.
    int far_label(int edge_index, int vertex) const;

    // Throws std::invalid_argument when a structural invariant fails:
    // not a tree, self loop, parallel edge, equal adjacent labels,
    // label out of range, or edge degree < 1.
    void validate() const;
};

ColoredTree make_edge_tree(int label_bound, int label_i, int label_j, int degree);

// Path v0 - v1 - ... with labels[k] at vertex k and degrees[k] on edge
// (k, k+1).
ColoredTree make_path_tree(int label_bound, const std::vector<int>& labels,
                           const std::vector<int>& degrees);

}  // namespace legcount
