#include "legcount/tree.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace legcount {

int ColoredTree::total_degree() const {
    int d = 0;
    for (const Edge& e : edges)
        d += e.degree;
    return d;
}

std::vector<int> ColoredTree::valences() const {
    std::vector<int> val(labels.size(), 0);
    for (const Edge& e : edges) {
        ++val[e.u];
        ++val[e.v];
    }
    return val;
}

std::vector<std::vector<int>> ColoredTree::incidence_lists() const {
    std::vector<std::vector<int>> inc(labels.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        inc[edges[i].u].push_back(i);
        inc[edges[i].v].push_back(i);
    }
    return inc;
}

int ColoredTree::far_label(int edge_index, int vertex) const {
    const Edge& e = edges[edge_index];
    return labels[e.u == vertex ? e.v : e.u];
}

void ColoredTree::validate() const {
    const int n = vertex_count();
    if (n < 1)
        throw std::invalid_argument("tree has no vertices");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("edge count must be vertex count - 1");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("self loop");
        if (e.degree < 1)
            throw std::invalid_argument("edge degree must be >= 1");
        if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
            throw std::invalid_argument("parallel edge");
        if (labels[e.u] == labels[e.v])
            throw std::invalid_argument("adjacent vertices carry the same label");
    }
    for (int l : labels)
        if (l < 0 || l > label_bound)
            throw std::invalid_argument("vertex label out of range");
    // connectivity: |E| = |V|-1 plus acyclicity implies a tree; check by BFS
    std::vector<int> mark(n, 0);
    std::vector<int> stack{0};
    mark[0] = 1;
    auto inc = incidence_lists();
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int ei : inc[v]) {
            int w = edges[ei].u == v ? edges[ei].v : edges[ei].u;
            if (!mark[w]) {
                mark[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    if (visited != n)
        throw std::invalid_argument("graph is not connected");
}

ColoredTree make_edge_tree(int label_bound, int label_i, int label_j, int degree) {
    ColoredTree t;
    t.label_bound = label_bound;
    t.labels = {label_i, label_j};
    t.edges = {Edge{0, 1, degree}};
    return t;
}

ColoredTree make_path_tree(int label_bound, const std::vector<int>& labels,
                           const std::vector<int>& degrees) {
    if (labels.size() != degrees.size() + 1)
        throw std::invalid_argument("path needs one more label than degrees");
    ColoredTree t;
    t.label_bound = label_bound;
    t.labels = labels;
    for (int k = 0; k < static_cast<int>(degrees.size()); ++k)
        t.edges.push_back(Edge{k, k + 1, degrees[k]});
    return t;
}

}  // namespace legcount
