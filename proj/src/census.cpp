#include "legcount/census.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace legcount {

namespace {

struct RootedEncoding {
    std::string key;
    std::uint64_t aut = 1;
};

RootedEncoding encode_rooted(const ColoredTree& t,
                             const std::vector<std::vector<int>>& inc, int v,
                             int parent_edge) {
    std::vector<std::pair<int, RootedEncoding>> items;  // (edge degree, child)
    for (int ei : inc[v]) {
        if (ei == parent_edge)
            continue;
        const Edge& e = t.edges[ei];
        const int child = e.u == v ? e.v : e.u;
        items.emplace_back(e.degree, encode_rooted(t, inc, child, ei));
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second.key < b.second.key;
    });
    std::uint64_t aut = 1;
    for (std::size_t i = 0; i < items.size();) {
        std::size_t j = i;
        while (j < items.size() && items[j].first == items[i].first &&
               items[j].second.key == items[i].second.key) {
            aut *= items[j].second.aut;
            ++j;
        }
        // identical child subtrees permute freely
        for (std::size_t m = 2; m <= j - i; ++m)
            aut *= m;
        i = j;
    }
    std::string key = "(" + std::to_string(t.labels[v]);
    for (const auto& [deg, enc] : items)
        key += "," + std::to_string(deg) + enc.key;
    key += ")";
    return {key, aut};
}

std::vector<int> centroids(const ColoredTree& t,
                           const std::vector<std::vector<int>>& inc) {
    const int n = t.vertex_count();
    if (n == 1)
        return {0};
    // subtree sizes below each vertex, rooted at 0
    std::vector<int> size(n, 1), parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int ei : inc[v]) {
            int w = t.edges[ei].u == v ? t.edges[ei].v : t.edges[ei].u;
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0)
            size[parent[*it]] += size[*it];
    std::vector<int> best;
    int best_weight = n;
    for (int v = 0; v < n; ++v) {
        int weight = n - size[v];  // component containing the parent
        for (int ei : inc[v]) {
            int w = t.edges[ei].u == v ? t.edges[ei].v : t.edges[ei].u;
            if (parent[w] == v)
                weight = std::max(weight, size[w]);
        }
        if (weight < best_weight) {
            best_weight = weight;
            best = {v};
        } else if (weight == best_weight) {
            best.push_back(v);
        }
    }
    return best;
}

std::pair<std::string, std::uint64_t> canonicalize(const ColoredTree& t) {
    const auto inc = t.incidence_lists();
    const auto cs = centroids(t, inc);
    if (cs.size() == 1) {
        auto enc = encode_rooted(t, inc, cs[0], -1);
        return {enc.key, enc.aut};
    }
    // bicentroid: the joining edge is invariant under every automorphism
    const int c1 = cs[0], c2 = cs[1];
    int mid = -1;
    for (int ei : inc[c1]) {
        const Edge& e = t.edges[ei];
        if ((e.u == c1 && e.v == c2) || (e.u == c2 && e.v == c1))
            mid = ei;
    }
    if (mid < 0)
        throw std::logic_error("bicentroid vertices are not adjacent");
    auto a = encode_rooted(t, inc, c1, mid);
    auto b = encode_rooted(t, inc, c2, mid);
    if (b.key < a.key)
        std::swap(a, b);
    std::uint64_t aut = a.aut * b.aut;
    if (a.key == b.key)
        aut *= 2;  // unreachable for valid trees: adjacent labels differ
    return {"[" + std::to_string(t.edges[mid].degree) + "," + a.key + "," +
                b.key + "]",
            aut};
}

// Unlabeled tree shapes on m vertices as edge lists, one per isomorphism
// class. Generated from parent arrays (parent[i] < i) and deduplicated by
// the structural canonical key.
std::vector<std::vector<std::pair<int, int>>> tree_shapes(int m) {
    std::vector<std::vector<std::pair<int, int>>> shapes;
    if (m < 2)
        return shapes;
    std::set<std::string> seen;
    std::vector<int> parent(m, 0);
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < m; ++i)
            edges.emplace_back(parent[i], i);
        ColoredTree probe;
        probe.label_bound = 0;
        probe.labels.assign(m, 0);
        for (auto [u, v] : edges)
            probe.edges.push_back(Edge{u, v, 1});
        auto key = canonicalize(probe).first;
        if (seen.insert(key).second)
            shapes.push_back(std::move(edges));
        // next parent array
        int i = m - 1;
        while (i >= 1) {
            if (parent[i] + 1 < i) {
                ++parent[i];
                break;
            }
            parent[i] = 0;
            --i;
        }
        if (i < 1)
            break;
    }
    return shapes;
}

void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> comp(parts, 1);
    std::function<void(int, int)> rec = [&](int idx, int rest) {
        if (idx == parts - 1) {
            comp[idx] = rest;
            f(comp);
            return;
        }
        for (int first = 1; first <= rest - (parts - 1 - idx); ++first) {
            comp[idx] = first;
            rec(idx + 1, rest - first);
        }
    };
    rec(0, total);
}

}  // namespace

std::string canonical_key(const ColoredTree& tree) {
    return canonicalize(tree).first;
}

std::uint64_t automorphism_order(const ColoredTree& tree) {
    return canonicalize(tree).second;
}

std::vector<GraphClass> enumerate_graphs(int label_bound, int degree) {
    if (label_bound < 1)
        throw std::invalid_argument("label bound must be >= 1");
    if (degree < 1)
        throw std::invalid_argument("degree must be >= 1");

    std::map<std::string, GraphClass> found;  // key order fixes the output order
    for (int k = 1; k <= degree; ++k) {
        const int m = k + 1;
        for (const auto& shape : tree_shapes(m)) {
            // neighbors among earlier-indexed vertices; parent arrays
            // guarantee each vertex i > 0 has one
            std::vector<std::vector<int>> earlier(m);
            for (auto [u, v] : shape)
                earlier[std::max(u, v)].push_back(std::min(u, v));

            for_each_composition(degree, k, [&](const std::vector<int>& comp) {
                std::vector<int> coloring(m, -1);
                std::function<void(int)> color = [&](int v) {
                    if (v == m) {
                        ColoredTree t;
                        t.label_bound = label_bound;
                        t.labels = coloring;
                        for (int i = 0; i < k; ++i)
                            t.edges.push_back(
                                Edge{shape[i].first, shape[i].second, comp[i]});
                        auto [key, aut] = canonicalize(t);
                        if (!found.count(key)) {
                            std::uint64_t ag = aut;
                            for (int de : comp)
                                ag *= static_cast<std::uint64_t>(de);
                            found.emplace(key,
                                          GraphClass{std::move(t), aut, ag, key});
                        }
                        return;
                    }
                    for (int l = 0; l <= label_bound; ++l) {
                        bool ok = true;
                        for (int u : earlier[v])
                            if (coloring[u] == l) {
                                ok = false;
                                break;
                            }
                        if (ok) {
                            coloring[v] = l;
                            color(v + 1);
                            coloring[v] = -1;
                        }
                    }
                };
                color(0);
            });
        }
    }

    std::vector<GraphClass> out;
    out.reserve(found.size());
    for (auto& [key, gc] : found)
        out.push_back(std::move(gc));
    return out;
}

void write_census(std::ostream& out, int label_bound, int degree,
                  const std::vector<GraphClass>& classes) {
    out << "legcount-census v" << kCensusFormatVersion << " N=" << label_bound
        << " d=" << degree << " classes=" << classes.size() << "\n";
    for (const GraphClass& gc : classes) {
        out << gc.canonical_key << "\t" << gc.aut_order << "\t";
        for (std::size_t i = 0; i < gc.tree.labels.size(); ++i)
            out << (i ? "," : "") << gc.tree.labels[i];
        out << "\t";
        for (std::size_t i = 0; i < gc.tree.edges.size(); ++i) {
            const Edge& e = gc.tree.edges[i];
            out << (i ? ";" : "") << e.u << "-" << e.v << ":" << e.degree;
        }
        out << "\n";
    }
}

std::vector<GraphClass> read_census(std::istream& in, int expected_label_bound,
                                    int expected_degree) {
    std::string header;
    if (!std::getline(in, header))
        throw std::runtime_error("census file: missing header");
    std::ostringstream expect;
    expect << "legcount-census v" << kCensusFormatVersion
           << " N=" << expected_label_bound << " d=" << expected_degree
           << " classes=";
    if (header.rfind(expect.str(), 0) != 0)
        throw std::runtime_error("census file: header mismatch: " + header);
    const std::size_t expected_count =
        std::stoull(header.substr(expect.str().size()));

    std::vector<GraphClass> classes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        GraphClass gc;
        std::string labels_field, edges_field;
        if (!std::getline(ls, gc.canonical_key, '\t'))
            throw std::runtime_error("census file: bad record: " + line);
        std::string aut_field;
        if (!std::getline(ls, aut_field, '\t') ||
            !std::getline(ls, labels_field, '\t') ||
            !std::getline(ls, edges_field))
            throw std::runtime_error("census file: bad record: " + line);
        gc.aut_order = std::stoull(aut_field);
        gc.tree.label_bound = expected_label_bound;
        {
            std::istringstream fs(labels_field);
            std::string tok;
            while (std::getline(fs, tok, ','))
                gc.tree.labels.push_back(std::stoi(tok));
        }
        {
            std::istringstream fs(edges_field);
            std::string tok;
            while (std::getline(fs, tok, ';')) {
                Edge e;
                if (std::sscanf(tok.c_str(), "%d-%d:%d", &e.u, &e.v, &e.degree) != 3)
                    throw std::runtime_error("census file: bad edge: " + tok);
                gc.tree.edges.push_back(e);
            }
        }
        gc.tree.validate();
        if (gc.tree.total_degree() != expected_degree)
            throw std::runtime_error("census file: degree mismatch in record");
        auto [key, aut] = std::pair(canonical_key(gc.tree),
                                    automorphism_order(gc.tree));
        if (key != gc.canonical_key || aut != gc.aut_order)
            throw std::runtime_error(
                "census file: record fails canonical re-check: " + line);
        gc.a_gamma = gc.aut_order;
        for (const Edge& e : gc.tree.edges)
            gc.a_gamma *= static_cast<std::uint64_t>(e.degree);
        classes.push_back(std::move(gc));
    }
    if (classes.size() != expected_count)
        throw std::runtime_error("census file: class count mismatch");
    return classes;
}

std::filesystem::path census_cache_file(const std::filesystem::path& dir,
                                        int label_bound, int degree) {
    std::ostringstream name;
    name << "census-N" << label_bound << "-d" << degree << ".v"
         << kCensusFormatVersion << ".txt";
    return dir / name.str();
}

std::vector<GraphClass> load_census(
    int label_bound, int degree,
    const std::optional<std::filesystem::path>& cache_dir) {
    if (cache_dir) {
        const auto path = census_cache_file(*cache_dir, label_bound, degree);
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            return read_census(in, label_bound, degree);
        }
        auto classes = enumerate_graphs(label_bound, degree);
        std::filesystem::create_directories(*cache_dir);
        std::ofstream out(path, std::ios::binary);
        write_census(out, label_bound, degree, classes);
        return classes;
    }
    return enumerate_graphs(label_bound, degree);
}

}  // namespace legcount
