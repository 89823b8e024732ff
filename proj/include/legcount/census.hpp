#pragma once

#include "legcount/tree.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace legcount {

// One isomorphism class of fixed-locus graphs, with the symmetry factor
// a_gamma = |Aut| * prod(edge degrees) that divides its Bott contribution.
struct GraphClass {
    ColoredTree tree;
    std::uint64_t aut_order = 1;
    std::uint64_t a_gamma = 1;
    std::string canonical_key;
};

// Centroid-rooted encoding; two trees are isomorphic (preserving labels and
// edge degrees) exactly when their keys coincide.
std::string canonical_key(const ColoredTree& tree);

// Number of vertex permutations preserving adjacency, labels and degrees.
std::uint64_t automorphism_order(const ColoredTree& tree);

// One representative per isomorphism class of trees with labels in
// {0..label_bound} and total degree `degree`, sorted by canonical key.
// Rejects label_bound < 1 or degree < 1 with std::invalid_argument.
std::vector<GraphClass> enumerate_graphs(int label_bound, int degree);

inline constexpr int kCensusFormatVersion = 1;

void write_census(std::ostream& out, int label_bound, int degree,
                  const std::vector<GraphClass>& classes);

// Parses a census file, checking the header against the expected parameters
// and each record against its recomputed canonical key and automorphism
// order. Throws std::runtime_error on any mismatch.
std::vector<GraphClass> read_census(std::istream& in, int expected_label_bound,
                                    int expected_degree);

std::filesystem::path census_cache_file(const std::filesystem::path& dir,
                                        int label_bound, int degree);

// With a cache directory: load the stored census if present, otherwise
// enumerate and store it. Without one: enumerate.
std::vector<GraphClass> load_census(
    int label_bound, int degree,
    const std::optional<std::filesystem::path>& cache_dir);

}  // namespace legcount
