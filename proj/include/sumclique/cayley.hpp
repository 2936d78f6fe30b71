#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumclique/group.hpp"

namespace sumclique {

// Dense symmetric adjacency over vertices 0..n-1, one bit row per vertex,
// rows padded to whole 64-bit words for word-parallel candidate pruning.
struct AdjacencyMatrix {
    std::uint32_t n = 0;
    std::uint32_t words_per_row = 0;
    std::vector<std::uint64_t> rows;

    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(std::uint32_t n_)
        : n(n_), words_per_row((n_ + 63) / 64), rows(std::size_t(n_) * ((n_ + 63) / 64), 0) {}

    const std::uint64_t* row(std::uint32_t v) const { return rows.data() + std::size_t(v) * words_per_row; }
    std::uint64_t* row(std::uint32_t v) { return rows.data() + std::size_t(v) * words_per_row; }

    bool test(std::uint32_t i, std::uint32_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
    void set_edge(std::uint32_t i, std::uint32_t j) {
        row(i)[j >> 6] |= std::uint64_t(1) << (j & 63);
        row(j)[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    std::uint32_t degree(std::uint32_t v) const;
    std::uint64_t edge_count() const;

    // Complement graph (diagonal stays empty).
    AdjacencyMatrix complement() const;
};

// Cayley sum graph on a group: vertices are the group elements, i ~ j (i != j)
// iff i + j lies in the generator set A. Undirected because i + j = j + i.
struct CayleyGraph {
    GroupSpec group;
    GroupSet generator;
    AdjacencyMatrix adj;
};

inline constexpr std::uint32_t kMaxCayleyVertices = 1u << 14;

// Builds the graph and verifies the regularity law
//   deg(i) = |A| - [2i in A]
// exactly for every vertex.
CayleyGraph build_cayley_sum_graph(const GroupSet& a);

// Nonzero quadratic residues mod a prime N. Requires N an odd prime.
GroupSet paley_set(std::uint64_t n);

// True iff X spans a clique (vertex sets of size <= 1 are cliques).
bool is_clique(const CayleyGraph& g, const GroupSet& x);

struct CliqueResult {
    std::uint32_t omega = 0;              // best clique size found
    std::vector<std::uint32_t> witness;   // vertices of that clique
    std::uint64_t nodes = 0;              // expansion count
    bool exact = true;                    // false iff the node budget was hit
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Exact branch-and-bound maximum clique (greedy-coloring bound, bitset
// candidate sets). On budget exhaustion returns the best clique found with
// exact = false. complement = true solves on the complement graph, i.e.
// computes the independence number of the input.
CliqueResult max_clique(const AdjacencyMatrix& g, std::uint64_t node_budget = kDefaultNodeBudget,
                        bool complement = false);

inline CliqueResult max_clique(const CayleyGraph& g, std::uint64_t node_budget = kDefaultNodeBudget,
                               bool complement = false) {
    return max_clique(g.adj, node_budget, complement);
}

// Number of k-cliques (k >= 1). Throws BudgetExceededError past node_cap
// recursion steps; practical for small n or small k.
std::uint64_t count_cliques_of_size(const AdjacencyMatrix& g, std::uint32_t k,
                                    std::uint64_t node_cap = 1'000'000'000);

// Edge list, one "i j" per line with i < j, ascending.
std::string edge_list_text(const AdjacencyMatrix& g);

}  // namespace sumclique
