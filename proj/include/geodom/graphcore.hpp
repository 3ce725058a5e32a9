#pragma once

// Intersection graphs, domination checks and the brute-force oracle.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geodom/io.hpp"

namespace geodom::graphcore {

using Edge = std::pair<int, int>;

class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    void add_edge(int i, int j);
    bool adjacent(int i, int j) const;
    /// Sorted neighbor list (self excluded).
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;
    /// Sorted list of edges (i < j).
    std::vector<Edge> edges() const;

    std::vector<std::string> labels;

private:
    int n_ = 0;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::vector<int>> adj_;
};

/// Edge {i, j} iff intersects(objects[i], objects[j]).
template <class T, class Pred>
Graph build(const std::vector<T>& objects, Pred intersects) {
    Graph g(static_cast<int>(objects.size()));
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (intersects(objects[i], objects[j])) g.add_edge(i, j);
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Throws std::out_of_range for a vertex outside [0, n).
bool is_dominating(const Graph& g, const std::vector<int>& set);
/// Vertices not dominated by the set, ascending.
std::vector<int> undominated(const Graph& g, const std::vector<int>& set);

struct DomResult {
    int size = 0;
    std::vector<int> witness;
};

inline constexpr int kDefaultBruteForceLimit = 40;

/// Exact minimum dominating set by enumerating vertex subsets in increasing
/// size; the witness is the lexicographically least minimum set. Throws
/// SizeLimitError when n exceeds the cutoff (at most 64).
DomResult brute_force_min_dominating(const Graph& g, int cutoff = kDefaultBruteForceLimit);
/// Every dominating set of size exactly `size`, lexicographic order.
std::vector<std::vector<int>> dominating_sets_of_size(const Graph& g, int size,
                                                      int cutoff = kDefaultBruteForceLimit);

std::vector<std::vector<int>> connected_components(const Graph& g);
/// Same edge set under the identity vertex correspondence.
bool adjacency_equals(const Graph& g, const std::vector<Edge>& expected);
bool adjacency_equals(const Graph& a, const Graph& b);

/// `n <count>` followed by sorted `e <i> <j>` lines.
std::string dump(const Graph& g);
Graph parse_graph(const std::vector<io::Line>& lines);

}  // namespace geodom::graphcore
