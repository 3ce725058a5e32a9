#include "geodom/graphcore.hpp"

#include <algorithm>
#include <sstream>

namespace geodom::graphcore {

Graph::Graph(int n) : n_(n), matrix_(static_cast<std::size_t>(n) * n, 0), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    labels.resize(n);
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("edge endpoint out of range");
    if (i == j || adjacent(i, j)) return;
    matrix_[static_cast<std::size_t>(i) * n_ + j] = 1;
    matrix_[static_cast<std::size_t>(j) * n_ + i] = 1;
    adj_[i].insert(std::upper_bound(adj_[i].begin(), adj_[i].end(), j), j);
    adj_[j].insert(std::upper_bound(adj_[j].begin(), adj_[j].end(), i), i);
}

bool Graph::adjacent(int i, int j) const {
    return matrix_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j : adj_[i])
            if (i < j) out.emplace_back(i, j);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        h.labels[a] = g.labels.at(vertices[a]);
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (g.adjacent(vertices[a], vertices[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    return h;
}

std::vector<int> undominated(const Graph& g, const std::vector<int>& set) {
    std::vector<char> dom(g.n(), 0);
    for (int v : set) {
        if (v < 0 || v >= g.n()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        dom[v] = 1;
        for (int u : g.neighbors(v)) dom[u] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (!dom[v]) out.push_back(v);
    return out;
}

bool is_dominating(const Graph& g, const std::vector<int>& set) { return undominated(g, set).empty(); }

namespace {

struct Enumerator {
    int n;
    std::vector<std::uint64_t> closed;  // closed neighborhoods
    std::vector<int> max_in_closed;     // largest index in N[v]
    std::uint64_t full;
    std::vector<int> chosen;
    bool stop_at_first = true;
    std::vector<std::vector<int>> found;

    explicit Enumerator(const Graph& g) : n(g.n()), closed(g.n()), max_in_closed(g.n()) {
        full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        for (int v = 0; v < n; ++v) {
            closed[v] = std::uint64_t{1} << v;
            max_in_closed[v] = v;
            for (int u : g.neighbors(v)) {
                closed[v] |= std::uint64_t{1} << u;
                max_in_closed[v] = std::max(max_in_closed[v], u);
            }
        }
    }

    // Picks `left` more vertices with index >= start in ascending order.
    bool search(int start, int left, std::uint64_t covered) {
        if (left == 0) {
            if (covered != full) return false;
            found.push_back(chosen);
            return stop_at_first;
        }
        if (covered != full) {
            int lowest = __builtin_ctzll(~covered);
            // the lowest undominated vertex needs a dominator at index >= start
            if (max_in_closed[lowest] < start) return false;
        }
        for (int v = start; v <= n - left; ++v) {
            chosen.push_back(v);
            bool done = search(v + 1, left - 1, covered | closed[v]);
            chosen.pop_back();
            if (done) return true;
        }
        return false;
    }
};

void check_limit(const Graph& g, int cutoff) {
    int limit = std::min(cutoff, 64);
    if (g.n() > limit)
        throw SizeLimitError("brute force limited to " + std::to_string(limit) + " vertices, got " +
                             std::to_string(g.n()));
}

}  // namespace

DomResult brute_force_min_dominating(const Graph& g, int cutoff) {
    check_limit(g, cutoff);
    if (g.n() == 0) return {};
    Enumerator e(g);
    for (int size = 1; size <= g.n(); ++size) {
        if (e.search(0, size, 0)) return {size, e.found.front()};
    }
    throw std::logic_error("vertex set does not dominate");
}

std::vector<std::vector<int>> dominating_sets_of_size(const Graph& g, int size, int cutoff) {
    check_limit(g, cutoff);
    Enumerator e(g);
    e.stop_at_first = false;
    if (g.n() == 0) return size == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
    e.search(0, size, 0);
    return e.found;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int u : g.neighbors(members[i]))
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    members.push_back(u);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool adjacency_equals(const Graph& g, const std::vector<Edge>& expected) {
    std::vector<Edge> norm;
    for (auto [i, j] : expected) {
        if (i == j) return false;
        norm.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    return g.edges() == norm;
}

bool adjacency_equals(const Graph& a, const Graph& b) { return a.n() == b.n() && a.edges() == b.edges(); }

std::string dump(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (auto [i, j] : g.edges()) out << "e " << i << " " << j << "\n";
    return out.str();
}

Graph parse_graph(const std::vector<io::Line>& lines) {
    if (lines.empty() || lines.front().keyword() != "n")
        throw ParseError("graph file must start with 'n <count>'", lines.empty() ? 1 : lines.front().number, 1);
    io::expect_size(lines.front(), 2);
    long n = io::integer_at(lines.front(), 1);
    if (n < 0) io::fail(lines.front(), 1, "negative vertex count");
    Graph g(static_cast<int>(n));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.keyword() != "e") io::fail(line, 0, "expected 'e <i> <j>'");
        io::expect_size(line, 3);
        long i = io::integer_at(line, 1), j = io::integer_at(line, 2);
        if (i < 0 || i >= n) io::fail(line, 1, "vertex out of range");
        if (j < 0 || j >= n) io::fail(line, 2, "vertex out of range");
        if (i == j) io::fail(line, 2, "self-loop");
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

}  // namespace geodom::graphcore
