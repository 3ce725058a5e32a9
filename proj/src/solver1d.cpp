#include "geodom/solver1d.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace geodom::solver1d {

using graphcore::Graph;
using Mask = std::uint64_t;

graphcore::Graph translate_graph(const Pattern1D& q, const std::vector<QuadNum>& xs) {
    return graphcore::build(xs, [&](const QuadNum& a, const QuadNum& b) {
        return pattern1d::translates_intersect(q, a, b);
    });
}

int window_cap(const Pattern1D& q) {
    QuadNum w = pattern1d::w_ratio(q);
    return static_cast<int>((QuadNum(3) * w).floor().get_si());
}

namespace {

// Indices of the first occurrence of each distinct value, ordered by value.
std::vector<int> distinct_sorted(const std::vector<QuadNum>& xs) {
    std::vector<int> order(xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return xs[a] < xs[b]; });
    std::vector<int> out;
    for (int i : order)
        if (out.empty() || !(xs[out.back()] == xs[i])) out.push_back(i);
    return out;
}

int popcount(Mask m) { return __builtin_popcountll(m); }

// Subsets of an m-element window with at most cap elements, by size then
// lexicographically.
std::vector<Mask> small_subsets(int m, int cap) {
    std::vector<Mask> out{0};
    std::vector<int> pick;
    for (int size = 1; size <= std::min(cap, m); ++size) {
        pick.resize(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            Mask mask = 0;
            for (int b : pick) mask |= Mask{1} << b;
            out.push_back(mask);
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

// DP over one connected component. `members` are vertex ids of g sorted by
// translate value; `window` gives each member's window index starting at 0.
std::vector<int> solve_component(const Graph& g, const std::vector<int>& members, const std::vector<int>& window,
                                 int cap) {
    int windows = window.back() + 1;
    std::vector<std::vector<int>> in_window(windows);
    std::vector<int> bit(g.n(), -1), win_of(g.n(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        int v = members[i];
        int t = window[i];
        win_of[v] = t;
        bit[v] = static_cast<int>(in_window[t].size());
        in_window[t].push_back(v);
    }
    for (const auto& w : in_window)
        if (w.size() > 63) throw std::length_error("more than 63 distinct translates in one window");

    // Neighborhood masks of every vertex into windows t-1, t (closed), t+1.
    struct Nb {
        Mask prev = 0, same = 0, next = 0;
    };
    std::vector<Nb> nb(g.n());
    for (int v : members) {
        int t = win_of[v];
        nb[v].same |= Mask{1} << bit[v];
        for (int u : g.neighbors(v)) {
            int tu = win_of[u];
            if (tu == t) nb[v].same |= Mask{1} << bit[u];
            else if (tu == t - 1) nb[v].prev |= Mask{1} << bit[u];
            else if (tu == t + 1) nb[v].next |= Mask{1} << bit[u];
            else throw std::logic_error("adjacent translates two windows apart");
        }
    }
    auto fold = [&](int t, Mask s, Mask Nb::*field) {
        Mask out = 0;
        for (std::size_t b = 0; b < in_window[t].size(); ++b)
            if (s >> b & 1) out |= nb[in_window[t][b]].*field;
        return out;
    };

    // State after window t: chosen set S_t and the vertices U_t of window t
    // that S_{t-1} and S_t leave undominated.
    using Key = std::pair<Mask, Mask>;
    struct Entry {
        int cost;
        Key parent;
    };
    std::vector<std::map<Key, Entry>> table(windows);
    std::map<Key, Entry> start{{{0, 0}, {0, {0, 0}}}};
    const std::map<Key, Entry>* prev = &start;
    for (int t = 0; t < windows; ++t) {
        int m = static_cast<int>(in_window[t].size());
        Mask full = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
        struct Choice {
            Mask set, dom_prev, dom_self;
        };
        std::vector<Choice> choices;
        for (Mask s : small_subsets(m, cap)) choices.push_back({s, fold(t, s, &Nb::prev), fold(t, s, &Nb::same)});
        auto& cur = table[t];
        for (const auto& [key, entry] : *prev) {
            auto [s_prev, u_prev] = key;
            Mask from_prev = t == 0 ? 0 : fold(t - 1, s_prev, &Nb::next);
            for (const auto& c : choices) {
                if ((u_prev & ~c.dom_prev) != 0) continue;
                Mask u = full & ~(from_prev | c.dom_self);
                int cost = entry.cost + popcount(c.set);
                Key nk{c.set, u};
                auto it = cur.find(nk);
                if (it == cur.end()) cur.emplace(nk, Entry{cost, key});
                else if (cost < it->second.cost) it->second = Entry{cost, key};
            }
        }
        prev = &cur;
    }

    const Entry* best = nullptr;
    Key best_key{};
    for (const auto& [key, entry] : table[windows - 1]) {
        if (key.second != 0) continue;
        if (!best || entry.cost < best->cost) {
            best = &entry;
            best_key = key;
        }
    }
    if (!best) throw std::logic_error("window cap excludes every dominating set");
    std::vector<int> out;
    Key key = best_key;
    for (int t = windows - 1; t >= 0; --t) {
        for (std::size_t b = 0; b < in_window[t].size(); ++b)
            if (key.first >> b & 1) out.push_back(in_window[t][b]);
        key = table[t].at(key).parent;
    }
    return out;
}

}  // namespace

Solution solve_interval_pattern(const Pattern1D& q, const std::vector<QuadNum>& xs) {
    if (q.intervals().empty()) throw std::invalid_argument("pattern has no interval");
    Solution sol;
    if (xs.empty()) return sol;
    std::vector<int> keep = distinct_sorted(xs);
    std::vector<QuadNum> vals;
    for (int i : keep) vals.push_back(xs[i]);
    Graph g = translate_graph(q, vals);
    QuadNum width = pattern1d::span(q);
    int cap = window_cap(q);
    for (const auto& comp : graphcore::connected_components(g)) {
        // components come out ascending in vertex id, i.e. sorted by value
        QuadNum x0 = vals[comp.front()];
        std::vector<int> window;
        for (int v : comp) window.push_back(static_cast<int>(((vals[v] - x0) / width).floor().get_si()));
        for (int v : solve_component(g, comp, window, cap)) sol.witness.push_back(keep[v]);
    }
    std::sort(sol.witness.begin(), sol.witness.end());
    sol.size = static_cast<int>(sol.witness.size());
    return sol;
}

Solution solve_unbounded(const std::vector<QuadNum>& xs) {
    if (xs.empty()) return {};
    return {1, {0}};
}

IntegerForm integer_form(const Pattern1D& q) {
    if (!q.intervals().empty()) throw std::invalid_argument("integer form needs a point pattern");
    if (pattern1d::classify(q) != pattern1d::PatternClass::RationalPoints)
        throw std::invalid_argument("pattern has an irrational distance ratio");
    const auto& pts = q.points();
    QuadNum shift = -pts.front();
    QuadNum factor(1);
    if (pts.size() >= 2) {
        QuadNum base = pts[1] - pts[0];
        Integer den = 1;
        for (const auto& p : pts) {
            QuadNum r = (p - pts[0]) / base;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.rat().get_den_mpz_t());
        }
        factor = QuadNum(Rational(den)) / base;
    }
    Pattern1D ints = pattern1d::transform(q, factor, factor * shift);
    std::vector<QuadNum> rest(ints.points().begin() + 1, ints.points().end());
    Pattern1D widened(rest, {pattern1d::Interval{QuadNum(0), QuadNum(Rational(1, 3))}});
    return {factor, shift, ints, widened};
}

std::vector<std::vector<int>> residue_classes(const IntegerForm& form, const std::vector<QuadNum>& xs) {
    std::vector<std::vector<int>> classes;
    std::vector<QuadNum> reps;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QuadNum scaled = form.factor * xs[i];
        bool placed = false;
        for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
            QuadNum diff = scaled - reps[c];
            if (diff.is_rational() && exactnum::is_integer(diff.rat())) {
                classes[c].push_back(static_cast<int>(i));
                placed = true;
            }
        }
        if (!placed) {
            reps.push_back(scaled);
            classes.push_back({static_cast<int>(i)});
        }
    }
    return classes;
}

namespace {

// Scaled integer offsets of one residue class, relative to its first member.
std::vector<QuadNum> class_offsets(const IntegerForm& form, const std::vector<QuadNum>& xs,
                                   const std::vector<int>& cls) {
    QuadNum rep = form.factor * xs[cls.front()];
    std::vector<QuadNum> out;
    for (int i : cls) out.push_back(form.factor * xs[i] - rep);
    return out;
}

}  // namespace

bool reduction_preserves_graph(const Pattern1D& q, const std::vector<QuadNum>& xs) {
    IntegerForm form = integer_form(q);
    Graph original = translate_graph(q, xs);
    Graph widened(static_cast<int>(xs.size()));
    for (const auto& cls : residue_classes(form, xs)) {
        std::vector<QuadNum> offs = class_offsets(form, xs, cls);
        Graph sub = translate_graph(form.widened, offs);
        for (auto [a, b] : sub.edges()) widened.add_edge(cls[a], cls[b]);
    }
    return graphcore::adjacency_equals(original, widened);
}

Solution solve_rational_points(const Pattern1D& q, const std::vector<QuadNum>& xs) {
    IntegerForm form = integer_form(q);
    Solution sol;
    for (const auto& cls : residue_classes(form, xs)) {
        Solution part = solve_interval_pattern(form.widened, class_offsets(form, xs, cls));
        for (int i : part.witness) sol.witness.push_back(cls[i]);
    }
    std::sort(sol.witness.begin(), sol.witness.end());
    sol.size = static_cast<int>(sol.witness.size());
    return sol;
}

namespace {

struct Brancher {
    const Graph& g;
    std::vector<int> dominated_by;  // number of chosen vertices in N[v]
    std::vector<int> chosen;

    explicit Brancher(const Graph& graph) : g(graph), dominated_by(graph.n(), 0) {}

    void toggle(int v, int delta) {
        dominated_by[v] += delta;
        for (int u : g.neighbors(v)) dominated_by[u] += delta;
    }

    bool search(int budget) {
        int v = -1;
        for (int u = 0; u < g.n(); ++u)
            if (dominated_by[u] == 0) {
                v = u;
                break;
            }
        if (v < 0) return true;
        if (budget == 0) return false;
        std::vector<int> options{v};
        options.insert(options.end(), g.neighbors(v).begin(), g.neighbors(v).end());
        std::sort(options.begin(), options.end());
        for (int c : options) {
            chosen.push_back(c);
            toggle(c, 1);
            if (search(budget - 1)) return true;
            toggle(c, -1);
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

DedupStats dedup_stats(const Pattern1D& q, const std::vector<QuadNum>& xs) {
    std::vector<int> keep = distinct_sorted(xs);
    std::vector<QuadNum> vals;
    for (int i : keep) vals.push_back(xs[i]);
    Graph g = translate_graph(q, vals);
    int t = static_cast<int>(q.points().size());
    return {static_cast<int>(keep.size()), g.max_degree(), t * t - t};
}

std::optional<std::vector<int>> solve_fpt_branching(const Pattern1D& q, const std::vector<QuadNum>& xs, int k) {
    if (k < 0) throw std::invalid_argument("negative budget");
    if (!q.intervals().empty()) throw std::invalid_argument("branching needs a point pattern");
    std::vector<int> keep = distinct_sorted(xs);
    // restore input order among the distinct representatives
    std::sort(keep.begin(), keep.end());
    std::vector<QuadNum> vals;
    for (int i : keep) vals.push_back(xs[i]);
    Graph g = translate_graph(q, vals);
    int t = static_cast<int>(q.points().size());
    if (g.max_degree() > t * t - t) throw std::logic_error("degree bound t^2 - t violated");
    Brancher b(g);
    if (!b.search(k)) return std::nullopt;
    std::vector<int> out;
    for (int v : b.chosen) out.push_back(keep[v]);
    std::sort(out.begin(), out.end());
    return out;
}

Solution solve(const Pattern1D& q, const std::vector<QuadNum>& xs) {
    switch (pattern1d::classify(q)) {
        case pattern1d::PatternClass::HasInterval: return solve_interval_pattern(q, xs);
        case pattern1d::PatternClass::RationalPoints: return solve_rational_points(q, xs);
        case pattern1d::PatternClass::IrrationalPoints: break;
    }
    for (int k = 0;; ++k) {
        if (auto w = solve_fpt_branching(q, xs, k)) return {static_cast<int>(w->size()), *w};
    }
}

int max_window_load(const Pattern1D& q, const std::vector<QuadNum>& xs, const std::vector<int>& witness) {
    QuadNum width = pattern1d::span(q);
    int best = 0;
    for (int a : witness) {
        int load = 0;
        for (int b : witness)
            if (xs[a] <= xs[b] && xs[b] < xs[a] + width) ++load;
        best = std::max(best, load);
    }
    return best;
}

}  // namespace geodom::solver1d
