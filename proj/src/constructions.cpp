#include "geodom/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geodom::constructions {

using geom2d::polygons_intersect;

// ---------------------------------------------------------------- universal

namespace {

Rational pow4(long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 4, static_cast<unsigned long>(e));
    return Rational(r);
}

}  // namespace

UniversalPattern universal_pattern(const Graph& g) {
    auto edges = g.edges();
    long n = g.n(), m = static_cast<long>(edges.size());
    long q = 2 * (n + m);
    std::vector<QuadNum> pts;
    for (long k = 1; k <= m; ++k) {
        auto [a, b] = edges[k - 1];
        pts.emplace_back(pow4(q + k) - pow4(a + 1));
        pts.emplace_back(pow4(q + k) - pow4(b + 1));
    }
    // no edges: any one-point pattern works once the translates are distinct
    if (pts.empty()) pts.emplace_back(0);
    UniversalPattern out{Pattern1D(pts), {}, q};
    for (long i = 0; i < n; ++i) out.translates.emplace_back(pow4(i + 1));
    return out;
}

bool verify_universal(const Graph& g, const UniversalPattern& u) {
    if (static_cast<int>(u.translates.size()) != g.n()) return false;
    Graph h = graphcore::build(u.translates, [&](const QuadNum& a, const QuadNum& b) {
        return pattern1d::translates_intersect(u.pattern, a, b);
    });
    return graphcore::adjacency_equals(h, g);
}

// ------------------------------------------------------------------ trigrid

Pattern1D unit_span(const Pattern1D& q) {
    Pattern1D shifted = pattern1d::normalize(q);
    QuadNum s = pattern1d::span(shifted);
    if (s.sign() == 0) return shifted;
    return pattern1d::transform(shifted, QuadNum(1) / s, QuadNum(0));
}

std::vector<long> trigrid_candidates(const Pattern1D& q, const QuadNum& xstar) {
    std::set<long> out;
    for (const auto& z : q.points())
        for (const auto& zp : q.points()) {
            Rational a = (zp.irr() - z.irr()) / xstar.irr();
            if (exactnum::is_integer(a)) out.insert(a.get_num().get_si());
        }
    return {out.begin(), out.end()};
}

bool meets_integer_shift(const Pattern1D& q, const QuadNum& shift) {
    for (const auto& z : q.points())
        for (const auto& zp : q.points()) {
            QuadNum d = shift + z - zp;
            if (d.is_rational() && exactnum::is_integer(d.rat())) return true;
        }
    return false;
}

TriGrid trigrid_realization(const Pattern1D& q, int radius) {
    if (!q.intervals().empty() || pattern1d::classify(q) != pattern1d::PatternClass::IrrationalPoints)
        throw std::invalid_argument("trigrid realization needs an irrational point pattern");
    if (radius < 0) throw std::invalid_argument("negative radius");
    TriGrid t;
    for (const auto& p : q.points())
        if (!p.is_rational()) {
            t.xstar = p;
            break;
        }
    t.candidates = trigrid_candidates(q, t.xstar);
    for (long a : t.candidates)
        if (a > 0 && meets_integer_shift(q, QuadNum(a) * t.xstar)) t.a_prime = a;
    if (t.a_prime == 0) throw std::logic_error("no positive multiplier of x* meets an integer shift of Q");
    t.ystar = QuadNum(t.a_prime) * t.xstar;
    t.radius = radius;
    for (int j = -radius; j <= radius; ++j)
        for (int k = -radius; k <= radius; ++k) {
            t.index.emplace_back(j, k);
            t.translates.push_back(QuadNum(j) * t.ystar + QuadNum(k));
        }
    return t;
}

bool verify_trigrid(const Pattern1D& q, const TriGrid& grid) {
    std::map<std::pair<int, int>, std::size_t> at;
    for (std::size_t i = 0; i < grid.index.size(); ++i) at[grid.index[i]] = i;
    int inner = grid.radius - 1;
    for (const auto& [jk, i] : at) {
        auto [j, k] = jk;
        if (std::abs(j) > inner || std::abs(k) > inner) continue;
        for (int da = -2; da <= 2; ++da)
            for (int db = -2; db <= 2; ++db) {
                if (da == 0 && db == 0) continue;
                auto it = at.find({j + da, k + db});
                if (it == at.end()) continue;
                bool expected = std::find(kTriOffsets.begin(), kTriOffsets.end(), std::pair{da, db}) !=
                                kTriOffsets.end();
                bool meets = pattern1d::translates_intersect(q, grid.translates[i], grid.translates[it->second]);
                if (meets != expected) return false;
            }
    }
    return true;
}

// ---------------------------------------------------------- trigrid gadgets

Graph trigrid_graph(const std::vector<GridPoint>& vertices) {
    return graphcore::build(vertices, [](const GridPoint& p, const GridPoint& q) {
        std::pair<long, long> d{q.first - p.first, q.second - p.second};
        for (auto [a, b] : kTriOffsets)
            if (d.first == a && d.second == b) return true;
        return false;
    });
}

std::vector<GridPoint> hexagon_walk(const std::array<int, 6>& sides) {
    static constexpr std::array<std::pair<int, int>, 6> dirs{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
    std::vector<GridPoint> out;
    GridPoint cur{0, 0};
    for (int s = 0; s < 6; ++s)
        for (int step = 0; step < sides[s]; ++step) {
            out.push_back(cur);
            cur.first += dirs[s].first;
            cur.second += dirs[s].second;
        }
    if (cur != GridPoint{0, 0}) throw std::invalid_argument("hexagon sides do not close");
    return out;
}

std::vector<GridPoint> cycle_gadget(int k) {
    switch (k) {
        case 1: return {{0, 0}, {1, 0}, {0, 1}};
        case 2: return hexagon_walk({1, 1, 1, 1, 1, 1});
        case 3: return hexagon_walk({1, 2, 1, 2, 1, 2});
        case 4: return hexagon_walk({2, 2, 2, 2, 2, 2});
        case 5: return hexagon_walk({2, 3, 2, 3, 2, 3});
        default: throw std::invalid_argument("cycle gadgets are built for k = 1..5");
    }
}

std::vector<GridPoint> path_gadget(int k) {
    if (k < 1) throw std::invalid_argument("path gadget needs k >= 1");
    std::vector<GridPoint> out;
    for (long i = 0; i <= 3L * k + 1; ++i) out.emplace_back(i, 0);
    return out;
}

bool is_induced_cycle(const Graph& g) {
    int n = g.n();
    if (n < 3) return false;
    for (int i = 0; i < n; ++i)
        if (g.degree(i) != 2 || !g.adjacent(i, (i + 1) % n)) return false;
    return true;
}

namespace {

// Fewest members of `counted` over all dominating sets, by enumerating
// every subset of the (small) vertex set.
int min_counted_dominators(const Graph& g, const std::vector<bool>& counted) {
    int n = g.n();
    if (n > 24) throw graphcore::SizeLimitError("gadget too large for exhaustive enumeration");
    std::vector<std::uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (int w : g.neighbors(v)) closed[v] |= 1u << w;
    }
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1, mask_counted = 0;
    for (int v = 0; v < n; ++v)
        if (counted[v]) mask_counted |= 1u << v;
    int best = n + 1;
    for (std::uint32_t s = 0; s <= all; ++s) {
        std::uint32_t cov = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) cov |= closed[v];
        if (cov == all) best = std::min(best, __builtin_popcount(s & mask_counted));
    }
    return best;
}

bool disjoint_closed(const Graph& g, const std::vector<int>& vs, const std::vector<bool>& allowed) {
    std::set<int> seen;
    for (int v : vs) {
        std::vector<int> nb = g.neighbors(v);
        nb.push_back(v);
        for (int w : nb) {
            if (!allowed[w] || !seen.insert(w).second) return false;
        }
    }
    return true;
}

GadgetBound bound_for(const std::vector<GridPoint>& pts, int k, const std::vector<bool>& counted) {
    Graph g = trigrid_graph(pts);
    GadgetBound b;
    b.k = k;
    b.domination = graphcore::brute_force_min_dominating(g).size;
    b.min_counted = min_counted_dominators(g, counted);
    std::vector<int> marks;
    for (int l = 0; l < k; ++l) marks.push_back(3 * l + 2);
    b.disjoint = disjoint_closed(g, marks, counted);
    return b;
}

}  // namespace

GadgetBound check_cycle_bound(int k) {
    auto pts = cycle_gadget(k);
    if (!is_induced_cycle(trigrid_graph(pts))) throw std::logic_error("cycle gadget is not an induced cycle");
    return bound_for(pts, k, std::vector<bool>(pts.size(), true));
}

GadgetBound check_path_bound(int k) {
    auto pts = path_gadget(k);
    std::vector<bool> inner(pts.size(), true);
    inner.front() = inner.back() = false;
    return bound_for(pts, k, inner);
}

// ------------------------------------------------------------- grid tiling

void check_gridtiling(const GridTiling& gt) {
    if (gt.k < 1 || gt.n < 1) throw std::invalid_argument("grid tiling needs k, n >= 1");
    if (static_cast<int>(gt.cells.size()) != gt.k) throw std::invalid_argument("grid tiling has wrong row count");
    for (int a = 0; a < gt.k; ++a) {
        if (static_cast<int>(gt.cells[a].size()) != gt.k)
            throw std::invalid_argument("grid tiling has wrong column count");
        for (int b = 0; b < gt.k; ++b) {
            const auto& u = gt.cells[a][b];
            if (u.empty()) throw std::invalid_argument("empty grid tiling cell");
            std::set<Pair> seen;
            for (auto [x, y] : u) {
                if (x < 1 || x > gt.n || y < 1 || y > gt.n)
                    throw std::invalid_argument("grid tiling pair out of range");
                if (!seen.insert({x, y}).second) throw std::invalid_argument("duplicate pair in a grid tiling cell");
            }
        }
    }
}

GridTiling parse_gridtiling(const std::vector<io::Line>& lines) {
    if (lines.empty() || lines.front().keyword() != "gt")
        throw ParseError("grid tiling file must start with 'gt <k> <n>'", lines.empty() ? 1 : lines.front().number, 1);
    io::expect_size(lines.front(), 3);
    GridTiling gt;
    long k = io::integer_at(lines.front(), 1), n = io::integer_at(lines.front(), 2);
    if (k < 1 || k > 64) io::fail(lines.front(), 1, "k must be in 1..64");
    if (n < 1 || n > 64) io::fail(lines.front(), 2, "n must be in 1..64");
    gt.k = static_cast<int>(k);
    gt.n = static_cast<int>(n);
    gt.cells.assign(gt.k, std::vector<std::vector<Pair>>(gt.k));
    std::vector<std::vector<bool>> seen(gt.k, std::vector<bool>(gt.k, false));
    static const std::regex head(R"(^\s*(-?\d+)\s+(-?\d+)\s*:(.*)$)");
    static const std::regex pair(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.keyword() != "cell") io::fail(line, 0, "expected 'cell <a> <b>: (x,y) ...'");
        std::string rest;
        for (std::size_t t = 1; t < line.size(); ++t) rest += line.tokens[t].text + " ";
        std::smatch m;
        if (!std::regex_match(rest, m, head)) io::fail(line, 1, "expected '<a> <b>:'");
        int a = std::stoi(m[1]) - 1, b = std::stoi(m[2]) - 1;
        if (a < 0 || a >= gt.k || b < 0 || b >= gt.k) io::fail(line, 1, "cell index out of range");
        if (seen[a][b]) io::fail(line, 1, "cell listed twice");
        seen[a][b] = true;
        std::string body = m[3];
        std::string leftover = std::regex_replace(body, pair, "");
        if (leftover.find_first_not_of(" \t") != std::string::npos)
            io::fail(line, 3, "cell contents must be pairs '(x,y)'");
        for (auto it = std::sregex_iterator(body.begin(), body.end(), pair); it != std::sregex_iterator(); ++it) {
            int x = std::stoi((*it)[1]), y = std::stoi((*it)[2]);
            if (x < 1 || x > gt.n || y < 1 || y > gt.n) io::fail(line, 3, "pair out of range 1..n");
            gt.cells[a][b].emplace_back(x, y);
        }
        if (gt.cells[a][b].empty()) io::fail(line, 1, "empty cell");
    }
    for (int a = 0; a < gt.k; ++a)
        for (int b = 0; b < gt.k; ++b)
            if (!seen[a][b])
                throw ParseError("cell " + std::to_string(a + 1) + " " + std::to_string(b + 1) + " is missing",
                                 lines.front().number, 1);
    try {
        check_gridtiling(gt);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lines.front().number, 1);
    }
    return gt;
}

std::string format_gridtiling(const GridTiling& gt) {
    std::ostringstream out;
    out << "gt " << gt.k << " " << gt.n << "\n";
    for (int a = 0; a < gt.k; ++a)
        for (int b = 0; b < gt.k; ++b) {
            out << "cell " << a + 1 << " " << b + 1 << ":";
            for (auto [x, y] : gt.cells[a][b]) out << " (" << x << "," << y << ")";
            out << "\n";
        }
    return out.str();
}

GridTiling full_gridtiling(int k, int n) {
    GridTiling gt{k, n, {}};
    std::vector<Pair> all;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) all.emplace_back(x, y);
    gt.cells.assign(k, std::vector<std::vector<Pair>>(k, all));
    return gt;
}

bool gt_feasible(const GridTiling& gt, const Choice& c) {
    if (static_cast<int>(c.size()) != gt.k) return false;
    for (int a = 0; a < gt.k; ++a) {
        if (static_cast<int>(c[a].size()) != gt.k) return false;
        for (int b = 0; b < gt.k; ++b) {
            const auto& u = gt.at(a, b);
            if (std::find(u.begin(), u.end(), c[a][b]) == u.end()) return false;
            if (a + 1 < gt.k && c[a][b].first != c[a + 1][b].first) return false;
            if (b + 1 < gt.k && c[a][b].second != c[a][b + 1].second) return false;
        }
    }
    return true;
}

namespace {

bool solve_from(const GridTiling& gt, Choice& c, int cell) {
    if (cell == gt.k * gt.k) return true;
    int a = cell / gt.k, b = cell % gt.k;
    for (const auto& p : gt.at(a, b)) {
        if (a > 0 && c[a - 1][b].first != p.first) continue;
        if (b > 0 && c[a][b - 1].second != p.second) continue;
        c[a][b] = p;
        if (solve_from(gt, c, cell + 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<Choice> gt_brute_solve(const GridTiling& gt) {
    Choice c(gt.k, std::vector<Pair>(gt.k));
    if (solve_from(gt, c, 0)) return c;
    return std::nullopt;
}

int pair_index(int n, int x, int y) { return (x - 1) * n + y; }

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }
int floor_div(int a, int m) { return (a - floor_mod(a, m)) / m; }

}  // namespace

int iota1(int n, int j) { return 1 + floor_div(j - 1, n); }
int iota2(int n, int j) { return 1 + floor_mod(j - 1, n); }

namespace {

const std::array<const char*, 20> kBlockNames{"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8", "Y1", "Y2",
                                              "Y3", "Y4", "Y5", "Y6", "Y7", "Y8", "A",  "B",  "C",  "D"};

// Ring position of each X_l and Y_l inside the 5x5 gadget square, walking
// clockwise from the top-left corner.
struct RingCell {
    int col, row;
};
const std::array<RingCell, 8> kXCells{{{1, 4}, {3, 4}, {4, 3}, {4, 1}, {3, 0}, {1, 0}, {0, 1}, {0, 3}}};
const std::array<RingCell, 8> kYCells{{{0, 4}, {2, 4}, {4, 4}, {4, 2}, {4, 0}, {2, 0}, {0, 0}, {0, 2}}};
constexpr int kPitch = 6;

std::pair<long, long> x_offset(int l, int n, int j) {
    long i1 = iota1(n, j), i2 = iota2(n, j);
    switch (l) {
        case 1: return {2L * j, -2 * i2};
        case 2: return {2L * j, 2 * i2};
        case 3: return {-2 * i1, -2L * j};
        case 4: return {2 * i1, -2L * j};
        case 5: return {-2L * j, 2 * i2};
        case 6: return {-2L * j, -2 * i2};
        case 7: return {2 * i1, 2L * j};
        default: return {-2 * i1, 2L * j};
    }
}

std::pair<long, long> y_offset(int l, int n, int j) {
    long h = 2L * j + 1, w = 2L * n;
    switch (l) {
        case 1: return {h, h};
        case 2: return {h, -w};
        case 3: return {h, -h};
        case 4: return {-w, -h};
        case 5: return {-h, -h};
        case 6: return {-h, w};
        case 7: return {-h, h};
        default: return {w, h};
    }
}

std::pair<long, long> connector_offset(Block blk, int n, int j, ConnectorReading reading) {
    long far = 2L * n * n + 2, h = 2L * j + 1;
    switch (blk) {
        case Block::A: return {-h, -far};
        case Block::B: return {h, far};
        case Block::C:
            if (reading == ConnectorReading::Verbatim) return {far, -2L * iota2(n, j)};
            return {far, -h};
        default:
            if (reading == ConnectorReading::Verbatim) return {-far, 2L * iota2(n, j)};
            return {-far, h};
    }
}

Vec2 reference(const squarelike::SquareLikeCert& c, long col, long row, long o1, long o2) {
    return Rational(col) * c.b1 + Rational(row) * c.b2 + Rational(o1) * c.u1 + Rational(o2) * c.u2;
}

int block_ell(Block b) { return static_cast<int>(b) % 8 + 1; }

long cell_distance(const Translate& s, const Translate& t) {
    return std::abs(s.col - t.col) + std::abs(s.row - t.row);
}

}  // namespace

std::string to_string(Block b) { return kBlockNames[static_cast<int>(b)]; }

std::optional<Block> parse_block(const std::string& s) {
    for (std::size_t i = 0; i < kBlockNames.size(); ++i)
        if (s == kBlockNames[i]) return static_cast<Block>(i);
    return std::nullopt;
}

Block x_block(int l) { return static_cast<Block>(l - 1); }
Block y_block(int l) { return static_cast<Block>(8 + l - 1); }

int GadgetInstance::find(Block block, int a, int b, int j) const {
    for (std::size_t i = 0; i < translates.size(); ++i) {
        const auto& t = translates[i];
        if (t.block == block && t.a == a && t.b == b && t.j == j) return static_cast<int>(i);
    }
    return -1;
}

int gadget_cert_parameter(int n) { return 2 * n + 1; }

GadgetInstance gadget_instance(const GridTiling& gt, const Polygon& poly, const squarelike::SquareLikeCert& cert,
                               ConnectorReading reading) {
    check_gridtiling(gt);
    long n = gt.n;
    long need = 4 * n * n + 4;  // largest doubled offset difference between neighbouring blocks
    if (static_cast<long>(cert.n) * cert.n < need)
        throw std::invalid_argument("certificate parameter " + std::to_string(cert.n) + " is too small for n = " +
                                    std::to_string(n) + "; use " + std::to_string(gadget_cert_parameter(gt.n)));
    GadgetInstance inst{gt.k, gt.n, gt, poly, cert, reading, {}};
    auto add = [&](Block blk, int a, int b, int j, long col, long row, std::pair<long, long> off) {
        inst.translates.push_back(
            {blk, a, b, j, col, row, off.first, off.second, reference(cert, col, row, off.first, off.second)});
    };
    int nn = gt.n * gt.n;
    for (int a = 0; a < gt.k; ++a)
        for (int b = 0; b < gt.k; ++b) {
            long c0 = static_cast<long>(kPitch) * a, r0 = static_cast<long>(kPitch) * b;
            std::set<int> kept;
            for (auto [x, y] : gt.at(a, b)) kept.insert(pair_index(gt.n, x, y));
            for (int l = 1; l <= 8; ++l) {
                for (int j : kept)
                    add(x_block(l), a, b, j, c0 + kXCells[l - 1].col, r0 + kXCells[l - 1].row, x_offset(l, gt.n, j));
                for (int j = 0; j <= nn; ++j)
                    add(y_block(l), a, b, j, c0 + kYCells[l - 1].col, r0 + kYCells[l - 1].row, y_offset(l, gt.n, j));
            }
            for (int j = 0; j <= gt.n; ++j) {
                if (a + 1 < gt.k) {
                    add(Block::A, a, b, j, c0 + 5, r0 + 3, connector_offset(Block::A, gt.n, j, reading));
                    add(Block::B, a, b, j, c0 + 5, r0 + 1, connector_offset(Block::B, gt.n, j, reading));
                }
                if (b + 1 < gt.k) {
                    add(Block::C, a, b, j, c0 + 1, r0 + 5, connector_offset(Block::C, gt.n, j, reading));
                    add(Block::D, a, b, j, c0 + 3, r0 + 5, connector_offset(Block::D, gt.n, j, reading));
                }
            }
        }
    return inst;
}

Graph gadget_graph(const GadgetInstance& inst) {
    return graphcore::build(inst.translates, [&](const Translate& s, const Translate& t) {
        return polygons_intersect(inst.poly, inst.poly, t.ref - s.ref);
    });
}

CheckReport check_gadget_domination_pattern(const GadgetInstance& inst, const Graph& g) {
    CheckReport r;
    int nn = inst.n * inst.n;
    for (std::size_t i = 0; i < inst.translates.size(); ++i) {
        const auto& x = inst.translates[i];
        if (!is_x(x.block)) continue;
        int l = block_ell(x.block);
        int lnext = l % 8 + 1;
        for (int j = 0; j <= nn; ++j) {
            int own = inst.find(y_block(l), x.a, x.b, j);
            int next = inst.find(y_block(lnext), x.a, x.b, j);
            if (own < 0 || next < 0) {
                r.ok = false;
                r.detail = "missing Y translate";
                return r;
            }
            bool want_own = j >= x.j, want_next = j < x.j;
            r.checked += 2;
            if (g.adjacent(static_cast<int>(i), own) != want_own ||
                g.adjacent(static_cast<int>(i), next) != want_next) {
                r.ok = false;
                r.detail = "gadget (" + std::to_string(x.a + 1) + "," + std::to_string(x.b + 1) + ") " +
                           to_string(x.block) + "(" + std::to_string(x.j) + ") against Y index " + std::to_string(j);
                return r;
            }
        }
    }
    return r;
}

CheckReport check_cross_block(const GadgetInstance& inst, const Graph& g) {
    CheckReport r;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            if (cell_distance(inst.translates[i], inst.translates[j]) < 2) continue;
            ++r.checked;
            if (g.adjacent(i, j) && r.ok) {
                r.ok = false;
                r.detail = to_string(inst.translates[i].block) + " meets distant " +
                           to_string(inst.translates[j].block);
            }
        }
    return r;
}

std::vector<int> choice_set(const GadgetInstance& inst, const Choice& choice) {
    std::vector<int> out;
    for (int a = 0; a < inst.k; ++a)
        for (int b = 0; b < inst.k; ++b) {
            int j = pair_index(inst.n, choice.at(a).at(b).first, choice.at(a).at(b).second);
            for (int l = 1; l <= 8; ++l) {
                int idx = inst.find(x_block(l), a, b, j);
                if (idx < 0) throw std::invalid_argument("choice is not in the grid tiling cell");
                out.push_back(idx);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> canonical_set(const GadgetInstance& inst, const Choice& choice) {
    if (!gt_feasible(inst.gt, choice)) throw std::invalid_argument("choice is not a feasible grid tiling solution");
    return choice_set(inst, choice);
}

namespace {

bool block_dominated(const GadgetInstance& inst, const Graph& g, Block blk, int a, int b,
                     const std::vector<int>& chosen) {
    for (std::size_t i = 0; i < inst.translates.size(); ++i) {
        const auto& t = inst.translates[i];
        if (t.block != blk || t.a != a || t.b != b) continue;
        bool hit = false;
        for (int c : chosen)
            if (c == static_cast<int>(i) || g.adjacent(c, static_cast<int>(i))) hit = true;
        if (!hit) return false;
    }
    return true;
}

std::vector<int> x_translates(const GadgetInstance& inst, int a, int b, int j) {
    std::vector<int> out;
    for (int l = 1; l <= 8; ++l)
        if (int idx = inst.find(x_block(l), a, b, j); idx >= 0) out.push_back(idx);
    return out;
}

std::set<int> surviving(const GadgetInstance& inst, int a, int b) {
    std::set<int> out;
    for (auto [x, y] : inst.gt.at(a, b)) out.insert(pair_index(inst.n, x, y));
    return out;
}

}  // namespace

ConnectorState connector_state(const GadgetInstance& inst, const Graph& g, int a, int b, bool horizontal, int jg,
                               int jh) {
    int ha = horizontal ? a + 1 : a, hb = horizontal ? b : b + 1;
    std::vector<int> chosen = x_translates(inst, a, b, jg);
    auto other = x_translates(inst, ha, hb, jh);
    chosen.insert(chosen.end(), other.begin(), other.end());
    Block first = horizontal ? Block::A : Block::C, second = horizontal ? Block::B : Block::D;
    return {block_dominated(inst, g, first, a, b, chosen), block_dominated(inst, g, second, a, b, chosen)};
}

CheckReport check_connectors(const GadgetInstance& inst, const Graph& g) {
    CheckReport r;
    for (int a = 0; a < inst.k; ++a)
        for (int b = 0; b < inst.k; ++b)
            for (bool horizontal : {true, false}) {
                int ha = horizontal ? a + 1 : a, hb = horizontal ? b : b + 1;
                if (ha >= inst.k || hb >= inst.k) continue;
                for (int jg : surviving(inst, a, b))
                    for (int jh : surviving(inst, ha, hb)) {
                        auto s = connector_state(inst, g, a, b, horizontal, jg, jh);
                        int ig = horizontal ? iota1(inst.n, jg) : iota2(inst.n, jg);
                        int ih = horizontal ? iota1(inst.n, jh) : iota2(inst.n, jh);
                        ++r.checked;
                        if (s.first != (ig <= ih) || s.second != (ig >= ih)) {
                            if (r.ok)
                                r.detail = std::string(horizontal ? "A/B" : "C/D") + " at gadget (" +
                                           std::to_string(a + 1) + "," + std::to_string(b + 1) + ") with j " +
                                           std::to_string(jg) + " / " + std::to_string(jh);
                            r.ok = false;
                        }
                    }
            }
    return r;
}

std::string format_gadget(const GadgetInstance& inst) {
    std::ostringstream out;
    out << format_gridtiling(inst.gt);
    out << geom2d::format_polygon(inst.poly);
    out << squarelike::format_certificate(inst.cert);
    out << "reading " << (inst.reading == ConnectorReading::Adjusted ? "adjusted" : "verbatim") << "\n";
    for (const auto& t : inst.translates)
        out << "t " << to_string(t.block) << " " << t.a + 1 << " " << t.b + 1 << " " << t.j << " "
            << geom2d::to_string(t.ref) << "\n";
    return out.str();
}

squarelike::SquareLikeCert parse_certificate(const std::vector<io::Line>& lines) {
    squarelike::SquareLikeCert c;
    std::set<std::string> seen;
    for (const auto& line : lines) {
        const std::string& kw = line.keyword();
        if (!seen.insert(kw).second) io::fail(line, 0, "'" + kw + "' given twice");
        if (kw == "n") {
            io::expect_size(line, 2);
            c.n = static_cast<int>(io::integer_at(line, 1));
        } else if (kw == "epsilon") {
            io::expect_size(line, 2);
            c.epsilon = io::rational_at(line, 1);
        } else {
            io::expect_size(line, 3);
            Vec2 v(io::rational_at(line, 1), io::rational_at(line, 2));
            if (kw == "b1") c.b1 = v;
            else if (kw == "b2") c.b2 = v;
            else if (kw == "u1") c.u1 = v;
            else if (kw == "u2") c.u2 = v;
            else io::fail(line, 0, "unknown certificate keyword '" + kw + "'");
        }
    }
    for (const char* kw : {"n", "b1", "b2", "u1", "u2"})
        if (!seen.count(kw)) throw ParseError(std::string("certificate is missing '") + kw + "'");
    return c;
}

GadgetFile parse_gadget(const std::vector<io::Line>& lines) {
    std::vector<io::Line> gt_lines, poly_lines, cert_lines;
    ConnectorReading reading = ConnectorReading::Adjusted;
    std::vector<Translate> ts;
    for (const auto& line : lines) {
        const std::string& kw = line.keyword();
        if (kw == "gt" || kw == "cell") {
            gt_lines.push_back(line);
        } else if (kw == "poly" || kw == "v") {
            poly_lines.push_back(line);
        } else if (kw == "n" || kw == "epsilon" || kw == "b1" || kw == "b2" || kw == "u1" || kw == "u2") {
            cert_lines.push_back(line);
        } else if (kw == "reading") {
            io::expect_size(line, 2);
            if (line.tokens[1].text == "adjusted") reading = ConnectorReading::Adjusted;
            else if (line.tokens[1].text == "verbatim") reading = ConnectorReading::Verbatim;
            else io::fail(line, 1, "reading must be 'adjusted' or 'verbatim'");
        } else if (kw == "t") {
            io::expect_size(line, 7);
            auto blk = parse_block(line.tokens[1].text);
            if (!blk) io::fail(line, 1, "unknown block '" + line.tokens[1].text + "'");
            Translate t{*blk,
                        static_cast<int>(io::integer_at(line, 2)) - 1,
                        static_cast<int>(io::integer_at(line, 3)) - 1,
                        static_cast<int>(io::integer_at(line, 4)),
                        0,
                        0,
                        0,
                        0,
                        Vec2(io::rational_at(line, 5), io::rational_at(line, 6))};
            ts.push_back(t);
        } else {
            io::fail(line, 0, "unknown keyword '" + kw + "' in gadget file");
        }
    }
    auto polys = geom2d::parse_polygons(poly_lines);
    if (polys.size() != 1) throw ParseError("gadget file needs exactly one polygon");
    return GadgetFile{parse_gridtiling(gt_lines), polys.front(), parse_certificate(cert_lines), reading,
                      std::move(ts)};
}

// ------------------------------------------------------------- split graphs

Graph split_graph(const SplitGraph& s) {
    Graph g(s.nc + s.ni);
    for (int a = 0; a < s.nc; ++a)
        for (int b = a + 1; b < s.nc; ++b) g.add_edge(a, b);
    for (auto [c, i] : s.cross) g.add_edge(c, s.nc + i);
    return g;
}

SplitGraph parse_split(const std::vector<io::Line>& lines) {
    if (lines.empty() || lines.front().keyword() != "split")
        throw ParseError("split graph file must start with 'split <nc> <ni>'",
                         lines.empty() ? 1 : lines.front().number, 1);
    io::expect_size(lines.front(), 3);
    SplitGraph s;
    long nc = io::integer_at(lines.front(), 1), ni = io::integer_at(lines.front(), 2);
    if (nc < 0 || nc > 1000) io::fail(lines.front(), 1, "clique size out of range");
    if (ni < 0 || ni > 1000) io::fail(lines.front(), 2, "independent set size out of range");
    s.nc = static_cast<int>(nc);
    s.ni = static_cast<int>(ni);
    std::set<Pair> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        if (line.keyword() != "e") io::fail(line, 0, "expected 'e <c> <i>'");
        io::expect_size(line, 3);
        long c = io::integer_at(line, 1), i = io::integer_at(line, 2);
        if (c < 0 || c >= nc) io::fail(line, 1, "clique vertex out of range");
        if (i < 0 || i >= ni) io::fail(line, 2, "independent vertex out of range");
        if (!seen.insert({static_cast<int>(c), static_cast<int>(i)}).second) io::fail(line, 0, "duplicate edge");
        s.cross.emplace_back(static_cast<int>(c), static_cast<int>(i));
    }
    std::sort(s.cross.begin(), s.cross.end());
    return s;
}

std::string format_split(const SplitGraph& s) {
    std::ostringstream out;
    out << "split " << s.nc << " " << s.ni << "\n";
    for (auto [c, i] : s.cross) out << "e " << c << " " << i << "\n";
    return out.str();
}

SplitPolygons split_graph_polygons(const SplitGraph& s) {
    int pockets = std::max(s.ni, 3);
    int m = 2 * pockets;
    SplitPolygons out;
    // Rational points of the unit circle, t = tan(theta / 2) rounded to 1/1024,
    // at roughly equal angles; increasing t walks counter-clockwise.
    for (int i = 0; i < m; ++i) {
        double theta = -std::numbers::pi + 2 * std::numbers::pi * (i + 0.5) / m;
        Rational t = exactnum::make_rational(std::lround(std::tan(theta / 2) * 1024), 1024);
        Rational d = 1 + t * t;
        out.outer.emplace_back(Rational((1 - t * t) / d), Rational(2 * t / d));
    }
    std::set<Pair> edges(s.cross.begin(), s.cross.end());
    for (int c = 0; c < s.nc; ++c) {
        std::vector<Point2> vs;
        for (int i = 0; i < m; ++i)
            if (i % 2 == 0 || (i / 2 < s.ni && edges.count({c, i / 2}))) vs.push_back(out.outer[i]);
        out.polygons.emplace_back(vs);
    }
    for (int p = 0; p < s.ni; ++p) {
        const Point2& a = out.outer[2 * p];
        const Point2& b = out.outer[2 * p + 1];
        const Point2& c = out.outer[(2 * p + 2) % m];
        Point2 g = Rational(1, 3) * (a + b + c);
        std::vector<Point2> tri;
        for (const Point2* v : {&a, &b, &c}) tri.push_back(g + Rational(1, 4) * (*v - g));
        out.polygons.emplace_back(tri);
    }
    return out;
}

SplitCheck verify_split(const SplitGraph& s, const SplitPolygons& p) {
    SplitCheck r;
    const auto& ps = p.polygons;
    if (static_cast<int>(ps.size()) != s.nc + s.ni) return r;
    Graph g = graphcore::build(ps, [](const Polygon& a, const Polygon& b) { return polygons_intersect(a, b); });
    r.adjacency = graphcore::adjacency_equals(g, split_graph(s));
    r.clique_meets = true;
    for (int a = 0; a < s.nc; ++a)
        for (int b = a + 1; b < s.nc; ++b) r.clique_meets = r.clique_meets && polygons_intersect(ps[a], ps[b]);
    r.independent_disjoint = true;
    for (int a = 0; a < s.ni; ++a)
        for (int b = a + 1; b < s.ni; ++b)
            r.independent_disjoint = r.independent_disjoint && !polygons_intersect(ps[s.nc + a], ps[s.nc + b]);
    std::set<Pair> edges(s.cross.begin(), s.cross.end());
    r.containment = true;
    for (int c = 0; c < s.nc; ++c)
        for (int i = 0; i < s.ni; ++i) {
            bool inside = true;
            for (const auto& v : ps[s.nc + i].vertices())
                inside = inside && geom2d::point_in_polygon(v, ps[c]) != geom2d::Location::Outside;
            bool meets = polygons_intersect(ps[c], ps[s.nc + i]);
            bool edge = edges.count({c, i}) > 0;
            // containment when adjacent, complete separation otherwise
            if (edge ? !inside : meets) r.containment = false;
        }
    return r;
}

}  // namespace geodom::constructions
