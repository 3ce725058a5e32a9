#include "geodom/diskdom.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geodom::diskdom {

using geom2d::dist2;

void check_instance(const DiskInstance& inst) {
    std::set<Point2> seen;
    for (const auto& c : inst.centers)
        if (!seen.insert(c).second) throw std::invalid_argument("repeated disk center " + geom2d::to_string(c));
}

DiskInstance parse_disks(const std::vector<io::Line>& lines) {
    DiskInstance inst;
    std::set<Point2> seen;
    for (const auto& line : lines) {
        if (line.keyword() != "disk") io::fail(line, 0, "expected 'disk <x> <y>'");
        io::expect_size(line, 3);
        Point2 c(io::rational_at(line, 1), io::rational_at(line, 2));
        if (!seen.insert(c).second) io::fail(line, 1, "repeated disk center");
        inst.centers.push_back(c);
    }
    return inst;
}

std::string format_disks(const DiskInstance& inst) {
    std::ostringstream out;
    for (const auto& c : inst.centers) out << "disk " << geom2d::to_string(c) << "\n";
    return out.str();
}

bool dominates_pair(const Point2& c1, const Point2& c2) { return dist2(c1, c2) <= 4; }

graphcore::Graph disk_graph(const DiskInstance& inst) {
    return graphcore::build(inst.centers, [](const Point2& a, const Point2& b) { return dominates_pair(a, b); });
}

int Face::dimension() const {
    switch (kind) {
        case FaceKind::Cell: return 2;
        case FaceKind::Arc:
        case FaceKind::Wall: return 1;
        default: return 0;
    }
}

namespace {

SqrtExpr as_expr(const QuadNum& q) { return SqrtExpr{q.rat(), q.irr(), 1, Rational(q.field())}; }

int to_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

int cmpq(const QuadNum& a, const Rational& b) {
    if (a.is_rational()) return a.rat() < b ? -1 : (a.rat() > b ? 1 : 0);
    return exactnum::sign_sqrt(a.rat() - b, a.irr(), Rational(a.field()));
}

int cmpq(const QuadNum& a, const QuadNum& b) {
    if (b.is_rational()) return cmpq(a, b.rat());
    if (a.is_rational()) return -cmpq(b, a.rat());
    if (a.field() == b.field()) return exactnum::sign_sqrt(a.rat() - b.rat(), a.irr() - b.irr(), Rational(a.field()));
    return to_int(exactnum::cmp_quadratic(as_expr(a), as_expr(b)));
}

// Height of an arc at a rational abscissa inside its circle's x-range.
SqrtExpr arc_at(const Point2& c, bool upper, const Rational& x) {
    Rational r = 4 - (x - c.x) * (x - c.x);
    if (r <= 0) return SqrtExpr::from_rational(c.y);
    return SqrtExpr{c.y, upper ? 1 : -1, 1, r};
}

// sign(arc(X) - Y) for a point on the vertical line x = X, where Y lies in the
// field of X whenever X is irrational.
int arc_minus(const Point2& c, bool upper, const QuadNum& X, const QuadNum& Y) {
    if (X.is_rational()) return to_int(exactnum::cmp_quadratic(arc_at(c, upper, X.rat()), as_expr(Y)));
    QuadNum dx = X - QuadNum(c.x);
    QuadNum r = QuadNum(4) - dx * dx;
    QuadNum a = Y - QuadNum(c.y);
    if (r.sign() == 0) return -a.sign();
    if (upper) return a.sign() < 0 ? 1 : (r - a * a).sign();
    return a.sign() > 0 ? -1 : (a * a - r).sign();
}

// sign(y - arc(x)) at a rational point
int above_arc(const Point2& c, bool upper, const Point2& p) {
    Rational r = 4 - (p.x - c.x) * (p.x - c.x);
    if (r < 0) throw std::logic_error("arc evaluated outside its circle");
    return exactnum::sign_sqrt(p.y - c.y, upper ? -1 : 1, r);
}

bool on_arc(const Point2& c, bool upper, const Point2& p) {
    if (dist2(c, p) != 4) return false;
    return upper ? p.y > c.y : p.y < c.y;
}

struct RawEvent {
    EventKey key;
    QuadNum x, y;
};

struct Item {
    bool event = false;
    QuadNum y;
    std::vector<EventKey> keys;  // sorted, event items only
    std::vector<int> arcs;
};

struct LineData {
    QuadNum x;
    std::vector<Item> items;
    std::map<int, int> arc_item;
    std::vector<bool> wall;  // interval k lies below item k
};

struct SlabData {
    Rational sample;
    std::vector<int> arcs;  // bottom to top
    std::map<int, int> pos;
};

void push_event(std::vector<int>& key, const std::optional<EventKey>& e) {
    if (e) {
        key.insert(key.end(), {e->kind, e->a, e->b, e->tag});
    } else {
        key.insert(key.end(), {-1, -1, -1, -1});
    }
}

void add_circles(std::set<int>& out, const EventKey& e) {
    out.insert(e.a);
    if (e.kind == 1) out.insert(e.b);
}

// The representative adds as few circles as possible to `base`.
EventKey pick(const std::vector<EventKey>& cands, const std::set<int>& base) {
    auto extra = [&](const EventKey& e) {
        int n = base.count(e.a) ? 0 : 1;
        if (e.kind == 1 && !base.count(e.b)) ++n;
        return n;
    };
    EventKey best = cands.front();
    for (const auto& e : cands)
        if (std::pair(extra(e), e) < std::pair(extra(best), best)) best = e;
    return best;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Decomposition::Decomposition(const std::vector<Point2>& centers, std::vector<int> ids) : ids_(std::move(ids)) {
    if (ids_.empty()) throw std::invalid_argument("decomposition needs at least one circle");
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw std::invalid_argument("repeated circle id");
    for (int id : ids_) circles_.emplace(id, centers.at(id));
    auto C = [&](int id) -> const Point2& { return circles_.at(id); };

    // events
    std::vector<RawEvent> raw;
    for (int id : ids_) {
        raw.push_back({{0, id, -1, -1}, QuadNum(C(id).x - 2), QuadNum(C(id).y)});
        raw.push_back({{0, id, -1, 1}, QuadNum(C(id).x + 2), QuadNum(C(id).y)});
    }
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (std::size_t j = i + 1; j < ids_.size(); ++j) {
            int a = ids_[i], b = ids_[j];
            geom2d::Vec2 d = C(b) - C(a);
            Rational len2 = d.x * d.x + d.y * d.y;
            if (len2 > 16) continue;
            Point2 m = Rational(1, 2) * (C(a) + C(b));
            if (len2 == 16) {
                raw.push_back({{1, a, b, 0}, QuadNum(m.x), QuadNum(m.y)});
                continue;
            }
            QuadNum t = QuadNum::sqrt((16 - len2) / (4 * len2));
            for (int s : {-1, 1}) {
                QuadNum st = QuadNum(Rational(s)) * t;
                raw.push_back({{1, a, b, s}, QuadNum(m.x) - st * QuadNum(d.y), QuadNum(m.y) + st * QuadNum(d.x)});
            }
        }

    std::sort(raw.begin(), raw.end(), [](const RawEvent& p, const RawEvent& q) {
        int c = cmpq(p.x, q.x);
        return c != 0 ? c < 0 : cmpq(p.y, q.y) < 0;
    });
    std::vector<std::vector<RawEvent>> at_line;
    for (const auto& e : raw) {
        if (at_line.empty() || cmpq(at_line.back().front().x, e.x) != 0) at_line.emplace_back();
        at_line.back().push_back(e);
    }
    std::size_t m = at_line.size();
    lines_ = m;

    // slabs: slab s lies between lines s-1 and s
    std::vector<SlabData> slabs(m + 1);
    for (std::size_t s = 0; s <= m; ++s) {
        SlabData& sl = slabs[s];
        if (s == 0) {
            sl.sample = Rational(at_line.front().front().x.floor() - 1);
        } else if (s == m) {
            sl.sample = Rational(at_line.back().front().x.floor() + 1);
        } else {
            sl.sample = exactnum::rational_between(as_expr(at_line[s - 1].front().x), as_expr(at_line[s].front().x));
        }
        for (int id : ids_)
            if (C(id).x - 2 < sl.sample && sl.sample < C(id).x + 2) {
                sl.arcs.push_back(arc_id(id, false));
                sl.arcs.push_back(arc_id(id, true));
            }
        std::map<int, SqrtExpr> height;
        for (int a : sl.arcs) height.emplace(a, arc_at(C(arc_circle(a)), arc_upper(a), sl.sample));
        std::sort(sl.arcs.begin(), sl.arcs.end(), [&](int p, int q) {
            // the two halves of one circle need no square roots
            if (arc_circle(p) == arc_circle(q)) return !arc_upper(p) && arc_upper(q);
            return exactnum::cmp_quadratic(height.at(p), height.at(q)) < 0;
        });
        for (std::size_t i = 0; i < sl.arcs.size(); ++i) sl.pos[sl.arcs[i]] = static_cast<int>(i);
    }

    // vertical structure on each event line
    std::vector<LineData> lines(m);
    for (std::size_t j = 0; j < m; ++j) {
        LineData& ln = lines[j];
        ln.x = at_line[j].front().x;
        std::set<int> through;
        for (const auto& e : at_line[j]) {
            if (ln.items.empty() || cmpq(ln.items.back().y, e.y) != 0) {
                Item it;
                it.event = true;
                it.y = e.y;
                ln.items.push_back(it);
            }
            ln.items.back().keys.push_back(e.key);
        }
        for (auto& it : ln.items) {
            std::sort(it.keys.begin(), it.keys.end());
            std::set<int> circles;
            for (const auto& k : it.keys) add_circles(circles, k);
            for (int c : circles) {
                int side = cmpq(it.y, C(c).y);
                if (side >= 0) it.arcs.push_back(arc_id(c, true));
                if (side <= 0) it.arcs.push_back(arc_id(c, false));
            }
            through.insert(it.arcs.begin(), it.arcs.end());
        }
        for (int id : ids_) {
            if (cmpq(ln.x, C(id).x - 2) <= 0 || cmpq(ln.x, C(id).x + 2) >= 0) continue;
            for (bool up : {false, true}) {
                int a = arc_id(id, up);
                if (through.count(a)) continue;
                Item it;
                it.arcs = {a};
                ln.items.push_back(it);
            }
        }
        const SlabData& left = slabs[j];
        std::sort(ln.items.begin(), ln.items.end(), [&](const Item& p, const Item& q) {
            if (p.event && q.event) return cmpq(p.y, q.y) < 0;
            if (!p.event && !q.event) return left.pos.at(p.arcs[0]) < left.pos.at(q.arcs[0]);
            if (p.event) return arc_minus(C(arc_circle(q.arcs[0])), arc_upper(q.arcs[0]), ln.x, p.y) > 0;
            return arc_minus(C(arc_circle(p.arcs[0])), arc_upper(p.arcs[0]), ln.x, q.y) < 0;
        });
        int r = static_cast<int>(ln.items.size());
        for (int k = 0; k < r; ++k)
            for (int a : ln.items[k].arcs) ln.arc_item[a] = k;
        ln.wall.assign(r + 1, false);
        for (int k = 0; k <= r; ++k)
            ln.wall[k] = (k > 0 && ln.items[k - 1].event) || (k < r && ln.items[k].event);
    }

    // gap of slab s containing the open interval k of line j
    auto gap_of = [&](std::size_t s, std::size_t j, int k) {
        int g = 0;
        for (int a : slabs[s].arcs)
            if (lines[j].arc_item.at(a) <= k - 1) ++g;
        return g;
    };

    std::vector<int> cell_base(m + 2, 0), arc_base(m + 2, 0);
    for (std::size_t s = 0; s <= m; ++s) {
        cell_base[s + 1] = cell_base[s] + static_cast<int>(slabs[s].arcs.size()) + 1;
        arc_base[s + 1] = arc_base[s] + static_cast<int>(slabs[s].arcs.size());
    }
    UnionFind cells(cell_base[m + 1]);
    UnionFind arcs(std::max(arc_base[m + 1], 1));
    for (std::size_t j = 0; j < m; ++j) {
        const LineData& ln = lines[j];
        int r = static_cast<int>(ln.items.size());
        for (int k = 0; k <= r; ++k)
            if (!ln.wall[k]) cells.unite(cell_base[j] + gap_of(j, j, k), cell_base[j + 1] + gap_of(j + 1, j, k));
        for (int k = 0; k < r; ++k) {
            const Item& it = ln.items[k];
            if (it.event || ln.wall[k] || ln.wall[k + 1]) continue;
            int a = it.arcs[0];
            arcs.unite(arc_base[j] + slabs[j].pos.at(a), arc_base[j + 1] + slabs[j + 1].pos.at(a));
        }
    }

    auto event_items = [&](const LineData& ln, int from, int to) {
        std::vector<EventKey> out;
        for (int k = std::max(from, 0); k <= std::min(to, static_cast<int>(ln.items.size()) - 1); ++k)
            if (ln.items[k].event) out.insert(out.end(), ln.items[k].keys.begin(), ln.items[k].keys.end());
        return out;
    };
    auto finish = [&](Face f, const std::set<int>& base, const std::vector<std::optional<EventKey>>& reps,
                      std::vector<std::vector<int>> alts, bool inside) {
        std::set<int> circles = base;
        for (const auto& e : reps)
            if (e) add_circles(circles, *e);
        f.defining.assign(circles.begin(), circles.end());
        faces_.push_back(std::move(f));
        alternatives_.push_back(std::move(alts));
        inside_.push_back(inside);
    };

    // cells
    std::map<int, std::vector<std::size_t>> cell_groups;
    for (std::size_t s = 0; s <= m; ++s)
        for (std::size_t g = 0; g <= slabs[s].arcs.size(); ++g)
            cell_groups[cells.find(cell_base[s] + static_cast<int>(g))].push_back(s);
    std::map<int, bool> cell_inside;
    for (auto& [root, members] : cell_groups) {
        std::size_t sl = *std::min_element(members.begin(), members.end());
        std::size_t sr = *std::max_element(members.begin(), members.end());
        // recover the bounding arcs from one member gap
        int lower = -1, upper = -1;
        for (std::size_t g = 0; g <= slabs[sl].arcs.size(); ++g)
            if (cells.find(cell_base[sl] + static_cast<int>(g)) == root) {
                lower = g > 0 ? slabs[sl].arcs[g - 1] : -1;
                upper = g < slabs[sl].arcs.size() ? slabs[sl].arcs[g] : -1;
            }
        Face f;
        f.kind = FaceKind::Cell;
        f.lower = lower;
        f.upper = upper;
        std::set<int> base;
        if (lower >= 0) base.insert(arc_circle(lower));
        if (upper >= 0) base.insert(arc_circle(upper));
        std::vector<EventKey> cl, cr;
        auto span = [&](const LineData& ln, std::vector<EventKey>& out) {
            int lo = lower >= 0 ? ln.arc_item.at(lower) : 0;
            int hi = upper >= 0 ? ln.arc_item.at(upper) : static_cast<int>(ln.items.size()) - 1;
            out = event_items(ln, lo, hi);
        };
        if (sl > 0) {
            f.left = lines[sl - 1].x;
            span(lines[sl - 1], cl);
        }
        if (sr < m) {
            f.right = lines[sr].x;
            span(lines[sr], cr);
        }
        std::optional<EventKey> rl, rr;
        if (!cl.empty()) rl = pick(cl, base);
        if (!cr.empty()) rr = pick(cr, base);
        auto make = [&](const std::optional<EventKey>& a, const std::optional<EventKey>& b) {
            std::vector<int> key{0, lower, upper};
            push_event(key, a);
            push_event(key, b);
            return key;
        };
        f.key = make(rl, rr);
        std::vector<std::vector<int>> alts;
        std::vector<std::optional<EventKey>> ol(cl.begin(), cl.end()), orr(cr.begin(), cr.end());
        if (ol.empty()) ol.push_back(std::nullopt);
        if (orr.empty()) orr.push_back(std::nullopt);
        for (const auto& a : ol)
            for (const auto& b : orr) alts.push_back(make(a, b));
        bool inside = false;
        if (lower >= 0 && upper >= 0) {
            const Rational& xs = slabs[sl].sample;
            Rational ys = exactnum::rational_between(arc_at(C(arc_circle(lower)), arc_upper(lower), xs),
                                                     arc_at(C(arc_circle(upper)), arc_upper(upper), xs));
            Point2 q(xs, ys);
            for (int id : ids_)
                if (dist2(q, C(id)) < 4) inside = true;
        }
        cell_inside[root] = inside;
        finish(std::move(f), base, {rl, rr}, std::move(alts), inside);
    }

    // arc edges
    std::map<int, std::vector<std::size_t>> arc_groups;
    std::map<int, int> arc_of;
    for (std::size_t s = 0; s <= m; ++s)
        for (std::size_t i = 0; i < slabs[s].arcs.size(); ++i) {
            int root = arcs.find(arc_base[s] + static_cast<int>(i));
            arc_groups[root].push_back(s);
            arc_of[root] = slabs[s].arcs[i];
        }
    for (auto& [root, members] : arc_groups) {
        std::size_t sl = *std::min_element(members.begin(), members.end());
        std::size_t sr = *std::max_element(members.begin(), members.end());
        int a = arc_of[root];
        Face f;
        f.kind = FaceKind::Arc;
        f.lower = a;
        f.left = lines[sl - 1].x;
        f.right = lines[sr].x;
        std::set<int> base{arc_circle(a)};
        auto ends = [&](const LineData& ln) {
            int k = ln.arc_item.at(a);
            if (ln.items[k].event) return ln.items[k].keys;
            return event_items(ln, k - 1, k + 1);
        };
        std::vector<EventKey> cl = ends(lines[sl - 1]), cr = ends(lines[sr]);
        EventKey rl = pick(cl, base), rr = pick(cr, base);
        auto make = [&](const EventKey& x, const EventKey& y) {
            std::vector<int> key{1, a};
            push_event(key, x);
            push_event(key, y);
            return key;
        };
        f.key = make(rl, rr);
        std::vector<std::vector<int>> alts;
        for (const auto& x : cl)
            for (const auto& y : cr) alts.push_back(make(x, y));
        finish(std::move(f), base, {rl, rr}, std::move(alts), true);
    }

    // walls and vertices
    for (std::size_t j = 0; j < m; ++j) {
        const LineData& ln = lines[j];
        int r = static_cast<int>(ln.items.size());
        auto end_choices = [&](int k) {
            std::vector<std::vector<int>> out;
            if (k < 0 || k >= r) {
                out.push_back({-1, -1, -1, -1, -1});
            } else if (ln.items[k].event) {
                for (const auto& e : ln.items[k].keys) out.push_back({1, e.kind, e.a, e.b, e.tag});
            } else {
                out.push_back({0, ln.items[k].arcs[0], -1, -1, -1});
            }
            return out;
        };
        for (int k = 0; k <= r; ++k) {
            if (!ln.wall[k]) continue;
            Face f;
            f.kind = FaceKind::Wall;
            f.left = ln.x;
            std::set<int> base;
            std::vector<std::optional<EventKey>> reps;
            auto end = [&](int i, std::optional<QuadNum>& y, int& arc) {
                if (i < 0 || i >= r) return;
                const Item& it = ln.items[i];
                if (it.event) {
                    y = it.y;
                    reps.push_back(it.keys.front());
                } else {
                    arc = it.arcs[0];
                    base.insert(arc_circle(arc));
                }
            };
            end(k - 1, f.y_lo, f.lower);
            end(k, f.y_hi, f.upper);
            auto lo = end_choices(k - 1), hi = end_choices(k);
            std::vector<std::vector<int>> alts;
            for (const auto& a : lo)
                for (const auto& b : hi) {
                    std::vector<int> key{2};
                    key.insert(key.end(), a.begin(), a.end());
                    key.insert(key.end(), b.begin(), b.end());
                    alts.push_back(key);
                }
            f.key = alts.front();
            bool inside = cell_inside.at(cells.find(cell_base[j + 1] + gap_of(j + 1, j, k)));
            finish(std::move(f), base, reps, std::move(alts), inside);
        }
        for (int k = 0; k < r; ++k) {
            const Item& it = ln.items[k];
            Face f;
            if (it.event) {
                f.kind = FaceKind::EventVertex;
                f.vx = ln.x;
                f.vy = it.y;
                std::vector<std::vector<int>> alts;
                for (const auto& e : it.keys) {
                    std::vector<int> key{3};
                    push_event(key, e);
                    alts.push_back(key);
                }
                f.key = alts.front();
                finish(std::move(f), {}, {it.keys.front()}, std::move(alts), true);
                continue;
            }
            if (!ln.wall[k] && !ln.wall[k + 1]) continue;
            int a = it.arcs[0];
            f.kind = FaceKind::TouchVertex;
            f.lower = a;
            f.left = ln.x;
            // the inside of the circle lies below an upper arc
            int inner = arc_upper(a) ? k - 1 : k + 1;
            f.inner_touch = inner >= 0 && inner < r && ln.items[inner].event;
            int outer = arc_upper(a) ? k + 1 : k - 1;
            std::vector<EventKey> cands = event_items(ln, k - 1, k + 1);
            const Item& src = ln.items[f.inner_touch ? inner : outer];
            EventKey rep = pick(src.keys, {arc_circle(a)});
            auto make = [&](const EventKey& e) {
                std::vector<int> key{4, a};
                push_event(key, e);
                return key;
            };
            f.key = make(rep);
            std::vector<std::vector<int>> alts;
            for (const auto& e : cands) alts.push_back(make(e));
            finish(std::move(f), {arc_circle(a)}, {rep}, std::move(alts), true);
        }
    }
}

bool Decomposition::contains(const Face& f, const Point2& p) const {
    auto in_x = [&]() {
        return (!f.left || cmpq(*f.left, p.x) < 0) && (!f.right || cmpq(*f.right, p.x) > 0);
    };
    auto arc_c = [&](int a) -> const Point2& { return circles_.at(arc_circle(a)); };
    switch (f.kind) {
        case FaceKind::Cell:
            if (!in_x()) return false;
            if (f.lower >= 0 && above_arc(arc_c(f.lower), arc_upper(f.lower), p) <= 0) return false;
            if (f.upper >= 0 && above_arc(arc_c(f.upper), arc_upper(f.upper), p) >= 0) return false;
            return true;
        case FaceKind::Arc:
            return in_x() && on_arc(arc_c(f.lower), arc_upper(f.lower), p);
        case FaceKind::Wall:
            if (cmpq(*f.left, p.x) != 0) return false;
            if (f.y_lo) {
                if (cmpq(*f.y_lo, p.y) >= 0) return false;
            } else if (f.lower >= 0 && above_arc(arc_c(f.lower), arc_upper(f.lower), p) <= 0) {
                return false;
            }
            if (f.y_hi) {
                if (cmpq(*f.y_hi, p.y) <= 0) return false;
            } else if (f.upper >= 0 && above_arc(arc_c(f.upper), arc_upper(f.upper), p) >= 0) {
                return false;
            }
            return true;
        case FaceKind::EventVertex:
            return cmpq(f.vx, p.x) == 0 && cmpq(f.vy, p.y) == 0;
        case FaceKind::TouchVertex:
            return cmpq(*f.left, p.x) == 0 && on_arc(arc_c(f.lower), arc_upper(f.lower), p);
    }
    return false;
}

DiskLookup::DiskLookup(DiskInstance inst) : inst_(std::move(inst)) {
    check_instance(inst_);
    const auto& P = inst_.centers;
    int n = static_cast<int>(P.size());
    std::set<std::vector<int>> done;
    for (int z = 0; z < n; ++z) {
        std::vector<int> near;
        for (int i = 0; i < n; ++i)
            if (dist2(P[i], P[z]) <= 16) near.push_back(i);
        std::vector<int> pick;
        // all subsets of size 1..4 of `near`
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (!pick.empty() && done.insert(pick).second) add_subset(pick);
            if (pick.size() == 4) return;
            for (std::size_t i = from; i < near.size(); ++i) {
                pick.push_back(near[i]);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
}

long DiskLookup::count_face(const Decomposition& dec, const Face& f, const std::vector<int>& near) const {
    long count = 0;
    for (int i : near)
        if (dec.contains(f, inst_.centers[i])) ++count;
    return count;
}

// Points on the boundary arcs of a cell that bulge away from it, i.e. the arcs
// whose circle contains the cell; the coverage sum credits them to the cell.
long DiskLookup::count_credit(const Decomposition& dec, const Face& f, const std::vector<int>& near) const {
    Face edge;
    edge.kind = FaceKind::Arc;
    edge.left = f.left;
    edge.right = f.right;
    long count = 0;
    for (int a : {f.upper >= 0 && arc_upper(f.upper) ? f.upper : -1, f.lower >= 0 && !arc_upper(f.lower) ? f.lower : -1}) {
        if (a < 0) continue;
        edge.lower = a;
        count += count_face(dec, edge, near);
    }
    return count;
}

std::vector<int> credit_key(std::vector<int> cell_key) {
    cell_key[0] = 5;
    return cell_key;
}

void DiskLookup::store(const std::vector<int>& key, long count) {
    auto [it, fresh] = table_.emplace(key, count);
    if (!fresh && it->second != count) throw std::logic_error("inconsistent counts for one face descriptor");
}

void DiskLookup::add_subset(const std::vector<int>& ids) {
    ++subsets_;
    const auto& P = inst_.centers;
    Decomposition dec(P, ids);
    // every stored face lies in the bounding box of the closed disks
    Rational lox = P[ids[0]].x, hix = lox, loy = P[ids[0]].y, hiy = loy;
    for (int id : ids) {
        lox = std::min(lox, P[id].x);
        hix = std::max(hix, P[id].x);
        loy = std::min(loy, P[id].y);
        hiy = std::max(hiy, P[id].y);
    }
    std::vector<int> near;
    for (int i = 0; i < static_cast<int>(P.size()); ++i)
        if (P[i].x >= lox - 2 && P[i].x <= hix + 2 && P[i].y >= loy - 2 && P[i].y <= hiy + 2) near.push_back(i);
    for (const Face& f : dec.faces()) {
        bool bounded = true;
        if (f.kind == FaceKind::Arc) continue;
        if (f.kind == FaceKind::Cell) bounded = f.lower >= 0 && f.upper >= 0 && f.left && f.right;
        if (f.kind == FaceKind::Wall) bounded = (f.y_lo || f.lower >= 0) && (f.y_hi || f.upper >= 0);
        if (!bounded) continue;
        long c = count_face(dec, f, near);
        long credit = f.kind == FaceKind::Cell ? count_credit(dec, f, near) : 0;
        for (const auto& key : dec.alternatives(f)) {
            store(key, c);
            if (f.kind == FaceKind::Cell) store(credit_key(key), credit);
        }
    }
}

std::optional<long> DiskLookup::find(const std::vector<int>& key) const {
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

long DiskLookup::coverage_count(const std::vector<int>& D) const {
    if (D.empty()) return 0;
    Decomposition dec(inst_.centers, D);
    long total = 0;
    for (const Face& f : dec.faces()) {
        switch (f.kind) {
            case FaceKind::Arc: continue;
            case FaceKind::Cell:
            case FaceKind::Wall:
                if (!dec.inside_union(f)) continue;
                break;
            case FaceKind::TouchVertex:
                if (!f.inner_touch) continue;
                break;
            case FaceKind::EventVertex: break;
        }
        auto c = find(f.key);
        if (!c) throw std::logic_error("face descriptor missing from lookup table");
        total += *c;
        if (f.kind == FaceKind::Cell) total += *find(credit_key(f.key));
    }
    return total;
}

long direct_coverage(const DiskInstance& inst, const std::vector<int>& D) {
    long count = 0;
    for (const auto& p : inst.centers)
        for (int d : D)
            if (dominates_pair(p, inst.centers.at(d))) {
                ++count;
                break;
            }
    return count;
}

std::optional<std::vector<int>> xp_solve(const DiskLookup& lookup, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    int n = static_cast<int>(lookup.instance().centers.size());
    int size = std::min(k, n);
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        if (lookup.coverage_count(pick) == n) return pick;
        // next combination in lexicographic order
        int i = size - 1;
        while (i >= 0 && pick[i] == n - size + i) --i;
        if (i < 0) return std::nullopt;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::optional<std::vector<int>> xp_solve(const DiskInstance& inst, int k) {
    return xp_solve(DiskLookup(inst), k);
}

}  // namespace geodom::diskdom
