#pragma once

// Generators for the hardness constructions, each with an exact verifier:
// universal 1-D patterns, triangular grids of irrational patterns, triangular
// grid cycle/path gadgets, grid-tiling gadget instances of a square-like
// polygon, and convex polygons realizing split graphs.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geodom/geom2d.hpp"
#include "geodom/graphcore.hpp"
#include "geodom/io.hpp"
#include "geodom/pattern1d.hpp"
#include "geodom/squarelike.hpp"

namespace geodom::constructions {

using geom2d::Point2;
using geom2d::Polygon;
using geom2d::Vec2;
using graphcore::Graph;
using pattern1d::Pattern1D;

// ---------------------------------------------------------------- universal

struct UniversalPattern {
    Pattern1D pattern;
    std::vector<QuadNum> translates;  // translate i realizes vertex i
    long q = 0;
};

/// Vertex i (0-based) becomes translate 4^(i+1); edge k (1-based, sorted
/// order) puts 4^(q+k) - 4^a and 4^(q+k) - 4^b into the pattern.
UniversalPattern universal_pattern(const Graph& g);
bool verify_universal(const Graph& g, const UniversalPattern& u);

// ------------------------------------------------------------------ trigrid

struct TriGrid {
    QuadNum xstar, ystar;
    std::vector<long> candidates;  // integer solutions of the sqrt-coefficient equation
    long a_prime = 0;
    int radius = 0;
    std::vector<std::pair<int, int>> index;  // (j, k) per translate
    std::vector<QuadNum> translates;         // j * ystar + k
};

/// Leftmost point moved to 0 and span scaled to 1.
Pattern1D unit_span(const Pattern1D& q);

/// Candidate multipliers a: a * irr(x*) + irr(z) = irr(z') for points z, z'.
std::vector<long> trigrid_candidates(const Pattern1D& q, const QuadNum& xstar);
/// (a x* + Q) meets (m + Q) for some integer m, checked on the point pairs.
bool meets_integer_shift(const Pattern1D& q, const QuadNum& shift);

/// Throws std::invalid_argument unless q is an irrational point pattern,
/// std::logic_error when no positive candidate meets an integer shift.
TriGrid trigrid_realization(const Pattern1D& q, int radius);
/// Every interior translate meets exactly its six grid neighbours among the
/// translates within index distance 2.
bool verify_trigrid(const Pattern1D& q, const TriGrid& grid);

// ---------------------------------------------------------- trigrid gadgets

using GridPoint = std::pair<long, long>;

/// Offsets (a, b) with |a|, |b| <= 1 and a != b.
inline constexpr std::array<std::pair<int, int>, 6> kTriOffsets{
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};

/// Induced subgraph of the triangular grid on the given vertices.
Graph trigrid_graph(const std::vector<GridPoint>& vertices);
/// Closed lattice hexagon walk with the given side counts along the six
/// directions (1,0), (0,1), (-1,1), (-1,0), (0,-1), (1,-1), from the origin.
std::vector<GridPoint> hexagon_walk(const std::array<int, 6>& sides);
/// Induced cycle with 3k vertices (k = 1..5), in cycle order.
std::vector<GridPoint> cycle_gadget(int k);
/// Straight path P_0 .. P_{3k+1}.
std::vector<GridPoint> path_gadget(int k);
/// The vertex order forms an induced cycle of g.
bool is_induced_cycle(const Graph& g);

struct GadgetBound {
    int k = 0;
    int domination = 0;     // brute force over the gadget graph
    int min_counted = 0;    // fewest dominators among the counted vertices
    bool disjoint = false;  // closed neighbourhoods of positions 3l+2 are disjoint
    bool ok() const { return domination >= k && min_counted >= k && disjoint; }
};
/// For cycles every vertex is counted; for paths only P_1 .. P_{3k}.
GadgetBound check_cycle_bound(int k);
GadgetBound check_path_bound(int k);

// ------------------------------------------------------------- grid tiling

using Pair = std::pair<int, int>;  // (x, y), 1-based

struct GridTiling {
    int k = 0;
    int n = 0;
    // cells[a][b], 0-based gadget coordinates
    std::vector<std::vector<std::vector<Pair>>> cells;

    const std::vector<Pair>& at(int a, int b) const { return cells.at(a).at(b); }
};

/// Throws std::invalid_argument on empty cells, duplicates or out-of-range pairs.
void check_gridtiling(const GridTiling& gt);
/// `gt <k> <n>` then `cell <a> <b>: (x,y) ...` with 1-based a, b.
GridTiling parse_gridtiling(const std::vector<io::Line>& lines);
std::string format_gridtiling(const GridTiling& gt);
GridTiling full_gridtiling(int k, int n);

using Choice = std::vector<std::vector<Pair>>;  // choice[a][b]
/// Choices in U that agree on x along rows (a, a+1) and on y along columns (b, b+1).
bool gt_feasible(const GridTiling& gt, const Choice& choice);
/// First feasible choice in lexicographic enumeration order.
std::optional<Choice> gt_brute_solve(const GridTiling& gt);

/// f(x, y) = (x - 1) n + y and its inverse on 1..n^2.
int pair_index(int n, int x, int y);
int iota1(int n, int j);
int iota2(int n, int j);

enum class Block { X1, X2, X3, X4, X5, X6, X7, X8, Y1, Y2, Y3, Y4, Y5, Y6, Y7, Y8, A, B, C, D };
std::string to_string(Block b);
std::optional<Block> parse_block(const std::string& s);
inline bool is_x(Block b) { return b <= Block::X8; }
inline bool is_y(Block b) { return b >= Block::Y1 && b <= Block::Y8; }
inline bool is_connector(Block b) { return b >= Block::A; }
/// X_l for l = 1..8 and Y_l likewise.
Block x_block(int l);
Block y_block(int l);

/// Connector offsets: the table's C_j = (n^2+1, -iota2(j)), D_j = (-n^2-1,
/// iota2(j)), or the mirror images of A and B in the vertical direction.
enum class ConnectorReading { Adjusted, Verbatim };

struct Translate {
    Block block;
    int a = 0, b = 0;  // gadget; for connectors the left or lower gadget
    int j = 0;
    long col = 0, row = 0;  // grid cell in (b1, b2) units
    long o1 = 0, o2 = 0;    // doubled offset along u1, u2
    Vec2 ref;
};

struct GadgetInstance {
    int k = 0, n = 0;
    GridTiling gt;
    Polygon poly;
    squarelike::SquareLikeCert cert;
    ConnectorReading reading = ConnectorReading::Adjusted;
    std::vector<Translate> translates;

    /// Index of a translate, or -1.
    int find(Block block, int a, int b, int j) const;
};

/// Certificate parameter that covers the doubled offsets of an n-instance.
int gadget_cert_parameter(int n);
/// Throws std::invalid_argument when cert.n is too small for gt.n.
GadgetInstance gadget_instance(const GridTiling& gt, const Polygon& poly, const squarelike::SquareLikeCert& cert,
                               ConnectorReading reading = ConnectorReading::Adjusted);
/// Intersection graph of the translates, decided by polygons_intersect.
Graph gadget_graph(const GadgetInstance& inst);

struct CheckReport {
    bool ok = true;
    long checked = 0;
    std::string detail;  // first failure
};

/// Every surviving X_l(j) meets exactly Y_l(j..n^2) and Y_{l+1}(0..j-1).
CheckReport check_gadget_domination_pattern(const GadgetInstance& inst, const Graph& g);
/// Translates in blocks at Manhattan cell distance >= 2 never meet.
CheckReport check_cross_block(const GadgetInstance& inst, const Graph& g);

/// X_1(j) .. X_8(j) per gadget with j = f(choice[a][b]); no feasibility check.
std::vector<int> choice_set(const GadgetInstance& inst, const Choice& choice);
/// Throws std::invalid_argument when the choice is not a feasible solution.
std::vector<int> canonical_set(const GadgetInstance& inst, const Choice& choice);

/// For gadget G = (a, b) choosing jg and its right (horizontal) or upper
/// neighbour H choosing jh: whether each connector block between them is
/// fully dominated by the X translates of the two choices.
struct ConnectorState {
    bool first = false;   // A (horizontal) or C (vertical)
    bool second = false;  // B or D
};
ConnectorState connector_state(const GadgetInstance& inst, const Graph& g, int a, int b, bool horizontal, int jg,
                               int jh);
/// The iff conditions for all surviving index pairs of all neighbouring gadgets.
CheckReport check_connectors(const GadgetInstance& inst, const Graph& g);

/// Gadget file: the grid tiling, the polygon, the certificate and one
/// `t <block> <a> <b> <j> <x> <y>` line per translate.
std::string format_gadget(const GadgetInstance& inst);
struct GadgetFile {
    GridTiling gt;
    Polygon poly;
    squarelike::SquareLikeCert cert;
    ConnectorReading reading = ConnectorReading::Adjusted;
    std::vector<Translate> translates;
};
GadgetFile parse_gadget(const std::vector<io::Line>& lines);
squarelike::SquareLikeCert parse_certificate(const std::vector<io::Line>& lines);

// ------------------------------------------------------------- split graphs

struct SplitGraph {
    int nc = 0, ni = 0;
    std::vector<Pair> cross;  // (clique vertex, independent vertex), 0-based
};

/// Vertex order: clique 0..nc-1, then independent nc..nc+ni-1.
Graph split_graph(const SplitGraph& s);
/// `split <nc> <ni>` then `e <c> <i>` lines.
SplitGraph parse_split(const std::vector<io::Line>& lines);
std::string format_split(const SplitGraph& s);

struct SplitPolygons {
    std::vector<Point2> outer;  // 2 max(ni, 3) rational points on the unit circle
    std::vector<Polygon> polygons;
};
SplitPolygons split_graph_polygons(const SplitGraph& s);

struct SplitCheck {
    bool adjacency = false;
    bool clique_meets = false;
    bool independent_disjoint = false;
    bool containment = false;  // polygon(c) contains triangle(i) iff ci is an edge
    bool ok() const { return adjacency && clique_meets && independent_disjoint && containment; }
};
SplitCheck verify_split(const SplitGraph& s, const SplitPolygons& p);

}  // namespace geodom::constructions
