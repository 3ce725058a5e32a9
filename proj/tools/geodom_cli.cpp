// geodom: classify, solve, generate and verify geometric domination instances.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "geodom/acceptance.hpp"
#include "geodom/constructions.hpp"
#include "geodom/diskdom.hpp"
#include "geodom/solver1d.hpp"
#include "geodom/squarelike.hpp"

using namespace geodom;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kNone = 1, kInputError = 2, kInternal = 3;

const char* kGrammar = R"(File grammars (one record per line, '#' starts a comment):
  pattern      point <num> | interval <num> <num> | translate <num>
               <num> is P/Q or P/Q+R/S*sqrt(D); interval ends may be inf / -inf
  disks        disk <x> <y>                       (rational coordinates)
  graph        n <count>, then e <i> <j>          (0-based vertices)
  polygon      poly <k>, then k lines v <x> <y>
  grid tiling  gt <k> <n>, then cell <a> <b>: (x,y) (x,y) ...   (1-based)
  split graph  split <nc> <ni>, then e <c> <i>    (0-based clique / independent ids)
  gadget       grid tiling + polygon + certificate (n, epsilon, b1, b2, u1, u2)
               + reading adjusted|verbatim + t <block> <a> <b> <j> <x> <y>
Exit codes: 0 ok, 1 no solution or failed verification, 2 input error,
3 internal invariant violation.)";

// 64-bit FNV-1a of the file bytes, printed as hex.
std::string digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

struct Run {
    std::string command;
    std::uint64_t seed = acceptance::kDefaultSeed;
    std::vector<std::string> inputs;
    json result = json::object();
    std::ostringstream out;  // human-readable stdout
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
}

// Instance text to --out, or to stdout when no file is given; the verify
// lines follow as comments so stdout stays a valid instance file.
void emit(Run& run, const std::string& out_path, const std::string& text, bool ok, const std::string& what) {
    if (out_path.empty()) {
        run.out << text;
        run.out << "# verify: " << (ok ? "PASS" : "FAIL") << " " << what << "\n";
    } else {
        write_file(out_path, text);
        run.out << "wrote " << out_path << "\n";
        run.out << "verify: " << (ok ? "PASS" : "FAIL") << " " << what << "\n";
    }
    run.result["verify"] = ok;
    run.result["check"] = what;
}

std::string first_pattern_ratio(const pattern1d::Pattern1D& q) {
    auto r = pattern1d::irrational_ratio(q);
    return r ? exactnum::to_pretty(*r) : "";
}

// ---------------------------------------------------------------- commands

int cmd_classify(Run& run, const std::string& path) {
    run.inputs.push_back(path);
    auto text = pattern1d::parse_pattern(io::read_file(path), false);
    if (text.unbounded) {
        run.out << "HasInterval unbounded\n";
        run.result["class"] = "HasInterval";
        run.result["unbounded"] = true;
        return kOk;
    }
    auto q = text.pattern();
    auto c = pattern1d::classify(q);
    run.result["class"] = pattern1d::to_string(c);
    run.out << pattern1d::to_string(c);
    if (c == pattern1d::PatternClass::IrrationalPoints) {
        std::string r = first_pattern_ratio(q);
        run.out << " ratio " << r;
        run.result["ratio"] = r;
    }
    run.out << "\n";
    return kOk;
}

int cmd_solve1d(Run& run, const std::string& path) {
    run.inputs.push_back(path);
    auto text = pattern1d::parse_pattern(io::read_file(path), true);
    solver1d::Solution s = text.unbounded ? solver1d::solve_unbounded(text.translates)
                                          : solver1d::solve(text.pattern(), text.translates);
    run.out << "size " << s.size << "\n";
    run.out << "witness " << join(s.witness) << "\n";
    run.result["size"] = s.size;
    run.result["witness"] = s.witness;
    return kOk;
}

int cmd_disk(Run& run, const std::string& path, int k, const std::string& mode, const std::vector<int>& set) {
    run.inputs.push_back(path);
    auto inst = diskdom::parse_disks(io::read_file(path));
    if (mode == "check") {
        for (int v : set)
            if (v < 0 || v >= static_cast<int>(inst.centers.size()))
                throw std::invalid_argument("--set index " + std::to_string(v) + " out of range");
        diskdom::DiskLookup lk(inst);
        long covered = lk.coverage_count(set);
        bool dom = covered == static_cast<long>(inst.centers.size());
        run.out << "covered " << covered << " of " << inst.centers.size() << "\n";
        run.out << (dom ? "dominating" : "not dominating") << "\n";
        run.result["covered"] = covered;
        run.result["dominating"] = dom;
        return dom ? kOk : kNone;
    }
    if (k < 0) throw std::invalid_argument("--k must be non-negative");
    auto w = diskdom::xp_solve(inst, k);
    run.result["found"] = w.has_value();
    if (!w) {
        run.out << "none\n";
        return kNone;
    }
    run.out << "witness " << join(*w) << "\n";
    run.result["witness"] = *w;
    return kOk;
}

geom2d::Polygon single_polygon(const std::string& path) {
    auto polys = geom2d::parse_polygons(io::read_file(path));
    if (polys.size() != 1) throw ParseError("'" + path + "' must hold exactly one polygon");
    return polys.front();
}

int cmd_squarelike(Run& run, const std::string& path, int n) {
    run.inputs.push_back(path);
    auto p = single_polygon(path);
    if (n < 1) throw std::invalid_argument("--n must be positive");
    squarelike::SquareLikeCert c;
    try {
        c = squarelike::compute_squarelike_vectors(p, n);
    } catch (const squarelike::SynthesisError& e) {
        run.out << "none: " << e.what() << "\n";
        return kNone;
    }
    bool ok = squarelike::verify_squarelike(p, c, n).ok;
    run.out << squarelike::format_certificate(c);
    run.out << "bits " << squarelike::certificate_bits(c) << "\n";
    run.out << "verify " << (ok ? "PASS" : "FAIL") << "\n";
    run.result["bits"] = squarelike::certificate_bits(c);
    run.result["verify"] = ok;
    if (!ok) throw std::logic_error("synthesized certificate failed verification");
    return kOk;
}

std::string pattern_instance(const pattern1d::Pattern1D& q, const std::vector<QuadNum>& xs) {
    std::string s = pattern1d::format_pattern(q);
    for (const auto& x : xs) s += "translate " + exactnum::to_literal(x) + "\n";
    return s;
}

int cmd_gen_universal(Run& run, const std::string& graph, const std::string& out) {
    run.inputs.push_back(graph);
    auto g = graphcore::parse_graph(io::read_file(graph));
    auto u = constructions::universal_pattern(g);
    bool ok = constructions::verify_universal(g, u);
    emit(run, out, pattern_instance(u.pattern, u.translates), ok, "intersection graph equals the input graph");
    run.result["q"] = u.q;
    return ok ? kOk : kInternal;
}

int cmd_gen_trigrid(Run& run, const std::string& pattern, int radius, const std::string& out) {
    run.inputs.push_back(pattern);
    auto q = pattern1d::parse_pattern(io::read_file(pattern), false).pattern();
    auto t = constructions::trigrid_realization(q, radius);
    bool ok = constructions::verify_trigrid(q, t);
    std::string text = pattern_instance(q, t.translates);
    text = "# x* = " + exactnum::to_literal(t.xstar) + ", y* = " + exactnum::to_literal(t.ystar) +
           ", translates j*y* + k for |j|, |k| <= " + std::to_string(radius) + " (j major)\n" + text;
    emit(run, out, text, ok, "six-neighbour triangular grid adjacency");
    run.result["a_prime"] = t.a_prime;
    return ok ? kOk : kInternal;
}

struct GadgetChecks {
    bool pattern = false, cross = false, connectors = false, canonical = false;
    bool feasible = false;
    bool ok() const { return pattern && cross && connectors && (!feasible || canonical); }
    std::string text() const {
        std::ostringstream s;
        s << "domination pattern " << (pattern ? "ok" : "broken") << ", cross-block " << (cross ? "ok" : "broken")
          << ", connectors " << (connectors ? "ok" : "broken") << ", canonical set "
          << (!feasible ? "n/a (tiling infeasible)" : canonical ? "dominates" : "fails");
        return s.str();
    }
};

GadgetChecks check_gadget(const constructions::GadgetInstance& inst) {
    auto g = constructions::gadget_graph(inst);
    GadgetChecks c;
    c.pattern = constructions::check_gadget_domination_pattern(inst, g).ok;
    c.cross = constructions::check_cross_block(inst, g).ok;
    c.connectors = constructions::check_connectors(inst, g).ok;
    if (auto sol = constructions::gt_brute_solve(inst.gt)) {
        c.feasible = true;
        auto set = constructions::canonical_set(inst, *sol);
        c.canonical = graphcore::is_dominating(g, set) && set.size() == static_cast<std::size_t>(8 * inst.k * inst.k);
    }
    return c;
}

int cmd_gen_gadget(Run& run, const std::string& gtp, const std::string& polyp, int n, const std::string& reading,
                   const std::string& out) {
    run.inputs.push_back(gtp);
    run.inputs.push_back(polyp);
    auto gt = constructions::parse_gridtiling(io::read_file(gtp));
    auto p = single_polygon(polyp);
    int param = n > 0 ? n : constructions::gadget_cert_parameter(gt.n);
    auto cert = squarelike::compute_squarelike_vectors(p, param);
    auto inst = constructions::gadget_instance(
        gt, p, cert,
        reading == "verbatim" ? constructions::ConnectorReading::Verbatim : constructions::ConnectorReading::Adjusted);
    auto c = check_gadget(inst);
    emit(run, out, constructions::format_gadget(inst), c.ok(), c.text());
    run.result["translates"] = inst.translates.size();
    return c.ok() ? kOk : kNone;
}

int cmd_gen_split(Run& run, const std::string& path, const std::string& out) {
    run.inputs.push_back(path);
    auto s = constructions::parse_split(io::read_file(path));
    auto polys = constructions::split_graph_polygons(s);
    bool ok = constructions::verify_split(s, polys).ok();
    std::string text = constructions::format_split(s);
    for (const auto& p : polys.polygons) text += geom2d::format_polygon(p);
    emit(run, out, text, ok, "intersection graph equals the split graph");
    return ok ? kOk : kInternal;
}

// ------------------------------------------------------------------ verify

std::vector<io::Line> keep(const std::vector<io::Line>& lines, std::initializer_list<const char*> kws) {
    std::vector<io::Line> out;
    for (const auto& l : lines)
        for (const char* k : kws)
            if (l.keyword() == k) out.push_back(l);
    return out;
}

int report_verify(Run& run, bool ok, const std::string& what) {
    run.out << (ok ? "PASS" : "FAIL") << " " << what << "\n";
    run.result["verify"] = ok;
    return ok ? kOk : kNone;
}

int cmd_verify(Run& run, const std::string& gadget, const std::string& universal, const std::string& graph,
               const std::string& trigrid, int radius, const std::string& split) {
    if (!gadget.empty()) {
        run.inputs.push_back(gadget);
        auto f = constructions::parse_gadget(io::read_file(gadget));
        auto inst = constructions::gadget_instance(f.gt, f.poly, f.cert, f.reading);
        bool same = inst.translates.size() == f.translates.size();
        for (std::size_t i = 0; same && i < f.translates.size(); ++i) {
            const auto& a = inst.translates[i];
            const auto& b = f.translates[i];
            same = a.block == b.block && a.a == b.a && a.b == b.b && a.j == b.j && a.ref == b.ref;
        }
        bool cert_ok = squarelike::verify_squarelike(f.poly, f.cert, f.cert.n).ok;
        auto c = check_gadget(inst);
        return report_verify(run, same && cert_ok && c.ok(),
                             std::string("gadget: translates ") + (same ? "match" : "differ") + ", certificate " +
                                 (cert_ok ? "ok" : "broken") + ", " + c.text());
    }
    if (!universal.empty()) {
        if (graph.empty()) throw std::invalid_argument("--universal needs --graph");
        run.inputs.push_back(universal);
        run.inputs.push_back(graph);
        auto text = pattern1d::parse_pattern(io::read_file(universal), true);
        auto g = graphcore::parse_graph(io::read_file(graph));
        constructions::UniversalPattern u{text.pattern(), text.translates, 0};
        return report_verify(run, constructions::verify_universal(g, u), "universal pattern realizes the graph");
    }
    if (!trigrid.empty()) {
        run.inputs.push_back(trigrid);
        auto text = pattern1d::parse_pattern(io::read_file(trigrid), true);
        auto q = text.pattern();
        auto t = constructions::trigrid_realization(q, radius);
        bool same = t.translates == text.translates;
        bool ok = same && constructions::verify_trigrid(q, t);
        return report_verify(run, ok, std::string("triangular grid: translates ") + (same ? "match" : "differ"));
    }
    if (!split.empty()) {
        run.inputs.push_back(split);
        auto lines = io::read_file(split);
        auto s = constructions::parse_split(keep(lines, {"split", "e"}));
        constructions::SplitPolygons p;
        p.polygons = geom2d::parse_polygons(keep(lines, {"poly", "v"}));
        auto r = constructions::verify_split(s, p);
        return report_verify(run, r.ok(), "split graph polygons");
    }
    throw std::invalid_argument("verify needs one of --gadget, --universal, --trigrid, --split");
}

// ------------------------------------------------------------------- bench

int cmd_bench(Run& run) {
    auto rep = acceptance::run_all(run.seed);
    run.out << rep.payload();
    json rs = json::array();
    for (const auto& r : rep.results)
        rs.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    run.result["criteria"] = rs;
    run.result["all_pass"] = rep.all_pass();
    return rep.all_pass() ? kOk : kNone;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dominating sets in geometric intersection graphs"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    app.fallthrough();
    Run run;
    std::string report;
    app.add_option("--seed", run.seed, "Seed for all randomness")->capture_default_str();
    app.add_option("--report", report, "Write a JSON run report to this file");

    std::string file, file2, out, mode = "xp", reading = "adjusted";
    std::string gadget, universal, graph, trigrid, split;
    int k = 0, n = 0, radius = 3;
    std::vector<int> set;

    auto* classify = app.add_subcommand("classify", "Pattern class: HasInterval, RationalPoints or IrrationalPoints");
    classify->add_option("pattern", file, "Pattern file")->required();

    auto* solve1d = app.add_subcommand("solve-1d", "Minimum dominating set of pattern translates");
    solve1d->add_option("--instance,instance", file, "Pattern file with translate lines")->required();

    auto* disk = app.add_subcommand("disk-solve", "Unit disk domination via the face lookup table");
    disk->add_option("--instance", file, "Disk file")->required();
    disk->add_option("--k", k, "Budget for --mode xp");
    disk->add_option("--mode", mode, "xp or check")->check(CLI::IsMember({"xp", "check"}));
    disk->add_option("--set", set, "Center indices for --mode check");

    auto* sq = app.add_subcommand("squarelike", "Square-like certificate for a polygon");
    sq->add_option("--poly", file, "Polygon file")->required();
    sq->add_option("--n", n, "Index range parameter")->required();

    auto* gu = app.add_subcommand("gen-universal", "Universal 1-D pattern for a graph");
    gu->add_option("--graph", file, "Graph file")->required();
    gu->add_option("--out", out, "Instance output file");

    auto* gtri = app.add_subcommand("gen-trigrid", "Triangular grid of translates of an irrational pattern");
    gtri->add_option("--pattern", file, "Pattern file")->required();
    gtri->add_option("--radius", radius, "Grid radius R")->capture_default_str();
    gtri->add_option("--out", out, "Instance output file");

    auto* gg = app.add_subcommand("gen-gadget", "Grid-tiling gadget instance for a polygon");
    gg->add_option("--gridtiling", file, "Grid tiling file")->required();
    gg->add_option("--poly", file2, "Polygon file")->required();
    gg->add_option("--n", n, "Certificate parameter (default 2n+1 of the tiling)");
    gg->add_option("--reading", reading, "Vertical connector offsets: adjusted or verbatim")
        ->check(CLI::IsMember({"adjusted", "verbatim"}));
    gg->add_option("--out", out, "Instance output file");

    auto* gs = app.add_subcommand("gen-splitpoly", "Convex polygons realizing a split graph");
    gs->add_option("--split", file, "Split graph file")->required();
    gs->add_option("--out", out, "Instance output file");

    auto* ver = app.add_subcommand("verify", "Re-verify a generated instance file");
    ver->add_option("--gadget", gadget, "Gadget file");
    ver->add_option("--universal", universal, "Universal pattern instance (with --graph)");
    ver->add_option("--graph", graph, "Graph file for --universal");
    ver->add_option("--trigrid", trigrid, "Triangular grid instance (with --radius)");
    ver->add_option("--radius", radius, "Grid radius for --trigrid")->capture_default_str();
    ver->add_option("--split", split, "Split graph polygon file");

    auto* bench = app.add_subcommand("bench", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        if (*classify) run.command = "classify", code = cmd_classify(run, file);
        else if (*solve1d) run.command = "solve-1d", code = cmd_solve1d(run, file);
        else if (*disk) run.command = "disk-solve", code = cmd_disk(run, file, k, mode, set);
        else if (*sq) run.command = "squarelike", code = cmd_squarelike(run, file, n);
        else if (*gu) run.command = "gen-universal", code = cmd_gen_universal(run, file, out);
        else if (*gtri) run.command = "gen-trigrid", code = cmd_gen_trigrid(run, file, radius, out);
        else if (*gg) run.command = "gen-gadget", code = cmd_gen_gadget(run, file, file2, n, reading, out);
        else if (*gs) run.command = "gen-splitpoly", code = cmd_gen_split(run, file, out);
        else if (*ver) run.command = "verify", code = cmd_verify(run, gadget, universal, graph, trigrid, radius, split);
        else if (*bench) run.command = "bench", code = cmd_bench(run);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        code = kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        code = kInputError;
    } catch (const squarelike::SynthesisError& e) {
        std::cerr << "no certificate: " << e.what() << "\n";
        code = kNone;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        code = kInternal;
    }
    std::cout << run.out.str();

    if (!report.empty()) {
        json j;
        j["command"] = run.command;
        j["seed"] = run.seed;
        j["exit_code"] = code;
        json inputs = json::array();
        for (const auto& p : run.inputs) inputs.push_back({{"path", p}, {"fnv1a64", digest(p)}});
        j["inputs"] = inputs;
        j["result"] = run.result;
        j["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        try {
            write_file(report, j.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return kInputError;
        }
    }
    return code;
}
