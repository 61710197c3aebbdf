#include "lehman/catalogue.hpp"
#include "lehman/clutters.hpp"
#include "lehman/constructions.hpp"
#include "lehman/exactmat.hpp"
#include "lehman/figures.hpp"
#include "lehman/lehman.hpp"
#include "lehman/polyhedra.hpp"
#include "lehman/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace lehman;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << x;
    return os.str();
}

struct RunManifest {
    std::string command;
    std::vector<std::string> parameters;
    std::map<std::string, std::string> inputs, outputs;
    double wall_seconds = 0;
    int workers = 1;

    json to_json() const {
        return {{"command", command}, {"parameters", parameters}, {"input_digests", inputs},
                {"output_digests", outputs}, {"wall_seconds", wall_seconds}, {"workers", workers}};
    }
};

RunManifest manifest;
std::ostringstream out;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    manifest.inputs[path] = hex64(fnv1a(ss.str()));
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
    manifest.outputs[path] = hex64(fnv1a(text));
}

BinaryMatrix read_binary(const std::string& path) {
    RationalMatrix m;
    try {
        m = parse_lmx(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (!m.is_binary()) throw UsageError(path + ": matrix is not 0/1");
    return BinaryMatrix::from_rational(m);
}

Clutter read_clutter(const std::string& path) {
    try {
        return parse_clutter(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string lmx(const BinaryMatrix& a) { return to_lmx(a.to_rational()); }

json vec_json(const RationalVector& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(x.to_string());
    return j;
}

json mask_json(Mask m) { return members(m); }

Mask parse_vertex_list(const std::string& s) {
    Mask m = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            int v = std::stoi(tok);
            if (v < 0 || v > 63) throw UsageError("vertex out of range: " + tok);
            m |= bit(v);
        } catch (const std::logic_error&) {
            throw UsageError("bad vertex list: " + s);
        }
    }
    return m;
}

// ---- expected counts ------------------------------------------------------

struct ExpectedRow {
    int n, r, s, order;
    std::size_t l, lp;
};

const std::vector<ExpectedRow> kPositive{{5, 3, 2, 10, 1, 1},   {8, 3, 3, 16, 2, 2},     {11, 3, 4, 22, 4, 4},
                                         {14, 3, 5, 28, 17, 18}, {17, 3, 6, 34, 71, 98}, {20, 3, 7, 40, 491, 785}};
const std::vector<ExpectedRow> kNegative{{4, 3, 1, 8, 1, 1},      {7, 3, 2, 14, 1, 1},      {10, 3, 3, 20, 2, 2},
                                         {13, 3, 4, 26, 5, 5},    {16, 3, 5, 32, 19, 21},   {19, 3, 6, 38, 105, 154},
                                         {22, 3, 7, 44, 853, 1488}};
const std::vector<std::pair<int, std::size_t>> kMni{{10, 1}, {16, 2}, {22, 4}, {28, 9}, {34, 4}, {40, 0}};

// ---- subcommands ----------------------------------------------------------

int cmd_verify(const std::string& path, int k, const std::string& partner_out) {
    auto a = read_binary(path);
    if (!a.square()) throw UsageError("matrix is not square");
    auto c = certify(a, k);
    json j{{"file", path}, {"k", k}};
    if (!c) {
        std::string diag;
        auto types = lehman_types(a, &diag);
        j["certified"] = false;
        if (!diag.empty()) j["diagnostic"] = diag;
        json ts = json::array();
        for (const auto& t : types) ts.push_back(t.to_string());
        j["other_types"] = ts;
        out << j.dump(2) << "\n";
        return kCheckFailed;
    }
    j["certified"] = true;
    j["type"] = {c->type.n, c->type.r, c->type.s};
    json mates = json::array();
    for (Mask m : c->mates) mates.push_back(mask_json(m));
    j["mates"] = mates;
    if (!partner_out.empty()) {
        write_file(partner_out, lmx(c->partner));
        j["partner"] = partner_out;
    } else {
        j["partner_lmx"] = lmx(c->partner);
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_generate(int order, bool no_prune, const std::string& mode, int jobs, const std::string& path) {
    GenerateOptions opt;
    opt.prune = !no_prune;
    opt.jobs = jobs;
    if (mode == "preserving") opt.mode = Equivalence::colour_preserving;
    else if (mode != "blind") throw UsageError("mode must be blind or preserving");
    GenerateStats st;
    auto gs = generate_cubic_bipartite(order, opt, &st);
    std::string text;
    for (const auto& g : gs) text += to_b6(g) + "\n";
    if (!path.empty()) write_file(path, text);
    out << json{{"order", order}, {"count", gs.size()}, {"nodes", st.nodes}, {"prune", opt.prune}, {"mode", mode}}.dump()
        << "\n";
    if (path.empty()) out << text;
    return kOk;
}

json catalogue_json(const Catalogue& c, const std::string& mode) {
    const auto& entries = mode == "preserving" ? c.preserving : c.blind;
    json e = json::array();
    for (const auto& a : entries) e.push_back(lmx(a));
    return {{"params", {{"n", c.params.n}, {"r", c.params.r}, {"s", c.params.s}, {"k", c.params.k}}},
            {"mode", mode},
            {"count", entries.size()},
            {"l", c.l_count()},
            {"l_prime", c.lp_count()},
            {"entries", e}};
}

// Certificates, counts and class invariants re-checked before output.
bool catalogue_consistent(const Catalogue& c, int k) {
    for (const auto& a : c.preserving)
        if (!certify(a, k)) return false;
    std::size_t chiral = 0;
    for (const auto& a : c.blind) chiral += !has_colour_reversing_automorphism(BipartiteGraph(a));
    return c.lp_count() == c.l_count() + chiral;
}

int cmd_catalogue(int order, int k, const std::string& mode, int jobs, const std::string& path) {
    if (mode != "blind" && mode != "preserving") throw UsageError("mode must be blind or preserving");
    auto c = catalogue_by_search(order, k, jobs);
    auto j = catalogue_json(c, mode);
    if (!path.empty()) write_file(path, j.dump(2) + "\n");
    else out << j.dump(2) << "\n";
    return catalogue_consistent(c, k) ? kOk : kCheckFailed;
}

int cmd_closure(const std::vector<std::string>& bases, const std::vector<std::string>& seeds, int k, int max_order,
                bool exhaustive, const std::string& path) {
    std::vector<BipartiteGraph> gs;
    for (const auto& b : bases) gs.emplace_back(read_binary(b));
    ClosureOptions opt;
    opt.insert = exhaustive ? InsertMode::exhaustive : InsertMode::sufficient;
    for (const auto& s : seeds) opt.opposite_seeds.emplace_back(read_binary(s));
    std::map<int, Catalogue> res;
    try {
        res = closure_generate(gs, max_order, k, opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    json j = json::array();
    bool ok = true;
    for (const auto& [n, c] : res) {
        std::size_t ladder_free = 0;
        for (const auto& a : c.preserving) ladder_free += !has_3rung_ladder(BipartiteGraph(a));
        auto cj = catalogue_json(c, "preserving");
        cj["ladder_free_preserving"] = ladder_free;
        j.push_back(cj);
        ok &= catalogue_consistent(c, k);
    }
    if (!path.empty()) write_file(path, j.dump(2) + "\n");
    for (const auto& [n, c] : res) out << "n=" << n << " l=" << c.l_count() << " l'=" << c.lp_count() << "\n";
    return ok ? kOk : kCheckFailed;
}

int cmd_tables(int which, int max_order, int jobs, bool no_expected, int cap) {
    if (which < 1 || which > 3) throw UsageError("table must be 1, 2 or 3");
    if (max_order > cap) throw UsageError("max order above the configured cap (--cap)");
    bool ok = true;
    auto report = [&](const std::string& row, const std::string& got, const std::string& want) {
        bool match = no_expected || got == want;
        ok &= match;
        out << row << "  " << got;
        if (!no_expected) out << (match ? "  ok" : "  MISMATCH expected " + want);
        out << "\n";
    };
    if (which == 1 || which == 2) {
        const auto& rows = which == 1 ? kPositive : kNegative;
        int k = which == 1 ? 1 : -1;
        for (const auto& r : rows) {
            if (r.order > max_order) break;
            auto c = catalogue_by_search(r.order, k, jobs);
            std::string row = "(" + std::to_string(r.n) + "," + std::to_string(r.r) + "," + std::to_string(r.s) + ") " +
                              std::to_string(r.order);
            report(row, std::to_string(c.l_count()) + "/" + std::to_string(c.lp_count()),
                   std::to_string(r.l) + "/" + std::to_string(r.lp));
        }
    } else {
        for (auto [order, count] : kMni) {
            if (order > max_order) break;
            auto c = catalogue_by_search(order, 1, jobs);
            std::size_t mni = 0;
            for (const auto& a : c.blind) mni += mni_test_square(a);
            auto t = cubic_type(order / 2, 1);
            report("(" + std::to_string(t.n) + ",3," + std::to_string(t.s) + ")", std::to_string(mni),
                   std::to_string(count));
        }
    }
    return ok ? kOk : kCheckFailed;
}

struct FigureCase {
    std::string name;
    BipartiteGraph g;
    int k;
    LehmanType type;
};

std::vector<FigureCase> figure_cases() {
    auto neg7 = closure_generate({figures::cube()}, 14, -1).at(7).blind.at(0);
    return {{"fano", BipartiteGraph(figures::fano_a()), 2, {7, 3, 3, 2}},
            {"cube", figures::cube(), -1, {4, 3, 1, -1}},
            {"moebius10", figures::moebius10(), 1, {5, 3, 2, 1}},
            {"desargues", figures::desargues(), 2, {10, 3, 4, 2}},
            {"heawood", figures::heawood(), 2, {7, 3, 3, 2}},
            {"moebius22", figures::moebius22(), 1, {11, 3, 4, 1}},
            {"ladder22_a", figures::ladder22_a(), 1, {11, 3, 4, 1}},
            {"ladder22_b", figures::ladder22_b(), 1, {11, 3, 4, 1}},
            {"ladder22_c", figures::ladder22_c(), 1, {11, 3, 4, 1}},
            {"missing34", figures::missing34(), 1, {17, 3, 6, 1}},
            {"rungs28", figures::rungs28(), 1, {14, 3, 5, 1}},
            {"ladderfree28", figures::ladderfree28(), 1, {14, 3, 5, 1}},
            {"negative14", BipartiteGraph(neg7), -1, {7, 3, 2, -1}}};
}

int cmd_figures(const std::string& dir) {
    if (!dir.empty()) std::filesystem::create_directories(dir);
    bool ok = true;
    for (const auto& f : figure_cases()) {
        auto c = certify(f.g, f.k);
        bool good = c && c->type == f.type;
        json j{{"name", f.name}, {"certified", good}, {"type", f.type.to_string()}};
        if (f.g.regular_degree() == 3) {
            j["has_3rung_ladder"] = has_3rung_ladder(f.g);
            j["has_4rung_ladder"] = has_4rung_ladder(f.g);
            j["biclique_partitions"] = find_biclique_partitions(f.g).size();
        }
        if (f.name == "missing34") good &= has_3rung_ladder(f.g) && !has_4rung_ladder(f.g);
        if (f.name == "ladderfree28") good &= !has_3rung_ladder(f.g) && !find_biclique_partitions(f.g).empty();
        ok &= good;
        if (!dir.empty()) {
            auto path = (std::filesystem::path(dir) / (f.name + ".lmx")).string();
            write_file(path, lmx(f.g.matrix()));
            j["file"] = path;
        }
        out << j.dump() << "\n";
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_vertices(const std::string& path) {
    auto a = read_binary(path);
    VRep v;
    try {
        v = enumerate_vertices(covering_polyhedron(a));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    json vs = json::array(), rs = json::array(), fs = json::array();
    for (const auto& x : v.vertices) vs.push_back(vec_json(x));
    for (const auto& x : v.rays) rs.push_back(vec_json(x));
    for (const auto& x : fractional_vertices(v)) fs.push_back(vec_json(x));
    out << json{{"vertices", vs}, {"rays", rs}, {"fractional", fs}}.dump(2) << "\n";
    return kOk;
}

int cmd_mni(const std::string& path, bool exact) {
    auto a = read_binary(path);
    json j{{"file", path}};
    bool agree = true;
    try {
        j["mni_test_square"] = mni_test_square(a);
    } catch (const std::invalid_argument& e) {
        if (!exact) throw UsageError(e.what());
        j["mni_test_square"] = nullptr;
    }
    if (exact) {
        bool e = is_mni_exact(Clutter::from_matrix(a));
        j["is_mni_exact"] = e;
        if (!j["mni_test_square"].is_null()) agree = j["mni_test_square"].get<bool>() == e;
    }
    out << j.dump(2) << "\n";
    return agree ? kOk : kCheckFailed;
}

int cmd_blocker(const std::string& path) {
    auto c = read_clutter(path);
    auto b = blocker(c);
    out << to_clutter_text(b);
    return blocker(b) == c ? kOk : kCheckFailed;
}

int cmd_minor(const std::string& path, const std::string& del, const std::string& con) {
    auto c = read_clutter(path);
    try {
        out << to_clutter_text(minor(c, parse_vertex_list(del), parse_vertex_list(con)));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return kOk;
}

int cmd_plane(int q) {
    auto p = build_plane(q);
    out << to_clutter_text(p.lines);
    return kOk;
}

int cmd_blocking_sets(int q) {
    auto p = build_plane(q);
    auto bs = blocking_sets(p);
    std::set<Mask> zc;
    for (const auto& t : triangles(p)) zc.insert(zero_corner(t));
    json sets = json::array();
    for (Mask s : bs) sets.push_back(mask_json(s));
    bool equal = std::set<Mask>(bs.begin(), bs.end()) == zc;
    out << json{{"q", q}, {"count", bs.size()}, {"triangles", triangles(p).size()}, {"equal_to_zero_corners", equal},
                {"sets", sets}}
               .dump()
        << "\n";
    return kOk;
}

int cmd_fano_minor_check() {
    bool f = verify_fano_minor_in_augmented_ternary();
    out << json{{"fano_minor", f}}.dump() << "\n";
    return f ? kOk : kCheckFailed;
}

json segment_json(const LadderSegment& s) {
    return {{"b", {s.b0, s.b1, s.b2}}, {"w", {s.w0, s.w1, s.w2}}, {"b_L", s.b_L},
            {"w_L", s.w_L},           {"b_R", s.b_R},            {"w_R", s.w_R}};
}

int cmd_ladders(const std::string& path) {
    BipartiteGraph g(read_binary(path));
    json j = json::array();
    try {
        for (const auto& s : find_3rung_ladders(g)) j.push_back(segment_json(s));
    } catch (const ConstructionError& e) {
        throw UsageError(e.what());
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_reduce(const std::string& path, int index, const std::string& dest) {
    BipartiteGraph g(read_binary(path));
    auto segs = find_3rung_ladders(g);
    if (index < 0 || index >= int(segs.size())) throw UsageError("segment index out of range");
    try {
        auto h = ladder_reduce(g, segs[index]);
        if (!dest.empty()) write_file(dest, lmx(h.matrix()));
        else out << lmx(h.matrix());
    } catch (const ConstructionError& e) {
        std::cerr << e.what() << "\n";
        return kCheckFailed;
    }
    return kOk;
}

int cmd_insert(const std::string& path, int k, int index, const std::string& dest) {
    BipartiteGraph g(read_binary(path));
    std::vector<EdgePair> pairs;
    try {
        pairs = expandable_pairs(g, k);
    } catch (const ConstructionError& e) {
        std::cerr << e.what() << "\n";
        return kCheckFailed;
    }
    if (index < 0) {
        json j = json::array();
        for (const auto& p : pairs)
            j.push_back({{"e", {p.e.black, p.e.white}}, {"f", {p.f.black, p.f.white}}});
        out << j.dump() << "\n";
        return kOk;
    }
    if (index >= int(pairs.size())) throw UsageError("pair index out of range");
    auto h = ladder_insert(g, pairs[index], k);
    if (!certify(h, k)) return kCheckFailed;
    if (!dest.empty()) write_file(dest, lmx(h.matrix()));
    else out << lmx(h.matrix());
    return kOk;
}

int cmd_partitions(const std::string& path) {
    BipartiteGraph g(read_binary(path));
    json j = json::array();
    try {
        for (const auto& p : find_biclique_partitions(g)) {
            json blocks = json::array();
            for (const auto& b : p.blocks) blocks.push_back({{"blacks", mask_json(b.blacks)}, {"whites", mask_json(b.whites)}});
            j.push_back({{"blocks", blocks}, {"out_neighbour", p.out_neighbour}});
        }
    } catch (const ConstructionError& e) {
        throw UsageError(e.what());
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_compress(const std::string& path, int index, const std::string& dest) {
    BipartiteGraph g(read_binary(path));
    auto parts = find_biclique_partitions(g);
    if (index < 0 || index >= int(parts.size())) throw UsageError("partition index out of range");
    try {
        auto h = biclique_compress(g, parts[index]);
        if (!dest.empty()) write_file(dest, lmx(h.matrix()));
        else out << lmx(h.matrix());
    } catch (const ConstructionError& e) {
        std::cerr << e.what() << "\n";
        return kCheckFailed;
    }
    return kOk;
}

int cmd_expand(const std::string& path, int k_in, const std::string& matching, const std::string& dest) {
    BipartiteGraph g(read_binary(path));
    std::vector<int> m;
    if (matching == "rungs") {
        m = rungs_of(g);
    } else {
        std::stringstream ss(matching);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                m.push_back(std::stoi(tok));
            } catch (const std::logic_error&) {
                throw UsageError("bad matching: " + matching);
            }
        }
    }
    try {
        auto h = biclique_expand(g, m, k_in);
        if (!certify(h, -k_in)) return kCheckFailed;
        if (!dest.empty()) write_file(dest, lmx(h.matrix()));
        else out << lmx(h.matrix());
    } catch (const ConstructionError& e) {
        std::cerr << e.what() << "\n";
        return kCheckFailed;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lehman matrices and graphs"};
    app.require_subcommand(1);
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write a run manifest (JSON) to this file");

    std::string file, out_path, mode = "blind", del, con, matching;
    std::vector<std::string> bases, seeds;
    int k = 1, order = 0, max_order = 0, jobs = 1, which = 1, q = 2, index = -1, cap = 28;
    bool flag = false, exact = false, no_expected = false;

    auto verify = app.add_subcommand("verify", "certify a matrix as Lehman at k");
    verify->add_option("file", file)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--out", out_path, "write the partner matrix here");

    auto tables = app.add_subcommand("tables", "recompute the catalogue tables and diff against expected counts");
    tables->add_option("--which", which)->required();
    tables->add_option("--max", max_order)->required();
    tables->add_option("--jobs", jobs);
    tables->add_option("--cap", cap, "largest order allowed");
    tables->add_flag("--no-expected", no_expected);

    auto figs = app.add_subcommand("figures", "write and certify the built-in example graphs");
    figs->add_option("--out", out_path, "directory for .lmx files");

    auto generate = app.add_subcommand("generate", "connected cubic bipartite graphs on 2n vertices");
    generate->add_option("--order", order)->required();
    generate->add_flag("--no-prune", flag);
    generate->add_option("--mode", mode);
    generate->add_option("--jobs", jobs);
    generate->add_option("--out", out_path);

    auto catalogue = app.add_subcommand("catalogue", "cubic Lehman catalogue by exhaustive search");
    catalogue->add_option("--order", order)->required();
    catalogue->add_option("--k", k)->required();
    catalogue->add_option("--mode", mode);
    catalogue->add_option("--jobs", jobs);
    catalogue->add_option("--out", out_path);

    auto closure = app.add_subcommand("closure", "closure under ladder insertion and biclique expansion");
    closure->add_option("--base", bases)->required();
    closure->add_option("--seed", seeds, "opposite-sign graphs to expand");
    closure->add_option("--k", k)->required();
    closure->add_option("--max", max_order)->required();
    closure->add_flag("--exhaustive", flag);
    closure->add_option("--out", out_path);

    auto vertices = app.add_subcommand("vertices", "vertices and rays of the covering polyhedron");
    vertices->add_option("file", file)->required();

    auto mni = app.add_subcommand("mni", "unique-fractional-vertex test for a square matrix");
    mni->add_option("file", file)->required();
    mni->add_flag("--exact", exact, "also run the exhaustive minor check");

    auto blk = app.add_subcommand("blocker", "minimal transversals of a clutter");
    blk->add_option("file", file)->required();

    auto mnr = app.add_subcommand("minor", "delete and contract vertices of a clutter");
    mnr->add_option("file", file)->required();
    mnr->add_option("--delete", del);
    mnr->add_option("--contract", con);

    auto plane = app.add_subcommand("plane", "lines of the projective plane of order q");
    plane->add_option("--q", q)->required();

    auto bsets = app.add_subcommand("blocking-sets", "blocking sets of the plane of order q");
    bsets->add_option("--q", q)->required();

    auto fano = app.add_subcommand("fano-minor-check", "look for a Fano minor in the augmented ternary clutter");

    auto ladders = app.add_subcommand("ladders", "3-rung ladder segments of a cubic graph");
    ladders->add_option("file", file)->required();

    auto reduce = app.add_subcommand("reduce", "ladder reduction at a segment index");
    reduce->add_option("file", file)->required();
    reduce->add_option("--segment", index)->required();
    reduce->add_option("--out", out_path);

    auto insert = app.add_subcommand("insert", "list expandable pairs, or insert at a pair index");
    insert->add_option("file", file)->required();
    insert->add_option("--k", k)->required();
    insert->add_option("--pair", index);
    insert->add_option("--out", out_path);

    auto partitions = app.add_subcommand("partitions", "biclique partitions");
    partitions->add_option("file", file)->required();

    auto compress = app.add_subcommand("compress", "biclique compression at a partition index");
    compress->add_option("file", file)->required();
    compress->add_option("--partition", index)->required();
    compress->add_option("--out", out_path);

    auto expand = app.add_subcommand("expand", "biclique expansion along a perfect matching");
    expand->add_option("file", file)->required();
    expand->add_option("--k", k)->required();
    expand->add_option("--matching", matching, "comma-separated white per black, or 'rungs'")->required();
    expand->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    for (int i = 1; i < argc; ++i) manifest.parameters.push_back(argv[i]);
    auto t0 = std::chrono::steady_clock::now();
    int rc = kOk;
    try {
        auto* sub = app.get_subcommands().front();
        manifest.command = sub->get_name();
        manifest.workers = std::max(1, jobs);
        if (sub == verify) rc = cmd_verify(file, k, out_path);
        else if (sub == tables) rc = cmd_tables(which, max_order, jobs, no_expected, cap);
        else if (sub == figs) rc = cmd_figures(out_path);
        else if (sub == generate) rc = cmd_generate(order, flag, mode, jobs, out_path);
        else if (sub == catalogue) rc = cmd_catalogue(order, k, mode, jobs, out_path);
        else if (sub == closure) rc = cmd_closure(bases, seeds, k, max_order, flag, out_path);
        else if (sub == vertices) rc = cmd_vertices(file);
        else if (sub == mni) rc = cmd_mni(file, exact);
        else if (sub == blk) rc = cmd_blocker(file);
        else if (sub == mnr) rc = cmd_minor(file, del, con);
        else if (sub == plane) rc = cmd_plane(q);
        else if (sub == bsets) rc = cmd_blocking_sets(q);
        else if (sub == fano) rc = cmd_fano_minor_check();
        else if (sub == ladders) rc = cmd_ladders(file);
        else if (sub == reduce) rc = cmd_reduce(file, index, out_path);
        else if (sub == insert) rc = cmd_insert(file, k, index, out_path);
        else if (sub == partitions) rc = cmd_partitions(file);
        else if (sub == compress) rc = cmd_compress(file, index, out_path);
        else if (sub == expand) rc = cmd_expand(file, k, matching, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    std::cout << out.str();
    if (!manifest_path.empty()) {
        manifest.outputs["stdout"] = hex64(fnv1a(out.str()));
        manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ofstream(manifest_path) << manifest.to_json().dump(2) << "\n";
    }
    return rc;
}
