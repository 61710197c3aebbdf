#pragma once

#include "lehman/graph.hpp"
#include "lehman/lehman.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace lehman {

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- 3-rung ladders -------------------------------------------------------

struct LadderSegment {
    int b0, b1, b2, w0, w1, w2;
    int b_L, w_L, b_R, w_R;
    auto key() const { return std::tie(b0, b1, b2, w0, w1, w2); }
    friend bool operator==(const LadderSegment&, const LadderSegment&) = default;
};

namespace detail {

inline int other_nbr(Mask nbrs, Mask exclude) {
    Mask rest = nbrs & ~exclude;
    if (popcount(rest) != 1) return -1;
    return std::countr_zero(rest);
}

inline void require_cubic(const BipartiteGraph& g, const char* op) {
    auto r = g.regular_degree();
    if (!r || *r != 3) throw ConstructionError(std::string(op) + ": graph is not cubic");
}

// Segment with middle rung (b1,w1), if one exists.
inline std::optional<LadderSegment> segment_at(const BipartiteGraph& g, int b1, int w1) {
    if (!g.has_edge(b1, w1)) return std::nullopt;
    auto ws = members(g.black_nbrs(b1) & ~bit(w1));
    auto bs = members(g.white_nbrs(w1) & ~bit(b1));
    if (ws.size() != 2 || bs.size() != 2) return std::nullopt;
    for (int flip = 0; flip < 2; ++flip) {
        int b0 = bs[0], b2 = bs[1];
        int w0 = ws[flip], w2 = ws[1 - flip];
        if (!g.has_edge(b0, w0) || !g.has_edge(b2, w2)) continue;
        if (g.has_edge(b0, w2) || g.has_edge(b2, w0)) continue;
        LadderSegment s{b0, b1, b2, w0, w1, w2, -1, -1, -1, -1};
        s.w_L = other_nbr(g.black_nbrs(b0), bit(w0) | bit(w1));
        s.w_R = other_nbr(g.black_nbrs(b2), bit(w1) | bit(w2));
        s.b_L = other_nbr(g.white_nbrs(w0), bit(b0) | bit(b1));
        s.b_R = other_nbr(g.white_nbrs(w2), bit(b1) | bit(b2));
        if (s.w_L < 0 || s.w_R < 0 || s.b_L < 0 || s.b_R < 0) return std::nullopt;
        return s;  // b0 < b2 by construction
    }
    return std::nullopt;
}

}  // namespace detail

inline std::vector<LadderSegment> find_3rung_ladders(const BipartiteGraph& g) {
    detail::require_cubic(g, "find_3rung_ladders");
    std::vector<LadderSegment> out;
    for (auto e : g.edges())
        if (auto s = detail::segment_at(g, e.black, e.white)) out.push_back(*s);
    std::sort(out.begin(), out.end(), [](const LadderSegment& x, const LadderSegment& y) { return x.key() < y.key(); });
    return out;
}

inline bool has_3rung_ladder(const BipartiteGraph& g) {
    detail::require_cubic(g, "has_3rung_ladder");
    for (auto e : g.edges())
        if (detail::segment_at(g, e.black, e.white)) return true;
    return false;
}

// A 3-rung segment extends to an induced 4-rung ladder when an attachment
// pair on one side forms a further rung.
inline bool has_4rung_ladder(const BipartiteGraph& g) {
    for (const auto& s : find_3rung_ladders(g)) {
        if (s.b_L == s.b_R || s.w_L == s.w_R) continue;
        if (g.has_edge(s.b_L, s.w_L) || g.has_edge(s.b_R, s.w_R)) return true;
    }
    return false;
}

struct ReductionResult {
    BipartiteGraph graph;
    std::vector<int> black_map;  // old -> new, -1 if removed
    std::vector<int> white_map;
};

inline ReductionResult ladder_reduce_mapped(const BipartiteGraph& g, const LadderSegment& l) {
    detail::require_cubic(g, "ladder_reduce");
    auto check = detail::segment_at(g, l.b1, l.w1);
    if (!check || !(*check == l)) throw ConstructionError("ladder_reduce: not a 3-rung ladder segment of the graph");
    if (l.b_L == l.b_R || l.w_L == l.w_R) throw ConstructionError("ladder_reduce: attachments coincide");
    if (g.has_edge(l.b_L, l.w_R)) throw ConstructionError("ladder_reduce: b_L adjacent to w_R");
    if (g.has_edge(l.b_R, l.w_L)) throw ConstructionError("ladder_reduce: b_R adjacent to w_L");
    int n = g.n();
    ReductionResult res{{}, std::vector<int>(n, -1), std::vector<int>(n, -1)};
    Mask gone_b = bit(l.b0) | bit(l.b1) | bit(l.b2);
    Mask gone_w = bit(l.w0) | bit(l.w1) | bit(l.w2);
    int nb = 0, nw = 0;
    for (int v = 0; v < n; ++v) {
        if (!(gone_b >> v & 1)) res.black_map[v] = nb++;
        if (!(gone_w >> v & 1)) res.white_map[v] = nw++;
    }
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (res.black_map[e.black] >= 0 && res.white_map[e.white] >= 0)
            edges.push_back({res.black_map[e.black], res.white_map[e.white]});
    edges.push_back({res.black_map[l.b_L], res.white_map[l.w_R]});
    edges.push_back({res.black_map[l.b_R], res.white_map[l.w_L]});
    res.graph = BipartiteGraph::from_edges(n - 3, edges);
    return res;
}

inline BipartiteGraph ladder_reduce(const BipartiteGraph& g, const LadderSegment& l) {
    return ladder_reduce_mapped(g, l).graph;
}

// e = (w_L, b_R), f = (w_R, b_L), both stored black-first.
struct EdgePair {
    Edge e, f;
    friend bool operator==(const EdgePair&, const EdgePair&) = default;
    friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

// Insertion without any precondition beyond e, f being non-incident edges.
// New vertices are appended: blacks n..n+2 = b0,b1,b2, whites n..n+2 = w0,w1,w2.
inline BipartiteGraph ladder_insert_unchecked(const BipartiteGraph& g, const EdgePair& p) {
    int n = g.n();
    int b_R = p.e.black, w_L = p.e.white, b_L = p.f.black, w_R = p.f.white;
    if (!g.has_edge(b_R, w_L) || !g.has_edge(b_L, w_R)) throw ConstructionError("ladder_insert: e or f is not an edge");
    if (b_L == b_R || w_L == w_R) throw ConstructionError("ladder_insert: e and f are incident");
    std::vector<Edge> edges;
    for (auto x : g.edges())
        if (!(x == p.e) && !(x == p.f)) edges.push_back(x);
    int b0 = n, b1 = n + 1, b2 = n + 2, w0 = n, w1 = n + 1, w2 = n + 2;
    for (Edge x : {Edge{b0, w0}, Edge{b0, w1}, Edge{b1, w0}, Edge{b1, w1}, Edge{b1, w2}, Edge{b2, w1}, Edge{b2, w2}})
        edges.push_back(x);
    edges.push_back({b_L, w0});
    edges.push_back({b_R, w2});
    edges.push_back({b0, w_L});
    edges.push_back({b2, w_R});
    return BipartiteGraph::from_edges(n + 3, edges);
}

// The segment created by ladder_insert on a graph of order n.
inline LadderSegment inserted_segment(int n, const EdgePair& p) {
    return {n, n + 1, n + 2, n, n + 1, n + 2, p.f.black, p.e.white, p.e.black, p.f.white};
}

inline bool satisfies_insertion_conditions(const LehmanCertificate& c, const EdgePair& p) {
    int b_R = p.e.black, w_L = p.e.white, b_L = p.f.black, w_R = p.f.white;
    const auto& B = c.partner;
    if (c.mates[b_L] & c.mates[b_R]) return false;
    if (c.comates[w_L] & c.comates[w_R]) return false;
    if (c.type.k == 1) return B.get(b_L, w_R) && B.get(b_R, w_L);
    return !B.get(b_L, w_L) && !B.get(b_R, w_R);
}

inline std::vector<EdgePair> all_nonincident_pairs(const BipartiteGraph& g) {
    std::vector<EdgePair> out;
    auto es = g.edges();
    for (auto e : es)
        for (auto f : es)
            if (e.black != f.black && e.white != f.white) out.push_back({e, f});
    return out;
}

inline std::vector<EdgePair> expandable_pairs(const BipartiteGraph& g, int k) {
    if (k != 1 && k != -1) throw ConstructionError("expandable_pairs: only k = 1 and k = -1 are supported");
    detail::require_cubic(g, "expandable_pairs");
    auto c = certify(g, k);
    if (!c) throw ConstructionError("expandable_pairs: graph is not a Lehman graph with this k");
    std::vector<EdgePair> out;
    for (const auto& p : all_nonincident_pairs(g))
        if (satisfies_insertion_conditions(*c, p)) out.push_back(p);
    return out;
}

inline BipartiteGraph ladder_insert(const BipartiteGraph& g, const EdgePair& p, int k) {
    if (k != 1 && k != -1) throw ConstructionError("ladder_insert: only k = 1 and k = -1 are supported");
    detail::require_cubic(g, "ladder_insert");
    auto c = certify(g, k);
    if (!c) throw ConstructionError("ladder_insert: graph is not a Lehman graph with this k");
    if (p.e.black == p.f.black || p.e.white == p.f.white || !g.has_edge(p.e.black, p.e.white) ||
        !g.has_edge(p.f.black, p.f.white) || !satisfies_insertion_conditions(*c, p))
        throw ConstructionError("ladder_insert: pair not expandable");
    return ladder_insert_unchecked(g, p);
}

// Partner of the inserted graph predicted from the old partner (k = +-1).
// Old block is B; the border uses B(b_R), 1 - B(b_L) - B(b_R), B(b_L) for the
// new rows and the analogous columns; only the 3x3 corner depends on k.
inline BinaryMatrix predicted_insert_partner(const LehmanCertificate& c, const EdgePair& p) {
    int n = c.partner.rows();
    int b_R = p.e.black, w_L = p.e.white, b_L = p.f.black, w_R = p.f.white;
    const auto& B = c.partner;
    int w0 = n, w1 = n + 1, w2 = n + 2;
    Mask full = bit(n) - 1;
    std::vector<Mask> rows(n + 3, 0);
    for (int i = 0; i < n; ++i) {
        rows[i] = B.row(i);
        if (B.get(i, w_R)) rows[i] |= bit(w0);
        if (!B.get(i, w_R) && !B.get(i, w_L)) rows[i] |= bit(w1);
        if (B.get(i, w_L)) rows[i] |= bit(w2);
    }
    rows[n] = B.row(b_R);
    rows[n + 1] = full & ~B.row(b_L) & ~B.row(b_R);
    rows[n + 2] = B.row(b_L);
    if (c.type.k == 1) {
        rows[n] |= bit(w1);
        rows[n + 1] |= bit(w0) | bit(w2);
        rows[n + 2] |= bit(w1);
    } else {
        rows[n] |= bit(w2);
        rows[n + 2] |= bit(w0);
    }
    return BinaryMatrix(n + 3, rows);
}

// ---- biclique partitions --------------------------------------------------

struct Biclique {
    Mask blacks = 0, whites = 0;
    friend bool operator==(const Biclique&, const Biclique&) = default;
    friend auto operator<=>(const Biclique&, const Biclique&) = default;
};

struct BicliquePartition {
    std::vector<Biclique> blocks;    // sorted by lowest black vertex
    std::vector<int> out_neighbour;  // per black vertex
    friend bool operator==(const BicliquePartition& a, const BicliquePartition& b) { return a.blocks == b.blocks; }
};

namespace detail {

inline void subsets_of_size(Mask m, int k, std::vector<Mask>& out, Mask acc = 0) {
    if (k == 0) {
        out.push_back(acc);
        return;
    }
    for (Mask rest = m; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        subsets_of_size(rest & ~bit(v) & ~(bit(v) - 1), k - 1, out, acc | bit(v));
    }
}

inline BicliquePartition finish_partition(const BipartiteGraph& g, std::vector<Biclique> blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const Biclique& x, const Biclique& y) {
        return std::countr_zero(x.blacks) < std::countr_zero(y.blacks);
    });
    BicliquePartition p{blocks, std::vector<int>(g.n(), -1)};
    for (const auto& b : blocks)
        for (int v : members(b.blacks)) p.out_neighbour[v] = detail::other_nbr(g.black_nbrs(v), b.whites);
    return p;
}

}  // namespace detail

inline std::vector<BicliquePartition> find_biclique_partitions(const BipartiteGraph& g) {
    auto r = g.regular_degree();
    if (!r) throw ConstructionError("find_biclique_partitions: graph is not regular");
    if (*r < 3) throw ConstructionError("find_biclique_partitions: degree must be at least 3");
    int n = g.n(), t = *r - 1;
    if (n % t) return {};
    std::set<Biclique> cand;
    for (int b = 0; b < n; ++b) {
        std::vector<Mask> ts;
        detail::subsets_of_size(g.black_nbrs(b), t, ts);
        for (Mask ws : ts) {
            Mask common = ~Mask(0);
            for (int w : members(ws)) common &= g.white_nbrs(w);
            std::vector<Mask> ss;
            detail::subsets_of_size(common, t, ss);
            for (Mask bs : ss)
                if (bs >> b & 1) cand.insert({bs, ws});
        }
    }
    std::vector<std::vector<Biclique>> by_black(n);
    for (const auto& c : cand) by_black[std::countr_zero(c.blacks)].push_back(c);
    // every block is listed under its lowest black; search covers lowest uncovered black
    std::vector<std::vector<Biclique>> containing(n);
    for (const auto& c : cand)
        for (int v : members(c.blacks)) containing[v].push_back(c);

    std::vector<BicliquePartition> out;
    std::vector<Biclique> chosen;
    Mask full = bit(n) - 1;
    std::function<void(Mask, Mask)> rec = [&](Mask cb, Mask cw) {
        if (cb == full) {
            out.push_back(detail::finish_partition(g, chosen));
            return;
        }
        int v = std::countr_zero(~cb & full);
        for (const auto& c : containing[v]) {
            if ((c.blacks & cb) || (c.whites & cw)) continue;
            chosen.push_back(c);
            rec(cb | c.blacks, cw | c.whites);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const BicliquePartition& x, const BicliquePartition& y) {
        return x.blocks < y.blocks;
    });
    return out;
}

inline void validate_partition(const BipartiteGraph& g, const BicliquePartition& p) {
    auto r = g.regular_degree();
    if (!r || *r < 3) throw ConstructionError("biclique partition: graph must be r-regular with r >= 3");
    Mask cb = 0, cw = 0;
    for (const auto& b : p.blocks) {
        if (popcount(b.blacks) != *r - 1 || popcount(b.whites) != *r - 1)
            throw ConstructionError("biclique partition: block has wrong size");
        if ((b.blacks & cb) || (b.whites & cw)) throw ConstructionError("biclique partition: blocks overlap");
        for (int v : members(b.blacks))
            if ((g.black_nbrs(v) & b.whites) != b.whites) throw ConstructionError("biclique partition: block not complete");
        cb |= b.blacks;
        cw |= b.whites;
    }
    Mask full = bit(g.n()) - 1;
    if (cb != full || cw != full) throw ConstructionError("biclique partition: blocks do not cover the graph");
}

inline BipartiteGraph biclique_compress(const BipartiteGraph& g, const BicliquePartition& p) {
    validate_partition(g, p);
    int r = *g.regular_degree();
    bool ok = false;
    for (const auto& t : lehman_types(g.matrix()))
        if (t.k == 1 || (t.k == -1 && r == 3)) ok = true;
    if (!ok) throw ConstructionError("biclique_compress: graph must be Lehman with k = 1, or k = -1 and r = 3");
    auto blocks = p.blocks;
    std::sort(blocks.begin(), blocks.end(), [](const Biclique& x, const Biclique& y) {
        return std::countr_zero(x.blacks) < std::countr_zero(y.blacks);
    });
    int m = int(blocks.size());
    std::vector<int> block_of_white(g.n());
    for (int i = 0; i < m; ++i)
        for (int w : members(blocks[i].whites)) block_of_white[w] = i;
    BinaryMatrix a(m, m);
    for (int x = 0; x < m; ++x) {
        a.set(x, x);
        for (int b : members(blocks[x].blacks))
            for (int w : members(g.black_nbrs(b))) a.set(x, block_of_white[w]);
    }
    auto d = a.regular_degree();
    if (!d || *d != r)
        throw ConstructionError("biclique_compress: compressed graph is not " + std::to_string(r) +
                                "-regular (K_{r+1,r+1} minus a perfect matching)");
    return BipartiteGraph(a);
}

// Order in which each vertex lists its non-matching neighbours.
struct ExpansionOrder {
    std::vector<std::vector<int>> black;  // per black: whites
    std::vector<std::vector<int>> white;  // per white: blacks
};

inline std::vector<int> rungs_of(const BipartiteGraph& g) {
    auto c = certify(g, 1);
    if (!c) throw ConstructionError("rungs: graph is not a Lehman graph with k = 1");
    return rung_matching(g.matrix(), c->partner);
}

inline BipartiteGraph biclique_expand(const BipartiteGraph& g, const std::vector<int>& matching, int k_in,
                                      const ExpansionOrder* order = nullptr) {
    int n = g.n();
    auto r = g.regular_degree();
    if (!r || *r < 3) throw ConstructionError("biclique_expand: graph must be r-regular with r >= 3");
    if (k_in != 1 && k_in != -1) throw ConstructionError("biclique_expand: k must be 1 or -1");
    if (int(matching.size()) != n) throw ConstructionError("biclique_expand: matching has wrong size");
    Mask seen = 0;
    for (int b = 0; b < n; ++b) {
        int w = matching[b];
        if (w < 0 || w >= n || !g.has_edge(b, w) || (seen >> w & 1))
            throw ConstructionError("biclique_expand: not a perfect matching of the graph");
        seen |= bit(w);
    }
    if (!certify(g, k_in)) throw ConstructionError("biclique_expand: graph is not a Lehman graph with this k");
    if (k_in == 1) {
        if (*r != 3) throw ConstructionError("biclique_expand: positive input must be cubic");
        if (rungs_of(g) != matching) throw ConstructionError("biclique_expand: matching is not the rungs");
    }
    int t = *r - 1;
    std::vector<int> mate_of_white(n);
    for (int b = 0; b < n; ++b) mate_of_white[matching[b]] = b;
    std::vector<std::vector<int>> bo(n), wo(n);
    for (int b = 0; b < n; ++b) bo[b] = members(g.black_nbrs(b) & ~bit(matching[b]));
    for (int w = 0; w < n; ++w) wo[w] = members(g.white_nbrs(w) & ~bit(mate_of_white[w]));
    if (order) {
        for (int b = 0; b < n; ++b) {
            auto x = order->black.at(b);
            auto y = bo[b];
            std::sort(x.begin(), x.end());
            if (x != y) throw ConstructionError("biclique_expand: bad black ordering");
            bo[b] = order->black[b];
        }
        for (int w = 0; w < n; ++w) {
            auto x = order->white.at(w);
            auto y = wo[w];
            std::sort(x.begin(), x.end());
            if (x != y) throw ConstructionError("biclique_expand: bad white ordering");
            wo[w] = order->white[w];
        }
    }
    std::vector<Edge> edges;
    for (int b = 0; b < n; ++b)
        for (int p = 0; p < t; ++p)
            for (int q = 0; q < t; ++q) edges.push_back({b * t + p, matching[b] * t + q});
    for (int b = 0; b < n; ++b)
        for (int p = 0; p < t; ++p) {
            int w = bo[b][p];
            int q = int(std::find(wo[w].begin(), wo[w].end(), b) - wo[w].begin());
            edges.push_back({b * t + p, w * t + q});
        }
    return BipartiteGraph::from_edges(n * t, edges);
}

// J - I_{r+1} with the matching b -> b+1 mod (r+1).
inline BipartiteGraph complement_of_matching(int r) {
    int n = r + 1;
    BinaryMatrix a = BinaryMatrix::ones(n, n);
    for (int i = 0; i < n; ++i) a.set(i, i, false);
    return BipartiteGraph(a);
}

inline std::vector<int> shifted_matching(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = (i + 1) % n;
    return m;
}

// All perfect matchings, each as black -> white.
inline std::vector<std::vector<int>> perfect_matchings(const BipartiteGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(g.n(), -1);
    std::function<void(int, Mask)> rec = [&](int b, Mask used) {
        if (b == g.n()) {
            out.push_back(cur);
            return;
        }
        for (int w : members(g.black_nbrs(b) & ~used)) {
            cur[b] = w;
            rec(b + 1, used | bit(w));
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace lehman
