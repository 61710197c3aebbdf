#pragma once

#include "lehman/canonical.hpp"
#include "lehman/constructions.hpp"
#include "lehman/lehman.hpp"
#include "lehman/search.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace lehman {

struct Catalogue {
    LehmanType params;
    std::vector<BinaryMatrix> blind;       // one lex-max matrix per colour-blind class
    std::vector<BinaryMatrix> preserving;  // one lex-max matrix per colour-preserving class
    std::size_t l_count() const { return blind.size(); }
    std::size_t lp_count() const { return preserving.size(); }
};

inline LehmanType cubic_type(int n, int k) {
    int s = (n + k) % 3 == 0 ? (n + k) / 3 : 0;
    return {n, 3, s, k};
}

// Exact Lehman test with a modular fast path.
inline bool is_lehman_at(const BinaryMatrix& a, int k) {
    switch (modular_screen(a, k)) {
        case ScreenResult::lehman: return true;
        case ScreenResult::not_lehman: return false;
        default: return certify(a, k).has_value();
    }
}

namespace detail {

inline void sort_matrices(std::vector<BinaryMatrix>& v) {
    std::sort(v.begin(), v.end(),
              [](const BinaryMatrix& x, const BinaryMatrix& y) { return x.row_masks() < y.row_masks(); });
}

// Fills both class lists from a set of colour-preserving canonical matrices
// closed under transposition.
inline Catalogue from_preserving(int n, int k, const std::set<std::vector<Mask>>& classes) {
    Catalogue c{cubic_type(n, k), {}, {}};
    for (const auto& rows : classes) {
        BinaryMatrix a(n, rows);
        c.preserving.push_back(a);
        auto t = canonical_matrix(a.transpose());
        auto self = canonical_matrix(a);
        if (self.values >= t.values) c.blind.push_back(a);
    }
    sort_matrices(c.blind);
    sort_matrices(c.preserving);
    return c;
}

}  // namespace detail

// Certifies each colour-blind representative at k. Every Lehman graph is
// re-certified through the exact rational path before it is counted.
inline Catalogue extract_lehman(const std::vector<BipartiteGraph>& stream, int k) {
    int n = stream.empty() ? 0 : stream.front().n();
    Catalogue c{cubic_type(n, k), {}, {}};
    for (const auto& g : stream) {
        if (!is_lehman_at(g.matrix(), k)) continue;
        if (!certify(g.matrix(), k)) throw std::logic_error("extract_lehman: modular screen disagrees with exact path");
        auto a = canonical_matrix(g.matrix());
        auto t = canonical_matrix(g.matrix().transpose());
        c.blind.push_back(a.values >= t.values ? a.matrix() : t.matrix());
        c.preserving.push_back(a.matrix());
        if (!(t.values == a.values)) c.preserving.push_back(t.matrix());
    }
    detail::sort_matrices(c.blind);
    detail::sort_matrices(c.preserving);
    return c;
}

// Search without holding the whole graph stream: each worker keeps only the
// graphs that pass the Lehman test.
inline Catalogue catalogue_by_search(int order_2n, int k, int jobs = 1, GenerateStats* stats = nullptr) {
    GenerateOptions opt;
    opt.jobs = jobs;
    std::vector<std::vector<BipartiteGraph>> hits(std::max(1, jobs));
    auto st = for_each_cubic_bipartite(order_2n, opt, [&](int w, const BinaryMatrix& a) {
        if (is_lehman_at(a, k)) hits[w].emplace_back(a);
    });
    if (stats) *stats = st;
    std::vector<BipartiteGraph> all;
    for (auto& v : hits) all.insert(all.end(), v.begin(), v.end());
    auto c = extract_lehman(all, k);
    c.params = cubic_type(order_2n / 2, k);
    return c;
}

enum class InsertMode { sufficient, exhaustive };

struct ClosureOptions {
    InsertMode insert = InsertMode::sufficient;
    std::vector<BipartiteGraph> opposite_seeds;  // cubic Lehman graphs with sign -k
};

// Breadth-first closure by order under ladder insertion and biclique
// expansion of the opposite-sign seeds; classes closed under transposition.
inline std::map<int, Catalogue> closure_generate(const std::vector<BipartiteGraph>& bases, int max_2n, int k,
                                                 const ClosureOptions& opt = {}) {
    if (k != 1 && k != -1) throw std::invalid_argument("closure: k must be 1 or -1");
    int max_n = max_2n / 2;
    std::map<int, std::set<std::vector<Mask>>> level;
    auto add = [&](const BinaryMatrix& a) {
        if (a.rows() > max_n) return;
        level[a.rows()].insert(canonical_matrix(a).matrix().row_masks());
        level[a.rows()].insert(canonical_matrix(a.transpose()).matrix().row_masks());
    };
    for (const auto& g : bases) {
        if (!certify(g, k)) throw std::invalid_argument("closure: base graph is not Lehman at this k");
        add(g.matrix());
    }
    for (const auto& seed : opt.opposite_seeds) {
        if (seed.n() * 2 > max_n) continue;
        if (k == 1) {
            for (const auto& m : perfect_matchings(seed)) {
                auto e = biclique_expand(seed, m, -1);
                if (is_lehman_at(e.matrix(), 1)) add(e.matrix());
            }
        } else {
            auto e = biclique_expand(seed, rungs_of(seed), 1);
            if (is_lehman_at(e.matrix(), -1)) add(e.matrix());
        }
    }
    for (int n = 1; n <= max_n; ++n) {
        auto it = level.find(n);
        if (it == level.end() || n + 3 > max_n) continue;
        for (const auto& rows : it->second) {
            BipartiteGraph g(BinaryMatrix(n, rows));
            if (opt.insert == InsertMode::sufficient) {
                for (const auto& p : expandable_pairs(g, k)) add(ladder_insert_unchecked(g, p).matrix());
            } else {
                std::set<std::vector<Mask>> seen;
                for (const auto& p : all_nonincident_pairs(g)) {
                    auto h = ladder_insert_unchecked(g, p);
                    if (!h.is_connected()) continue;
                    auto key = canonical_matrix(h.matrix()).matrix().row_masks();
                    if (!seen.insert(key).second) continue;
                    if (is_lehman_at(h.matrix(), k)) add(h.matrix());
                }
            }
        }
    }
    std::map<int, Catalogue> out;
    for (auto& [n, classes] : level) {
        for (const auto& rows : classes)
            if (!certify(BinaryMatrix(n, rows), k)) throw std::logic_error("closure: produced a non-Lehman graph");
        out[n] = detail::from_preserving(n, k, classes);
    }
    return out;
}

}  // namespace lehman
