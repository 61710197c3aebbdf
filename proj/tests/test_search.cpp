#include "lehman/canonical.hpp"
#include "lehman/catalogue.hpp"
#include "lehman/figures.hpp"
#include "lehman/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace lehman;

namespace {

std::vector<Mask> permute_cols(const std::vector<Mask>& rows, const std::vector<int>& perm) {
    std::vector<Mask> out;
    for (Mask r : rows) {
        Mask x = 0;
        for (int j : members(r)) x |= bit(perm[j]);
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Minimum over column permutations of the sorted row list.
std::vector<Mask> brute_canon(const std::vector<Mask>& rows, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best;
    do {
        auto x = permute_cols(rows, perm);
        if (best.empty() || x < best) best = x;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Mask> transpose_rows(const std::vector<Mask>& rows, int n) {
    std::vector<Mask> t(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : members(rows[i])) t[j] |= bit(i);
    return t;
}

// Colour-blind classes of connected cubic bipartite graphs, by full enumeration
// of row multisets with column sums 3.
std::size_t brute_force_count(int n) {
    std::vector<Mask> triples;
    for (Mask m = 0; m < bit(n); ++m)
        if (popcount(m) == 3) triples.push_back(m);
    std::set<std::vector<Mask>> classes;
    std::vector<Mask> rows;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (int(rows.size()) == n) {
            std::vector<int> cs(n, 0);
            for (Mask r : rows)
                for (int j : members(r)) ++cs[j];
            if (std::any_of(cs.begin(), cs.end(), [](int c) { return c != 3; })) return;
            BinaryMatrix a(n, rows);
            if (!BipartiteGraph(a).is_connected()) return;
            auto c = brute_canon(rows, n);
            auto ct = brute_canon(transpose_rows(rows, n), n);
            classes.insert(std::min(c, ct));
            return;
        }
        for (std::size_t i = from; i < triples.size(); ++i) {
            rows.push_back(triples[i]);
            rec(i);
            rows.pop_back();
        }
    };
    rec(0);
    return classes.size();
}

BipartiteGraph relabel(const BipartiteGraph& g, std::mt19937& rng) {
    int n = g.n();
    std::vector<int> pb(n), pw(n);
    std::iota(pb.begin(), pb.end(), 0);
    std::iota(pw.begin(), pw.end(), 0);
    std::shuffle(pb.begin(), pb.end(), rng);
    std::shuffle(pw.begin(), pw.end(), rng);
    std::vector<Edge> e;
    for (auto x : g.edges()) e.push_back({pb[x.black], pw[x.white]});
    return BipartiteGraph::from_edges(n, e);
}

// Explicit search for row and column permutations taking A^T to A.
bool reversing_automorphism_oracle(const BinaryMatrix& a) {
    int n = a.rows();
    auto t = a.transpose();
    std::vector<int> rp(n);
    std::iota(rp.begin(), rp.end(), 0);
    do {
        std::vector<Mask> rows(n);
        for (int i = 0; i < n; ++i) rows[i] = t.row(rp[i]);
        // row i of A must equal row i of the row-permuted A^T after a column permutation
        std::vector<int> cp(n);
        std::iota(cp.begin(), cp.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                Mask x = 0;
                for (int j : members(rows[i])) x |= bit(cp[j]);
                ok = x == a.row(i);
            }
            if (ok) return true;
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return false;
}

std::set<std::vector<Mask>> as_set(const std::vector<BipartiteGraph>& gs) {
    std::set<std::vector<Mask>> s;
    for (const auto& g : gs) s.insert(g.matrix().row_masks());
    return s;
}

}  // namespace

TEST(Generate, MatchesBruteForce) {
    std::vector<std::size_t> expected{1, 1, 2, 5};
    for (int n = 3; n <= 6; ++n) {
        GenerateOptions opt;
        opt.prune = false;
        auto got = generate_cubic_bipartite(2 * n, opt).size();
        EXPECT_EQ(got, brute_force_count(n)) << "2n=" << 2 * n;
        EXPECT_EQ(got, expected[n - 3]);
    }
}

TEST(Generate, KnownCounts) {
    std::vector<std::size_t> expected{1, 1, 2, 5, 13, 38, 149};
    for (int n = 3; n <= 9; ++n) {
        GenerateOptions opt;
        opt.prune = false;
        EXPECT_EQ(generate_cubic_bipartite(2 * n, opt).size(), expected[n - 3]);
    }
    EXPECT_THROW(generate_cubic_bipartite(9), std::invalid_argument);
    EXPECT_THROW(generate_cubic_bipartite(4), std::invalid_argument);
}

TEST(Generate, PruningIsSound) {
    for (int order = 6; order <= 18; order += 2) {
        GenerateOptions on, off;
        off.prune = false;
        auto pruned = as_set(generate_cubic_bipartite(order, on));
        auto full = generate_cubic_bipartite(order, off);
        auto full_set = as_set(full);
        for (const auto& rows : pruned) EXPECT_TRUE(full_set.count(rows));
        for (int k : {-1, 1}) {
            auto a = extract_lehman(generate_cubic_bipartite(order, on), k);
            auto b = extract_lehman(full, k);
            EXPECT_EQ(a.l_count(), b.l_count());
            EXPECT_EQ(a.lp_count(), b.lp_count());
        }
    }
}

TEST(Generate, ConnectedCubicAndCanonical) {
    for (const auto& g : generate_cubic_bipartite(16)) {
        EXPECT_EQ(g.regular_degree(), 3);
        EXPECT_TRUE(g.is_connected());
        EXPECT_TRUE(is_canonical(g.matrix()));
    }
}

TEST(Generate, WorkerCountDoesNotChangeOutput) {
    GenerateOptions one, many;
    many.jobs = 3;
    many.shard_depth = 3;
    auto a = generate_cubic_bipartite(20, one);
    auto b = generate_cubic_bipartite(20, many);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Canonical, RelabellingInvariance) {
    std::mt19937 rng(4);
    for (auto g : {figures::cube(), figures::moebius10(), figures::heawood(), figures::ladderfree28(), figures::missing34()})
        for (int t = 0; t < 5; ++t) {
            auto h = relabel(g, rng);
            for (auto mode : {Equivalence::colour_preserving, Equivalence::colour_blind})
                EXPECT_EQ(canonical_form(g, mode), canonical_form(h, mode));
        }
}

TEST(Canonical, TransposeInBlindMode) {
    for (auto g : {figures::desargues(), figures::rungs28(), figures::ladder22_b()}) {
        EXPECT_EQ(canonical_form(g, Equivalence::colour_blind), canonical_form(g.transpose(), Equivalence::colour_blind));
        EXPECT_TRUE(isomorphic(g, g.transpose(), Equivalence::colour_blind));
    }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
    auto gs = generate_cubic_bipartite(20);
    std::set<std::string> seen;
    for (const auto& g : gs) EXPECT_TRUE(seen.insert(canonical_form(g, Equivalence::colour_blind).bytes()).second);
}

TEST(Canonical, ColourReversingAutomorphism) {
    EXPECT_TRUE(has_colour_reversing_automorphism(figures::cube()));
    EXPECT_TRUE(reversing_automorphism_oracle(figures::cube().matrix()));
    EXPECT_TRUE(has_colour_reversing_automorphism(figures::moebius10()));
    EXPECT_TRUE(reversing_automorphism_oracle(figures::moebius10().matrix()));
    GenerateOptions opt;
    opt.prune = false;
    for (int order = 6; order <= 12; order += 2)
        for (const auto& g : generate_cubic_bipartite(order, opt))
            EXPECT_EQ(has_colour_reversing_automorphism(g), reversing_automorphism_oracle(g.matrix()));
}

TEST(Catalogue, SmallOrders) {
    struct Row {
        int order, k;
        std::size_t l, lp;
    };
    for (auto r : std::vector<Row>{{8, -1, 1, 1}, {10, 1, 1, 1}, {14, -1, 1, 1}, {16, 1, 2, 2}, {20, -1, 2, 2}, {22, 1, 4, 4}}) {
        auto c = catalogue_by_search(r.order, r.k);
        EXPECT_EQ(c.l_count(), r.l) << r.order;
        EXPECT_EQ(c.lp_count(), r.lp) << r.order;
        EXPECT_EQ(c.params, cubic_type(r.order / 2, r.k));
    }
    EXPECT_EQ(catalogue_by_search(12, 1).l_count(), 0u);
    EXPECT_EQ(catalogue_by_search(18, -1).l_count(), 0u);
}

TEST(Catalogue, ChiralClassesCountTwice) {
    for (auto [order, k] : std::vector<std::pair<int, int>>{{16, 1}, {20, -1}, {22, 1}}) {
        auto c = catalogue_by_search(order, k);
        std::size_t chiral = 0;
        for (const auto& a : c.blind) chiral += !has_colour_reversing_automorphism(BipartiteGraph(a));
        EXPECT_EQ(c.lp_count(), c.l_count() + chiral);
        EXPECT_GE(c.lp_count(), c.l_count());
        EXPECT_LE(c.lp_count(), 2 * c.l_count());
        for (const auto& a : c.blind) EXPECT_EQ(canonical_form(a, Equivalence::colour_blind).matrix(), a);
    }
}

TEST(Closure, PositiveFromMoebius) {
    auto res = closure_generate({figures::moebius10()}, 22, 1);
    EXPECT_EQ(res.at(5).lp_count(), 1u);
    EXPECT_EQ(res.at(8).lp_count(), 2u);
    EXPECT_EQ(res.at(11).lp_count(), 4u);
    EXPECT_EQ(res.at(11).preserving, catalogue_by_search(22, 1).preserving);
}

TEST(Closure, NegativeFromCube) {
    auto res = closure_generate({figures::cube()}, 20, -1);
    EXPECT_EQ(res.at(7).l_count(), 1u);
    EXPECT_EQ(res.at(10).l_count(), 2u);
    EXPECT_EQ(res.at(10).blind, catalogue_by_search(20, -1).blind);
}

TEST(Closure, ExhaustiveInsertionAgrees) {
    ClosureOptions opt;
    opt.insert = InsertMode::exhaustive;
    auto a = closure_generate({figures::moebius10()}, 22, 1, opt);
    auto b = closure_generate({figures::moebius10()}, 22, 1);
    EXPECT_EQ(a.at(11).preserving, b.at(11).preserving);
    EXPECT_THROW(closure_generate({figures::cube()}, 20, 1), std::invalid_argument);
}
