#include "lehman/canonical.hpp"
#include "lehman/catalogue.hpp"
#include "lehman/constructions.hpp"
#include "lehman/figures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lehman;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ConstructionError& e) {
        return e.what();
    }
    return "";
}

BipartiteGraph negative7() { return BipartiteGraph(catalogue_by_search(14, -1).blind.at(0)); }

std::vector<BipartiteGraph> graphs_of(const Catalogue& c) {
    std::vector<BipartiteGraph> out;
    for (const auto& a : c.preserving) out.emplace_back(a);
    return out;
}

bool same_class(const BipartiteGraph& x, const BipartiteGraph& y) {
    return isomorphic(x, y, Equivalence::colour_preserving);
}

}  // namespace

TEST(Ladder, FindSegments) {
    EXPECT_FALSE(find_3rung_ladders(figures::cube()).empty());
    EXPECT_TRUE(find_3rung_ladders(figures::ladderfree28()).empty());
    EXPECT_FALSE(find_3rung_ladders(figures::missing34()).empty());
    EXPECT_FALSE(has_4rung_ladder(figures::missing34()));
    BipartiteGraph c6(BinaryMatrix::from_strings({"110", "011", "101"}));
    EXPECT_THROW(find_3rung_ladders(c6), ConstructionError);
}

TEST(Ladder, SegmentsAreInducedCubeMinusEdge) {
    for (auto g : {figures::cube(), figures::moebius10(), figures::missing34(), figures::rungs28()}) {
        auto segs = find_3rung_ladders(g);
        for (std::size_t i = 1; i < segs.size(); ++i) EXPECT_LT(segs[i - 1].key(), segs[i].key());
        for (const auto& s : segs) {
            int bs[3] = {s.b0, s.b1, s.b2}, ws[3] = {s.w0, s.w1, s.w2};
            // internal edges are exactly the pairs with |i - j| <= 1
            bool want[3][3] = {{true, true, false}, {true, true, true}, {false, true, true}};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) EXPECT_EQ(g.has_edge(bs[i], ws[j]), want[i][j]);
            EXPECT_TRUE(g.has_edge(s.b_L, s.w0));
            EXPECT_TRUE(g.has_edge(s.b_R, s.w2));
            EXPECT_TRUE(g.has_edge(s.b0, s.w_L));
            EXPECT_TRUE(g.has_edge(s.b2, s.w_R));
        }
    }
}

TEST(Ladder, ReductionErrors) {
    for (const auto& s : find_3rung_ladders(figures::cube()))
        EXPECT_NE(error_of([&] { ladder_reduce(figures::cube(), s); }).find("attachments coincide"), std::string::npos);
    auto m = figures::moebius10();
    ASSERT_FALSE(find_3rung_ladders(m).empty());
    for (const auto& s : find_3rung_ladders(m))
        EXPECT_NE(error_of([&] { ladder_reduce(m, s); }).find("b_L adjacent to w_R"), std::string::npos);
}

TEST(Ladder, EightToFive) {
    auto c = catalogue_by_search(16, 1);
    ASSERT_EQ(c.lp_count(), 2u);
    for (const auto& g : graphs_of(c)) {
        int reduced = 0;
        for (const auto& s : find_3rung_ladders(g)) {
            if (!error_of([&] { ladder_reduce(g, s); }).empty()) continue;
            auto h = ladder_reduce(g, s);
            EXPECT_TRUE(same_class(h, figures::moebius10()));
            ++reduced;
        }
        EXPECT_GT(reduced, 0);
    }
}

TEST(Ladder, ReductionTypeAndMateTransport) {
    int checked = 0;
    for (auto [order, k] : std::vector<std::pair<int, int>>{{16, 1}, {22, 1}, {14, -1}, {20, -1}})
        for (const auto& g : graphs_of(catalogue_by_search(order, k))) {
            auto old = certify(g, k);
            ASSERT_TRUE(old.has_value());
            for (const auto& s : find_3rung_ladders(g)) {
                if (!error_of([&] { ladder_reduce(g, s); }).empty()) continue;
                auto r = ladder_reduce_mapped(g, s);
                auto c = certify(r.graph, k);
                ASSERT_TRUE(c.has_value());
                EXPECT_EQ(c->type, (LehmanType{g.n() - 3, 3, old->type.s - 1, k}));
                Mask gone = bit(s.w0) | bit(s.w1) | bit(s.w2);
                for (int b = 0; b < g.n(); ++b) {
                    if (r.black_map[b] < 0) continue;
                    Mask expect = 0;
                    for (int w : members(old->mates[b] & ~gone)) expect |= bit(r.white_map[w]);
                    EXPECT_EQ(c->mates[r.black_map[b]], expect);
                }
                ++checked;
            }
        }
    EXPECT_GT(checked, 10);
}

TEST(Insert, MoebiusRungPairsQualify) {
    auto g = figures::moebius10();
    auto pairs = expandable_pairs(g, 1);
    auto rungs = rungs_of(g);
    int rung_pairs = 0;
    for (const auto& p : all_nonincident_pairs(g)) {
        int b_R = p.e.black, w_L = p.e.white, b_L = p.f.black, w_R = p.f.white;
        if (rungs[b_L] != w_L && rungs[b_R] != w_R) continue;
        ++rung_pairs;
        EXPECT_NE(std::find(pairs.begin(), pairs.end(), p), pairs.end());
    }
    EXPECT_GT(rung_pairs, 0);
    auto eights = catalogue_by_search(16, 1);
    for (const auto& p : pairs) {
        auto h = ladder_insert(g, p, 1);
        auto c = certify(h, 1);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(c->type, (LehmanType{8, 3, 3, 1}));
        auto key = canonical_matrix(h.matrix()).matrix();
        EXPECT_NE(std::find(eights.preserving.begin(), eights.preserving.end(), key), eights.preserving.end());
    }
}

TEST(Insert, CubeToSeven) {
    auto g = figures::cube();
    auto pairs = expandable_pairs(g, -1);
    ASSERT_FALSE(pairs.empty());
    auto seven = negative7();
    for (const auto& p : pairs) {
        auto h = ladder_insert(g, p, -1);
        auto c = certify(h, -1);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(c->type, (LehmanType{7, 3, 2, -1}));
        EXPECT_TRUE(isomorphic(h, seven, Equivalence::colour_blind));
    }
}

TEST(Insert, PredictedPartnerAndRoundTrip) {
    int checked = 0;
    for (auto [order, k] : std::vector<std::pair<int, int>>{{10, 1}, {16, 1}, {22, 1}, {8, -1}, {14, -1}, {20, -1}})
        for (const auto& g : graphs_of(catalogue_by_search(order, k))) {
            auto c = certify(g, k);
            for (const auto& p : expandable_pairs(g, k)) {
                auto h = ladder_insert(g, p, k);
                auto hc = certify(h, k);
                ASSERT_TRUE(hc.has_value());
                EXPECT_EQ(hc->type, (LehmanType{g.n() + 3, 3, c->type.s + 1, k}));
                EXPECT_EQ(predicted_insert_partner(*c, p), hc->partner);
                EXPECT_EQ(ladder_reduce(h, inserted_segment(g.n(), p)), g);
                ++checked;
            }
        }
    EXPECT_GT(checked, 100);
}

TEST(Insert, Rejections) {
    auto g = figures::moebius10();
    auto good = expandable_pairs(g, 1);
    bool rejected = false;
    for (const auto& p : all_nonincident_pairs(g)) {
        if (std::find(good.begin(), good.end(), p) != good.end()) continue;
        EXPECT_NE(error_of([&] { ladder_insert(g, p, 1); }).find("pair not expandable"), std::string::npos);
        rejected = true;
    }
    EXPECT_TRUE(rejected);
    EXPECT_THROW(expandable_pairs(figures::heawood(), 2), ConstructionError);
    EXPECT_THROW(expandable_pairs(figures::cube(), 1), ConstructionError);
}

TEST(Biclique, LadderFreeCompressesToSeven) {
    auto g = figures::ladderfree28();
    auto parts = find_biclique_partitions(g);
    ASSERT_FALSE(parts.empty());
    auto seven = negative7();
    for (const auto& p : parts) {
        auto h = biclique_compress(g, p);
        auto c = certify(h, -1);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(c->type, (LehmanType{7, 3, 2, -1}));
        EXPECT_TRUE(isomorphic(h, seven, Equivalence::colour_blind));
        std::vector<int> diag(h.n());
        for (int i = 0; i < h.n(); ++i) diag[i] = i;
        EXPECT_TRUE(same_class(biclique_expand(h, diag, -1), g));
    }
}

TEST(Biclique, CubeIsTheException) {
    auto g = figures::cube();
    auto parts = find_biclique_partitions(g);
    ASSERT_FALSE(parts.empty());
    for (const auto& p : parts)
        EXPECT_NE(error_of([&] { biclique_compress(g, p); }).find("K_{r+1,r+1}"), std::string::npos);
}

TEST(Biclique, ComplementOfMatching) {
    for (int r = 3; r <= 5; ++r) {
        auto g = complement_of_matching(r);
        EXPECT_EQ(certify(g, -1)->type, (LehmanType{r + 1, r, 1, -1}));
        auto e = biclique_expand(g, shifted_matching(r + 1), -1);
        auto c = certify(e, 1);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(c->type, (LehmanType{r * r - 1, r, r, 1}));
        auto parts = find_biclique_partitions(e);
        ASSERT_FALSE(parts.empty());
        bool recovered = false;
        for (const auto& p : parts) {
            std::string err = error_of([&] { biclique_compress(e, p); });
            if (err.empty()) recovered |= same_class(biclique_compress(e, p), g);
        }
        EXPECT_TRUE(recovered);
    }
}

TEST(Biclique, ExpandCubeAndSeven) {
    auto cube = figures::cube();
    auto eights = catalogue_by_search(16, 1);
    for (const auto& m : perfect_matchings(cube)) {
        auto e = biclique_expand(cube, m, -1);
        ASSERT_EQ(certify(e, 1)->type, (LehmanType{8, 3, 3, 1}));
        auto key = canonical_matrix(e.matrix()).matrix();
        EXPECT_NE(std::find(eights.preserving.begin(), eights.preserving.end(), key), eights.preserving.end());
    }
    auto seven = negative7();
    for (const auto& m : perfect_matchings(seven)) {
        auto e = biclique_expand(seven, m, -1);
        auto c = certify(e, 1);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(c->type, (LehmanType{14, 3, 5, 1}));
    }
}

TEST(Biclique, PositiveExpansionNeedsRungs) {
    auto g = figures::moebius10();
    auto rungs = rungs_of(g);
    auto e = biclique_expand(g, rungs, 1);
    auto c = certify(e, -1);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->type, (LehmanType{10, 3, 3, -1}));
    int rejected = 0;
    for (const auto& m : perfect_matchings(g)) {
        if (m == rungs) continue;
        EXPECT_THROW(biclique_expand(g, m, 1), ConstructionError);
        ++rejected;
    }
    EXPECT_GT(rejected, 0);
}

TEST(Biclique, LadderFreeFromSevenExpansion) {
    // the (7,3,2) negative graph expanded along a matching gives the ladder-free (14,3,5) graph
    auto seven = negative7();
    bool found = false;
    for (const auto& m : perfect_matchings(seven)) {
        auto e = biclique_expand(seven, m, -1);
        if (!has_3rung_ladder(e)) {
            found = true;
            EXPECT_TRUE(isomorphic(e, figures::ladderfree28(), Equivalence::colour_blind));
        }
    }
    EXPECT_TRUE(found);
}

TEST(Biclique, OrderInsensitive) {
    std::mt19937 rng(12);
    for (auto g : {figures::cube(), negative7(), complement_of_matching(4)}) {
        auto ms = perfect_matchings(g);
        auto m = ms[rng() % ms.size()];
        auto base = biclique_expand(g, m, -1);
        std::vector<int> mate_of_white(g.n());
        for (int b = 0; b < g.n(); ++b) mate_of_white[m[b]] = b;
        for (int t = 0; t < 10; ++t) {
            ExpansionOrder o;
            for (int b = 0; b < g.n(); ++b) {
                o.black.push_back(members(g.black_nbrs(b) & ~bit(m[b])));
                std::shuffle(o.black.back().begin(), o.black.back().end(), rng);
            }
            for (int w = 0; w < g.n(); ++w) {
                o.white.push_back(members(g.white_nbrs(w) & ~bit(mate_of_white[w])));
                std::shuffle(o.white.back().begin(), o.white.back().end(), rng);
            }
            EXPECT_TRUE(same_class(biclique_expand(g, m, -1, &o), base));
        }
    }
}

TEST(Biclique, HeawoodHasNoPartition) {
    EXPECT_TRUE(find_biclique_partitions(figures::heawood()).empty());
    // five blacks cannot be split into pairs
    EXPECT_TRUE(find_biclique_partitions(figures::moebius10()).empty());
}

TEST(Biclique, CompressFlipsSign) {
    int checked = 0;
    for (auto [order, k] : std::vector<std::pair<int, int>>{{16, 1}, {22, 1}, {20, -1}})
        for (const auto& g : graphs_of(catalogue_by_search(order, k)))
            for (const auto& p : find_biclique_partitions(g)) {
                std::string err = error_of([&] { biclique_compress(g, p); });
                if (!err.empty()) continue;
                auto h = biclique_compress(g, p);
                ASSERT_TRUE(certify(h, -k).has_value());
                std::vector<int> diag(h.n());
                for (int i = 0; i < h.n(); ++i) diag[i] = i;
                EXPECT_TRUE(same_class(biclique_expand(h, diag, -k), g));
                ++checked;
            }
    EXPECT_GT(checked, 0);
}
