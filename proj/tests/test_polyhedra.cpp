#include "lehman/figures.hpp"
#include "lehman/polyhedra.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace lehman;

namespace {

// Vertices by solving every n-subset of the inequalities as equalities.
std::vector<RationalVector> tight_set_oracle(const HPolyhedron& h) {
    int n = h.dimension, m = int(h.inequalities.size());
    std::set<RationalVector> found;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (int(pick.size()) == n) {
            RationalMatrix a(n, n);
            RationalVector b(n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) a(i, j) = h.inequalities[pick[i]].coeffs[j];
                b[i] = h.inequalities[pick[i]].bound;
            }
            auto x = solve(a, b);
            if (!x) return;
            for (const auto& q : h.inequalities) {
                Rational lhs;
                for (int j = 0; j < n; ++j) lhs += q.coeffs[j] * (*x)[j];
                if (lhs < q.bound) return;
            }
            found.insert(*x);
            return;
        }
        for (int i = from; i < m; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return {found.begin(), found.end()};
}

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

Clutter triangle() { return Clutter::on_range(3, {0b011, 0b110, 0b101}); }

BinaryMatrix random_clutter_matrix(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> rows(2, 6);
    std::uniform_int_distribution<Mask> sets(1, bit(n) - 1);
    std::vector<Mask> e;
    int m = rows(rng);
    for (int i = 0; i < m; ++i) e.push_back(sets(rng));
    auto c = Clutter::minimal_of(bit(n) - 1, e);
    return c.matrix();
}

}  // namespace

TEST(Covering, Shape) {
    auto h = covering_polyhedron(BinaryMatrix::identity(2));
    ASSERT_EQ(h.inequalities.size(), 4u);
    EXPECT_EQ(h.inequalities[0].coeffs, vec({1, 0}));
    EXPECT_EQ(h.inequalities[0].bound, Rational(1));
    EXPECT_EQ(h.inequalities[3].bound, Rational(0));
    auto f = covering_polyhedron(figures::fano_a());
    EXPECT_EQ(f.inequalities.size(), 14u);
    EXPECT_EQ(f.dimension, 7);
    EXPECT_THROW(covering_polyhedron(BinaryMatrix::from_strings({"110", "100"})), std::invalid_argument);
}

TEST(Vertices, Identity) {
    auto v = enumerate_vertices(covering_polyhedron(BinaryMatrix::identity(2)));
    EXPECT_EQ(v.vertices, (std::vector<RationalVector>{vec({1, 1})}));
    EXPECT_EQ(v.rays, (std::vector<RationalVector>{vec({0, 1}), vec({1, 0})}));
    EXPECT_TRUE(fractional_vertices(v).empty());
    EXPECT_THROW(enumerate_vertices(HPolyhedron{0, {}}), std::invalid_argument);
}

TEST(Vertices, Triangle) {
    auto v = enumerate_vertices(covering_polyhedron(triangle().matrix()));
    Rational h(1, 2);
    std::vector<RationalVector> want{vec({0, 1, 1}), vec({h, h, h}), vec({1, 0, 1}), vec({1, 1, 0})};
    EXPECT_EQ(v.vertices, want);
    EXPECT_EQ(v.rays.size(), 3u);
    EXPECT_EQ(fractional_vertices(v), (std::vector<RationalVector>{vec({h, h, h})}));
}

TEST(Vertices, Fano) {
    auto f = fractional_vertices_of(figures::fano_a());
    EXPECT_EQ(f, (std::vector<RationalVector>{RationalVector(7, Rational(1, 3))}));
}

TEST(Vertices, AgreeWithTightSetOracle) {
    std::mt19937 rng(21);
    int compared = 0;
    for (int t = 0; t < 60; ++t) {
        int n = 2 + t % 6;
        auto h = covering_polyhedron(random_clutter_matrix(rng, n));
        auto v = enumerate_vertices(h);
        EXPECT_EQ(v.vertices, tight_set_oracle(h));
        for (const auto& r : v.rays) {
            int nonzero = 0;
            for (const auto& c : r) nonzero += !c.is_zero();
            EXPECT_EQ(nonzero, 1);
        }
        EXPECT_EQ(int(v.rays.size()), n);
        ++compared;
    }
    for (auto a : {figures::fano_a(), figures::moebius10().matrix(), figures::cube().matrix()}) {
        auto h = covering_polyhedron(a);
        EXPECT_EQ(enumerate_vertices(h).vertices, tight_set_oracle(h));
    }
    EXPECT_EQ(compared, 60);
}

TEST(Ideal, Examples) {
    EXPECT_TRUE(is_ideal(Clutter::from_matrix(BinaryMatrix::identity(4))));
    EXPECT_FALSE(is_ideal(triangle()));
    EXPECT_FALSE(is_ideal(build_J(2)));
    EXPECT_FALSE(is_ideal(build_plane(2).lines));
}

TEST(Ideal, ClosedUnderMinors) {
    std::mt19937 rng(8);
    int ideal = 0;
    for (int t = 0; t < 80; ++t) {
        auto c = Clutter::from_matrix(random_clutter_matrix(rng, 5));
        if (!is_ideal(c)) continue;
        ++ideal;
        for (int v : members(c.ground())) {
            EXPECT_TRUE(is_ideal(delete_vertex(c, v)));
            EXPECT_TRUE(is_ideal(contract_vertex(c, v)));
        }
    }
    EXPECT_GT(ideal, 10);
}

TEST(Mni, ExactExamples) {
    EXPECT_TRUE(is_mni_exact(build_J(2)));
    EXPECT_TRUE(is_mni_exact(build_J(3)));
    EXPECT_TRUE(is_mni_exact(build_plane(2).lines));
    EXPECT_TRUE(is_mni_exact(triangle()));
    EXPECT_FALSE(is_mni_exact(Clutter::from_matrix(BinaryMatrix::identity(3))));
    EXPECT_THROW(is_mni_exact(build_plane(3).lines, 12), std::invalid_argument);
}

TEST(Mni, SquareTestAgreesWithExact) {
    std::vector<BinaryMatrix> cases{figures::fano_a(), build_J(2).matrix(), build_J(3).matrix(),
                                    figures::moebius10().matrix()};
    for (const auto& a : cases) EXPECT_EQ(mni_test_square(a), is_mni_exact(Clutter::from_matrix(a)));
    EXPECT_TRUE(mni_test_square(figures::moebius10().matrix()));
    EXPECT_THROW(mni_test_square(BinaryMatrix::from_strings({"110", "011", "111"})), std::invalid_argument);
    EXPECT_THROW(mni_test_square(BinaryMatrix(2, 3)), std::invalid_argument);
}

TEST(Mni, CubeIsNotMni) {
    // the cube's complement-of-matching matrix is negative Lehman; it has fractional vertices other than 1/3
    EXPECT_EQ(mni_test_square(figures::cube().matrix()), is_mni_exact(Clutter::from_matrix(figures::cube().matrix())));
}
