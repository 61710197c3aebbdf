#pragma once

#include "lehman/canonical.hpp"
#include "lehman/clutters.hpp"
#include "lehman/exactmat.hpp"
#include "lehman/graph.hpp"
#include "lehman/lehman.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lehman {

struct Inequality {
    RationalVector coeffs;  // coeffs . x >= bound
    Rational bound;
};

struct HPolyhedron {
    int dimension = 0;
    std::vector<Inequality> inequalities;
};

struct VRep {
    std::vector<RationalVector> vertices;
    std::vector<RationalVector> rays;
};

// Q(A) = {x : A x >= 1, x >= 0}.
inline HPolyhedron covering_polyhedron(const BinaryMatrix& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j)
            if (i != j && (a.row(i) & a.row(j)) == a.row(i))
                throw std::invalid_argument("covering_polyhedron: not a clutter matrix (nested rows)");
    int n = a.cols();
    HPolyhedron h{n, {}};
    for (int i = 0; i < a.rows(); ++i) {
        RationalVector c(n);
        for (int j = 0; j < n; ++j) c[j] = Rational(a.get(i, j) ? 1 : 0);
        h.inequalities.push_back({c, Rational(1)});
    }
    for (int j = 0; j < n; ++j) {
        RationalVector c(n);
        c[j] = Rational(1);
        h.inequalities.push_back({c, Rational(0)});
    }
    return h;
}

namespace detail {

constexpr int kMaxConstraints = 512;
using ZeroSet = std::bitset<kMaxConstraints>;

struct DDRay {
    std::vector<mpz_class> v;
    ZeroSet zero;
};

inline void normalize(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Integer row g with g . (x, t) >= 0 equivalent to coeffs . x >= bound.
inline std::vector<mpz_class> homogenize(const Inequality& q) {
    int n = int(q.coeffs.size());
    mpz_class l = q.bound.den();
    for (const auto& c : q.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> g(n + 1);
    for (int j = 0; j < n; ++j) g[j] = q.coeffs[j].num() * (l / q.coeffs[j].den());
    g[n] = -(q.bound.num() * (l / q.bound.den()));
    return g;
}

inline int unit_index(const Inequality& q) {
    if (q.bound != 0) return -1;
    int idx = -1;
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
        if (q.coeffs[j] == 0) continue;
        if (idx >= 0 || q.coeffs[j] <= 0) return -1;
        idx = int(j);
    }
    return idx;
}

}  // namespace detail

// Double description on the cone {(x, t) : g . (x, t) >= 0, t >= 0}, started
// from the nonnegative orthant. Requires every x_j >= 0 among the rows.
inline VRep enumerate_vertices(const HPolyhedron& h) {
    int n = h.dimension;
    if (n <= 0) throw std::invalid_argument("enumerate_vertices: dimension must be positive");
    int m = int(h.inequalities.size());
    if (m + 1 > detail::kMaxConstraints) throw std::invalid_argument("enumerate_vertices: too many inequalities");
    for (const auto& q : h.inequalities)
        if (int(q.coeffs.size()) != n) throw std::invalid_argument("enumerate_vertices: coefficient length mismatch");
    int d = n + 1;
    std::vector<int> orthant(n, -1);
    for (int i = 0; i < m; ++i) {
        int j = detail::unit_index(h.inequalities[i]);
        if (j >= 0 && orthant[j] < 0) orthant[j] = i;
    }
    for (int j = 0; j < n; ++j)
        if (orthant[j] < 0) throw std::invalid_argument("enumerate_vertices: x >= 0 bounds are required");
    int t_row = m;  // t >= 0

    std::vector<detail::DDRay> rays;
    detail::ZeroSet processed;
    for (int j = 0; j < n; ++j) processed.set(orthant[j]);
    processed.set(t_row);
    for (int j = 0; j <= n; ++j) {
        detail::DDRay r{std::vector<mpz_class>(d, 0), {}};
        r.v[j] = 1;
        for (int i = 0; i < n; ++i)
            if (i != j) r.zero.set(orthant[i]);
        if (j != n) r.zero.set(t_row);
        rays.push_back(std::move(r));
    }

    for (int i = 0; i < m; ++i) {
        if (processed.test(i)) continue;
        auto g = detail::homogenize(h.inequalities[i]);
        std::vector<mpz_class> s(rays.size());
        std::vector<int> pos, neg;
        std::vector<detail::DDRay> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            mpz_class acc = 0;
            for (int j = 0; j < d; ++j) acc += g[j] * rays[r].v[j];
            s[r] = acc;
            if (acc > 0) pos.push_back(int(r));
            else if (acc < 0) neg.push_back(int(r));
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (s[r] < 0) continue;
            auto ray = rays[r];
            if (s[r] == 0) ray.zero.set(i);
            next.push_back(std::move(ray));
        }
        for (int p : pos)
            for (int q : neg) {
                auto common = rays[p].zero & rays[q].zero;
                if (int(common.count()) < d - 2) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (int(r) != p && int(r) != q && (rays[r].zero & common) == common) adjacent = false;
                if (!adjacent) continue;
                detail::DDRay nr{std::vector<mpz_class>(d), common};
                for (int j = 0; j < d; ++j) nr.v[j] = s[p] * rays[q].v[j] - s[q] * rays[p].v[j];
                detail::normalize(nr.v);
                nr.zero.set(i);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
        processed.set(i);
    }

    VRep out;
    for (const auto& r : rays) {
        RationalVector x(n);
        if (r.v[n] != 0) {
            for (int j = 0; j < n; ++j) x[j] = Rational(r.v[j], r.v[n]);
            out.vertices.push_back(std::move(x));
        } else {
            for (int j = 0; j < n; ++j) x[j] = Rational(r.v[j]);
            out.rays.push_back(std::move(x));
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

inline bool is_integral(const RationalVector& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.den() == 1; });
}

inline std::vector<RationalVector> fractional_vertices(const VRep& v) {
    std::vector<RationalVector> out;
    for (const auto& x : v.vertices)
        if (!is_integral(x)) out.push_back(x);
    return out;
}

inline std::vector<RationalVector> fractional_vertices_of(const BinaryMatrix& a) {
    return fractional_vertices(enumerate_vertices(covering_polyhedron(a)));
}

namespace detail {

inline bool is_j_matrix(const BinaryMatrix& a) {
    if (!a.square() || a.rows() < 3) return false;
    auto c = Clutter::from_matrix(a);
    return c.edges().size() == std::size_t(a.rows()) && is_degenerate_plane(c).has_value();
}

}  // namespace detail

// Square-matrix mni criterion: Q(A) has exactly one fractional vertex, which for
// a Lehman matrix must be (1/r) 1. Accepts certified Lehman matrices and J_t.
inline bool mni_test_square(const BinaryMatrix& a) {
    if (!a.square()) throw std::invalid_argument("mni_test_square: matrix is not square");
    if (detail::is_j_matrix(a)) return fractional_vertices_of(a).size() == 1;
    auto types = lehman_types(a);
    if (types.empty()) throw std::invalid_argument("mni_test_square: matrix is not a certified Lehman matrix");
    int r = types.front().r;
    auto f = fractional_vertices_of(a);
    return f.size() == 1 && f.front() == RationalVector(a.cols(), Rational(1, r));
}

// Q is empty when the clutter has the empty edge.
inline bool is_ideal(const Clutter& c) {
    if (c.ground_size() == 0) return true;
    if (c.contains(0)) return true;
    if (c.edges().empty()) return true;
    return fractional_vertices_of(c.matrix()).empty();
}

inline bool is_mni_exact(const Clutter& c, int cap = 16) {
    if (c.ground_size() > cap) throw std::invalid_argument("is_mni_exact: instance too large");
    if (is_ideal(c)) return false;
    for (int v : members(c.ground()))
        if (!is_ideal(delete_vertex(c, v)) || !is_ideal(contract_vertex(c, v))) return false;
    return true;
}

}  // namespace lehman
