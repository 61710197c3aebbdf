#pragma once

#include "lehman/exactmat.hpp"
#include "lehman/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lehman {

struct LehmanType {
    int n = 0, r = 0, s = 0, k = 0;
    friend bool operator==(const LehmanType&, const LehmanType&) = default;
    std::string to_string() const {
        return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(s) + ") k=" + std::to_string(k);
    }
};

struct LehmanCertificate {
    BinaryMatrix partner;
    LehmanType type;
    std::vector<Mask> mates;    // per black vertex: whites
    std::vector<Mask> comates;  // per white vertex: blacks
};

struct AuxiliaryDecomposition {
    std::vector<Edge> aux_edges;
    std::optional<std::vector<Edge>> rungs;
};

inline bool valid_k(int k) { return k == -1 || k >= 1; }

// M N^T as a matrix of intersection sizes.
inline std::vector<std::vector<int>> row_products(const BinaryMatrix& m, const BinaryMatrix& n) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(n.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n.rows(); ++j) out[i][j] = popcount(m.row(i) & n.row(j));
    return out;
}

inline bool equals_j_plus_ki(const std::vector<std::vector<int>>& p, int k) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != (i == j ? 1 + k : 1)) return false;
    return true;
}

inline std::optional<int> is_lehman_pair(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw std::invalid_argument("is_lehman_pair: inputs must be square of equal order");
    int n = a.rows();
    if (n == 0) return std::nullopt;
    auto p = row_products(a, b);
    int k = p[0][0] - 1;
    if (!valid_k(k) || !equals_j_plus_ki(p, k)) return std::nullopt;
    return k;
}

inline std::optional<int> is_lehman_pair(const RationalMatrix& a, const RationalMatrix& b) {
    if (!a.is_binary() || !b.is_binary()) throw std::invalid_argument("is_lehman_pair: non-0/1 input");
    return is_lehman_pair(BinaryMatrix::from_rational(a), BinaryMatrix::from_rational(b));
}

namespace detail {

// Rows of B from A^{-1}: row b is A^{-1}(1 + k e_b). Absent at the first non-0/1 row.
inline std::optional<BinaryMatrix> partner_from_inverse(const RationalMatrix& inv, int k) {
    int n = inv.rows();
    std::vector<Rational> u(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u[i] += inv(i, j);
    BinaryMatrix b(n, n);
    Rational kk(k);
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < n; ++i) {
            Rational x = u[i] + kk * inv(i, c);
            if (x == 1) b.set(c, i);
            else if (x != 0) return std::nullopt;
        }
    return b;
}

}  // namespace detail

inline std::optional<BinaryMatrix> partner(const BinaryMatrix& a, int k) {
    if (!a.square()) throw std::invalid_argument("partner: non-square input");
    if (!valid_k(k) || a.rows() == 0) return std::nullopt;
    auto inv = inverse(a.to_rational());
    if (!inv) return std::nullopt;
    return detail::partner_from_inverse(*inv, k);
}

inline std::vector<LehmanType> lehman_types(const BinaryMatrix& a, std::string* diagnostic = nullptr) {
    if (!a.square()) throw std::invalid_argument("lehman_types: non-square input");
    auto r = a.regular_degree();
    if (!r) {
        if (diagnostic) *diagnostic = "matrix is not regular";
        return {};
    }
    auto inv = inverse(a.to_rational());
    if (!inv) {
        if (diagnostic) *diagnostic = "matrix is singular";
        return {};
    }
    std::vector<LehmanType> out;
    int n = a.rows();
    for (int s = 1; s <= n; ++s) {
        int k = *r * s - n;
        if (!valid_k(k)) continue;
        auto b = detail::partner_from_inverse(*inv, k);
        if (!b || !is_lehman_pair(a, *b)) continue;
        out.push_back({n, *r, b->row_sum(0), k});
    }
    return out;
}

enum class MateStatus { found, singular, non_binary };

struct MateResult {
    MateStatus status;
    Mask whites = 0;
};

inline MateResult mate_diagnose(const BipartiteGraph& g, int b, int k) {
    int n = g.n();
    if (b < 0 || b >= n) throw std::out_of_range("mate: black vertex out of range");
    RationalVector rhs(n, Rational(1));
    rhs[b] = Rational(1 + k);
    auto x = solve(g.matrix().to_rational(), rhs);
    if (!x) return {MateStatus::singular, 0};
    Mask m = 0;
    for (int w = 0; w < n; ++w) {
        if ((*x)[w] == 1) m |= bit(w);
        else if ((*x)[w] != 0) return {MateStatus::non_binary, 0};
    }
    // combinatorial re-check
    for (int i = 0; i < n; ++i)
        if (popcount(g.black_nbrs(i) & m) != (i == b ? 1 + k : 1)) return {MateStatus::non_binary, 0};
    return {MateStatus::found, m};
}

inline std::optional<Mask> mate(const BipartiteGraph& g, int b, int k) {
    auto r = mate_diagnose(g, b, k);
    if (r.status != MateStatus::found) return std::nullopt;
    return r.whites;
}

// All three product identities, regularity and rs = n + k.
inline std::optional<LehmanType> check_pair(const BinaryMatrix& a, const BinaryMatrix& b, int k) {
    int n = a.rows();
    if (!valid_k(k) || n == 0) return std::nullopt;
    if (!equals_j_plus_ki(row_products(a, b), k)) return std::nullopt;
    auto at = a.transpose(), bt = b.transpose();
    if (!equals_j_plus_ki(row_products(bt, at), k)) return std::nullopt;  // B^T A
    if (!equals_j_plus_ki(row_products(at, bt), k)) return std::nullopt;  // A^T B
    auto r = a.regular_degree();
    auto s = b.regular_degree();
    if (!r || !s || *r * *s != n + k) return std::nullopt;
    return LehmanType{n, *r, *s, k};
}

inline LehmanCertificate make_certificate(const BinaryMatrix& b, const LehmanType& t) {
    LehmanCertificate c{b, t, {}, {}};
    for (int i = 0; i < b.rows(); ++i) c.mates.push_back(b.row(i));
    for (int j = 0; j < b.cols(); ++j) c.comates.push_back(b.col(j));
    return c;
}

inline std::optional<LehmanCertificate> certify(const BinaryMatrix& a, int k) {
    if (!a.square() || !valid_k(k) || a.rows() == 0) return std::nullopt;
    auto inv = inverse(a.to_rational());
    if (!inv) return std::nullopt;
    auto b = detail::partner_from_inverse(*inv, k);  // stops at the first bad vertex
    if (!b) return std::nullopt;
    auto t = check_pair(a, *b, k);
    if (!t) return std::nullopt;
    return make_certificate(*b, *t);
}

inline std::optional<LehmanCertificate> certify(const BipartiteGraph& g, int k) { return certify(g.matrix(), k); }

inline AuxiliaryDecomposition auxiliary(const BinaryMatrix& a, const BinaryMatrix& b) {
    auto k = is_lehman_pair(a, b);
    if (!k) throw std::invalid_argument("auxiliary: not a Lehman pair");
    AuxiliaryDecomposition d;
    std::vector<Edge> rest;
    for (int i = 0; i < a.rows(); ++i)
        for (int j : members(a.row(i))) (b.get(i, j) ? d.aux_edges : rest).push_back({i, j});
    auto r = a.regular_degree();
    if (r && *r == 3 && *k == 1) d.rungs = rest;
    return d;
}

// Rung partner of each black vertex (cubic, k = 1).
inline std::vector<int> rung_matching(const BinaryMatrix& a, const BinaryMatrix& b) {
    auto d = auxiliary(a, b);
    if (!d.rungs) throw std::invalid_argument("rungs are defined only for cubic graphs with k = 1");
    std::vector<int> m(a.rows(), -1);
    for (auto e : *d.rungs) m[e.black] = e.white;
    return m;
}

// Modular screen: exact answer unless A is singular mod p.
enum class ScreenResult { lehman, not_lehman, inconclusive };

inline ScreenResult modular_screen(const BinaryMatrix& a, int k, BinaryMatrix* partner_out = nullptr) {
    constexpr std::uint64_t p = 2147483647ULL;
    int n = a.rows();
    if (!a.square() || !valid_k(k) || n == 0) return ScreenResult::not_lehman;
    int r = a.row_sum(0);
    if (r == 0 || (n + k) % r != 0) return ScreenResult::not_lehman;  // rs = n + k
    auto mulm = [](std::uint64_t x, std::uint64_t y) { return x * y % p; };
    auto powm = [&](std::uint64_t x, std::uint64_t e) {
        std::uint64_t r = 1;
        for (; e; e >>= 1, x = mulm(x, x))
            if (e & 1) r = mulm(r, x);
        return r;
    };
    // Gauss-Jordan on [A | J + kI] gives B^T directly.
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(2 * n));
    std::uint64_t kk = k < 0 ? p - std::uint64_t(-k) : std::uint64_t(k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[i][j] = a.get(i, j);
            m[i][n + j] = 1;
        }
        m[i][n + i] = (1 + kk) % p;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return ScreenResult::inconclusive;
        std::swap(m[piv], m[c]);
        std::uint64_t inv = powm(m[c][c], p - 2);
        for (int j = c; j < 2 * n; ++j) m[c][j] = mulm(m[c][j], inv);
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            std::uint64_t f = m[i][c];
            for (int j = c; j < 2 * n; ++j) m[i][j] = (m[i][j] + p - mulm(f, m[c][j])) % p;
        }
    }
    BinaryMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::uint64_t x = m[i][n + j];  // (B^T)_{ij}
            if (x == 1) b.set(j, i);
            else if (x != 0) return ScreenResult::not_lehman;
        }
    if (!check_pair(a, b, k)) return ScreenResult::not_lehman;
    if (partner_out) *partner_out = b;
    return ScreenResult::lehman;
}

}  // namespace lehman
