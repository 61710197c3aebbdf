#pragma once

#include "lehman/canonical.hpp"
#include "lehman/graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lehman {

namespace detail {

inline std::vector<Mask> minimal_sets(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> out;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask t : out)
            if ((t & s) == t) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Vertices are labels 0..63; deletion and contraction shrink the ground set
// without relabelling.
class Clutter {
public:
    Clutter() = default;
    Clutter(Mask ground, std::vector<Mask> edges) : ground_(ground), edges_(std::move(edges)) {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (Mask e : edges_)
            if (e & ~ground_) throw std::invalid_argument("clutter: edge outside the ground set");
        for (Mask a : edges_)
            for (Mask b : edges_)
                if (a != b && (a & b) == a) throw std::invalid_argument("clutter: an edge contains another edge");
    }
    static Clutter on_range(int n, std::vector<Mask> edges) { return Clutter(bit(n) - 1, std::move(edges)); }
    static Clutter minimal_of(Mask ground, std::vector<Mask> sets) {
        return Clutter(ground, detail::minimal_sets(std::move(sets)));
    }
    // Rows are edges, columns the ground set in increasing label order.
    static Clutter from_matrix(const BinaryMatrix& a) {
        std::vector<Mask> e;
        for (int i = 0; i < a.rows(); ++i) e.push_back(a.row(i));
        return Clutter(a.cols() >= 64 ? ~Mask(0) : bit(a.cols()) - 1, e);
    }

    Mask ground() const { return ground_; }
    int ground_size() const { return popcount(ground_); }
    const std::vector<Mask>& edges() const { return edges_; }
    bool contains(Mask e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    BinaryMatrix matrix() const {
        auto labels = members(ground_);
        BinaryMatrix a(int(edges_.size()), int(labels.size()));
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (std::size_t j = 0; j < labels.size(); ++j)
                if (edges_[i] >> labels[j] & 1) a.set(int(i), int(j));
        return a;
    }

    friend bool operator==(const Clutter&, const Clutter&) = default;

private:
    Mask ground_ = 0;
    std::vector<Mask> edges_;
};

inline void require_vertex(const Clutter& c, int v) {
    if (v < 0 || v >= 64 || !(c.ground() >> v & 1)) throw std::invalid_argument("clutter: vertex not in ground set");
}

inline Clutter delete_vertex(const Clutter& c, int v) {
    require_vertex(c, v);
    std::vector<Mask> e;
    for (Mask x : c.edges())
        if (!(x >> v & 1)) e.push_back(x);
    return Clutter(c.ground() & ~bit(v), e);
}

inline Clutter contract_vertex(const Clutter& c, int v) {
    require_vertex(c, v);
    std::vector<Mask> e;
    for (Mask x : c.edges()) e.push_back(x & ~bit(v));
    return Clutter::minimal_of(c.ground() & ~bit(v), e);
}

inline Clutter minor(Clutter c, Mask deletions, Mask contractions) {
    if (deletions & contractions) throw std::invalid_argument("minor: a vertex is both deleted and contracted");
    for (int v : members(deletions)) c = delete_vertex(c, v);
    for (int v : members(contractions)) c = contract_vertex(c, v);
    return c;
}

// Minimal transversals by branching on the smallest unhit edge.
inline Clutter blocker(const Clutter& c, int cap = 15) {
    if (c.ground_size() > cap) throw std::invalid_argument("blocker: ground set too large");
    std::vector<Mask> edges = c.edges();
    std::sort(edges.begin(), edges.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    std::set<Mask> found;
    std::function<void(Mask)> rec = [&](Mask t) {
        for (Mask s : found)
            if ((s & t) == s) return;
        const Mask* unhit = nullptr;
        for (const Mask& e : edges)
            if (!(e & t)) {
                unhit = &e;
                break;
            }
        if (!unhit) {
            // drop redundant vertices so only minimal sets survive
            for (int v : members(t)) {
                Mask u = t & ~bit(v);
                bool hits = true;
                for (Mask e : edges)
                    if (!(e & u)) {
                        hits = false;
                        break;
                    }
                if (hits) return;
            }
            found.insert(t);
            return;
        }
        for (int v : members(*unhit)) rec(t | bit(v));
    };
    rec(0);
    return Clutter::minimal_of(c.ground(), {found.begin(), found.end()});
}

// Rows of minimum weight, in input order.
inline BinaryMatrix core(const BinaryMatrix& a) {
    if (a.rows() == 0) return a;
    int w = a.cols() + 1;
    for (int i = 0; i < a.rows(); ++i) w = std::min(w, popcount(a.row(i)));
    std::vector<Mask> rows;
    for (int i = 0; i < a.rows(); ++i)
        if (popcount(a.row(i)) == w) rows.push_back(a.row(i));
    return BinaryMatrix(a.cols(), rows);
}

inline Clutter build_J(int t) {
    if (t < 2 || t > 62) throw std::invalid_argument("build_J: t must be in [2, 62]");
    std::vector<Mask> e{(bit(t + 1) - 1) & ~Mask(1)};
    for (int i = 1; i <= t; ++i) e.push_back(1 | bit(i));
    return Clutter::on_range(t + 1, e);
}

inline std::optional<int> is_degenerate_plane(const Clutter& c) {
    int size = c.ground_size();
    int t = size - 1;
    if (t < 2 || int(c.edges().size()) != t + 1) return std::nullopt;
    Mask big = 0, centre = c.ground();
    int pairs = 0;
    for (Mask e : c.edges()) {
        if (popcount(e) == 2) {
            centre &= e;
            ++pairs;
        } else {
            big = e;
        }
    }
    // J_2 is all pairs; any vertex serves as the centre
    if (t == 2 && pairs == 3) return 2;
    if (pairs != t || popcount(centre) != 1 || big != (c.ground() & ~centre)) return std::nullopt;
    return t;
}

// Isomorphism of clutters as incidence matrices up to row and column order.
inline bool clutter_isomorphic(const Clutter& x, const Clutter& y) {
    if (x.ground_size() != y.ground_size() || x.edges().size() != y.edges().size()) return false;
    if (x.edges().empty()) return true;
    return canonical_matrix(x.matrix()) == canonical_matrix(y.matrix());
}

// Text format: "<#vertices> <#edges>" then one edge per line as vertex indices.
inline Clutter parse_clutter(std::istream& in) {
    std::string line;
    auto next = [&](std::string& out) {
        while (std::getline(in, line)) {
            auto p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos || line[p] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string head;
    if (!next(head)) throw std::invalid_argument("clutter: missing header");
    std::istringstream hs(head);
    int nv = -1, ne = -1;
    if (!(hs >> nv >> ne) || nv < 0 || nv > 63 || ne < 0) throw std::invalid_argument("clutter: bad header");
    std::vector<Mask> edges;
    for (int i = 0; i < ne; ++i) {
        std::string row;
        if (!next(row)) throw std::invalid_argument("clutter: missing edge line");
        std::istringstream rs(row);
        Mask e = 0;
        std::string tok;
        while (rs >> tok) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("clutter: bad vertex token '" + tok + "'");
            }
            if (used != tok.size() || v < 0 || v >= nv) throw std::invalid_argument("clutter: vertex out of range");
            e |= bit(v);
        }
        edges.push_back(e);
    }
    return Clutter::on_range(nv, edges);
}

inline Clutter parse_clutter(const std::string& text) {
    std::istringstream in(text);
    return parse_clutter(in);
}

inline std::string to_clutter_text(const Clutter& c) {
    int nv = 64 - std::countl_zero(c.ground());
    std::ostringstream os;
    os << nv << " " << c.edges().size() << "\n";
    for (Mask e : c.edges()) {
        bool first = true;
        for (int v : members(e)) {
            os << (first ? "" : " ") << v;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

// ---- projective planes ----------------------------------------------------

struct ProjectivePlane {
    int q = 0;
    Clutter lines;  // points are 0..q^2+q
    int points() const { return q * q + q + 1; }
    int line_through(int a, int b) const {
        const auto& e = lines.edges();
        for (std::size_t i = 0; i < e.size(); ++i)
            if ((e[i] >> a & 1) && (e[i] >> b & 1)) return int(i);
        return -1;
    }
};

inline void validate_plane(const ProjectivePlane& p) {
    int n = p.points();
    const auto& ls = p.lines.edges();
    if (int(ls.size()) != n || p.lines.ground() != bit(n) - 1) throw std::logic_error("plane: wrong size");
    for (Mask l : ls)
        if (popcount(l) != p.q + 1) throw std::logic_error("plane: line of wrong size");
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (popcount(ls[i] & ls[j]) != 1) throw std::logic_error("plane: two lines do not meet in one point");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int c = 0;
            for (Mask l : ls) c += (l >> a & 1) && (l >> b & 1);
            if (c != 1) throw std::logic_error("plane: two points not on exactly one line");
        }
}

inline ProjectivePlane build_plane(int q) {
    std::vector<int> d;
    if (q == 2) d = {1, 2, 4};
    else if (q == 3) d = {0, 1, 3, 9};
    else throw std::invalid_argument("build_plane: only q = 2 and q = 3 are supported");
    int n = q * q + q + 1;
    std::vector<Mask> lines;
    for (int i = 0; i < n; ++i) {
        Mask l = 0;
        for (int x : d) l |= bit((x + i) % n);
        lines.push_back(l);
    }
    ProjectivePlane p{q, Clutter::on_range(n, lines)};
    validate_plane(p);
    return p;
}

struct Triangle {
    int lx, ly, lz;  // indices into the plane's lines
    int x, y, z;     // x = L_y & L_z and so on
    Mask Lx, Ly, Lz;
    Mask X, Y, Z;  // sides minus corners
    Mask points() const { return Lx | Ly | Lz; }
};

inline std::vector<Triangle> triangles(const ProjectivePlane& p) {
    const auto& ls = p.lines.edges();
    int m = int(ls.size());
    std::vector<Triangle> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                if (ls[a] & ls[b] & ls[c]) continue;
                Triangle t{a, b, c, 0, 0, 0, ls[a], ls[b], ls[c], 0, 0, 0};
                t.x = std::countr_zero(t.Ly & t.Lz);
                t.y = std::countr_zero(t.Lx & t.Lz);
                t.z = std::countr_zero(t.Lx & t.Ly);
                t.X = t.Lx & ~bit(t.y) & ~bit(t.z);
                t.Y = t.Ly & ~bit(t.x) & ~bit(t.z);
                t.Z = t.Lz & ~bit(t.x) & ~bit(t.y);
                out.push_back(t);
            }
    return out;
}

inline Mask zero_corner(const Triangle& t) { return t.X | t.Y | t.Z; }

// Minimal point sets meeting every line and containing none, by exhaustive search.
inline std::vector<Mask> blocking_sets(const ProjectivePlane& p) {
    if (p.q > 3) throw std::invalid_argument("blocking_sets: plane order too large");
    const auto& ls = p.lines.edges();
    int n = p.points();
    auto meets_all = [&](Mask s) {
        for (Mask l : ls)
            if (!(l & s)) return false;
        return true;
    };
    std::vector<Mask> out;
    for (Mask s = 1; s < bit(n); ++s) {
        if (!meets_all(s)) continue;
        bool has_line = false;
        for (Mask l : ls) has_line |= (l & s) == l;
        if (has_line) continue;
        bool minimal = true;
        for (int v : members(s))
            if (meets_all(s & ~bit(v))) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

enum class CornerKind { line, zero_corner, one_corner, three_corner, invalid };

struct CornerClass {
    CornerKind kind;
    int base = -1;  // corner point of a 1-corner
};

inline CornerClass corner_classify(const Triangle& t, Mask r) {
    if (r & ~t.points()) throw std::invalid_argument("corner_classify: set is not inside the triangle");
    if (r == t.Lx || r == t.Ly || r == t.Lz) return {CornerKind::line};
    if (r == zero_corner(t)) return {CornerKind::zero_corner};
    Mask corners = bit(t.x) | bit(t.y) | bit(t.z);
    struct Side {
        int c;
        Mask own, a, b;
    };
    for (Side s : {Side{t.x, t.X, t.Y, t.Z}, Side{t.y, t.Y, t.X, t.Z}, Side{t.z, t.Z, t.X, t.Y}}) {
        if ((r & corners) != bit(s.c)) continue;
        Mask part = r & s.own;
        if ((r & (s.a | s.b)) == (s.a | s.b) && part && (r & ~(bit(s.c) | s.a | s.b | s.own)) == 0)
            return {CornerKind::one_corner, s.c};
    }
    if ((r & corners) == corners && (r & t.X) != t.X && (r & t.Y) != t.Y && (r & t.Z) != t.Z)
        return {CornerKind::three_corner};
    return {CornerKind::invalid};
}

// Lines of PG(2,3) together with the 0-corner of every triangle.
inline Clutter augmented_ternary() {
    auto p = build_plane(3);
    std::vector<Mask> e = p.lines.edges();
    for (const auto& t : triangles(p)) e.push_back(zero_corner(t));
    return Clutter::minimal_of(p.lines.ground(), e);
}

// Three lines through x and a fourth line missing x: delete the points off
// their union, contract everything except x, the y_i and one a_i per line.
inline Clutter fano_minor_recipe(const Clutter& c, const ProjectivePlane& p, int x, int l4) {
    const auto& ls = p.lines.edges();
    if (ls[l4] >> x & 1) throw std::invalid_argument("fano minor: fourth line passes through x");
    std::vector<Mask> through;
    for (Mask l : ls)
        if (l >> x & 1) through.push_back(l);
    Mask keep = bit(x);
    Mask uni = ls[l4];
    for (int i = 0; i < 3; ++i) {
        Mask li = through[i];
        uni |= li;
        int yi = std::countr_zero(li & ls[l4]);
        int ai = std::countr_zero(li & ~bit(x) & ~bit(yi));
        keep |= bit(yi) | bit(ai);
    }
    Mask all = p.lines.ground();
    return minor(c, all & ~uni, uni & ~keep);
}

inline bool verify_fano_minor_in_augmented_ternary() {
    auto p = build_plane(3);
    int x = 0, l4 = 0;
    while (p.lines.edges()[l4] >> x & 1) ++l4;
    auto m = fano_minor_recipe(augmented_ternary(), p, x, l4);
    return clutter_isomorphic(m, build_plane(2).lines);
}

}  // namespace lehman
