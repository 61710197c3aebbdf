#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lehman {

// Exact rational, always canonical (lowest terms, positive denominator).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long v) : v_(v) {}  // NOLINT(implicit)
    Rational(const mpz_class& v) : v_(v) {}  // NOLINT(implicit)
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational parse(std::string_view tok) {
        std::string s(tok);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s, 10));
            return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad rational token '" + s + "'");
        }
    }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }
    RationalMatrix(int rows, int cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != std::size_t(rows) * cols) throw std::invalid_argument("entry count != rows*cols");
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static RationalMatrix ones(int rows, int cols) {
        RationalMatrix m(rows, cols);
        for (auto& x : m.a_) x = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    Rational& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    const std::vector<Rational>& entries() const { return a_; }

    bool is_binary() const {
        for (const auto& x : a_)
            if (!(x == 0 || x == 1)) return false;
        return true;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const RationalMatrix& x, const RationalMatrix& y) { return !(x == y); }

    friend RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("shape mismatch");
        RationalMatrix z(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] + y.a_[i];
        return z;
    }
    friend RationalMatrix operator-(const RationalMatrix& x, const RationalMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("shape mismatch");
        RationalMatrix z(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] - y.a_[i];
        return z;
    }
    friend RationalMatrix operator*(const Rational& c, const RationalMatrix& x) {
        RationalMatrix z(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = c * x.a_[i];
        return z;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

inline RationalMatrix matmul(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    RationalMatrix z(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j) {
            mpq_class acc = 0;
            for (int t = 0; t < x.cols(); ++t) acc += x(i, t).value() * y(t, j).value();
            z(i, j) = Rational(acc);
        }
    return z;
}

inline RationalVector matvec(const RationalMatrix& m, const RationalVector& v) {
    if (int(v.size()) != m.cols()) throw std::invalid_argument("matvec: dimension mismatch");
    RationalVector out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        mpq_class acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc += m(i, j).value() * v[j].value();
        out[i] = Rational(acc);
    }
    return out;
}

inline RationalMatrix hadamard(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("hadamard: shape mismatch");
    RationalMatrix z(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) z(i, j) = x(i, j) * y(i, j);
    return z;
}

namespace detail {

// Scale each row of [m | rhs] by the lcm of its denominators.
inline std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m, const RationalMatrix* rhs,
                                                        std::vector<mpz_class>* scale) {
    int extra = rhs ? rhs->cols() : 0;
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols() + extra));
    if (scale) scale->assign(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (int j = 0; j < extra; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)(i, j).den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
        for (int j = 0; j < extra; ++j) a[i][m.cols() + j] = (*rhs)(i, j).num() * (l / (*rhs)(i, j).den());
        if (scale) (*scale)[i] = l;
    }
    return a;
}

// Bareiss forward elimination on the first n columns. Returns false if singular.
// Leaves an upper-triangular system; *swaps counts row exchanges.
inline bool bareiss(std::vector<std::vector<mpz_class>>& a, int n, int* swaps) {
    int width = a.empty() ? 0 : int(a[0].size());
    mpz_class prev = 1;
    if (swaps) *swaps = 0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return false;
        if (p != k) {
            std::swap(a[p], a[k]);
            if (swaps) ++*swaps;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < width; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

}  // namespace detail

inline Rational determinant(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant: non-square input");
    int n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<mpz_class> scale;
    auto a = detail::integer_rows(m, nullptr, &scale);
    int swaps = 0;
    if (!detail::bareiss(a, n, &swaps)) return Rational(0);
    mpz_class d = a[n - 1][n - 1];
    if (swaps % 2) d = -d;
    mpz_class s = 1;
    for (auto& x : scale) s *= x;
    return Rational(d, s);
}

// Solves m X = rhs for all right-hand columns at once; absent when m is singular.
inline std::optional<RationalMatrix> solve_many(const RationalMatrix& m, const RationalMatrix& rhs) {
    if (!m.square()) throw std::invalid_argument("solve: non-square input");
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    int n = m.rows();
    auto a = detail::integer_rows(m, &rhs, nullptr);
    if (!detail::bareiss(a, n, nullptr)) return std::nullopt;
    RationalMatrix x(n, rhs.cols());
    for (int c = 0; c < rhs.cols(); ++c) {
        for (int i = n - 1; i >= 0; --i) {
            mpq_class acc = a[i][n + c];
            for (int j = i + 1; j < n; ++j) acc -= a[i][j] * x(j, c).value();
            acc /= a[i][i];
            x(i, c) = Rational(acc);
        }
    }
    return x;
}

inline std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
    if (int(b.size()) != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix rhs(m.rows(), 1, b);
    auto x = solve_many(m, rhs);
    if (!x) return std::nullopt;
    return x->entries();
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse: non-square input");
    return solve_many(m, RationalMatrix::identity(m.rows()));
}

inline int rank(const RationalMatrix& m) {
    auto a = detail::integer_rows(m, nullptr, nullptr);
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            mpz_class f = a[i][c], g = a[r][c];
            for (int j = c; j < m.cols(); ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
        }
        ++r;
    }
    return r;
}

// .lmx text: "<rows> <cols>" then rows of 0/1 characters, or of p/q tokens.
inline std::string to_lmx(const RationalMatrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    bool bin = m.is_binary();
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (bin) {
                os << (m(i, j) == 1 ? '1' : '0');
            } else {
                if (j) os << ' ';
                os << m(i, j).to_string();
            }
        }
        os << '\n';
    }
    return os.str();
}

inline RationalMatrix parse_lmx(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("lmx: missing header");
    std::istringstream hs(line);
    long rows = -1, cols = -1;
    std::string junk;
    if (!(hs >> rows >> cols) || (hs >> junk) || rows < 0 || cols < 0)
        throw std::invalid_argument("lmx: bad header '" + line + "'");
    std::vector<Rational> entries;
    entries.reserve(std::size_t(rows * cols));
    for (long i = 0; i < rows; ++i) {
        if (!next_line()) throw std::invalid_argument("lmx: missing row " + std::to_string(i));
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.size() == 1 && cols > 1 && toks[0].size() == std::size_t(cols)) {
            for (char c : toks[0]) {
                if (c != '0' && c != '1') throw std::invalid_argument("lmx: bad 0/1 row " + std::to_string(i));
                entries.emplace_back(c == '1' ? 1L : 0L);
            }
        } else {
            if (toks.size() != std::size_t(cols))
                throw std::invalid_argument("lmx: row " + std::to_string(i) + " has wrong length");
            for (auto& t : toks) entries.push_back(Rational::parse(t));
        }
    }
    if (next_line()) throw std::invalid_argument("lmx: trailing data");
    return RationalMatrix(int(rows), int(cols), std::move(entries));
}

inline RationalMatrix parse_lmx(const std::string& text) {
    std::istringstream in(text);
    return parse_lmx(in);
}

}  // namespace lehman
