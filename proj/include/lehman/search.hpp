#pragma once

#include "lehman/canonical.hpp"
#include "lehman/graph.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lehman {

struct GenerateOptions {
    bool prune = true;  // twin cut: no equal rows, no equal finished columns
    Equivalence mode = Equivalence::colour_blind;
    int jobs = 1;
    int shard_depth = 5;
};

struct GenerateStats {
    std::uint64_t nodes = 0;
    std::uint64_t emitted = 0;
};

namespace detail {

// Orderly row-by-row generation of lex-max canonical cubic matrices.
class CubicGenerator {
public:
    CubicGenerator(int n, const GenerateOptions& opt) : n_(n), opt_(opt) {
        rows_.reserve(n);
        vals_.reserve(n);
    }

    // Visits every canonical completion in the subtrees owned by `worker`.
    void run(int worker, int workers, const std::function<void(const BinaryMatrix&)>& emit) {
        worker_ = worker;
        workers_ = workers;
        shard_counter_ = 0;
        emit_ = &emit;
        colsum_.assign(n_, 0);
        rows_.clear();
        vals_.clear();
        extend();
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void extend() {
        ++nodes_;
        int m = int(rows_.size());
        if (m == opt_.shard_depth) {
            if (shard_counter_++ % workers_ != worker_) return;
        }
        if (m == n_) {
            leaf();
            return;
        }
        // used columns form a prefix
        int used = 0;
        while (used < n_ && colsum_[used] > 0) ++used;
        // first column not yet complete: every later row starts at or after it
        int first_open = 0;
        while (first_open < n_ && colsum_[first_open] == 3) ++first_open;
        int remaining = n_ - m - 1;

        // column blocks of equal prefix vectors
        std::vector<Mask> colvec(n_, 0);
        for (int i = 0; i < m; ++i)
            for (Mask r = rows_[i]; r; r &= r - 1) colvec[std::countr_zero(r)] |= bit(i);

        Mask limit = m ? vals_[m - 1] : ~Mask(0);
        std::vector<int> pick;
        choose(0, 3, pick, colvec, used, first_open, remaining, limit);
    }

    void choose(int j, int need, std::vector<int>& pick, const std::vector<Mask>& colvec, int used, int first_open,
                int remaining, Mask limit) {
        if (need == 0) {
            try_row(pick, colvec, remaining, limit);
            return;
        }
        for (int c = j; c < n_; ++c) {
            if (colsum_[c] == 3) continue;
            if (pick.empty()) {
                if (c != first_open) return;  // columns before the first one must be complete
                if (!rows_.empty() && c >= used) return;  // must touch the used part
            }
            pick.push_back(c);
            choose(c + 1, need - 1, pick, colvec, used, first_open, remaining, limit);
            pick.pop_back();
        }
    }

    void try_row(const std::vector<int>& pick, const std::vector<Mask>& colvec, int remaining, Mask limit) {
        Mask row = 0;
        for (int c : pick) row |= bit(c);
        Mask v = to_value(row, n_);
        if (v > limit || (opt_.prune && v == limit)) return;
        // block-prefix rule, full check
        for (int c = 1; c < n_; ++c)
            if ((row >> c & 1) && !(row >> (c - 1) & 1) && colvec[c] == colvec[c - 1]) return;
        for (int c : pick) ++colsum_[c];
        bool ok = true;
        for (int c = 0; c < n_ && ok; ++c)
            if (3 - colsum_[c] > remaining) ok = false;
        if (ok && opt_.prune) {
            // finished columns with equal vectors
            for (int c = 1; c < n_ && ok; ++c) {
                if (colsum_[c] != 3 || colsum_[c - 1] != 3) continue;
                Mask a = colvec[c] | (row >> c & 1 ? bit(int(rows_.size())) : 0);
                Mask b = colvec[c - 1] | (row >> (c - 1) & 1 ? bit(int(rows_.size())) : 0);
                if (a == b) ok = false;
            }
        }
        if (ok) {
            rows_.push_back(row);
            vals_.push_back(v);
            LexMax s(rows_, n_);
            if (s.is_maximal(vals_)) extend();
            rows_.pop_back();
            vals_.pop_back();
        }
        for (int c : pick) --colsum_[c];
    }

    void leaf() {
        BinaryMatrix a(n_, rows_);
        if (opt_.mode == Equivalence::colour_blind) {
            auto t = canonical_matrix(a.transpose());
            if (t.values > vals_) return;
        }
        (*emit_)(a);
    }

    int n_;
    GenerateOptions opt_;
    std::vector<Mask> rows_, vals_;
    std::vector<int> colsum_;
    std::uint64_t nodes_ = 0;
    int worker_ = 0, workers_ = 1;
    std::uint64_t shard_counter_ = 0;
    const std::function<void(const BinaryMatrix&)>* emit_ = nullptr;
};

}  // namespace detail

// Streams every generated matrix to `visit(worker, matrix)`. With jobs > 1 the
// callback runs concurrently, once per worker thread.
inline GenerateStats for_each_cubic_bipartite(int order_2n, const GenerateOptions& opt,
                                              const std::function<void(int, const BinaryMatrix&)>& visit) {
    if (order_2n % 2) throw std::invalid_argument("generate: order must be even");
    if (order_2n < 6) throw std::invalid_argument("generate: order must be at least 6");
    int n = order_2n / 2;
    if (n > kMaxDim) throw std::invalid_argument("generate: order too large");
    int workers = std::max(1, opt.jobs);
    std::vector<std::uint64_t> nodes(workers), emitted(workers);
    auto work = [&](int w) {
        detail::CubicGenerator g(n, opt);
        std::function<void(const BinaryMatrix&)> emit = [&](const BinaryMatrix& a) {
            ++emitted[w];
            visit(w, a);
        };
        g.run(w, workers, emit);
        nodes[w] = g.nodes();
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (int w = 0; w < workers; ++w) ts.emplace_back(work, w);
        for (auto& t : ts) t.join();
    }
    GenerateStats st;
    for (int w = 0; w < workers; ++w) {
        st.nodes += nodes[w];
        st.emitted += emitted[w];
    }
    return st;
}

// Connected cubic bipartite graphs on 2n vertices, one per isomorphism class
// of the chosen equivalence, each in lex-max canonical labelling. Output is
// sorted by canonical form.
inline std::vector<BipartiteGraph> generate_cubic_bipartite(int order_2n, const GenerateOptions& opt = {},
                                                            GenerateStats* stats = nullptr) {
    std::vector<std::vector<BinaryMatrix>> found(std::max(1, opt.jobs));
    auto st = for_each_cubic_bipartite(order_2n, opt, [&](int w, const BinaryMatrix& a) { found[w].push_back(a); });
    std::vector<BinaryMatrix> all;
    for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end(), [](const BinaryMatrix& x, const BinaryMatrix& y) {
        return x.row_masks() < y.row_masks();
    });
    std::vector<BipartiteGraph> out;
    for (auto& a : all) out.emplace_back(a);
    if (stats) *stats = st;
    return out;
}

}  // namespace lehman
