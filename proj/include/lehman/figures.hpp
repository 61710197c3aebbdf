#pragma once

#include "lehman/graph.hpp"

#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lehman::figures {

// Builds a bipartite graph from named undirected edges. Colours come from a
// 2-colouring with `black_root` black; indices follow first appearance.
class NamedGraph {
public:
    void path(const std::string& chain) {
        std::vector<std::string> names;
        std::stringstream ss(chain);
        for (std::string t; std::getline(ss, t, '-');) names.push_back(t);
        for (std::size_t i = 1; i < names.size(); ++i) edge(names[i - 1], names[i]);
    }
    void edge(const std::string& a, const std::string& b) {
        int x = id(a), y = id(b);
        adj_[x].push_back(y);
        adj_[y].push_back(x);
    }

    BipartiteGraph build(const std::string& black_root) {
        int v = int(names_.size());
        colour_.assign(v, -1);
        auto it = index_.find(black_root);
        if (it == index_.end()) throw std::logic_error("figure: unknown root " + black_root);
        auto bfs = [&](int start) {
            colour_[start] = 0;
            std::queue<int> q;
            q.push(start);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : adj_[x]) {
                    if (colour_[y] < 0) {
                        colour_[y] = 1 - colour_[x];
                        q.push(y);
                    } else if (colour_[y] == colour_[x]) {
                        throw std::logic_error("figure: graph is not bipartite");
                    }
                }
            }
        };
        bfs(it->second);
        for (int x = 0; x < v; ++x)
            if (colour_[x] < 0) bfs(x);
        idx_.assign(v, 0);
        int nb = 0, nw = 0;
        for (int x = 0; x < v; ++x) idx_[x] = colour_[x] == 0 ? nb++ : nw++;
        if (nb != nw) throw std::logic_error("figure: colour classes differ in size");
        std::vector<Edge> edges;
        for (int x = 0; x < v; ++x)
            if (colour_[x] == 0)
                for (int y : adj_[x]) edges.push_back({idx_[x], idx_[y]});
        return BipartiteGraph::from_edges(nb, edges);
    }

    // Index of a vertex inside its colour class after build(); black is colour 0.
    int index_of(const std::string& name) const { return idx_.at(index_.at(name)); }
    bool is_black(const std::string& name) const { return colour_.at(index_.at(name)) == 0; }

private:
    int id(const std::string& s) {
        auto [it, fresh] = index_.emplace(s, int(names_.size()));
        if (fresh) {
            names_.push_back(s);
            adj_.emplace_back();
        }
        return it->second;
    }
    std::map<std::string, int> index_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> colour_, idx_;
};

inline std::string s(const char* p, int x) { return p + std::to_string(x); }

// Point-line incidence of the Fano plane; it is its own partner (k = 2).
inline BinaryMatrix fano_a() {
    return BinaryMatrix::from_strings(
        {"1101000", "0110100", "0011010", "0001101", "1000110", "0100011", "1010001"});
}
inline BinaryMatrix fano_b() { return fano_a(); }

inline BipartiteGraph cube() {
    NamedGraph g;
    for (int x = 0; x < 4; ++x) g.edge(s("b", x), s("w", x));
    g.path("b0-w1-b2-w3-b0");
    g.path("b1-w2-b3-w0-b1");
    return g.build("b0");
}

inline BipartiteGraph moebius10() {
    NamedGraph g;
    for (int x = 0; x < 5; ++x) g.edge(s("b", x), s("w", x));
    g.path("w3-b4-w0-b1-w2-b3-w4-b0-w1-b2-w3");
    return g.build("b0");
}

inline BipartiteGraph desargues() {
    NamedGraph g;
    for (int x = 0; x < 10; ++x) g.edge(s("c", x), s("r", x));
    g.path("c0-r1-c2-r3-c4-r5-c6-r7-c8-r9-c0");
    g.path("r0-c3-r6-c9-r2-c5-r8-c1-r4-c7-r0");
    return g.build("c0");
}

// Heawood graph: incidence graph of the Fano plane.
inline BipartiteGraph heawood() { return BipartiteGraph(fano_a()); }

// Two (11,3,4) graphs: the Moebius ladder and a second ladder graph.
inline BipartiteGraph moebius22() {
    NamedGraph g;
    for (int x = 0; x < 11; ++x) g.edge(s("v", x), s("w", x));
    std::string p = "v0";
    for (int x = 1; x < 11; ++x) p += "-" + s("v", x);
    for (int x = 0; x < 11; ++x) p += "-" + s("w", x);
    g.path(p + "-v0");
    return g.build("v0");
}

inline BipartiteGraph ladder22_a() {
    NamedGraph g;
    for (int x = 0; x < 11; ++x) g.edge(s("v", x), s("w", x));
    std::string p = "v0";
    for (int x = 1; x < 11; ++x) p += "-" + s("v", x);
    g.path(p + "-w0-w1");
    g.path("w2-w3-w4-w5-w6-w7-w8");
    g.path("w9-w10-v0");
    g.edge("w2", "w9");
    g.edge("w1", "w8");
    return g.build("v0");
}

inline void ladder_block(NamedGraph& g, const std::string& a, const std::string& b) {
    g.path(a + "0-" + a + "1-" + a + "2-" + a + "3-" + b + "3-" + b + "2-" + b + "1-" + b + "0-" + a + "0");
    g.edge(a + "1", b + "1");
    g.edge(a + "2", b + "2");
}

// Two more (11,3,4) graphs built from ladder blocks.
inline BipartiteGraph ladder22_b() {
    NamedGraph g;
    ladder_block(g, "v", "w");
    ladder_block(g, "x", "y");
    g.edge("a0", "a1");
    g.path("b0-b1-b3-b2-b0");
    g.edge("w0", "b2");
    g.edge("w3", "b3");
    g.edge("v0", "a0");
    g.edge("v3", "a1");
    g.edge("a0", "x3");
    g.edge("a1", "x0");
    g.edge("b0", "y0");
    g.edge("b1", "y3");
    return g.build("v0");
}

inline BipartiteGraph ladder22_c() {
    NamedGraph g;
    ladder_block(g, "v", "w");
    ladder_block(g, "x", "y");
    g.path("z0-z1-z2-zz2-zz1-zz0-z0");
    g.edge("z1", "zz1");
    g.edge("zz2", "w0");
    g.edge("z2", "w3");
    g.edge("z0", "y0");
    g.edge("zz0", "y3");
    g.edge("v0", "x0");
    g.edge("v3", "x3");
    return g.build("v0");
}

// The (17,3,6) graph: whites 0..16, blacks 17..33 (black index = label - 17).
inline BipartiteGraph missing34() {
    const int nbrs[17][3] = {{17, 18, 19}, {17, 18, 20}, {17, 19, 21}, {18, 22, 23}, {19, 24, 25}, {20, 24, 26},
                             {20, 27, 28}, {21, 22, 29}, {21, 27, 30}, {22, 23, 26}, {23, 31, 32}, {24, 25, 29},
                             {25, 31, 33}, {26, 30, 33}, {27, 28, 30}, {28, 29, 32}, {31, 32, 33}};
    std::vector<Edge> edges;
    for (int w = 0; w < 17; ++w)
        for (int b : nbrs[w]) edges.push_back({b - 17, w});
    return BipartiteGraph::from_edges(17, edges);
}

// Rung edges of the (14,3,5) graph, as vertex names.
inline std::vector<std::pair<std::string, std::string>> rungs28_rung_names() {
    return {{"r0", "c0"}, {"r5", "c5"}, {"r6", "c6"}, {"r7", "c7"}, {"r8", "c8"}, {"r9", "c9"},
            {"w1", "b2"}, {"w2", "b1"}, {"w3", "b4"}, {"w4", "b3"}, {"r1", "c2"}, {"c1", "r2"},
            {"r3", "c4"}, {"c3", "r4"}};
}

// (14,3,5) graph given by its auxiliary cycles and rungs.
inline NamedGraph rungs28_named() {
    NamedGraph g;
    g.path("r0-c1-b1-w1-r1-c0-r9-c8-r7-c6-r5-c4-b4-w4-r4-c5-r6-c7-r8-c9-r0");
    g.path("c2-b2-w2-r2-c3-b3-w3-r3-c2");
    for (auto [a, b] : rungs28_rung_names()) g.edge(a, b);
    g.build("r0");
    return g;
}

inline BipartiteGraph rungs28() { return rungs28_named().build("r0"); }

// (14,3,5) graph without 3-rung ladders.
inline BipartiteGraph ladderfree28() {
    NamedGraph g;
    for (int x = 0; x < 14; x += 2) {
        int y = x + 1;
        for (const char* bl : {"ir", "or"})
            for (const char* wh : {"ic", "oc"}) g.edge(s(bl, x), s(wh, y));
    }
    for (int y = 1; y < 14; y += 2) {
        g.edge(s("oc", y), s("or", (y + 1) % 14));
        g.edge(s("ic", y), s("ir", (y + 3) % 14));
    }
    return g.build("ir0");
}

}  // namespace lehman::figures
