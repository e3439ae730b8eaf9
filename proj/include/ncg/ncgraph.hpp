#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/group.hpp"
#include "ncg/matrix.hpp"
#include "ncg/spectrum.hpp"

namespace ncg {

/// Simple undirected graph on labelled vertices; the non-commuting graph of a
/// group, or a synthetic complete multipartite graph for the integral-graph
/// work. When the graph is recognized as complete multipartite, `shape` and
/// `parts` describe the partition (vertex order groups the parts).
struct NonCommutingGraph {
    std::string source;
    std::vector<std::string> labels;
    std::vector<char> adj;  // row-major 0/1, zero diagonal
    Int edges = 0;
    std::optional<MultipartiteShape> shape;
    std::vector<std::vector<int>> parts;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    bool adjacent(int u, int v) const {
        return adj[static_cast<std::size_t>(u) * labels.size() + static_cast<std::size_t>(v)] != 0;
    }
    long degree(int u) const {
        long d = 0;
        for (int v = 0; v < vertex_count(); ++v) d += adjacent(u, v) ? 1 : 0;
        return d;
    }
};

/// Non-commuting graph of a non-abelian group: vertices are the non-central
/// elements, edges join non-commuting pairs. For AC-groups the vertex order
/// groups the centralizer parts (size descending, then first label); the
/// partition is verified against the edge set, not assumed.
inline NonCommutingGraph build_graph(const FiniteGroup& g) {
    if (g.is_abelian()) throw std::invalid_argument("non-commuting graph undefined for abelian groups: " + g.name());
    std::vector<int> z = center(g);
    std::set<int> zset(z.begin(), z.end());

    CentralizerData cents = distinct_centralizers(g);
    std::vector<int> order;  // vertex order as group element indices
    NonCommutingGraph out;
    out.source = g.name();

    if (cents.ac_group) {
        struct Part {
            std::vector<int> members;
            std::vector<std::string> labels;
        };
        std::vector<Part> parts;
        for (const auto& cent : cents.noncentral) {
            Part p;
            for (int x : cent)
                if (!zset.count(x)) p.members.push_back(x);
            for (int x : p.members) p.labels.push_back(g.label(x));
            std::vector<std::size_t> perm(p.members.size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            std::sort(perm.begin(), perm.end(),
                      [&](std::size_t a, std::size_t b) { return p.labels[a] < p.labels[b]; });
            Part sorted;
            for (std::size_t i : perm) {
                sorted.members.push_back(p.members[i]);
                sorted.labels.push_back(p.labels[i]);
            }
            parts.push_back(std::move(sorted));
        }
        std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
            if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
            return a.labels.front() < b.labels.front();
        });
        std::vector<Int> sizes;
        for (auto& p : parts) {
            std::vector<int> idxs;
            for (std::size_t i = 0; i < p.members.size(); ++i) {
                idxs.push_back(static_cast<int>(order.size()));
                order.push_back(p.members[i]);
            }
            out.parts.push_back(std::move(idxs));
            sizes.push_back(Int(static_cast<long>(p.members.size())));
        }
        out.shape = MultipartiteShape::from_parts(sizes);
    } else {
        for (int x = 0; x < g.order(); ++x)
            if (!zset.count(x)) order.push_back(x);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return g.label(a) < g.label(b); });
    }

    const int n = static_cast<int>(order.size());
    out.labels.resize(static_cast<std::size_t>(n));
    out.adj.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    long edge2 = 0;
    for (int i = 0; i < n; ++i) out.labels[static_cast<std::size_t>(i)] = g.label(order[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool e = !g.commutes(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
            out.adj[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = e ? 1 : 0;
            edge2 += e ? 1 : 0;
        }
    out.edges = Int(edge2 / 2);

    if (out.shape) {
        // the AC partition must reproduce the edge set exactly
        std::vector<int> part_of(static_cast<std::size_t>(n), -1);
        for (std::size_t p = 0; p < out.parts.size(); ++p)
            for (int v : out.parts[p]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                bool expect = part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)];
                if (out.adjacent(i, j) != expect)
                    throw std::logic_error("AC partition does not match edge set: " + g.name());
            }
    }
    return out;
}

/// Shape of the non-commuting graph when the group is an AC-group.
inline std::optional<MultipartiteShape> multipartite_shape_of(const FiniteGroup& g) {
    return build_graph(g).shape;
}

/// Synthetic complete multipartite graph (no group attached).
inline NonCommutingGraph multipartite_graph(const MultipartiteShape& shape) {
    if (shape.part_count() < 2) throw std::invalid_argument("complete multipartite graph needs >= 2 parts (edgeless otherwise)");
    Int total = shape.vertex_count();
    if (!total.fits_sint_p() || total > 100000) throw std::domain_error("shape too large to materialize");
    const int n = static_cast<int>(total.get_si());
    NonCommutingGraph out;
    out.source = shape.to_string();
    out.shape = shape;
    out.labels.resize(static_cast<std::size_t>(n));
    out.adj.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    int next = 0, part_index = 0;
    for (const auto& [size, count] : shape.classes()) {
        for (Int c = 0; c < count; ++c) {
            std::vector<int> part;
            for (Int k = 0; k < size; ++k) {
                out.labels[static_cast<std::size_t>(next)] =
                    "p" + std::to_string(part_index) + "_" + k.get_str();
                part.push_back(next++);
            }
            out.parts.push_back(std::move(part));
            ++part_index;
        }
    }
    std::vector<int> part_of(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < out.parts.size(); ++p)
        for (int v : out.parts[p]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    long edge2 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || part_of[static_cast<std::size_t>(i)] == part_of[static_cast<std::size_t>(j)]) continue;
            out.adj[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = 1;
            ++edge2;
        }
    out.edges = Int(edge2 / 2);
    return out;
}

inline IntMatrix adjacency_matrix(const NonCommutingGraph& gr) {
    const int n = gr.vertex_count();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = gr.adjacent(i, j) ? 1 : 0;
    return m;
}

inline IntMatrix laplacian_matrix(const NonCommutingGraph& gr) {
    const int n = gr.vertex_count();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (i != j && gr.adjacent(i, j)) m.at(i, j) = -1;
        m.at(i, i) = gr.degree(i);
    }
    return m;
}

/// One "u<TAB>v" line per edge, vertex labels (labels may contain spaces).
inline std::string edge_list_text(const NonCommutingGraph& gr) {
    std::ostringstream os;
    for (int i = 0; i < gr.vertex_count(); ++i)
        for (int j = i + 1; j < gr.vertex_count(); ++j)
            if (gr.adjacent(i, j)) os << gr.labels[static_cast<std::size_t>(i)] << "\t" << gr.labels[static_cast<std::size_t>(j)] << "\n";
    return os.str();
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
    }
    q += "\"";
    return q;
}

/// Adjacency matrix as CSV with a label header row/column.
inline std::string adjacency_csv(const NonCommutingGraph& gr) {
    std::ostringstream os;
    os << "vertex";
    for (const auto& l : gr.labels) os << "," << csv_quote(l);
    os << "\n";
    for (int i = 0; i < gr.vertex_count(); ++i) {
        os << csv_quote(gr.labels[static_cast<std::size_t>(i)]);
        for (int j = 0; j < gr.vertex_count(); ++j) os << "," << (gr.adjacent(i, j) ? 1 : 0);
        os << "\n";
    }
    return os.str();
}

}  // namespace ncg
