#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchbound {

using VertexPair = std::pair<int, int>;

inline constexpr int kMaxVertices = 4096;

// Undirected simple graph over vertices 0..n-1, stored as adjacency
// bitsets. Immutable after construction via make_graph.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    long long edge_count() const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const boost::dynamic_bitset<>& neighbors(int v) const;
    // Neighbor set as a bitmask; requires vertex_count() <= 64.
    std::uint64_t neighbor_mask64(int v) const;
    std::vector<int> degree_sequence() const;
    std::vector<VertexPair> edges() const;  // lexicographic, u < v

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<boost::dynamic_bitset<>> adj_;

    friend Graph make_graph(int n, const std::vector<VertexPair>& edges);
};

// Builds a graph; duplicate edges collapse, (u,v) and (v,u) are the same
// edge. Throws std::invalid_argument on self-loops, out-of-range
// endpoints, or n outside [0, kMaxVertices].
Graph make_graph(int n, const std::vector<VertexPair>& edges);

// Deletes vertices i and j (i != j) and reindexes the rest, preserving
// relative order.
Graph minor(const Graph& g, int i, int j);

// Disjoint union; vertices of b are shifted up by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

struct Bipartition {
    std::vector<int> left;   // ascending
    std::vector<int> right;  // ascending
};

// Proper 2-coloring by BFS, or nullopt if an odd cycle exists. The
// lowest-index vertex of each component goes left; isolated vertices go
// left. Deterministic for a given graph.
std::optional<Bipartition> bipartition(const Graph& g);

// Dense 0/1 matrix; doubles as the bipartite incidence matrix
// (rows = left side, columns = right side).
class ZeroOneMatrix {
public:
    ZeroOneMatrix() = default;
    ZeroOneMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    std::uint8_t at(int i, int j) const;
    void set(int i, int j, std::uint8_t value);
    int row_sum(int i) const;
    ZeroOneMatrix transposed() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> entries_;
};

ZeroOneMatrix all_ones_matrix(int r);
ZeroOneMatrix identity_matrix(int n);

// Incidence matrix of g under a proper bipartition (every edge must run
// between parts and every vertex must appear in exactly one part).
ZeroOneMatrix incidence_matrix(const Graph& g, const Bipartition& parts);

// Perfect matching in canonical form: each pair has first < second, and
// pairs are sorted by first vertex.
struct Matching {
    std::vector<VertexPair> pairs;
    bool operator==(const Matching&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Edge-list format: comment lines start with '#', the first significant
// line is "p <n>", each edge line is "e <u> <v>". Errors carry the
// offending 1-based line number.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace matchbound
