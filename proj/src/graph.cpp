#include "matchbound/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace matchbound {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
    }
}

}  // namespace

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& row : adj_) twice += static_cast<long long>(row.count());
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_, "has_edge");
    check_vertex(v, n_, "has_edge");
    return u != v && adj_[u].test(v);
}

int Graph::degree(int v) const {
    check_vertex(v, n_, "degree");
    return static_cast<int>(adj_[v].count());
}

const boost::dynamic_bitset<>& Graph::neighbors(int v) const {
    check_vertex(v, n_, "neighbors");
    return adj_[v];
}

std::uint64_t Graph::neighbor_mask64(int v) const {
    check_vertex(v, n_, "neighbor_mask64");
    if (n_ > 64) throw std::invalid_argument("neighbor_mask64: graph has more than 64 vertices");
    std::uint64_t mask = 0;
    for (auto i = adj_[v].find_first(); i != boost::dynamic_bitset<>::npos;
         i = adj_[v].find_next(i)) {
        mask |= std::uint64_t{1} << i;
    }
    return mask;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> degrees(n_);
    for (int v = 0; v < n_; ++v) degrees[v] = static_cast<int>(adj_[v].count());
    return degrees;
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> result;
    for (int u = 0; u < n_; ++u) {
        for (auto v = adj_[u].find_first(); v != boost::dynamic_bitset<>::npos;
             v = adj_[u].find_next(v)) {
            if (static_cast<int>(v) > u) result.emplace_back(u, static_cast<int>(v));
        }
    }
    return result;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

Graph make_graph(int n, const std::vector<VertexPair>& edges) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("make_graph: vertex count " + std::to_string(n) +
                                    " outside [0, " + std::to_string(kMaxVertices) + "]");
    }
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, boost::dynamic_bitset<>(n));
    for (const auto& [u, v] : edges) {
        check_vertex(u, n, "make_graph");
        check_vertex(v, n, "make_graph");
        if (u == v) {
            throw std::invalid_argument("make_graph: self-loop at vertex " + std::to_string(u));
        }
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

Graph minor(const Graph& g, int i, int j) {
    const int n = g.vertex_count();
    check_vertex(i, n, "minor");
    check_vertex(j, n, "minor");
    if (i == j) throw std::invalid_argument("minor: the two vertices must differ");
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v != i && v != j) remap[v] = next++;
    }
    std::vector<VertexPair> edges;
    for (const auto& [u, v] : g.edges()) {
        if (remap[u] >= 0 && remap[v] >= 0) edges.emplace_back(remap[u], remap[v]);
    }
    return make_graph(n - 2, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int offset = a.vertex_count();
    std::vector<VertexPair> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
    return make_graph(offset + b.vertex_count(), edges);
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::deque<int> queue;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.push_back(start);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != boost::dynamic_bitset<>::npos;
                 v = nb.find_next(v)) {
                const int w = static_cast<int>(v);
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 0; v < n; ++v) {
        (color[v] == 0 ? parts.left : parts.right).push_back(v);
    }
    return parts;
}

ZeroOneMatrix::ZeroOneMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ZeroOneMatrix: negative dimension");
    entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

std::uint8_t ZeroOneMatrix::at(int i, int j) const {
    check_vertex(i, rows_, "ZeroOneMatrix::at row");
    check_vertex(j, cols_, "ZeroOneMatrix::at column");
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void ZeroOneMatrix::set(int i, int j, std::uint8_t value) {
    check_vertex(i, rows_, "ZeroOneMatrix::set row");
    check_vertex(j, cols_, "ZeroOneMatrix::set column");
    if (value > 1) throw std::invalid_argument("ZeroOneMatrix::set: entries are 0 or 1");
    entries_[static_cast<std::size_t>(i) * cols_ + j] = value;
}

int ZeroOneMatrix::row_sum(int i) const {
    check_vertex(i, rows_, "ZeroOneMatrix::row_sum");
    int sum = 0;
    for (int j = 0; j < cols_; ++j) sum += entries_[static_cast<std::size_t>(i) * cols_ + j];
    return sum;
}

ZeroOneMatrix ZeroOneMatrix::transposed() const {
    ZeroOneMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

ZeroOneMatrix all_ones_matrix(int r) {
    ZeroOneMatrix m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m.set(i, j, 1);
    return m;
}

ZeroOneMatrix identity_matrix(int n) {
    ZeroOneMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ZeroOneMatrix incidence_matrix(const Graph& g, const Bipartition& parts) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1), pos(n, -1);
    for (std::size_t i = 0; i < parts.left.size(); ++i) {
        check_vertex(parts.left[i], n, "incidence_matrix");
        side[parts.left[i]] = 0;
        pos[parts.left[i]] = static_cast<int>(i);
    }
    for (std::size_t j = 0; j < parts.right.size(); ++j) {
        check_vertex(parts.right[j], n, "incidence_matrix");
        if (side[parts.right[j]] != -1) {
            throw std::invalid_argument("incidence_matrix: vertex in both parts");
        }
        side[parts.right[j]] = 1;
        pos[parts.right[j]] = static_cast<int>(j);
    }
    for (int v = 0; v < n; ++v) {
        if (side[v] == -1) throw std::invalid_argument("incidence_matrix: vertex in neither part");
    }
    ZeroOneMatrix m(static_cast<int>(parts.left.size()), static_cast<int>(parts.right.size()));
    for (const auto& [u, v] : g.edges()) {
        if (side[u] == side[v]) {
            throw std::invalid_argument("incidence_matrix: edge inside one part");
        }
        const int i = side[u] == 0 ? pos[u] : pos[v];
        const int j = side[u] == 0 ? pos[v] : pos[u];
        m.set(i, j, 1);
    }
    return m;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<VertexPair> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "p") {
            if (n != -1) throw ParseError(line_no, "duplicate 'p' line");
            long long declared = -1;
            if (!(ls >> declared)) throw ParseError(line_no, "'p' needs a vertex count");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after 'p' line");
            if (declared < 0 || declared > kMaxVertices) {
                throw ParseError(line_no, "vertex count outside [0, " +
                                              std::to_string(kMaxVertices) + "]");
            }
            n = static_cast<int>(declared);
        } else if (head == "e") {
            if (n == -1) throw ParseError(line_no, "'e' before the 'p' line");
            long long u = -1, v = -1;
            if (!(ls >> u >> v)) throw ParseError(line_no, "'e' needs two endpoints");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after 'e' line");
            if (u < 0 || u >= n || v < 0 || v >= n) {
                throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
            }
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw ParseError(line_no, "unknown directive '" + head + "'");
        }
    }
    if (n == -1) throw ParseError(line_no + 1, "missing 'p' line");
    return make_graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

}  // namespace matchbound
