#include "matchbound/generators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace matchbound {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
}

void check_size(int value, const char* what) {
    if (value < 0 || value > kMaxVertices) {
        throw std::invalid_argument(std::string(what) + ": size " + std::to_string(value) +
                                    " outside [0, " + std::to_string(kMaxVertices) + "]");
    }
}

std::string format_probability(double p) {
    std::ostringstream out;
    out << p;
    return out.str();
}

}  // namespace

std::uint64_t SplitMix64::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix(state_);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64::mix(seed + (index + 1) * kGolden);
}

Graph complete_graph(int m) {
    check_size(m, "complete_graph");
    std::vector<VertexPair> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return make_graph(m, edges);
}

Graph complete_bipartite(int a, int b) {
    check_size(a, "complete_bipartite");
    check_size(b, "complete_bipartite");
    if (a + b > kMaxVertices) {
        throw std::invalid_argument("complete_bipartite: total size exceeds " +
                                    std::to_string(kMaxVertices));
    }
    std::vector<VertexPair> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return make_graph(a + b, edges);
}

Graph bipartite_union(const std::vector<int>& block_sizes) {
    if (block_sizes.empty()) {
        throw std::invalid_argument("bipartite_union: need at least one block");
    }
    long long total = 0;
    for (int r : block_sizes) {
        if (r < 1) throw std::invalid_argument("bipartite_union: block sizes must be >= 1");
        total += 2LL * r;
    }
    if (total > kMaxVertices) {
        throw std::invalid_argument("bipartite_union: total size exceeds " +
                                    std::to_string(kMaxVertices));
    }
    Graph g = make_graph(0, {});
    for (int r : block_sizes) g = disjoint_union(g, complete_bipartite(r, r));
    return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    check_size(n, "random_graph");
    check_probability(p);
    SplitMix64 rng(seed);
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // One draw per pair, taken unconditionally, so the stream
            // position depends only on (u, v) and never on p.
            if (rng.next_unit() < p) edges.emplace_back(u, v);
        }
    }
    return make_graph(n, edges);
}

Graph random_bipartite(int n, double p, std::uint64_t seed) {
    check_size(n, "random_bipartite");
    if (2 * n > kMaxVertices) {
        throw std::invalid_argument("random_bipartite: total size exceeds " +
                                    std::to_string(kMaxVertices));
    }
    check_probability(p);
    SplitMix64 rng(seed);
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (rng.next_unit() < p) edges.emplace_back(u, n + v);
        }
    }
    return make_graph(2 * n, edges);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::bipartite_union: return "bipartite_union";
        case Family::erdos_renyi: return "erdos_renyi";
        case Family::random_bipartite: return "random_bipartite";
    }
    throw std::logic_error("family_name: unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::complete, Family::complete_bipartite, Family::bipartite_union,
                     Family::erdos_renyi, Family::random_bipartite}) {
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

bool family_is_random(Family f) {
    return f == Family::erdos_renyi || f == Family::random_bipartite;
}

Graph campaign_graph(const CampaignSpec& spec, int index) {
    if (index < 0 || index >= spec.samples) {
        throw std::invalid_argument("campaign_graph: sample index " + std::to_string(index) +
                                    " outside [0, " + std::to_string(spec.samples) + ")");
    }
    switch (spec.family) {
        case Family::complete: return complete_graph(spec.n);
        case Family::complete_bipartite: return complete_bipartite(spec.a, spec.b);
        case Family::bipartite_union: return bipartite_union(spec.block_sizes);
        case Family::erdos_renyi:
            return random_graph(spec.n, spec.p, derive_seed(spec.seed, index));
        case Family::random_bipartite:
            return random_bipartite(spec.n, spec.p, derive_seed(spec.seed, index));
    }
    throw std::logic_error("campaign_graph: unknown family");
}

std::string campaign_graph_id(const CampaignSpec& spec, int index) {
    std::ostringstream id;
    id << family_name(spec.family);
    switch (spec.family) {
        case Family::complete:
            id << ":n=" << spec.n;
            break;
        case Family::complete_bipartite:
            id << ":a=" << spec.a << ",b=" << spec.b;
            break;
        case Family::bipartite_union: {
            id << ":rs=";
            for (std::size_t i = 0; i < spec.block_sizes.size(); ++i) {
                if (i > 0) id << "+";
                id << spec.block_sizes[i];
            }
            break;
        }
        case Family::erdos_renyi:
        case Family::random_bipartite:
            id << ":n=" << spec.n << ",p=" << format_probability(spec.p) << ",seed=" << spec.seed
               << ",sample=" << index;
            break;
    }
    return id.str();
}

std::optional<BigCount> expected_tight_count(const CampaignSpec& spec) {
    switch (spec.family) {
        case Family::bipartite_union: {
            BigCount product = 1;
            for (int r : spec.block_sizes) product *= factorial_exact(static_cast<unsigned>(r));
            return product;
        }
        case Family::complete_bipartite:
            if (spec.a == spec.b) return factorial_exact(static_cast<unsigned>(spec.a));
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

}  // namespace matchbound
