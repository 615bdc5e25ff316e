#pragma once

#include "matchbound/bigcount.hpp"
#include "matchbound/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matchbound {

// The pinned generator behind every randomized family. State advances by
// the 64-bit golden ratio; output is the mixed state (splitmix64). Fixed
// here, not delegated to std::mt19937, so that a seed reproduces the
// same graphs byte for byte on every platform and toolchain.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // 53-bit uniform draw in [0, 1).
    double next_unit();
    // The stateless finalizer.
    static std::uint64_t mix(std::uint64_t z);

private:
    std::uint64_t state_;
};

// Stream seed for sample `index` of a campaign seeded with `seed`:
// mix(seed + (index + 1) * golden). Distinct indices give independent
// streams; index 0 differs from the plain seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

Graph complete_graph(int m);
Graph complete_bipartite(int a, int b);
// Disjoint union of complete bipartite blocks K_{r,r} for each r in
// block_sizes (each r >= 1).
Graph bipartite_union(const std::vector<int>& block_sizes);
// Each of the C(n,2) pairs, in lexicographic order, consumes exactly one
// uniform draw and becomes an edge iff draw < p.
Graph random_graph(int n, double p, std::uint64_t seed);
// Balanced bipartite on parts {0..n-1} and {n..2n-1}; pairs (i, n+j) in
// lexicographic order, one draw each.
Graph random_bipartite(int n, double p, std::uint64_t seed);

enum class Family {
    complete,
    complete_bipartite,
    bipartite_union,
    erdos_renyi,
    random_bipartite,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
bool family_is_random(Family f);

struct CampaignSpec {
    Family family = Family::complete;
    int n = 0;                     // complete/erdos_renyi: vertices;
                                   // random_bipartite: per side
    int a = 0, b = 0;              // complete_bipartite part sizes
    std::vector<int> block_sizes;  // bipartite_union
    double p = 0.0;
    std::uint64_t seed = 0;
    int samples = 1;
    bool operator==(const CampaignSpec&) const = default;
};

// The graph for sample `index` (random families draw from
// derive_seed(spec.seed, index); deterministic families ignore index).
Graph campaign_graph(const CampaignSpec& spec, int index);
std::string campaign_graph_id(const CampaignSpec& spec, int index);

// Exact matching count for families where the degree bound is attained
// with equality (unions of K_{r,r}); nullopt otherwise.
std::optional<BigCount> expected_tight_count(const CampaignSpec& spec);

}  // namespace matchbound
