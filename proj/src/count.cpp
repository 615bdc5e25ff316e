#include "matchbound/count.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace matchbound {

namespace {

BigCount from_u128(unsigned __int128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    BigCount r = hi;
    r <<= 64;
    r += lo;
    return r;
}

void check_even(int n, const char* what) {
    if (n % 2 != 0) throw std::invalid_argument(std::string(what) + ": odd vertex count");
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kEnumerationLimit) {
        throw std::invalid_argument("enumerate_matchings: vertex count " + std::to_string(n) +
                                    " exceeds the enumeration limit " +
                                    std::to_string(kEnumerationLimit));
    }
    std::vector<Matching> result;
    if (n % 2 != 0) return result;
    std::vector<std::uint64_t> nb(n);
    for (int v = 0; v < n; ++v) nb[v] = g.neighbor_mask64(v);
    Matching current;
    const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    auto recurse = [&](auto&& self, std::uint64_t unmatched) -> void {
        if (unmatched == 0) {
            result.push_back(current);
            return;
        }
        const int i = std::countr_zero(unmatched);
        const std::uint64_t rest = unmatched & ~(std::uint64_t{1} << i);
        std::uint64_t candidates = nb[i] & rest;
        while (candidates != 0) {
            const int j = std::countr_zero(candidates);
            candidates &= candidates - 1;
            current.pairs.emplace_back(i, j);
            self(self, rest & ~(std::uint64_t{1} << j));
            current.pairs.pop_back();
        }
    };
    recurse(recurse, full);
    std::sort(result.begin(), result.end(),
              [](const Matching& a, const Matching& b) { return a.pairs < b.pairs; });
    return result;
}

BigCount count_perfect_matchings(const Graph& g, int limit) {
    if (limit < 0 || limit > kHardCountLimit) {
        throw std::invalid_argument("count_perfect_matchings: limit " + std::to_string(limit) +
                                    " outside [0, " + std::to_string(kHardCountLimit) + "]");
    }
    const int n = g.vertex_count();
    if (n > limit) {
        throw std::invalid_argument("count_perfect_matchings: vertex count " + std::to_string(n) +
                                    " exceeds the limit " + std::to_string(limit));
    }
    if (n % 2 != 0) return 0;
    if (n == 0) return 1;
    std::vector<std::uint64_t> nb(n);
    for (int v = 0; v < n; ++v) nb[v] = g.neighbor_mask64(v);
    std::unordered_map<std::uint64_t, BigCount> memo;
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (~std::uint64_t{0} >> (64 - n));
    auto recurse = [&](auto&& self, std::uint64_t unmatched) -> const BigCount& {
        static const BigCount one = 1;
        if (unmatched == 0) return one;
        if (auto it = memo.find(unmatched); it != memo.end()) return it->second;
        const int i = std::countr_zero(unmatched);
        const std::uint64_t rest = unmatched & ~(std::uint64_t{1} << i);
        BigCount total = 0;
        std::uint64_t candidates = nb[i] & rest;
        while (candidates != 0) {
            const int j = std::countr_zero(candidates);
            candidates &= candidates - 1;
            total += self(self, rest & ~(std::uint64_t{1} << j));
        }
        return memo.emplace(unmatched, std::move(total)).first->second;
    };
    return recurse(recurse, full);
}

BigCount hafnian_expand(const Graph& g, int pivot, int limit) {
    const int n = g.vertex_count();
    check_even(n, "hafnian_expand");
    if (n == 0) throw std::invalid_argument("hafnian_expand: empty graph has no row to expand");
    if (pivot < 0 || pivot >= n) {
        throw std::invalid_argument("hafnian_expand: pivot " + std::to_string(pivot) +
                                    " out of range [0, " + std::to_string(n) + ")");
    }
    BigCount total = 0;
    const auto& nb = g.neighbors(pivot);
    for (auto v = nb.find_first(); v != boost::dynamic_bitset<>::npos; v = nb.find_next(v)) {
        total += count_perfect_matchings(minor(g, pivot, static_cast<int>(v)), limit);
    }
    return total;
}

BigCount permanent(const ZeroOneMatrix& m) {
    if (!m.square()) throw std::invalid_argument("permanent: matrix must be square");
    const int n = m.rows();
    if (n > kPermanentLimit) {
        throw std::invalid_argument("permanent: order " + std::to_string(n) +
                                    " exceeds the limit " + std::to_string(kPermanentLimit));
    }
    if (n == 0) return 1;
    // Inclusion-exclusion over column subsets S:
    //   perm = sum_S (-1)^(n-|S|) prod_i (row sum of A restricted to S).
    // Subsets walk in Gray-code order so each step updates one column.
    // A single product fits well inside 128 bits (max n^n = 24^24).
    std::vector<std::int32_t> row_sums(n, 0);
    BigCount plus = 0, minus = 0;
    std::uint32_t previous = 0;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t k = 1; k < end; ++k) {
        const std::uint32_t gray = k ^ (k >> 1);
        const std::uint32_t flipped = gray ^ previous;
        previous = gray;
        const int column = std::countr_zero(flipped);
        const int delta = (gray & flipped) != 0 ? 1 : -1;
        for (int i = 0; i < n; ++i) row_sums[i] += delta * m.at(i, column);
        unsigned __int128 product = 1;
        for (int i = 0; i < n && product != 0; ++i) {
            product *= static_cast<unsigned __int128>(static_cast<std::uint32_t>(row_sums[i]));
        }
        if (product == 0) continue;
        if (((n - std::popcount(gray)) & 1) == 0) {
            plus += from_u128(product);
        } else {
            minus += from_u128(product);
        }
    }
    return plus - minus;
}

BigCount permanent_naive(const ZeroOneMatrix& m) {
    if (!m.square()) throw std::invalid_argument("permanent_naive: matrix must be square");
    const int n = m.rows();
    if (n > kNaivePermanentLimit) {
        throw std::invalid_argument("permanent_naive: order " + std::to_string(n) +
                                    " exceeds the limit " + std::to_string(kNaivePermanentLimit));
    }
    if (n == 0) return 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        int product = 1;
        for (int i = 0; i < n && product != 0; ++i) product *= m.at(i, perm[i]);
        total += product;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigCount count_via_permanent(const Graph& g) {
    const auto parts = bipartition(g);
    if (!parts) throw std::invalid_argument("count_via_permanent: graph is not bipartite");
    if (parts->left.size() != parts->right.size()) {
        throw std::invalid_argument(
            "count_via_permanent: parts have sizes " + std::to_string(parts->left.size()) +
            " and " + std::to_string(parts->right.size()) +
            "; an unbalanced bipartite graph has no perfect matching");
    }
    return permanent(incidence_matrix(g, *parts));
}

double weighted_hafnian(const std::vector<std::vector<double>>& m) {
    const int n = static_cast<int>(m.size());
    check_even(n, "weighted_hafnian");
    if (n > kWeightedHafnianLimit) {
        throw std::invalid_argument("weighted_hafnian: order " + std::to_string(n) +
                                    " exceeds the limit " + std::to_string(kWeightedHafnianLimit));
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) {
            throw std::invalid_argument("weighted_hafnian: matrix must be square");
        }
        for (int j = i + 1; j < n; ++j) {
            if (m[i][j] != m[j][i]) {
                throw std::invalid_argument("weighted_hafnian: matrix must be symmetric");
            }
        }
    }
    if (n == 0) return 1.0;
    const std::uint32_t full = ~std::uint32_t{0} >> (32 - n);
    auto recurse = [&](auto&& self, std::uint32_t alive) -> double {
        if (alive == 0) return 1.0;
        const int i = std::countr_zero(alive);
        const std::uint32_t rest = alive & ~(std::uint32_t{1} << i);
        double sum = 0.0;
        std::uint32_t candidates = rest;
        while (candidates != 0) {
            const int j = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (m[i][j] != 0.0) {
                sum += m[i][j] * self(self, rest & ~(std::uint32_t{1} << j));
            }
        }
        return sum;
    };
    return recurse(recurse, full);
}

}  // namespace matchbound
