#pragma once

#include <cstdint>
#include <optional>

#include "kmetric/bits.hpp"
#include "kmetric/distance.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

/// For every unordered vertex pair (x,y), x<y, the set of vertices z with
/// d(x,z) != d(y,z), stored as a word-packed bitset. Pairs are indexed in
/// lexicographic order so witnesses and golden outputs are deterministic.
struct PairProfile {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> sets;  // pair_count * words
    std::vector<int> sizes;

    static int pair_count(int n) { return n * (n - 1) / 2; }
    static int pair_index(int x, int y, int n) {
        return x * n - x * (x + 1) / 2 + (y - x - 1);
    }
    static std::pair<int, int> pair_at(int idx, int n);

    const std::uint64_t* set_of(int pidx) const {
        return sets.data() + static_cast<std::size_t>(pidx) * words;
    }
    bool distinguishes(int pidx, int z) const { return bits::test(set_of(pidx), z); }
};

inline constexpr int kPairProfileCap = 1024;  // n*(n-1)/2 bitsets of n bits

PairProfile pair_profile(const DistanceMatrix& dm);         // OpenMP over pairs
PairProfile pair_profile_serial(const DistanceMatrix& dm);  // reference kernel

/// The largest k for which a k-metric generator exists: min over pairs of |D(x,y)|.
int dimensional_k(const PairProfile& pp);

/// Union of the distinctive sets of pairs with |D(x,y)| == k, as bitset words.
/// Non-empty only when k is the dimensional value (every |D| is >= that value);
/// the literal union is returned for any k.
std::vector<std::uint64_t> forced_vertices(const PairProfile& pp, int k);

enum class TwinKind { singleton, false_twin, true_twin };

struct TwinClass {
    std::vector<int> members;  // sorted
    TwinKind kind = TwinKind::singleton;
};

struct TwinPartition {
    std::vector<TwinClass> classes;  // ordered by smallest member

    bool has_twins() const;
    bool all_twins() const;          // every vertex in a non-singleton class
    int non_singleton_total() const; // sum of |U_i| over non-singleton classes
};

TwinPartition twin_partition(const Graph& g);

struct GeneratorVerdict {
    bool ok = false;
    std::optional<std::pair<int, int>> witness;  // lexicographically first failing pair
    int achieved = 0;                            // |S ∩ D(x,y)| for the witness
};

/// Checks |S ∩ D(x,y)| >= k for every pair.
GeneratorVerdict is_k_metric_generator(const PairProfile& pp, const std::vector<int>& s, int k);

}  // namespace kmetric
