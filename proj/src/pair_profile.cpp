#include "kmetric/pair_profile.hpp"

#include <algorithm>
#include <numeric>

namespace kmetric {

std::pair<int, int> PairProfile::pair_at(int idx, int n) {
    int x = 0;
    while (pair_index(x, n - 1, n) < idx) ++x;
    int y = x + 1 + (idx - pair_index(x, x + 1, n));
    return {x, y};
}

namespace {

void fill_pair(const DistanceMatrix& dm, int x, int y, std::uint64_t* dest, int& size) {
    const std::uint16_t* rx = dm.row(x);
    const std::uint16_t* ry = dm.row(y);
    int count = 0;
    for (int z = 0; z < dm.n; ++z)
        if (rx[z] != ry[z]) {
            bits::set(dest, z);
            ++count;
        }
    size = count;
}

PairProfile make_profile(const DistanceMatrix& dm, bool parallel) {
    if (dm.n < 2) throw Error("pair profile requires at least two vertices");
    if (dm.n > kPairProfileCap)
        throw Error("graph too large for a dense pair profile (n=" + std::to_string(dm.n) +
                    ", cap " + std::to_string(kPairProfileCap) + ")");
    PairProfile pp;
    pp.n = dm.n;
    pp.words = bits::words_for(dm.n);
    int pairs = PairProfile::pair_count(dm.n);
    pp.sets.assign(static_cast<std::size_t>(pairs) * pp.words, 0);
    pp.sizes.assign(pairs, 0);
    // round-robin over x: row x holds n-1-x pairs, so block scheduling would
    // leave the first thread with most of the work
#pragma omp parallel for schedule(static, 1) if (parallel)
    for (int x = 0; x < dm.n - 1; ++x) {
        int base = PairProfile::pair_index(x, x + 1, dm.n);
        for (int y = x + 1; y < dm.n; ++y) {
            int pidx = base + (y - x - 1);
            fill_pair(dm, x, y, pp.sets.data() + static_cast<std::size_t>(pidx) * pp.words,
                      pp.sizes[pidx]);
        }
    }
    return pp;
}

}  // namespace

PairProfile pair_profile(const DistanceMatrix& dm) { return make_profile(dm, true); }

PairProfile pair_profile_serial(const DistanceMatrix& dm) { return make_profile(dm, false); }

int dimensional_k(const PairProfile& pp) {
    if (pp.n < 2) throw Error("dimensional value undefined for a single vertex");
    return *std::min_element(pp.sizes.begin(), pp.sizes.end());
}

std::vector<std::uint64_t> forced_vertices(const PairProfile& pp, int k) {
    std::vector<std::uint64_t> out(pp.words, 0);
    for (std::size_t p = 0; p < pp.sizes.size(); ++p)
        if (pp.sizes[p] == k)
            bits::or_assign(out.data(), pp.set_of(static_cast<int>(p)), pp.words);
    return out;
}

bool TwinPartition::has_twins() const {
    return std::any_of(classes.begin(), classes.end(),
                       [](const TwinClass& c) { return c.members.size() > 1; });
}

bool TwinPartition::all_twins() const {
    return std::all_of(classes.begin(), classes.end(),
                       [](const TwinClass& c) { return c.members.size() > 1; });
}

int TwinPartition::non_singleton_total() const {
    int total = 0;
    for (const auto& c : classes)
        if (c.members.size() > 1) total += static_cast<int>(c.members.size());
    return total;
}

TwinPartition twin_partition(const Graph& g) {
    int words = bits::words_for(g.n);
    std::vector<std::uint64_t> open(static_cast<std::size_t>(g.n) * words, 0);
    std::vector<std::uint64_t> closed;
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) bits::set(open.data() + static_cast<std::size_t>(v) * words, u);
    closed = open;
    for (int v = 0; v < g.n; ++v)
        bits::set(closed.data() + static_cast<std::size_t>(v) * words, v);

    auto open_of = [&](int v) { return open.data() + static_cast<std::size_t>(v) * words; };
    auto closed_of = [&](int v) { return closed.data() + static_cast<std::size_t>(v) * words; };

    // union-find over the twin relation
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y)
            if (bits::equal(open_of(x), open_of(y), words) ||
                bits::equal(closed_of(x), closed_of(y), words)) {
                parent[find(y)] = find(x);
            }

    std::vector<std::vector<int>> groups(g.n);
    for (int v = 0; v < g.n; ++v) groups[find(v)].push_back(v);

    TwinPartition tp;
    for (int r = 0; r < g.n; ++r) {
        if (groups[r].empty()) continue;
        TwinClass cls;
        cls.members = groups[r];
        if (cls.members.size() == 1) {
            cls.kind = TwinKind::singleton;
        } else {
            // a twin class is either an independent set (open neighbourhoods
            // agree) or a clique (closed neighbourhoods agree); mixed classes
            // cannot occur under the twin equivalence
            int a = cls.members[0], b = cls.members[1];
            bool closed_kind = bits::equal(closed_of(a), closed_of(b), words);
            cls.kind = closed_kind ? TwinKind::true_twin : TwinKind::false_twin;
            for (std::size_t i = 1; i < cls.members.size(); ++i) {
                int m = cls.members[i];
                bool pair_ok = closed_kind ? bits::equal(closed_of(a), closed_of(m), words)
                                           : bits::equal(open_of(a), open_of(m), words);
                if (!pair_ok) throw std::logic_error("mixed twin equivalence class");
            }
        }
        tp.classes.push_back(std::move(cls));
    }
    return tp;
}

GeneratorVerdict is_k_metric_generator(const PairProfile& pp, const std::vector<int>& s, int k) {
    std::vector<std::uint64_t> sm = bits::from_vertices(s, pp.n);
    int pairs = PairProfile::pair_count(pp.n);
    for (int p = 0; p < pairs; ++p) {
        int hit = bits::and_popcount(sm.data(), pp.set_of(p), pp.words);
        if (hit < k) {
            GeneratorVerdict v;
            v.ok = false;
            v.witness = PairProfile::pair_at(p, pp.n);
            v.achieved = hit;
            return v;
        }
    }
    return GeneratorVerdict{true, std::nullopt, 0};
}

}  // namespace kmetric
