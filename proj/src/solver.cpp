#include "kmetric/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace kmetric {

namespace {

struct Context {
    DistanceMatrix dm;
    PairProfile pp;
    BranchStructure bs;
    TwinPartition tp;
    int k_max = 0;
    bool is_path = false;
    bool is_tree = false;
};

Context make_context(const Graph& g) {
    Context ctx;
    ctx.dm = all_pairs_distances(g);
    ctx.pp = pair_profile(ctx.dm);
    ctx.bs = branch_structure(g, ctx.dm);
    ctx.tp = twin_partition(g);
    ctx.k_max = dimensional_k(ctx.pp);
    int maxdeg = 0;
    for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    ctx.is_tree = g.edge_count() == g.n - 1;
    ctx.is_path = ctx.is_tree && maxdeg <= 2;
    return ctx;
}

int lower_bound_in(const Context& ctx, int r) {
    int lb = r;
    if (!ctx.is_path) lb = std::max(lb, r + 1);
    if (!ctx.bs.majors.empty() && r <= ctx.k_max) {
        int sum = 0;
        for (const auto& b : ctx.bs.majors) sum += branch_contribution(b, r);
        lb = std::max(lb, sum);
    }
    if (r == 2) lb = std::max(lb, ctx.tp.non_singleton_total());
    if (r == ctx.k_max) {
        auto forced = forced_vertices(ctx.pp, r);
        lb = std::max(lb, bits::popcount(forced.data(), ctx.pp.words));
    }
    return lb;
}

// Exact minimum-cardinality multicover over single-word vertex sets: find the
// smallest S with |S & set| >= k for every pair set, then the lexicographically
// least such S at that size. Vertices forced into every solution are seeded.
class MulticoverSearch {
public:
    MulticoverSearch(int n, int k, const std::vector<std::uint64_t>& all_sets,
                     std::uint64_t forced)
        : n_(n), k_(k), forced_(forced) {
        all_mask_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        // keep constraints not already met by the forced seed, then drop any
        // set that contains another kept set (its constraint is implied)
        std::vector<std::uint64_t> live;
        for (std::uint64_t s : all_sets)
            if (std::popcount(s & forced_) < k_) live.push_back(s);
        std::sort(live.begin(), live.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (std::uint64_t s : live) {
            bool implied = false;
            for (std::uint64_t p : sets_)
                if ((p & ~s) == 0) {
                    implied = true;
                    break;
                }
            if (!implied) sets_.push_back(s);
        }
        counts_.resize(sets_.size());

        std::vector<int> freq(n_, 0);
        for (std::uint64_t s : sets_)
            for (int v = 0; v < n_; ++v)
                if ((s >> v) & 1) ++freq[v];
        freq_order_.resize(n_);
        for (int v = 0; v < n_; ++v) freq_order_[v] = v;
        std::stable_sort(freq_order_.begin(), freq_order_.end(),
                         [&](int a, int b) { return freq[a] > freq[b]; });
    }

    // minimum feasible size >= floor_size, with the canonical solution
    void run(int floor_size) {
        int t = std::max(floor_size, std::popcount(forced_));
        for (;; ++t) {
            if (t > n_) throw std::logic_error("multicover search exhausted all sizes");
            reset_counts();
            if (feasible(all_mask_ & ~forced_, t - std::popcount(forced_))) break;
        }
        size_ = t;
        reset_counts();
        solution_ = bits_of(forced_);
        if (!lexicographic(0, t - std::popcount(forced_)))
            throw std::logic_error("canonical extraction failed at a feasible size");
        std::sort(solution_.begin(), solution_.end());
    }

    int size() const { return size_; }
    const std::vector<int>& solution() const { return solution_; }
    long long nodes() const { return nodes_; }

private:
    static std::vector<int> bits_of(std::uint64_t m) {
        std::vector<int> out;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }

    void reset_counts() {
        for (std::size_t p = 0; p < sets_.size(); ++p)
            counts_[p] = std::popcount(sets_[p] & forced_);
    }

    void bump(int v, int dir) {
        for (std::size_t p = 0; p < sets_.size(); ++p)
            if ((sets_[p] >> v) & 1) counts_[p] += dir;
    }

    bool feasible(std::uint64_t allowed, int slots) {
        ++nodes_;
        int maxdef = 0, branch = -1, best_slack = std::numeric_limits<int>::max();
        for (std::size_t p = 0; p < sets_.size(); ++p) {
            int def = k_ - counts_[p];
            if (def <= 0) continue;
            int avail = std::popcount(sets_[p] & allowed);
            if (avail < def) return false;
            maxdef = std::max(maxdef, def);
            int slack = avail - def;
            if (slack < best_slack) {
                best_slack = slack;
                branch = static_cast<int>(p);
            }
        }
        if (maxdef == 0) return true;  // any padding keeps a generator a generator
        if (maxdef > slots) return false;
        std::uint64_t cands = sets_[branch] & allowed;
        for (int v : freq_order_) {
            std::uint64_t b = std::uint64_t{1} << v;
            if (!(cands & b)) continue;
            allowed &= ~b;  // later branches must not revisit v
            bump(v, +1);
            bool ok = feasible(allowed, slots - 1);
            bump(v, -1);
            if (ok) return true;
        }
        return false;
    }

    std::uint64_t suffix_mask(int start) const {
        if (start >= n_) return 0;
        return all_mask_ & ~((std::uint64_t{1} << start) - 1) & ~forced_;
    }

    // combinations in increasing index order: the first completion found is
    // the lexicographically least solution of this size
    bool lexicographic(int start, int slots) {
        ++nodes_;
        std::uint64_t future = suffix_mask(start);
        int maxdef = 0;
        for (std::size_t p = 0; p < sets_.size(); ++p) {
            int def = k_ - counts_[p];
            if (def <= 0) continue;
            if (std::popcount(sets_[p] & future) < def) return false;
            maxdef = std::max(maxdef, def);
        }
        if (maxdef > slots) return false;
        if (std::popcount(future) < slots) return false;
        if (maxdef == 0) {
            for (int v = start; slots > 0; ++v)
                if ((forced_ >> v & 1) == 0) {
                    solution_.push_back(v);
                    --slots;
                }
            return true;
        }
        for (int v = start; v < n_; ++v) {
            if ((forced_ >> v) & 1) continue;
            bump(v, +1);
            solution_.push_back(v);
            if (lexicographic(v + 1, slots - 1)) return true;
            solution_.pop_back();
            bump(v, -1);
        }
        return false;
    }

    int n_, k_;
    std::uint64_t forced_, all_mask_;
    std::vector<std::uint64_t> sets_;
    std::vector<int> counts_;
    std::vector<int> freq_order_;
    std::vector<int> solution_;
    int size_ = 0;
    long long nodes_ = 0;
};

void check_guard(const Graph& g, const Context& ctx, const SolveOptions& opt) {
    int guard = std::min(opt.guard, kSolverHardCap);
    if (g.n > guard) {
        std::string msg = "exact solver guard exceeded (n=" + std::to_string(g.n) +
                          " > " + std::to_string(guard) + ")";
        if (ctx.is_tree && !ctx.is_path)
            msg += "; the input is a tree, use the closed form (tree-dim)";
        else if (g.n <= kSolverHardCap)
            msg += "; raise the guard to search anyway";
        throw Error(msg);
    }
}

SolveReport solve_level(const Graph& g, const Context& ctx, int k, int floor_size) {
    SolveReport rep;
    rep.k = k;

    int words = ctx.pp.words;  // == 1 under the solver cap
    std::vector<std::uint64_t> sets(ctx.pp.sizes.size());
    for (std::size_t p = 0; p < sets.size(); ++p) sets[p] = *ctx.pp.set_of(static_cast<int>(p));
    (void)words;

    std::uint64_t forced = forced_vertices(ctx.pp, k)[0];
    rep.forced_count = std::popcount(forced);
    rep.lower_bound_used = std::max({lower_bound_in(ctx, k), rep.forced_count, floor_size});

    MulticoverSearch search(g.n, k, sets, forced);
    search.run(rep.lower_bound_used);
    rep.dim = search.size();
    rep.basis = search.solution();
    rep.nodes_explored = search.nodes();

    if (!is_k_metric_generator(ctx.pp, rep.basis, k).ok)
        throw std::logic_error("solver produced a non-generator basis");
    return rep;
}

void check_k(const Context& ctx, int k) {
    if (k < 1) throw Error("k must be positive");
    if (k > ctx.k_max)
        throw Error("no k-metric generator exists: k=" + std::to_string(k) +
                    " exceeds the dimensional value " + std::to_string(ctx.k_max));
}

}  // namespace

int lower_bound(const Graph& g, int r) {
    if (r < 1) throw Error("r must be positive");
    return lower_bound_in(make_context(g), r);
}

SolveReport dim_k_exact(const Graph& g, int k, const SolveOptions& opt) {
    Context ctx = make_context(g);
    check_guard(g, ctx, opt);
    check_k(ctx, k);
    return solve_level(g, ctx, k, 0);
}

DimProfile dim_profile(const Graph& g, const SolveOptions& opt) {
    Context ctx = make_context(g);
    check_guard(g, ctx, opt);
    DimProfile prof;
    prof.k_max = ctx.k_max;
    int floor_size = 0;
    for (int r = 1; r <= ctx.k_max; ++r) {
        SolveReport rep = solve_level(g, ctx, r, floor_size);
        prof.dims.push_back(rep.dim);
        floor_size = rep.dim + 1;  // strict monotony across levels
    }
    return prof;
}

}  // namespace kmetric
