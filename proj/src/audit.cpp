#include "kmetric/audit.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace kmetric {

bool AuditReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::le: return "<=";
        case Relation::ge: return ">=";
        case Relation::eq: return "=";
        case Relation::iff: return "<=>";
    }
    return "?";
}

namespace {

bool holds(long long lhs, Relation rel, long long rhs) {
    switch (rel) {
        case Relation::le: return lhs <= rhs;
        case Relation::ge: return lhs >= rhs;
        case Relation::eq: return lhs == rhs;
        case Relation::iff: return (lhs != 0) == (rhs != 0);
    }
    return false;
}

std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> cuts;
    if (g.n < 3) return cuts;
    std::vector<char> seen(g.n);
    for (int c = 0; c < g.n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[c] = 1;
        int start = c == 0 ? 1 : 0;
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached < g.n - 1) cuts.push_back(c);
    }
    return cuts;
}

bool is_extreme_vertex(const Graph& g, int v) {
    const auto& nb = g.adj[v];
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) return false;
    return true;
}

struct Auditor {
    const Graph& g;
    const AuditOptions& opt;
    DistanceMatrix dm;
    PairProfile pp;
    BranchStructure bs;
    TwinPartition tp;
    StructuralStats st;
    int k_max = 0;
    std::vector<int> dims;
    bool dims_from_solver = true;
    AuditReport report;

    Auditor(const Graph& graph, const AuditOptions& options) : g(graph), opt(options) {
        if (g.n < 2) throw Error("audit requires at least two vertices");
        dm = all_pairs_distances(g);
        pp = pair_profile(dm);
        bs = branch_structure(g, dm);
        tp = twin_partition(g);
        st = structural_stats(g, dm);
        k_max = dimensional_k(pp);
        compute_dims();
        report.n = g.n;
        report.k_max = k_max;
        report.dims = dims;
    }

    void compute_dims() {
        bool closed_form = st.is_tree && g.n > opt.closed_form_threshold;
        if (!closed_form) {
            DimProfile prof = dim_profile(g, opt.solve);
            dims = prof.dims;
            return;
        }
        dims_from_solver = false;
        if (st.is_path) {
            for (int r = 1; r <= std::min(k_max, g.n - 1); ++r)
                dims.push_back(dim_k_path(g.n, r));
        } else {
            int zeta = bs.min_leg_pair_sum.value();
            for (int r = 1; r <= zeta; ++r) dims.push_back(dim_r_tree(g, r).dim);
        }
    }

    int dim_r(int r) const { return dims[r - 1]; }
    bool have_dim(int r) const { return r >= 1 && r <= static_cast<int>(dims.size()); }

    void check(const std::string& id, long long lhs, Relation rel, long long rhs,
               std::string note = "") {
        report.checks.push_back({id, true, lhs, rhs, rel, holds(lhs, rel, rhs), std::move(note)});
    }

    void skip(const std::string& id, std::string why) {
        report.checks.push_back({id, false, 0, 0, Relation::eq, true, std::move(why)});
    }

    int forced_size(int k) const {
        auto f = forced_vertices(pp, k);
        return bits::popcount(f.data(), pp.words);
    }

    int branch_sum(int r) const {
        int s = 0;
        for (const auto& b : bs.majors) s += branch_contribution(b, r);
        return s;
    }

    void run();
};

void Auditor::run() {
    const int n = g.n;

    // --- range of the dimensional value ---
    check("k_lower_2", k_max, Relation::ge, 2);
    if (n >= 3)
        check("k_upper_n_minus_1", k_max, Relation::le, n - 1);
    else
        skip("k_upper_n_minus_1", "needs n >= 3");
    check("k_eq_n_iff_complete_pair", k_max == n, Relation::iff, n == 2);
    check("twin_iff_k2", k_max == 2, Relation::iff, tp.has_twins());

    if (st.is_tree && n >= 4) {
        bool support2 = false;
        for (int v = 0; v < n && !support2; ++v) {
            int leaves = 0;
            for (int u : g.adj[v]) leaves += g.degree(u) == 1;
            support2 = leaves >= 2;
        }
        check("tree_support_k2", k_max == 2, Relation::iff, support2);
    } else {
        skip("tree_support_k2", st.is_tree ? "needs n >= 4" : "not a tree");
    }

    if (opt.built_as == BuiltAs::generalized_tree) {
        bool pair_at_cut = false;
        for (int c : cut_vertices(g)) {
            int extremes = 0;
            for (int u : g.adj[c]) extremes += is_extreme_vertex(g, u);
            if (extremes >= 2) pair_at_cut = true;
        }
        check("gen_tree_k2", k_max == 2, Relation::iff, pair_at_cut);
    } else {
        skip("gen_tree_k2", "not a constructed generalized tree");
    }

    if (opt.built_as == BuiltAs::cartesian && opt.factor_left && opt.factor_right &&
        ((opt.factor_left->n >= 2 && opt.factor_right->n >= 3) ||
         (opt.factor_left->n >= 3 && opt.factor_right->n >= 2))) {
        check("cartesian_k_ge_3", k_max, Relation::ge, 3);
    } else {
        skip("cartesian_k_ge_3", "not a constructed Cartesian product with |G|>=2, |H|>=3");
    }

    if (st.is_cycle)
        check("cycle_k", k_max, Relation::eq, n % 2 == 1 ? n - 1 : n - 2);
    else
        skip("cycle_k", "not a cycle");

    if (st.is_path && n >= 3)
        check("path_k", k_max, Relation::eq, n - 1);
    else
        skip("path_k", st.is_path ? "needs n >= 3" : "not a path");

    if (n >= 3)
        check("k_n_minus_1_iff_path_or_odd_cycle", k_max == n - 1, Relation::iff,
              st.is_path || (st.is_cycle && n % 2 == 1));
    else
        skip("k_n_minus_1_iff_path_or_odd_cycle", "needs n >= 3");

    // --- upper bounds on the dimensional value ---
    if (bs.min_leg_pair_sum)
        check("zeta_upper", k_max, Relation::le, *bs.min_leg_pair_sum);
    else
        skip("zeta_upper", "no exterior major vertex with two terminals");

    if (st.clique_number < n)
        check("clique_upper", k_max, Relation::le, n - st.clique_number + 1);
    else
        skip("clique_upper", "complete graph");

    if (st.min_degree >= 2 && st.max_degree >= 3 && st.girth && *st.girth >= 4) {
        long long sum = 0, pw = 1;
        for (int i = 0; i <= *st.girth / 2 - 2; ++i) {
            sum += pw;
            pw *= st.min_degree - 1;
        }
        check("girth_upper", k_max, Relation::le, n - 1 - (st.max_degree - 2) * sum);
    } else {
        skip("girth_upper", "needs min degree >= 2, max degree >= 3 and girth >= 4");
    }

    // --- profile shape ---
    if (dims.size() >= 2) {
        long long worst = std::numeric_limits<long long>::max();
        for (std::size_t i = 0; i + 1 < dims.size(); ++i)
            worst = std::min<long long>(worst, dims[i + 1] - dims[i]);
        check("monotony", worst, Relation::ge, 1);
    } else {
        skip("monotony", "profile has a single level");
    }

    {
        long long slack = std::numeric_limits<long long>::max();
        for (int r = 1; have_dim(r); ++r)
            slack = std::min<long long>(slack, dim_r(r) - (dim_r(1) + (r - 1)));
        check("dim_r_ge_dim1_shift", slack, Relation::ge, 0);
    }

    if (k_max >= 2 && have_dim(1)) {
        long long worst = 0;
        for (int r = 1; r < k_max && have_dim(r); ++r)
            worst = std::max<long long>(worst, dim_r(r));
        check("dim_r_below_n", worst, Relation::le, n - 1);
    } else {
        skip("dim_r_below_n", "no level below the dimensional value");
    }

    if (!st.is_path) {
        long long slack = std::numeric_limits<long long>::max();
        for (int r = 1; have_dim(r); ++r)
            slack = std::min<long long>(slack, dim_r(r) - (r + 1));
        check("dim_r_ge_r_plus_1", slack, Relation::ge, 0);
    } else {
        skip("dim_r_ge_r_plus_1", "path graph");
    }

    if (have_dim(2))
        check("dim2_eq_2_iff_path", dim_r(2) == 2, Relation::iff, st.is_path);
    else
        skip("dim2_eq_2_iff_path", "dim_2 not computed");

    // --- forced set ---
    if (have_dim(k_max)) {
        check("forced_set_lower", dim_r(k_max), Relation::ge, forced_size(k_max));
        check("dimk_n_iff_forced_all", dim_r(k_max) == n, Relation::iff,
              forced_size(k_max) == n);
    } else {
        skip("forced_set_lower", "dim at the dimensional value not computed");
        skip("dimk_n_iff_forced_all", "dim at the dimensional value not computed");
    }

    if (have_dim(2))
        check("dim2_n_iff_all_twins", dim_r(2) == n, Relation::iff, tp.all_twins());
    else
        skip("dim2_n_iff_all_twins", "dim_2 not computed");

    // --- constructions ---
    bool join_ok = opt.built_as == BuiltAs::join && opt.factor_left && opt.factor_right &&
                   opt.factor_left->n >= 2 && opt.factor_right->n >= 2 &&
                   twin_partition(*opt.factor_left).all_twins() &&
                   twin_partition(*opt.factor_right).all_twins() && have_dim(2);
    if (join_ok)
        check("join_all_twins_dim2", dim_r(2), Relation::eq,
              opt.factor_left->n + opt.factor_right->n);
    else
        skip("join_all_twins_dim2", "not a constructed join of all-twin factors");

    if (have_dim(2))
        check("twin_class_lower", dim_r(2), Relation::ge, tp.non_singleton_total());
    else
        skip("twin_class_lower", "dim_2 not computed");

    bool strong_ok = opt.built_as == BuiltAs::strong && opt.factor_left && opt.factor_right &&
                     opt.factor_left->n >= 2 && opt.factor_right->n >= 2 &&
                     is_connected(*opt.factor_left) && is_connected(*opt.factor_right) &&
                     have_dim(2);
    if (strong_ok) {
        TwinPartition ltp = twin_partition(*opt.factor_left);
        long long true_twin_total = 0;
        bool all_true = true;
        for (const auto& cls : ltp.classes) {
            if (cls.kind == TwinKind::true_twin)
                true_twin_total += static_cast<long long>(cls.members.size());
            else
                all_true = false;
        }
        check("strong_true_twin_lower", dim_r(2), Relation::ge,
              true_twin_total * opt.factor_right->n);
        if (all_true)
            check("strong_all_true_twins_eq", dim_r(2), Relation::eq,
                  static_cast<long long>(opt.factor_left->n) * opt.factor_right->n);
        else
            skip("strong_all_true_twins_eq", "left factor has non-true-twin vertices");
    } else {
        skip("strong_true_twin_lower", "not a constructed strong product of connected factors");
        skip("strong_all_true_twins_eq", "not a constructed strong product of connected factors");
    }

    // --- branch-structure lower bounds ---
    if (!bs.majors.empty()) {
        long long slack = std::numeric_limits<long long>::max();
        for (int r = 1; have_dim(r); ++r)
            slack = std::min<long long>(slack, dim_r(r) - branch_sum(r));
        check("branch_contribution_lower", slack, Relation::ge, 0);
    } else {
        skip("branch_contribution_lower", "no exterior major vertex with two terminals");
    }

    if (have_dim(2))
        check("mu2_lower", dim_r(2), Relation::ge, bs.total_terminal_degree);
    else
        skip("mu2_lower", "dim_2 not computed");

    if (k_max >= 3 && have_dim(3))
        check("mu3_lower", dim_r(3), Relation::ge,
              2 * bs.total_terminal_degree - static_cast<int>(bs.majors.size()));
    else
        skip("mu3_lower", "needs a 3-metric dimensional graph");

    // --- trees ---
    bool proper_tree = st.is_tree && !st.is_path;
    if (proper_tree)
        check("tree_k_eq_zeta", k_max, Relation::eq, *bs.min_leg_pair_sum);
    else
        skip("tree_k_eq_zeta", "not a tree, or a path");

    if (proper_tree && dims_from_solver) {
        int zeta = *bs.min_leg_pair_sum;
        long long mismatch = 0;
        for (int r = 1; r <= zeta && have_dim(r); ++r)
            mismatch += std::abs(dim_r(r) - branch_sum(r));
        check("tree_dim_r_solver_eq", mismatch, Relation::eq, 0);
    } else {
        skip("tree_dim_r_solver_eq",
             proper_tree ? "closed-form profile in use" : "not a tree, or a path");
    }

    if (proper_tree) {
        int zeta = *bs.min_leg_pair_sum;
        long long valid = 0;
        for (int r = 1; r <= zeta; ++r) {
            TreeDimResult w = dim_r_tree(g, r);
            if (w.dim == branch_sum(r) &&
                static_cast<int>(w.basis.size()) == w.dim &&
                is_k_metric_generator(pp, w.basis, r).ok)
                ++valid;
        }
        check("tree_witness_valid", valid, Relation::eq, zeta);
    } else {
        skip("tree_witness_valid", "not a tree, or a path");
    }

    if (proper_tree && have_dim(2))
        check("tree_dim2_eq_mu", dim_r(2), Relation::eq, bs.total_terminal_degree);
    else
        skip("tree_dim2_eq_mu", "not a tree, or a path");

    if (proper_tree && *bs.min_leg_pair_sum >= 3 && have_dim(3))
        check("tree_dim3_eq_2mu_minus_m", dim_r(3), Relation::eq,
              2 * bs.total_terminal_degree - static_cast<int>(bs.majors.size()));
    else
        skip("tree_dim3_eq_2mu_minus_m", "needs a tree with two-leg sum >= 3");

    bool tauk_shape = proper_tree;
    if (tauk_shape)
        for (const auto& b : bs.majors)
            tauk_shape = tauk_shape && b.terminal_degree == 2 && b.min_leg_pair_sum == k_max;
    if (tauk_shape && have_dim(k_max))
        check("tree_forced_eq", dim_r(k_max), Relation::eq, forced_size(k_max));
    else
        skip("tree_forced_eq",
             "needs every major with exactly two terminals and two-leg sum = k");

    if (st.is_path && n >= 3 && dims_from_solver) {
        long long mismatch = 0;
        for (int r = 1; r <= n - 1 && have_dim(r); ++r)
            mismatch += std::abs(dim_r(r) - dim_k_path(n, r));
        check("path_dims_eq_formula", mismatch, Relation::eq, 0);
    } else {
        skip("path_dims_eq_formula",
             st.is_path ? "needs n >= 3 and solver profile" : "not a path");
    }
}

}  // namespace

AuditReport audit(const Graph& g, const AuditOptions& opt) {
    Auditor a(g, opt);
    a.run();
    return std::move(a.report);
}

}  // namespace kmetric
