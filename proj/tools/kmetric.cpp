// Command-line front end: one verb per library capability, text or JSON output.
#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kmetric/families.hpp"
#include "kmetric/json_io.hpp"

namespace km = kmetric;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw km::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

km::Graph load_graph(const std::string& path, const std::string& format,
                     km::Connectivity req = km::Connectivity::required) {
    std::string text = read_input(path);
    std::string fmt = format;
    if (fmt == "auto") {
        if (path.ends_with(".g6") || path.ends_with(".graph6")) {
            fmt = "graph6";
        } else if (path.ends_with(".el") || path.ends_with(".txt")) {
            fmt = "edgelist";
        } else {
            // edge lists start with a digit or a comment; graph6 bytes are >= '?'
            std::size_t i = text.find_first_not_of(" \t\r\n");
            char c = i == std::string::npos ? '0' : text[i];
            fmt = (c == '#' || (c >= '0' && c <= '9')) ? "edgelist" : "graph6";
        }
    }
    if (fmt == "edgelist") return km::parse_edge_list(text, req);
    if (fmt == "graph6") return km::parse_graph6(text, req);
    throw km::Error("unknown format '" + fmt + "' (expected edgelist or graph6)");
}

void write_graph(const km::Graph& g, const std::string& format) {
    if (format == "edgelist")
        std::cout << km::to_edge_list(g);
    else if (format == "graph6")
        std::cout << km::to_graph6(g) << '\n';
    else
        throw km::Error("unknown output format '" + format + "'");
}

void print_json(const nlohmann::json& j) { std::cout << j.dump() << '\n'; }

void print_vertices(const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) std::cout << vs[i] << " \n"[i + 1 == vs.size()];
    if (vs.empty()) std::cout << '\n';
}

struct CommonArgs {
    std::string input;
    std::string format = "auto";
    bool json = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("input", args.input, "graph file, or - for stdin")->required();
    cmd->add_option("--format", args.format, "edgelist | graph6 (default: infer)")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    cmd->add_flag("--json", args.json, "JSON output");
}

int run_audit(const CommonArgs& args, int guard) {
    km::Graph g = load_graph(args.input, args.format);
    km::AuditOptions opt;
    opt.solve.guard = guard;
    km::AuditReport rep = km::audit(g, opt);
    if (args.json) {
        print_json(km::json_of(rep, g));
    } else {
        int applicable = 0, failures = 0;
        for (const auto& c : rep.checks) {
            const char* tag = !c.applicable ? "  n/a" : c.pass ? " pass" : " FAIL";
            applicable += c.applicable;
            failures += c.applicable && !c.pass;
            std::cout << '[' << tag << "] " << c.claim_id;
            if (c.applicable)
                std::cout << ": " << c.lhs << ' ' << km::relation_symbol(c.relation) << ' '
                          << c.rhs;
            if (!c.note.empty()) std::cout << "  (" << c.note << ')';
            std::cout << '\n';
        }
        std::cout << "k_max " << rep.k_max << "; applicable " << applicable << '/'
                  << rep.checks.size() << "; failures " << failures << '\n';
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-metric generators, bases and dimension of connected graphs"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (default: KMETRIC_THREADS or all cores)");

    CommonArgs kdim_args;
    auto* cmd_kdim = app.add_subcommand("kdim", "largest k admitting a k-metric generator");
    add_common(cmd_kdim, kdim_args);

    CommonArgs dim_args;
    int dim_k = 0, guard = 24;
    bool dim_basis = false, dim_stats = false;
    auto* cmd_dim = app.add_subcommand("dim", "exact k-metric dimension");
    add_common(cmd_dim, dim_args);
    cmd_dim->add_option("--k", dim_k, "level k (default: the dimensional value)");
    cmd_dim->add_flag("--basis", dim_basis, "also print the canonical basis");
    cmd_dim->add_flag("--stats", dim_stats, "include search statistics in JSON");
    cmd_dim->add_option("--guard", guard, "solver size guard (default 24, hard cap 64)");

    CommonArgs basis_args;
    int basis_k = 0, basis_guard = 24;
    auto* cmd_basis = app.add_subcommand("basis", "canonical k-metric basis");
    add_common(cmd_basis, basis_args);
    cmd_basis->add_option("--k", basis_k, "level k (default: the dimensional value)");
    cmd_basis->add_option("--guard", basis_guard, "solver size guard");

    CommonArgs profile_args;
    int profile_guard = 24;
    auto* cmd_profile = app.add_subcommand("profile", "dim_r for every r up to the dimensional value");
    add_common(cmd_profile, profile_args);
    cmd_profile->add_option("--guard", profile_guard, "solver size guard");

    CommonArgs tree_args;
    int tree_r = 0;
    bool tree_basis = false;
    auto* cmd_tree = app.add_subcommand("tree-dim", "closed-form dim_r of a non-path tree");
    add_common(cmd_tree, tree_args);
    cmd_tree->add_option("--r", tree_r, "level r")->required();
    cmd_tree->add_flag("--basis", tree_basis, "also print the constructive generator");

    CommonArgs branch_args;
    auto* cmd_branch = app.add_subcommand("branch", "exterior major vertices, legs and minima");
    add_common(cmd_branch, branch_args);

    CommonArgs audit_args;
    int audit_guard = 24;
    auto* cmd_audit = app.add_subcommand("audit", "check every applicable bound and characterization");
    add_common(cmd_audit, audit_args);
    cmd_audit->add_option("--guard", audit_guard, "solver size guard");

    std::vector<std::string> gen_tokens;
    std::string gen_to = "edgelist";
    auto* cmd_gen = app.add_subcommand("gen", "generate a named graph family");
    cmd_gen->add_option("spec", gen_tokens,
                        "family and parameters, e.g.: path 6 | wheel 5 | spider 3 2 2 2 | "
                        "cartesian_product path 2 path 3 | figure_fixture 2")
        ->required()
        ->expected(-1);
    cmd_gen->add_option("--to", gen_to, "edgelist | graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    CommonArgs convert_args;
    std::string convert_to;
    auto* cmd_convert = app.add_subcommand("convert", "re-encode a graph file");
    cmd_convert->add_option("input", convert_args.input, "graph file, or - for stdin")->required();
    cmd_convert->add_option("--format", convert_args.format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    cmd_convert->add_option("--to", convert_to, "edgelist | graph6")
        ->required()
        ->check(CLI::IsMember({"edgelist", "graph6"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (threads == 0)
        if (const char* env = std::getenv("KMETRIC_THREADS")) threads = std::atoi(env);
    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (cmd_kdim->parsed()) {
            km::Graph g = load_graph(kdim_args.input, kdim_args.format);
            int k = km::dimensional_k(km::pair_profile(km::all_pairs_distances(g)));
            if (kdim_args.json)
                print_json({{"k_max", k}});
            else
                std::cout << k << '\n';
            return 0;
        }
        if (cmd_dim->parsed() || cmd_basis->parsed()) {
            bool basis_verb = cmd_basis->parsed();
            const CommonArgs& args = basis_verb ? basis_args : dim_args;
            int k = basis_verb ? basis_k : dim_k;
            km::Graph g = load_graph(args.input, args.format);
            if (k == 0) {
                k = km::dimensional_k(km::pair_profile(km::all_pairs_distances(g)));
                std::cerr << "note: --k not given, using the dimensional value k=" << k << '\n';
            }
            km::SolveOptions opt;
            opt.guard = basis_verb ? basis_guard : guard;
            km::SolveReport rep = km::dim_k_exact(g, k, opt);
            bool with_basis = basis_verb || dim_basis;
            if (args.json) {
                print_json(km::json_of(rep, with_basis, !basis_verb && dim_stats));
            } else if (basis_verb) {
                print_vertices(rep.basis);
            } else {
                std::cout << rep.dim << '\n';
                if (with_basis) print_vertices(rep.basis);
            }
            return 0;
        }
        if (cmd_profile->parsed()) {
            km::Graph g = load_graph(profile_args.input, profile_args.format);
            km::SolveOptions opt;
            opt.guard = profile_guard;
            km::DimProfile prof = km::dim_profile(g, opt);
            if (profile_args.json) {
                print_json(km::json_of(prof));
            } else {
                std::cout << "k_max " << prof.k_max << '\n';
                std::cout << "dims";
                for (int d : prof.dims) std::cout << ' ' << d;
                std::cout << '\n';
            }
            return 0;
        }
        if (cmd_tree->parsed()) {
            km::Graph g = load_graph(tree_args.input, tree_args.format);
            int maxdeg = 0;
            for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
            km::TreeDimResult res;
            if (g.edge_count() == g.n - 1 && maxdeg <= 2 && g.n >= 2) {
                // paths route to the closed path formula
                res.dim = km::dim_k_path(g.n, tree_r);
                res.basis = km::path_basis(g.n, tree_r);
            } else {
                res = km::dim_r_tree(g, tree_r);
            }
            if (tree_args.json) {
                nlohmann::json j{{"r", tree_r}, {"dim", res.dim}};
                if (tree_basis) j["basis"] = res.basis;
                print_json(j);
            } else {
                std::cout << res.dim << '\n';
                if (tree_basis) print_vertices(res.basis);
            }
            return 0;
        }
        if (cmd_branch->parsed()) {
            km::Graph g = load_graph(branch_args.input, branch_args.format);
            km::BranchStructure bs = km::branch_structure(g, km::all_pairs_distances(g));
            if (branch_args.json) {
                print_json(km::json_of(bs));
            } else {
                for (const auto& b : bs.majors) {
                    std::cout << "major " << b.vertex << ": ter=" << b.terminal_degree
                              << " l=" << b.min_leg_length << " zeta=" << b.min_leg_pair_sum
                              << " terminals";
                    for (const auto& leg : b.legs)
                        std::cout << ' ' << leg.leaf << "(len " << leg.length << ')';
                    std::cout << '\n';
                }
                std::cout << "mu " << bs.total_terminal_degree << '\n';
                if (bs.min_leg_pair_sum)
                    std::cout << "zeta " << *bs.min_leg_pair_sum << '\n';
                else
                    std::cout << "zeta none\n";
            }
            return 0;
        }
        if (cmd_audit->parsed()) return run_audit(audit_args, audit_guard);
        if (cmd_gen->parsed()) {
            std::size_t pos = 0;
            km::FamilySpec spec = km::parse_family_spec(gen_tokens, pos);
            if (pos != gen_tokens.size())
                throw km::Error("unused parameters after family spec");
            write_graph(km::generate(spec), gen_to);
            return 0;
        }
        if (cmd_convert->parsed()) {
            km::Graph g = load_graph(convert_args.input, convert_args.format,
                                     km::Connectivity::required);
            write_graph(g, convert_to);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
