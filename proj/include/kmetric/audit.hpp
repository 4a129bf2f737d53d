#pragma once

#include <string>

#include "kmetric/solver.hpp"

namespace kmetric {

enum class Relation { le, ge, eq, iff };

struct CheckResult {
    std::string claim_id;
    bool applicable = false;
    long long lhs = 0;
    long long rhs = 0;
    Relation relation = Relation::eq;
    bool pass = true;  // vacuously true when not applicable
    std::string note;
};

struct AuditReport {
    int n = 0;
    int k_max = 0;
    std::vector<int> dims;  // profile actually used by the checks
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

/// How the graph was constructed, when known. Product, join and block-graph
/// claims quantify over constructions, so they are only checked when the
/// factor structure is supplied.
enum class BuiltAs { unknown, join, cartesian, strong, generalized_tree };

struct AuditOptions {
    SolveOptions solve;
    BuiltAs built_as = BuiltAs::unknown;
    std::optional<Graph> factor_left;
    std::optional<Graph> factor_right;
    /// Trees and paths larger than this use the closed-form profile instead
    /// of the exact solver; the solver cross-check claims then report
    /// non-applicable.
    int closed_form_threshold = 10;
};

/// Evaluates every registered claim on g, marking each applicable or not.
/// A failing applicable check means an implementation bug somewhere.
AuditReport audit(const Graph& g, const AuditOptions& opt = {});

const char* relation_symbol(Relation r);

}  // namespace kmetric
