#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atfp/idp_dp.hpp"
#include "atfp/preprocess.hpp"

namespace atfp {

// Instance text: header "n m k", then m lines "u v", then k lines "s t".
// Lines whose first character is '#' and blank lines are skipped.

/// Throws ParseError (1-based line and column) on malformed text, including
/// out-of-range vertices and self-loops in edge lines. Pair lines are checked
/// with validate_instance afterwards (InvalidInstance).
Instance parse_instance(std::string_view text);

/// Canonical form: edges sorted with u < v, pairs in input order, single
/// spaces, newline-terminated.
std::string serialize_instance(const Instance& inst);

/// Solution text: one path per line, vertices separated by spaces.
std::vector<VertexSeq> parse_paths(std::string_view text);
std::string serialize_paths(const std::vector<VertexSeq>& paths);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

struct ResultReport {
    std::string solver;
    std::uint64_t seed = 1;
    bool yes = false;
    std::vector<VertexSeq> paths;
    SolveStats stats;
    /// Present only when timing was requested, so default reports stay
    /// byte-identical across runs.
    std::optional<double> wall_ms;
};

/// Stable key order: answer, paths, stats, solver, seed.
std::string report_json(const ResultReport& r);
std::string report_text(const ResultReport& r, bool emit_paths);

}  // namespace atfp
