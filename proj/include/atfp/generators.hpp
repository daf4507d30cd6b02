#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "atfp/graph.hpp"
#include "atfp/preprocess.hpp"

namespace atfp {

enum class GraphModel { Interval, Permutation, Cobipartite, Rejection };

std::optional<GraphModel> parse_model(const std::string& name);
std::string model_name(GraphModel m);

/// Default seed: ATFP_SEED if set and numeric, else 1.
std::uint64_t default_seed();

/// Random AT-free graph on n vertices from the given family. Rejection
/// sampling draws G(n, p) until no asteroidal triple remains and falls back to
/// the interval model after 10000 tries.
Graph random_atfree_graph(GraphModel model, int n, std::mt19937_64& rng);

/// k distinct unordered pairs with distinct ends, drawn uniformly.
std::vector<TerminalPair> random_pairs(int n, int k, std::mt19937_64& rng);

/// Deterministic per (model, n, k, seed). Requires n >= 2k.
Instance gen_random(GraphModel model, int n, int k, std::uint64_t seed);

/// Interval graph whose intervals march left to right, each overlapping the
/// next `overlap` ones. Connected and path-like.
Graph banded_interval_graph(int n, int overlap);

/// A vertex set of size k drawn uniformly.
VertexSet random_subset(int n, int k, std::mt19937_64& rng);

}  // namespace atfp
