#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "atfp/preprocess.hpp"

namespace atfp {

/// splitmix64 of (seed, trial); trial seeds do not depend on worker count.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// Trial instance: model cycles interval, permutation, cobipartite,
/// rejection; 4 <= n <= 10; 1 <= k <= 3.
Instance fuzz_instance(std::uint64_t seed, int trial);

/// Why solve_idp and the exhaustive oracle disagree on inst, or nullopt.
/// A solver exception counts as a disagreement.
std::optional<std::string> idp_disagreement(const Instance& inst);

/// Greedily deletes vertices, then pairs, while `still_bad` holds.
Instance shrink_instance(Instance inst, const std::function<bool(const Instance&)>& still_bad);

struct FuzzReport {
    int trials = 0;
    int yes = 0;
    /// Lowest failing trial index.
    std::optional<int> failed_trial;
    std::string detail;
    std::optional<Instance> reproducer;
};

/// Runs trials 0..trials-1, `workers` at a time; stops handing out trials
/// after a failure and reports the lowest failing index.
FuzzReport run_fuzz(int trials, std::uint64_t seed, int workers = 1);

}  // namespace atfp
