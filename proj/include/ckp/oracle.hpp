#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckp/problem.hpp"

namespace ckp {

/// Codes a partition can fail on. ok holds iff violations is empty.
struct VerifyReport {
  bool ok = true;
  std::vector<std::pair<std::string, std::string>> violations;
};

/// Checks disjointness, exact sizes, connectivity of each part, terminal
/// membership, and full coverage when the sizes sum to n. Trusts nothing
/// about the input; every failure is reported as data.
VerifyReport verify_partition(const Problem& problem,
                              const std::vector<VertexSet>& parts);

/// Exhaustive backtracking partitioner, independent of the solver (shares
/// only the Graph type). Guarded to n <= 14.
std::optional<std::vector<VertexSet>> brute_force_partition(
    const Problem& problem);

/// Exact vertex connectivity by enumerating deletion sets; n - 1 for
/// complete graphs. Guarded to n <= 10.
int brute_force_connectivity(const Graph& g);

}  // namespace ckp
