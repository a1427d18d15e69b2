#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckp/graph.hpp"
#include "ckp/problem.hpp"

namespace ckp {

/// A solver state: k disjoint connected parts (part i holds terminal i), one
/// cascade per non-growing part, and the free set (the complement of all
/// parts). `grow` names the part currently being enlarged; it never carries
/// a cascade.
///
/// A cascade is a sequence of distinct non-terminal vertices of its part in
/// which each entry lies outside the previous entry's reservoir, so each
/// entry blocks the next one from the terminal.
struct Configuration {
  int grow = 0;
  std::vector<VertexSet> parts;
  std::vector<std::vector<int>> cascades;
  VertexSet free_set;

  bool operator==(const Configuration&) const = default;
};

/// Builds a configuration and enforces the structural invariants: parts
/// disjoint, connected, terminal membership, cascade entries distinct
/// non-terminal members of their part, and the cascade separation property.
/// The free set is derived. Throws contract_error on violation.
Configuration make_configuration(const Problem& problem, int grow,
                                 std::vector<VertexSet> parts,
                                 std::vector<std::vector<int>> cascades);

/// Convenience: all cascades null.
Configuration make_configuration(const Problem& problem, int grow,
                                 std::vector<VertexSet> parts);

/// Cascade-vertex ranks; a vertex absent from the table has undefined rank.
/// Rank 1 entries neighbor the growing part; rank r entries neighbor the
/// reservoir of a rank r-1 cascade vertex in a different part.
using RankTable = std::map<int, int>;

/// Entry r-1 holds the number of vertices covered by reservoirs of rank-r
/// cascade vertices. Compared lexicographically.
using PotentialVector = std::vector<int>;

enum class PotentialOrder { less, equal, greater };

/// An edge from the free set into a reservoir. `owners` is every cascade
/// vertex whose reservoir contains b; `rank` the minimum owner rank.
struct Bridge {
  int a = -1;  // free-set end
  int b = -1;  // reservoir end
  VertexSet owners;
  int rank = 0;

  bool operator==(const Bridge&) const = default;
};

struct ValidityReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// An edge usable to extend a cascade: a lies in the growing part or in a
/// reservoir of another part, and b is a non-terminal, reservoir-free vertex
/// of part `part` that is not the last cascade entry.
struct CascadeEdge {
  int a = -1;
  int b = -1;
  int part = -1;
};

/// Vertices of part `part` minus v still reachable from the part's terminal.
/// v must belong to the part; the terminal's reservoir is empty.
VertexSet reservoir(const Problem& problem, const Configuration& cfg, int part,
                    int v);

/// Reservoirs of every cascade vertex, keyed by vertex.
std::map<int, VertexSet> all_reservoirs(const Problem& problem,
                                        const Configuration& cfg);

/// Least-fixpoint rank assignment. Undefined ranks are simply absent.
RankTable compute_ranks(const Problem& problem, const Configuration& cfg);

/// Valid iff every cascade vertex has a defined rank and ranks strictly
/// increase along each cascade.
ValidityReport is_valid(const Problem& problem, const Configuration& cfg);

/// Requires a valid configuration (contract_error otherwise). Rho_r counts
/// the union of same-rank reservoirs, so overlapping reservoirs within a
/// part are not double counted.
PotentialVector potential(const Problem& problem, const Configuration& cfg,
                          const RankTable& ranks);

/// Lexicographic comparison after right-padding with zeros.
PotentialOrder compare_potential(const PotentialVector& p,
                                 const PotentialVector& q);

const char* potential_order_name(PotentialOrder order);

/// All bridges, sorted by (rank, a, b).
std::vector<Bridge> find_bridges(const Problem& problem,
                                 const Configuration& cfg,
                                 const RankTable& ranks);

/// Deterministically the smallest qualifying (part, b, a) triple, if any.
/// The reservoir clause on a requires an owner in a part different from b's,
/// matching the rank rule that will give b its rank.
std::optional<CascadeEdge> find_cascade_edge(const Problem& problem,
                                             const Configuration& cfg,
                                             const RankTable& ranks);

/// Repeatedly recomputes ranks and truncates every cascade at its first
/// entry whose rank is undefined or fails to increase, until the
/// configuration is valid. Idempotent on valid configurations.
Configuration prune_undefined(const Problem& problem, Configuration cfg);

/// Engine-state invariants beyond validity: nonempty free set and, for each
/// cascade, every prefix (terminal included) inside each entry's reservoir.
/// Throws internal_error with a state dump on violation.
void check_engine_state(const Problem& problem, const Configuration& cfg);

/// Human-readable state dump used by internal_error messages.
std::string dump_configuration(const Problem& problem,
                               const Configuration& cfg);

/// Index of the part containing v, or -1.
int part_containing(const Configuration& cfg, int v);

}  // namespace ckp
