//
// gcensus - counting finite groupoids that satisfy equational identities
//

// This file declares the two counting engines:
//
// * the exhaustive engine decodes every table index 0..n^(n*n)-1 and tests
//   each identity on it (orders up to 3);
//
// * the backtracking engine fills cells in row-major order and, after each
//   assignment, re-tests those ground instances of the identity that were
//   waiting on the cell just filled. An instance whose two sides are both
//   known and differ prunes the branch (orders up to 4).
//
// Both engines can restrict themselves to one shard of the search space: the
// tables whose first prefix_cells cells, read as a big-endian base-n number,
// are congruent to shard_index modulo shard_count. Summing over all shards
// gives the unsharded count, whatever the number of shards.

#ifndef GCENSUS_CENSUS_HPP_
#define GCENSUS_CENSUS_HPP_

#include <chrono>    // for nanoseconds, milliseconds
#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "gcensus/groupoid.hpp"  // for Groupoid, index_type
#include "gcensus/term.hpp"      // for Identity

namespace gcensus {

  constexpr size_t max_exhaustive_order   = 3;
  constexpr size_t max_backtracking_order = 4;

  enum class Engine { exhaustive, backtracking };

  std::string to_string(Engine e);

  struct Partition {
    size_t prefix_cells = 1;
    size_t shard_index  = 0;
    size_t shard_count  = 1;
  };

  struct CensusQuery {
    size_t                                   order = 1;
    std::vector<Identity>                    identities;
    Engine                                   engine = Engine::exhaustive;
    bool                                     want_iso_classes      = false;
    bool                                     want_representatives  = false;
    std::optional<Partition>                 partition;
    // Backtracking only; the search stops when it runs out and the result
    // is marked incomplete.
    std::optional<std::chrono::milliseconds> time_budget;
  };

  struct IdentityCount {
    explicit IdentityCount(Identity id) : identity(std::move(id)) {}

    Identity                   identity;
    std::uint64_t              total = 0;
    std::optional<std::uint64_t> iso_class_count;
    // Sorted canonical indices of the satisfying isomorphism classes.
    std::vector<index_type>                canonical_indices;
    std::optional<std::vector<Groupoid>>   representatives;
    std::chrono::nanoseconds               elapsed{0};
    std::uint64_t                          tables_scanned = 0;
    std::uint64_t                          nodes_visited  = 0;
  };

  struct CensusResult {
    size_t                     order = 0;
    Engine                     engine = Engine::exhaustive;
    std::vector<IdentityCount> counts;
    std::chrono::nanoseconds   elapsed{0};
    std::uint64_t              tables_scanned = 0;
    bool                       complete       = true;
  };

  // Exhaustive sweep over all tables, testing every identity on each table
  // with no short-circuit between identities. Throws Error when n is larger
  // than max_exhaustive_order.
  CensusResult count_all(size_t n, std::vector<Identity> const& ids);

  // Exhaustive sweep that also collects the isomorphism classes and their
  // canonical representatives.
  CensusResult count_iso_classes(size_t n, Identity const& id);

  CensusResult backtracking_count(size_t n, Identity const& id);

  // Runs the query, restricted to its partition if it has one. Throws Error
  // for an invalid query.
  CensusResult partitioned_count(CensusQuery const& q);

  // Splits an unpartitioned query into shards and runs them on up to jobs
  // threads (0 means the hardware concurrency). If the query already names a
  // shard, only that shard is run. The result does not depend on jobs.
  CensusResult run_census(CensusQuery const& q, size_t jobs = 0);

  // Sums per-shard results of the same query. Throws Error if they do not
  // line up.
  CensusResult merge(std::vector<CensusResult> const& shards);

  // Whether id and its mirror image have the same number of satisfying
  // tables of order n.
  bool duality_check(size_t n, Identity const& id);

  // Smallest k >= 1 with n^k >= shards, capped at n * n.
  size_t default_prefix_cells(size_t n, size_t shards);

}  // namespace gcensus

#endif  // GCENSUS_CENSUS_HPP_
