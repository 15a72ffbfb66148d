//
// gcensus - counting finite groupoids that satisfy equational identities
//

#include "gcensus/census.hpp"

#include <algorithm>  // for max, set_union
#include <iterator>   // for back_inserter
#include <exception>  // for exception_ptr
#include <set>        // for set
#include <thread>     // for thread, hardware_concurrency

#include "gcensus/program.hpp"  // for CompiledIdentity, evaluate_ground

namespace gcensus {

  using clock_type = std::chrono::steady_clock;

  std::string to_string(Engine e) {
    return e == Engine::exhaustive ? "exhaustive" : "backtracking";
  }

  namespace {
    std::uint64_t ipow(size_t base, size_t exp) {
      std::uint64_t r = 1;
      while (exp-- > 0) {
        r *= base;
      }
      return r;
    }

    void validate(CensusQuery const& q) {
      if (q.order == 0) {
        throw Error("the order must be at least 1");
      }
      if (q.identities.empty()) {
        throw Error("a census needs at least one identity");
      }
      size_t limit = q.engine == Engine::exhaustive ? max_exhaustive_order
                                                    : max_backtracking_order;
      if (q.order > limit) {
        throw Error("order " + std::to_string(q.order)
                    + " is too large for the " + to_string(q.engine)
                    + " engine (at most " + std::to_string(limit) + ")");
      }
      if (q.partition) {
        auto const& p = *q.partition;
        if (p.shard_count == 0 || p.shard_index >= p.shard_count) {
          throw Error("invalid shard " + std::to_string(p.shard_index) + "/"
                      + std::to_string(p.shard_count));
        }
        if (p.prefix_cells > q.order * q.order) {
          throw Error("prefix_cells " + std::to_string(p.prefix_cells)
                      + " exceeds the number of cells "
                      + std::to_string(q.order * q.order));
        }
      }
    }

    // Unpartitioned queries behave as the single shard 0 of 1 with an empty
    // prefix.
    Partition effective_partition(CensusQuery const& q) {
      return q.partition.value_or(Partition{0, 0, 1});
    }

    void finish_iso(IdentityCount& c, std::set<index_type> const& classes,
                    CensusQuery const& q) {
      if (!q.want_iso_classes && !q.want_representatives) {
        return;
      }
      c.canonical_indices.assign(classes.begin(), classes.end());
      c.iso_class_count = classes.size();
      if (q.want_representatives) {
        std::vector<Groupoid> reps;
        for (auto k : c.canonical_indices) {
          reps.push_back(from_index(q.order, k));
        }
        c.representatives = std::move(reps);
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Exhaustive engine
    ////////////////////////////////////////////////////////////////////////

    CensusResult exhaustive(CensusQuery const& q) {
      auto const   start = clock_type::now();
      size_t const n     = q.order;
      size_t const cells = n * n;
      auto const   part  = effective_partition(q);
      bool const   iso   = q.want_iso_classes || q.want_representatives;

      std::vector<CompiledIdentity> compiled;
      for (auto const& id : q.identities) {
        compiled.emplace_back(id);
      }
      std::vector<std::uint64_t>        totals(compiled.size(), 0);
      std::vector<std::set<index_type>> classes(compiled.size());

      std::uint64_t const prefixes = ipow(n, part.prefix_cells);
      std::uint64_t const suffixes = ipow(n, cells - part.prefix_cells);
      std::uint64_t       scanned  = 0;

      std::vector<element_type> table(cells);
      for (std::uint64_t p = part.shard_index; p < prefixes;
           p += part.shard_count) {
        std::uint64_t rest = p;
        for (size_t i = part.prefix_cells; i-- > 0;) {
          table[i] = static_cast<element_type>(rest % n);
          rest /= n;
        }
        std::fill(table.begin() + part.prefix_cells, table.end(), 0);

        for (std::uint64_t j = 0; j < suffixes; ++j) {
          for (size_t i = 0; i < compiled.size(); ++i) {
            if (compiled[i].holds(table, n)) {
              ++totals[i];
              if (iso) {
                classes[i].insert(canonical_index(Groupoid(n, table)));
              }
            }
          }
          ++scanned;
          for (size_t c = cells; c-- > part.prefix_cells;) {
            if (++table[c] < n) {
              break;
            }
            table[c] = 0;
          }
        }
      }

      CensusResult result;
      result.order          = n;
      result.engine         = Engine::exhaustive;
      result.tables_scanned = scanned;
      result.elapsed        = clock_type::now() - start;
      for (size_t i = 0; i < compiled.size(); ++i) {
        IdentityCount c(q.identities[i]);
        c.total          = totals[i];
        c.elapsed        = result.elapsed;
        c.tables_scanned = scanned;
        finish_iso(c, classes[i], q);
        result.counts.push_back(std::move(c));
      }
      return result;
    }

    ////////////////////////////////////////////////////////////////////////
    // Backtracking engine
    ////////////////////////////////////////////////////////////////////////

    class Search {
     public:
      Search(CensusQuery const& q, Identity const& id)
          : _n(q.order),
            _cells(q.order * q.order),
            _part(effective_partition(q)),
            _iso(q.want_iso_classes || q.want_representatives),
            _instances(CompiledIdentity(id).instances(q.order)),
            _watch(_cells),
            _table(_cells, PartialGroupoid::unfilled) {
        if (q.time_budget) {
          _deadline = clock_type::now() + *q.time_budget;
        }
      }

      void run() {
        for (std::uint32_t i = 0; i < _instances.size(); ++i) {
          auto r = check(i);
          if (r.known && r.value == 0) {
            return;  // refuted before any cell is filled
          } else if (!r.known) {
            _watch[r.value].push_back(i);
          }
        }
        if (_part.prefix_cells == 0 && _part.shard_index != 0) {
          return;
        }
        dfs(0, 0);
      }

      std::uint64_t               count   = 0;
      std::uint64_t               nodes   = 0;
      bool                        stopped = false;
      std::set<index_type>        classes;

     private:
      // known && value == 1 for satisfied, known && value == 0 for refuted,
      // otherwise value is the cell the instance is waiting on.
      PartialValue check(std::uint32_t i) const {
        auto const& inst = _instances[i];
        auto        l    = evaluate_ground(inst.lhs, _table, _n);
        if (!l.known) {
          return l;
        }
        auto r = evaluate_ground(inst.rhs, _table, _n);
        if (!r.known) {
          return r;
        }
        return {true, l.value == r.value ? 1u : 0u};
      }

      void dfs(size_t depth, std::uint64_t prefix) {
        if (depth == _cells) {
          ++count;
          if (_iso) {
            classes.insert(canonical_index(Groupoid(_n, _table)));
          }
          return;
        }
        auto const& waiting = _watch[depth];
        for (size_t v = 0; v < _n && !stopped; ++v) {
          if ((++nodes & 0xFFFF) == 0 && _deadline
              && clock_type::now() > *_deadline) {
            stopped = true;
            break;
          }
          std::uint64_t next = depth < _part.prefix_cells ? prefix * _n + v
                                                          : prefix;
          if (depth + 1 == _part.prefix_cells
              && next % _part.shard_count != _part.shard_index) {
            continue;
          }
          _table[depth] = static_cast<element_type>(v);
          size_t const mark = _trail.size();
          bool         ok   = true;
          for (size_t w = 0; w < waiting.size(); ++w) {
            auto r = check(waiting[w]);
            if (!r.known) {
              _watch[r.value].push_back(waiting[w]);
              _trail.push_back(r.value);
            } else if (r.value == 0) {
              ok = false;
              break;
            }
          }
          if (ok) {
            dfs(depth + 1, next);
          }
          while (_trail.size() > mark) {
            _watch[_trail.back()].pop_back();
            _trail.pop_back();
          }
        }
        _table[depth] = PartialGroupoid::unfilled;
      }

      size_t                                    _n;
      size_t                                    _cells;
      Partition                                 _part;
      bool                                      _iso;
      std::vector<CompiledIdentity::Instance>   _instances;
      std::vector<std::vector<std::uint32_t>>   _watch;
      std::vector<std::uint32_t>                _trail;
      std::vector<element_type>                 _table;
      std::optional<clock_type::time_point>     _deadline;
    };

    CensusResult backtracking(CensusQuery const& q) {
      auto const   start = clock_type::now();
      CensusResult result;
      result.order  = q.order;
      result.engine = Engine::backtracking;
      for (auto const& id : q.identities) {
        auto const t0 = clock_type::now();
        Search     search(q, id);
        search.run();
        IdentityCount c(id);
        c.total          = search.count;
        c.nodes_visited  = search.nodes;
        c.tables_scanned = search.count;
        c.elapsed        = clock_type::now() - t0;
        finish_iso(c, search.classes, q);
        result.tables_scanned += search.count;
        result.complete = result.complete && !search.stopped;
        result.counts.push_back(std::move(c));
      }
      result.elapsed = clock_type::now() - start;
      return result;
    }
  }  // namespace

  size_t default_prefix_cells(size_t n, size_t shards) {
    size_t        k = 1;
    std::uint64_t p = n;
    while (p < shards && k < n * n) {
      p *= n;
      ++k;
    }
    return k;
  }

  CensusResult partitioned_count(CensusQuery const& q) {
    validate(q);
    return q.engine == Engine::exhaustive ? exhaustive(q) : backtracking(q);
  }

  CensusResult count_all(size_t n, std::vector<Identity> const& ids) {
    CensusQuery q;
    q.order      = n;
    q.identities = ids;
    return partitioned_count(q);
  }

  CensusResult count_iso_classes(size_t n, Identity const& id) {
    CensusQuery q;
    q.order                = n;
    q.identities           = {id};
    q.want_iso_classes     = true;
    q.want_representatives = true;
    return partitioned_count(q);
  }

  CensusResult backtracking_count(size_t n, Identity const& id) {
    CensusQuery q;
    q.order      = n;
    q.identities = {id};
    q.engine     = Engine::backtracking;
    return partitioned_count(q);
  }

  CensusResult merge(std::vector<CensusResult> const& shards) {
    if (shards.empty()) {
      throw Error("nothing to merge");
    }
    CensusResult result = shards.front();
    result.elapsed      = std::chrono::nanoseconds{0};
    result.tables_scanned = 0;
    for (auto& c : result.counts) {
      c = IdentityCount(c.identity);
    }
    bool iso  = false;
    bool reps = false;
    for (auto const& s : shards) {
      if (s.order != result.order || s.engine != result.engine
          || s.counts.size() != result.counts.size()) {
        throw Error("cannot merge results of different queries");
      }
      result.elapsed += s.elapsed;
      result.tables_scanned += s.tables_scanned;
      result.complete = result.complete && s.complete;
      for (size_t i = 0; i < s.counts.size(); ++i) {
        auto&       into = result.counts[i];
        auto const& from = s.counts[i];
        if (!(into.identity == from.identity)) {
          throw Error("cannot merge results of different identities");
        }
        into.total += from.total;
        into.elapsed += from.elapsed;
        into.tables_scanned += from.tables_scanned;
        into.nodes_visited += from.nodes_visited;
        if (from.iso_class_count) {
          iso = true;
          std::vector<index_type> merged;
          std::set_union(into.canonical_indices.begin(),
                         into.canonical_indices.end(),
                         from.canonical_indices.begin(),
                         from.canonical_indices.end(),
                         std::back_inserter(merged));
          into.canonical_indices = std::move(merged);
        }
        reps = reps || from.representatives.has_value();
      }
    }
    for (auto& c : result.counts) {
      if (iso) {
        c.iso_class_count = c.canonical_indices.size();
      }
      if (reps) {
        std::vector<Groupoid> r;
        for (auto k : c.canonical_indices) {
          r.push_back(from_index(result.order, k));
        }
        c.representatives = std::move(r);
      }
    }
    return result;
  }

  CensusResult run_census(CensusQuery const& q, size_t jobs) {
    validate(q);
    if (q.partition) {
      return partitioned_count(q);
    }
    if (jobs == 0) {
      jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    if (jobs == 1) {
      return partitioned_count(q);
    }
    auto const start = clock_type::now();
    // More prefixes than shards, so that striding spreads uneven subtrees.
    size_t const prefix = default_prefix_cells(q.order, 4 * jobs);

    std::vector<CensusResult> results(jobs);
    std::vector<std::thread>  workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (size_t s = 0; s < jobs; ++s) {
      workers.emplace_back([&, s] {
        try {
          CensusQuery shard = q;
          shard.partition   = Partition{prefix, s, jobs};
          results[s]        = partitioned_count(shard);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) {
      w.join();
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    auto result    = merge(results);
    result.elapsed = clock_type::now() - start;
    return result;
  }

  bool duality_check(size_t n, Identity const& id) {
    auto r = count_all(n, {id, mirror(id)});
    return r.counts[0].total == r.counts[1].total;
  }

}  // namespace gcensus
