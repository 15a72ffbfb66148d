//
// gcensus - counting finite groupoids that satisfy equational identities
//

// Acceptance checks. Prints one PASS or FAIL line per criterion, with detail
// lines underneath. Pass criterion numbers as arguments to run a subset.
//
// GCENSUS_ORDER4_BUDGET_MS sets the time budget for the order-4 smoke run
// (default 120000).

#include <chrono>      // for milliseconds
#include <cstdlib>     // for getenv
#include <functional>  // for function
#include <optional>    // for optional
#include <iostream>    // for cout
#include <set>         // for set
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "gcensus/catalog.hpp"
#include "gcensus/census.hpp"
#include "gcensus/fixtures.hpp"
#include "gcensus/groupoid.hpp"
#include "gcensus/report.hpp"

using namespace gcensus;

namespace {

  struct Outcome {
    bool                     pass = true;
    std::vector<std::string> detail;

    void check(bool ok, std::string const& what) {
      pass = pass && ok;
      detail.push_back((ok ? "ok   " : "BAD  ") + what);
    }
  };

  std::string show(std::uint64_t got, std::uint64_t expected) {
    return std::to_string(got) + " (expected " + std::to_string(expected) + ")";
  }

  Identity named(std::string const& key) {
    return find_entry(key)->identity;
  }

  std::vector<Identity> identities(std::vector<CatalogEntry> const& entries) {
    std::vector<Identity> ids;
    for (auto const& e : entries) {
      ids.push_back(e.identity);
    }
    return ids;
  }

  std::uint64_t total(size_t n, Identity const& id) {
    return count_all(n, {id}).counts[0].total;
  }

  // Published counts at order 3 for the 39-row census.
  Outcome published_census() {
    Outcome     o;
    CensusQuery q;
    q.order      = 3;
    q.identities = identities(select_catalog("table1"));
    auto result  = run_census(q, 1);
    auto fixtures = select_fixtures("table1");
    for (size_t i = 0; i < fixtures.size(); ++i) {
      auto const& c = result.counts[i];
      o.check(c.identity.abbrev() == fixtures[i].key
                  && c.total == fixtures[i].expected_total,
              c.identity.abbrev() + " " + show(c.total, fixtures[i].expected_total));
    }
    o.detail.push_back("elapsed "
                       + std::to_string(std::chrono::duration_cast<
                                            std::chrono::milliseconds>(
                                            result.elapsed)
                                            .count())
                       + " ms single-threaded");
    return o;
  }

  // Count, classes and associative representatives at order 2, then the
  // order-3 totals of the identity and its dual.
  Outcome named_fixture(std::string const& key,
                        std::string const& dual,
                        std::uint64_t      total2,
                        std::uint64_t      classes2,
                        std::optional<std::uint64_t> associative2,
                        std::uint64_t      total3) {
    Outcome o;
    auto    r = count_iso_classes(2, named(key)).counts[0];
    o.check(r.total == total2, key + " order 2 total " + show(r.total, total2));
    o.check(r.iso_class_count == classes2,
            key + " order 2 classes " + show(r.iso_class_count.value_or(0), classes2));
    if (associative2) {
      std::uint64_t assoc = 0;
      for (auto const& g : *r.representatives) {
        assoc += is_associative(g);
      }
      o.check(assoc == *associative2,
              key + " associative representatives " + show(assoc, *associative2));
    }
    auto three = count_all(3, {named(key), named(dual)});
    o.check(three.counts[0].total == total3,
            key + " order 3 total " + show(three.counts[0].total, total3));
    o.check(three.counts[1].total == total3,
            dual + " order 3 total " + show(three.counts[1].total, total3));
    return o;
  }

  Outcome displayed_representatives() {
    // The seven order-2 left semimedial tables as printed, 1-based.
    std::string const displayed
        = "order 2\n1 1\n1 1\n"
          "order 2\n1 1\n1 2\n"
          "order 2\n1 1\n2 2\n"
          "order 2\n1 2\n1 2\n"
          "order 2\n1 2\n2 1\n"
          "order 2\n2 1\n2 1\n"
          "order 2\n2 2\n1 1\n";
    Outcome            o;
    std::istringstream is(displayed);
    std::set<index_type> printed;
    for (auto const& g : read_cayley(is)) {
      printed.insert(canonical_index(g));
    }
    auto                 r = count_iso_classes(2, named("LSM")).counts[0];
    std::set<index_type> computed(r.canonical_indices.begin(),
                                  r.canonical_indices.end());
    o.check(printed.size() == 7, "7 distinct classes among the printed tables");
    o.check(printed == computed, "printed classes equal computed classes");
    return o;
  }

  Outcome engine_agreement() {
    Outcome o;
    auto    ids   = identities(catalog());
    size_t  pairs = 0, agree = 0;
    for (size_t n = 2; n <= 3; ++n) {
      auto sweep = count_all(n, ids);
      for (size_t i = 0; i < ids.size(); ++i) {
        auto bt = backtracking_count(n, ids[i]).counts[0].total;
        ++pairs;
        if (bt == sweep.counts[i].total) {
          ++agree;
        } else {
          o.check(false, ids[i].abbrev() + " order " + std::to_string(n)
                             + " backtracking " + show(bt, sweep.counts[i].total));
        }
      }
    }
    o.check(agree == pairs, std::to_string(agree) + " of "
                                + std::to_string(pairs)
                                + " identity-order pairs agree");
    return o;
  }

  Outcome duality() {
    Outcome o;
    size_t  checked = 0;
    for (auto const& e : catalog()) {
      auto const& id = e.identity;
      auto        m  = mirror(id);
      for (size_t n = 2; n <= 3; ++n) {
        auto r = count_all(n, {id, m});
        if (r.counts[0].total != r.counts[1].total) {
          o.check(false, id.abbrev() + " order " + std::to_string(n) + " "
                             + show(r.counts[1].total, r.counts[0].total));
        }
      }
      // opposite maps the models of id onto the models of its mirror.
      std::set<index_type> models, mirrored;
      for (index_type k = 0; k < table_count(2); ++k) {
        auto g = from_index(2, k);
        if (holds(id, g)) {
          models.insert(to_index(opposite(g)));
        }
        if (holds(m, g)) {
          mirrored.insert(k);
        }
      }
      if (models != mirrored) {
        o.check(false, id.abbrev() + " opposite is not a bijection onto the mirror's models");
      }
      ++checked;
    }
    o.check(o.pass, std::to_string(checked) + " identities checked at orders 2 and 3");
    return o;
  }

  Outcome sharding() {
    Outcome     o;
    CensusQuery q;
    q.order      = 3;
    q.identities = {named("SGR"), named("ML"), named("T6")};
    auto whole   = run_census(q, 1);
    for (auto engine : {Engine::exhaustive, Engine::backtracking}) {
      q.engine = engine;
      for (size_t m : {2, 4, 8}) {
        std::vector<std::uint64_t> sums(q.identities.size(), 0);
        for (size_t s = 0; s < m; ++s) {
          auto shard      = q;
          shard.partition = Partition{default_prefix_cells(3, m), s, m};
          auto r          = partitioned_count(shard);
          for (size_t i = 0; i < sums.size(); ++i) {
            sums[i] += r.counts[i].total;
          }
        }
        for (size_t i = 0; i < sums.size(); ++i) {
          o.check(sums[i] == whole.counts[i].total,
                  q.identities[i].abbrev() + " " + to_string(engine) + " "
                      + std::to_string(m) + " shards "
                      + show(sums[i], whole.counts[i].total));
        }
      }
    }
    q.engine    = Engine::exhaustive;
    auto first  = emit_report(make_report(run_census(q, 4), "exhaustive", false),
                              Format::json);
    auto second = emit_report(make_report(run_census(q, 4), "exhaustive", false),
                              Format::json);
    o.check(first == second, "repeated runs are byte-identical");
    return o;
  }

  Outcome sanity_values() {
    Outcome o;
    auto    sgr = total(2, named("SGR"));
    o.check(sgr == 8, "order-2 semigroups " + show(sgr, 8));
    std::uint64_t latin = 0, assoc_comm = 0;
    auto          comm = parse_identity("xy = yx");
    for (index_type k = 0; k < table_count(3); ++k) {
      auto g = from_index(3, k);
      latin += is_quasigroup(g);
      assoc_comm += holds(named("SGR"), g) && holds(comm, g);
    }
    o.check(latin == 12, "order-3 quasigroups " + show(latin, 12));
    o.check(assoc_comm == 63,
            "order-3 associative and commutative " + show(assoc_comm, 63));
    return o;
  }

  Outcome order_four_smoke() {
    Outcome o;
    long    budget = 120000;
    if (char const* env = std::getenv("GCENSUS_ORDER4_BUDGET_MS")) {
      budget = std::atol(env);
    }
    CensusQuery q;
    q.order       = 4;
    q.identities  = {named("LN")};
    q.engine      = Engine::backtracking;
    q.time_budget = std::chrono::milliseconds(budget);
    auto whole    = run_census(q, 1);
    auto sharded  = run_census(q, 4);
    auto ms = [](CensusResult const& r) {
      return std::to_string(
          std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed)
              .count());
    };
    o.check(whole.complete, "unsharded run finished within " + std::to_string(budget)
                                + " ms (took " + ms(whole) + " ms)");
    o.check(sharded.complete, "4-shard run finished (took " + ms(sharded) + " ms)");
    o.check(whole.counts[0].total == sharded.counts[0].total,
            "LN order 4: " + std::to_string(whole.counts[0].total)
                + " unsharded, " + std::to_string(sharded.counts[0].total)
                + " sharded");
    return o;
  }

  struct Criterion {
    int                      number;
    std::string              title;
    std::function<Outcome()> run;
  };

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> const criteria = {
      {1, "39-identity census at order 3 matches the published counts",
       published_census},
      {2, "left semimedial fixtures",
       [] { return named_fixture("LSM", "RSM", 10, 7, 5, 399); }},
      {3, "Cote fixtures",
       [] { return named_fixture("COT", "COTD", 6, 3, 3, 99); }},
      {4, "Manin fixtures",
       [] { return named_fixture("MAN", "MAND", 10, 7, std::nullopt, 167); }},
      {5, "commutative Moufang quasigroup identity fixtures",
       [] { return named_fixture("CMQ", "CMQD", 6, 3, 3, 117); }},
      {6, "left semimedial representatives match the printed tables",
       displayed_representatives},
      {7, "backtracking agrees with the exhaustive engine", engine_agreement},
      {8, "counts are invariant under mirroring", duality},
      {9, "sharded counts are deterministic", sharding},
      {10, "derived sanity values", sanity_values},
      {11, "order-4 smoke run", order_four_smoke},
  };

  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    wanted.insert(std::atoi(argv[i]));
  }

  bool all = true;
  for (auto const& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.number)) {
      continue;
    }
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.number << ". " << c.title
              << '\n';
    for (auto const& d : o.detail) {
      std::cout << "       " << d << '\n';
    }
    std::cout.flush();
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
