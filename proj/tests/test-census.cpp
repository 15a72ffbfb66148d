//
// gcensus - counting finite groupoids that satisfy equational identities
//

#include <algorithm>  // for is_sorted
#include <map>        // for map
#include <set>        // for set

#include "catch2/catch_amalgamated.hpp"

#include "gcensus/catalog.hpp"
#include "gcensus/census.hpp"
#include "gcensus/exception.hpp"

#include "oracle.hpp"

namespace gcensus {

  namespace {
    // Brute-force counts (tree-walking evaluation over every table), frozen
    // here so the fast engines can be checked against them cheaply.
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> const
        brute_force = {
            {"SGR", {8, 113}},   {"EL", {10, 239}},  {"ML", {9, 196}},
            {"LB", {9, 215}},    {"RB", {9, 215}},   {"CL", {10, 209}},
            {"LC", {9, 220}},    {"RC", {9, 220}},   {"MN", {8, 350}},
            {"RN", {12, 932}},   {"LN", {12, 932}},  {"CM", {8, 297}},
            {"AG", {7, 91}},     {"CC", {8, 169}},   {"CA", {6, 110}},
            {"CN", {9, 472}},    {"CP", {8, 744}},   {"C1", {8, 219}},
            {"C2", {6, 153}},    {"L1", {6, 117}},   {"CD", {8, 219}},
            {"L2", {7, 157}},    {"L3", {7, 157}},   {"M1", {6, 111}},
            {"M2", {7, 196}},    {"M3", {6, 111}},   {"M4", {7, 196}},
            {"T1", {6, 162}},    {"T2", {6, 180}},   {"T3", {6, 162}},
            {"T4", {6, 132}},    {"T5", {6, 132}},   {"T6", {8, 1419}},
            {"T7", {8, 428}},    {"T8", {6, 120}},   {"T9", {6, 102}},
            {"FR", {6, 129}},    {"CR", {7, 139}},   {"KL", {9, 268}},
            {"LSM", {10, 399}},  {"RSM", {10, 399}}, {"COT", {6, 99}},
            {"COTD", {6, 99}},   {"MAN", {10, 167}}, {"MAND", {10, 167}},
            {"CMQ", {6, 117}},   {"CMQD", {6, 117}}};

    Identity id(std::string const& key) {
      return find_entry(key)->identity;
    }

    std::vector<Identity> all_identities() {
      std::vector<Identity> ids;
      for (auto const& e : catalog()) {
        ids.push_back(e.identity);
      }
      return ids;
    }

    CensusQuery query(size_t n, std::vector<Identity> ids, Engine e) {
      CensusQuery q;
      q.order      = n;
      q.identities = std::move(ids);
      q.engine     = e;
      return q;
    }
  }  // namespace

  TEST_CASE("brute-force table covers the catalog", "[census][oracle]") {
    REQUIRE(brute_force.size() == catalog().size());
    // Re-derive the order-2 column live; it is cheap.
    for (auto const& e : catalog()) {
      INFO(e.identity.abbrev());
      REQUIRE(oracle::naive_models(2, e.identity).size()
              == brute_force.at(e.identity.abbrev()).first);
    }
  }

  TEST_CASE("brute force at order 3 for a sample", "[census][oracle]") {
    for (auto key : {"SGR", "CL", "CR", "LSM", "CMQ"}) {
      INFO(key);
      REQUIRE(oracle::naive_models(3, id(key)).size()
              == brute_force.at(key).second);
    }
  }

  TEST_CASE("count_all matches brute force", "[census][exhaustive]") {
    auto ids = all_identities();
    for (size_t n = 2; n <= 3; ++n) {
      auto r = count_all(n, ids);
      REQUIRE(r.order == n);
      REQUIRE(r.complete);
      REQUIRE(r.tables_scanned == table_count(n));
      REQUIRE(r.counts.size() == ids.size());
      for (auto const& c : r.counts) {
        INFO(c.identity.abbrev() << " at order " << n);
        auto expected = brute_force.at(c.identity.abbrev());
        REQUIRE(c.total == (n == 2 ? expected.first : expected.second));
      }
    }
  }

  TEST_CASE("count_all small cases", "[census][exhaustive]") {
    // Every identity holds in the one-element groupoid.
    auto r = count_all(1, all_identities());
    for (auto const& c : r.counts) {
      REQUIRE(c.total == 1);
    }
    REQUIRE(count_all(3, {parse_identity("x = x")}).counts[0].total == 19683);
    REQUIRE(count_all(2, {parse_identity("xy = yx")}).counts[0].total == 8);
    REQUIRE(count_all(3, {parse_identity("xx = x")}).counts[0].total == 729);
    REQUIRE_THROWS_AS(count_all(4, {id("SGR")}), Error);
    REQUIRE_THROWS_AS(count_all(0, {id("SGR")}), Error);
    REQUIRE_THROWS_AS(count_all(2, {}), Error);
  }

  TEST_CASE("iso classes and representatives", "[census][iso]") {
    struct Case {
      char const* key;
      std::uint64_t total, classes;
    };
    for (auto [key, total, classes] : {Case{"LSM", 10, 7}, Case{"COT", 6, 3},
                                       Case{"MAN", 10, 7}, Case{"CMQ", 6, 3}}) {
      INFO(key);
      auto r = count_iso_classes(2, id(key));
      auto const& c = r.counts[0];
      REQUIRE(c.total == total);
      REQUIRE(c.iso_class_count == classes);
      REQUIRE(c.representatives->size() == classes);
      REQUIRE(oracle::orbit_count(oracle::naive_models(2, id(key))) == classes);
    }
    auto cmq = count_iso_classes(2, id("CMQ"));
    for (auto const& g : *cmq.counts[0].representatives) {
      REQUIRE(is_associative(g));
    }
  }

  TEST_CASE("iso class counts agree with explicit orbits", "[census][iso]") {
    for (auto const& e : catalog()) {
      INFO(e.identity.abbrev());
      auto r = count_iso_classes(3, e.identity);
      auto const& c = r.counts[0];
      REQUIRE(std::is_sorted(c.canonical_indices.begin(),
                             c.canonical_indices.end()));
      REQUIRE(c.iso_class_count == c.canonical_indices.size());
      std::set<index_type> seen;
      for (auto const& g : *c.representatives) {
        REQUIRE(holds(e.identity, g));
        REQUIRE(canonical_index(g) == to_index(g));
        seen.insert(to_index(g));
      }
      REQUIRE(seen.size() == c.representatives->size());
      REQUIRE(oracle::orbit_count(oracle::naive_models(3, e.identity))
              == *c.iso_class_count);
    }
  }

  TEST_CASE("backtracking agrees with the exhaustive engine",
            "[census][backtracking]") {
    auto ids = all_identities();
    for (size_t n = 1; n <= 3; ++n) {
      auto sweep = count_all(n, ids);
      for (size_t i = 0; i < ids.size(); ++i) {
        INFO(ids[i].abbrev() << " at order " << n);
        auto bt = backtracking_count(n, ids[i]);
        REQUIRE(bt.engine == Engine::backtracking);
        REQUIRE(bt.complete);
        REQUIRE(bt.counts[0].total == sweep.counts[i].total);
      }
    }
  }

  TEST_CASE("backtracking iso classes", "[census][backtracking][iso]") {
    for (auto key : {"SGR", "LSM", "COT", "T6"}) {
      INFO(key);
      auto q             = query(3, {id(key)}, Engine::backtracking);
      q.want_iso_classes = true;
      auto bt            = partitioned_count(q);
      auto ex            = count_iso_classes(3, id(key));
      REQUIRE(bt.counts[0].iso_class_count == ex.counts[0].iso_class_count);
      REQUIRE(bt.counts[0].canonical_indices == ex.counts[0].canonical_indices);
    }
  }

  TEST_CASE("backtracking handles several identities at once",
            "[census][backtracking]") {
    auto ids = std::vector<Identity>{id("SGR"), id("LSM"), id("CR")};
    auto bt  = partitioned_count(query(3, ids, Engine::backtracking));
    REQUIRE(bt.counts.size() == 3);
    REQUIRE(bt.counts[0].total == 113);
    REQUIRE(bt.counts[1].total == 399);
    REQUIRE(bt.counts[2].total == 139);
  }

  TEST_CASE("semigroups of order 4", "[census][backtracking][slow]") {
    // Labelled semigroups on four elements.
    auto r = backtracking_count(4, id("SGR"));
    REQUIRE(r.complete);
    REQUIRE(r.counts[0].total == 3492);
    REQUIRE_THROWS_AS(backtracking_count(5, id("SGR")), Error);
  }

  TEST_CASE("shards partition the tables", "[census][shard]") {
    // With the trivial identity every table counts, so each shard's total is
    // the number of indices whose prefix falls in it.
    auto trivial = parse_identity("x = x");
    for (size_t n = 2; n <= 3; ++n) {
      size_t cells = n * n;
      for (size_t prefix = 1; prefix <= std::min<size_t>(cells, 4); ++prefix) {
        std::uint64_t shift = 1;
        for (size_t i = prefix; i < cells; ++i) {
          shift *= n;
        }
        for (size_t m = 1; m <= 8; ++m) {
          std::vector<std::uint64_t> expected(m, 0);
          for (index_type k = 0; k < table_count(n); ++k) {
            ++expected[(k / shift) % m];
          }
          for (auto engine : {Engine::exhaustive, Engine::backtracking}) {
            for (size_t s = 0; s < m; ++s) {
              INFO("n " << n << " prefix " << prefix << " shard " << s << "/"
                        << m);
              auto q      = query(n, {trivial}, engine);
              q.partition = Partition{prefix, s, m};
              REQUIRE(partitioned_count(q).counts[0].total == expected[s]);
            }
          }
        }
      }
    }
  }

  TEST_CASE("shard sums equal unsharded totals", "[census][shard]") {
    auto ids = std::vector<Identity>{id("SGR"), id("ML"), id("T6"), id("CL")};
    auto whole = count_all(3, ids);
    std::vector<std::optional<std::uint64_t>> classes;
    for (auto const& i : ids) {
      classes.push_back(count_iso_classes(3, i).counts[0].iso_class_count);
    }
    for (auto engine : {Engine::exhaustive, Engine::backtracking}) {
      for (size_t prefix = 1; prefix <= 4; ++prefix) {
        for (size_t m = 1; m <= 8; ++m) {
          std::vector<CensusResult> parts;
          for (size_t s = 0; s < m; ++s) {
            auto q      = query(3, ids, engine);
            q.partition = Partition{prefix, s, m};
            q.want_iso_classes = true;
            parts.push_back(partitioned_count(q));
          }
          auto merged = merge(parts);
          for (size_t i = 0; i < ids.size(); ++i) {
            REQUIRE(merged.counts[i].total == whole.counts[i].total);
            REQUIRE(merged.counts[i].iso_class_count == classes[i]);
          }
        }
      }
    }
  }

  TEST_CASE("run_census does not depend on jobs", "[census][shard]") {
    auto ids = std::vector<Identity>{id("SGR"), id("ML"), id("T6")};
    for (auto engine : {Engine::exhaustive, Engine::backtracking}) {
      auto q             = query(3, ids, engine);
      q.want_iso_classes = true;
      auto one           = run_census(q, 1);
      for (size_t jobs : {2, 3, 4, 8}) {
        auto many = run_census(q, jobs);
        for (size_t i = 0; i < ids.size(); ++i) {
          REQUIRE(many.counts[i].total == one.counts[i].total);
          REQUIRE(many.counts[i].canonical_indices
                  == one.counts[i].canonical_indices);
        }
      }
    }
  }

  TEST_CASE("an explicit shard is run as given", "[census][shard]") {
    auto q      = query(3, {id("SGR")}, Engine::exhaustive);
    q.partition = Partition{2, 1, 3};
    REQUIRE(run_census(q, 8).counts[0].total
            == partitioned_count(q).counts[0].total);
  }

  TEST_CASE("invalid partitions", "[census][shard]") {
    auto q      = query(2, {id("SGR")}, Engine::exhaustive);
    q.partition = Partition{1, 2, 2};
    REQUIRE_THROWS_AS(partitioned_count(q), Error);
    q.partition = Partition{1, 0, 0};
    REQUIRE_THROWS_AS(partitioned_count(q), Error);
    q.partition = Partition{5, 0, 2};
    REQUIRE_THROWS_AS(partitioned_count(q), Error);
    q.partition = Partition{4, 3, 4};
    REQUIRE_NOTHROW(partitioned_count(q));
  }

  TEST_CASE("merge", "[census][shard]") {
    REQUIRE_THROWS_AS(merge({}), Error);
    auto a = count_all(2, {id("SGR")});
    auto b = count_all(3, {id("SGR")});
    REQUIRE_THROWS_AS(merge({a, b}), Error);
    auto c = count_all(2, {id("ML")});
    REQUIRE_THROWS_AS(merge({a, c}), Error);
    REQUIRE(merge({a}).counts[0].total == 8);
  }

  TEST_CASE("default_prefix_cells", "[census][shard]") {
    REQUIRE(default_prefix_cells(2, 1) == 1);
    REQUIRE(default_prefix_cells(2, 2) == 1);
    REQUIRE(default_prefix_cells(2, 3) == 2);
    REQUIRE(default_prefix_cells(3, 32) == 4);
    REQUIRE(default_prefix_cells(1, 8) == 1);
    REQUIRE(default_prefix_cells(2, 1000) == 4);
  }

  TEST_CASE("repeated runs are identical", "[census]") {
    auto ids = all_identities();
    auto a   = run_census(query(3, ids, Engine::exhaustive), 4);
    auto b   = run_census(query(3, ids, Engine::exhaustive), 4);
    for (size_t i = 0; i < ids.size(); ++i) {
      REQUIRE(a.counts[i].total == b.counts[i].total);
    }
  }

  TEST_CASE("duality", "[census][duality]") {
    for (auto const& e : catalog()) {
      INFO(e.identity.abbrev());
      REQUIRE(duality_check(2, e.identity));
      REQUIRE(duality_check(3, e.identity));
    }
    // x(yz) = (yx)z is not self-dual as a formula but the counts still agree.
    REQUIRE_FALSE(equal_up_to_renaming(mirror(id("AG")), id("AG")));
  }

  TEST_CASE("time budget", "[census][backtracking]") {
    auto q        = query(4, {id("LN")}, Engine::backtracking);
    q.time_budget = std::chrono::milliseconds(1);
    auto r        = partitioned_count(q);
    REQUIRE_FALSE(r.complete);
    REQUIRE(r.counts[0].total < 2753064);

    auto small        = query(3, {id("LN")}, Engine::backtracking);
    small.time_budget = std::chrono::milliseconds(60000);
    auto done         = partitioned_count(small);
    REQUIRE(done.complete);
    REQUIRE(done.counts[0].total == 932);
  }

}  // namespace gcensus
