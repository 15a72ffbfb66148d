//
// gcensus - counting finite groupoids that satisfy equational identities
//

#include "gcensus/fixtures.hpp"

#include <fstream>  // for ifstream
#include <istream>  // for istream
#include <map>      // for map
#include <sstream>  // for istringstream
#include <utility>  // for pair

#include "gcensus/catalog.hpp"  // for find_entry

namespace gcensus {

  namespace {
    // Number of satisfying tables of order 3, in catalog order.
    constexpr std::pair<char const*, std::uint64_t> table_counts[] = {
        {"SGR", 113}, {"EL", 239}, {"ML", 196}, {"LB", 215}, {"RB", 215},
        {"CL", 133},  {"LC", 220}, {"RC", 220}, {"MN", 350}, {"RN", 932},
        {"LN", 932},  {"CM", 297}, {"AG", 91},  {"CC", 169}, {"CA", 110},
        {"CN", 472},  {"CP", 744}, {"C1", 219}, {"C2", 153}, {"L1", 117},
        {"CD", 219},  {"L2", 157}, {"L3", 157}, {"M1", 111}, {"M2", 196},
        {"M3", 111},  {"M4", 196}, {"T1", 162}, {"T2", 180}, {"T3", 162},
        {"T4", 132},  {"T5", 132}, {"T6", 1419}, {"T7", 428}, {"T8", 120},
        {"T9", 102},  {"FR", 129}, {"CR", 136}, {"KL", 268}};

    FixtureSet table_fixtures() {
      FixtureSet set;
      for (auto const& [abbrev, total] : table_counts) {
        set.push_back({abbrev, 3, total, std::nullopt});
      }
      return set;
    }

    FixtureSet section_fixtures() {
      return {{"LSM", 2, 10, 7},
              {"LSM", 3, 399, std::nullopt},
              {"RSM", 3, 399, std::nullopt},
              {"COT", 2, 6, 3},
              {"COT", 3, 99, std::nullopt},
              {"COTD", 3, 99, std::nullopt},
              {"MAN", 2, 10, 7},
              {"MAN", 3, 167, std::nullopt},
              {"MAND", 3, 167, std::nullopt},
              {"CMQ", 2, 6, 3},
              {"CMQ", 3, 117, std::nullopt},
              {"CMQD", 3, 117, std::nullopt}};
    }
  }  // namespace

  FixtureSet select_fixtures(std::string_view selection) {
    if (selection == "table1") {
      return table_fixtures();
    } else if (selection == "sections") {
      return section_fixtures();
    } else if (selection == "paper") {
      auto set = table_fixtures();
      for (auto& f : section_fixtures()) {
        set.push_back(std::move(f));
      }
      return set;
    } else if (selection.starts_with("file:")) {
      std::string   path(selection.substr(5));
      std::ifstream is(path);
      if (!is) {
        throw Error("cannot open fixture file '" + path + "'");
      }
      return read_fixture_file(is);
    }
    throw Error("unknown fixture set '" + std::string(selection)
                + "', expected paper, table1, sections or file:PATH");
  }

  FixtureSet read_fixture_file(std::istream& is) {
    FixtureSet  set;
    std::string line;
    size_t      line_no = 0;
    while (std::getline(is, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      std::vector<std::string> fields;
      std::istringstream       ss(line);
      for (std::string f; std::getline(ss, f, ';');) {
        fields.push_back(f);
      }
      auto fail = [&] {
        return Error("fixture file, line " + std::to_string(line_no)
                     + ": expected key;order;total[;iso]");
      };
      if (fields.size() < 3 || fields.size() > 4) {
        throw fail();
      }
      Fixture fx;
      fx.key = fields[0];
      try {
        fx.order          = std::stoul(fields[1]);
        fx.expected_total = std::stoull(fields[2]);
        if (fields.size() == 4) {
          fx.expected_iso = std::stoull(fields[3]);
        }
      } catch (std::exception const&) {
        throw fail();
      }
      set.push_back(std::move(fx));
    }
    return set;
  }

  std::vector<FixtureOutcome> verify_fixtures(FixtureSet const&          set,
                                              std::vector<Engine> const& engines,
                                              size_t                     jobs) {
    // Fixtures without an expected class count are batched per order, so the
    // exhaustive engine sweeps each order once.
    std::vector<FixtureOutcome> outcomes;
    for (auto engine : engines) {
      std::map<size_t, std::vector<size_t>> batches;
      std::vector<std::optional<CensusResult>> single(set.size());
      for (size_t i = 0; i < set.size(); ++i) {
        auto entry = find_entry(set[i].key);
        if (!entry) {
          throw Error("unknown identity '" + set[i].key + "' in fixture set");
        }
        if (set[i].expected_iso || engine == Engine::backtracking) {
          CensusQuery q;
          q.order            = set[i].order;
          q.identities       = {entry->identity};
          q.engine           = engine;
          q.want_iso_classes = set[i].expected_iso.has_value();
          single[i]          = run_census(q, jobs);
        } else {
          batches[set[i].order].push_back(i);
        }
      }
      std::vector<std::optional<std::uint64_t>> totals(set.size());
      for (auto const& [order, members] : batches) {
        CensusQuery q;
        q.order  = order;
        q.engine = engine;
        for (auto i : members) {
          q.identities.push_back(find_entry(set[i].key)->identity);
        }
        auto r = run_census(q, jobs);
        for (size_t j = 0; j < members.size(); ++j) {
          totals[members[j]] = r.counts[j].total;
        }
      }
      for (size_t i = 0; i < set.size(); ++i) {
        FixtureOutcome o;
        o.fixture = set[i];
        o.engine  = engine;
        if (single[i]) {
          o.total = single[i]->counts[0].total;
          o.iso   = single[i]->counts[0].iso_class_count;
        } else {
          o.total = *totals[i];
        }
        o.pass = o.total == set[i].expected_total
                 && (!set[i].expected_iso || o.iso == set[i].expected_iso);
        outcomes.push_back(std::move(o));
      }
    }
    return outcomes;
  }

}  // namespace gcensus
