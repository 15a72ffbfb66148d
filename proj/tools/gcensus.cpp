//
// gcensus - counting finite groupoids that satisfy equational identities
//

// Command-line front end. Exit codes: 0 on success, 1 when a verification or
// engine cross-check fails, 2 on a usage error.

#include <chrono>    // for milliseconds
#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "gcensus/catalog.hpp"   // for select_catalog, find_entry
#include "gcensus/census.hpp"    // for run_census, CensusQuery
#include "gcensus/fixtures.hpp"  // for select_fixtures, verify_fixtures
#include "gcensus/groupoid.hpp"  // for write_cayley, is_associative
#include "gcensus/report.hpp"    // for emit_report

namespace {

  using namespace gcensus;

  constexpr int exit_ok       = 0;
  constexpr int exit_mismatch = 1;
  constexpr int exit_usage    = 2;

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  struct Options {
    size_t                   order = 0;
    std::vector<std::string> formulas;
    std::vector<std::string> named;
    std::string              catalog;
    bool                     iso    = false;
    std::string              engine = "auto";
    std::string              format = "text";
    size_t                   jobs   = 0;
    std::string              shard;
    size_t                   prefix_cells = 0;
    bool                     timing       = false;
    long long                budget_ms    = 0;
    std::string              fixtures     = "paper";
  };

  void add_selection(CLI::App* app, Options& o) {
    app->add_option("--identity", o.formulas, "identity formula, e.g. \"xx*yz=xy*xz\"");
    app->add_option("--named", o.named, "catalog abbreviation or name, e.g. LN or manin");
    app->add_option("--catalog", o.catalog, "table1, sections, paper, all or file:PATH");
  }

  void add_counting(CLI::App* app, Options& o) {
    app->add_option("--order", o.order, "order of the groupoids")->required();
    app->add_option("--engine", o.engine, "auto, exhaustive, backtracking or both")
        ->check(CLI::IsMember({"auto", "exhaustive", "backtracking", "both"}));
    app->add_option("--jobs", o.jobs, "worker threads (default: all cores)");
    app->add_option("--shard", o.shard, "run only shard i of m, written i/m");
    app->add_option("--prefix-cells", o.prefix_cells, "cells that define a shard");
    app->add_option("--time-budget", o.budget_ms, "backtracking time limit in ms");
  }

  std::vector<Identity> selected_identities(Options const& o) {
    std::vector<Identity> ids;
    if (!o.catalog.empty()) {
      for (auto const& e : select_catalog(o.catalog)) {
        ids.push_back(e.identity);
      }
    }
    for (auto const& key : o.named) {
      auto e = find_entry(key);
      if (!e) {
        throw UsageError("unknown identity '" + key + "'");
      }
      ids.push_back(e->identity);
    }
    for (auto const& f : o.formulas) {
      ids.push_back(parse_identity(f));
    }
    if (ids.empty()) {
      throw UsageError("select identities with --catalog, --named or --identity");
    }
    return ids;
  }

  std::vector<Engine> selected_engines(Options const& o) {
    if (o.engine == "both") {
      return {Engine::exhaustive, Engine::backtracking};
    } else if (o.engine == "exhaustive") {
      return {Engine::exhaustive};
    } else if (o.engine == "backtracking") {
      return {Engine::backtracking};
    }
    return {o.order <= max_exhaustive_order ? Engine::exhaustive
                                            : Engine::backtracking};
  }

  std::optional<Partition> selected_partition(Options const& o) {
    if (o.shard.empty()) {
      return std::nullopt;
    }
    auto       slash = o.shard.find('/');
    Partition  p;
    try {
      if (slash == std::string::npos) {
        throw std::invalid_argument("");
      }
      size_t used = 0;
      p.shard_index = std::stoul(o.shard.substr(0, slash), &used);
      if (used != slash) {
        throw std::invalid_argument("");
      }
      p.shard_count = std::stoul(o.shard.substr(slash + 1), &used);
      if (used != o.shard.size() - slash - 1) {
        throw std::invalid_argument("");
      }
    } catch (std::exception const&) {
      throw UsageError("--shard expects i/m, found '" + o.shard + "'");
    }
    p.prefix_cells = o.prefix_cells != 0
                         ? o.prefix_cells
                         : default_prefix_cells(o.order, p.shard_count);
    return p;
  }

  CensusQuery make_query(Options const& o, Engine engine, bool iso, bool reps) {
    CensusQuery q;
    q.order                = o.order;
    q.identities           = selected_identities(o);
    q.engine               = engine;
    q.want_iso_classes     = iso;
    q.want_representatives = reps;
    q.partition            = selected_partition(o);
    if (o.budget_ms > 0) {
      q.time_budget = std::chrono::milliseconds(o.budget_ms);
    }
    size_t limit = engine == Engine::exhaustive ? max_exhaustive_order
                                                : max_backtracking_order;
    if (o.order == 0 || o.order > limit) {
      throw UsageError("order " + std::to_string(o.order)
                       + " is not supported by the " + to_string(engine)
                       + " engine (1.." + std::to_string(limit) + ")");
    }
    return q;
  }

  // Runs every selected engine; when there are several they must agree.
  // Returns the first engine's result and a label for the report.
  std::pair<CensusResult, std::string>
  run_engines(Options const& o, bool iso, bool reps) {
    auto engines = selected_engines(o);
    std::optional<CensusResult> first;
    for (auto engine : engines) {
      auto r = run_census(make_query(o, engine, iso, reps), o.jobs);
      if (!r.complete) {
        std::cerr << "warning: the " << to_string(engine)
                  << " search ran out of time; counts are partial\n";
      }
      if (!first) {
        first = std::move(r);
        continue;
      }
      for (size_t i = 0; i < r.counts.size(); ++i) {
        auto const& a = first->counts[i];
        auto const& b = r.counts[i];
        if (a.total != b.total || a.iso_class_count != b.iso_class_count) {
          throw std::runtime_error("engines disagree on "
                                   + format_identity(a.identity) + ": "
                                   + std::to_string(a.total) + " vs "
                                   + std::to_string(b.total));
        }
      }
    }
    std::string label = engines.size() > 1 ? "both" : to_string(engines[0]);
    if (!first->complete) {
      label += " (incomplete)";
    }
    return {std::move(*first), label};
  }

  std::string label_of(Identity const& id) {
    return id.abbrev().empty() ? format_identity(id) : id.abbrev();
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_census(Options const& o) {
    auto format         = parse_format(o.format);
    auto [result, label] = run_engines(o, o.iso, false);
    std::cout << emit_report(make_report(result, label, o.timing), format);
    return exit_ok;
  }

  int cmd_count(Options const& o) {
    auto [result, label] = run_engines(o, o.iso, false);
    for (auto const& c : result.counts) {
      std::cout << label_of(c.identity) << ' ' << c.total;
      if (c.iso_class_count) {
        std::cout << ' ' << *c.iso_class_count;
      }
      std::cout << '\n';
    }
    return exit_ok;
  }

  int cmd_reps(Options const& o) {
    auto format          = parse_format(o.format);
    auto [result, label] = run_engines(o, true, true);
    if (format == Format::text) {
      for (auto const& c : result.counts) {
        std::cout << "# " << label_of(c.identity) << ": "
                  << format_identity(c.identity) << ", order " << result.order
                  << ", " << c.total << " groupoids, " << *c.iso_class_count
                  << " up to isomorphism\n";
        for (auto const& g : *c.representatives) {
          std::cout << "# index " << to_index(g)
                    << " associative=" << (is_associative(g) ? "yes" : "no")
                    << " quasigroup=" << (is_quasigroup(g) ? "yes" : "no")
                    << " commutative=" << (is_commutative(g) ? "yes" : "no")
                    << '\n';
          write_cayley(std::cout, g);
        }
      }
    } else if (format == Format::csv) {
      std::cout << "identity,abbrev,order,index,table,associative,quasigroup,"
                   "commutative\n";
      for (auto const& c : result.counts) {
        for (auto const& g : *c.representatives) {
          std::string rows;
          for (size_t x = 0; x < g.order(); ++x) {
            rows += x == 0 ? "" : ";";
            for (size_t y = 0; y < g.order(); ++y) {
              rows += (y == 0 ? "" : " ") + std::to_string(g(x, y) + 1);
            }
          }
          std::cout << csv_field(format_identity(c.identity)) << ','
                    << csv_field(c.identity.abbrev()) << ',' << g.order() << ','
                    << to_index(g) << ',' << rows << ','
                    << (is_associative(g) ? "true" : "false") << ','
                    << (is_quasigroup(g) ? "true" : "false") << ','
                    << (is_commutative(g) ? "true" : "false") << '\n';
        }
      }
    } else {
      auto out = nlohmann::ordered_json::array();
      for (auto const& c : result.counts) {
        nlohmann::ordered_json o;
        o["identity"] = format_identity(c.identity);
        o["abbrev"]   = c.identity.abbrev();
        o["order"]    = result.order;
        o["total"]    = c.total;
        o["iso"]      = *c.iso_class_count;
        auto reps     = nlohmann::ordered_json::array();
        for (auto const& g : *c.representatives) {
          nlohmann::ordered_json r;
          r["index"] = to_index(g);
          auto rows  = nlohmann::ordered_json::array();
          for (size_t x = 0; x < g.order(); ++x) {
            auto row = nlohmann::ordered_json::array();
            for (size_t y = 0; y < g.order(); ++y) {
              row.push_back(g(x, y) + 1);
            }
            rows.push_back(row);
          }
          r["table"]       = rows;
          r["associative"] = is_associative(g);
          r["quasigroup"]  = is_quasigroup(g);
          r["commutative"] = is_commutative(g);
          reps.push_back(r);
        }
        o["representatives"] = reps;
        out.push_back(o);
      }
      std::cout << out.dump(2) << '\n';
    }
    return exit_ok;
  }

  int cmd_verify(Options const& o) {
    auto set = select_fixtures(o.fixtures);
    std::vector<Engine> engines;
    if (o.engine == "both" || o.engine == "auto") {
      engines = {Engine::exhaustive, Engine::backtracking};
    } else {
      engines = {o.engine == "exhaustive" ? Engine::exhaustive
                                          : Engine::backtracking};
    }
    auto   outcomes = verify_fixtures(set, engines, o.jobs);
    size_t passed   = 0;
    for (auto const& r : outcomes) {
      passed += r.pass;
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.fixture.key
                << "  order " << r.fixture.order << "  " << to_string(r.engine)
                << "  total " << r.total << " (expected "
                << r.fixture.expected_total << ")";
      if (r.fixture.expected_iso) {
        std::cout << "  iso " << (r.iso ? std::to_string(*r.iso) : "-")
                  << " (expected " << *r.fixture.expected_iso << ")";
      }
      std::cout << '\n';
    }
    std::cout << passed << " of " << outcomes.size() << " checks passed\n";
    return passed == outcomes.size() ? exit_ok : exit_mismatch;
  }

  int cmd_export(Options const& o) {
    write_identity_file(std::cout,
                        select_catalog(o.catalog.empty() ? "all" : o.catalog));
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count finite groupoids satisfying equational identities"};
  app.require_subcommand(1);
  Options o;

  auto census = app.add_subcommand("census", "count groupoids and print a report");
  add_selection(census, o);
  add_counting(census, o);
  census->add_flag("--iso", o.iso, "also count isomorphism classes");
  census->add_option("--format", o.format, "text, csv or json");
  census->add_flag("--timing", o.timing, "include elapsed times");

  auto count = app.add_subcommand("count", "print bare counts, one per line");
  add_selection(count, o);
  add_counting(count, o);
  count->add_flag("--iso", o.iso, "also count isomorphism classes");

  auto reps = app.add_subcommand("reps", "print one table per isomorphism class");
  add_selection(reps, o);
  add_counting(reps, o);
  reps->add_option("--format", o.format, "text, csv or json");

  auto verify = app.add_subcommand("verify", "recompute published counts");
  verify->add_option("--fixtures", o.fixtures, "paper, table1, sections or file:PATH");
  verify->add_option("--engine", o.engine, "exhaustive, backtracking or both")
      ->check(CLI::IsMember({"auto", "exhaustive", "backtracking", "both"}));
  verify->add_option("--jobs", o.jobs, "worker threads (default: all cores)");

  auto exp = app.add_subcommand("export-catalog", "print identities as name;abbrev;formula");
  exp->add_option("--catalog", o.catalog, "table1, sections, paper, all or file:PATH");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (census->parsed()) {
      return cmd_census(o);
    } else if (count->parsed()) {
      return cmd_count(o);
    } else if (reps->parsed()) {
      return cmd_reps(o);
    } else if (verify->parsed()) {
      return cmd_verify(o);
    }
    return cmd_export(o);
  } catch (std::runtime_error const& e) {
    bool usage = dynamic_cast<Error const*>(&e) != nullptr;
    std::cerr << "gcensus: " << e.what() << '\n';
    return usage ? exit_usage : exit_mismatch;
  } catch (std::exception const& e) {
    std::cerr << "gcensus: " << e.what() << '\n';
    return exit_usage;
  }
}
