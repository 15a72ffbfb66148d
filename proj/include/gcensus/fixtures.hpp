//
// gcensus - counting finite groupoids that satisfy equational identities
//

// Published counts of groupoids satisfying catalog identities, and the
// machinery that recomputes them.
//
// Fixture files hold one fixture per line, `key;order;total[;iso]`, where
// key is anything find_entry understands. '#' starts a comment line.

#ifndef GCENSUS_FIXTURES_HPP_
#define GCENSUS_FIXTURES_HPP_

#include <cstdint>      // for uint64_t
#include <iosfwd>       // for istream
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gcensus/census.hpp"  // for Engine

namespace gcensus {

  struct Fixture {
    std::string                  key;
    size_t                       order = 0;
    std::uint64_t                expected_total = 0;
    std::optional<std::uint64_t> expected_iso;
  };

  using FixtureSet = std::vector<Fixture>;

  // "paper" (everything published), "table1", "sections" or "file:PATH".
  FixtureSet select_fixtures(std::string_view selection);
  FixtureSet read_fixture_file(std::istream& is);

  struct FixtureOutcome {
    Fixture                      fixture;
    Engine                       engine = Engine::exhaustive;
    std::uint64_t                total = 0;
    std::optional<std::uint64_t> iso;
    bool                         pass = false;
  };

  // Recomputes each fixture with every engine in engines. Throws Error if a
  // key does not name a catalog identity.
  std::vector<FixtureOutcome> verify_fixtures(FixtureSet const&          set,
                                              std::vector<Engine> const& engines,
                                              size_t                     jobs = 0);

}  // namespace gcensus

#endif  // GCENSUS_FIXTURES_HPP_
