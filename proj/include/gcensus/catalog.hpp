//
// gcensus - counting finite groupoids that satisfy equational identities
//

// The built-in catalog of named identities, and the plain-text identity file
// format:
//
//   # comment
//   name;abbrev;formula
//
// Formulas are stored exactly as they are usually printed; where a name is
// nonstandard the formula is what gets counted.

#ifndef GCENSUS_CATALOG_HPP_
#define GCENSUS_CATALOG_HPP_

#include <iosfwd>       // for istream, ostream
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gcensus/term.hpp"  // for Identity

namespace gcensus {

  enum class Source {
    table,          // the 39-row census of Bol-Moufang type identities
    semimedial,     // left semimediality
    cote,           // Cote identity
    manin,          // Manin identity
    cm_quasigroup,  // commutative Moufang quasigroup identity
    dual,           // mirror image of one of the four above
    user            // loaded from an identity file
  };

  std::string_view to_string(Source s);

  struct CatalogEntry {
    Identity    identity;
    Source      source;
    std::string key;  // kebab-case name used for lookup
    std::string alias;
  };

  // The 39 table rows followed by the four named identities and their duals,
  // in that order.
  std::vector<CatalogEntry> const& catalog();

  // One of "table1", "sections", "paper", "all", or "file:PATH". Throws Error
  // for anything else.
  std::vector<CatalogEntry> select_catalog(std::string_view selection);

  // Matches an abbreviation (case-insensitive), a kebab-case name or an alias.
  std::optional<CatalogEntry> find_entry(std::string_view key);

  std::string kebab_case(std::string_view name);

  std::vector<CatalogEntry> read_identity_file(std::istream& is);
  std::vector<CatalogEntry> load_identity_file(std::string const& path);
  // Throws Error if a name or abbreviation contains ';' or a newline.
  void write_identity_file(std::ostream&                    os,
                           std::vector<CatalogEntry> const& entries);

}  // namespace gcensus

#endif  // GCENSUS_CATALOG_HPP_
