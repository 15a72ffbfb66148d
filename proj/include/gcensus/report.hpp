//
// gcensus - counting finite groupoids that satisfy equational identities
//

#ifndef GCENSUS_REPORT_HPP_
#define GCENSUS_REPORT_HPP_

#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gcensus/census.hpp"  // for CensusResult

namespace gcensus {

  enum class Format { text, csv, json };

  // Throws Error for anything other than text, csv or json.
  Format parse_format(std::string_view s);

  struct ReportRow {
    std::string                  name;
    std::string                  abbrev;
    std::string                  formula;
    size_t                       order = 0;
    std::uint64_t                total = 0;
    std::optional<std::uint64_t> iso;
    std::string                  engine;
    std::optional<double>        elapsed_ms;

    friend bool operator==(ReportRow const&, ReportRow const&) = default;
  };

  struct Report {
    std::vector<ReportRow> rows;

    friend bool operator==(Report const&, Report const&) = default;
  };

  // One row per identity; elapsed_ms is filled in only when timing is true.
  Report make_report(CensusResult const& r,
                     std::string const&  engine_label,
                     bool                timing);

  // csv columns: name,abbrev,identity,order,total,iso,engine,elapsed_ms
  std::string emit_report(Report const& r, Format f);

  Report parse_report_json(std::string_view json);

  std::string csv_field(std::string_view s);

}  // namespace gcensus

#endif  // GCENSUS_REPORT_HPP_
