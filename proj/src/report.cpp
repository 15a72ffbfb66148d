//
// gcensus - counting finite groupoids that satisfy equational identities
//

#include "gcensus/report.hpp"

#include <algorithm>  // for max
#include <cstdio>     // for snprintf
#include <sstream>    // for ostringstream

#include "json.hpp"  // for ordered_json

namespace gcensus {

  namespace {
    std::string format_ms(double ms) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", ms);
      return buf;
    }

    std::string emit_text(Report const& r) {
      bool iso    = false;
      bool timing = false;
      for (auto const& row : r.rows) {
        iso    = iso || row.iso.has_value();
        timing = timing || row.elapsed_ms.has_value();
      }
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> header
          = {"Name", "Abbreviation", "Identity", "Order", "Number"};
      if (iso) {
        header.push_back("Non-isomorphic");
      }
      header.push_back("Engine");
      if (timing) {
        header.push_back("Elapsed ms");
      }
      cells.push_back(header);
      for (auto const& row : r.rows) {
        std::vector<std::string> line = {row.name,
                                         row.abbrev,
                                         row.formula,
                                         std::to_string(row.order),
                                         std::to_string(row.total)};
        if (iso) {
          line.push_back(row.iso ? std::to_string(*row.iso) : "-");
        }
        line.push_back(row.engine);
        if (timing) {
          line.push_back(row.elapsed_ms ? format_ms(*row.elapsed_ms) : "-");
        }
        cells.push_back(std::move(line));
      }
      std::vector<size_t> width(header.size(), 0);
      for (auto const& line : cells) {
        for (size_t i = 0; i < line.size(); ++i) {
          width[i] = std::max(width[i], line[i].size());
        }
      }
      std::string out;
      for (size_t l = 0; l < cells.size(); ++l) {
        std::string text;
        for (size_t i = 0; i < cells[l].size(); ++i) {
          if (i > 0) {
            text += "  ";
          }
          text += cells[l][i];
          if (i + 1 < cells[l].size()) {
            text.append(width[i] - cells[l][i].size(), ' ');
          }
        }
        out += text + '\n';
        if (l == 0) {
          size_t total = 0;
          for (auto w : width) {
            total += w;
          }
          out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
        }
      }
      return out;
    }

    std::string emit_csv(Report const& r) {
      std::string out = "name,abbrev,identity,order,total,iso,engine,elapsed_ms\n";
      for (auto const& row : r.rows) {
        out += csv_field(row.name) + ',' + csv_field(row.abbrev) + ','
               + csv_field(row.formula) + ',' + std::to_string(row.order) + ','
               + std::to_string(row.total) + ','
               + (row.iso ? std::to_string(*row.iso) : "") + ','
               + csv_field(row.engine) + ','
               + (row.elapsed_ms ? format_ms(*row.elapsed_ms) : "") + '\n';
      }
      return out;
    }

    std::string emit_json(Report const& r) {
      auto arr = nlohmann::ordered_json::array();
      for (auto const& row : r.rows) {
        nlohmann::ordered_json o;
        o["name"]       = row.name;
        o["abbrev"]     = row.abbrev;
        o["identity"]   = row.formula;
        o["order"]      = row.order;
        o["total"]      = row.total;
        o["iso"]        = row.iso ? nlohmann::ordered_json(*row.iso) : nullptr;
        o["engine"]     = row.engine;
        o["elapsed_ms"] = row.elapsed_ms
                              ? nlohmann::ordered_json(*row.elapsed_ms)
                              : nullptr;
        arr.push_back(std::move(o));
      }
      return arr.dump(2) + '\n';
    }
  }  // namespace

  Format parse_format(std::string_view s) {
    if (s == "text") {
      return Format::text;
    } else if (s == "csv") {
      return Format::csv;
    } else if (s == "json") {
      return Format::json;
    }
    throw Error("unknown format '" + std::string(s)
                + "', expected text, csv or json");
  }

  std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
      return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') {
        out += '"';
      }
      out += c;
    }
    return out + '"';
  }

  Report make_report(CensusResult const& r,
                     std::string const&  engine_label,
                     bool                timing) {
    Report report;
    for (auto const& c : r.counts) {
      ReportRow row;
      row.name    = c.identity.name();
      row.abbrev  = c.identity.abbrev();
      row.formula = format_identity(c.identity);
      row.order   = r.order;
      row.total   = c.total;
      row.iso     = c.iso_class_count;
      row.engine  = engine_label;
      if (timing) {
        row.elapsed_ms
            = std::chrono::duration<double, std::milli>(c.elapsed).count();
      }
      report.rows.push_back(std::move(row));
    }
    return report;
  }

  std::string emit_report(Report const& r, Format f) {
    switch (f) {
      case Format::text:
        return emit_text(r);
      case Format::csv:
        return emit_csv(r);
      case Format::json:
        return emit_json(r);
    }
    return {};
  }

  Report parse_report_json(std::string_view text) {
    Report report;
    try {
      auto arr = nlohmann::json::parse(text);
      if (!arr.is_array()) {
        throw Error("a report must be a JSON array");
      }
      for (auto const& o : arr) {
        ReportRow row;
        row.name    = o.at("name").get<std::string>();
        row.abbrev  = o.at("abbrev").get<std::string>();
        row.formula = o.at("identity").get<std::string>();
        row.order   = o.at("order").get<size_t>();
        row.total   = o.at("total").get<std::uint64_t>();
        if (!o.at("iso").is_null()) {
          row.iso = o.at("iso").get<std::uint64_t>();
        }
        row.engine = o.at("engine").get<std::string>();
        if (!o.at("elapsed_ms").is_null()) {
          row.elapsed_ms = o.at("elapsed_ms").get<double>();
        }
        report.rows.push_back(std::move(row));
      }
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("malformed report: ") + e.what());
    }
    return report;
  }

}  // namespace gcensus
