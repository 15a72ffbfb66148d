//
// gcensus - counting finite groupoids that satisfy equational identities
//

#include "gcensus/catalog.hpp"

#include <algorithm>  // for any_of
#include <cctype>     // for tolower, isalnum
#include <fstream>    // for ifstream
#include <istream>    // for istream
#include <ostream>    // for ostream
#include <set>        // for set

namespace gcensus {

  namespace {
    struct Row {
      char const* name;
      char const* abbrev;
      char const* formula;
      Source      source;
      char const* alias;
    };

    // clang-format off
    constexpr Row rows[] = {
        {"Semigroups",            "SGR", "x(yz) = (xy)z",         Source::table, ""},
        {"Extra",                 "EL",  "x(y(zx)) = ((xy)z)x",   Source::table, ""},
        {"Moufang",               "ML",  "(xy)(zx) = (x(yz))x",   Source::table, ""},
        {"Left Bol",              "LB",  "x(y(xz)) = (x(yx))z",   Source::table, ""},
        {"Right Bol",             "RB",  "y((xz)x) = ((yx)z)x",   Source::table, ""},
        {"C-loops",               "CL",  "y(x(xz)) = ((yx)x)z",   Source::table, ""},
        {"LC-loops",              "LC",  "(xx)(yz) = (x(xy))z",   Source::table, ""},
        {"RC-loops",              "RC",  "y((zx)x) = (yz)(xx)",   Source::table, ""},
        {"Middle Nuclear Square", "MN",  "y((xx)z) = (y(xx))z",   Source::table, ""},
        {"Right Nuclear Square",  "RN",  "y(z(xx)) = (yz)(xx)",   Source::table, ""},
        {"Left Nuclear Square",   "LN",  "((xx)y)z = (xx)(yz)",   Source::table, ""},
        {"Comm. Moufang",         "CM",  "(xy)(xz) = (xx)(zy)",   Source::table, ""},
        {"Abelian Group",         "AG",  "x(yz) = (yx)z",         Source::table, ""},
        {"Comm. C-loop",          "CC",  "(y(xy))z = x(y(yz))",   Source::table, ""},
        {"Comm. Alternative",     "CA",  "((xx)y)z = z(x(yx))",   Source::table, ""},
        {"Comm. Nuclear square",  "CN",  "((xx)y)z = (xx)(zy)",   Source::table, ""},
        {"Comm. loops",           "CP",  "((yx)x)z = z(x(yx))",   Source::table, ""},
        {"Cheban 1",              "C1",  "x((xy)z) = (yx)(xz)",   Source::table, ""},
        {"Cheban 2",              "C2",  "x((xy)z) = (y(zx))x",   Source::table, ""},
        {"Lonely I",              "L1",  "(x(xy))z = y((zx)x)",   Source::table, ""},
        {"Cheban I Dual",         "CD",  "(yx)(xz) = (y(zx))x",   Source::table, ""},
        {"Lonely II",             "L2",  "(x(xy))z = y((xx)z)",   Source::table, ""},
        {"Lonely III",            "L3",  "(y(xx))z = y((zx)x)",   Source::table, ""},
        {"Mate I",                "M1",  "(x(xy))z = ((yz)x)x",   Source::table, ""},
        {"Mate II",               "M2",  "(y(xx))z = ((yz)x)x",   Source::table, ""},
        {"Mate III",              "M3",  "x(x(yz)) = y((zx)x)",   Source::table, ""},
        {"Mate IV",               "M4",  "x(x(yz)) = y((xx)z)",   Source::table, ""},
        {"Triad I",               "T1",  "(xx)(yz) = y(z(xx))",   Source::table, ""},
        {"Triad II",              "T2",  "((xx)y)z = y(z(xx))",   Source::table, ""},
        {"Triad III",             "T3",  "((xx)y)z = (yz)(xx)",   Source::table, ""},
        {"Triad IV",              "T4",  "((xx)y)z = ((yz)x)x",   Source::table, ""},
        {"Triad V",               "T5",  "x(x(yz)) = y(z(xx))",   Source::table, ""},
        {"Triad VI",              "T6",  "(xx)(yz) = (yz)(xx)",   Source::table, ""},
        {"Triad VII",             "T7",  "((xx)y)z = ((yx)x)z",   Source::table, ""},
        {"Triad VIII",            "T8",  "(xx)(yz) = y((zx)x)",   Source::table, ""},
        {"Triad IX",              "T9",  "(x(xy))z = y(z(xx))",   Source::table, ""},
        {"Frute",                 "FR",  "(x(xy))z = (y(zx))x",   Source::table, ""},
        {"Crazy Loop",            "CR",  "(x(xy))z = (yx)(xz)",   Source::table, ""},
        {"Krypton",               "KL",  "((xx)y)z = (x(yz))x",   Source::table, ""},

        {"Left semimedial",  "LSM", "xx*yz=xy*xz",        Source::semimedial, ""},
        {"Right semimedial", "RSM", "xy*zz=xz*yz",        Source::dual,       "left-semimedial-dual"},
        {"Cote",             "COT", "x(xy*z) = (z*xx)y",  Source::cote,       ""},
        {"Cote dual",        "COTD", "(z*yx)x = y(xx*z)", Source::dual,       ""},
        {"Manin",            "MAN", "x(y*xz) = (xx*y)z",  Source::manin,      ""},
        {"Manin dual",       "MAND", "(zx*y)x = z(y*xx)", Source::dual,       ""},
        {"Commutative Moufang quasigroup",      "CMQ",  "(xy*x)z = (y*xz)x", Source::cm_quasigroup, "identity-1"},
        {"Commutative Moufang quasigroup dual", "CMQD", "z(x*yx) = x(zx*y)", Source::dual,          "identity-1-dual"},
    };
    // clang-format on

    constexpr size_t table_rows = 39;

    std::string lower(std::string_view s) {
      std::string out(s);
      for (auto& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      return out;
    }

    void check_unique_abbrevs(std::vector<CatalogEntry> const& entries) {
      std::set<std::string> seen;
      for (auto const& e : entries) {
        auto const& a = e.identity.abbrev();
        if (!a.empty() && !seen.insert(lower(a)).second) {
          throw Error("duplicate abbreviation '" + a + "'");
        }
      }
    }
  }  // namespace

  std::string_view to_string(Source s) {
    switch (s) {
      case Source::table:
        return "table";
      case Source::semimedial:
        return "semimedial";
      case Source::cote:
        return "cote";
      case Source::manin:
        return "manin";
      case Source::cm_quasigroup:
        return "cm-quasigroup";
      case Source::dual:
        return "dual";
      case Source::user:
        return "user";
    }
    return "unknown";
  }

  std::string kebab_case(std::string_view name) {
    std::string out;
    bool        dash = false;
    for (char c : name) {
      if (std::isalnum(static_cast<unsigned char>(c))) {
        if (dash && !out.empty()) {
          out += '-';
        }
        dash = false;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      } else {
        dash = true;
      }
    }
    return out;
  }

  std::vector<CatalogEntry> const& catalog() {
    static std::vector<CatalogEntry> const entries = [] {
      std::vector<CatalogEntry> result;
      for (auto const& r : rows) {
        result.push_back(
            {parse_identity(r.formula).with_labels(r.name, r.abbrev),
             r.source,
             kebab_case(r.name),
             r.alias});
      }
      check_unique_abbrevs(result);
      return result;
    }();
    return entries;
  }

  std::vector<CatalogEntry> select_catalog(std::string_view selection) {
    auto const& all = catalog();
    if (selection == "table1") {
      return {all.begin(), all.begin() + table_rows};
    } else if (selection == "sections") {
      return {all.begin() + table_rows, all.end()};
    } else if (selection == "paper" || selection == "all") {
      return all;
    } else if (selection.starts_with("file:")) {
      return load_identity_file(std::string(selection.substr(5)));
    }
    throw Error("unknown catalog '" + std::string(selection)
                + "', expected table1, sections, paper, all or file:PATH");
  }

  std::optional<CatalogEntry> find_entry(std::string_view key) {
    auto k = lower(key);
    for (auto const& e : catalog()) {
      if (lower(e.identity.abbrev()) == k || e.key == k
          || (!e.alias.empty() && e.alias == k)) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::vector<CatalogEntry> read_identity_file(std::istream& is) {
    std::vector<CatalogEntry> result;
    std::string               line;
    size_t                    line_no = 0;
    while (std::getline(is, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      auto s1 = line.find(';');
      auto s2 = s1 == std::string::npos ? s1 : line.find(';', s1 + 1);
      if (s2 == std::string::npos) {
        throw Error("identity file, line " + std::to_string(line_no)
                    + ": expected name;abbrev;formula");
      }
      std::string name   = line.substr(0, s1);
      std::string abbrev = line.substr(s1 + 1, s2 - s1 - 1);
      try {
        auto id = parse_identity(std::string_view(line).substr(s2 + 1));
        result.push_back({id.with_labels(name, abbrev),
                          Source::user,
                          kebab_case(name),
                          ""});
      } catch (Error const& e) {
        throw Error("identity file, line " + std::to_string(line_no) + ": "
                    + e.what());
      }
    }
    check_unique_abbrevs(result);
    return result;
  }

  std::vector<CatalogEntry> load_identity_file(std::string const& path) {
    std::ifstream is(path);
    if (!is) {
      throw Error("cannot open identity file '" + path + "'");
    }
    return read_identity_file(is);
  }

  void write_identity_file(std::ostream&                    os,
                           std::vector<CatalogEntry> const& entries) {
    auto bad = [](std::string const& s) {
      return std::any_of(s.begin(), s.end(), [](char c) {
        return c == ';' || c == '\n' || c == '\r';
      });
    };
    os << "# name;abbrev;formula\n";
    for (auto const& e : entries) {
      auto const& id = e.identity;
      if (bad(id.name()) || bad(id.abbrev())) {
        throw Error("cannot write '" + id.name()
                    + "': names and abbreviations may not contain ';'");
      }
      os << id.name() << ';' << id.abbrev() << ';' << format_identity(id)
         << '\n';
    }
  }

}  // namespace gcensus
