//
// gcensus - counting finite groupoids that satisfy equational identities
//

#include "gcensus/groupoid.hpp"

#include <algorithm>  // for all_of, next_permutation
#include <istream>    // for istream
#include <limits>     // for numeric_limits
#include <numeric>    // for iota
#include <ostream>    // for ostream
#include <sstream>    // for istringstream, ostringstream
#include <stdexcept>  // for invalid_argument, out_of_range

namespace gcensus {

  ////////////////////////////////////////////////////////////////////////
  // Groupoid
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void validate_order(size_t order) {
      if (order == 0 || order > max_order) {
        throw std::invalid_argument("groupoid order must be in 1.."
                                    + std::to_string(max_order) + ", found "
                                    + std::to_string(order));
      }
    }
  }  // namespace

  Groupoid::Groupoid(size_t order) : _order(order), _table() {
    validate_order(order);
    _table.assign(order * order, 0);
  }

  Groupoid::Groupoid(size_t order, std::vector<element_type> table)
      : _order(order), _table(std::move(table)) {
    validate_order(order);
    if (_table.size() != order * order) {
      throw std::invalid_argument("expected a table with "
                                  + std::to_string(order * order)
                                  + " entries, found "
                                  + std::to_string(_table.size()));
    }
    for (auto v : _table) {
      if (v >= order) {
        throw std::invalid_argument("table entry " + std::to_string(v)
                                    + " is not less than the order "
                                    + std::to_string(order));
      }
    }
  }

  Groupoid
  Groupoid::from_rows(std::vector<std::vector<element_type>> const& rows) {
    std::vector<element_type> table;
    for (auto const& row : rows) {
      if (row.size() != rows.size()) {
        throw std::invalid_argument("Cayley table rows must have length "
                                    + std::to_string(rows.size()));
      }
      table.insert(table.end(), row.begin(), row.end());
    }
    return Groupoid(rows.size(), std::move(table));
  }

  element_type Groupoid::op(size_t x, size_t y) const {
    if (x >= _order || y >= _order) {
      throw std::out_of_range("element out of range for a groupoid of order "
                              + std::to_string(_order));
    }
    return (*this)(x, y);
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialGroupoid
  ////////////////////////////////////////////////////////////////////////

  PartialGroupoid::PartialGroupoid(size_t order)
      : _order(order), _cells(order * order, unfilled) {
    validate_order(order);
  }

  PartialGroupoid::PartialGroupoid(Groupoid const& g)
      : _order(g.order()), _cells(g.table().begin(), g.table().end()) {}

  std::optional<element_type> PartialGroupoid::get(size_t x, size_t y) const {
    if (x >= _order || y >= _order) {
      throw std::out_of_range("element out of range for a groupoid of order "
                              + std::to_string(_order));
    }
    auto v = _cells[x * _order + y];
    if (v == unfilled) {
      return std::nullopt;
    }
    return v;
  }

  void PartialGroupoid::set(size_t x, size_t y, element_type v) {
    if (x >= _order || y >= _order || v >= _order) {
      throw std::out_of_range("element out of range for a groupoid of order "
                              + std::to_string(_order));
    }
    _cells[x * _order + y] = v;
  }

  void PartialGroupoid::clear(size_t x, size_t y) {
    if (x >= _order || y >= _order) {
      throw std::out_of_range("element out of range for a groupoid of order "
                              + std::to_string(_order));
    }
    _cells[x * _order + y] = unfilled;
  }

  bool PartialGroupoid::is_complete() const noexcept {
    return std::all_of(
        _cells.begin(), _cells.end(), [](auto v) { return v != unfilled; });
  }

  Groupoid PartialGroupoid::completed() const {
    if (!is_complete()) {
      throw Error("the partial groupoid has unfilled cells");
    }
    return Groupoid(_order, _cells);
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<element_type> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto v : _images) {
      if (v >= _images.size() || seen[v]) {
        throw std::invalid_argument("images do not form a permutation");
      }
      seen[v] = true;
    }
  }

  Permutation Permutation::identity(size_t n) {
    std::vector<element_type> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  Permutation Permutation::inverse() const {
    std::vector<element_type> inv(_images.size());
    for (size_t i = 0; i < _images.size(); ++i) {
      inv[_images[i]] = static_cast<element_type>(i);
    }
    return Permutation(std::move(inv));
  }

  Permutation operator*(Permutation const& q, Permutation const& p) {
    if (q.degree() != p.degree()) {
      throw std::invalid_argument("cannot compose permutations of degrees "
                                  + std::to_string(q.degree()) + " and "
                                  + std::to_string(p.degree()));
    }
    std::vector<element_type> images(p.degree());
    for (size_t i = 0; i < p.degree(); ++i) {
      images[i] = q(p(i));
    }
    return Permutation(std::move(images));
  }

  std::vector<Permutation> all_permutations(size_t n) {
    std::vector<Permutation>  result;
    std::vector<element_type> images(n);
    std::iota(images.begin(), images.end(), 0);
    do {
      result.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Index encoding
  ////////////////////////////////////////////////////////////////////////

  index_type table_count(size_t n) {
    validate_order(n);
    index_type result = 1;
    for (size_t i = 0; i < n * n; ++i) {
      if (result > std::numeric_limits<index_type>::max() / n) {
        throw Error("there are too many groupoids of order " + std::to_string(n)
                    + " to index them");
      }
      result *= n;
    }
    return result;
  }

  Groupoid from_index(size_t n, index_type k) {
    if (k >= table_count(n)) {
      throw std::out_of_range("index " + std::to_string(k)
                              + " is out of range for order "
                              + std::to_string(n));
    }
    std::vector<element_type> table(n * n);
    for (size_t i = table.size(); i-- > 0;) {
      table[i] = static_cast<element_type>(k % n);
      k /= n;
    }
    return Groupoid(n, std::move(table));
  }

  index_type to_index(Groupoid const& g) {
    table_count(g.order());  // throws when the index would overflow
    index_type k = 0;
    for (auto v : g.table()) {
      k = k * g.order() + v;
    }
    return k;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism and parastrophe
  ////////////////////////////////////////////////////////////////////////

  Groupoid apply_iso(Groupoid const& g, Permutation const& p) {
    size_t const n = g.order();
    if (p.degree() != n) {
      throw std::invalid_argument("permutation of degree "
                                  + std::to_string(p.degree())
                                  + " applied to a groupoid of order "
                                  + std::to_string(n));
    }
    std::vector<element_type> table(n * n);
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        table[p(x) * n + p(y)] = p(g(x, y));
      }
    }
    return Groupoid(n, std::move(table));
  }

  index_type canonical_index(Groupoid const& g) {
    size_t const n    = g.order();
    index_type   best = to_index(g);
    std::vector<element_type> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<element_type> inv(n);
    while (std::next_permutation(images.begin(), images.end())) {
      for (size_t i = 0; i < n; ++i) {
        inv[images[i]] = static_cast<element_type>(i);
      }
      index_type k = 0;
      for (size_t x = 0; x < n; ++x) {
        for (size_t y = 0; y < n; ++y) {
          k = k * n + images[g(inv[x], inv[y])];
        }
      }
      best = std::min(best, k);
    }
    return best;
  }

  Groupoid canonical_form(Groupoid const& g) {
    return from_index(g.order(), canonical_index(g));
  }

  Groupoid opposite(Groupoid const& g) {
    size_t const              n = g.order();
    std::vector<element_type> table(n * n);
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        table[x * n + y] = g(y, x);
      }
    }
    return Groupoid(n, std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  bool is_quasigroup(Groupoid const& g) {
    size_t const      n = g.order();
    std::vector<bool> row_seen(n), col_seen(n);
    for (size_t i = 0; i < n; ++i) {
      std::fill(row_seen.begin(), row_seen.end(), false);
      std::fill(col_seen.begin(), col_seen.end(), false);
      for (size_t j = 0; j < n; ++j) {
        if (row_seen[g(i, j)] || col_seen[g(j, i)]) {
          return false;
        }
        row_seen[g(i, j)] = true;
        col_seen[g(j, i)] = true;
      }
    }
    return true;
  }

  bool is_associative(Groupoid const& g) {
    size_t const n = g.order();
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        for (size_t z = 0; z < n; ++z) {
          if (g(g(x, y), z) != g(x, g(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_commutative(Groupoid const& g) {
    size_t const n = g.order();
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = x + 1; y < n; ++y) {
        if (g(x, y) != g(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  void write_cayley(std::ostream& os, Groupoid const& g) {
    size_t const n = g.order();
    os << "order " << n << '\n';
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        os << (y == 0 ? "" : " ") << static_cast<unsigned>(g(x, y)) + 1;
      }
      os << '\n';
    }
  }

  std::string to_cayley_string(Groupoid const& g) {
    std::ostringstream os;
    write_cayley(os, g);
    return os.str();
  }

  std::vector<Groupoid> read_cayley(std::istream& is) {
    std::vector<Groupoid> result;
    std::string           line;
    size_t                line_no = 0;

    auto next_line = [&]() -> bool {
      while (std::getline(is, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
          continue;
        }
        return true;
      }
      return false;
    };
    auto fail = [&](std::string const& msg) {
      return Error("Cayley table, line " + std::to_string(line_no) + ": "
                   + msg);
    };

    while (next_line()) {
      std::istringstream header(line);
      std::string        word;
      long long          n = 0;
      std::string        extra;
      if (!(header >> word >> n) || word != "order" || (header >> extra)) {
        throw fail("expected a header 'order N'");
      }
      if (n < 1 || static_cast<size_t>(n) > max_order) {
        throw fail("order out of range");
      }
      std::vector<element_type> table;
      for (long long row = 0; row < n; ++row) {
        if (!next_line()) {
          throw fail("unexpected end of input inside a table");
        }
        std::istringstream cells(line);
        long long          v = 0;
        long long          count = 0;
        while (cells >> v) {
          if (v < 1 || v > n) {
            throw fail("entry " + std::to_string(v) + " not in 1.."
                       + std::to_string(n));
          }
          table.push_back(static_cast<element_type>(v - 1));
          ++count;
        }
        if (!cells.eof() || count != n) {
          throw fail("expected " + std::to_string(n) + " entries");
        }
      }
      result.emplace_back(static_cast<size_t>(n), std::move(table));
    }
    return result;
  }

  Groupoid parse_cayley(std::string const& text) {
    std::istringstream is(text);
    auto               tables = read_cayley(is);
    if (tables.size() != 1) {
      throw Error("expected exactly one Cayley table, found "
                  + std::to_string(tables.size()));
    }
    return tables.front();
  }

}  // namespace gcensus
