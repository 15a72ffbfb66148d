//
// gcensus - counting finite groupoids that satisfy equational identities
//

// This file declares finite groupoids stored as Cayley tables, partially
// filled tables used by the backtracking search, and element relabellings.
//
// Elements are 0-based. The text format used for dumping tables is 1-based:
//
//   order 2
//   1 2
//   2 1
//
// Lines starting with '#' and blank lines are ignored when reading.

#ifndef GCENSUS_GROUPOID_HPP_
#define GCENSUS_GROUPOID_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t, uint64_t
#include <iosfwd>    // for istream, ostream
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "gcensus/exception.hpp"  // for Error

namespace gcensus {

  using element_type = std::uint8_t;
  // Dense encoding of a whole Cayley table, see from_index.
  using index_type = std::uint64_t;

  constexpr size_t max_order = 254;

  class Groupoid {
   public:
    // The constant-0 table.
    explicit Groupoid(size_t order);
    // Row-major; throws std::invalid_argument on a bad length or entry.
    Groupoid(size_t order, std::vector<element_type> table);
    // Throws std::invalid_argument unless rows is square.
    static Groupoid from_rows(std::vector<std::vector<element_type>> const& rows);

    size_t order() const noexcept {
      return _order;
    }

    // Throws std::out_of_range.
    element_type op(size_t x, size_t y) const;

    element_type operator()(size_t x, size_t y) const noexcept {
      return _table[x * _order + y];
    }

    std::span<element_type const> table() const noexcept {
      return _table;
    }

    friend bool operator==(Groupoid const&, Groupoid const&) = default;
    friend auto operator<=>(Groupoid const&, Groupoid const&) = default;

   private:
    size_t                    _order;
    std::vector<element_type> _table;
  };

  class PartialGroupoid {
   public:
    static constexpr element_type unfilled = 0xFF;

    explicit PartialGroupoid(size_t order);
    explicit PartialGroupoid(Groupoid const& g);

    size_t order() const noexcept {
      return _order;
    }

    std::optional<element_type> get(size_t x, size_t y) const;
    void                        set(size_t x, size_t y, element_type v);
    void                        clear(size_t x, size_t y);

    bool is_complete() const noexcept;
    // Throws Error unless every cell is filled.
    Groupoid completed() const;

   private:
    size_t                    _order;
    std::vector<element_type> _cells;
  };

  //! A bijection on 0..n-1; images()[i] is the image of i.
  class Permutation {
   public:
    // Throws std::invalid_argument unless images is a bijection.
    explicit Permutation(std::vector<element_type> images);
    static Permutation identity(size_t n);

    size_t degree() const noexcept {
      return _images.size();
    }
    element_type operator()(size_t i) const noexcept {
      return _images[i];
    }
    std::vector<element_type> const& images() const noexcept {
      return _images;
    }

    Permutation inverse() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<element_type> _images;
  };

  // (q * p)(i) = q(p(i)), i.e. apply p first.
  Permutation operator*(Permutation const& q, Permutation const& p);

  // All n! permutations in lexicographic order of their image sequences.
  std::vector<Permutation> all_permutations(size_t n);

  // n^(n*n); throws Error when this does not fit in index_type.
  index_type table_count(size_t n);

  // Row-major big-endian base-n digits, so from_index(n, 0) is the constant-0
  // table and cell (0, 0) is the most significant digit.
  Groupoid   from_index(size_t n, index_type k);
  index_type to_index(Groupoid const& g);

  // r(p(x), p(y)) = p(g(x, y)). Throws std::invalid_argument on a degree
  // mismatch.
  Groupoid apply_iso(Groupoid const& g, Permutation const& p);

  // Minimum of to_index over the isomorphism orbit of g.
  index_type canonical_index(Groupoid const& g);
  Groupoid   canonical_form(Groupoid const& g);

  // The (12)-parastrophe: r(x, y) = g(y, x).
  Groupoid opposite(Groupoid const& g);

  bool is_quasigroup(Groupoid const& g);
  bool is_associative(Groupoid const& g);
  bool is_commutative(Groupoid const& g);

  void        write_cayley(std::ostream& os, Groupoid const& g);
  std::string to_cayley_string(Groupoid const& g);
  // Reads every table in the stream. Throws Error on malformed input.
  std::vector<Groupoid> read_cayley(std::istream& is);
  Groupoid              parse_cayley(std::string const& text);

}  // namespace gcensus

#endif  // GCENSUS_GROUPOID_HPP_
