//
// gcensus - counting finite groupoids that satisfy equational identities
//

// This file declares terms and identities over a single binary operation,
// together with the small identity language used to write them down:
//
//   expr   ::= juxt ('*' juxt)*
//   juxt   ::= atom atom*
//   atom   ::= variable | '(' expr ')'
//
// Juxtaposition binds tighter than '*'; both are left-associative. So
// "xx*yz" is (x.x).(y.z) and "x(xy*z)" is x.((x.y).z). The tokens "\ast",
// "·" (U+00B7) and "∗" (U+2217) are accepted as synonyms for '*'.

#ifndef GCENSUS_TERM_HPP_
#define GCENSUS_TERM_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for int16_t
#include <initializer_list>  // for initializer_list
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "gcensus/exception.hpp"  // for Error
#include "gcensus/groupoid.hpp"   // for Groupoid, PartialGroupoid, element_type

namespace gcensus {

  // Raised for malformed identity text; position() is a byte offset into the
  // input, or npos when the error is not tied to a position.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, size_t pos);
    size_t position() const noexcept {
      return _pos;
    }

   private:
    size_t _pos;
  };

  class VariableMismatch : public Error {
   public:
    using Error::Error;
  };

  class UnboundVariable : public Error {
   public:
    using Error::Error;
  };

  //! A binary tree whose leaves are variables (single lowercase letters).
  //! Nodes are immutable and shared, so copying a Term is cheap.
  class Term {
   public:
    static Term variable(char name);
    static Term product(Term const& left, Term const& right);

    bool is_variable() const noexcept {
      return _node->left == nullptr;
    }
    // Only meaningful for variables.
    char name() const noexcept {
      return _node->name;
    }
    // Only meaningful for products.
    Term left() const;
    Term right() const;

    // Number of product nodes.
    size_t size() const noexcept {
      return _node->products;
    }

    friend bool operator==(Term const& a, Term const& b);

   private:
    struct Node {
      char                        name = 0;
      size_t                      products = 0;
      std::shared_ptr<Node const> left;
      std::shared_ptr<Node const> right;
    };

    explicit Term(std::shared_ptr<Node const> node) : _node(std::move(node)) {}

    std::shared_ptr<Node const> _node;
  };

  class Identity {
   public:
    // Throws VariableMismatch if the two sides use different variable sets.
    Identity(Term lhs, Term rhs, std::string name = "", std::string abbrev = "");

    Term const& lhs() const noexcept {
      return _lhs;
    }
    Term const& rhs() const noexcept {
      return _rhs;
    }
    std::string const& name() const noexcept {
      return _name;
    }
    std::string const& abbrev() const noexcept {
      return _abbrev;
    }

    // Variables in order of first occurrence in a left-to-right walk of lhs.
    std::vector<char> const& variables() const noexcept {
      return _vars;
    }

    Identity with_labels(std::string name, std::string abbrev) const;

    // Structural equality of the two sides; labels are ignored.
    friend bool operator==(Identity const& a, Identity const& b);

   private:
    Term              _lhs;
    Term              _rhs;
    std::string       _name;
    std::string       _abbrev;
    std::vector<char> _vars;
  };

  Identity parse_identity(std::string_view text);
  Term     parse_term(std::string_view text);

  // Every product operand that is not a variable is parenthesised and no
  // '*' is emitted, e.g. "x(y(zx)) = ((xy)z)x".
  std::string format_term(Term const& t);
  std::string format_identity(Identity const& id);

  std::vector<char> free_variables(Term const& t);

  // Three distinct variables; one occurs exactly twice on each side and the
  // other two exactly once on each side. Variable order is not compared.
  bool is_bol_moufang_type(Identity const& id);

  // Reverses every product recursively: (a.b) becomes (b'.a').
  Term     mirror(Term const& t);
  Identity mirror(Identity const& id);

  // Renames variables so that their first-occurrence order in lhs becomes
  // x, y, z, u, v, w, a, b, ..., t.
  Identity normalize_variables(Identity const& id);

  bool equal_up_to_renaming(Identity const& a, Identity const& b);

  //! Values bound to variables 'a'..'z'.
  class Assignment {
   public:
    Assignment() {
      _values.fill(-1);
    }
    Assignment(std::initializer_list<std::pair<char, element_type>> binds);

    void bind(char var, element_type value);
    bool bound(char var) const;
    // Throws UnboundVariable.
    element_type at(char var) const;

   private:
    std::array<std::int16_t, 26> _values;
  };

  // Throws UnboundVariable, and std::out_of_range for elements >= order.
  element_type evaluate(Term const& t, Groupoid const& g, Assignment const& a);

  // std::nullopt means some product addressed an unfilled cell.
  std::optional<element_type> evaluate_partial(Term const&           t,
                                               PartialGroupoid const& pg,
                                               Assignment const&      a);

  // Checks all order^k assignments, k the number of distinct variables.
  bool holds(Identity const& id, Groupoid const& g);

}  // namespace gcensus

#endif  // GCENSUS_TERM_HPP_
