//
// gcensus - counting finite groupoids that satisfy equational identities
//

// Identities compiled to postfix programs over raw Cayley tables. These are
// the inner loops of both counting engines; the tree-walking evaluate() in
// term.hpp is the reference they are tested against.

#ifndef GCENSUS_PROGRAM_HPP_
#define GCENSUS_PROGRAM_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for int16_t, uint32_t
#include <span>     // for span
#include <vector>   // for vector

#include "gcensus/groupoid.hpp"  // for Groupoid, element_type
#include "gcensus/term.hpp"      // for Identity, Term

namespace gcensus {

  // Postfix code: a non-negative entry pushes an operand, apply pops two
  // values and pushes their product.
  struct Program {
    static constexpr std::int16_t apply = -1;

    std::vector<std::int16_t> code;
    size_t                    stack_depth = 0;
  };

  // Operands are slots into the identity's variables() list.
  Program compile(Term const& t, std::vector<char> const& variables);

  // Result of evaluating a ground program against a partial table.
  struct PartialValue {
    bool          known;
    std::uint32_t value;  // the element when known, else the blocking cell
  };

  //! An identity together with everything needed to test it quickly.
  class CompiledIdentity {
   public:
    static constexpr size_t max_stack = 64;

    explicit CompiledIdentity(Identity const& id);

    size_t arity() const noexcept {
      return _arity;
    }

    // table is row-major of size n * n.
    bool holds(std::span<element_type const> table, size_t n) const;
    bool holds(Groupoid const& g) const {
      return holds(g.table(), g.order());
    }

    // One program pair per assignment of elements of 0..n-1 to the
    // variables, with the values substituted as constants.
    struct Instance {
      Program lhs;
      Program rhs;
    };
    std::vector<Instance> instances(size_t n) const;

   private:
    Program _lhs;
    Program _rhs;
    size_t  _arity;
  };

  // cells holds PartialGroupoid::unfilled for unfilled entries. The blocking
  // cell reported is the first unfilled cell met in postfix order.
  PartialValue evaluate_ground(Program const&                p,
                               std::span<element_type const> cells,
                               size_t                        n);

}  // namespace gcensus

#endif  // GCENSUS_PROGRAM_HPP_
