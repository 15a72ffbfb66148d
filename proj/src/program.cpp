//
// gcensus - counting finite groupoids that satisfy equational identities
//

#include "gcensus/program.hpp"

#include <algorithm>  // for find, max
#include <array>      // for array

namespace gcensus {

  namespace {
    size_t emit(Term const& t, std::vector<char> const& vars, Program& p) {
      if (t.is_variable()) {
        auto it = std::find(vars.begin(), vars.end(), t.name());
        p.code.push_back(static_cast<std::int16_t>(it - vars.begin()));
        return 1;
      }
      size_t left  = emit(t.left(), vars, p);
      size_t right = emit(t.right(), vars, p);
      p.code.push_back(Program::apply);
      return std::max(left, right + 1);
    }

    Program substitute(Program const& p, std::span<element_type const> values) {
      Program result = p;
      for (auto& c : result.code) {
        if (c != Program::apply) {
          c = values[c];
        }
      }
      return result;
    }

    inline element_type run(Program const&                p,
                            element_type const*           values,
                            element_type const*           table,
                            size_t                        n) {
      std::array<element_type, CompiledIdentity::max_stack> stack;
      size_t                                               top = 0;
      for (auto c : p.code) {
        if (c == Program::apply) {
          --top;
          stack[top - 1] = table[stack[top - 1] * n + stack[top]];
        } else {
          stack[top++] = values[c];
        }
      }
      return stack[0];
    }
  }  // namespace

  Program compile(Term const& t, std::vector<char> const& variables) {
    Program p;
    p.stack_depth = emit(t, variables, p);
    return p;
  }

  CompiledIdentity::CompiledIdentity(Identity const& id)
      : _lhs(compile(id.lhs(), id.variables())),
        _rhs(compile(id.rhs(), id.variables())),
        _arity(id.variables().size()) {
    if (std::max(_lhs.stack_depth, _rhs.stack_depth) > max_stack) {
      throw Error("identity is too deeply nested to compile");
    }
  }

  bool CompiledIdentity::holds(std::span<element_type const> table,
                               size_t                        n) const {
    std::array<element_type, 26> values{};
    // Odometer over all n^arity assignments.
    while (true) {
      if (run(_lhs, values.data(), table.data(), n)
          != run(_rhs, values.data(), table.data(), n)) {
        return false;
      }
      size_t i = 0;
      for (; i < _arity; ++i) {
        if (++values[i] < n) {
          break;
        }
        values[i] = 0;
      }
      if (i == _arity) {
        return true;
      }
    }
  }

  std::vector<CompiledIdentity::Instance>
  CompiledIdentity::instances(size_t n) const {
    std::vector<Instance>     result;
    std::vector<element_type> values(_arity, 0);
    while (true) {
      result.push_back({substitute(_lhs, values), substitute(_rhs, values)});
      size_t i = 0;
      for (; i < _arity; ++i) {
        if (++values[i] < n) {
          break;
        }
        values[i] = 0;
      }
      if (i == _arity) {
        return result;
      }
    }
  }

  PartialValue evaluate_ground(Program const&                p,
                               std::span<element_type const> cells,
                               size_t                        n) {
    std::array<element_type, CompiledIdentity::max_stack> stack;
    size_t                                               top = 0;
    for (auto c : p.code) {
      if (c == Program::apply) {
        --top;
        auto cell = stack[top - 1] * n + stack[top];
        auto v    = cells[cell];
        if (v == PartialGroupoid::unfilled) {
          return {false, static_cast<std::uint32_t>(cell)};
        }
        stack[top - 1] = v;
      } else {
        stack[top++] = static_cast<element_type>(c);
      }
    }
    return {true, stack[0]};
  }

}  // namespace gcensus
