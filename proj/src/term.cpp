//
// gcensus - counting finite groupoids that satisfy equational identities
//

#include "gcensus/term.hpp"

#include <algorithm>  // for sort, find
#include <map>        // for map
#include <stdexcept>  // for out_of_range

#include "gcensus/program.hpp"  // for CompiledIdentity

namespace gcensus {

  ParseError::ParseError(std::string const& what, size_t pos)
      : Error(pos == std::string::npos
                  ? what
                  : what + " (at offset " + std::to_string(pos) + ")"),
        _pos(pos) {}

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  Term Term::variable(char name) {
    if (name < 'a' || name > 'z') {
      throw Error(std::string("variables are single lowercase letters, found '")
                  + name + "'");
    }
    auto node  = std::make_shared<Node>();
    node->name = name;
    return Term(std::move(node));
  }

  Term Term::product(Term const& left, Term const& right) {
    auto node      = std::make_shared<Node>();
    node->left     = left._node;
    node->right    = right._node;
    node->products = left.size() + right.size() + 1;
    return Term(std::move(node));
  }

  Term Term::left() const {
    return Term(_node->left);
  }

  Term Term::right() const {
    return Term(_node->right);
  }

  bool operator==(Term const& a, Term const& b) {
    if (a._node == b._node) {
      return true;
    }
    if (a.is_variable() || b.is_variable()) {
      return a.is_variable() && b.is_variable() && a.name() == b.name();
    }
    return a.size() == b.size() && a.left() == b.left()
           && a.right() == b.right();
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string join(std::vector<char> vars) {
      std::sort(vars.begin(), vars.end());
      std::string s;
      for (char c : vars) {
        s += s.empty() ? "" : ", ";
        s += c;
      }
      return "{" + s + "}";
    }
  }  // namespace

  Identity::Identity(Term lhs, Term rhs, std::string name, std::string abbrev)
      : _lhs(std::move(lhs)),
        _rhs(std::move(rhs)),
        _name(std::move(name)),
        _abbrev(std::move(abbrev)),
        _vars(free_variables(_lhs)) {
    auto l = _vars;
    auto r = free_variables(_rhs);
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    if (l != r) {
      throw VariableMismatch("the sides of an identity use different variables: "
                             + join(l) + " and " + join(r));
    }
  }

  Identity Identity::with_labels(std::string name, std::string abbrev) const {
    return Identity(_lhs, _rhs, std::move(name), std::move(abbrev));
  }

  bool operator==(Identity const& a, Identity const& b) {
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    enum class Token { variable, lparen, rparen, star, end };

    class Parser {
     public:
      Parser(std::string_view text, size_t offset)
          : _text(text), _offset(offset), _pos(0) {}

      Term parse() {
        skip_space();
        if (peek() == Token::end) {
          throw ParseError("empty term", _offset + _pos);
        }
        Term t = expr();
        if (peek() == Token::rparen) {
          throw ParseError("unbalanced ')'", _offset + _pos);
        }
        if (peek() != Token::end) {
          throw ParseError("unexpected input", _offset + _pos);
        }
        return t;
      }

     private:
      void skip_space() {
        while (_pos < _text.size()
               && (_text[_pos] == ' ' || _text[_pos] == '\t'
                   || _text[_pos] == '\r' || _text[_pos] == '\n')) {
          ++_pos;
        }
      }

      bool starts_with(std::string_view s) const {
        return _text.substr(_pos, s.size()) == s;
      }

      // Leaves _pos at the token and records its length in _len.
      Token peek() {
        skip_space();
        if (_pos >= _text.size()) {
          _len = 0;
          return Token::end;
        }
        char c = _text[_pos];
        _len   = 1;
        if (c >= 'a' && c <= 'z') {
          return Token::variable;
        } else if (c == '(') {
          return Token::lparen;
        } else if (c == ')') {
          return Token::rparen;
        } else if (c == '*') {
          return Token::star;
        }
        for (std::string_view s : {"\\ast", "\xC2\xB7", "\xE2\x88\x97"}) {
          if (starts_with(s)) {
            _len = s.size();
            return Token::star;
          }
        }
        throw ParseError(std::string("illegal character '") + c + "'",
                         _offset + _pos);
      }

      void advance() {
        _pos += _len;
      }

      Term expr() {
        Term t = juxt();
        while (peek() == Token::star) {
          advance();
          t = Term::product(t, juxt());
        }
        return t;
      }

      Term juxt() {
        Term t = atom();
        for (auto tok = peek(); tok == Token::variable || tok == Token::lparen;
             tok      = peek()) {
          t = Term::product(t, atom());
        }
        return t;
      }

      Term atom() {
        switch (peek()) {
          case Token::variable: {
            char c = _text[_pos];
            advance();
            return Term::variable(c);
          }
          case Token::lparen: {
            size_t open = _pos;
            advance();
            if (peek() == Token::rparen) {
              throw ParseError("empty parentheses", _offset + _pos);
            }
            Term t = expr();
            if (peek() != Token::rparen) {
              throw ParseError("unbalanced '('", _offset + open);
            }
            advance();
            return t;
          }
          case Token::end:
            throw ParseError("expected a variable or '(' before the end",
                             _offset + _pos);
          default:
            throw ParseError("expected a variable or '('", _offset + _pos);
        }
      }

      std::string_view _text;
      size_t           _offset;
      size_t           _pos;
      size_t           _len = 0;
    };
  }  // namespace

  Term parse_term(std::string_view text) {
    return Parser(text, 0).parse();
  }

  Identity parse_identity(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("an identity needs exactly one '='", std::string::npos);
    }
    if (text.find('=', eq + 1) != std::string_view::npos) {
      throw ParseError("an identity needs exactly one '='",
                       text.find('=', eq + 1));
    }
    Term lhs = Parser(text.substr(0, eq), 0).parse();
    Term rhs = Parser(text.substr(eq + 1), eq + 1).parse();
    return Identity(std::move(lhs), std::move(rhs));
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void format_to(std::string& out, Term const& t) {
      if (t.is_variable()) {
        out += t.name();
        return;
      }
      for (Term const& operand : {t.left(), t.right()}) {
        if (operand.is_variable()) {
          out += operand.name();
        } else {
          out += '(';
          format_to(out, operand);
          out += ')';
        }
      }
    }
  }  // namespace

  std::string format_term(Term const& t) {
    std::string out;
    format_to(out, t);
    return out;
  }

  std::string format_identity(Identity const& id) {
    return format_term(id.lhs()) + " = " + format_term(id.rhs());
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void leaves(Term const& t, std::string& out) {
      if (t.is_variable()) {
        out += t.name();
      } else {
        leaves(t.left(), out);
        leaves(t.right(), out);
      }
    }

    std::string leaves(Term const& t) {
      std::string out;
      leaves(t, out);
      return out;
    }
  }  // namespace

  std::vector<char> free_variables(Term const& t) {
    std::vector<char> result;
    for (char c : leaves(t)) {
      if (std::find(result.begin(), result.end(), c) == result.end()) {
        result.push_back(c);
      }
    }
    return result;
  }

  bool is_bol_moufang_type(Identity const& id) {
    if (id.variables().size() != 3) {
      return false;
    }
    std::map<char, int> lhs, rhs;
    for (char c : leaves(id.lhs())) {
      ++lhs[c];
    }
    for (char c : leaves(id.rhs())) {
      ++rhs[c];
    }
    if (lhs != rhs) {
      return false;
    }
    std::vector<int> counts;
    for (auto const& [var, count] : lhs) {
      counts.push_back(count);
    }
    std::sort(counts.begin(), counts.end());
    return counts == std::vector<int>{1, 1, 2};
  }

  Term mirror(Term const& t) {
    if (t.is_variable()) {
      return t;
    }
    return Term::product(mirror(t.right()), mirror(t.left()));
  }

  Identity mirror(Identity const& id) {
    return Identity(mirror(id.lhs()), mirror(id.rhs()), id.name(), id.abbrev());
  }

  namespace {
    constexpr std::string_view rename_order = "xyzuvwabcdefghijklmnopqrst";

    Term rename(Term const& t, std::map<char, char> const& to) {
      if (t.is_variable()) {
        return Term::variable(to.at(t.name()));
      }
      return Term::product(rename(t.left(), to), rename(t.right(), to));
    }
  }  // namespace

  Identity normalize_variables(Identity const& id) {
    std::map<char, char> to;
    for (size_t i = 0; i < id.variables().size(); ++i) {
      to[id.variables()[i]] = rename_order[i];
    }
    return Identity(
        rename(id.lhs(), to), rename(id.rhs(), to), id.name(), id.abbrev());
  }

  bool equal_up_to_renaming(Identity const& a, Identity const& b) {
    return normalize_variables(a) == normalize_variables(b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  Assignment::Assignment(
      std::initializer_list<std::pair<char, element_type>> binds)
      : Assignment() {
    for (auto const& [var, value] : binds) {
      bind(var, value);
    }
  }

  void Assignment::bind(char var, element_type value) {
    if (var < 'a' || var > 'z') {
      throw Error(std::string("cannot bind '") + var + "', not a variable");
    }
    _values[var - 'a'] = value;
  }

  bool Assignment::bound(char var) const {
    return var >= 'a' && var <= 'z' && _values[var - 'a'] >= 0;
  }

  element_type Assignment::at(char var) const {
    if (!bound(var)) {
      throw UnboundVariable(std::string("variable '") + var + "' is unbound");
    }
    return static_cast<element_type>(_values[var - 'a']);
  }

  namespace {
    element_type leaf_value(Term const& t, size_t order, Assignment const& a) {
      auto v = a.at(t.name());
      if (v >= order) {
        throw std::out_of_range("variable '" + std::string(1, t.name())
                                + "' is bound to an element out of range");
      }
      return v;
    }
  }  // namespace

  element_type evaluate(Term const& t, Groupoid const& g, Assignment const& a) {
    if (t.is_variable()) {
      return leaf_value(t, g.order(), a);
    }
    return g.op(evaluate(t.left(), g, a), evaluate(t.right(), g, a));
  }

  std::optional<element_type> evaluate_partial(Term const&           t,
                                               PartialGroupoid const& pg,
                                               Assignment const&      a) {
    if (t.is_variable()) {
      return leaf_value(t, pg.order(), a);
    }
    auto l = evaluate_partial(t.left(), pg, a);
    auto r = evaluate_partial(t.right(), pg, a);
    if (!l || !r) {
      return std::nullopt;
    }
    return pg.get(*l, *r);
  }

  bool holds(Identity const& id, Groupoid const& g) {
    return CompiledIdentity(id).holds(g);
  }

}  // namespace gcensus
