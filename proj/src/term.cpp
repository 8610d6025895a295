#include "idemlab/term.hpp"

#include <algorithm>
#include <functional>

#include "idemlab/algebra.hpp"
#include "idemlab/error.hpp"

namespace idemlab {

  Signature::Signature(std::initializer_list<OpSymbol> symbols)
      : _symbols(symbols) {
    std::sort(_symbols.begin(), _symbols.end());
    _symbols.erase(std::unique(_symbols.begin(), _symbols.end()),
                   _symbols.end());
  }

  Signature::Signature(std::string_view symbols) : _symbols(symbols) {
    std::sort(_symbols.begin(), _symbols.end());
    _symbols.erase(std::unique(_symbols.begin(), _symbols.end()),
                   _symbols.end());
  }

  ////////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////////

  Term Term::variable(char name) {
    if (name < 'a' || name > 'z') {
      throw InvalidArgumentError(std::string("invalid variable name '") + name
                                 + "'");
    }
    auto node = std::make_shared<Node>();
    node->var = name;
    return Term(std::move(node));
  }

  Term Term::apply(OpSymbol op, Term left, Term right) {
    auto node   = std::make_shared<Node>();
    node->op    = op;
    node->depth = 1 + std::max(left.depth(), right.depth());
    node->size  = 1 + left.size() + right.size();
    node->left  = std::move(left);
    node->right = std::move(right);
    return Term(std::move(node));
  }

  bool Term::is_variable() const noexcept {
    return _node->op == 0;
  }

  char Term::name() const {
    if (!is_variable()) {
      throw InvalidArgumentError("name() called on an application");
    }
    return _node->var;
  }

  OpSymbol Term::op() const {
    if (is_variable()) {
      throw InvalidArgumentError("op() called on a variable");
    }
    return _node->op;
  }

  Term const& Term::left() const {
    if (is_variable()) {
      throw InvalidArgumentError("left() called on a variable");
    }
    return _node->left;
  }

  Term const& Term::right() const {
    if (is_variable()) {
      throw InvalidArgumentError("right() called on a variable");
    }
    return _node->right;
  }

  std::size_t Term::depth() const noexcept {
    return _node->depth;
  }

  std::size_t Term::size() const noexcept {
    return _node->size;
  }

  namespace {
    void collect(Term const& t, std::string& vars, std::string& ops) {
      if (t.is_variable()) {
        vars.push_back(t.name());
        return;
      }
      ops.push_back(t.op());
      collect(t.left(), vars, ops);
      collect(t.right(), vars, ops);
    }

    std::string sorted_unique(std::string s) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return s;
    }
  }  // namespace

  std::string Term::variables() const {
    std::string vars, ops;
    collect(*this, vars, ops);
    return sorted_unique(std::move(vars));
  }

  std::string Term::symbols() const {
    std::string vars, ops;
    collect(*this, vars, ops);
    return sorted_unique(std::move(ops));
  }

  bool operator==(Term const& a, Term const& b) {
    if (a._node == b._node) {
      return true;
    }
    if (a.is_variable() || b.is_variable()) {
      return a.is_variable() && b.is_variable() && a.name() == b.name();
    }
    return a.op() == b.op() && a.size() == b.size() && a.left() == b.left()
           && a.right() == b.right();
  }

  std::string Identity::variables() const {
    return sorted_unique(lhs.variables() + rhs.variables());
  }

  std::string QuasiIdentity::variables() const {
    std::string all = conclusion.variables();
    for (auto const& p : premises) {
      all += p.variables();
    }
    return sorted_unique(std::move(all));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////////

  namespace {

    class Parser {
     public:
      Parser(std::string_view text, Signature const& sig)
          : _text(text), _sig(sig) {}

      Term sum() {
        std::size_t const start = skip();
        Term              lhs   = product();
        if (peek() != '+') {
          return lhs;
        }
        require_symbol(add);
        ++_pos;
        Term rhs = product();
        if (peek() == '+') {
          throw AmbiguityError(
              "unparenthesized sum of three or more terms starting", start);
        }
        return Term::apply(add, std::move(lhs), std::move(rhs));
      }

      Identity identity() {
        Term lhs = sum();
        expect('=');
        Term rhs = sum();
        return Identity{std::move(lhs), std::move(rhs)};
      }

      QuasiIdentity quasi_identity() {
        std::vector<Identity> parts;
        parts.push_back(identity());
        while (peek() == '&') {
          ++_pos;
          parts.push_back(identity());
        }
        if (peek() != '-') {
          if (parts.size() > 1) {
            throw ParseError("expected '->' after premises", skip());
          }
          return QuasiIdentity(std::move(parts.front()));
        }
        ++_pos;
        if (_pos >= _text.size() || _text[_pos] != '>') {
          throw ParseError("expected '->'", _pos - 1);
        }
        ++_pos;
        Identity conclusion = identity();
        return QuasiIdentity(std::move(parts), std::move(conclusion));
      }

      void finish() {
        if (peek() != 0) {
          throw ParseError(std::string("unexpected character '")
                               + _text[_pos] + "'",
                           _pos);
        }
      }

     private:
      std::size_t skip() {
        while (_pos < _text.size()
               && (_text[_pos] == ' ' || _text[_pos] == '\t'
                   || _text[_pos] == '\n' || _text[_pos] == '\r')) {
          ++_pos;
        }
        return _pos;
      }

      // Next significant character, 0 at end. U+00B7 is reported as '*'.
      char peek() {
        skip();
        if (_pos >= _text.size()) {
          return 0;
        }
        if (_text.substr(_pos, 2) == "\xC2\xB7") {
          return mul;
        }
        return _text[_pos];
      }

      void consume_mul() {
        _pos += (_text[_pos] == mul) ? 1 : 2;
      }

      void expect(char c) {
        if (peek() != c) {
          if (_pos >= _text.size()) {
            throw ParseError(std::string("expected '") + c
                                 + "' but reached end of input",
                             _pos);
          }
          throw ParseError(std::string("expected '") + c + "', found '"
                               + _text[_pos] + "'",
                           _pos);
        }
        ++_pos;
      }

      void require_symbol(OpSymbol op) {
        if (!_sig.contains(op)) {
          throw UnknownSymbolError(op);
        }
      }

      static bool starts_factor(char c) {
        return (c >= 'a' && c <= 'z') || c == '(';
      }

      Term product() {
        std::size_t const start = skip();
        Term              lhs   = factor();
        char              c     = peek();
        if (c != mul && !starts_factor(c)) {
          return lhs;
        }
        require_symbol(mul);
        if (c == mul) {
          consume_mul();
        }
        Term rhs = factor();
        c        = peek();
        if (c == mul || starts_factor(c)) {
          throw AmbiguityError(
              "unparenthesized product of three or more factors starting",
              start);
        }
        return Term::apply(mul, std::move(lhs), std::move(rhs));
      }

      Term factor() {
        char const c = peek();
        if (c >= 'a' && c <= 'z') {
          ++_pos;
          return Term::variable(c);
        }
        if (c == '(') {
          ++_pos;
          Term inner = sum();
          expect(')');
          return inner;
        }
        if (c == 0) {
          throw ParseError("unexpected end of input", _pos);
        }
        throw ParseError(std::string("unexpected character '") + _text[_pos]
                             + "'",
                         _pos);
      }

      std::string_view _text;
      Signature const& _sig;
      std::size_t      _pos = 0;
    };

  }  // namespace

  Term parse_term(std::string_view text, Signature const& sig) {
    Parser p(text, sig);
    Term   t = p.sum();
    p.finish();
    return t;
  }

  Identity parse_identity(std::string_view text, Signature const& sig) {
    Parser   p(text, sig);
    Identity id = p.identity();
    p.finish();
    return id;
  }

  QuasiIdentity parse_quasi_identity(std::string_view text,
                                     Signature const& sig) {
    Parser        p(text, sig);
    QuasiIdentity q = p.quasi_identity();
    p.finish();
    return q;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////////

  namespace {
    void render_into(Term const& t, std::string& out) {
      if (t.is_variable()) {
        out.push_back(t.name());
        return;
      }
      out.push_back('(');
      render_into(t.left(), out);
      if (t.op() != mul) {
        out.push_back(t.op());
      }
      render_into(t.right(), out);
      out.push_back(')');
    }
  }  // namespace

  std::string render_term(Term const& t) {
    std::string out;
    render_into(t, out);
    return out;
  }

  std::string render(Identity const& id) {
    return render_term(id.lhs) + " = " + render_term(id.rhs);
  }

  std::string render(QuasiIdentity const& q) {
    std::string out;
    for (std::size_t i = 0; i < q.premises.size(); ++i) {
      out += (i == 0 ? "" : " & ") + render(q.premises[i]);
    }
    if (!q.premises.empty()) {
      out += " -> ";
    }
    return out + render(q.conclusion);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////////

  std::size_t occurrences(Term const& t, char var) {
    if (t.is_variable()) {
      return t.name() == var ? 1 : 0;
    }
    return occurrences(t.left(), var) + occurrences(t.right(), var);
  }

  bool is_rightmost(Term const& t, char var) {
    if (occurrences(t, var) != 1) {
      return false;
    }
    // Walk down to the unique occurrence; it must never be on the left.
    Term const* node = &t;
    while (!node->is_variable()) {
      if (occurrences(node->left(), var) != 0) {
        return false;
      }
      node = &node->right();
    }
    return true;
  }

  Term substitute(Term const& t, std::map<char, Term> const& subst) {
    if (t.is_variable()) {
      auto it = subst.find(t.name());
      return it == subst.end() ? t : it->second;
    }
    return Term::apply(
        t.op(), substitute(t.left(), subst), substitute(t.right(), subst));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////////

  Element evaluate(Term const& t, Algebra const& a, Assignment const& asg) {
    if (t.is_variable()) {
      auto it = asg.find(t.name());
      if (it == asg.end()) {
        throw UnassignedVariableError(t.name());
      }
      if (it->second >= a.size()) {
        throw InvalidArgumentError("assigned value out of the carrier");
      }
      return it->second;
    }
    Table const& table = a.table(t.op());
    return table(evaluate(t.left(), a, asg), evaluate(t.right(), a, asg));
  }

  TermProgram::TermProgram(Term const&      t,
                           std::string_view vars,
                           std::string_view ops) {
    if (t.depth() > 60) {
      throw InvalidArgumentError("term too deep for compiled evaluation");
    }
    std::function<void(Term const&)> emit = [&](Term const& s) {
      if (s.is_variable()) {
        auto slot = vars.find(s.name());
        if (slot == std::string_view::npos) {
          throw UnassignedVariableError(s.name());
        }
        _code.push_back({true, static_cast<std::uint8_t>(slot)});
        return;
      }
      emit(s.left());
      emit(s.right());
      auto slot = ops.find(s.op());
      if (slot == std::string_view::npos) {
        throw UnknownSymbolError(s.op());
      }
      _code.push_back({false, static_cast<std::uint8_t>(slot)});
    };
    emit(t);
  }

}  // namespace idemlab
