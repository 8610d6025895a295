#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idemlab {

  class Algebra;

  // Carrier elements are 0, 1, ..., n - 1.
  using Element = std::uint32_t;

  // Operation symbols are single characters: '*' (juxtaposition) and '+'.
  using OpSymbol = char;

  inline constexpr OpSymbol mul = '*';
  inline constexpr OpSymbol add = '+';

  // A set of operation symbols, stored sorted.
  class Signature {
   public:
    Signature() = default;
    Signature(std::initializer_list<OpSymbol> symbols);
    explicit Signature(std::string_view symbols);

    static Signature standard() {
      return Signature{mul, add};
    }

    bool contains(OpSymbol op) const noexcept {
      return _symbols.find(op) != std::string::npos;
    }
    std::string const& symbols() const noexcept {
      return _symbols;
    }
    std::size_t size() const noexcept {
      return _symbols.size();
    }

   private:
    std::string _symbols;
  };

  // Immutable binary term tree. Copies share structure.
  class Term {
   public:
    static Term variable(char name);
    static Term apply(OpSymbol op, Term left, Term right);

    bool is_variable() const noexcept;
    // Only valid on variables.
    char name() const;
    // Only valid on applications.
    OpSymbol op() const;
    Term const& left() const;
    Term const& right() const;

    std::size_t depth() const noexcept;
    std::size_t size() const noexcept;

    // Distinct variable names, ascending.
    std::string variables() const;
    // Distinct operation symbols, ascending.
    std::string symbols() const;

    friend bool operator==(Term const& a, Term const& b);

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node) : _node(std::move(node)) {}
    std::shared_ptr<Node const> _node;
  };

  struct Term::Node {
    char        var = 0;
    OpSymbol    op  = 0;
    Term        left{nullptr};
    Term        right{nullptr};
    std::size_t depth = 1;
    std::size_t size  = 1;
  };

  inline Term operator*(Term const& a, Term const& b) {
    return Term::apply(mul, a, b);
  }
  inline Term operator+(Term const& a, Term const& b) {
    return Term::apply(add, a, b);
  }

  struct Identity {
    Term lhs;
    Term rhs;

    std::string variables() const;
    friend bool operator==(Identity const&, Identity const&) = default;
  };

  // premises -> conclusion, universally quantified. No premises means a plain
  // identity.
  struct QuasiIdentity {
    std::vector<Identity> premises;
    Identity              conclusion;

    QuasiIdentity(std::vector<Identity> ps, Identity c)
        : premises(std::move(ps)), conclusion(std::move(c)) {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    QuasiIdentity(Identity id) : premises(), conclusion(std::move(id)) {}

    std::string variables() const;
    friend bool operator==(QuasiIdentity const&, QuasiIdentity const&)
        = default;
  };

  ////////////////////////////////////////////////////////////////////////////
  // Concrete syntax
  ////////////////////////////////////////////////////////////////////////////
  //
  //   sum     := product [ '+' product ]
  //   product := factor [ ['*'] factor ]
  //   factor  := variable | '(' sum ')'
  //
  // Variables are single lowercase letters. "xyz" and "x+y+z" are rejected
  // with AmbiguityError: no association is assumed in a non-associative
  // setting. "xy+z" reads as (xy)+z. The middle dot U+00B7 is accepted as '*'.

  Term          parse_term(std::string_view text,
                           Signature const& sig = Signature::standard());
  // "LHS = RHS"
  Identity      parse_identity(std::string_view text,
                               Signature const& sig = Signature::standard());
  // "P1 & P2 & ... -> C", or a bare identity.
  QuasiIdentity parse_quasi_identity(std::string_view text,
                                     Signature const& sig
                                     = Signature::standard());

  // Fully parenthesized: every application is wrapped, products are written
  // by juxtaposition, e.g. "(x(vx))", "(x+x)".
  std::string render_term(Term const& t);
  std::string render(Identity const& id);
  std::string render(QuasiIdentity const& q);

  ////////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////////

  std::size_t occurrences(Term const& t, char var);

  // v occurs exactly once in t and, in every application above the
  // occurrence, it lies in the right argument. Absent v gives false.
  bool is_rightmost(Term const& t, char var);

  // Simultaneous substitution; unmapped variables are kept.
  Term substitute(Term const& t, std::map<char, Term> const& subst);

  ////////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////////

  using Assignment = std::map<char, Element>;

  // Throws UnassignedVariableError or UnknownSymbolError.
  Element evaluate(Term const& t, Algebra const& a, Assignment const& asg);

  // Postfix form of a term over numbered variable slots and operation slots,
  // for the inner loops of satisfaction checking and model search.
  class TermProgram {
   public:
    // `vars` fixes the slot of each variable, `ops` the slot of each
    // operation symbol. Throws UnknownSymbolError if t uses a symbol not in
    // `ops`, and UnassignedVariableError if t uses a variable not in `vars`.
    TermProgram(Term const& t, std::string_view vars, std::string_view ops);

    // `lookup(op_slot, a, b)` returns the product, or a negative value when it
    // is not known yet; that unknown propagates to the result.
    template <typename Lookup>
    int run(std::span<int const> values, Lookup&& lookup) const {
      int  stack[64];
      int* top = stack;
      for (auto const& ins : _code) {
        if (ins.is_var) {
          *top++ = values[ins.slot];
        } else {
          int const b = *--top;
          int const a = top[-1];
          top[-1]     = (a < 0 || b < 0) ? -1 : lookup(ins.slot, a, b);
        }
      }
      return stack[0];
    }

    std::size_t length() const noexcept {
      return _code.size();
    }

   private:
    struct Instruction {
      bool          is_var;
      std::uint8_t  slot;
    };
    std::vector<Instruction> _code;
  };

}  // namespace idemlab
