#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idemlab/term.hpp"

namespace idemlab {

  // An n x n operation table, row-major; the row is the LEFT argument.
  class Table {
   public:
    // Throws InvalidArgumentError if cells.size() != n * n or an entry is out
    // of [0, n).
    Table(std::size_t n, std::vector<Element> const& cells);

    static Table from_function(std::size_t                               n,
                               std::function<Element(Element, Element)> f);

    std::size_t size() const noexcept {
      return _n;
    }

    Element operator()(Element a, Element b) const noexcept {
      return _cells[a * _n + b];
    }

    std::span<std::uint8_t const> cells() const noexcept {
      return _cells;
    }

    friend bool operator==(Table const&, Table const&) = default;
    friend auto operator<=>(Table const&, Table const&) = default;

   private:
    std::size_t               _n;
    std::vector<std::uint8_t> _cells;
  };

  // Finite algebra on the carrier {0, ..., n-1} with at least one binary
  // operation. Immutable after construction.
  class Algebra {
   public:
    static constexpr std::size_t max_carrier = 256;

    Algebra(std::size_t n, std::map<OpSymbol, Table> ops);
    Algebra(OpSymbol op, Table table);

    std::size_t size() const noexcept {
      return _n;
    }
    Signature signature() const;
    bool      has(OpSymbol op) const noexcept {
      return _ops.count(op) != 0;
    }
    // Throws UnknownSymbolError.
    Table const& table(OpSymbol op) const;

    std::map<OpSymbol, Table> const& tables() const noexcept {
      return _ops;
    }

    friend bool operator==(Algebra const&, Algebra const&) = default;
    friend auto operator<=>(Algebra const&, Algebra const&) = default;

   private:
    std::size_t               _n;
    std::map<OpSymbol, Table> _ops;
  };

  ////////////////////////////////////////////////////////////////////////////
  // Idempotents
  ////////////////////////////////////////////////////////////////////////////

  // Ascending. Throws UnknownSymbolError.
  std::vector<Element> idempotents(Algebra const& a, OpSymbol op);

  // Elements idempotent for every operation, i.e. e with {e} a subalgebra.
  std::vector<Element> common_idempotents(Algebra const& a);

  struct IdempotentReport {
    std::map<OpSymbol, std::vector<Element>> per_symbol;
    std::vector<Element>                     common;
  };

  IdempotentReport idempotent_report(Algebra const& a);

  // Iterates a, a^2, a^3, ... until a repeat at index i with period c, and
  // returns a^m for the least m >= i divisible by c. Throws
  // NotAssociativeError when op is not associative on a.
  Element find_idempotent_power(Algebra const& a, OpSymbol op, Element x);

  ////////////////////////////////////////////////////////////////////////////
  // Satisfaction
  ////////////////////////////////////////////////////////////////////////////

  // Outcome of a universally quantified check. On failure `witness` holds the
  // lexicographically least falsifying assignment (first variable most
  // significant).
  struct Verdict {
    bool                      holds = true;
    std::optional<Assignment> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  bool    satisfies_identity(Algebra const& a, Identity const& id);
  Verdict check_identity(Algebra const& a, Identity const& id);

  // Quantifies over the variables of q in ascending order.
  Verdict satisfies_quasi_identity(Algebra const& a, QuasiIdentity const& q);
  // Quantifies over exactly `vars`, in that order; `vars` must cover every
  // variable of q.
  Verdict satisfies_quasi_identity(Algebra const&       a,
                                   QuasiIdentity const& q,
                                   std::string_view     vars);

  bool is_associative(Algebra const& a, OpSymbol op);
  // x * (y + z) = x * y + x * z
  bool is_left_distributive(Algebra const& a,
                            OpSymbol       times = mul,
                            OpSymbol       plus  = add);
  // Both operations associative and * left distributive over +. Throws
  // UnknownSymbolError if either symbol is missing.
  bool is_left_semiring(Algebra const& a);

  ////////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////////

  // perm[i] is the new label of element i; table'[p a][p b] = p(table[a][b]).
  Algebra relabel(Algebra const& a, std::span<Element const> perm);

  // The relabeling whose tables, concatenated in symbol order and read
  // row-major, are lexicographically least. Brute force over all n!
  // permutations; throws CapExceededError when n > max_order.
  Algebra canonicalize(Algebra const& a, std::size_t max_order = 6);

  bool are_isomorphic(Algebra const& a,
                      Algebra const& b,
                      std::size_t    max_order = 6);

  ////////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////////
  //
  //   carrier <n>
  //   op <symbol>
  //   <row 0: n integers>
  //   ...
  //   <row n-1>
  //   op <symbol>
  //   ...

  // Throws ParseError with line and column.
  Algebra     parse_algebra(std::string_view text);
  std::string format_algebra(Algebra const& a);

}  // namespace idemlab
