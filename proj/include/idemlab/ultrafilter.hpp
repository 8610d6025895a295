#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "idemlab/algebra.hpp"

namespace idemlab {

  // Subsets of the carrier as bitmasks, bit e set iff e is a member.
  using Subset = std::uint32_t;

  // A family of subsets of {0, ..., n-1}, stored as one membership bit per
  // subset. On a finite carrier every ultrafilter is principal.
  class FiniteUltrafilter {
   public:
    static constexpr std::size_t max_carrier = 16;

    FiniteUltrafilter(std::size_t n, std::vector<bool> members);

    // { S : p in S }
    static FiniteUltrafilter principal(std::size_t n, Element p);

    std::size_t carrier() const noexcept {
      return _n;
    }
    bool contains(Subset s) const {
      return _members[s];
    }
    // The generating point, if the family is { S : p in S } for some p.
    std::optional<Element> principal_point() const;

    // Proper, upward closed, closed under pairwise intersection and
    // containing S or its complement for every S. Direct scan over all pairs
    // of subsets.
    bool satisfies_axioms() const;

    friend bool operator==(FiniteUltrafilter const&, FiniteUltrafilter const&)
        = default;

   private:
    std::size_t       _n;
    std::vector<bool> _members;
  };

  // How the membership formula for u.v is nested.
  //   standard:   S in uv  iff  {b : {a : ab in S} in u} in v
  //   swapped:    u and v exchanged in the standard formula
  //   as_printed: S in uv  iff  {a : {b : ab in S} in u} in v
  // On principal ultrafilters standard gives p.q; the other two give q.p.
  enum class Nesting { standard, swapped, as_printed };

  char const* to_string(Nesting nesting) noexcept;

  // Evaluates the formula over every subset S literally.
  FiniteUltrafilter ultrafilter_product(Table const&             t,
                                        FiniteUltrafilter const& u,
                                        FiniteUltrafilter const& v,
                                        Nesting nesting = Nesting::standard);

  // Table on principal points: entry (p, q) is the generator of
  // principal(p) . principal(q). Throws CapExceededError when n > cap.
  Table extend_operation(Algebra const& a,
                         OpSymbol       op,
                         Nesting        nesting = Nesting::standard,
                         std::size_t    cap     = 12);

  // Every operation extended.
  Algebra extend_algebra(Algebra const& a,
                         Nesting        nesting = Nesting::standard,
                         std::size_t    cap     = 12);

  struct ExtensionReport {
    std::size_t carrier = 0;
    OpSymbol    op      = mul;
    bool        equals_original      = false;
    bool        original_associative = false;
    bool        extended_associative = false;
    // Associativity carried over (vacuous when the original is not
    // associative).
    bool        associativity_preserved = false;
    // The products were checked against the ultrafilter axioms; only for
    // carriers up to 6.
    bool        axioms_checked = false;
    bool        axioms_hold    = true;
    // First (p, q) where the extension differs from the original.
    std::optional<std::pair<Element, Element>> mismatch;

    bool ok() const noexcept {
      return equals_original && associativity_preserved && axioms_hold;
    }
  };

  ExtensionReport check_extension_laws(Algebra const& a,
                                       OpSymbol       op,
                                       std::size_t    cap = 12);

  nlohmann::json to_json(ExtensionReport const& report);

}  // namespace idemlab
