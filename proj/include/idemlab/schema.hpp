#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idemlab/algebra.hpp"
#include "idemlab/error.hpp"
#include "idemlab/term.hpp"

namespace idemlab {

  // Terms r(x), s(x, y), t(x, y, z) for the idempotent-existence conditions
  //
  //   (1)  s(x,y) = r(x) & s(x,z) = r(x)  ->  s(x, y.z) = r(x)
  //   (2)  s(x,y) . s(x,z) = s(x, t(x,y,z))
  //
  // where "." is `product`. A schema without t makes no claim about (2).
  struct EllisSchema {
    Term                r;
    Term                s;
    std::optional<Term> t;
    OpSymbol            product = mul;
  };

  struct SchemaValidation {
    std::vector<std::string> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // r uses exactly {x}; s uses a subset of {x, y} with y right-most; t uses a
  // subset of {x, y, z}.
  SchemaValidation validate_schema(EllisSchema const& sch);

  QuasiIdentity           condition_one(EllisSchema const& sch);
  std::optional<Identity> condition_two(EllisSchema const& sch);

  enum class ConditionStatus { holds, fails, not_claimed };

  char const* to_string(ConditionStatus s) noexcept;

  // Witness is over (x, y, z), lexicographically least.
  struct ConditionResult {
    ConditionStatus           status = ConditionStatus::holds;
    std::optional<Assignment> witness;
  };

  // Both throw InvalidArgumentError on an invalid schema and
  // UnknownSymbolError if the algebra lacks a symbol.
  ConditionResult check_condition_one(Algebra const& a, EllisSchema const& sch);
  ConditionResult check_condition_two(Algebra const& a, EllisSchema const& sch);

  // "associative"      (x, xy, y(xz))
  // "associative-alt"  (x, xy, (yx)z)
  // "moufang4"         (x, (xx)y, none)
  // "selfdist"         (x(xx), xy, yz)
  // "identity5"        (x, xy, (xz)y)
  std::map<std::string, EllisSchema> const& builtin_schemas();
  // Throws InvalidArgumentError for an unknown name.
  EllisSchema const& builtin_schema(std::string_view name);

  // A condition is false or not established; carries the failing condition
  // (1 or 2) and, if it is false, its witness.
  class HypothesisFailsError : public Error {
   public:
    HypothesisFailsError(int condition, ConditionResult result);

    int condition() const noexcept {
      return _condition;
    }
    ConditionResult const& result() const noexcept {
      return _result;
    }

   private:
    int             _condition;
    ConditionResult _result;
  };

  // Least idempotent of the product lying in a minimal subuniverse of the
  // product reduct. Throws HypothesisFailsError unless both conditions hold.
  Element predict_idempotent(Algebra const& a, EllisSchema const& sch);

  // "r = <term>; s = <term>; t = <term>|none; product = <symbol>"; the product
  // clause may be omitted ('*').
  EllisSchema parse_schema(std::string_view text);
  std::string render_schema(EllisSchema const& sch);

}  // namespace idemlab
