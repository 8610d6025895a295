#include "idemlab/schema.hpp"

#include <algorithm>

#include "idemlab/subalgebra.hpp"

namespace idemlab {

  namespace {
    bool uses_only(Term const& t, std::string_view allowed) {
      auto const vars = t.variables();
      return std::all_of(vars.begin(), vars.end(), [&](char v) {
        return allowed.find(v) != std::string_view::npos;
      });
    }

    Term var(char c) {
      return Term::variable(c);
    }

    // s(x, arg)
    Term s_at(EllisSchema const& sch, Term const& arg) {
      return substitute(sch.s, {{'y', arg}});
    }

    std::string describe(Assignment const& w) {
      std::string out;
      for (auto const& [v, e] : w) {
        out += (out.empty() ? "" : ", ") + std::string(1, v) + "="
               + std::to_string(e);
      }
      return out;
    }

    void require_valid(EllisSchema const& sch) {
      auto const v = validate_schema(sch);
      if (!v.ok()) {
        throw InvalidArgumentError("invalid schema: " + v.violations.front());
      }
    }
  }  // namespace

  SchemaValidation validate_schema(EllisSchema const& sch) {
    SchemaValidation v;
    if (sch.r.variables() != "x") {
      v.violations.push_back("r must use exactly the variable x, uses {"
                             + sch.r.variables() + "}");
    }
    if (!uses_only(sch.s, "xy")) {
      v.violations.push_back("s may only use x and y, uses {"
                             + sch.s.variables() + "}");
    }
    if (!is_rightmost(sch.s, 'y')) {
      v.violations.push_back("y is not right-most in s = "
                             + render_term(sch.s));
    }
    if (sch.t && !uses_only(*sch.t, "xyz")) {
      v.violations.push_back("t may only use x, y and z, uses {"
                             + sch.t->variables() + "}");
    }
    if (sch.product != mul && sch.product != add) {
      v.violations.push_back(std::string("unknown product symbol '")
                             + sch.product + "'");
    }
    return v;
  }

  QuasiIdentity condition_one(EllisSchema const& sch) {
    Term const y = var('y'), z = var('z');
    return QuasiIdentity(
        {Identity{s_at(sch, y), sch.r}, Identity{s_at(sch, z), sch.r}},
        Identity{s_at(sch, Term::apply(sch.product, y, z)), sch.r});
  }

  std::optional<Identity> condition_two(EllisSchema const& sch) {
    if (!sch.t) {
      return std::nullopt;
    }
    return Identity{
        Term::apply(sch.product, s_at(sch, var('y')), s_at(sch, var('z'))),
        s_at(sch, *sch.t)};
  }

  char const* to_string(ConditionStatus s) noexcept {
    switch (s) {
      case ConditionStatus::holds:
        return "holds";
      case ConditionStatus::fails:
        return "fails";
      case ConditionStatus::not_claimed:
        return "not-claimed";
    }
    return "?";
  }

  ConditionResult check_condition_one(Algebra const& a, EllisSchema const& sch) {
    require_valid(sch);
    Verdict v = satisfies_quasi_identity(a, condition_one(sch), "xyz");
    if (v.holds) {
      return {};
    }
    return {ConditionStatus::fails, std::move(v.witness)};
  }

  ConditionResult check_condition_two(Algebra const& a, EllisSchema const& sch) {
    require_valid(sch);
    auto id = condition_two(sch);
    if (!id) {
      return {ConditionStatus::not_claimed, std::nullopt};
    }
    Verdict v = satisfies_quasi_identity(a, QuasiIdentity(*id), "xyz");
    if (v.holds) {
      return {};
    }
    return {ConditionStatus::fails, std::move(v.witness)};
  }

  std::map<std::string, EllisSchema> const& builtin_schemas() {
    static std::map<std::string, EllisSchema> const catalog = [] {
      auto p = [](char const* text) { return parse_term(text); };
      std::map<std::string, EllisSchema> m;
      m.emplace("associative", EllisSchema{p("x"), p("xy"), p("y(xz)"), mul});
      m.emplace("associative-alt",
                EllisSchema{p("x"), p("xy"), p("(yx)z"), mul});
      m.emplace("moufang4",
                EllisSchema{p("x"), p("(xx)y"), std::nullopt, mul});
      m.emplace("selfdist", EllisSchema{p("x(xx)"), p("xy"), p("yz"), mul});
      m.emplace("identity5", EllisSchema{p("x"), p("xy"), p("(xz)y"), mul});
      return m;
    }();
    return catalog;
  }

  EllisSchema const& builtin_schema(std::string_view name) {
    auto const& catalog = builtin_schemas();
    auto        it      = catalog.find(std::string(name));
    if (it == catalog.end()) {
      throw InvalidArgumentError("unknown builtin schema '" + std::string(name)
                                 + "'");
    }
    return it->second;
  }

  HypothesisFailsError::HypothesisFailsError(int condition,
                                             ConditionResult result)
      : Error(result.status == ConditionStatus::not_claimed
                  ? "hypothesis not established: condition "
                        + std::to_string(condition) + " is not claimed"
                  : "hypothesis fails: condition " + std::to_string(condition)
                        + " is false at "
                        + describe(result.witness.value_or(Assignment{}))),
        _condition(condition),
        _result(std::move(result)) {}

  Element predict_idempotent(Algebra const& a, EllisSchema const& sch) {
    if (auto one = check_condition_one(a, sch);
        one.status != ConditionStatus::holds) {
      throw HypothesisFailsError(1, std::move(one));
    }
    if (auto two = check_condition_two(a, sch);
        two.status != ConditionStatus::holds) {
      throw HypothesisFailsError(2, std::move(two));
    }
    Algebra const reduct(sch.product, a.table(sch.product));
    Table const&  t = reduct.table(sch.product);
    std::optional<Element> best;
    for (auto const& sub : minimal_subuniverses(reduct)) {
      for (Element e : sub.members) {
        if (t(e, e) == e && (!best || e < *best)) {
          best = e;
        }
      }
    }
    if (!best) {
      throw std::logic_error(
          "both conditions hold but no minimal subuniverse holds an "
          "idempotent");
    }
    return *best;
  }

  EllisSchema parse_schema(std::string_view text) {
    std::optional<Term> r, s, t;
    bool                t_seen  = false;
    OpSymbol            product = mul;

    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(';', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view clause = text.substr(pos, end - pos);
      std::size_t const offset = pos;
      pos                      = end + 1;

      auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) {
          v.remove_prefix(1);
        }
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) {
          v.remove_suffix(1);
        }
        return v;
      };
      if (trim(clause).empty()) {
        continue;
      }
      std::size_t const eq = clause.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected '<name> = <value>'", offset);
      }
      std::string_view const key   = trim(clause.substr(0, eq));
      std::string_view const value = trim(clause.substr(eq + 1));
      std::size_t const      value_offset
          = offset + static_cast<std::size_t>(value.data() - clause.data());
      try {
        if (key == "r") {
          r = parse_term(value);
        } else if (key == "s") {
          s = parse_term(value);
        } else if (key == "t") {
          t_seen = true;
          if (value != "none") {
            t = parse_term(value);
          }
        } else if (key == "product") {
          if (value == "*" || value == "\xC2\xB7") {
            product = mul;
          } else if (value == "+") {
            product = add;
          } else {
            throw ParseError("unknown product symbol '" + std::string(value)
                                 + "'",
                             0);
          }
        } else {
          throw ParseError("unknown schema field '" + std::string(key) + "'",
                           0);
        }
      } catch (AmbiguityError const& e) {
        throw AmbiguityError(std::string(key) + ": " + e.message(),
                             value_offset + e.position());
      } catch (ParseError const& e) {
        throw ParseError(std::string(key) + ": " + e.message(),
                         value_offset + e.position());
      }
    }
    if (!r || !s || !t_seen) {
      throw ParseError("schema needs r, s and t (t may be 'none')", 0);
    }
    return EllisSchema{*r, *s, t, product};
  }

  std::string render_schema(EllisSchema const& sch) {
    return "r = " + render_term(sch.r) + "; s = " + render_term(sch.s)
           + "; t = " + (sch.t ? render_term(*sch.t) : std::string("none"))
           + "; product = " + std::string(1, sch.product);
  }

}  // namespace idemlab
