#include "idemlab/ultrafilter.hpp"

#include <stdexcept>

#include "idemlab/error.hpp"

namespace idemlab {

  FiniteUltrafilter::FiniteUltrafilter(std::size_t n, std::vector<bool> members)
      : _n(n), _members(std::move(members)) {
    if (n == 0 || n > max_carrier) {
      throw CapExceededError("ultrafilter carrier must be in [1, "
                             + std::to_string(max_carrier) + "]");
    }
    if (_members.size() != (std::size_t{1} << n)) {
      throw InvalidArgumentError("membership vector must have 2^n entries");
    }
  }

  FiniteUltrafilter FiniteUltrafilter::principal(std::size_t n, Element p) {
    if (p >= n) {
      throw InvalidArgumentError("principal point outside the carrier");
    }
    std::vector<bool> members(std::size_t{1} << n);
    for (Subset s = 0; s < members.size(); ++s) {
      members[s] = (s >> p) & 1;
    }
    return FiniteUltrafilter(n, std::move(members));
  }

  std::optional<Element> FiniteUltrafilter::principal_point() const {
    Subset const full   = static_cast<Subset>((std::size_t{1} << _n) - 1);
    Subset       common = full;
    bool         any    = false;
    for (Subset s = 0; s <= full; ++s) {
      if (_members[s]) {
        common &= s;
        any = true;
      }
    }
    if (!any || common == 0 || (common & (common - 1)) != 0) {
      return std::nullopt;
    }
    Element p = 0;
    while (((common >> p) & 1) == 0) {
      ++p;
    }
    if (*this != principal(_n, p)) {
      return std::nullopt;
    }
    return p;
  }

  bool FiniteUltrafilter::satisfies_axioms() const {
    Subset const full = static_cast<Subset>((std::size_t{1} << _n) - 1);
    if (_members[0] || !_members[full]) {
      return false;
    }
    for (Subset s = 0; s <= full; ++s) {
      if (_members[s] == _members[full & ~s]) {
        return false;
      }
      if (!_members[s]) {
        continue;
      }
      for (Subset t = 0; t <= full; ++t) {
        if (_members[t] && !_members[s & t]) {
          return false;
        }
        if ((s & t) == s && !_members[t]) {
          return false;
        }
      }
    }
    return true;
  }

  char const* to_string(Nesting nesting) noexcept {
    switch (nesting) {
      case Nesting::standard:
        return "standard";
      case Nesting::swapped:
        return "swapped";
      case Nesting::as_printed:
        return "as-printed";
    }
    return "?";
  }

  FiniteUltrafilter ultrafilter_product(Table const&             t,
                                        FiniteUltrafilter const& u,
                                        FiniteUltrafilter const& v,
                                        Nesting                  nesting) {
    std::size_t const n = t.size();
    if (u.carrier() != n || v.carrier() != n) {
      throw InvalidArgumentError("ultrafilters live on a different carrier");
    }
    FiniteUltrafilter const& inner_uf = nesting == Nesting::swapped ? v : u;
    FiniteUltrafilter const& outer_uf = nesting == Nesting::swapped ? u : v;
    bool const inner_over_first = nesting != Nesting::as_printed;

    std::vector<bool> members(std::size_t{1} << n);
    for (Subset s = 0; s < members.size(); ++s) {
      // outer = { c : { d : product in S } in inner_uf }, where c is the
      // second argument and d the first when inner_over_first, and the other
      // way round otherwise.
      Subset outer = 0;
      for (Element c = 0; c < n; ++c) {
        Subset inner = 0;
        for (Element d = 0; d < n; ++d) {
          Element const prod = inner_over_first ? t(d, c) : t(c, d);
          if ((s >> prod) & 1) {
            inner |= Subset{1} << d;
          }
        }
        if (inner_uf.contains(inner)) {
          outer |= Subset{1} << c;
        }
      }
      members[s] = outer_uf.contains(outer);
    }
    return FiniteUltrafilter(n, std::move(members));
  }

  Table extend_operation(Algebra const& a,
                         OpSymbol       op,
                         Nesting        nesting,
                         std::size_t    cap) {
    Table const&      t = a.table(op);
    std::size_t const n = a.size();
    if (n > cap || n > FiniteUltrafilter::max_carrier) {
      throw CapExceededError("ultrafilter extension: order "
                             + std::to_string(n) + " exceeds the cap "
                             + std::to_string(cap));
    }
    std::vector<FiniteUltrafilter> points;
    for (Element p = 0; p < n; ++p) {
      points.push_back(FiniteUltrafilter::principal(n, p));
    }
    std::vector<Element> cells;
    cells.reserve(n * n);
    for (Element p = 0; p < n; ++p) {
      for (Element q = 0; q < n; ++q) {
        auto const uv = ultrafilter_product(t, points[p], points[q], nesting);
        auto const r  = uv.principal_point();
        if (!r) {
          throw std::logic_error("product of principal ultrafilters is not "
                                 "principal");
        }
        cells.push_back(*r);
      }
    }
    return Table(n, cells);
  }

  Algebra extend_algebra(Algebra const& a, Nesting nesting, std::size_t cap) {
    std::map<OpSymbol, Table> ops;
    for (auto const& kv : a.tables()) {
      ops.emplace(kv.first, extend_operation(a, kv.first, nesting, cap));
    }
    return Algebra(a.size(), std::move(ops));
  }

  ExtensionReport check_extension_laws(Algebra const& a,
                                       OpSymbol       op,
                                       std::size_t    cap) {
    ExtensionReport report;
    report.carrier        = a.size();
    report.op             = op;
    Table const  original = a.table(op);
    Table const  extended = extend_operation(a, op, Nesting::standard, cap);
    std::size_t const n   = a.size();

    report.equals_original = extended == original;
    for (Element p = 0; p < n && !report.mismatch; ++p) {
      for (Element q = 0; q < n; ++q) {
        if (extended(p, q) != original(p, q)) {
          report.mismatch = std::make_pair(p, q);
          break;
        }
      }
    }
    report.original_associative = is_associative(a, op);
    report.extended_associative = is_associative(Algebra(op, extended), op);
    report.associativity_preserved
        = !report.original_associative || report.extended_associative;

    if (n <= 6) {
      report.axioms_checked = true;
      for (Element p = 0; p < n && report.axioms_hold; ++p) {
        auto const u = FiniteUltrafilter::principal(n, p);
        for (Element q = 0; q < n; ++q) {
          auto const v = FiniteUltrafilter::principal(n, q);
          if (!ultrafilter_product(original, u, v).satisfies_axioms()) {
            report.axioms_hold = false;
            break;
          }
        }
      }
    }
    return report;
  }

  nlohmann::json to_json(ExtensionReport const& r) {
    nlohmann::json j = {
        {"carrier", r.carrier},
        {"op", std::string(1, r.op)},
        {"nesting", to_string(Nesting::standard)},
        {"extended_equals_original", r.equals_original},
        {"original_associative", r.original_associative},
        {"extended_associative", r.extended_associative},
        {"associativity_preserved", r.associativity_preserved},
        {"axioms_checked", r.axioms_checked},
        {"axioms_hold", r.axioms_hold},
        {"mismatch",
         r.mismatch ? nlohmann::json{r.mismatch->first, r.mismatch->second}
                    : nlohmann::json(nullptr)},
        {"note",
         "finite carrier: every ultrafilter is principal, so this is a check "
         "of the extension formula only and says nothing about infinite "
         "carriers"},
        {"status", r.ok() ? "pass" : "fail"}};
    return j;
  }

}  // namespace idemlab
