#include "doctest.h"
#include "oracle.hpp"

#include "idemlab/algebra.hpp"
#include "idemlab/error.hpp"
#include "idemlab/ultrafilter.hpp"

using namespace idemlab;

namespace {
  Algebra single_op(int n, oracle::Cells const& c) {
    return Algebra(mul, Table(n, {c.begin(), c.end()}));
  }
  Table transpose(Table const& t) {
    return Table::from_function(t.size(), [&](Element a, Element b) { return t(b, a); });
  }
}  // namespace

TEST_SUITE("ultrafilter") {
  TEST_CASE("principal ultrafilters") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (Element p = 0; p < n; ++p) {
        auto const u = FiniteUltrafilter::principal(n, p);
        CHECK(u.satisfies_axioms());
        CHECK(u.principal_point() == p);
        CHECK(u.contains(Subset{1} << p));
        CHECK_FALSE(u.contains(0));
      }
    }
    // the filter of sets containing both 0 and 1 is not an ultrafilter
    std::vector<bool> both(4, false);
    both[3] = true;
    FiniteUltrafilter const f(2, both);
    CHECK_FALSE(f.satisfies_axioms());
    CHECK_FALSE(f.principal_point());
    CHECK_THROWS_AS(FiniteUltrafilter(2, std::vector<bool>(3)), InvalidArgumentError);
  }

  TEST_CASE("products of principal ultrafilters") {
    Table const x_or(2, {0, 1, 1, 0});
    auto const  u1 = FiniteUltrafilter::principal(2, 1);
    CHECK(ultrafilter_product(x_or, u1, u1) == FiniteUltrafilter::principal(2, 0));

    Table const zero(2, {0, 0, 0, 0});
    for (Element a = 0; a < 2; ++a) {
      for (Element b = 0; b < 2; ++b) {
        CHECK(ultrafilter_product(zero, FiniteUltrafilter::principal(2, a),
                                  FiniteUltrafilter::principal(2, b))
              == FiniteUltrafilter::principal(2, 0));
      }
    }
    auto const u = FiniteUltrafilter::principal(1, 0);
    CHECK(ultrafilter_product(Table(1, {0}), u, u) == u);
  }

  TEST_CASE("extension reproduces every table of order <= 2") {
    for (int n = 1; n <= 2; ++n) {
      for (auto const& t : oracle::all_tables(n)) {
        Algebra const a = single_op(n, t);
        CHECK(extend_operation(a, mul) == a.table(mul));
        CHECK(extend_algebra(a) == a);
        auto const r = check_extension_laws(a, mul);
        CHECK(r.ok());
        CHECK(r.equals_original);
        CHECK(r.axioms_checked);
        CHECK(r.original_associative == oracle::associative(t, n));
        CHECK(r.extended_associative == r.original_associative);
      }
    }
  }

  TEST_CASE("mutant nestings give the opposite operation") {
    Algebra const left(mul, Table(2, {0, 0, 1, 1}));
    for (Nesting m : {Nesting::swapped, Nesting::as_printed}) {
      CAPTURE(to_string(m));
      Table const e = extend_operation(left, mul, m);
      CHECK(e != left.table(mul));
      CHECK(e == transpose(left.table(mul)));
    }
    // commutative tables cannot tell the nestings apart
    Algebra const x_or(mul, Table(2, {0, 1, 1, 0}));
    CHECK(extend_operation(x_or, mul, Nesting::swapped) == x_or.table(mul));
  }

  TEST_CASE("extension of successor keeps identity (6)") {
    Algebra const succ = single_op(2, {1, 0, 1, 0});
    Identity const six = parse_identity("x(yz) = (xy)(xz)");
    CHECK(satisfies_identity(succ, six));
    CHECK(satisfies_identity(extend_algebra(succ), six));
  }

  TEST_CASE("Z3 extension is associative") {
    Algebra const z3(add, Table::from_function(
                              3, [](Element a, Element b) { return (a + b) % 3; }));
    auto const r = check_extension_laws(z3, add);
    CHECK(r.extended_associative);
    CHECK(r.associativity_preserved);
    CHECK(r.ok());
    auto const j = to_json(r);
    CHECK(j.at("extended_equals_original") == true);
  }

  TEST_CASE("cap") {
    Algebra const big(mul, Table(5, std::vector<Element>(25, 0)));
    CHECK_THROWS_AS(extend_operation(big, mul, Nesting::standard, 4),
                    CapExceededError);
    CHECK_NOTHROW(extend_operation(big, mul, Nesting::standard, 5));
  }
}
