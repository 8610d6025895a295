#include <set>

#include "doctest.h"
#include "oracle.hpp"

#include "idemlab/algebra.hpp"
#include "idemlab/error.hpp"
#include "idemlab/subalgebra.hpp"

using namespace idemlab;

namespace {
  Algebra z4() {
    return Algebra(
        add, Table::from_function(4, [](Element a, Element b) { return (a + b) % 4; }));
  }
  Algebra singleton() {
    return Algebra(mul, Table(1, {0}));
  }
  Algebra successor() {
    return Algebra(mul, Table(2, {1, 0, 1, 0}));
  }
  Algebra left_projection() {
    return Algebra(mul, Table(2, {0, 0, 1, 1}));
  }
  Algebra mod2_second() {
    return Algebra(2, {{add, Table(2, {0, 1, 1, 0})}, {mul, Table(2, {0, 1, 0, 1})}});
  }
  std::vector<Element> elems(std::initializer_list<Element> xs) {
    return xs;
  }
  Algebra from_cells(int n, oracle::Cells const& m, oracle::Cells const& p) {
    return Algebra(n, {{mul, Table(n, {m.begin(), m.end()})},
                       {add, Table(n, {p.begin(), p.end()})}});
  }
}  // namespace

TEST_SUITE("subalgebra") {
  TEST_CASE("closure") {
    CHECK(closure(z4(), {2}).members == elems({0, 2}));
    CHECK(closure(z4(), {1}).members == elems({0, 1, 2, 3}));
    CHECK(closure(singleton(), {0}).members == elems({0}));
    CHECK_THROWS_AS(closure(z4(), {}), InvalidArgumentError);
    CHECK_THROWS_AS(closure(z4(), {4}), InvalidArgumentError);
  }

  TEST_CASE("closure laws on order-3 tables") {
    for (auto const& t : oracle::all_tables(3)) {
      Algebra const a(mul, Table(3, {t.begin(), t.end()}));
      for (Element s = 0; s < 3; ++s) {
        SubUniverse const c = closure(a, {s});
        std::set<int>     expect = oracle::closure({t}, 3, {int(s)});
        CHECK(std::set<int>(c.members.begin(), c.members.end()) == expect);
        CHECK(c.contains(s));
        CHECK(is_closed(a, c.members));
        CHECK(closure(a, c.members) == c);
      }
    }
  }

  TEST_CASE("minimal subuniverses") {
    auto const z = minimal_subuniverses(z4());
    REQUIRE(z.size() == 1);
    CHECK(z[0].members == elems({0}));
    auto const s = minimal_subuniverses(successor());
    REQUIRE(s.size() == 1);
    CHECK(s[0].members == elems({0, 1}));
    CHECK(minimal_subuniverses(left_projection()).size() == 2);
  }

  TEST_CASE("is_minimal") {
    CHECK(is_minimal(singleton()));
    CHECK_FALSE(is_minimal(z4()));
    CHECK(is_minimal(successor()));
    for (auto const& t : oracle::all_tables(2)) {
      for (auto const& u : oracle::all_tables(2)) {
        CHECK(is_minimal(from_cells(2, t, u)) == oracle::minimal({t, u}, 2));
      }
    }
  }

  TEST_CASE("left images") {
    ElementSet const a = left_image(mod2_second(), mul, 1);
    CHECK(a.members == elems({0, 1}));
    CHECK(a.closed);
    ElementSet const b = left_image(left_projection(), mul, 0);
    CHECK(b.members == elems({0}));
    CHECK(b.closed);
  }

  TEST_CASE("left stabilizers") {
    ElementSet const a = left_stabilizer(mod2_second(), mul, 0);
    CHECK(a.members == elems({0}));
    CHECK(a.closed);
    ElementSet const b = left_stabilizer(left_projection(), mul, 1);
    CHECK(b.members == elems({0, 1}));
    CHECK(b.closed);
    ElementSet const c = left_stabilizer(successor(), mul, 0);
    CHECK(c.members == elems({1}));
    CHECK_FALSE(c.closed);
  }

  TEST_CASE("left images of left semirings are closed") {
    for (auto const& m : oracle::all_tables(2)) {
      if (!oracle::associative(m, 2)) {
        continue;
      }
      for (auto const& p : oracle::all_tables(2)) {
        if (!oracle::associative(p, 2) || !oracle::left_distributive(m, p, 2)) {
          continue;
        }
        Algebra const a = from_cells(2, m, p);
        for (Element e = 0; e < 2; ++e) {
          CHECK(left_image(a, mul, e).closed);
        }
      }
    }
  }

  TEST_CASE("all subuniverses") {
    auto const subs = all_subuniverses(z4());
    CHECK(subs.size() == 3);
    for (auto const& s : subs) {
      CHECK(is_closed(z4(), s.members));
    }
    CHECK(all_subuniverses(successor()).size() == 1);
    CHECK(all_subuniverses(left_projection()).size() == 3);
  }
}
