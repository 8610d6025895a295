#include <set>

#include "doctest.h"
#include "oracle.hpp"

#include "idemlab/algebra.hpp"
#include "idemlab/campaign.hpp"
#include "idemlab/error.hpp"
#include "idemlab/search.hpp"
#include "idemlab/subalgebra.hpp"

using namespace idemlab;

namespace {
  Algebra single_op(int n, oracle::Cells const& c) {
    return Algebra(mul, Table(n, {c.begin(), c.end()}));
  }
  Algebra two_op(int n, oracle::Cells const& m, oracle::Cells const& p) {
    return Algebra(n, {{mul, Table(n, {m.begin(), m.end()})},
                       {add, Table(n, {p.begin(), p.end()})}});
  }

  SearchSpec single(std::size_t lo, std::size_t hi) {
    SearchSpec spec;
    spec.min_order = lo;
    spec.max_order = hi;
    return spec;
  }

  SearchSpec semirings(std::size_t hi) {
    SearchSpec spec;
    spec.max_order   = hi;
    spec.signature   = Signature{mul, add};
    spec.constraints = left_semiring_constraints();
    return spec;
  }

  // Generate every labeled table, filter, canonicalize naively.
  std::set<oracle::Cells> brute_classes(SearchSpec const& spec, int n) {
    std::set<oracle::Cells> out;
    bool const two = spec.signature.size() == 2;
    auto const tables = oracle::all_tables(n);
    auto       accept = [&](Algebra const& a) {
      for (auto const& q : spec.constraints) {
        if (!satisfies_quasi_identity(a, q).holds) {
          return false;
        }
      }
      return true;
    };
    for (auto const& m : tables) {
      if (!two) {
        if (accept(single_op(n, m))) {
          out.insert(oracle::canonical({m}, n));
        }
        continue;
      }
      for (auto const& p : tables) {
        // '*' sorts before '+'
        if (accept(two_op(n, m, p))) {
          out.insert(oracle::canonical({m, p}, n));
        }
      }
    }
    return out;
  }

  oracle::Cells flat(Algebra const& a) {
    oracle::Cells out;
    for (auto const& [op, t] : a.tables()) {
      out.insert(out.end(), t.cells().begin(), t.cells().end());
    }
    return out;
  }

  void check_against_brute(SearchSpec spec, int n) {
    spec.min_order = spec.max_order = n;
    std::set<oracle::Cells> seen;
    for (Algebra const& a : enumerate_algebras(spec)) {
      CHECK(static_cast<int>(a.size()) == n);
      CHECK(seen.insert(flat(a)).second);
      CHECK(a == canonicalize(a));
    }
    CHECK(seen == brute_classes(spec, n));
  }
}  // namespace

TEST_SUITE("search") {
  TEST_CASE("class counts") {
    CHECK(enumerate_algebras(single(1, 1)).size() == 1);
    CHECK(enumerate_algebras(single(2, 2)).size() == 10);
    CHECK(enumerate_algebras(single(3, 3)).size() == 3330);

    SearchSpec assoc = single(1, 3);
    assoc.constraints.emplace_back(parse_identity("(xy)z = x(yz)"));
    SearchReport const r = verify_universally([&] {
      SearchSpec s = assoc;
      s.property   = property_by_name("has-idempotent");
      return s;
    }());
    CHECK(r.classes_per_order.at(1) == 1);
    CHECK(r.classes_per_order.at(2) == 5);
    CHECK(r.classes_per_order.at(3) == 24);
    CHECK(r.pass);

    SearchReport const ls = verify_universally([] {
      SearchSpec s = semirings(3);
      s.property   = property_by_name("has-common-idempotent");
      return s;
    }());
    CHECK(ls.classes_per_order.at(1) == 1);
    CHECK(ls.classes_per_order.at(2) == 22);
    CHECK(ls.classes_per_order.at(3) == 531);
    CHECK(ls.pass);
  }

  TEST_CASE("pruned enumeration matches filter-then-canonicalize") {
    std::vector<std::vector<char const*>> sets = {
        {},
        {"(xy)z = x(yz)"},
        {"x(yz) = (xy)(xz)"},
        {"x(xx) = (xx)x"},
        {"(xy)(yz) = ((xy)y)z"},
        {"(xz)(yz) = ((xz)y)z"},
        {"(xy)(xz) = x(y(xz))"},
        {"(xx)(yz) = ((xx)y)z"},
        {"x(yz) = (xz)y"},
        {"x(yz) = (xy)(xz)", "x(xx) = (xx)x"},
    };
    for (auto const& ids : sets) {
      SearchSpec spec;
      for (char const* id : ids) {
        spec.constraints.emplace_back(parse_identity(id));
      }
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        check_against_brute(spec, n);
      }
    }
    SearchSpec q;
    q.constraints.push_back(
        parse_quasi_identity("xy = x & xz = x -> x(yz) = x"));
    check_against_brute(q, 2);
    check_against_brute(q, 3);
    for (int n = 1; n <= 2; ++n) {
      check_against_brute(semirings(2), n);
      SearchSpec free2;
      free2.signature = Signature{mul, add};
      check_against_brute(free2, n);
    }
  }

  TEST_CASE("worker count does not change the output") {
    SearchSpec spec = semirings(3);
    auto const one  = enumerate_algebras(spec);
    spec.workers    = 4;
    CHECK(enumerate_algebras(spec) == one);
  }

  TEST_CASE("left self-distributivity alone") {
    SearchSpec spec = single(1, 3);
    spec.constraints.emplace_back(parse_identity("x(yz) = (xy)(xz)"));
    spec.property           = property_by_name("has-idempotent");
    SearchReport const r    = verify_universally(spec);
    CHECK_FALSE(r.pass);
    REQUIRE(r.witness);
    CHECK(r.witness->size() == 2);
    CHECK(*r.witness == single_op(2, {1, 0, 1, 0}));

    spec.target = Target::counterexample;
    auto const w = find_counterexample(spec);
    REQUIRE(w);
    CHECK(*w == *r.witness);
  }

  TEST_CASE("remark constructions") {
    SearchSpec mult = semirings(3);
    mult.target     = Target::counterexample;
    mult.property   = property_by_name("mult-idem-subset-of-add-idem");
    auto const a    = find_counterexample(mult);
    REQUIRE(a);
    CHECK(a->size() == 2);
    CHECK(*a == two_op(2, {0, 0, 0, 1}, {0, 0, 0, 0}));

    SearchSpec addv = semirings(3);
    addv.target     = Target::counterexample;
    addv.preconditions.push_back(property_by_name("not-minimal"));
    addv.property = property_by_name("add-idem-subset-of-mult-idem");
    auto const b  = find_counterexample(addv);
    REQUIRE(b);
    CHECK(b->size() == 2);
    CHECK(*b == two_op(2, {0, 0, 0, 0}, {0, 0, 0, 1}));

    // the printed constructions are among the violating classes
    Algebra const second = two_op(2, {0, 1, 0, 1}, {0, 1, 1, 0});
    Algebra const first  = two_op(2, {1, 1, 1, 1}, {0, 0, 1, 1});
    CHECK(is_left_semiring(second));
    CHECK(is_left_semiring(first));
    CHECK_FALSE(mult.property->test(second));
    CHECK_FALSE(addv.property->test(first));
    CHECK_FALSE(is_minimal(first));
  }

  TEST_CASE("minimal left semirings are trivial") {
    SearchSpec spec = semirings(3);
    spec.preconditions.push_back(property_by_name("is-minimal"));
    spec.property = property_by_name("is-singleton");
    SearchReport const r = verify_universally(spec);
    CHECK(r.pass);
    CHECK(r.checked == 1);
    spec.target = Target::counterexample;
    CHECK_FALSE(find_counterexample(spec));
  }

  TEST_CASE("validation") {
    SearchSpec big = single(1, 4);
    CHECK_THROWS_AS(validate(big), CapExceededError);
    big.constraints.emplace_back(parse_identity("(xy)z = x(yz)"));
    CHECK_NOTHROW(validate(big));
    big.max_order = 5;
    CHECK_THROWS_AS(validate(big), CapExceededError);
    big.caps.max_order = 5;
    CHECK_NOTHROW(validate(big));

    SearchSpec bad_sig = single(1, 2);
    bad_sig.constraints.emplace_back(parse_identity("x+y = y+x"));
    CHECK_THROWS_AS(validate(bad_sig), Error);

    SearchSpec range = single(3, 2);
    CHECK_THROWS_AS(validate(range), InvalidArgumentError);

    CHECK_THROWS_AS(property_by_name("no-such-property"), InvalidArgumentError);
  }

  TEST_CASE("property catalog") {
    for (auto const& name : property_names()) {
      CAPTURE(name);
      CHECK(property_by_name(name).name == name);
    }
    Algebra const succ = single_op(2, {1, 0, 1, 0});
    CHECK_FALSE(property_by_name("has-idempotent").test(succ));
    CHECK(property_by_name("is-minimal").test(succ));
    CHECK_FALSE(property_by_name("is-singleton").test(succ));
    CHECK_FALSE(property_by_name("condition-one:selfdist").test(succ));
  }

  TEST_CASE("report json") {
    SearchSpec spec = single(1, 2);
    spec.constraints.emplace_back(parse_identity("x(yz) = (xy)(xz)"));
    spec.property = property_by_name("has-idempotent");
    auto const r  = verify_universally(spec);
    auto const j  = to_json(r);
    CHECK(j.at("status") == "fail");
    CHECK(j.at("witness") == "carrier 2\nop *\n1 0\n1 0\n");
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(to_json(r, true).contains("elapsed_ms"));
    CHECK(to_json(spec).at("property") == "has-idempotent");
  }
}

TEST_SUITE("search") {
  TEST_CASE("campaigns") {
    auto const ld = run_campaign("ld_no_idempotent");
    CHECK_FALSE(ld.pass);
    CHECK(ld.body.at("witness_checks").at("order") == 2);
    CHECK(ld.body.at("witness_checks").at("left_self_distributive") == true);
    CHECK(ld.body.at("witness_checks").at("idempotents").empty());

    auto const rem = run_campaign("remark_asymmetries");
    CHECK_FALSE(rem.pass);
    for (char const* key :
         {"multiplicative_not_additive", "additive_not_multiplicative_nonminimal"}) {
      auto const& part = rem.body.at(key);
      CHECK(part.at("search").at("result").at("status") == "fail");
      CHECK(part.at("construction").at("class_found_by_search") == true);
      CHECK(part.at("construction").at("violates_property") == true);
    }

    auto const gap = run_campaign("minimal_semiring_gap");
    CHECK(gap.pass);
    CHECK(gap.body.at("conclusion").get<std::string>().rfind(
              "no counterexample up to order 3", 0)
          == 0);

    CHECK_THROWS_AS(run_campaign("nope"), InvalidArgumentError);
  }

  TEST_CASE("campaign reports are independent of workers") {
    for (auto const& name : campaign_names()) {
      CAPTURE(name);
      auto const a = run_campaign(name, {3, 1, false});
      auto const b = run_campaign(name, {3, 4, false});
      CHECK(a.body.dump() == b.body.dump());
      CHECK(a.pass == b.pass);
    }
  }
}
