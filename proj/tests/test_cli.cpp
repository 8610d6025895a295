#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "idemlab/cli.hpp"
#include "idemlab/error.hpp"

using namespace idemlab;

namespace {
  std::string data(char const* name) {
    return std::string(IDEMLAB_TEST_DATA) + "/" + name;
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;

    nlohmann::json json() const {
      return nlohmann::json::parse(out);
    }
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("load_algebra") {
    Algebra const one = load_algebra(data("singleton.alg"));
    CHECK(one.size() == 1);
    CHECK_THROWS_AS(load_algebra(data("out_of_range.alg")), ParseError);
    Algebra const ls = load_algebra(data("left_semiring.alg"));
    CHECK(ls.has(add));
    CHECK(ls.has(mul));
    CHECK(ls.table(mul)(0, 1) == 1);
    CHECK(ls.table(mul)(1, 0) == 0);
    CHECK_THROWS_AS(load_algebra(data("missing.alg")), Error);
  }

  TEST_CASE("term verbs") {
    Run const p = run({"term", "parse", "--term", "x(y+z)"});
    CHECK(p.code == exit_pass);
    CHECK(p.out == "(x(y+z))\n");

    Run const r = run({"term", "rightmost", "--term", "(uv)(wx)", "--var", "x"});
    CHECK(r.code == exit_pass);
    CHECK(r.out == "true\n");

    Run const n = run({"term", "rightmost", "--term", "xv", "--var", "x"});
    CHECK(n.code == exit_fail);
    CHECK(n.out == "false\n");

    Run const e = run({"term", "eval", "--term", "x(yz)", "--algebra",
                       data("successor.alg"), "--assign", "x=0,y=0,z=0"});
    CHECK(e.code == exit_pass);
    CHECK(e.out == "0\n");

    CHECK(run({"term", "parse", "--term", "xyz"}).code == exit_usage);
    CHECK(run({"term", "eval", "--term", "xy", "--algebra",
               data("successor.alg"), "--assign", "x=0"})
              .code
          == exit_usage);
  }

  TEST_CASE("check") {
    Run const ok = run({"check", "--algebra", data("left_semiring.alg"),
                        "--identity", "x(y+z)=xy+xz"});
    CHECK(ok.code == exit_pass);
    CHECK(ok.json().at("status") == "pass");

    Run const bad = run({"check", "--algebra", data("successor.alg"),
                         "--identity", "x(xx)=(xx)x"});
    CHECK(bad.code == exit_fail);
    CHECK(bad.json().at("witness").at("x") == 0);

    CHECK(run({"check", "--algebra", data("successor.alg"), "--quasi",
               "x = xx -> x = y"})
              .code
          == exit_pass);
    CHECK(run({"check", "--algebra", data("left_semiring.alg"), "--property",
               "is-left-semiring"})
              .code
          == exit_pass);
    CHECK(run({"check", "--algebra", data("out_of_range.alg"), "--identity",
               "xy=yx"})
              .code
          == exit_usage);
    CHECK(run({"check", "--algebra", data("successor.alg"), "--identity",
               "x+y=y+x"})
              .code
          == exit_usage);
  }

  TEST_CASE("idempotents and minimal") {
    Run const i = run({"idempotents", "--algebra", data("left_semiring.alg")});
    CHECK(i.code == exit_pass);
    CHECK(i.json().at("common") == nlohmann::json{0});

    Run const pw = run({"idempotents", "--algebra", data("first_projection.alg"),
                        "--op", "*", "--power", "0"});
    CHECK(pw.code == exit_pass);

    CHECK(run({"idempotents", "--algebra", data("successor.alg"), "--op", "*",
               "--power", "0"})
              .code
          == exit_usage);

    Run const m = run({"minimal", "--algebra", data("successor.alg")});
    CHECK(m.code == exit_pass);
    CHECK(m.json().at("is_minimal") == true);
  }

  TEST_CASE("schema") {
    CHECK(run({"schema", "--list"}).code == exit_pass);
    Run const s = run({"schema", "--builtin", "selfdist", "--algebra",
                       data("successor.alg")});
    CHECK(s.code == exit_fail);
    CHECK(s.json().at("condition_one").at("status") == "fails");
    CHECK(run({"schema", "--schema", "r = x; s = yx; t = y"}).code == exit_fail);
    CHECK(run({"schema", "--builtin", "associative", "--algebra",
               data("singleton.alg")})
              .code
          == exit_pass);
  }

  TEST_CASE("search") {
    Run const v = run({"search", "--max-order", "3", "--constraint",
                       "(xy)z=x(yz)", "--property", "has-idempotent"});
    CHECK(v.code == exit_pass);
    CHECK(v.json().at("result").at("status") == "pass");

    Run const c = run({"search", "--max-order", "3", "--constraint",
                       "x(yz)=(xy)(xz)", "--property", "has-idempotent",
                       "--target", "counterexample"});
    CHECK(c.code == exit_fail);
    CHECK(c.json().at("result").at("witness") == "carrier 2\nop *\n1 0\n1 0\n");

    CHECK(run({"search", "--max-order", "4", "--property", "has-idempotent"})
              .code
          == exit_usage);
    CHECK(run({"search", "--property", "nope"}).code == exit_usage);

    Run const ls = run({"search", "--left-semiring", "--max-order", "2",
                        "--property", "has-common-idempotent"});
    CHECK(ls.code == exit_pass);
  }

  TEST_CASE("search output does not depend on workers") {
    std::vector<std::string> args = {"search",     "--left-semiring",
                                     "--max-order", "3",
                                     "--property", "has-common-idempotent"};
    Run const one = run(args);
    args.insert(args.begin(), {"--workers", "4"});
    Run const four = run(args);
    CHECK(one.out == four.out);
  }

  TEST_CASE("campaign") {
    Run const ld = run({"campaign", "ld_no_idempotent", "--no-write"});
    CHECK(ld.code == exit_fail);
    CHECK(ld.json().at("witness_checks").at("order") == 2);
    CHECK(run({"campaign", "minimal_semiring_gap", "--no-write"}).code
          == exit_pass);
    CHECK(run({"campaign", "nope", "--no-write"}).code == exit_usage);

    auto const dir = std::filesystem::temp_directory_path() / "idemlab_cli_test";
    std::filesystem::remove_all(dir);
    CHECK(run({"campaign", "minimal_semiring_gap", "--out-dir", dir.string()})
              .code
          == exit_pass);
    CHECK(std::filesystem::exists(dir / "minimal_semiring_gap.json"));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("ultrafilter") {
    Run const u = run({"ultrafilter", "--algebra", data("left_semiring.alg")});
    CHECK(u.code == exit_pass);
  }

  TEST_CASE("hindman") {
    Run const f = run({"hindman", "forcing", "--colors", "2", "--length", "2"});
    CHECK(f.code == exit_pass);
    CHECK(f.json().at("min_n") == 9);

    Run const p = run({"hindman", "partition", "--class", "1,4", "--class", "2,3",
                       "--length", "2"});
    CHECK(p.code == exit_fail);
    for (auto const& cls : p.json().at("classes")) {
      CHECK(cls.at("monochromatic_witness").is_null());
    }

    CHECK(run({"hindman", "witness", "--part", "1,4", "--length", "2",
               "--bound", "10"})
              .code
          == exit_fail);
    Run const fs = run({"hindman", "fs", "--elements", "2,3", "--products"});
    CHECK(fs.code == exit_pass);
    CHECK(fs.json().at("finite_combinations") == nlohmann::json{2, 3, 6});
    CHECK(run({"hindman", "fs", "--elements", "3,2"}).code == exit_usage);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == exit_usage);
    CHECK(run({"nosuch"}).code == exit_usage);
    CHECK(run({"check"}).code == exit_usage);
    CHECK(run({"--cap", "9", "search", "--property", "has-idempotent"}).code
          == exit_usage);
  }

  TEST_CASE("pretty output") {
    Run const m = run({"--pretty", "minimal", "--algebra", data("successor.alg")});
    CHECK(m.code == exit_pass);
    CHECK(m.out.find("is_minimal: true") != std::string::npos);
  }
}
