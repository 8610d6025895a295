#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "idemlab/algebra.hpp"
#include "idemlab/schema.hpp"
#include "idemlab/term.hpp"

namespace idemlab {

  // A named isomorphism-invariant predicate on algebras.
  struct Property {
    std::string                         name;
    std::function<bool(Algebra const&)> test;
  };

  // Known names:
  //   has-idempotent                  the product '*' (or the only operation)
  //                                   has an idempotent
  //   has-common-idempotent, is-minimal, not-minimal, is-singleton,
  //   is-left-semiring, add-idem-subset-of-mult-idem,
  //   mult-idem-subset-of-add-idem,
  //   condition-one:<builtin schema>, condition-two:<builtin schema>
  // Throws InvalidArgumentError for anything else.
  Property                 property_by_name(std::string_view name);
  std::vector<std::string> property_names();

  Property condition_property(std::string name,
                              EllisSchema schema,
                              int         which);

  enum class Target { verify, counterexample };

  struct SearchCaps {
    // Largest order searched when at least one constraint prunes the DFS.
    std::size_t max_order = 4;
    // Largest order searched with no constraints at all.
    std::size_t max_order_unconstrained = 3;
  };

  struct SearchSpec {
    std::size_t                min_order = 1;
    std::size_t                max_order = 3;
    Signature                  signature{mul};
    std::vector<QuasiIdentity> constraints;
    // Applied to each class after the constraints; classes failing one are
    // skipped, not counted as counterexamples.
    std::vector<Property>      preconditions;
    Target                     target = Target::verify;
    std::optional<Property>    property;
    SearchCaps                 caps;
    // Worker threads; never affects results.
    std::size_t                workers = 1;
  };

  struct SearchReport {
    // partial tables visited by the DFS, all orders
    std::uint64_t                         nodes = 0;
    std::map<std::size_t, std::uint64_t>  classes_per_order;
    std::uint64_t                         classes    = 0;
    std::uint64_t                         checked    = 0;
    std::uint64_t                         violations = 0;
    bool                                  pass       = true;
    std::optional<Algebra>                witness;
    double                                elapsed_ms = 0;
  };

  // Throws CapExceededError or InvalidArgumentError.
  void validate(SearchSpec const& spec);

  // Calls `visit` once per isomorphism class satisfying the constraints, with
  // its canonical representative, by increasing order and then increasing
  // canonical form. Single-threaded. Returns the number of DFS nodes.
  std::uint64_t for_each_algebra(SearchSpec const&                          spec,
                                 std::function<void(Algebra const&)> const& visit);

  std::vector<Algebra> enumerate_algebras(SearchSpec const& spec);

  // Checks spec.property on every class passing the preconditions. `pass` is
  // true iff no class violates it; `witness` is the first violation (least
  // order, then canonically least).
  SearchReport verify_universally(SearchSpec const& spec);

  // Like verify_universally but stops after the least order with a
  // violation.
  std::optional<Algebra> find_counterexample(SearchSpec const& spec);

  // Runs spec.target.
  SearchReport run_search(SearchSpec const& spec);

  // Spec echo without worker count or caps, so equal searches serialize
  // equally.
  nlohmann::json to_json(SearchSpec const& spec);
  // Omits elapsed time unless `timing`.
  nlohmann::json to_json(SearchReport const& report, bool timing = false);

  // The three constraints of a left semiring over {*, +}.
  std::vector<QuasiIdentity> left_semiring_constraints();

}  // namespace idemlab
