#pragma once

#include <cstddef>
#include <vector>

#include "idemlab/algebra.hpp"

namespace idemlab {

  // A nonempty subset of the carrier closed under every operation of the
  // algebra it was computed from. Members ascending.
  struct SubUniverse {
    std::vector<Element> members;

    std::size_t size() const noexcept {
      return members.size();
    }
    bool contains(Element e) const;
    friend bool operator==(SubUniverse const&, SubUniverse const&) = default;
    friend auto operator<=>(SubUniverse const&, SubUniverse const&) = default;
  };

  // A subset (possibly empty) with its closure flag. The empty set counts as
  // closed.
  struct ElementSet {
    std::vector<Element> members;
    bool                 closed = false;
  };

  bool is_closed(Algebra const& a, std::vector<Element> const& subset);

  // Least closed superset of `seed`. Throws InvalidArgumentError on an empty
  // seed or an element outside the carrier.
  SubUniverse closure(Algebra const& a, std::vector<Element> const& seed);

  // Inclusion-minimal members of { closure({e}) : e in carrier }, deduplicated
  // and ordered by least member.
  std::vector<SubUniverse> minimal_subuniverses(Algebra const& a);

  // True iff the full carrier is the only subuniverse.
  bool is_minimal(Algebra const& a);

  // { a op x : x in carrier }
  ElementSet left_image(Algebra const& a, OpSymbol op, Element e);

  // { x : e op x = e }
  ElementSet left_stabilizer(Algebra const& a, OpSymbol op, Element e);

  // Every closed nonempty subset, ordered by bitmask. Debug aid; throws
  // CapExceededError above `max_order` (default 4).
  std::vector<SubUniverse> all_subuniverses(Algebra const& a,
                                            std::size_t    max_order = 4);

}  // namespace idemlab
