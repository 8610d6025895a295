#include "idemlab/subalgebra.hpp"

#include <algorithm>

#include "idemlab/error.hpp"

namespace idemlab {

  bool SubUniverse::contains(Element e) const {
    return std::binary_search(members.begin(), members.end(), e);
  }

  bool is_closed(Algebra const& a, std::vector<Element> const& subset) {
    std::vector<bool> in(a.size(), false);
    for (Element e : subset) {
      in.at(e) = true;
    }
    for (auto const& kv : a.tables()) {
      for (Element x : subset) {
        for (Element y : subset) {
          if (!in[kv.second(x, y)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  SubUniverse closure(Algebra const& a, std::vector<Element> const& seed) {
    if (seed.empty()) {
      throw InvalidArgumentError("closure of an empty seed");
    }
    std::vector<bool>    in(a.size(), false);
    std::vector<Element> members;
    for (Element e : seed) {
      if (e >= a.size()) {
        throw InvalidArgumentError("seed element " + std::to_string(e)
                                   + " outside the carrier");
      }
      if (!in[e]) {
        in[e] = true;
        members.push_back(e);
      }
    }
    // Worklist: every pair involving a new member is multiplied once.
    for (std::size_t next = 0; next < members.size(); ++next) {
      Element const x = members[next];
      for (std::size_t j = 0; j <= next; ++j) {
        Element const y = members[j];
        for (auto const& kv : a.tables()) {
          for (Element p : {kv.second(x, y), kv.second(y, x)}) {
            if (!in[p]) {
              in[p] = true;
              members.push_back(p);
            }
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return SubUniverse{std::move(members)};
  }

  std::vector<SubUniverse> minimal_subuniverses(Algebra const& a) {
    std::vector<SubUniverse> closures;
    for (Element e = 0; e < a.size(); ++e) {
      closures.push_back(closure(a, {e}));
    }
    std::sort(closures.begin(), closures.end());
    closures.erase(std::unique(closures.begin(), closures.end()),
                   closures.end());

    auto subset_of = [](SubUniverse const& s, SubUniverse const& t) {
      return std::includes(
          t.members.begin(), t.members.end(), s.members.begin(), s.members.end());
    };
    std::vector<SubUniverse> result;
    for (auto const& c : closures) {
      bool const has_smaller
          = std::any_of(closures.begin(), closures.end(), [&](auto const& d) {
              return d.size() < c.size() && subset_of(d, c);
            });
      if (!has_smaller) {
        result.push_back(c);
      }
    }
    std::sort(result.begin(), result.end(), [](auto const& s, auto const& t) {
      return s.members.front() < t.members.front();
    });
    return result;
  }

  bool is_minimal(Algebra const& a) {
    for (Element e = 0; e < a.size(); ++e) {
      if (closure(a, {e}).size() != a.size()) {
        return false;
      }
    }
    return true;
  }

  ElementSet left_image(Algebra const& a, OpSymbol op, Element e) {
    Table const& t = a.table(op);
    if (e >= a.size()) {
      throw InvalidArgumentError("element outside the carrier");
    }
    std::vector<bool> in(a.size(), false);
    for (Element x = 0; x < a.size(); ++x) {
      in[t(e, x)] = true;
    }
    ElementSet result;
    for (Element x = 0; x < a.size(); ++x) {
      if (in[x]) {
        result.members.push_back(x);
      }
    }
    result.closed = is_closed(a, result.members);
    return result;
  }

  ElementSet left_stabilizer(Algebra const& a, OpSymbol op, Element e) {
    Table const& t = a.table(op);
    if (e >= a.size()) {
      throw InvalidArgumentError("element outside the carrier");
    }
    ElementSet result;
    for (Element x = 0; x < a.size(); ++x) {
      if (t(e, x) == e) {
        result.members.push_back(x);
      }
    }
    result.closed = is_closed(a, result.members);
    return result;
  }

  std::vector<SubUniverse> all_subuniverses(Algebra const& a,
                                            std::size_t    max_order) {
    if (a.size() > max_order) {
      throw CapExceededError("subuniverse listing is limited to order "
                             + std::to_string(max_order));
    }
    std::vector<SubUniverse> result;
    for (std::size_t mask = 1; mask < (std::size_t{1} << a.size()); ++mask) {
      std::vector<Element> subset;
      for (Element e = 0; e < a.size(); ++e) {
        if ((mask >> e) & 1) {
          subset.push_back(e);
        }
      }
      if (is_closed(a, subset)) {
        result.push_back(SubUniverse{std::move(subset)});
      }
    }
    return result;
  }

}  // namespace idemlab
