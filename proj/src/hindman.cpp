#include "idemlab/hindman.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "idemlab/error.hpp"

namespace idemlab::hindman {

  char const* to_string(Combine c) noexcept {
    return c == Combine::sum ? "sum" : "product";
  }

  FSInstance::FSInstance(std::vector<Integer> elements)
      : _elements(std::move(elements)) {
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (_elements[i] == 0) {
        throw InvalidArgumentError("instance elements must be positive");
      }
      if (i > 0 && _elements[i] <= _elements[i - 1]) {
        throw InvalidArgumentError(
            "instance elements must be strictly increasing");
      }
    }
  }

  namespace {
    bool combine_into(Integer a, Integer b, Combine c, Integer& out) {
      if (c == Combine::sum) {
        out = a + b;
        return out >= a;
      }
      if (a != 0 && b > max_product / a) {
        return false;
      }
      out = a * b;
      return true;
    }
  }  // namespace

  std::vector<Integer> finite_combinations(FSInstance const& xs, Combine c) {
    if (xs.size() > max_instance) {
      throw CapExceededError("finite sums are limited to "
                             + std::to_string(max_instance) + " elements");
    }
    // values[mask] for every nonempty subset, built from the mask without its
    // lowest bit
    std::size_t const    count = std::size_t{1} << xs.size();
    std::vector<Integer> values(count, 0);
    for (std::size_t mask = 1; mask < count; ++mask) {
      std::size_t const low  = mask & (~mask + 1);
      std::size_t       bit  = 0;
      while ((std::size_t{1} << bit) != low) {
        ++bit;
      }
      std::size_t const rest = mask ^ low;
      if (rest == 0) {
        values[mask] = xs.elements()[bit];
      } else if (!combine_into(values[rest], xs.elements()[bit], c,
                               values[mask])) {
        throw CapExceededError("finite product exceeds the magnitude cap");
      }
    }
    values.erase(values.begin());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  }

  std::vector<Integer> finite_sums(FSInstance const& xs) {
    return finite_combinations(xs, Combine::sum);
  }

  std::vector<Integer> finite_products(FSInstance const& xs) {
    return finite_combinations(xs, Combine::product);
  }

  namespace {
    struct WitnessSearch {
      std::set<Integer> const& part;
      std::vector<Integer>     candidates;
      std::size_t              k;
      Combine                  combine;
      std::vector<Integer>     chosen;

      // `sums` are the finite combinations of `chosen`.
      bool extend(std::size_t from, std::vector<Integer> const& sums) {
        if (chosen.size() == k) {
          return true;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
          Integer const        x = candidates[i];
          std::vector<Integer> next(sums);
          next.push_back(x);
          bool ok = true;
          for (Integer s : sums) {
            Integer v;
            if (!combine_into(s, x, combine, v) || part.count(v) == 0) {
              ok = false;
              break;
            }
            next.push_back(v);
          }
          if (!ok) {
            continue;
          }
          chosen.push_back(x);
          if (extend(i + 1, next)) {
            return true;
          }
          chosen.pop_back();
        }
        return false;
      }
    };
  }  // namespace

  std::optional<FSInstance> find_fs_witness(std::vector<Integer> const& part,
                                            std::size_t                 k,
                                            Integer                     bound,
                                            Combine combine) {
    if (k == 0) {
      throw InvalidArgumentError("witness length must be positive");
    }
    if (k > max_instance) {
      throw CapExceededError("witness length is limited to "
                             + std::to_string(max_instance));
    }
    std::set<Integer> members;
    for (Integer p : part) {
      if (p >= 1 && p <= bound) {
        members.insert(p);
      }
    }
    WitnessSearch search{
        members, {members.begin(), members.end()}, k, combine, {}};
    if (!search.extend(0, {})) {
      return std::nullopt;
    }
    return FSInstance(search.chosen);
  }

  Coloring::Coloring(std::size_t n, std::vector<int> colors)
      : _colors(std::move(colors)) {
    if (_colors.size() != n) {
      throw InvalidArgumentError("coloring must assign a color to each of 1.."
                                 + std::to_string(n));
    }
    if (std::any_of(_colors.begin(), _colors.end(), [](int c) { return c < 0; })) {
      throw InvalidArgumentError("colors must be non-negative");
    }
  }

  Coloring Coloring::from_classes(
      std::vector<std::vector<Integer>> const& classes) {
    Integer n = 0;
    for (auto const& cls : classes) {
      for (Integer i : cls) {
        if (i == 0) {
          throw InvalidArgumentError("colored integers start at 1");
        }
        n = std::max(n, i);
      }
    }
    if (n > (Integer{1} << 20)) {
      throw CapExceededError("coloring range too large");
    }
    std::vector<int> colors(n, -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (Integer i : classes[c]) {
        if (colors[i - 1] != -1) {
          throw InvalidArgumentError(std::to_string(i)
                                     + " appears in two classes");
        }
        colors[i - 1] = static_cast<int>(c);
      }
    }
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i] == -1) {
        throw InvalidArgumentError(std::to_string(i + 1)
                                   + " is not in any class");
      }
    }
    return Coloring(n, std::move(colors));
  }

  int Coloring::colors() const noexcept {
    return _colors.empty()
               ? 0
               : *std::max_element(_colors.begin(), _colors.end()) + 1;
  }

  std::vector<Integer> Coloring::members(int color) const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < _colors.size(); ++i) {
      if (_colors[i] == color) {
        out.push_back(i + 1);
      }
    }
    return out;
  }

  std::vector<ClassWitness> check_partition(Coloring const& c,
                                            std::size_t     k,
                                            Combine         combine) {
    std::vector<ClassWitness> report;
    for (int color = 0; color < c.colors(); ++color) {
      auto members = c.members(color);
      auto witness = members.empty()
                         ? std::nullopt
                         : find_fs_witness(members, k, c.size(), combine);
      report.push_back({color, std::move(members), std::move(witness)});
    }
    return report;
  }

  std::optional<Coloring> find_avoiding_coloring(std::size_t colors,
                                                 std::size_t len,
                                                 std::size_t n) {
    if (colors == 0 || n == 0) {
      throw InvalidArgumentError("need at least one color and n >= 1");
    }
    double const space = std::pow(static_cast<double>(colors),
                                  static_cast<double>(n - 1));
    if (space > 1e8) {
      throw CapExceededError("coloring space too large");
    }
    std::vector<int> col(n, 0);
    while (true) {
      Coloring const c(n, col);
      auto const     report = check_partition(c, len);
      if (std::none_of(report.begin(), report.end(), [](auto const& w) {
            return w.witness.has_value();
          })) {
        return c;
      }
      // next coloring, color(1) fixed at 0, last position fastest
      std::size_t i = n;
      while (i > 1 && ++col[i - 1] == static_cast<int>(colors)) {
        col[i - 1] = 0;
        --i;
      }
      if (i == 1) {
        return std::nullopt;
      }
    }
  }

  std::size_t min_n_forcing(std::size_t colors,
                            std::size_t len,
                            std::size_t max_n) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      if (!find_avoiding_coloring(colors, len, n)) {
        return n;
      }
    }
    throw CapExceededError("no forcing n up to " + std::to_string(max_n));
  }

  nlohmann::json to_json(std::vector<ClassWitness> const& report,
                         std::size_t                      k,
                         Combine                          combine) {
    nlohmann::json classes = nlohmann::json::array();
    bool           any     = false;
    for (auto const& w : report) {
      nlohmann::json entry = {{"color", w.color}, {"members", w.members}};
      if (w.witness) {
        any                   = true;
        entry["witness"]      = w.witness->elements();
        entry["combinations"] = finite_combinations(*w.witness, combine);
      } else {
        entry["witness"] = nullptr;
      }
      classes.push_back(std::move(entry));
    }
    return {{"convention",
             std::string("finite ") + to_string(combine)
                 + "s of distinct elements"},
            {"length", k},
            {"classes", classes},
            {"monochromatic_witness", any}};
  }

}  // namespace idemlab::hindman
