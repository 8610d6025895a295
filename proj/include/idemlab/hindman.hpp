#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

namespace idemlab::hindman {

  using Integer = std::uint64_t;

  // Sums (or products) are taken over nonempty sets of DISTINCT elements of
  // the sequence.
  enum class Combine { sum, product };

  char const* to_string(Combine c) noexcept;

  inline constexpr std::size_t max_instance = 20;
  inline constexpr Integer     max_product  = Integer{1} << 53;

  // Strictly increasing positive integers.
  class FSInstance {
   public:
    // Throws InvalidArgumentError unless strictly increasing and positive.
    explicit FSInstance(std::vector<Integer> elements);

    std::vector<Integer> const& elements() const noexcept {
      return _elements;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    friend bool operator==(FSInstance const&, FSInstance const&) = default;

   private:
    std::vector<Integer> _elements;
  };

  // Ascending, without repeats. Throws CapExceededError for more than
  // max_instance elements, or a product above max_product.
  std::vector<Integer> finite_sums(FSInstance const& xs);
  std::vector<Integer> finite_products(FSInstance const& xs);
  std::vector<Integer> finite_combinations(FSInstance const& xs, Combine c);

  // Lexicographically least length-k instance drawn from `part` (restricted
  // to [1, bound]) all of whose finite sums lie in `part`.
  std::optional<FSInstance> find_fs_witness(std::vector<Integer> const& part,
                                            std::size_t                 k,
                                            Integer                     bound,
                                            Combine combine = Combine::sum);

  // color[i - 1] is the color of i, colors are 0, 1, ...
  class Coloring {
   public:
    Coloring(std::size_t n, std::vector<int> colors);

    // Classes must partition {1, ..., max element}; class i gets color i.
    static Coloring from_classes(std::vector<std::vector<Integer>> const& classes);

    std::size_t size() const noexcept {
      return _colors.size();
    }
    int color(Integer i) const {
      return _colors.at(i - 1);
    }
    int colors() const noexcept;
    std::vector<Integer> members(int color) const;
    std::vector<int> const& raw() const noexcept {
      return _colors;
    }

   private:
    std::vector<int> _colors;
  };

  struct ClassWitness {
    int                       color;
    std::vector<Integer>      members;
    std::optional<FSInstance> witness;
  };

  std::vector<ClassWitness> check_partition(Coloring const& c,
                                            std::size_t     k,
                                            Combine combine = Combine::sum);

  // Least coloring of {1..n} into `colors` colors (color(1) = 0, colorings
  // ordered lexicographically) with no class containing the finite sums of a
  // length-`len` instance.
  std::optional<Coloring> find_avoiding_coloring(std::size_t colors,
                                                 std::size_t len,
                                                 std::size_t n);

  // Least n such that every coloring of {1..n} has such a class. Throws
  // CapExceededError if none up to max_n.
  std::size_t min_n_forcing(std::size_t colors,
                            std::size_t len,
                            std::size_t max_n = 24);

  nlohmann::json to_json(std::vector<ClassWitness> const& report,
                         std::size_t                      k,
                         Combine                          combine);

}  // namespace idemlab::hindman
