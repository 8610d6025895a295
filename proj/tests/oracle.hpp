#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's checkers; it works on raw row-major tables.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

  using Cells = std::vector<int>;

  inline int at(Cells const& t, int n, int a, int b) {
    return t[a * n + b];
  }

  // All n^(n*n) labeled tables, in lexicographic order.
  inline std::vector<Cells> all_tables(int n) {
    std::vector<Cells> out;
    Cells              t(n * n, 0);
    while (true) {
      out.push_back(t);
      int i = n * n;
      while (i > 0 && ++t[i - 1] == n) {
        t[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return out;
      }
    }
  }

  inline bool for_all3(int n, std::function<bool(int, int, int)> const& f) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (!f(x, y, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool associative(Cells const& t, int n) {
    return for_all3(n, [&](int x, int y, int z) {
      return at(t, n, at(t, n, x, y), z) == at(t, n, x, at(t, n, y, z));
    });
  }

  // m(x, p(y, z)) = p(m(x, y), m(x, z))
  inline bool left_distributive(Cells const& m, Cells const& p, int n) {
    return for_all3(n, [&](int x, int y, int z) {
      return at(m, n, x, at(p, n, y, z))
             == at(p, n, at(m, n, x, y), at(m, n, x, z));
    });
  }

  inline std::vector<int> idempotents(Cells const& t, int n) {
    std::vector<int> out;
    for (int e = 0; e < n; ++e) {
      if (at(t, n, e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  // Concatenated tables, least over all relabelings.
  inline Cells canonical(std::vector<Cells> const& tables, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Cells best;
    do {
      Cells img;
      for (auto const& t : tables) {
        Cells r(n * n);
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            r[perm[a] * n + perm[b]] = perm[at(t, n, a, b)];
          }
        }
        img.insert(img.end(), r.begin(), r.end());
      }
      if (best.empty() || img < best) {
        best = img;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  // Closure of a seed under every table, by repeated squaring of the set.
  inline std::set<int> closure(std::vector<Cells> const& tables,
                               int                       n,
                               std::set<int>             s) {
    while (true) {
      std::set<int> next = s;
      for (auto const& t : tables) {
        for (int a : s) {
          for (int b : s) {
            next.insert(at(t, n, a, b));
          }
        }
      }
      if (next == s) {
        return s;
      }
      s = next;
    }
  }

  inline bool minimal(std::vector<Cells> const& tables, int n) {
    for (int e = 0; e < n; ++e) {
      if (static_cast<int>(closure(tables, n, {e}).size()) != n) {
        return false;
      }
    }
    return true;
  }

}  // namespace oracle

namespace oracle {

  // Does some color class of 1..n hold distinct a < b with a + b in the class?
  // Colorings are bitmasks; bit i-1 is the color of i.
  inline bool has_mono_pair(unsigned mask, int n) {
    auto col = [&](int i) { return (mask >> (i - 1)) & 1u; };
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; a + b <= n; ++b) {
        if (col(a) == col(b) && col(a) == col(a + b)) {
          return true;
        }
      }
    }
    return false;
  }

  // Number of 2-colorings of 1..n with no monochromatic {a, b, a + b}.
  inline long avoiding_two_colorings(int n) {
    long count = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (!has_mono_pair(mask, n)) {
        ++count;
      }
    }
    return count;
  }

}  // namespace oracle
