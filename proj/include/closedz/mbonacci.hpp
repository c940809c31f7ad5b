#pragma once

// Indexed word families of the m-bonacci word h_omega (fixed point of
// bonacci_morphism(m)):
//
//   bonacci_word(m, n)         h_n, the finite m-bonacci words (h_{-1} = m-1)
//   palindromic_prefix(m, n)   u_n, the n-th palindromic prefix (u_1 = eps)
//   singular_word(n)           w_n, singular factors of the Fibonacci word
//   closed_z_factor(m, n)      z_n, the n-th closed z-factor (closed form)
//   closed_z_prefix(m, n)      P_n = z_0 z_1 ... z_{n-1}
//   ladder_gap(m, n)           t_n, with u_n t_n h_{n-2}^R = u_{n+1}
//
// Generated words are memoized per (family, m, n) and returned by reference;
// the references stay valid for the lifetime of the program.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "closedz/morphism.hpp"
#include "closedz/word.hpp"

namespace closedz {

enum class family { bonacci, palindromic_prefix, singular, closed_factor, closed_prefix, ladder_gap };

inline std::string to_string(family f) {
  switch (f) {
    case family::bonacci: return "h";
    case family::palindromic_prefix: return "u";
    case family::singular: return "w";
    case family::closed_factor: return "z";
    case family::closed_prefix: return "P";
    case family::ladder_gap: return "t";
  }
  return "?";
}

/// Smallest admissible index of each family.
inline int min_index(family f) {
  switch (f) {
    case family::bonacci: return -1;
    case family::palindromic_prefix: return 1;
    case family::singular: return -2;
    case family::closed_factor: return 0;
    case family::closed_prefix: return 0;
    case family::ladder_gap: return 2;
  }
  return 0;
}

namespace detail {

class word_cache {
 public:
  template <class Make>
  word const& get(family f, int m, int n, Make&& make) {
    auto const key = std::make_tuple(static_cast<int>(f), m, n);
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) {
        return *it->second;
      }
    }
    // Built outside the lock: generators recurse into the cache.
    auto built = std::make_unique<word const>(make());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.try_emplace(key, std::move(built));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<word const>> map_;
};

inline word_cache& cache() {
  static word_cache instance;
  return instance;
}

inline void check_index(family f, int m, int n) {
  morphism::check_size(m);
  if (f == family::singular && m != 2) {
    throw std::invalid_argument("singular words are defined only for m = 2");
  }
  if (n < min_index(f)) {
    throw std::out_of_range("family " + to_string(f) + ": index " +
                            std::to_string(n) + " below minimum " +
                            std::to_string(min_index(f)));
  }
}

inline void append_reversed(word& out, word_view w) {
  out.insert(out.end(), w.rbegin(), w.rend());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Residue notation
// ---------------------------------------------------------------------------

/// n mod m in [0, m), also for negative n.
inline letter residue(int m, int n) {
  int r = n % m;
  return static_cast<letter>(r < 0 ? r + m : r);
}

/// "0" if m divides n, else the empty word. Defined for every integer n.
inline word zero_if_divisible(int m, int n) {
  return n % m == 0 ? word{0} : word{};
}

/// The residue letter, the residue as a word unless m | n, and its
/// complement: residue_or_empty . zero_if_divisible spells the residue.
struct residue_marks {
  letter residue;
  word residue_or_empty;
  word zero_if_divisible;

  friend bool operator==(residue_marks const&, residue_marks const&) = default;
};

inline residue_marks mod_marks(int m, int n) {
  morphism::check_size(m);
  if (n < 0) {
    throw std::out_of_range("mod_marks: negative index");
  }
  letter const r = residue(m, n);
  return residue_marks{r, r == 0 ? word{} : word{r}, zero_if_divisible(m, n)};
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// h_n: h_0 = 0; h_n = h_{n-1}...h_0 n for 1 <= n <= m-1;
/// h_n = h_{n-1}...h_{n-m} for n >= m; h_{-1} = m-1 by convention.
inline word const& bonacci_word(int m, int n) {
  detail::check_index(family::bonacci, m, n);
  return detail::cache().get(family::bonacci, m, n, [m, n] {
    if (n == -1) {
      return word{static_cast<letter>(m - 1)};
    }
    if (n == 0) {
      return word{0};
    }
    word out;
    int const lowest = n <= m - 1 ? 0 : n - m;
    for (int i = n - 1; i >= lowest; --i) {
      append(out, bonacci_word(m, i));
    }
    if (n <= m - 1) {
      out.push_back(static_cast<letter>(n));
    }
    return out;
  });
}

/// Finite Fibonacci words f_n (f_{-1} = 1, f_0 = 0, f_n = f_{n-1} f_{n-2}).
inline word const& fibonacci_word(int n) { return bonacci_word(2, n); }

/// u_n, n >= 1: u_1 = eps and u_{n+1} = h_{n-1} u_n.
inline word const& palindromic_prefix(int m, int n) {
  detail::check_index(family::palindromic_prefix, m, n);
  return detail::cache().get(family::palindromic_prefix, m, n, [m, n] {
    if (n == 1) {
      return word{};
    }
    return concat({bonacci_word(m, n - 2), palindromic_prefix(m, n - 1)});
  });
}

/// w_n, n >= -2: eps, 0, 1, then a f_n b^{-1} where ab ends f_n.
inline word const& singular_word(int n) {
  detail::check_index(family::singular, 2, n);
  return detail::cache().get(family::singular, 2, n, [n] {
    switch (n) {
      case -2: return word{};
      case -1: return word{0};
      case 0: return word{1};
      default: break;
    }
    auto const& f = fibonacci_word(n);
    word out;
    out.reserve(f.size());
    out.push_back(f[f.size() - 2]);
    out.insert(out.end(), f.begin(), f.end() - 1);
    return out;
  });
}

/// z_n by its closed form in reversed m-bonacci words.
inline word const& closed_z_factor(int m, int n) {
  detail::check_index(family::closed_factor, m, n);
  return detail::cache().get(family::closed_factor, m, n, [m, n] {
    if (n == 0) {
      return word{0};
    }
    if (n == 1) {
      return word{1};
    }
    if (n == 2) {
      return m == 2 ? word{0, 0} : word{0, 2, 0};
    }
    word out = strip_prefix(word{residue(m, n - 3)}, reverse(bonacci_word(m, n - 3)));
    detail::append_reversed(out, bonacci_word(m, n - 2));
    if (n <= m - 1) {
      out.push_back(static_cast<letter>(n));
      for (int i = 0; i <= n - 3; ++i) {
        detail::append_reversed(out, bonacci_word(m, i));
      }
    } else {
      for (int i = n - m; i <= n - 3; ++i) {
        detail::append_reversed(out, bonacci_word(m, i));
      }
    }
    out.push_back(residue(m, n - 2));
    return out;
  });
}

/// z_n through z_n = (hat(n-3))^{-1} phi(z_{n-1}) hat(n-2), hat(k) being
/// zero_if_divisible(m, k). Not memoized; used to cross-check the closed form.
inline word closed_z_factor_by_recursion(int m, int n) {
  detail::check_index(family::closed_factor, m, n);
  auto const phi = bonacci_morphism(m);
  word z{0};
  if (n == 0) {
    return z;
  }
  z = word{1};
  for (int k = 2; k <= n; ++k) {
    z = concat({strip_prefix(zero_if_divisible(m, k - 3), phi(z)),
                zero_if_divisible(m, k - 2)});
  }
  return z;
}

/// P_n = z_0 z_1 ... z_{n-1}.
inline word const& closed_z_prefix(int m, int n) {
  detail::check_index(family::closed_prefix, m, n);
  return detail::cache().get(family::closed_prefix, m, n, [m, n] {
    if (n == 0) {
      return word{};
    }
    return concat({closed_z_prefix(m, n - 1), closed_z_factor(m, n - 1)});
  });
}

/// P_n through P_n = phi(P_{n-1}) hat(n-3) for n >= 3.
inline word closed_z_prefix_by_recursion(int m, int n) {
  detail::check_index(family::closed_prefix, m, n);
  switch (n) {
    case 0: return word{};
    case 1: return word{0};
    case 2: return word{0, 1};
    default: break;
  }
  auto const phi = bonacci_morphism(m);
  word p{0, 1};
  for (int k = 3; k <= n; ++k) {
    p = concat({phi(p), zero_if_divisible(m, k - 3)});
  }
  return p;
}

/// t_n, n >= 2: (n-1) h_0^R ... h_{n-3}^R for n <= m-1, otherwise
/// h_{n-m-1}^R ... h_{n-3}^R.
inline word const& ladder_gap(int m, int n) {
  detail::check_index(family::ladder_gap, m, n);
  return detail::cache().get(family::ladder_gap, m, n, [m, n] {
    word out;
    int first = n - m - 1;
    if (n <= m - 1) {
      out.push_back(static_cast<letter>(n - 1));
      first = 0;
    }
    for (int i = first; i <= n - 3; ++i) {
      detail::append_reversed(out, bonacci_word(m, i));
    }
    return out;
  });
}

/// Dispatches on the family tag; singular words ignore m beyond requiring 2.
inline word const& family_word(int m, family f, int n) {
  switch (f) {
    case family::bonacci: return bonacci_word(m, n);
    case family::palindromic_prefix: return palindromic_prefix(m, n);
    case family::singular:
      detail::check_index(f, m, n);
      return singular_word(n);
    case family::closed_factor: return closed_z_factor(m, n);
    case family::closed_prefix: return closed_z_prefix(m, n);
    case family::ladder_gap: return ladder_gap(m, n);
  }
  throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Lengths without materializing words
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) {
    throw std::overflow_error("family length overflows 64 bits");
  }
  return a + b;
}

// |h_{-1}|, |h_0|, ..., |h_n| at offsets 0..n+1.
inline std::vector<std::uint64_t> bonacci_lengths(int m, int n) {
  std::vector<std::uint64_t> len{1, 1};
  for (int k = 1; k <= n; ++k) {
    std::uint64_t s = k <= m - 1 ? 1 : 0;
    int const lowest = k <= m - 1 ? 0 : k - m;
    for (int i = lowest; i <= k - 1; ++i) {
      s = checked_add(s, len[static_cast<std::size_t>(i + 1)]);
    }
    len.push_back(s);
  }
  return len;
}

}  // namespace detail

/// |family word| from integer recurrences. |z_n| follows the m-term
/// recurrence for n >= m+1; smaller indices use the closed-form lengths.
inline std::uint64_t family_length(int m, family f, int n) {
  detail::check_index(f, m, n);
  auto h = [&](int k) {
    return detail::bonacci_lengths(m, std::max(k, 0))[static_cast<std::size_t>(k + 1)];
  };
  switch (f) {
    case family::bonacci:
      return h(n);
    case family::singular:
      return n == -2 ? 0 : h(n);
    case family::palindromic_prefix: {
      std::uint64_t s = 0;
      for (int k = 0; k <= n - 2; ++k) {
        s = detail::checked_add(s, h(k));
      }
      return s;
    }
    case family::ladder_gap: {
      std::uint64_t s = n <= m - 1 ? 1 : 0;
      int const first = n <= m - 1 ? 0 : n - m - 1;
      for (int i = first; i <= n - 3; ++i) {
        s = detail::checked_add(s, h(i));
      }
      return s;
    }
    case family::closed_factor: {
      std::vector<std::uint64_t> z;
      for (int k = 0; k <= n; ++k) {
        std::uint64_t v;
        if (k <= 1) {
          v = 1;
        } else if (k == 2) {
          v = m == 2 ? 2 : 3;
        } else if (k >= m + 1) {
          v = 0;
          for (int i = 1; i <= m; ++i) {
            v = detail::checked_add(v, z[static_cast<std::size_t>(k - i)]);
          }
        } else if (k <= m - 1) {
          v = h(k - 3) + 2 * h(k - 2);
        } else {
          v = h(k - 3) + h(k - 2);
          for (int i = k - m; i <= k - 3; ++i) {
            v = detail::checked_add(v, h(i));
          }
        }
        z.push_back(v);
      }
      return z.back();
    }
    case family::closed_prefix: {
      std::uint64_t s = 0;
      for (int k = 0; k < n; ++k) {
        s = detail::checked_add(s, family_length(m, family::closed_factor, k));
      }
      return s;
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace closedz
