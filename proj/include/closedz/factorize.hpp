#pragma once

// Greedy factorizations of finite words and of fixed points of morphisms.
//
//   z   Ziv-Lempel: each factor is the shortest prefix of the remainder that
//       occurs exactly once in (emitted text) . factor
//   cz  same, restricted to closed factors
//   pz  same, restricted to palindromic factors
//   c   Crochemore: longest prefix of the remainder occurring at an earlier
//       start position, or a fresh letter
//   cc  closed variant of c (candidate definition, see cc_mode)
//
// "Occurs exactly once in (emitted) . u" is equivalent to "u has no
// occurrence starting before the current position", which is monotone in
// |u|. The shortest such length is one more than the longest previous factor
// (LPF) at the position, computed with a Z-function scan.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "closedz/morphism.hpp"
#include "closedz/word.hpp"

namespace closedz {

enum class scheme { z, cz, pz, c, cc };

inline std::string to_string(scheme s) {
  switch (s) {
    case scheme::z: return "z";
    case scheme::cz: return "cz";
    case scheme::pz: return "pz";
    case scheme::c: return "c";
    case scheme::cc: return "cc";
  }
  return "?";
}

inline scheme parse_scheme(std::string const& s) {
  if (s == "z") return scheme::z;
  if (s == "cz") return scheme::cz;
  if (s == "pz") return scheme::pz;
  if (s == "c") return scheme::c;
  if (s == "cc") return scheme::cc;
  throw std::invalid_argument("unknown scheme '" + s + "'");
}

/// Candidate definitions for the closed c-factorization. Both select the
/// longest closed prefix of the remainder with an earlier occurrence; they
/// differ in how that occurrence is established.
enum class cc_mode {
  longest_closed,  ///< occurrence starting before the current position (LPF)
  alternative,     ///< at least two occurrences in emitted . candidate
};

struct factorization {
  scheme kind = scheme::z;
  std::vector<word> factors;
  /// False when the source ran out before the last factor met its condition;
  /// that last factor is then the unfinished remainder.
  bool complete = true;

  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    out.reserve(factors.size());
    for (auto const& f : factors) {
      out.push_back(f.size());
    }
    return out;
  }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (auto const& f : factors) {
      n += f.size();
    }
    return n;
  }

  word concatenated() const {
    word out;
    out.reserve(total_length());
    for (auto const& f : factors) {
      append(out, f);
    }
    return out;
  }

  friend bool operator==(factorization const&, factorization const&) = default;
};

/// Default ceiling on how far a stream may be expanded while factorizing.
inline constexpr std::size_t default_stream_cap = std::size_t{1} << 28;

inline fixed_point_stream bonacci_stream(int m) {
  return fixed_point_stream(bonacci_morphism(m), 0);
}

namespace detail {

// Longest previous factor at `pos`: max over s < pos of the longest common
// prefix of text[s..] and text[pos..]. Overlap with the current position is
// allowed.
inline std::size_t longest_previous_factor(word_view text, std::size_t pos) {
  if (pos == 0) {
    return 0;
  }
  std::size_t const tail = text.size() - pos;
  // Z-function of text[pos..] # text[0..]; entries in the second half give
  // the match length against the first half, capped by the separator.
  word s;
  s.reserve(tail + 1 + text.size());
  s.insert(s.end(), text.begin() + static_cast<std::ptrdiff_t>(pos), text.end());
  s.push_back(separator);
  s.insert(s.end(), text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos - 1 + tail));
  std::vector<std::size_t> z(s.size(), 0);
  std::size_t l = 0;
  std::size_t r = 0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (i < r) {
      z[i] = std::min(r - i, z[i - l]);
    }
    while (i + z[i] < s.size() && s[z[i]] == s[i + z[i]]) {
      ++z[i];
    }
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
    if (i > tail && i - tail - 1 < pos) {
      best = std::max(best, z[i]);
    }
  }
  return best;
}

// Uniform access to a finite word or a growing fixed point.
class finite_source {
 public:
  explicit finite_source(word_view w) : w_(w) {}
  bool ensure(std::size_t n) const { return n <= w_.size(); }
  word_view view() const { return w_; }
  static constexpr bool is_finite = true;

 private:
  word_view w_;
};

class stream_source {
 public:
  stream_source(fixed_point_stream& s, std::size_t cap) : s_(s), cap_(cap) {}
  bool ensure(std::size_t n) {
    if (n > cap_) {
      throw std::length_error("factorization needs more than " +
                              std::to_string(cap_) + " letters of the stream");
    }
    s_.extend_to(n);
    return true;
  }
  word_view view() const { return s_.generated(); }
  static constexpr bool is_finite = false;

 private:
  fixed_point_stream& s_;
  std::size_t cap_;
};

template <class S>
concept letter_source = requires(S& s, std::size_t n) {
  { s.ensure(n) } -> std::same_as<bool>;
  { s.view() } -> std::convertible_to<word_view>;
};

// Shortest length whose prefix at `pos` has no earlier occurrence, or 0 if a
// finite source ends first.
template <letter_source S>
std::size_t shortest_unique_length(S& src, std::size_t pos) {
  std::size_t window = std::max<std::size_t>(2 * (pos + 1), 16);
  while (true) {
    if (!src.ensure(window)) {
      window = src.view().size();
    }
    auto const text = src.view().first(window);
    std::size_t const lpf = longest_previous_factor(text, pos);
    if (pos + lpf < text.size()) {
      return lpf + 1;
    }
    if constexpr (S::is_finite) {
      if (window == src.view().size()) {
        return 0;
      }
    }
    window *= 2;
  }
}

// Smallest L >= min_len with text[pos, pos+L) closed, or 0 if a finite source
// ends first.
template <letter_source S>
std::size_t shortest_closed_length(S& src, std::size_t pos, std::size_t min_len) {
  closed_prefix_scanner scan;
  for (std::size_t len = 1;; ++len) {
    if (!src.ensure(pos + len)) {
      return 0;
    }
    bool const closed = scan.push(src.view()[pos + len - 1]);
    if (len >= min_len && closed) {
      return len;
    }
  }
}

// Smallest L >= min_len with text[pos, pos+L) a palindrome, or 0.
template <letter_source S>
std::size_t shortest_palindrome_length(S& src, std::size_t pos, std::size_t min_len) {
  std::size_t window = std::max<std::size_t>(2 * min_len, 16);
  while (true) {
    bool exhausted = false;
    if (!src.ensure(pos + window)) {
      window = src.view().size() - pos;
      exhausted = true;
    }
    auto const seg = src.view().subspan(pos, window);
    for (std::size_t len : palindromic_prefix_lengths(seg)) {
      if (len >= min_len) {
        return len;
      }
    }
    if (exhausted) {
      return 0;
    }
    window *= 2;
  }
}

template <letter_source S>
factorization greedy_unique(S& src, scheme kind, std::size_t max_factors) {
  factorization out;
  out.kind = kind;
  std::size_t pos = 0;
  while (out.factors.size() < max_factors) {
    if (!src.ensure(pos + 1)) {
      break;
    }
    std::size_t len = shortest_unique_length(src, pos);
    if (len != 0 && kind == scheme::cz) {
      len = shortest_closed_length(src, pos, len);
    } else if (len != 0 && kind == scheme::pz) {
      len = shortest_palindrome_length(src, pos, len);
    }
    auto const text = src.view();
    if (len == 0) {
      out.factors.emplace_back(text.begin() + static_cast<std::ptrdiff_t>(pos), text.end());
      out.complete = false;
      break;
    }
    out.factors.emplace_back(text.begin() + static_cast<std::ptrdiff_t>(pos),
                             text.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

inline word_view capped(word_view w, std::size_t length_cap) {
  return w.first(std::min(w.size(), length_cap));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// z / cz / pz over finite words (budget: total length cap) and streams
// (budget: number of factors)
// ---------------------------------------------------------------------------

inline factorization z_factorize(word_view w, std::size_t length_cap = SIZE_MAX) {
  detail::finite_source src(detail::capped(w, length_cap));
  return detail::greedy_unique(src, scheme::z, SIZE_MAX);
}

inline factorization closed_z_factorize(word_view w, std::size_t length_cap = SIZE_MAX) {
  detail::finite_source src(detail::capped(w, length_cap));
  return detail::greedy_unique(src, scheme::cz, SIZE_MAX);
}

inline factorization palindromic_z_factorize(word_view w, std::size_t length_cap = SIZE_MAX) {
  detail::finite_source src(detail::capped(w, length_cap));
  return detail::greedy_unique(src, scheme::pz, SIZE_MAX);
}

inline factorization z_factorize(fixed_point_stream& s, std::size_t factor_count,
                                 std::size_t stream_cap = default_stream_cap) {
  detail::stream_source src(s, stream_cap);
  return detail::greedy_unique(src, scheme::z, factor_count);
}

inline factorization closed_z_factorize(fixed_point_stream& s, std::size_t factor_count,
                                        std::size_t stream_cap = default_stream_cap) {
  detail::stream_source src(s, stream_cap);
  return detail::greedy_unique(src, scheme::cz, factor_count);
}

inline factorization palindromic_z_factorize(fixed_point_stream& s, std::size_t factor_count,
                                             std::size_t stream_cap = default_stream_cap) {
  detail::stream_source src(s, stream_cap);
  return detail::greedy_unique(src, scheme::pz, factor_count);
}

// ---------------------------------------------------------------------------
// c / cc, finite words only
// ---------------------------------------------------------------------------

inline factorization c_factorize(word_view w) {
  if (w.empty()) {
    throw std::invalid_argument("c_factorize: empty word");
  }
  factorization out;
  out.kind = scheme::c;
  std::size_t pos = 0;
  while (pos < w.size()) {
    std::size_t const len = std::max<std::size_t>(1, detail::longest_previous_factor(w, pos));
    out.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(pos),
                             w.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

namespace detail {

// Longest L in [1, limit] with text[pos, pos+L) closed; 1 is always closed.
inline std::size_t longest_closed_within(word_view text, std::size_t pos, std::size_t limit) {
  closed_prefix_scanner scan;
  std::size_t best = 1;
  for (std::size_t len = 1; len <= limit; ++len) {
    if (scan.push(text[pos + len - 1])) {
      best = len;
    }
  }
  return best;
}

// Longest L such that text[pos, pos+L) occurs at least twice in
// text[0, pos+L); 0 if even one letter does not.
inline std::size_t longest_repeated_by_count(word_view text, std::size_t pos) {
  auto repeats = [&](std::size_t len) {
    auto const cand = text.subspan(pos, len);
    return detail::find_all(text.first(pos + len), cand, 2).size() >= 2;
  };
  std::size_t lo = 0;
  std::size_t hi = text.size() - pos;
  while (lo < hi) {
    std::size_t const mid = lo + (hi - lo + 1) / 2;
    if (repeats(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace detail

inline factorization closed_c_factorize(word_view w, cc_mode mode = cc_mode::longest_closed) {
  if (w.empty()) {
    throw std::invalid_argument("closed_c_factorize: empty word");
  }
  factorization out;
  out.kind = scheme::cc;
  std::size_t pos = 0;
  while (pos < w.size()) {
    std::size_t const reach = mode == cc_mode::longest_closed
                                  ? detail::longest_previous_factor(w, pos)
                                  : detail::longest_repeated_by_count(w, pos);
    std::size_t const len = reach == 0 ? 1 : detail::longest_closed_within(w, pos, reach);
    out.factors.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(pos),
                             w.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

}  // namespace closedz
