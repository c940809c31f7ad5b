#pragma once

// Brute-force reference implementations. Everything here follows the
// textbook definitions directly, position by position, with no shared code
// from the library beyond the word type.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "closedz/factorize.hpp"
#include "closedz/word.hpp"

namespace oracle {

using closedz::factorization;
using closedz::letter;
using closedz::scheme;
using closedz::word;
using closedz::word_view;

inline bool equal_at(word_view host, std::size_t at, word_view x) {
  if (at + x.size() > host.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (host[at + i] != x[i]) return false;
  }
  return true;
}

/// 1-based start positions.
inline std::vector<std::size_t> occurrences(word_view host, word_view x) {
  std::vector<std::size_t> out;
  if (x.empty()) return out;
  for (std::size_t i = 0; i + x.size() <= host.size(); ++i) {
    if (equal_at(host, i, x)) out.push_back(i + 1);
  }
  return out;
}

inline std::size_t count(word_view host, word_view x) { return occurrences(host, x).size(); }

inline std::vector<std::size_t> border_lengths(word_view w) {
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (equal_at(w, w.size() - len, w.first(len))) out.push_back(len);
  }
  return out;
}

inline bool is_palindrome(word_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != w[w.size() - 1 - i]) return false;
  }
  return true;
}

/// Closed iff a single letter, or some border occurs exactly twice.
inline bool is_closed(word_view w) {
  if (w.size() == 1) return true;
  for (std::size_t len : border_lengths(w)) {
    if (count(w, w.first(len)) == 2) return true;
  }
  return false;
}

inline std::optional<word> closed_border(word_view w) {
  std::optional<word> found;
  for (std::size_t len : border_lengths(w)) {
    if (count(w, w.first(len)) == 2) {
      found = word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
    }
  }
  return found;
}

inline word palindromic_closure(word_view w) {
  for (std::size_t k = 0; k <= w.size(); ++k) {
    word c(w.begin(), w.end());
    for (std::size_t i = k; i-- > 0;) c.push_back(w[i]);
    if (is_palindrome(c)) return c;
  }
  return {};
}

/// In order of first appearance, deduplicated.
inline std::vector<word> return_words(word_view host, word_view v) {
  auto const occ = occurrences(host, v);
  std::vector<word> out;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    word r(host.begin() + static_cast<std::ptrdiff_t>(occ[i] - 1),
           host.begin() + static_cast<std::ptrdiff_t>(occ[i + 1] - 1));
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

// Greedy z / cz / pz: at each position try L = 1, 2, ... and accept the
// first candidate u with |prefix . u|_u = 1 that also satisfies the scheme's
// shape predicate.
inline factorization greedy(word_view text, scheme kind) {
  factorization out;
  out.kind = kind;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 0;
    for (std::size_t l = 1; pos + l <= text.size(); ++l) {
      auto const u = text.subspan(pos, l);
      if (count(text.first(pos + l), u) != 1) continue;
      if (kind == scheme::cz && !is_closed(u)) continue;
      if (kind == scheme::pz && !is_palindrome(u)) continue;
      len = l;
      break;
    }
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

// Does text[pos, pos+l) also start somewhere before pos?
inline bool occurs_before(word_view text, std::size_t pos, std::size_t l) {
  for (std::size_t s = 0; s < pos; ++s) {
    if (equal_at(text, s, text.subspan(pos, l))) return true;
  }
  return false;
}

inline factorization crochemore(word_view text) {
  factorization out;
  out.kind = scheme::c;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 1;
    // A prefix of an earlier occurrence occurs earlier too, so stop at the
    // first miss.
    for (std::size_t l = 1; pos + l <= text.size() && occurs_before(text, pos, l); ++l) {
      len = l;
    }
    out.factors.emplace_back(text.begin() + static_cast<std::ptrdiff_t>(pos),
                             text.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

// Closed c-factorization candidates. longest_closed: the longest closed
// prefix starting before pos. alternative: the longest closed prefix u with
// |prefix . u|_u >= 2.
inline factorization closed_crochemore(word_view text, bool alternative) {
  factorization out;
  out.kind = scheme::cc;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 1;
    for (std::size_t l = 1; pos + l <= text.size(); ++l) {
      auto const u = text.subspan(pos, l);
      bool const seen = alternative ? count(text.first(pos + l), u) >= 2 : occurs_before(text, pos, l);
      if (!seen) break;
      if (is_closed(u)) len = l;
    }
    out.factors.emplace_back(text.begin() + static_cast<std::ptrdiff_t>(pos),
                             text.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

inline std::vector<std::uint8_t> oc_bits(word_view w, std::size_t n) {
  std::vector<std::uint8_t> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(is_closed(w.first(k)) ? 1 : 0);
  return out;
}

/// First n letters of the m-bonacci fixed point by repeated substitution
/// from "0", one pass per round.
inline word bonacci_prefix(int m, std::size_t n) {
  word w{0};
  while (w.size() < n) {
    word next;
    for (letter a : w) {
      next.push_back(0);
      if (a + 1 < m) next.push_back(static_cast<letter>(a + 1));
    }
    w = next;
  }
  w.resize(n);
  return w;
}

/// h_n = phi^n(0).
inline word bonacci_word(int m, int n) {
  word w{0};
  for (int i = 0; i < n; ++i) {
    word next;
    for (letter a : w) {
      next.push_back(0);
      if (a + 1 < m) next.push_back(static_cast<letter>(a + 1));
    }
    w = next;
  }
  return w;
}

/// Palindromic prefixes of the fixed point in increasing length, u_1 = eps.
inline std::vector<word> palindromic_prefixes(int m, std::size_t prefix_length) {
  auto const h = bonacci_prefix(m, prefix_length);
  std::vector<word> out{word{}};
  for (std::size_t len = 1; len <= h.size(); ++len) {
    if (is_palindrome(word_view(h).first(len))) out.emplace_back(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(len));
  }
  return out;
}

inline word random_word(std::mt19937& rng, int m, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, m - 1);
  word w(len);
  for (auto& a : w) a = static_cast<letter>(pick(rng));
  return w;
}

}  // namespace oracle
