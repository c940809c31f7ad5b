#pragma once

// Finite words over A_m = {0, ..., m-1}: reversal, palindromes, palindromic
// closure, occurrence counting, borders, closed/open classification and
// return words. Positions reported to callers are 1-based.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace closedz {

using letter = std::uint8_t;
using word = std::vector<letter>;
using word_view = std::span<const letter>;

/// Largest alphabet the text serialization can express ('0'-'9', 'a'-'z').
inline constexpr int max_alphabet_size = 36;

namespace detail {

// Separator that never occurs in a word (letters are < max_alphabet_size).
inline constexpr letter separator = 0xFF;

// Knuth-Morris-Pratt failure function: fail[j] is the length of the longest
// proper border of s[0, j), for 1 <= j <= |s|; fail[0] = 0.
inline std::vector<std::size_t> failure_function(word_view s) {
  std::vector<std::size_t> fail(s.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < s.size(); ++j) {
    while (k > 0 && s[j] != s[k]) {
      k = fail[k];
    }
    if (s[j] == s[k]) {
      ++k;
    }
    fail[j + 1] = k;
  }
  return fail;
}

inline word joined(word_view a, word_view b) {
  word out;
  out.reserve(a.size() + b.size() + 1);
  out.insert(out.end(), a.begin(), a.end());
  out.push_back(separator);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// 0-based start indices of every (possibly overlapping) occurrence of x in
// host. Stops after `limit` hits.
inline std::vector<std::size_t> find_all(word_view host, word_view x,
                                         std::size_t limit = SIZE_MAX) {
  std::vector<std::size_t> hits;
  if (x.empty() || x.size() > host.size()) {
    return hits;
  }
  auto const fail = failure_function(x);
  std::size_t k = 0;
  for (std::size_t i = 0; i < host.size(); ++i) {
    while (k > 0 && (k == x.size() || host[i] != x[k])) {
      k = fail[k];
    }
    if (host[i] == x[k]) {
      ++k;
    }
    if (k == x.size()) {
      hits.push_back(i + 1 - x.size());
      if (hits.size() >= limit) {
        break;
      }
    }
  }
  return hits;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline char to_char(letter a) {
  if (a >= max_alphabet_size) {
    throw std::out_of_range("letter " + std::to_string(a) +
                            " cannot be serialized (max 35)");
  }
  return a < 10 ? static_cast<char>('0' + a) : static_cast<char>('a' + a - 10);
}

inline std::string to_string(word_view w) {
  std::string out;
  out.reserve(w.size());
  for (letter a : w) {
    out.push_back(to_char(a));
  }
  return out;
}

/// Parses the text form of a word. When `alphabet_size` is positive every
/// letter must be smaller than it.
inline word parse_word(std::string_view text, int alphabet_size = 0) {
  word out;
  out.reserve(text.size());
  for (char c : text) {
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'z') {
      v = c - 'a' + 10;
    } else {
      throw std::invalid_argument(std::string("invalid letter character '") +
                                  c + "'");
    }
    if (alphabet_size > 0 && v >= alphabet_size) {
      throw std::invalid_argument(std::string("letter '") + c +
                                  "' outside alphabet of size " +
                                  std::to_string(alphabet_size));
    }
    out.push_back(static_cast<letter>(v));
  }
  return out;
}

inline word operator""_w(char const* s, std::size_t n) {
  return parse_word(std::string_view(s, n));
}

// ---------------------------------------------------------------------------
// Concatenation and cancellation (u^{-1} w, w v^{-1})
// ---------------------------------------------------------------------------

inline word concat(std::initializer_list<word_view> parts) {
  std::size_t n = 0;
  for (auto p : parts) {
    n += p.size();
  }
  word out;
  out.reserve(n);
  for (auto p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

inline void append(word& w, word_view tail) {
  w.insert(w.end(), tail.begin(), tail.end());
}

inline bool is_prefix(word_view p, word_view w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline bool is_suffix(word_view s, word_view w) {
  return s.size() <= w.size() &&
         std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()));
}

/// u^{-1} w. Throws if u is not a prefix of w.
inline word strip_prefix(word_view u, word_view w) {
  if (!is_prefix(u, w)) {
    throw std::invalid_argument("strip_prefix: " + to_string(u) +
                                " is not a prefix of " + to_string(w));
  }
  return word(w.begin() + static_cast<std::ptrdiff_t>(u.size()), w.end());
}

/// w v^{-1}. Throws if v is not a suffix of w.
inline word strip_suffix(word_view w, word_view v) {
  if (!is_suffix(v, w)) {
    throw std::invalid_argument("strip_suffix: " + to_string(v) +
                                " is not a suffix of " + to_string(w));
  }
  return word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(v.size()));
}

// ---------------------------------------------------------------------------
// Reversal and palindromes
// ---------------------------------------------------------------------------

inline word reverse(word_view w) { return word(w.rbegin(), w.rend()); }

inline bool is_palindrome(word_view w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                    w.rbegin());
}

/// Length of the longest palindromic suffix of w (0 only for the empty word).
inline std::size_t longest_palindromic_suffix(word_view w) {
  if (w.empty()) {
    return 0;
  }
  // Borders of w^R # w are words that are prefixes of w^R and suffixes of w,
  // i.e. palindromic suffixes of w.
  auto const rev = reverse(w);
  auto const fail = detail::failure_function(detail::joined(rev, w));
  return fail.back();
}

/// Lengths of all non-empty palindromic prefixes of w, ascending.
inline std::vector<std::size_t> palindromic_prefix_lengths(word_view w) {
  std::vector<std::size_t> out;
  if (w.empty()) {
    return out;
  }
  auto const rev = reverse(w);
  auto const fail = detail::failure_function(detail::joined(w, rev));
  // The whole word is its own border in this construction only if it is a
  // palindrome; proper borders come from the chain.
  if (is_palindrome(w)) {
    out.push_back(w.size());
  }
  for (std::size_t k = fail.back(); k > 0; k = fail[k]) {
    if (k < w.size()) {
      out.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The shortest palindrome having w as a prefix, w^(+).
inline word palindromic_closure(word_view w) {
  std::size_t const pal = longest_palindromic_suffix(w);
  word out(w.begin(), w.end());
  auto const head = w.first(w.size() - pal);
  out.insert(out.end(), head.rbegin(), head.rend());
  return out;
}

// ---------------------------------------------------------------------------
// Occurrences
// ---------------------------------------------------------------------------

/// Sorted 1-based start positions of x in host, overlaps included.
/// The empty word is rejected as a pattern.
inline std::vector<std::size_t> occurrences(word_view host, word_view x) {
  if (x.empty()) {
    throw std::invalid_argument("occurrences: empty pattern");
  }
  auto hits = detail::find_all(host, x);
  for (auto& p : hits) {
    ++p;
  }
  return hits;
}

/// |host|_x.
inline std::size_t count_occurrences(word_view host, word_view x) {
  if (x.empty()) {
    throw std::invalid_argument("count_occurrences: empty pattern");
  }
  return detail::find_all(host, x).size();
}

/// True if x is a factor of host. The empty word is a factor of everything.
inline bool is_factor(word_view x, word_view host) {
  return x.empty() || !detail::find_all(host, x, 1).empty();
}

// ---------------------------------------------------------------------------
// Borders and closed words
// ---------------------------------------------------------------------------

/// Lengths L, 1 <= L < |w|, such that w[0, L) is a border of w; ascending.
inline std::vector<std::size_t> border_lengths(word_view w) {
  if (w.empty()) {
    throw std::invalid_argument("border_lengths: empty word");
  }
  auto const fail = detail::failure_function(w);
  std::vector<std::size_t> out;
  for (std::size_t k = fail[w.size()]; k > 0; k = fail[k]) {
    out.push_back(k);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::size_t longest_border(word_view w) {
  return w.empty() ? 0 : detail::failure_function(w)[w.size()];
}

/// A word is closed if it is a single letter or its longest border has no
/// occurrence other than as prefix and suffix.
inline bool is_closed(word_view w) {
  if (w.empty()) {
    throw std::invalid_argument("is_closed: empty word");
  }
  if (w.size() == 1) {
    return true;
  }
  std::size_t const b = longest_border(w);
  if (b == 0) {
    return false;
  }
  // Internal occurrences live entirely inside w[1, |w|-1).
  return !is_factor(w.first(b), w.subspan(1, w.size() - 2));
}

/// The border x with |w|_x = 2 (w is then the frontier of x), or nothing if
/// w is open. Requires |w| >= 2.
inline std::optional<word> closed_border(word_view w) {
  if (w.size() < 2) {
    throw std::invalid_argument("closed_border: word shorter than 2");
  }
  if (!is_closed(w)) {
    return std::nullopt;
  }
  std::size_t const b = longest_border(w);
  return word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(b));
}

/// Incremental closed-prefix detector. Feeding the letters of w one at a time
/// reports, after each letter, whether the prefix read so far is closed.
///
/// Keeps the failure function plus, for each prefix length k, the end of the
/// most recent occurrence of w[0, k). The length-L prefix with longest border
/// b is closed iff that border was last seen ending at b, i.e. only as a
/// prefix. Cost per letter is the length of the border chain.
class closed_prefix_scanner {
 public:
  closed_prefix_scanner() { fail_.push_back(0); last_end_.push_back(0); }

  bool push(letter a) {
    std::size_t const len = text_.size() + 1;
    std::size_t b = 0;
    if (len > 1) {
      b = fail_[len - 1];
      while (b > 0 && text_[b] != a) {
        b = fail_[b];
      }
      if (text_[b] == a) {
        ++b;
      }
    }
    text_.push_back(a);
    fail_.push_back(b);
    last_end_.push_back(len);

    bool closed;
    if (len == 1) {
      closed = true;
    } else if (b == 0) {
      closed = false;
    } else {
      closed = last_end_[b] == b;
    }
    for (std::size_t k = b; k > 0; k = fail_[k]) {
      last_end_[k] = len;
    }
    return closed;
  }

  std::size_t size() const { return text_.size(); }
  word_view text() const { return text_; }
  std::size_t longest_border() const { return fail_.back(); }

 private:
  word text_;
  std::vector<std::size_t> fail_;
  std::vector<std::size_t> last_end_;
};

// ---------------------------------------------------------------------------
// Return words
// ---------------------------------------------------------------------------

/// Return words of v inside `host`: the factors running from one occurrence
/// of v up to (excluding) the next. Listed in order of first appearance,
/// without duplicates. Appending v to each gives the complete return words.
inline std::vector<word> return_words(word_view host, word_view v) {
  if (v.empty()) {
    throw std::invalid_argument("return_words: empty factor");
  }
  auto const hits = detail::find_all(host, v);
  if (hits.size() < 2) {
    throw std::invalid_argument("return_words: " + to_string(v) +
                                " occurs fewer than twice");
  }
  std::vector<word> out;
  for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
    word r(host.begin() + static_cast<std::ptrdiff_t>(hits[i]),
           host.begin() + static_cast<std::ptrdiff_t>(hits[i + 1]));
    if (std::find(out.begin(), out.end(), r) == out.end()) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace closedz
