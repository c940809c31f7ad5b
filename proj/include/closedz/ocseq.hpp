#pragma once

// oc-sequences (bit k is 1 iff the length-k prefix is closed), their runs of
// ones, and the classification of m-bonacci prefixes along the ladder
// u_n t_n h_{n-2}^R = u_{n+1}.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "closedz/mbonacci.hpp"
#include "closedz/morphism.hpp"
#include "closedz/word.hpp"

namespace closedz {

struct oc_sequence {
  /// bits[k - 1] describes the prefix of length k.
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  bool closed_at(std::size_t length) const { return bits.at(length - 1) != 0; }

  std::string to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) {
      out.push_back(b ? '1' : '0');
    }
    return out;
  }

  friend bool operator==(oc_sequence const&, oc_sequence const&) = default;
};

/// oc-sequence of the first n prefixes of w (n <= |w|).
inline oc_sequence oc(word_view w, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("oc: length must be positive");
  }
  if (n > w.size()) {
    throw std::out_of_range("oc: length " + std::to_string(n) +
                            " exceeds word length " + std::to_string(w.size()));
  }
  closed_prefix_scanner scan;
  oc_sequence out;
  out.bits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.bits.push_back(scan.push(w[i]) ? 1 : 0);
  }
  return out;
}

inline oc_sequence oc(fixed_point_stream& s, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("oc: length must be positive");
  }
  return oc(s.prefix(n), n);
}

/// Lengths of the maximal blocks of ones, in order. A block touching the end
/// of the sequence is included as is.
inline std::vector<std::size_t> runs_of_ones(oc_sequence const& seq) {
  std::vector<std::size_t> out;
  std::size_t run = 0;
  for (auto b : seq.bits) {
    if (b) {
      ++run;
    } else if (run > 0) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run > 0) {
    out.push_back(run);
  }
  return out;
}

/// True when the sequence ends inside a block of ones, i.e. the last entry of
/// runs_of_ones() may be cut short.
inline bool last_run_truncated(oc_sequence const& seq) {
  return !seq.bits.empty() && seq.bits.back() != 0;
}

// ---------------------------------------------------------------------------
// Prefix classification
// ---------------------------------------------------------------------------

enum class prefix_kind { single_letter, type1, type2 };

inline std::string to_string(prefix_kind k) {
  switch (k) {
    case prefix_kind::single_letter: return "single-letter";
    case prefix_kind::type1: return "type-1";
    case prefix_kind::type2: return "type-2";
  }
  return "?";
}

struct prefix_class {
  int n_of_w = 1;  ///< |u_n| < length <= |u_{n+1}|
  prefix_kind kind = prefix_kind::single_letter;

  /// Closedness predicted by the classification.
  bool closed() const { return kind != prefix_kind::type2; }

  friend bool operator==(prefix_class const&, prefix_class const&) = default;
};

/// Classifies the m-bonacci prefix of the given length: type-1 when it ends
/// past u_n t_n, type-2 when it ends inside t_n.
inline prefix_class classify_prefix(int m, std::uint64_t length) {
  morphism::check_size(m);
  if (length == 0) {
    throw std::invalid_argument("classify_prefix: length must be positive");
  }
  if (length == 1) {
    return prefix_class{1, prefix_kind::single_letter};
  }
  // |u_2| = 1 and |u_{n+1}| = |u_n| + |h_{n-1}|.
  int n = 2;
  std::uint64_t u_len = family_length(m, family::palindromic_prefix, 2);
  while (true) {
    std::uint64_t const next = u_len + family_length(m, family::bonacci, n - 1);
    if (length <= next) {
      break;
    }
    u_len = next;
    ++n;
  }
  std::uint64_t const t_len = family_length(m, family::ladder_gap, n);
  return prefix_class{n, length > u_len + t_len ? prefix_kind::type1 : prefix_kind::type2};
}

// ---------------------------------------------------------------------------
// Tribonacci closed form
// ---------------------------------------------------------------------------

/// First n bits of 1 0 prod_{i >= 0} 1^{T_i} 0^{T_{i-1} + T_i}, with the
/// Tribonacci numbers T_{-1} = 1, T_0 = 1, T_1 = 2, T_i = T_{i-1} + T_{i-2} +
/// T_{i-3}.
inline oc_sequence tribonacci_oc_closed_form(std::size_t n) {
  oc_sequence out;
  out.bits.reserve(n);
  auto emit = [&](std::uint8_t bit, std::uint64_t count) {
    for (std::uint64_t k = 0; k < count && out.bits.size() < n; ++k) {
      out.bits.push_back(bit);
    }
  };
  emit(1, 1);
  emit(0, 1);
  std::uint64_t before = 1;  // T_{i-1}
  std::uint64_t cur = 1;     // T_i
  std::uint64_t prev2 = 0;   // T_{i-2}; only used from i = 1 on
  bool first = true;
  while (out.bits.size() < n) {
    emit(1, cur);
    emit(0, before + cur);
    std::uint64_t const next = first ? 2 : cur + before + prev2;
    first = false;
    prev2 = before;
    before = cur;
    cur = next;
  }
  return out;
}

}  // namespace closedz
