#pragma once

// Finite, empirical checks of the identities and non-occurrence statements
// about m-bonacci words, organized in named suites. Each check scans an
// (m, n) grid in increasing order and stops at the first counterexample, so
// a reported counterexample is the smallest one in the scanned range.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "closedz/factorize.hpp"
#include "closedz/mbonacci.hpp"
#include "closedz/morphism.hpp"
#include "closedz/ocseq.hpp"
#include "closedz/word.hpp"

namespace closedz {

enum class check_status { pass, fail, report_only, skipped };

inline std::string to_string(check_status s) {
  switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::report_only: return "report-only";
    case check_status::skipped: return "skipped";
  }
  return "?";
}

struct counterexample {
  int m = 0;
  int n = 0;
  std::string detail;

  friend bool operator==(counterexample const&, counterexample const&) = default;
};

struct property_check {
  std::string id;
  std::string suite;
  int m_min = 0;
  int m_max = 0;
  int n_min = 0;
  int n_max = 0;
  check_status status = check_status::pass;
  std::optional<counterexample> failure;
  /// Skip reason, report text, or a short summary.
  std::string detail;

  friend bool operator==(property_check const&, property_check const&) = default;
};

struct suite_config {
  int m_min = 2;
  int m_max = 5;
  int max_n_search = 14;    ///< factor-search and greedy checks
  int max_n_identity = 20;  ///< word identities
  std::uint64_t length_cap = 1'000'000;
  std::size_t oc_length = 10'000;
  std::size_t oc_runs_length = 100'000;
  std::size_t pz_factor_count = 20;
  int z_length_max_n = 25;
  unsigned threads = 0;  ///< 0: hardware concurrency
  std::uint32_t seed = 20240229;
};

inline std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names{
      "fibonacci", "families", "recursions", "nonoccurrence", "theorem", "ocseq", "pz"};
  return names;
}

// ---------------------------------------------------------------------------
// Per-check scanning state
// ---------------------------------------------------------------------------

class probe {
 public:
  explicit probe(suite_config const& cfg) : cfg_(cfg) {}

  suite_config const& config() const { return cfg_; }

  /// Records a counterexample; the first one wins.
  void fail(int m, int n, std::string detail) {
    if (!failure_) {
      failure_ = counterexample{m, n, std::move(detail)};
    }
  }

  bool failed() const { return failure_.has_value(); }

  /// False (and a skip note) when a word of this length would exceed the cap.
  bool fits(int m, int n, std::uint64_t length) {
    if (length <= cfg_.length_cap) {
      return true;
    }
    if (skip_.empty()) {
      skip_ = "length cap " + std::to_string(cfg_.length_cap) + " reached at m=" +
              std::to_string(m) + ", n=" + std::to_string(n) + " (needs " +
              std::to_string(length) + " letters)";
    }
    return false;
  }

  void report(std::string text) {
    report_only_ = true;
    report_ += text;
  }

  void note(std::string text) { note_ += text; }

  void finish(property_check& out) {
    if (failure_) {
      out.status = check_status::fail;
      out.failure = failure_;
      out.detail = note_;
    } else if (report_only_) {
      out.status = check_status::report_only;
      out.detail = report_;
      if (!skip_.empty()) {
        out.detail += (out.detail.empty() ? "" : "; ") + skip_;
      }
    } else if (!skip_.empty()) {
      out.status = check_status::skipped;
      out.detail = skip_;
    } else {
      out.status = check_status::pass;
      out.detail = note_;
    }
  }

 private:
  suite_config const& cfg_;
  std::optional<counterexample> failure_;
  std::string skip_;
  std::string report_;
  std::string note_;
  bool report_only_ = false;
};

struct check_definition {
  std::string id;
  std::string suite;
  /// Grid bounds as reported; the body decides what it actually scans.
  std::function<void(suite_config const&, property_check&)> bounds;
  std::function<void(probe&)> body;
};

namespace detail {

inline word rev(word_view w) { return reverse(w); }

// Residue letter as a one-letter word.
inline word letter_word(int m, int n) { return word{residue(m, n)}; }

// (n-3)^{-1} h_{n-3}^R, the common head of z_n and of its border.
inline word reversed_head(int m, int n) {
  return strip_prefix(letter_word(m, n - 3), reverse(bonacci_word(m, n - 3)));
}

inline std::string describe(word_view a, word_view b) {
  auto clip = [](word_view w) {
    std::string s = to_string(w);
    return s.size() > 60 ? s.substr(0, 60) + "...(" + std::to_string(w.size()) + ")" : s;
  };
  return clip(a) + " != " + clip(b);
}

// Singular words w_{-1} ... w_k.
inline std::vector<word> singular_range(int first, int last) {
  std::vector<word> out;
  for (int i = first; i <= last; ++i) {
    out.push_back(singular_word(i));
  }
  return out;
}

inline std::vector<std::uint64_t> closed_factor_lengths_from_bonacci(int m, int n_max) {
  // Lengths of z_0..z_{n_max} read off the closed form, term by term.
  std::vector<std::uint64_t> out;
  auto h = [&](int k) { return family_length(m, family::bonacci, k); };
  for (int n = 0; n <= n_max; ++n) {
    if (n <= 1) {
      out.push_back(1);
    } else if (n == 2) {
      out.push_back(m == 2 ? 2 : 3);
    } else if (n <= m - 1) {
      std::uint64_t s = h(n - 3) - 1 + h(n - 2) + 1 + 1;
      for (int i = 0; i <= n - 3; ++i) {
        s += h(i);
      }
      out.push_back(s);
    } else {
      std::uint64_t s = h(n - 3) - 1 + h(n - 2) + 1;
      for (int i = n - m; i <= n - 3; ++i) {
        s += h(i);
      }
      out.push_back(s);
    }
  }
  return out;
}

// Number of ways to split w into words of {0, 01, ..., 0(m-1)}.
inline std::size_t code_parse_count(int m, word_view w) {
  std::vector<std::size_t> ways(w.size() + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (ways[i] == 0 || w[i] != 0) {
      continue;
    }
    ways[i + 1] += ways[i];
    if (i + 1 < w.size() && w[i + 1] != 0 && w[i + 1] < m) {
      ways[i + 2] += ways[i];
    }
  }
  return ways[w.size()];
}

// Runs of ones in the oc-sequence, dropping a final block cut by the end.
inline std::vector<std::size_t> complete_runs(int m, std::size_t length) {
  auto stream = bonacci_stream(m);
  auto seq = oc(stream, length);
  auto runs = runs_of_ones(seq);
  if (last_run_truncated(seq) && !runs.empty()) {
    runs.pop_back();
  }
  return runs;
}

// Which reading of the run-length statement holds: runs = (|h_0|, |h_1|, ...)
// (literal) or runs = (1, |h_0|, |h_1|, ...) (shifted).
struct run_readings {
  bool literal = true;
  bool shifted = true;
  std::size_t compared = 0;
};

inline run_readings compare_runs(int m, std::vector<std::size_t> const& runs) {
  run_readings r;
  r.compared = runs.size();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i] != family_length(m, family::bonacci, static_cast<int>(i))) {
      r.literal = false;
    }
    std::uint64_t const expect_shifted =
        i == 0 ? 1 : family_length(m, family::bonacci, static_cast<int>(i) - 1);
    if (runs[i] != expect_shifted) {
      r.shifted = false;
    }
  }
  return r;
}

// Index of the first mismatch of two factor lists, or nullopt.
inline std::optional<std::size_t> first_mismatch(std::vector<word> const& got,
                                                 std::vector<word> const& want) {
  std::size_t const n = std::min(got.size(), want.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (got[i] != want[i]) {
      return i;
    }
  }
  if (got.size() != want.size()) {
    return n;
  }
  return std::nullopt;
}

inline word random_word(std::mt19937& rng, int m, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, m - 1);
  word w(len);
  for (auto& a : w) {
    a = static_cast<letter>(pick(rng));
  }
  return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Conjecture report
// ---------------------------------------------------------------------------

struct conjecture_row {
  int index = 0;
  std::uint64_t factor_length = 0;
  std::uint64_t predicted = 0;  ///< |h_{i-m+1}|
  bool equal = false;
};

struct conjecture_report {
  int m = 0;
  cc_mode mode = cc_mode::longest_closed;
  std::size_t prefix_length = 0;
  std::vector<std::uint64_t> lengths;  ///< |c_0| ... |c_{count-1}|
  std::vector<conjecture_row> rows;    ///< i >= 2m - 1
  bool stable = false;  ///< lengths unchanged when the prefix was doubled
};

inline std::string to_string(cc_mode mode) {
  return mode == cc_mode::longest_closed ? "cc-longest-closed" : "cc-alternative";
}

inline cc_mode parse_cc_mode(std::string const& s) {
  if (s == "cc-longest-closed" || s == "longest-closed") return cc_mode::longest_closed;
  if (s == "cc-alternative" || s == "alternative") return cc_mode::alternative;
  throw std::invalid_argument("unknown cc mode '" + s + "'");
}

/// Closed c-factorization lengths of a growing m-bonacci prefix, taken once
/// the first factor_count lengths no longer change when the prefix doubles.
inline conjecture_report check_conjecture(int m, std::size_t factor_count,
                                          cc_mode mode = cc_mode::longest_closed,
                                          std::size_t length_cap = 1u << 22) {
  morphism::check_size(m);
  if (m < 3) {
    throw std::invalid_argument("check_conjecture: needs m >= 3");
  }
  if (factor_count < static_cast<std::size_t>(2 * m - 1)) {
    throw std::invalid_argument("check_conjecture: needs at least 2m-1 factors");
  }
  conjecture_report rep;
  rep.m = m;
  rep.mode = mode;
  auto stream = bonacci_stream(m);
  auto lengths_at = [&](std::size_t len) {
    auto f = closed_c_factorize(stream.prefix(len), mode);
    std::vector<std::uint64_t> out;
    for (auto const& x : f.factors) {
      out.push_back(x.size());
    }
    return out;
  };
  std::size_t len = 64;
  auto prev = lengths_at(len);
  while (true) {
    std::size_t const next_len = len * 2;
    if (next_len > length_cap) {
      break;
    }
    auto cur = lengths_at(next_len);
    // The last factor may be cut by the end of the prefix; require one more.
    bool const enough = prev.size() > factor_count && cur.size() > factor_count;
    bool const same = enough && std::equal(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(factor_count),
                                           cur.begin());
    len = next_len;
    prev = std::move(cur);
    if (same) {
      rep.stable = true;
      break;
    }
  }
  rep.prefix_length = len;
  std::size_t const usable = std::min(factor_count, prev.size());
  rep.lengths.assign(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(usable));
  for (std::size_t i = static_cast<std::size_t>(2 * m - 1); i < usable; ++i) {
    conjecture_row row;
    row.index = static_cast<int>(i);
    row.factor_length = rep.lengths[i];
    row.predicted = family_length(m, family::bonacci, row.index - m + 1);
    row.equal = row.factor_length == row.predicted;
    rep.rows.push_back(row);
  }
  return rep;
}

/// The report as a report-only check record; rows go into the detail text.
inline property_check as_check(conjecture_report const& rep) {
  property_check out;
  out.id = "conjecture." + to_string(rep.mode);
  out.suite = "conjecture";
  out.m_min = rep.m;
  out.m_max = rep.m;
  out.n_min = 2 * rep.m - 1;
  out.n_max = static_cast<int>(rep.lengths.size()) - 1;
  out.status = check_status::report_only;
  std::size_t equal = 0;
  for (auto const& row : rep.rows) {
    equal += row.equal ? 1 : 0;
  }
  std::ostringstream os;
  os << equal << "/" << rep.rows.size() << " rows with |c_i| = |h_{i-m+1}|, prefix length "
     << rep.prefix_length << (rep.stable ? "" : " (not stable)");
  out.detail = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// Check registry
// ---------------------------------------------------------------------------

namespace detail {

inline void grid(property_check& c, suite_config const& cfg, int n_min, int n_max) {
  c.m_min = cfg.m_min;
  c.m_max = cfg.m_max;
  c.n_min = n_min;
  c.n_max = n_max;
}

inline void fib_grid(property_check& c, int n_min, int n_max) {
  c.m_min = 2;
  c.m_max = 2;
  c.n_min = n_min;
  c.n_max = n_max;
}

template <class F>
inline void each_m(probe& p, F&& f) {
  for (int m = p.config().m_min; m <= p.config().m_max && !p.failed(); ++m) {
    f(m);
  }
}

inline std::vector<check_definition> fibonacci_checks() {
  std::vector<check_definition> out;
  auto const S = "fibonacci";

  out.push_back({"fibonacci.singular_not_in_next", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, -1, cfg.max_n_search); },
                 [](probe& p) {
                   for (int n = -1; n <= p.config().max_n_search; ++n) {
                     if (!p.fits(2, n + 1, family_length(2, family::singular, n + 1))) break;
                     if (is_factor(singular_word(n), singular_word(n + 1))) {
                       return p.fail(2, n, "w_n occurs in w_{n+1}");
                     }
                   }
                 }});

  out.push_back({"fibonacci.singular_recursion", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, 1, cfg.max_n_identity); },
                 [](probe& p) {
                   for (int n = 1; n <= p.config().max_n_identity; ++n) {
                     if (!p.fits(2, n, family_length(2, family::singular, n))) break;
                     auto const rhs = concat({singular_word(n - 2), singular_word(n - 3), singular_word(n - 2)});
                     if (singular_word(n) != rhs) {
                       return p.fail(2, n, describe(singular_word(n), rhs));
                     }
                   }
                 }});

  out.push_back({"fibonacci.singular_palindrome", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, -2, cfg.max_n_identity); },
                 [](probe& p) {
                   for (int n = -2; n <= p.config().max_n_identity; ++n) {
                     if (!p.fits(2, n, family_length(2, family::singular, n))) break;
                     if (!is_palindrome(singular_word(n))) {
                       return p.fail(2, n, "not a palindrome");
                     }
                   }
                 }});

  out.push_back({"fibonacci.singular_not_in_prefix", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, -1, cfg.max_n_search); },
                 [](probe& p) {
                   word prefix;  // w_{-1} ... w_{n-1}
                   for (int n = -1; n <= p.config().max_n_search; ++n) {
                     if (!p.fits(2, n, prefix.size() + family_length(2, family::singular, n))) break;
                     if (!prefix.empty() && is_factor(singular_word(n), prefix)) {
                       return p.fail(2, n, "w_n occurs in w_{-1}...w_{n-1}");
                     }
                     append(prefix, singular_word(n));
                   }
                 }});

  out.push_back({"fibonacci.window_not_singular", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, 1, cfg.max_n_search); },
                 [](probe& p) {
                   int const n_max = p.config().max_n_search;
                   for (int n = 1; n <= n_max; ++n) {
                     if (!p.fits(2, n + 1, 2 * family_length(2, family::singular, n + 1))) break;
                     std::size_t const fn = singular_word(n).size();
                     std::size_t const fn1 = singular_word(n + 1).size();
                     for (int order = 0; order < 2; ++order) {
                       word const host = order == 0 ? concat({singular_word(n), singular_word(n + 1)})
                                                    : concat({singular_word(n + 1), singular_word(n)});
                       // Every singular word fitting strictly inside the window.
                       for (int k = -1; family_length(2, family::singular, k) + 2 <= host.size(); ++k) {
                         auto const& s = singular_word(k);
                         for (std::size_t start : detail::find_all(host, s)) {
                           std::size_t const tail = host.size() - start - s.size();
                           if (start > 0 && start < fn && tail > 0 && tail < fn1) {
                             return p.fail(2, n, std::string(order == 0 ? "w_n w_{n+1}" : "w_{n+1} w_n") +
                                                     " has w_" + std::to_string(k) + " at offset " +
                                                     std::to_string(start));
                           }
                         }
                       }
                     }
                   }
                 }});

  out.push_back({"fibonacci.singular_closed", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, -1, cfg.max_n_identity); },
                 [](probe& p) {
                   for (int n = -1; n <= p.config().max_n_identity; ++n) {
                     if (!p.fits(2, n, family_length(2, family::singular, n))) break;
                     if (!is_closed(singular_word(n))) {
                       return p.fail(2, n, "open");
                     }
                   }
                 }});

  auto greedy_is_singular = [](scheme kind) {
    return [kind](probe& p) {
      int const n_max = p.config().max_n_search;
      std::uint64_t total = 0;
      for (int n = -1; n <= n_max; ++n) {
        total += family_length(2, family::singular, n);
      }
      if (!p.fits(2, n_max, total)) return;
      auto stream = bonacci_stream(2);
      std::size_t const count = static_cast<std::size_t>(n_max + 2);
      auto f = kind == scheme::cz ? closed_z_factorize(stream, count) : z_factorize(stream, count);
      auto const want = singular_range(-1, n_max);
      if (auto i = first_mismatch(f.factors, want)) {
        int const n = static_cast<int>(*i) - 1;
        return p.fail(2, n, "factor " + std::to_string(*i) + ": " +
                                describe(*i < f.factors.size() ? f.factors[*i] : word{}, want[*i]));
      }
    };
  };

  out.push_back({"fibonacci.closed_z_is_singular", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, -1, cfg.max_n_search); },
                 greedy_is_singular(scheme::cz)});

  out.push_back({"fibonacci.z_is_singular", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, -1, cfg.max_n_search); },
                 greedy_is_singular(scheme::z)});

  out.push_back({"fibonacci.singular_is_closed_factor", S,
                 [](auto const& cfg, auto& c) { fib_grid(c, 0, cfg.max_n_identity); },
                 [](probe& p) {
                   for (int n = 0; n <= p.config().max_n_identity; ++n) {
                     if (!p.fits(2, n, family_length(2, family::closed_factor, n))) break;
                     if (singular_word(n - 1) != closed_z_factor(2, n)) {
                       return p.fail(2, n, describe(singular_word(n - 1), closed_z_factor(2, n)));
                     }
                   }
                 }});
  return out;
}

inline std::vector<check_definition> family_checks() {
  std::vector<check_definition> out;
  auto const S = "families";

  out.push_back({"families.reversed_start", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 1; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::bonacci, n))) break;
                       auto const& h = bonacci_word(m, n);
                       word const start{h[h.size() - 1], h[h.size() - 2]};
                       word const want = n % m != 0 ? word{residue(m, n), 0} : word{0, 1};
                       if (start != want) {
                         return p.fail(m, n, "h_n^R starts with " + to_string(start));
                       }
                     }
                   });
                 }});

  out.push_back({"families.directive_image", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, std::min(cfg.max_n_identity, 12)); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 0; n <= std::min(p.config().max_n_identity, 12); ++n) {
                       if (!p.fits(m, n, family_length(m, family::bonacci, n))) break;
                       auto const img = directive_morphism(m, n).image(residue(m, n));
                       if (img != bonacci_word(m, n)) {
                         return p.fail(m, n, describe(img, bonacci_word(m, n)));
                       }
                     }
                   });
                 }});

  out.push_back({"families.palindromic_closure_step", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 1; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n + 1, family_length(m, family::palindromic_prefix, n + 1))) break;
                       word w = palindromic_prefix(m, n);
                       w.push_back(residue(m, n - 1));
                       auto const closure = palindromic_closure(w);
                       if (closure != palindromic_prefix(m, n + 1)) {
                         return p.fail(m, n, describe(closure, palindromic_prefix(m, n + 1)));
                       }
                     }
                   });
                 }});

  out.push_back({"families.palindromic_prefix_recursion", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.max_n_identity); },
                 [](probe& p) {
                   // u_n read directly off the fixed point: the palindromic
                   // prefixes in increasing length, u_1 = eps.
                   each_m(p, [&](int m) {
                     int n_max = p.config().max_n_identity;
                     while (n_max >= 1 &&
                            !p.fits(m, n_max + 1, family_length(m, family::palindromic_prefix, n_max + 1))) {
                       --n_max;
                     }
                     if (n_max < 1) return;
                     auto const len = family_length(m, family::palindromic_prefix, n_max + 1);
                     auto const host = fixed_point_prefix(bonacci_morphism(m), 0, len);
                     std::vector<std::size_t> pal{0};
                     for (auto l : palindromic_prefix_lengths(host)) {
                       pal.push_back(l);
                     }
                     for (int n = 1; n <= n_max; ++n) {
                       if (pal.size() < static_cast<std::size_t>(n + 1)) {
                         return p.fail(m, n, "fixed point has too few palindromic prefixes");
                       }
                       word const u_n(host.begin(), host.begin() + static_cast<std::ptrdiff_t>(pal[n - 1]));
                       word const u_next(host.begin(), host.begin() + static_cast<std::ptrdiff_t>(pal[n]));
                       auto const rhs = concat({bonacci_word(m, n - 1), u_n});
                       if (u_next != rhs || u_next != palindromic_prefix(m, n + 1)) {
                         return p.fail(m, n, describe(u_next, rhs));
                       }
                     }
                   });
                 }});

  out.push_back({"families.palindromic_prefix_reversed_product", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 2, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     word prod;
                     for (int n = 2; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::palindromic_prefix, n))) break;
                       append(prod, rev(bonacci_word(m, n - 2)));
                       if (prod != palindromic_prefix(m, n)) {
                         return p.fail(m, n, describe(prod, palindromic_prefix(m, n)));
                       }
                     }
                   });
                 }});

  out.push_back({"families.bonacci_from_palindromic_prefixes", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.max_n_identity); },
                 [](probe& p) {
                   // h_n = u_{n+1} n for n <= m-1, h_n = u_{n+1} u_{n-m+1}^{-1} after.
                   each_m(p, [&](int m) {
                     for (int n = 1; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n + 1, family_length(m, family::palindromic_prefix, n + 1))) break;
                       auto const& u = palindromic_prefix(m, n + 1);
                       word rhs;
                       if (n <= m - 1) {
                         rhs = concat({u, word{static_cast<letter>(n)}});
                       } else {
                         auto const& tail = palindromic_prefix(m, n - m + 1);
                         if (!is_suffix(tail, u)) {
                           return p.fail(m, n, "u_{n-m+1} is not a suffix of u_{n+1}");
                         }
                         rhs = strip_suffix(u, tail);
                       }
                       if (rhs != bonacci_word(m, n)) {
                         return p.fail(m, n, describe(rhs, bonacci_word(m, n)));
                       }
                     }
                   });
                 }});

  out.push_back({"families.position_structure", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, 64); },
                 [](probe& p) {
                   // y = psi_k(x) with no k in x except possibly at the end.
                   each_m(p, [&](int m) {
                     std::mt19937 rng(p.config().seed + static_cast<std::uint32_t>(m));
                     for (int n = 1; n <= 64; ++n) {
                       for (int trial = 0; trial < 8; ++trial) {
                         letter const k = static_cast<letter>(rng() % m);
                         word x(static_cast<std::size_t>(n));
                         for (std::size_t i = 0; i + 1 < x.size(); ++i) {
                           letter a = static_cast<letter>(rng() % (m - 1));
                           x[i] = a >= k ? static_cast<letter>(a + 1) : a;
                         }
                         x.back() = static_cast<letter>(rng() % m);
                         auto const y = elementary_morphism(m, k)(x);
                         std::size_t const want_len = x.back() == k ? 2 * x.size() - 1 : 2 * x.size();
                         bool ok = y.size() == want_len;
                         for (std::size_t pos = 1; ok && pos <= y.size(); ++pos) {
                           if (pos % 2 == 1) {
                             ok = y[pos - 1] == k;
                           } else {
                             ok = y[pos - 1] == x[pos / 2 - 1];
                           }
                         }
                         if (!ok) {
                           return p.fail(m, n, "x=" + to_string(x) + " k=" + std::to_string(k));
                         }
                       }
                     }
                   });
                 }});

  out.push_back({"families.composition_identity", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, cfg.m_min, cfg.m_max + 6); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = m; n <= m + 6; ++n) {
                       auto const lhs = elementary_chain(m, n - m + 1, n).image(residue(m, n - m + 1));
                       word rhs;
                       for (int j = 2; j <= m; ++j) {
                         append(rhs, elementary_chain(m, n - m + 1, n - j + 1).image(residue(m, n - j + 1)));
                       }
                       if (lhs != rhs) {
                         return p.fail(m, n, describe(lhs, rhs));
                       }
                       std::size_t const len = (std::size_t{1} << (m - 1)) - 1;
                       if (lhs.size() != len) {
                         return p.fail(m, n, "length " + std::to_string(lhs.size()));
                       }
                       // letter n-j sits exactly at positions (2t+1) 2^{m-j-1}.
                       for (std::size_t pos = 1; pos <= len; ++pos) {
                         int j = m - 1;
                         std::size_t q = pos;
                         while (q % 2 == 0) {
                           q /= 2;
                           --j;
                         }
                         if (lhs[pos - 1] != residue(m, n - j)) {
                           return p.fail(m, n, "letter at position " + std::to_string(pos));
                         }
                       }
                     }
                   });
                 }});

  out.push_back({"families.directive_shifted_image", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, cfg.m_min, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = m; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::bonacci, n))) break;
                       auto const img = directive_morphism(m, n).image(residue(m, n - m + 1));
                       word rhs;
                       for (int i = n - 1; i >= n - m + 1; --i) {
                         append(rhs, bonacci_word(m, i));
                       }
                       if (img != rhs) {
                         return p.fail(m, n, describe(img, rhs));
                       }
                     }
                   });
                 }});

  out.push_back({"families.directive_own_letter", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.m_max - 1); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 1; n <= m - 1; ++n) {
                       auto const img = directive_morphism(m, n - 1).image(static_cast<letter>(n));
                       auto const rhs = concat({palindromic_prefix(m, n), word{static_cast<letter>(n)}});
                       if (img != rhs) {
                         return p.fail(m, n, describe(img, rhs));
                       }
                     }
                   });
                 }});

  out.push_back({"families.reversed_image", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     auto const phi = bonacci_morphism(m);
                     for (int n = 1; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::bonacci, n))) break;
                       auto const rhs = concat({strip_prefix(word{0}, phi(rev(bonacci_word(m, n - 1)))), word{0}});
                       if (rev(bonacci_word(m, n)) != rhs) {
                         return p.fail(m, n, describe(rev(bonacci_word(m, n)), rhs));
                       }
                     }
                   });
                 }});

  out.push_back({"families.palindromic_prefix_image", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 2, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     auto const phi = bonacci_morphism(m);
                     for (int n = 2; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::palindromic_prefix, n))) break;
                       auto const rhs = concat({phi(palindromic_prefix(m, n - 1)), word{0}});
                       if (palindromic_prefix(m, n) != rhs) {
                         return p.fail(m, n, describe(palindromic_prefix(m, n), rhs));
                       }
                     }
                   });
                 }});

  out.push_back({"families.residue_image", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     auto const phi = bonacci_morphism(m);
                     for (int n = 0; n <= p.config().max_n_identity; ++n) {
                       auto const rhs = concat({word{0}, mod_marks(m, n + 1).residue_or_empty});
                       if (phi.image(residue(m, n)) != rhs) {
                         return p.fail(m, n, describe(phi.image(residue(m, n)), rhs));
                       }
                     }
                   });
                 }});

  out.push_back({"families.closed_factor_length_recurrence", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, cfg.m_min + 1, cfg.z_length_max_n); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     int const n_max = p.config().z_length_max_n;
                     auto const closed_form = closed_factor_lengths_from_bonacci(m, n_max);
                     for (int n = 0; n <= n_max; ++n) {
                       auto const rec = family_length(m, family::closed_factor, n);
                       if (rec != closed_form[static_cast<std::size_t>(n)]) {
                         return p.fail(m, n, "recurrence gives " + std::to_string(rec) +
                                                 ", closed form " +
                                                 std::to_string(closed_form[static_cast<std::size_t>(n)]));
                       }
                       if (n >= m + 1) {
                         std::uint64_t s = 0;
                         for (int k = 1; k <= m; ++k) {
                           s += closed_form[static_cast<std::size_t>(n - k)];
                         }
                         if (s != closed_form[static_cast<std::size_t>(n)]) {
                           return p.fail(m, n, "sum of previous m lengths is " + std::to_string(s));
                         }
                       }
                     }
                     // Same recurrence on materialized words.
                     for (int n = m + 1; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::closed_factor, n))) break;
                       std::uint64_t s = 0;
                       for (int k = 1; k <= m; ++k) {
                         s += closed_z_factor(m, n - k).size();
                       }
                       if (s != closed_z_factor(m, n).size()) {
                         return p.fail(m, n, "word lengths break the recurrence");
                       }
                     }
                   });
                 }});

  out.push_back({"families.closed_factor_end_letters", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 2, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 2; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::closed_factor, n))) break;
                       auto const& z = closed_z_factor(m, n);
                       letter const first = (n - 3) % m == 0 ? 1 : 0;
                       if (z.back() != residue(m, n - 2) || z.front() != first) {
                         return p.fail(m, n, "z_n = " + to_string(z).substr(0, 40));
                       }
                     }
                   });
                 }});

  out.push_back({"families.code_unique_decoding", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, 10); },
                 [](probe& p) {
                   // Every word up to a length with at most ~6e4 candidates
                   // (length 10 for m = 3) has at most one parse.
                   each_m(p, [&](int m) {
                     std::size_t len_max = 0;
                     for (std::uint64_t count = m; count <= 60'000; count *= m) {
                       ++len_max;
                     }
                     for (std::size_t len = 1; len <= len_max; ++len) {
                       word w(len, 0);
                       while (true) {
                         if (code_parse_count(m, w) > 1) {
                           return p.fail(m, static_cast<int>(len), to_string(w) + " has two parses");
                         }
                         std::size_t i = 0;
                         while (i < len && w[i] == m - 1) {
                           w[i++] = 0;
                         }
                         if (i == len) break;
                         ++w[i];
                       }
                     }
                   });
                 }});

  out.push_back({"families.decode_inverts_image", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, 200); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     std::mt19937 rng(p.config().seed ^ (0x9e37u * static_cast<std::uint32_t>(m)));
                     auto const phi = bonacci_morphism(m);
                     for (int trial = 0; trial < 200; ++trial) {
                       std::size_t const len = rng() % 201;
                       auto const w = random_word(rng, m, len);
                       if (decode_bonacci(m, phi(w)) != w) {
                         return p.fail(m, static_cast<int>(len), to_string(w));
                       }
                     }
                   });
                 }});

  out.push_back({"families.prefixes_of_fixed_point", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     int n_max = p.config().max_n_identity;
                     while (n_max > 0 &&
                            !p.fits(m, n_max, family_length(m, family::palindromic_prefix, n_max + 1))) {
                       --n_max;
                     }
                     auto const host = fixed_point_prefix(
                         bonacci_morphism(m), 0, family_length(m, family::palindromic_prefix, n_max + 1));
                     for (int n = 0; n <= n_max; ++n) {
                       auto const& h = bonacci_word(m, n);
                       if (!is_prefix(h, host) || fixed_point_prefix(bonacci_morphism(m), 0, h.size()) != h) {
                         return p.fail(m, n, "h_n is not a prefix of the fixed point");
                       }
                       if (n >= 1 && !is_prefix(palindromic_prefix(m, n), host)) {
                         return p.fail(m, n, "u_n is not a prefix of the fixed point");
                       }
                     }
                   });
                 }});
  return out;
}

inline std::vector<check_definition> recursion_checks() {
  std::vector<check_definition> out;
  auto const S = "recursions";

  out.push_back({"recursions.closed_factor_by_morphism", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 0; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::closed_factor, n))) break;
                       auto const rec = closed_z_factor_by_recursion(m, n);
                       if (rec != closed_z_factor(m, n)) {
                         return p.fail(m, n, describe(rec, closed_z_factor(m, n)));
                       }
                     }
                   });
                 }});

  out.push_back({"recursions.closed_prefix_by_morphism", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 0; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::closed_prefix, n))) break;
                       auto const rec = closed_z_prefix_by_recursion(m, n);
                       if (rec != closed_z_prefix(m, n)) {
                         return p.fail(m, n, describe(rec, closed_z_prefix(m, n)));
                       }
                     }
                   });
                 }});

  out.push_back({"recursions.closed_prefix_in_fixed_point", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     int n_max = p.config().max_n_identity;
                     while (n_max > 0 && !p.fits(m, n_max, family_length(m, family::closed_prefix, n_max))) {
                       --n_max;
                     }
                     auto const host = fixed_point_prefix(bonacci_morphism(m), 0,
                                                          family_length(m, family::closed_prefix, n_max));
                     for (int n = 0; n <= n_max; ++n) {
                       auto const& pn = closed_z_prefix(m, n);
                       if (!is_prefix(pn, host)) {
                         return p.fail(m, n, "P_n is not a prefix of the fixed point");
                       }
                       if (n >= 1 && pn.size() <= closed_z_prefix(m, n - 1).size()) {
                         return p.fail(m, n, "|P_n| <= |P_{n-1}|");
                       }
                     }
                   });
                 }});

  out.push_back({"recursions.image_of_reversed_products", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, std::min(cfg.max_n_identity, 14)); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     auto const phi = bonacci_morphism(m);
                     int const i_max = std::min(p.config().max_n_identity, 14) - 1;
                     if (i_max < 1) return;
                     std::mt19937 rng(p.config().seed + 77u * static_cast<std::uint32_t>(m));
                     for (int trial = 0; trial < 100; ++trial) {
                       std::size_t const k = 1 + rng() % 5;
                       word lhs_arg;
                       word rhs{0};
                       for (std::size_t j = 0; j < k; ++j) {
                         int const i = 1 + static_cast<int>(rng() % static_cast<unsigned>(i_max));
                         append(lhs_arg, rev(bonacci_word(m, i)));
                         append(rhs, rev(bonacci_word(m, i + 1)));
                       }
                       rhs = strip_suffix(rhs, word{0});
                       if (phi(lhs_arg) != rhs) {
                         return p.fail(m, trial, describe(phi(lhs_arg), rhs));
                       }
                     }
                     // The consecutive window n-m-1 .. n, for n >= m+1.
                     for (int n = m + 1; n + 1 <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n + 1, 2 * family_length(m, family::bonacci, n + 2))) break;
                       word arg;
                       word rhs{0};
                       for (int i = n - m - 1; i <= n; ++i) {
                         append(arg, rev(bonacci_word(m, i)));
                         append(rhs, rev(bonacci_word(m, i + 1)));
                       }
                       rhs = strip_suffix(rhs, word{0});
                       if (phi(arg) != rhs) {
                         return p.fail(m, n, describe(phi(arg), rhs));
                       }
                     }
                   });
                 }});
  return out;
}

inline std::vector<check_definition> nonoccurrence_checks() {
  std::vector<check_definition> out;
  auto const S = "nonoccurrence";

  out.push_back({"nonoccurrence.border_not_in_palindromic_prefix", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 3, cfg.max_n_search); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 3; n <= p.config().max_n_search; ++n) {
                       if (!p.fits(m, n, family_length(m, family::palindromic_prefix, n - 1))) break;
                       auto const v = concat({reversed_head(m, n), letter_word(m, n - 2)});
                       if (is_factor(v, palindromic_prefix(m, n - 1))) {
                         return p.fail(m, n, to_string(v) + " occurs in u_{n-1}");
                       }
                     }
                   });
                 }});

  out.push_back({"nonoccurrence.factor_not_in_next", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_search); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 0; n <= p.config().max_n_search; ++n) {
                       if (!p.fits(m, n + 1, family_length(m, family::closed_factor, n + 1))) break;
                       if (is_factor(closed_z_factor(m, n), closed_z_factor(m, n + 1))) {
                         return p.fail(m, n, "z_n occurs in z_{n+1}");
                       }
                     }
                   });
                 }});

  out.push_back({"nonoccurrence.factor_not_in_neighbors", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.max_n_search); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 1; n <= p.config().max_n_search; ++n) {
                       if (!p.fits(m, n, 2 * family_length(m, family::closed_factor, n))) break;
                       auto const& z = closed_z_factor(m, n);
                       word host = concat({closed_z_factor(m, n - 1), z});
                       host.pop_back();
                       if (is_factor(z, host)) {
                         return p.fail(m, n, "z_n occurs in z_{n-1} z_n gamma^{-1}");
                       }
                     }
                   });
                 }});

  out.push_back({"nonoccurrence.factor_not_in_prefix", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.max_n_search); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 1; n <= p.config().max_n_search; ++n) {
                       if (!p.fits(m, n, family_length(m, family::closed_prefix, n + 1))) break;
                       if (is_factor(closed_z_factor(m, n), closed_z_prefix(m, n))) {
                         return p.fail(m, n, "z_n occurs in P_n");
                       }
                     }
                   });
                 }});

  out.push_back({"nonoccurrence.head_not_in_palindromic_prefix", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 4, cfg.max_n_search); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 4; n <= p.config().max_n_search; ++n) {
                       if (!p.fits(m, n, family_length(m, family::bonacci, n - 3))) break;
                       if (is_factor(reversed_head(m, n), palindromic_prefix(m, n - 3))) {
                         return p.fail(m, n, "occurs in u_{n-3}");
                       }
                     }
                   });
                 }});
  return out;
}

inline std::vector<check_definition> theorem_checks() {
  std::vector<check_definition> out;
  auto const S = "theorem";

  out.push_back({"theorem.factor_closed_with_border", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_search); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 0; n <= p.config().max_n_search; ++n) {
                       if (!p.fits(m, n, family_length(m, family::closed_factor, n))) break;
                       auto const& z = closed_z_factor(m, n);
                       if (!is_closed(z)) {
                         return p.fail(m, n, "z_n is open");
                       }
                       if (n >= 3) {
                         auto const want = concat({reversed_head(m, n), letter_word(m, n - 2)});
                         auto const got = closed_border(z);
                         if (!got || *got != want) {
                           return p.fail(m, n, describe(got.value_or(word{}), want));
                         }
                       }
                     }
                   });
                 }});

  out.push_back({"theorem.greedy_matches_closed_factors", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_search); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     int const n_max = p.config().max_n_search;
                     if (!p.fits(m, n_max, family_length(m, family::closed_prefix, n_max + 1))) return;
                     auto stream = bonacci_stream(m);
                     auto const f = closed_z_factorize(stream, static_cast<std::size_t>(n_max + 1));
                     std::vector<word> want;
                     for (int n = 0; n <= n_max; ++n) {
                       want.push_back(closed_z_factor(m, n));
                     }
                     if (auto i = first_mismatch(f.factors, want)) {
                       return p.fail(m, static_cast<int>(*i),
                                     describe(*i < f.factors.size() ? f.factors[*i] : word{}, want[*i]));
                     }
                   });
                 }});

  out.push_back({"theorem.factor_unique_in_extended_prefix", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_search); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 0; n <= p.config().max_n_search; ++n) {
                       if (!p.fits(m, n, family_length(m, family::closed_prefix, n + 1))) break;
                       word host = closed_z_prefix(m, n + 1);
                       host.pop_back();
                       if (is_factor(closed_z_factor(m, n), host)) {
                         return p.fail(m, n, "z_n occurs in P_{n+1} gamma^{-1}");
                       }
                     }
                   });
                 }});

  out.push_back({"theorem.closed_prefixes_seen", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, cfg.max_n_search); },
                 [](probe& p) {
                   // Prefixes of a factor are factors, so the longest closed
                   // proper prefix decides.
                   each_m(p, [&](int m) {
                     for (int n = 0; n <= p.config().max_n_search; ++n) {
                       if (!p.fits(m, n, family_length(m, family::closed_prefix, n + 1))) break;
                       auto const& z = closed_z_factor(m, n);
                       closed_prefix_scanner scan;
                       std::size_t longest = 0;
                       for (std::size_t i = 0; i + 1 < z.size(); ++i) {
                         if (scan.push(z[i])) {
                           longest = i + 1;
                         }
                       }
                       if (longest > 0 &&
                           !is_factor(word_view(z).first(longest), closed_z_prefix(m, n))) {
                         return p.fail(m, n, "closed prefix of length " + std::to_string(longest) +
                                                 " not in P_n");
                       }
                     }
                   });
                 }});

  out.push_back({"theorem.return_words_of_palindromic_prefix", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, cfg.max_n_search); },
                 [](probe& p) {
                   // Return words of u_{j+1} inside h_{j+m+2} are mu_j(0..m-1).
                   each_m(p, [&](int m) {
                     for (int j = 1; j <= p.config().max_n_search; ++j) {
                       if (!p.fits(m, j, family_length(m, family::bonacci, j + m + 2))) break;
                       auto const got = return_words(bonacci_word(m, j + m + 2), palindromic_prefix(m, j + 1));
                       auto const mu = directive_morphism(m, j);
                       std::set<word> const got_set(got.begin(), got.end());
                       std::set<word> const want(mu.images().begin(), mu.images().end());
                       if (got_set != want) {
                         return p.fail(m, j, std::to_string(got_set.size()) + " return words, expected " +
                                                 std::to_string(want.size()));
                       }
                     }
                   });
                 }});

  out.push_back({"theorem.complete_return_words_closed", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, 30); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     std::mt19937 rng(p.config().seed + 1000u * static_cast<std::uint32_t>(m));
                     auto const host = fixed_point_prefix(bonacci_morphism(m), 0, 3000);
                     for (int trial = 0; trial < 150; ++trial) {
                       std::size_t const len = 1 + rng() % 30;
                       std::size_t const at = rng() % (host.size() / 2);
                       auto const v = word_view(host).subspan(at, len);
                       if (count_occurrences(host, v) < 2) continue;
                       for (auto const& r : return_words(host, v)) {
                         if (!is_closed(concat({r, v}))) {
                           return p.fail(m, static_cast<int>(len),
                                         "complete return word of " + to_string(v) + " is open");
                         }
                       }
                     }
                   });
                 }});
  return out;
}

inline std::vector<check_definition> ocseq_checks() {
  std::vector<check_definition> out;
  auto const S = "ocseq";

  out.push_back({"ocseq.prefix_classification", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 1, static_cast<int>(cfg.oc_length)); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     auto stream = bonacci_stream(m);
                     auto const seq = oc(stream, p.config().oc_length);
                     for (std::size_t len = 1; len <= seq.size(); ++len) {
                       auto const cls = classify_prefix(m, len);
                       if (cls.closed() != seq.closed_at(len)) {
                         return p.fail(m, static_cast<int>(len),
                                       to_string(cls.kind) + " prefix with oc bit " +
                                           std::to_string(seq.closed_at(len) ? 1 : 0));
                       }
                     }
                   });
                 }});

  out.push_back({"ocseq.palindromic_prefix_closed", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 2, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 2; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n, family_length(m, family::palindromic_prefix, n))) break;
                       if (!is_closed(palindromic_prefix(m, n))) {
                         return p.fail(m, n, "u_n is open");
                       }
                     }
                   });
                 }});

  out.push_back({"ocseq.ladder_identity", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 2, cfg.max_n_identity); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     for (int n = 2; n <= p.config().max_n_identity; ++n) {
                       if (!p.fits(m, n + 1, family_length(m, family::palindromic_prefix, n + 1))) break;
                       auto const& t = ladder_gap(m, n);
                       auto const h2 = rev(bonacci_word(m, n - 2));
                       if (rev(bonacci_word(m, n - 1)) != concat({t, h2})) {
                         return p.fail(m, n, "h_{n-1}^R != t_n h_{n-2}^R");
                       }
                       if (concat({palindromic_prefix(m, n), t, h2}) != palindromic_prefix(m, n + 1)) {
                         return p.fail(m, n, "u_n t_n h_{n-2}^R != u_{n+1}");
                       }
                       if (family_length(m, family::ladder_gap, n) != t.size()) {
                         return p.fail(m, n, "|t_n| from lengths differs");
                       }
                     }
                   });
                 }});

  out.push_back({"ocseq.corollary_runs", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, static_cast<int>(cfg.oc_runs_length)); },
                 [](probe& p) {
                   each_m(p, [&](int m) {
                     auto const runs = complete_runs(m, p.config().oc_runs_length);
                     auto const r = compare_runs(m, runs);
                     if (!r.literal && !r.shifted) {
                       return p.fail(m, static_cast<int>(runs.size()), "neither reading of the run lengths holds");
                     }
                   });
                 }});

  out.push_back({"ocseq.corollary_indexing", S,
                 [](auto const& cfg, auto& c) { grid(c, cfg, 0, static_cast<int>(cfg.oc_runs_length)); },
                 [](probe& p) {
                   std::ostringstream os;
                   each_m(p, [&](int m) {
                     auto const runs = complete_runs(m, p.config().oc_runs_length);
                     auto const r = compare_runs(m, runs);
                     if (m != p.config().m_min) os << "; ";
                     os << "m=" << m << ": " << r.compared << " runs, ";
                     if (r.literal && r.shifted) {
                       os << "both readings";
                     } else if (r.literal) {
                       os << "literal (|h_0|, |h_1|, ...)";
                     } else if (r.shifted) {
                       os << "shifted (1, |h_0|, |h_1|, ...)";
                     } else {
                       os << "neither reading";
                     }
                   });
                   p.report(os.str());
                 }});

  out.push_back({"ocseq.tribonacci_closed_form", S,
                 [](auto const& cfg, auto& c) {
                   c.m_min = 3;
                   c.m_max = 3;
                   c.n_min = 1;
                   c.n_max = static_cast<int>(cfg.oc_length);
                 },
                 [](probe& p) {
                   auto stream = bonacci_stream(3);
                   auto const seq = oc(stream, p.config().oc_length);
                   auto const want = tribonacci_oc_closed_form(p.config().oc_length);
                   for (std::size_t i = 0; i < seq.size(); ++i) {
                     if (seq.bits[i] != want.bits[i]) {
                       return p.fail(3, static_cast<int>(i + 1), "bit differs from the closed form");
                     }
                   }
                 }});
  return out;
}

inline std::vector<std::uint64_t> pz_lengths(int m, std::size_t count) {
  auto stream = bonacci_stream(m);
  auto const f = palindromic_z_factorize(stream, count);
  auto const l = f.lengths();
  return std::vector<std::uint64_t>(l.begin(), l.end());
}

inline std::vector<check_definition> pz_checks() {
  std::vector<check_definition> out;
  auto const S = "pz";

  out.push_back({"pz.length_recurrence", S,
                 [](auto const& cfg, auto& c) {
                   grid(c, cfg, cfg.m_min - 1, static_cast<int>(cfg.pz_factor_count) - 1);
                 },
                 [](probe& p) {
                   // 0-based factors, |p_{-1}| = 0.
                   each_m(p, [&](int m) {
                     auto const len = pz_lengths(m, p.config().pz_factor_count);
                     auto at = [&](int i) { return i < 0 ? std::uint64_t{0} : len[static_cast<std::size_t>(i)]; };
                     for (int n = m - 1; n < static_cast<int>(len.size()); ++n) {
                       std::int64_t s = 0;
                       for (int k = 1; k <= m; ++k) {
                         s += static_cast<std::int64_t>(at(n - k));
                       }
                       if (m % 2 == 1) {
                         s += n % 2 == 0 ? 1 : -1;
                       }
                       if (s != static_cast<std::int64_t>(at(n))) {
                         return p.fail(m, n, "|p_n| = " + std::to_string(at(n)) + ", recurrence gives " +
                                                 std::to_string(s));
                       }
                     }
                   });
                 }});

  out.push_back({"pz.matches_closed_factor_lengths", S,
                 [](auto const& cfg, auto& c) {
                   grid(c, cfg, cfg.m_min - 1, static_cast<int>(cfg.pz_factor_count) - 1);
                 },
                 [](probe& p) {
                   // Even m only.
                   each_m(p, [&](int m) {
                     if (m % 2 != 0) return;
                     auto const len = pz_lengths(m, p.config().pz_factor_count);
                     for (int n = m - 1; n < static_cast<int>(len.size()); ++n) {
                       auto const z = family_length(m, family::closed_factor, n);
                       if (z != len[static_cast<std::size_t>(n)]) {
                         return p.fail(m, n, "|z_n| = " + std::to_string(z) + ", |p_n| = " +
                                                 std::to_string(len[static_cast<std::size_t>(n)]));
                       }
                     }
                   });
                 }});
  return out;
}

}  // namespace detail

/// Every registered check, grouped by suite, in a fixed order.
inline std::vector<check_definition> const& all_checks() {
  static std::vector<check_definition> const checks = [] {
    std::vector<check_definition> out;
    for (auto&& group : {detail::fibonacci_checks(), detail::family_checks(), detail::recursion_checks(),
                         detail::nonoccurrence_checks(), detail::theorem_checks(), detail::ocseq_checks(),
                         detail::pz_checks()}) {
      out.insert(out.end(), group.begin(), group.end());
    }
    return out;
  }();
  return checks;
}

inline property_check run_check(check_definition const& def, suite_config const& cfg) {
  property_check out;
  out.id = def.id;
  out.suite = def.suite;
  def.bounds(cfg, out);
  probe p(cfg);
  try {
    def.body(p);
  } catch (std::exception const& e) {
    p.fail(0, 0, std::string("exception: ") + e.what());
  }
  p.finish(out);
  return out;
}

/// Runs the named suite ("all" for every suite) on a pool of worker threads.
/// Results are sorted by id, so the output does not depend on scheduling.
inline std::vector<property_check> run_suite(std::string const& suite, suite_config const& cfg) {
  if (cfg.m_min < 2 || cfg.m_max < cfg.m_min || cfg.m_max > max_alphabet_size) {
    throw std::invalid_argument("run_suite: bad m range");
  }
  std::vector<check_definition const*> selected;
  for (auto const& def : all_checks()) {
    if (suite == "all" || def.suite == suite || def.id == suite) {
      selected.push_back(&def);
    }
  }
  if (selected.empty()) {
    throw std::invalid_argument("unknown suite or check '" + suite + "'");
  }
  std::vector<property_check> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      results[i] = run_check(*selected[i], cfg);
    }
  };
  unsigned width = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  width = std::min<unsigned>(width, static_cast<unsigned>(selected.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < width; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  std::sort(results.begin(), results.end(),
            [](property_check const& a, property_check const& b) { return a.id < b.id; });
  return results;
}

inline bool any_failed(std::vector<property_check> const& results) {
  return std::any_of(results.begin(), results.end(),
                     [](property_check const& c) { return c.status == check_status::fail; });
}

}  // namespace closedz
