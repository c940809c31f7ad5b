#pragma once

// Non-erasing endomorphisms of A_m^*, their fixed points, and the concrete
// families used for m-bonacci words: the m-bonacci morphism 0 -> 01,
// ..., (m-2) -> 0(m-1), (m-1) -> 0; the elementary morphisms psi_a
// (a -> a, b -> ab); and their compositions mu_n = psi_0 o psi_1 o ... .

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "closedz/word.hpp"

namespace closedz {

class morphism {
 public:
  /// images[a] is the image of letter a. Every image must be non-empty and
  /// use only letters below images.size().
  explicit morphism(std::vector<word> images) : images_(std::move(images)) {
    int const m = static_cast<int>(images_.size());
    if (m < 2 || m > max_alphabet_size) {
      throw std::invalid_argument("morphism: alphabet size " +
                                  std::to_string(m) + " outside [2, 36]");
    }
    for (std::size_t a = 0; a < images_.size(); ++a) {
      if (images_[a].empty()) {
        throw std::invalid_argument("morphism: image of " + std::to_string(a) +
                                    " is empty (erasing morphisms unsupported)");
      }
      for (letter b : images_[a]) {
        if (b >= m) {
          throw std::invalid_argument("morphism: image of " +
                                      std::to_string(a) + " uses letter " +
                                      std::to_string(b) + " >= " +
                                      std::to_string(m));
        }
      }
    }
  }

  static morphism identity(int m) {
    check_size(m);
    std::vector<word> images;
    for (int a = 0; a < m; ++a) {
      images.push_back(word{static_cast<letter>(a)});
    }
    return morphism(std::move(images));
  }

  int alphabet_size() const { return static_cast<int>(images_.size()); }

  word const& image(letter a) const {
    if (a >= images_.size()) {
      throw std::out_of_range("morphism: letter " + std::to_string(a) +
                              " outside alphabet");
    }
    return images_[a];
  }

  std::vector<word> const& images() const { return images_; }

  /// Image of a whole word; letters outside the alphabet are rejected.
  word operator()(word_view w) const {
    std::size_t n = 0;
    for (letter a : w) {
      n += image(a).size();
    }
    word out;
    out.reserve(n);
    for (letter a : w) {
      append(out, images_[a]);
    }
    return out;
  }

  friend bool operator==(morphism const&, morphism const&) = default;

  static void check_size(int m) {
    if (m < 2 || m > max_alphabet_size) {
      throw std::invalid_argument("alphabet size " + std::to_string(m) +
                                  " outside [2, 36]");
    }
  }

 private:
  std::vector<word> images_;
};

inline word apply(morphism const& f, word_view w) { return f(w); }

/// (f o g)(a) = f(g(a)).
inline morphism compose(morphism const& f, morphism const& g) {
  if (f.alphabet_size() != g.alphabet_size()) {
    throw std::invalid_argument("compose: alphabet sizes differ");
  }
  std::vector<word> images;
  images.reserve(g.images().size());
  for (auto const& img : g.images()) {
    images.push_back(f(img));
  }
  return morphism(std::move(images));
}

/// For non-erasing morphisms: f(a) starts with a and is longer than a.
inline bool is_prolongable(morphism const& f, letter a) {
  auto const& img = f.image(a);
  return img.size() >= 2 && img.front() == a;
}

/// Growing prefix of the fixed point f^omega(a). Extension re-applies f to
/// the current buffer, so earlier letters never change. Single owner.
class fixed_point_stream {
 public:
  fixed_point_stream(morphism f, letter seed) : f_(std::move(f)), seed_(seed) {
    if (!is_prolongable(f_, seed_)) {
      throw std::invalid_argument("fixed_point_stream: morphism is not "
                                  "prolongable on " + std::to_string(seed));
    }
    buffer_ = f_.image(seed_);
  }

  /// Makes at least n letters available.
  void extend_to(std::size_t n) {
    while (buffer_.size() < n) {
      buffer_ = f_(buffer_);
    }
  }

  /// The first n letters; valid until the next extension.
  word_view prefix(std::size_t n) {
    extend_to(n);
    return word_view(buffer_).first(n);
  }

  letter at(std::size_t i) {
    extend_to(i + 1);
    return buffer_[i];
  }

  std::size_t available() const { return buffer_.size(); }
  word_view generated() const { return buffer_; }
  morphism const& generator() const { return f_; }
  letter seed() const { return seed_; }

 private:
  morphism f_;
  letter seed_;
  word buffer_;
};

inline word fixed_point_prefix(morphism const& f, letter a, std::size_t n) {
  fixed_point_stream s(f, a);
  auto const p = s.prefix(n);
  return word(p.begin(), p.end());
}

// ---------------------------------------------------------------------------
// Concrete morphisms
// ---------------------------------------------------------------------------

/// 0 -> 01, 1 -> 02, ..., (m-2) -> 0(m-1), (m-1) -> 0.
inline morphism bonacci_morphism(int m) {
  morphism::check_size(m);
  std::vector<word> images;
  for (int a = 0; a < m - 1; ++a) {
    images.push_back(word{0, static_cast<letter>(a + 1)});
  }
  images.push_back(word{0});
  return morphism(std::move(images));
}

/// psi_a: a -> a, b -> ab for b != a.
inline morphism elementary_morphism(int m, letter a) {
  morphism::check_size(m);
  if (a >= m) {
    throw std::invalid_argument("elementary_morphism: letter " +
                                std::to_string(a) + " >= " + std::to_string(m));
  }
  std::vector<word> images;
  for (int b = 0; b < m; ++b) {
    images.push_back(b == a ? word{a} : word{a, static_cast<letter>(b)});
  }
  return morphism(std::move(images));
}

/// psi_{i mod m} o psi_{(i+1) mod m} o ... o psi_{(j-1) mod m}; the identity
/// when i >= j.
inline morphism elementary_chain(int m, int first, int last_exclusive) {
  morphism out = morphism::identity(m);
  for (int i = last_exclusive - 1; i >= first; --i) {
    out = compose(elementary_morphism(m, static_cast<letter>(i % m)), out);
  }
  return out;
}

/// mu_n = psi_0 o psi_1 o ... o psi_{(n-1) mod m}; mu_0 = id.
inline morphism directive_morphism(int m, int n) {
  if (n < 0) {
    throw std::invalid_argument("directive_morphism: negative index");
  }
  return elementary_chain(m, 0, n);
}

/// The unique v with bonacci_morphism(m)(v) = w. Every code word of
/// {0, 01, ..., 0(m-1)} starts with the only 0 it contains, so w splits
/// before each 0.
inline word decode_bonacci(int m, word_view w) {
  morphism::check_size(m);
  word out;
  out.reserve(w.size());
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != 0) {
      throw std::invalid_argument("decode_bonacci: letter " +
                                  std::to_string(w[i]) + " at position " +
                                  std::to_string(i + 1) +
                                  " is not preceded by 0");
    }
    if (i + 1 < w.size() && w[i + 1] != 0) {
      if (w[i + 1] >= m) {
        throw std::invalid_argument("decode_bonacci: letter outside alphabet");
      }
      out.push_back(static_cast<letter>(w[i + 1] - 1));
      i += 2;
    } else {
      out.push_back(static_cast<letter>(m - 1));
      i += 1;
    }
  }
  return out;
}

/// One line per letter, "a -> image".
inline std::string to_text(morphism const& f) {
  std::ostringstream os;
  for (int a = 0; a < f.alphabet_size(); ++a) {
    os << to_char(static_cast<letter>(a)) << " -> "
       << to_string(f.image(static_cast<letter>(a))) << '\n';
  }
  return os.str();
}

}  // namespace closedz
