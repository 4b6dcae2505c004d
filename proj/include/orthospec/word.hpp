#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orthospec {

// Letter 2k is generator k, letter 2k+1 its inverse. Comparing letters as
// integers gives the order g1 < g1^-1 < g2 < g2^-1 < ...
using Letter = std::uint8_t;

constexpr Letter make_letter(int gen, int sign) {
  return static_cast<Letter>(2 * gen + (sign < 0 ? 1 : 0));
}
constexpr Letter inverse(Letter l) { return static_cast<Letter>(l ^ 1u); }
constexpr int generator_of(Letter l) { return l >> 1; }
constexpr int sign_of(Letter l) { return (l & 1u) ? -1 : 1; }

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
  Word(std::initializer_list<Letter> ls) : letters(ls) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const Word&, const Word&) = default;
};

// Shortlex: shorter first, then lexicographic on letters.
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

Word reduce(const Word& w);
bool is_reduced(const Word& w);
Word inverse(const Word& w);

// Product of two reduced words, reduced.
Word mul(const Word& u, const Word& v);
Word mul(const Word& u, const Word& v, const Word& w);
Word power(const Word& w, long p);

// Number of letters cancelled in u*v when u and v are reduced.
std::size_t cancellation(const Word& u, const Word& v);

// w = conj * core * conj^-1 with core cyclically reduced.
struct CyclicDecomposition {
  Word conj;
  Word core;
};
CyclicDecomposition cyclic_reduce(const Word& w);

// Exponent q with w == alpha^q, if any. Both reduced, alpha nontrivial.
std::optional<long> power_exponent(const Word& w, const Word& alpha);

// Smallest root r of a cyclically reduced word, w == r^k.
Word primitive_root(const Word& w);
bool is_primitive(const Word& w);

// Is w conjugate to a power (nonzero or zero) of alpha?
bool conjugate_into_cyclic(const Word& w, const Word& alpha);

// Generator names are lowercase tokens; the inverse prints in uppercase.
std::string to_string(const Word& w, const std::vector<std::string>& names);
Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace orthospec
