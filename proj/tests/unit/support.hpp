#pragma once

#include <random>

#include "orthospec/word.hpp"

namespace testsupport {

// Uniform-ish random reduced word of exactly len letters.
inline orthospec::Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::vector<orthospec::Letter> ls;
  std::uniform_int_distribution<int> pick(0, 2 * rank - 1);
  while (static_cast<int>(ls.size()) < len) {
    const auto l = static_cast<orthospec::Letter>(pick(rng));
    if (!ls.empty() && ls.back() == orthospec::inverse(l)) continue;
    ls.push_back(l);
  }
  return orthospec::Word(ls);
}

inline orthospec::Word random_word_upto(std::mt19937_64& rng, int rank, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  return random_word(rng, rank, len(rng));
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace testsupport
