#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orthospec/word.hpp"

namespace orthospec {

struct SurfacePresentation {
  int genus = 0;
  int boundary_count = 0;
  int rank = 0;
  std::vector<std::string> names;   // a1 b1 ... ag bg c1 ... c_{m-1}
  std::vector<Word> peripheral;     // alpha_1 ... alpha_m, 0-based here
  bool peripheral_inverted = false;  // set when orientation validation flipped the marking

  const Word& alpha(int i) const { return peripheral.at(static_cast<std::size_t>(i)); }
  std::string format(const Word& w) const { return to_string(w, names); }
  Word parse(std::string_view s) const { return parse_word(s, names); }
};

// alpha_i = c_i for i < m, alpha_m = (c_1...c_{m-1})^-1 [a1,b1]...[ag,bg].
SurfacePresentation surface_presentation(int genus, int boundaries);

// Same presentation with every peripheral word inverted.
SurfacePresentation with_inverted_marking(const SurfacePresentation& p);

// Every reduced word of length <= L once, in shortlex order.
void enumerate_words(int rank, int L, const std::function<void(const Word&)>& visit);
std::vector<Word> words_of_length(int rank, int len);
std::size_t reduced_word_count(int rank, int L);

// Indices are 0-based peripheral indices.
bool double_coset_membership(const SurfacePresentation& p, int i, int j, const Word& g,
                             const Word& h);

struct OrthosetElement {
  int from = 0;  // 0-based
  int to = 0;
  Word canonical;

  friend bool operator==(const OrthosetElement&, const OrthosetElement&) = default;
};

// Shortlex-least element of H_i g H_j; nullopt for the excluded H_i e H_i.
std::optional<OrthosetElement> canonical_double_coset(const SurfacePresentation& p, int i, int j,
                                                      const Word& g);

// All orthoset elements with canonical length <= L, ordered by (word, i, j).
std::vector<OrthosetElement> orthoset_stream(const SurfacePresentation& p, int L);

std::string format_element(const SurfacePresentation& p, const OrthosetElement& x);

}  // namespace orthospec
