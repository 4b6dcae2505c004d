#include "orthospec/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "orthospec/errors.hpp"
#include "orthospec/parallel.hpp"

namespace orthospec {

SurfacePresentation surface_presentation(int genus, int boundaries) {
  if (genus < 0 || boundaries < 1)
    throw ConfigError("surface needs genus >= 0 and at least one boundary component");
  if (2 - 2 * genus - boundaries >= 0 || 2 * genus + boundaries - 1 < 2)
    throw ConfigError("surface (genus " + std::to_string(genus) + ", " +
                      std::to_string(boundaries) +
                      " boundaries) must have negative Euler characteristic and a double of "
                      "genus at least 2");
  SurfacePresentation p;
  p.genus = genus;
  p.boundary_count = boundaries;
  p.rank = 2 * genus + boundaries - 1;
  if (p.rank > 120) throw ConfigError("surface rank too large");
  for (int k = 1; k <= genus; ++k) {
    p.names.push_back("a" + std::to_string(k));
    p.names.push_back("b" + std::to_string(k));
  }
  for (int k = 1; k < boundaries; ++k) p.names.push_back("c" + std::to_string(k));

  Word cs;
  for (int k = 0; k + 1 < boundaries; ++k) {
    const Word c{make_letter(2 * genus + k, 1)};
    p.peripheral.push_back(c);
    cs = mul(cs, c);
  }
  Word commutators;
  for (int k = 0; k < genus; ++k) {
    const Letter a = make_letter(2 * k, 1), b = make_letter(2 * k + 1, 1);
    commutators = mul(commutators, Word{a, b, inverse(a), inverse(b)});
  }
  p.peripheral.push_back(mul(inverse(cs), commutators));

  for (const Word& a : p.peripheral)
    if (!is_primitive(a)) throw InvariantViolation("peripheral word is not primitive");
  return p;
}

SurfacePresentation with_inverted_marking(const SurfacePresentation& p) {
  SurfacePresentation q = p;
  for (Word& a : q.peripheral) a = inverse(a);
  q.peripheral_inverted = !p.peripheral_inverted;
  return q;
}

namespace {

void extend(int rank, int remaining, Word& cur, const std::function<void(const Word&)>& visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (int l = 0; l < 2 * rank; ++l) {
    const Letter x = static_cast<Letter>(l);
    if (!cur.empty() && cur.letters.back() == inverse(x)) continue;
    cur.letters.push_back(x);
    extend(rank, remaining - 1, cur, visit);
    cur.letters.pop_back();
  }
}

}  // namespace

void enumerate_words(int rank, int L, const std::function<void(const Word&)>& visit) {
  for (int len = 0; len <= L; ++len) {
    Word cur;
    extend(rank, len, cur, visit);
  }
}

std::vector<Word> words_of_length(int rank, int len) {
  std::vector<Word> out;
  Word cur;
  extend(rank, len, cur, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::size_t reduced_word_count(int rank, int L) {
  std::size_t total = 1, layer = 2 * static_cast<std::size_t>(rank);
  for (int len = 1; len <= L; ++len) {
    total += layer;
    layer *= 2 * static_cast<std::size_t>(rank) - 1;
  }
  return total;
}

bool double_coset_membership(const SurfacePresentation& p, int i, int j, const Word& g,
                             const Word& h) {
  const Word& ai = p.alpha(i);
  const Word& aj = p.alpha(j);
  const long denom = std::max<long>(1, static_cast<long>(ai.size()) - 1);
  const long window = static_cast<long>(g.size() + h.size()) / denom + 2;
  const Word gi = inverse(g);
  for (long k = -window; k <= window; ++k) {
    // h = ai^k g aj^q  <=>  g^-1 ai^-k h in <aj>
    const Word w = mul(gi, power(ai, -k), h);
    if (power_exponent(w, aj)) return true;
  }
  return false;
}

std::optional<OrthosetElement> canonical_double_coset(const SurfacePresentation& p, int i, int j,
                                                      const Word& g) {
  const Word& ai = p.alpha(i);
  const Word& aj = p.alpha(j);
  const Word ai_inv = inverse(ai), aj_inv = inverse(aj);
  const std::size_t bound = g.size() + ai.size() + aj.size();

  std::set<Word, ShortlexLess> seen{g};
  std::vector<Word> frontier{g};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Word nb : {mul(ai, w), mul(ai_inv, w), mul(w, aj), mul(w, aj_inv)}) {
        if (nb.size() > bound) continue;
        if (seen.insert(nb).second) next.push_back(std::move(nb));
      }
    }
    frontier = std::move(next);
  }
  const Word& best = *seen.begin();
  if (i == j && best.empty()) return std::nullopt;
  return OrthosetElement{i, j, best};
}

std::vector<OrthosetElement> orthoset_stream(const SurfacePresentation& p, int L) {
  const int m = p.boundary_count;
  std::vector<Word> alphas, alpha_invs;
  for (int k = 0; k < m; ++k) {
    alphas.push_back(p.alpha(k));
    alpha_invs.push_back(inverse(p.alpha(k)));
  }
  // left or right multiplication by a peripheral letter block shortens g
  auto left_shortens = [&](int i, const Word& g) {
    const std::size_t n = alphas[static_cast<std::size_t>(i)].size();
    return 2 * cancellation(alphas[static_cast<std::size_t>(i)], g) > n ||
           2 * cancellation(alpha_invs[static_cast<std::size_t>(i)], g) > n;
  };
  auto right_shortens = [&](int j, const Word& g) {
    const std::size_t n = alphas[static_cast<std::size_t>(j)].size();
    return 2 * cancellation(g, alphas[static_cast<std::size_t>(j)]) > n ||
           2 * cancellation(g, alpha_invs[static_cast<std::size_t>(j)]) > n;
  };

  std::vector<OrthosetElement> out;
  for (int len = 0; len <= L; ++len) {
    const std::vector<Word> words = words_of_length(p.rank, len);
    std::vector<std::vector<OrthosetElement>> slots(words.size());
    parallel_for(words.size(), [&](std::size_t idx) {
      const Word& g = words[idx];
      for (int i = 0; i < m; ++i) {
        if (left_shortens(i, g)) continue;
        for (int j = 0; j < m; ++j) {
          if (right_shortens(j, g)) continue;
          if (i == j && g.empty()) continue;
          auto c = canonical_double_coset(p, i, j, g);
          if (c && c->canonical == g) slots[idx].push_back(std::move(*c));
        }
      }
    });
    for (auto& s : slots)
      for (auto& e : s) out.push_back(std::move(e));
  }
  return out;
}

std::string format_element(const SurfacePresentation& p, const OrthosetElement& x) {
  return "[" + p.format(x.canonical) + "]_{" + std::to_string(x.from + 1) + "," +
         std::to_string(x.to + 1) + "}";
}

}  // namespace orthospec
