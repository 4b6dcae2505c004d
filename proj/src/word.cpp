#include "orthospec/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "orthospec/errors.hpp"

namespace orthospec {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

Word reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

Word inverse(const Word& w) {
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = inverse(w[w.size() - 1 - i]);
  return Word(std::move(out));
}

std::size_t cancellation(const Word& u, const Word& v) {
  std::size_t k = 0;
  const std::size_t m = std::min(u.size(), v.size());
  while (k < m && u[u.size() - 1 - k] == inverse(v[k])) ++k;
  return k;
}

Word mul(const Word& u, const Word& v) {
  const std::size_t k = cancellation(u, v);
  std::vector<Letter> out;
  out.reserve(u.size() + v.size() - 2 * k);
  out.insert(out.end(), u.letters.begin(), u.letters.end() - static_cast<long>(k));
  out.insert(out.end(), v.letters.begin() + static_cast<long>(k), v.letters.end());
  return Word(std::move(out));
}

Word mul(const Word& u, const Word& v, const Word& w) { return mul(mul(u, v), w); }

Word power(const Word& w, long p) {
  Word base = p < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < (p < 0 ? -p : p); ++i) out = mul(out, base);
  return out;
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  std::size_t k = 0;
  while (2 * k + 1 < w.size() && w[k] == inverse(w[w.size() - 1 - k])) ++k;
  CyclicDecomposition d;
  d.conj.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(k));
  d.core.letters.assign(w.letters.begin() + static_cast<long>(k),
                        w.letters.end() - static_cast<long>(k));
  return d;
}

namespace {

// w == h^q for cyclically reduced h, by repeated prefix division.
std::optional<long> core_power(const std::vector<Letter>& w, std::size_t begin, std::size_t end,
                               const Word& h) {
  const std::size_t len = end - begin;
  if (len == 0) return 0L;
  if (h.empty() || len % h.size() != 0) return std::nullopt;
  const Word hi = inverse(h);
  for (const Word* base : {&h, &hi}) {
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) ok = w[begin + i] == (*base)[i % base->size()];
    if (ok) {
      const long q = static_cast<long>(len / h.size());
      return base == &h ? q : -q;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<long> power_exponent(const Word& w, const Word& alpha) {
  const auto d = cyclic_reduce(alpha);
  const std::size_t c = d.conj.size();
  if (w.empty()) return 0L;
  if (w.size() < 2 * c) return std::nullopt;
  for (std::size_t i = 0; i < c; ++i) {
    if (w[i] != d.conj[i]) return std::nullopt;
    if (w[w.size() - 1 - i] != inverse(d.conj[i])) return std::nullopt;
  }
  return core_power(w.letters, c, w.size() - c, d.core);
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return Word(std::vector<Letter>(w.letters.begin(), w.letters.begin() + static_cast<long>(p)));
  }
  return w;
}

bool is_primitive(const Word& w) {
  const auto core = cyclic_reduce(reduce(w)).core;
  if (core.empty()) return false;
  return primitive_root(core).size() == core.size();
}

bool conjugate_into_cyclic(const Word& w, const Word& alpha) {
  const Word h = cyclic_reduce(reduce(w)).core;
  if (h.empty()) return true;
  const Word a = cyclic_reduce(reduce(alpha)).core;
  if (a.empty() || h.size() % a.size() != 0) return false;
  const long q = static_cast<long>(h.size() / a.size());
  for (const Word& base : {power(a, q), power(a, -q)}) {
    // h is a cyclic rotation of base iff it occurs in base.base
    std::vector<Letter> doubled = base.letters;
    doubled.insert(doubled.end(), base.letters.begin(), base.letters.end());
    if (std::search(doubled.begin(), doubled.end(), h.letters.begin(), h.letters.end()) !=
        doubled.end())
      return true;
  }
  return false;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    std::string tok = names.at(static_cast<std::size_t>(generator_of(w[i])));
    if (sign_of(w[i]) < 0)
      for (char& ch : tok) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out += tok;
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "e" || tok == "1") continue;
    bool found = false;
    for (std::size_t k = 0; k < names.size() && !found; ++k) {
      std::string up = names[k];
      for (char& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      if (tok == names[k]) {
        w.letters.push_back(make_letter(static_cast<int>(k), 1));
        found = true;
      } else if (tok == up) {
        w.letters.push_back(make_letter(static_cast<int>(k), -1));
        found = true;
      }
    }
    if (!found) throw ConfigError("unknown generator token '" + tok + "'");
  }
  return reduce(w);
}

}  // namespace orthospec
