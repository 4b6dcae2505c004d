#include "orthospec/mcshane.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "orthospec/errors.hpp"
#include "orthospec/parallel.hpp"
#include "orthospec/summation.hpp"

namespace orthospec {

bool is_peripheral(const SurfacePresentation& p, const Word& w) {
  if (reduce(w).empty()) return false;
  for (const Word& a : p.peripheral)
    if (conjugate_into_cyclic(w, a)) return true;
  return false;
}

namespace {

bool pants_less(const PantsClass& a, const PantsClass& b) {
  const std::size_t la = a.beta.size() + a.gamma.size(), lb = b.beta.size() + b.gamma.size();
  if (la != lb) return la < lb;
  if (a.gamma != b.gamma) return shortlex_less(a.gamma, b.gamma);
  return shortlex_less(a.beta, b.beta);
}

void check_good_pair(const SurfacePresentation& p, int alpha_index, const PantsClass& P) {
  if (!mul(p.alpha(alpha_index), P.gamma, P.beta).empty())
    throw InvariantViolation("(beta, gamma) = (" + p.format(P.beta) + ", " + p.format(P.gamma) +
                             ") is not a good pair: alpha gamma beta != e");
}

std::pair<long, long> slope(const Word& w) {
  long s0 = 0, s1 = 0;
  for (Letter l : w.letters) (generator_of(l) == 0 ? s0 : s1) += sign_of(l);
  if (s0 < 0 || (s0 == 0 && s1 < 0)) return {-s0, -s1};
  return {s0, s1};
}

std::vector<PantsClass> torus_pants(const SurfacePresentation& p, int depth) {
  const Letter a = make_letter(0, 1), b = make_letter(1, 1);
  const Word A{a}, B{b};
  const Word& alpha = p.alpha(0);
  struct Basis {
    Word u, v;
  };
  Basis start;
  if (alpha == mul(mul(A, B), mul(inverse(A), inverse(B))))
    start = {A, B};
  else if (alpha == mul(mul(B, A), mul(inverse(B), inverse(A))))
    start = {B, A};
  else
    throw InvariantViolation("peripheral word is not a commutator of the generators");

  const long limit = depth + 1;
  auto complexity = [](const Word& w) {
    const auto s = slope(w);
    return std::labs(s.first) + std::labs(s.second);
  };
  // best element word per unoriented slope, with its good pair
  std::map<std::pair<long, long>, std::pair<Word, PantsClass>> best;
  auto offer = [&](const Word& elem, PantsClass P) {
    if (complexity(elem) > limit) return;
    const auto key = slope(elem);
    auto it = best.find(key);
    if (it == best.end() || shortlex_less(elem, it->second.first)) best[key] = {elem, std::move(P)};
  };

  std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> seen;
  std::vector<Basis> frontier{start};
  seen.insert({start.u.letters, start.v.letters});
  for (int step = 0; step <= depth + 2 && !frontier.empty(); ++step) {
    std::vector<Basis> next;
    for (const Basis& bs : frontier) {
      const Word uv = mul(bs.u, bs.v);
      offer(bs.u, {mul(uv, bs.u, inverse(uv)), inverse(bs.u)});
      offer(bs.v, {mul(bs.u, inverse(bs.v), inverse(bs.u)), bs.v});
      const Basis moves[4] = {{bs.u, mul(bs.v, bs.u)},
                              {bs.u, mul(bs.v, inverse(bs.u))},
                              {mul(bs.u, bs.v), bs.v},
                              {mul(bs.u, inverse(bs.v)), bs.v}};
      for (const Basis& nb : moves) {
        if (std::max(complexity(nb.u), complexity(nb.v)) > limit) continue;
        if (seen.insert({nb.u.letters, nb.v.letters}).second) next.push_back(nb);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::pair<long, long>, PantsClass>> ordered;
  for (auto& [key, val] : best) ordered.emplace_back(key, canonical_pants(p, 0, val.second));
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const long cx = std::labs(x.first.first) + std::labs(x.first.second);
    const long cy = std::labs(y.first.first) + std::labs(y.first.second);
    if (cx != cy) return cx < cy;
    return x.first > y.first;
  });
  std::vector<PantsClass> out;
  for (auto& [_, P] : ordered) out.push_back(std::move(P));
  return out;
}

}  // namespace

PantsClass canonical_pants(const SurfacePresentation& p, int alpha_index, const PantsClass& P) {
  check_good_pair(p, alpha_index, P);
  const Word& alpha = p.alpha(alpha_index);
  const long N = std::max<long>(4, static_cast<long>(P.beta.size()));
  const PantsClass swapped{P.gamma, mul(P.gamma, P.beta, inverse(P.gamma))};
  PantsClass best = P;
  for (const PantsClass& base : {P, swapped}) {
    for (long k = -N; k <= N; ++k) {
      const Word c = power(alpha, k), ci = inverse(c);
      const PantsClass cand{mul(c, base.beta, ci), mul(c, base.gamma, ci)};
      if (pants_less(cand, best)) best = cand;
    }
  }
  check_good_pair(p, alpha_index, best);
  return best;
}

std::vector<PantsClass> pants_enumeration(const SurfacePresentation& p, int depth) {
  if (depth < 0) throw ConfigError("mcshane depth must be non-negative");
  if (p.genus == 0 && p.boundary_count == 3) {
    const Word &a1 = p.alpha(0), &a2 = p.alpha(1), &a3 = p.alpha(2);
    PantsClass P;
    if (mul(a1, a2, a3).empty())
      P = {a3, a2};
    else if (mul(a1, a3, a2).empty())
      P = {a2, a3};
    else
      throw InvariantViolation("pants peripheral words do not multiply to the identity");
    return {canonical_pants(p, 0, P)};
  }
  if (p.genus == 1 && p.boundary_count == 1) return torus_pants(p, depth);
  throw ConfigError("pants enumeration supports the pants and the one-holed torus only");
}

McShaneContext::McShaneContext(const Representation& r, int alpha_index,
                               std::optional<BoundaryPoint> zeta)
    : r_(r), alpha_(alpha_index) {
  const Word& a = r.presentation().alpha(alpha_index);
  plus_ = attracting(a);
  minus_ = repelling(a);
  zeta_ = zeta ? *zeta : default_zeta(r, alpha_index);
  if (same_point(r, zeta_, plus_) || same_point(r, zeta_, minus_))
    throw ConfigError("zeta coincides with a fixed point of alpha");
  ell_ = length(r, a);
}

double McShaneContext::B(const BoundaryPoint& y, const BoundaryPoint& t) const {
  return B_rho(r_, plus_, y, minus_, t);
}

double McShaneContext::F(const BoundaryPoint& x) const {
  if (same_point(r_, x, plus_) || same_point(r_, x, minus_))
    throw DegenerateQuadruple("F_B at a fixed point of alpha");
  const double b = B(x, zeta_);
  if (!(b > 0.0)) throw InvariantViolation("point outside the arc (alpha^+, alpha^-)");
  return std::log(b);
}

double McShaneContext::wrap(double t) const {
  double w = std::fmod(t, ell_);
  if (w < 0.0) w += ell_;
  if (w >= ell_) w -= ell_;
  return w;
}

CircleInterval McShaneContext::interval_I(const OrthosetElement& x) const {
  if (x.from != alpha_) throw ConfigError("interval_I needs a coset starting at alpha");
  const Word conj = mul(x.canonical, r_.presentation().alpha(x.to), inverse(x.canonical));
  const double lo = F(repelling(conj)), hi = F(attracting(conj));
  return {wrap(lo), hi - lo};
}

double McShaneContext::gap_H(const PantsClass& P) const {
  const auto& p = r_.presentation();
  const BoundaryPoint bp = attracting(P.beta), bm = repelling(P.beta);
  const BoundaryPoint gp = attracting(P.gamma), gm = repelling(P.gamma);
  const BoundaryPoint gbm = repelling(mul(P.gamma, P.beta, inverse(P.gamma)));
  double h = std::log(B(gm, bp)) + std::log(B(gbm, gp));
  if (is_peripheral(p, P.beta)) h += std::log(B(bp, bm));
  if (is_peripheral(p, P.gamma)) h += std::log(B(gp, gm));
  return h;
}

std::vector<CircleInterval> McShaneContext::interval_J(const PantsClass& P) const {
  const auto& p = r_.presentation();
  const bool pb = is_peripheral(p, P.beta), pg = is_peripheral(p, P.gamma);
  const Word gbg = mul(P.gamma, P.beta, inverse(P.gamma));
  const Word& a = p.alpha(alpha_);
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> arcs;
  if (!pb && !pg) {
    arcs = {{attracting(P.beta), repelling(P.gamma)}, {attracting(P.gamma), repelling(gbg)}};
  } else if (pg && !pb) {
    arcs = {{attracting(P.beta), repelling(gbg)}};
  } else if (pb && !pg) {
    arcs = {{translate(a, attracting(P.gamma)), repelling(P.gamma)}};
  } else {
    arcs = {{repelling(P.beta), repelling(gbg)}};
  }
  std::vector<CircleInterval> out;
  double total = 0.0;
  for (const auto& [s, e] : arcs) {
    const double fs = F(s), fe = F(e);
    if (!(fe - fs > 0.0))
      throw InvariantViolation("J interval with non-positive length for (" + p.format(P.beta) +
                               ", " + p.format(P.gamma) + ")");
    out.push_back({wrap(fs), fe - fs});
    total += fe - fs;
  }
  const double h = gap_H(P);
  if (std::fabs(total - h) > 1e-9 * std::max(1.0, h))
    throw InvariantViolation("J intervals do not add up to the gap function");
  return out;
}

bool McShaneContext::contains(const CircleInterval& outer, const CircleInterval& inner,
                              double slack) const {
  double d = wrap(inner.start - outer.start);
  if (d > ell_ - slack) d -= ell_;
  return d >= -slack && d + inner.length <= outer.length + slack;
}

double F_B(const Representation& r, int alpha_index, const BoundaryPoint& zeta,
           const BoundaryPoint& x) {
  return McShaneContext(r, alpha_index, zeta).F(x);
}

CircleInterval interval_I(const Representation& r, int alpha_index, const BoundaryPoint& zeta,
                          const OrthosetElement& x) {
  return McShaneContext(r, alpha_index, zeta).interval_I(x);
}

double gap_H(const Representation& r, const PantsClass& P) { return McShaneContext(r).gap_H(P); }

std::vector<CircleInterval> interval_J(const Representation& r, const PantsClass& P,
                                       const BoundaryPoint& zeta) {
  return McShaneContext(r, 0, zeta).interval_J(P);
}

std::optional<std::size_t> classify(const McShaneContext& ctx, const OrthosetElement& x,
                                    const std::vector<std::vector<CircleInterval>>& J) {
  const CircleInterval I = ctx.interval_I(x);
  std::optional<std::size_t> hit;
  for (std::size_t k = 0; k < J.size(); ++k) {
    for (const CircleInterval& j : J[k]) {
      if (!ctx.contains(j, I, kContainSlack)) continue;
      if (hit && *hit != k)
        throw InvariantViolation("coset " + format_element(ctx.representation().presentation(), x) +
                                 " lies in two pants intervals");
      hit = k;
    }
  }
  return hit;
}

std::optional<std::size_t> classify(const Representation& r, const OrthosetElement& x,
                                    const std::vector<PantsClass>& pants,
                                    const BoundaryPoint& zeta) {
  const McShaneContext ctx(r, 0, zeta);
  std::vector<std::vector<CircleInterval>> J;
  for (const auto& P : pants) J.push_back(ctx.interval_J(P));
  return classify(ctx, x, J);
}

double max_overlap(std::vector<CircleInterval> arcs, double ell) {
  if (arcs.size() < 2) return -std::numeric_limits<double>::infinity();
  std::sort(arcs.begin(), arcs.end(),
            [](const auto& a, const auto& b) { return a.start < b.start; });
  double worst = -std::numeric_limits<double>::infinity();
  double reach = arcs[0].start + arcs[0].length;
  for (std::size_t k = 1; k < arcs.size(); ++k) {
    worst = std::max(worst, reach - arcs[k].start);
    reach = std::max(reach, arcs[k].start + arcs[k].length);
  }
  worst = std::max(worst, reach - ell - arcs[0].start);
  return worst;
}

McShaneReport mcshane_series(const Representation& r, const std::vector<PantsClass>& pants, int L,
                             int step) {
  if (L < 0) throw ConfigError("max word length must be non-negative");
  if (step < 1) step = 1;
  const McShaneContext ctx(r);
  McShaneReport rep;
  rep.pants = pants;
  rep.zeta = ctx.zeta();
  rep.ell = ctx.ell();
  for (const auto& P : pants) {
    rep.H.push_back(ctx.gap_H(P));
    rep.J.push_back(ctx.interval_J(P));
  }

  std::vector<OrthosetElement> cosets;
  for (auto& x : orthoset_stream(r.presentation(), L))
    if (x.from == ctx.alpha_index()) cosets.push_back(std::move(x));
  const SummandEngine eng(r);
  std::vector<double> values(cosets.size());
  std::vector<std::optional<std::size_t>> cls(cosets.size());
  parallel_for(cosets.size(), [&](std::size_t k) {
    values[k] = eng.G(cosets[k]);
    cls[k] = classify(ctx, cosets[k], rep.J);
  });

  std::vector<CompensatedSum> sums(pants.size());
  std::vector<std::size_t> counts(pants.size(), 0);
  CompensatedSum classified, unclassified;
  std::size_t n_unclassified = 0;
  std::size_t k = 0;
  for (int cut = 0; cut <= L; cut += step) {
    for (; k < cosets.size() && static_cast<int>(cosets[k].canonical.size()) <= cut; ++k) {
      if (!(values[k] > 0.0))
        throw InvariantViolation("non-positive summand at " +
                                 format_element(r.presentation(), cosets[k]));
      if (cls[k]) {
        sums[*cls[k]].add(values[k]);
        ++counts[*cls[k]];
        classified.add(values[k]);
      } else {
        unclassified.add(values[k]);
        ++n_unclassified;
      }
    }
    rep.cutoffs.push_back(cut);
    for (std::size_t q = 0; q < pants.size(); ++q) {
      CorollaryRow row;
      row.L = cut;
      row.pants_index = q;
      row.sum = sums[q].value();
      row.H = rep.H[q];
      row.defect = row.H - row.sum;
      row.term_count = counts[q];
      rep.rows.push_back(row);
    }
    rep.classified_sum.push_back(classified.value());
    rep.unclassified_sum.push_back(unclassified.value());
    rep.unclassified_count.push_back(n_unclassified);
  }
  return rep;
}

CorollaryRow verify_corollary(const Representation& r, const PantsClass& P, int L) {
  const McShaneReport rep = mcshane_series(r, {P}, L, L > 0 ? L : 1);
  CorollaryRow row = rep.rows.back();
  if (row.defect < -1e-9)
    throw InvariantViolation("corollary partial sum exceeds the gap function");
  return row;
}

}  // namespace orthospec
