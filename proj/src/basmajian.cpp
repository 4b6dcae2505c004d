#include "orthospec/basmajian.hpp"

#include <cmath>

#include "orthospec/errors.hpp"
#include "orthospec/parallel.hpp"
#include "orthospec/summation.hpp"

namespace orthospec {

namespace {

Vec wedge(const std::vector<std::pair<int, int>>& pairs, const Vec& u, const Vec& v) {
  Vec w(static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    w[static_cast<Eigen::Index>(k)] = u[a] * v[b] - u[b] * v[a];
  }
  return w;
}

long rescale(Vec& v) { return normalize_pow2(v); }

}  // namespace

SummandEngine::SummandEngine(const Representation& r) : r_(r) {
  const int n = r.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs_.emplace_back(a, b);
  const auto np = static_cast<Eigen::Index>(pairs_.size());
  for (int l = 0; l < 2 * r.rank(); ++l) {
    const Mat& m = r.letter_matrix(static_cast<Letter>(l));
    Mat w(np, np);
    for (Eigen::Index i = 0; i < np; ++i)
      for (Eigen::Index j = 0; j < np; ++j) {
        const auto [a, b] = pairs_[static_cast<std::size_t>(i)];
        const auto [c, d] = pairs_[static_cast<std::size_t>(j)];
        w(i, j) = m(a, c) * m(b, d) - m(a, d) * m(b, c);
      }
    wedge_.push_back(w);
  }
  const auto& p = r.presentation();
  for (int k = 0; k < p.boundary_count; ++k) {
    plus_.push_back(flag_at(r, attracting(p.alpha(k))));
    minus_.push_back(flag_at(r, repelling(p.alpha(k))));
    omega_.push_back(wedge(pairs_, plus_.back().cov, minus_.back().cov));
    biv_.push_back(wedge(pairs_, plus_.back().line, minus_.back().line));
  }
}

double SummandEngine::G(const OrthosetElement& x) const {
  const auto i = static_cast<std::size_t>(x.from), j = static_cast<std::size_t>(x.to);
  Vec p = plus_[j].line, q = minus_[j].line, P = biv_[j];
  long ep = 0, eq = 0, eP = 0;
  const Word& g = x.canonical;
  for (std::size_t k = g.size(); k-- > 0;) {
    const Letter l = g[k];
    const Mat& m = r_.letter_matrix(l);
    p = m * p;
    q = m * q;
    P = wedge_[l] * P;
    ep += rescale(p);
    eq += rescale(q);
    eP += rescale(P);
  }
  const Vec& rc = plus_[i].cov;
  const Vec& sc = minus_[i].cov;
  const double sp = sc.dot(p), rq = rc.dot(q);
  if (std::fabs(sp) <= kDegenerateTol * sc.norm() * p.norm() ||
      std::fabs(rq) <= kDegenerateTol * rc.norm() * q.norm())
    throw DegenerateQuadruple("degenerate summand quadruple");
  const double ratio = std::ldexp(omega_[i].dot(P) / (sp * rq), static_cast<int>(eP - ep - eq));
  return std::log1p(ratio);
}

double G(const Representation& r, const OrthosetElement& x) { return SummandEngine(r).G(x); }

namespace {

struct Homog {
  double u, v;
};

// Fixed points of z -> (az + b)/(cz + d), stable in both roots.
std::pair<Homog, Homog> fixed_points(const Mat& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double disc = (d - a) * (d - a) + 4.0 * b * c;
  if (disc <= 0.0) throw LoxodromyError("Moebius map is not hyperbolic");
  const double s = (a - d) >= 0.0 ? 1.0 : -1.0;
  const double t = (a - d) + s * std::sqrt(disc);
  return {Homog{t, 2.0 * c}, Homog{-2.0 * b, t}};
}

Homog act(const Representation& r, const Word& g, Homog z) {
  Vec v(2);
  v << z.u, z.v;
  v = r.apply(g, v);
  return {v[0], v[1]};
}

}  // namespace

double hyperbolic_orthogeodesic_length(const Representation& r, const OrthosetElement& x) {
  if (r.n() != 2) throw ConfigError("orthogeodesic length needs n = 2");
  const auto& p = r.presentation();
  const auto [a1, a2] = fixed_points(r.eval(p.alpha(x.from)));
  auto [b1, b2] = fixed_points(r.eval(p.alpha(x.to)));
  b1 = act(r, x.canonical, b1);
  b2 = act(r, x.canonical, b2);
  // send a1 -> 0 and a2 -> infinity
  auto T = [&](Homog z) {
    return (z.u * a1.v - a1.u * z.v) / (z.u * a2.v - a2.u * z.v);
  };
  const double s1 = T(b1), s2 = T(b2);
  if (!(s1 * s2 > 0.0)) throw InvariantViolation("axes are linked or touching");
  return std::acosh(std::fabs(s1 + s2) / std::fabs(s1 - s2));
}

double basmajian_term(double d) {
  const double e = std::exp(-d);
  return 2.0 * (std::log1p(e) - std::log1p(-e));
}

double n3_closed_form(double l) {
  const double e = std::exp(-l / 2.0);
  return 4.0 * (std::log1p(e) - std::log1p(-e));
}

std::optional<double> closed_form(const Representation& r, const OrthosetElement& x) {
  if (r.n() == 2) return basmajian_term(hyperbolic_orthogeodesic_length(r, x));
  if (auto b = r.base()) {
    if (auto v = closed_form(*b, x)) return (r.n() - 1) * *v;
  }
  return std::nullopt;
}

std::vector<SummandRecord> summands(const Representation& r, int L, bool with_closed_form) {
  const auto os = orthoset_stream(r.presentation(), L);
  const SummandEngine eng(r);
  std::vector<SummandRecord> out(os.size());
  parallel_for(os.size(), [&](std::size_t k) {
    SummandRecord& rec = out[k];
    rec.element = os[k];
    rec.value = eng.G(os[k]);
    rec.word_length = static_cast<int>(os[k].canonical.size());
    if (with_closed_form) rec.closed_form = closed_form(r, os[k]);
  });
  return out;
}

std::vector<PartialSumReport> basmajian_series(const Representation& r, int L, int step) {
  if (L < 0) throw ConfigError("max word length must be non-negative");
  if (step < 1) step = 1;
  const auto& p = r.presentation();
  const int m = p.boundary_count;
  const auto os = orthoset_stream(p, L);
  const SummandEngine eng(r);
  std::vector<double> values(os.size());
  parallel_for(os.size(), [&](std::size_t k) { values[k] = eng.G(os[k]); });

  std::vector<double> lengths;
  CompensatedSum total_len;
  for (int k = 0; k < m; ++k) {
    lengths.push_back(length(r, p.alpha(k)));
    total_len.add(lengths.back());
  }

  std::vector<CompensatedSum> sums(static_cast<std::size_t>(m));
  std::vector<std::size_t> counts(static_cast<std::size_t>(m), 0);
  std::vector<PartialSumReport> out;
  std::size_t k = 0;
  for (int cut = 0; cut <= L; cut += step) {
    for (; k < os.size() && static_cast<int>(os[k].canonical.size()) <= cut; ++k) {
      if (!(values[k] > 0.0))
        throw InvariantViolation("non-positive summand " + std::to_string(values[k]) + " at " +
                                 format_element(p, os[k]));
      sums[static_cast<std::size_t>(os[k].from)].add(values[k]);
      ++counts[static_cast<std::size_t>(os[k].from)];
    }
    PartialSumReport rep;
    rep.L = cut;
    CompensatedSum tot;
    for (int b = 0; b < m; ++b) {
      rep.per_boundary.push_back(sums[static_cast<std::size_t>(b)].value());
      rep.per_boundary_count.push_back(counts[static_cast<std::size_t>(b)]);
      tot.add(rep.per_boundary.back());
      rep.term_count += counts[static_cast<std::size_t>(b)];
    }
    rep.total = tot.value();
    rep.boundary_lengths = lengths;
    rep.total_length = total_len.value();
    rep.defect = rep.total_length - rep.total;
    out.push_back(std::move(rep));
  }
  return out;
}

PartialSumReport basmajian_partial_sum(const Representation& r, int L) {
  return basmajian_series(r, L, L > 0 ? L : 1).back();
}

double hilbert_distance_disk(const Eigen::Vector2d& p, const Eigen::Vector2d& q) {
  if (!(p.squaredNorm() < 1.0) || !(q.squaredNorm() < 1.0))
    throw ConfigError("points must lie strictly inside the unit disk");
  const Eigen::Vector2d d = q - p;
  const double dd = d.squaredNorm();
  if (dd == 0.0) return 0.0;
  // |p + t d|^2 = 1, roots t_a < 0 < 1 < t_b; p sits at t = 0, q at t = 1
  const double b = p.dot(d), c = p.squaredNorm() - 1.0;
  const double root = std::sqrt(b * b - dd * c);
  const double ta = b >= 0.0 ? (-b - root) / dd : c / (-b + root);
  const double tb = b >= 0.0 ? c / (-b - root) : (-b + root) / dd;
  // B(a, q, b, p) = (a - q)(b - p) / ((a - p)(b - q))
  return std::log(((ta - 1.0) * tb) / (ta * (tb - 1.0)));
}

}  // namespace orthospec
