#include "orthospec/flags.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>

#include "orthospec/errors.hpp"

namespace orthospec {

BoundaryPoint attracting(Word w) { return {std::move(w), 1}; }
BoundaryPoint repelling(Word w) { return {std::move(w), -1}; }

BoundaryPoint translate(const Word& g, const BoundaryPoint& x) {
  return {mul(g, x.word, inverse(g)), x.sign};
}

namespace {

// Diagonal similarity by powers of two (Parlett-Reinsch); returns d with
// b = diag(d)^-1 m diag(d). Eigenvectors of m are diag(d) times those of b.
Vec balance(const Mat& m, Mat& b) {
  const Eigen::Index n = m.rows();
  b = m;
  Vec d = Vec::Ones(n);
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j)
        if (j != i) {
          c += std::fabs(b(j, i));
          r += std::fabs(b(i, j));
        }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / 2.0) {
        c *= 2.0;
        r /= 2.0;
        f *= 2.0;
      }
      while (c >= r * 2.0) {
        c /= 2.0;
        r *= 2.0;
        f /= 2.0;
      }
      if ((c + r) < 0.95 * s) {
        done = false;
        d(i) *= f;
        b.row(i) /= f;
        b.col(i) *= f;
      }
    }
  }
  return d;
}

struct TopPair {
  double lambda;  // real, signed
  Vec vec;
};

// Dominant eigenpair; the dominant eigenvalue must be real and simple.
TopPair top_eigenpair(const Mat& m) {
  Mat bm;
  const Vec d = balance(m, bm);
  Eigen::EigenSolver<Mat> es(bm);
  if (es.info() != Eigen::Success) throw LoxodromyError("eigen solver failed");
  const auto& ev = es.eigenvalues();
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(ev.size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](auto a, auto b) { return std::abs(ev[a]) > std::abs(ev[b]); });
  const auto top = ev[idx[0]];
  const double mod = std::abs(top);
  if (!(mod > 0.0)) throw LoxodromyError("zero spectral radius");
  if (std::fabs(top.imag()) > 1e-10 * mod)
    throw LoxodromyError("dominant eigenvalue is not real");
  if (idx.size() > 1 && mod < (1.0 + kGapMargin) * std::abs(ev[idx[1]]))
    throw LoxodromyError("dominant eigenvalue is not simple");
  Vec v = d.cwiseProduct(es.eigenvectors().col(idx[0]).real());
  return {top.real(), unit_canonical(v)};
}

std::string cache_key(const Word& core, int sign) {
  std::string k(core.letters.begin(), core.letters.end());
  k.push_back(sign > 0 ? '+' : '-');
  return k;
}

// Power iteration on rho(w) (or rho(w)^T) one letter at a time, started from an
// approximate top eigenvector. Products of many letters are far from normal, so a
// dense eigenvector of rho(w) is much less accurate than this.
struct Refined {
  Vec vec;
  double log_eig = 0.0;
  int sign = 1;
};

Refined refine_top(const Representation& r, const Word& w, bool transpose, Vec v) {
  v /= v.norm();
  Refined out{v, 0.0, 1};
  double prev = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    Vec x = out.vec;
    double lg = 0.0;
    auto step = [&](Letter l) {
      x = transpose ? Vec(r.letter_matrix(l).transpose() * x) : Vec(r.letter_matrix(l) * x);
      const double nx = x.norm();
      lg += std::log(nx);
      x /= nx;
    };
    if (transpose)
      for (Letter l : w.letters) step(l);
    else
      for (std::size_t k = w.size(); k-- > 0;) step(w[k]);
    const int sg = x.dot(out.vec) < 0 ? -1 : 1;
    const double change = (sg * x - out.vec).norm();
    out.log_eig = lg;
    out.sign = sg;
    if (!(change < prev) && it > 2) break;
    out.vec = sg * x;
    prev = change;
    if (change < 1e-16) break;
  }
  out.vec = unit_canonical(out.vec);
  return out;
}

Flag core_flag(const Representation& r, const Word& h, int sign) {
  // sign > 0: xi is the top eigenvector of rho(h), theta the top of rho(h^-1)^T.
  // sign < 0: the same with h and h^-1 exchanged.
  const Word hi = inverse(h);
  const Word& fwd = sign > 0 ? h : hi;
  const Word& bwd = sign > 0 ? hi : h;
  const Refined a = refine_top(r, fwd, false, top_eigenpair(r.eval_scaled(fwd).m).vec);
  const Refined b = refine_top(r, bwd, true, top_eigenpair(r.eval_scaled(bwd).m.transpose()).vec);
  Flag f;
  f.line = a.vec;
  f.cov = b.vec;
  // theta rho(bwd) = nu theta, so theta rho(h^sign) = nu^-1 theta
  f.line_log_eig = a.log_eig;
  f.line_sign = a.sign;
  f.cov_log_eig = -b.log_eig;
  f.cov_sign = b.sign;
  if (sign < 0) {
    // eigen data refers to h itself
    f.line_log_eig = -f.line_log_eig;
    f.cov_log_eig = -f.cov_log_eig;
  }
  return f;
}

Flag cached_core_flag(const Representation& r, const Word& core, int sign) {
  const std::string key = cache_key(core, sign);
  FlagStore& store = r.flags();
  {
    std::shared_lock lock(store.mu);
    auto it = store.cache.find(key);
    if (it != store.cache.end()) return it->second;
  }
  Flag f = core_flag(r, core, sign);
  std::unique_lock lock(store.mu);
  store.cache.emplace(key, f);
  return f;
}

// Fixed point as conj . (core, sign) . conj^-1 with the eigen data of the core.
struct PointData {
  Word conj;
  Word core;
  int sign = 1;
  Flag flag;
};

// The core is the shortlex least rotation of the primitive root, so every
// translate of a point shares the core flag of the point itself.
PointData point_data(const Representation& r, const BoundaryPoint& p) {
  // the repelling point of w is the attracting point of w^-1
  const Word w = p.sign > 0 ? reduce(p.word) : inverse(reduce(p.word));
  if (w.empty()) throw LoxodromyError("boundary point of the identity");
  auto d = cyclic_reduce(w);
  const Word root = primitive_root(d.core);
  const std::size_t len = root.size();
  std::size_t best = 0;
  Word best_rot = root;
  for (std::size_t i = 1; i < len; ++i) {
    Word rot;
    rot.letters.reserve(len);
    rot.letters.insert(rot.letters.end(), root.letters.begin() + static_cast<long>(i), root.letters.end());
    rot.letters.insert(rot.letters.end(), root.letters.begin(), root.letters.begin() + static_cast<long>(i));
    if (shortlex_less(rot, best_rot)) {
      best_rot = std::move(rot);
      best = i;
    }
  }
  // root = a b with |a| = best, rotation b a = a^-1 root a
  const Word a(std::vector<Letter>(root.letters.begin(), root.letters.begin() + static_cast<long>(best)));
  Word conj = mul(d.conj, a);
  Flag f = cached_core_flag(r, best_rot, 1);
  return {std::move(conj), std::move(best_rot), 1, std::move(f)};
}

// theta_z(xi_y) for the actual (unnormalized) flags rho(c_z)^-T theta, rho(c_y) xi
// of the two points, as value * exp(log_scale). Powers of either core at the
// ends of the transport word are taken out through their eigenvalues.
struct Pairing {
  double value = 0.0;
  double log_scale = 0.0;
  double relative = 0.0;  // |value| / (|theta| |transported xi|)
  std::string key;        // equal keys mean bit-identical raw values
};

Pairing pairing(const Representation& r, const PointData& z, const PointData& y) {
  const Word h0 = mul(inverse(z.conj), y.conj);
  // shortlex least zc^-k h0 yc^-j over a window that covers every cancellation,
  // so pairings in the same double coset evaluate the same word
  const long kz = static_cast<long>(h0.size() / z.core.size()) + 2;
  Word h = h0;
  long best_k = 0, best_j = 0;
  for (long k = -kz; k <= kz; ++k) {
    const Word hk = mul(power(z.core, -k), h0);
    const long jy = static_cast<long>(hk.size() / y.core.size()) + 2;
    for (long j = -jy; j <= jy; ++j) {
      Word m = mul(hk, power(y.core, -j));
      const bool better = shortlex_less(m, h);
      if (better) {
        h = std::move(m);
        best_k = k;
        best_j = j;
      }
    }
  }
  // theta rho(zc^k) = mu^k theta, rho(yc^j) xi = lambda^j xi
  const double lg = static_cast<double>(best_k) * z.flag.cov_log_eig +
                    static_cast<double>(best_j) * y.flag.line_log_eig;
  int sg = 1;
  if (z.flag.cov_sign < 0 && (best_k % 2 != 0)) sg = -sg;
  if (y.flag.line_sign < 0 && (best_j % 2 != 0)) sg = -sg;
  Pairing out;
  Vec v = y.flag.line;
  double scale = 0.0;
  if (!h.empty()) {
    const ScaledMatrix m = r.eval_scaled(h);
    v = m.m * v;
    scale = m.log_scale();
  }
  const double vn = v.norm();
  // the line of a point lies in its own hyperplane
  const double raw = (h.empty() && z.core == y.core) ? 0.0 : z.flag.cov.dot(v);
  out.value = sg * raw;
  out.log_scale = lg + scale;
  out.relative = std::fabs(raw) / (z.flag.cov.norm() * vn);
  out.key = cache_key(z.core, z.sign) + '|' + std::string(h.letters.begin(), h.letters.end()) + '|' +
            cache_key(y.core, y.sign);
  return out;
}

}  // namespace

EigenFrame eigenframe(const Representation& r, const Word& w) {
  const Word rw = reduce(w);
  if (rw.empty()) throw LoxodromyError("identity has no eigenframe");
  const int n = r.n();
  // spectrum from the cyclic core, vectors carried over by the conjugator
  const CyclicDecomposition cd = cyclic_reduce(rw);
  const ScaledMatrix s = r.eval_scaled(cd.core);
  const ScaledMatrix si = r.eval_scaled(inverse(cd.core));

  auto sorted = [](const Mat& m) {
    Mat bm;
    const Vec d = balance(m, bm);
    Eigen::EigenSolver<Mat> es(bm);
    if (es.info() != Eigen::Success) throw LoxodromyError("eigen solver failed");
    std::vector<std::pair<std::complex<double>, Vec>> pairs;
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
      Vec v = d.cwiseProduct(es.eigenvectors().col(k).real());
      if (std::fabs(es.eigenvalues()[k].imag()) > 1e-10 * std::abs(es.eigenvalues()[k]))
        throw LoxodromyError("complex eigenvalue");
      pairs.emplace_back(es.eigenvalues()[k], v);
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return std::abs(a.first) > std::abs(b.first); });
    return pairs;
  };
  const auto top = sorted(s.m);
  const auto bottom = sorted(si.m);

  // upper half of the spectrum from rho(w), lower half from rho(w)^-1; for odd
  // n the middle modulus is fixed by the determinant
  const int h = (n + 1) / 2;
  EigenFrame f;
  f.vectors.resize(n, n);
  f.log_moduli.resize(static_cast<std::size_t>(n));
  std::vector<double> sg(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    Vec v;
    if (k < h) {
      const auto& pr = top[uk];
      f.log_moduli[uk] = std::log(std::abs(pr.first.real())) + s.log_scale();
      sg[uk] = pr.first.real() < 0 ? -1.0 : 1.0;
      v = pr.second;
    } else {
      const auto& pr = bottom[static_cast<std::size_t>(n - 1 - k)];
      f.log_moduli[uk] = -(std::log(std::abs(pr.first.real())) + si.log_scale());
      sg[uk] = pr.first.real() < 0 ? -1.0 : 1.0;
      v = pr.second;
    }
    f.vectors.col(k) = unit_canonical(cd.conj.empty() ? v : r.apply(cd.conj, v));
  }
  if (n % 2 == 1 && n > 1) {
    double logdet = 0.0;
    for (Letter l : cd.core.letters) logdet += std::log(std::fabs(r.letter_matrix(l).determinant()));
    double rest = 0.0;
    for (int k = 0; k < n; ++k)
      if (k != h - 1) rest += f.log_moduli[static_cast<std::size_t>(k)];
    f.log_moduli[static_cast<std::size_t>(h - 1)] = logdet - rest;
  }
  for (int k = 0; k < n; ++k)
    f.eigenvalues.push_back(sg[static_cast<std::size_t>(k)] * std::exp(f.log_moduli[static_cast<std::size_t>(k)]));
  f.min_gap_ratio = std::numeric_limits<double>::infinity();
  for (int k = 0; k + 1 < n; ++k)
    f.min_gap_ratio = std::min(
        f.min_gap_ratio, std::exp(f.log_moduli[static_cast<std::size_t>(k)] -
                                  f.log_moduli[static_cast<std::size_t>(k + 1)]));
  // residual on the core matrix, in its own scaling
  const double mnorm = s.m.norm();
  for (int k = 0; k < n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const Vec v = k < h ? Vec(top[uk].second) : Vec(bottom[static_cast<std::size_t>(n - 1 - k)].second);
    const Vec vu = v / v.norm();
    const double lam = sg[uk] * std::exp(f.log_moduli[uk] - s.log_scale());
    f.residual = std::max(f.residual, (s.m * vu - lam * vu).norm() / mnorm);
  }
  if (f.min_gap_ratio < 1.0 + kGapMargin) throw LoxodromyError("repeated eigenvalue modulus");
  if (f.residual > kResidualTol) throw LoxodromyError("eigenvector residual too large");
  return f;
}

Flag flag_at(const Representation& r, const BoundaryPoint& p) {
  const PointData d = point_data(r, p);
  if (d.conj.empty()) return d.flag;
  Flag f = d.flag;
  f.line = unit_canonical(r.apply(d.conj, d.flag.line));
  f.cov = unit_canonical(r.apply_transpose(inverse(d.conj), d.flag.cov));
  return f;
}

double line_distance(const Vec& a, const Vec& b) {
  const Vec ua = a / a.norm(), ub = b / b.norm();
  return (ua - ua.dot(ub) * ub).norm();
}

bool same_point(const Representation& r, const BoundaryPoint& x, const BoundaryPoint& y) {
  // exact: fixed points agree iff the primitive roots are conjugate by the same
  // element up to powers of the root
  const PointData a = point_data(r, x), b = point_data(r, y);
  if (a.core != b.core) return false;
  const Word d = mul(inverse(a.conj), b.conj);
  if (d.size() % a.core.size() != 0) return false;
  const long k = static_cast<long>(d.size() / a.core.size());
  return d == power(a.core, k) || d == power(a.core, -k);
}

double classical_cross_ratio(double x, double y, double z, double t) {
  struct H {
    double u, v;
  };
  auto hom = [](double a) { return std::isinf(a) ? H{1.0, 0.0} : H{a, 1.0}; };
  auto det = [](H a, H b) { return a.u * b.v - a.v * b.u; };
  auto nrm = [](H a) { return std::hypot(a.u, a.v); };
  const H X = hom(x), Y = hom(y), Z = hom(z), T = hom(t);
  const double xt = det(X, T), zy = det(Z, Y);
  if (std::fabs(xt) <= kDegenerateTol * nrm(X) * nrm(T) ||
      std::fabs(zy) <= kDegenerateTol * nrm(Z) * nrm(Y))
    throw DegenerateQuadruple("classical cross ratio with x = t or y = z");
  return det(X, Y) * det(Z, T) / (xt * zy);
}

double frak_B(const Vec& r_cov, const Vec& p, const Vec& s_cov, const Vec& q) {
  const double sp = s_cov.dot(p), rq = r_cov.dot(q);
  if (std::fabs(sp) <= kDegenerateTol * s_cov.norm() * p.norm() ||
      std::fabs(rq) <= kDegenerateTol * r_cov.norm() * q.norm())
    throw DegenerateQuadruple("hyperplane meets the line pair degenerately");
  return s_cov.dot(q) * r_cov.dot(p) / (sp * rq);
}

double B_rho(const Representation& r, const BoundaryPoint& x, const BoundaryPoint& y,
             const BoundaryPoint& z, const BoundaryPoint& t) {
  // frak_B on the transported flags, with each pairing evaluated on the reduced
  // transport word so shared conjugators cancel exactly
  const PointData px = point_data(r, x), py = point_data(r, y), pz = point_data(r, z),
                  pt = point_data(r, t);
  const Pairing zt = pairing(r, pz, pt), xy = pairing(r, px, py);
  const Pairing zy = pairing(r, pz, py), xt = pairing(r, px, pt);
  // a denominator equal to a numerator factor cancels exactly, however small
  bool used_zt = false, used_xy = false;
  auto cancels = [&](const Pairing& d) {
    if (d.value == 0.0) return false;
    if (!used_zt && d.key == zt.key) return used_zt = true;
    if (!used_xy && d.key == xy.key) return used_xy = true;
    return false;
  };
  const bool zy_free = cancels(zy), xt_free = cancels(xt);
  if ((!zy_free && zy.relative <= kDegenerateTol) || (!xt_free && xt.relative <= kDegenerateTol))
    throw DegenerateQuadruple("hyperplane meets the line pair degenerately");
  const double mant = zt.value * xy.value / (zy.value * xt.value);
  return mant * std::exp(zt.log_scale + xy.log_scale - zy.log_scale - xt.log_scale);
}

double length(const Representation& r, const Word& gamma) {
  const Word g = reduce(gamma);
  if (cyclic_reduce(g).core.empty()) throw LoxodromyError("length of the identity");
  // log lambda_1 - log lambda_n of the core, matching the eigen data used by B_rho
  const Word core = point_data(r, attracting(g)).core;
  const Flag f = cached_core_flag(r, core, 1);
  const double k = static_cast<double>(cyclic_reduce(g).core.size() / core.size());
  return k * (f.line_log_eig - f.cov_log_eig);
}

double period(const Representation& r, const Word& gamma, const BoundaryPoint& x) {
  const Word g = reduce(gamma);
  const BoundaryPoint gp = attracting(g), gm = repelling(g);
  if (same_point(r, x, gp) || same_point(r, x, gm))
    throw DegenerateQuadruple("period base point is a fixed point of gamma");
  return std::log(std::fabs(B_rho(r, gp, x, gm, translate(g, x))));
}

std::string to_string(CyclicOrder c) {
  switch (c) {
    case CyclicOrder::positive: return "positive";
    case CyclicOrder::negative: return "negative";
    case CyclicOrder::unordered: return "unordered";
    case CyclicOrder::degenerate: return "degenerate";
  }
  return "?";
}

BoundaryPoint default_zeta(const Representation& r, int alpha_index) {
  if (r.zeta_sign() != 0) return {r.zeta_word(), r.zeta_sign()};
  const Word& a = r.presentation().alpha(alpha_index);
  for (int len = 1;; ++len)
    for (const Word& w : words_of_length(r.rank(), len))
      if (!power_exponent(w, a)) return attracting(w);
}

double order_coordinate(const Representation& r, const BoundaryPoint& x) {
  const Word& a = r.presentation().alpha(0);
  const BoundaryPoint ap = attracting(a), am = repelling(a);
  if (same_point(r, x, ap)) return -std::numeric_limits<double>::infinity();
  if (same_point(r, x, am)) return std::numeric_limits<double>::infinity();
  const double b = B_rho(r, ap, x, am, default_zeta(r, 0));
  if (!(b > 0.0)) throw InvariantViolation("point outside the arc (alpha_1^+, alpha_1^-)");
  return std::log(b);
}

CyclicOrder cyclic_order(const Representation& r, const BoundaryPoint& x, const BoundaryPoint& y,
                         const BoundaryPoint& z, const BoundaryPoint& t) {
  const BoundaryPoint* pts[4] = {&x, &y, &z, &t};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (same_point(r, *pts[a], *pts[b])) return CyclicOrder::degenerate;
  double c[4];
  for (int k = 0; k < 4; ++k) c[k] = order_coordinate(r, *pts[k]);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (std::isfinite(c[a]) && std::isfinite(c[b]) && std::fabs(c[a] - c[b]) < 1e-10)
        return CyclicOrder::degenerate;
  int descents = 0;
  for (int k = 0; k < 4; ++k)
    if (c[k] > c[(k + 1) % 4]) ++descents;
  if (descents == 1) return CyclicOrder::positive;
  if (descents == 3) return CyclicOrder::negative;
  return CyclicOrder::unordered;
}

}  // namespace orthospec

namespace orthospec {

namespace {

double rel_err(double a, double b) {
  const double s = std::max(std::fabs(a), std::fabs(b));
  return s == 0.0 ? 0.0 : std::fabs(a - b) / s;
}

}  // namespace

AxiomReport cross_ratio_axioms(const Representation& r, int samples, unsigned long long seed,
                               int max_len) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, max_len), letter(0, 2 * r.rank() - 1), coin(0, 1);
  auto random_point = [&] {
    Word w;
    while (w.empty()) {
      const int k = len(rng);
      Word raw;
      for (int i = 0; i < k; ++i) raw.letters.push_back(static_cast<Letter>(letter(rng)));
      w = reduce(raw);
    }
    return BoundaryPoint{w, coin(rng) ? 1 : -1};
  };
  AxiomReport rep;
  while (rep.quadruples < static_cast<std::size_t>(samples)) {
    BoundaryPoint pts[5];
    Vec lines[5];
    bool distinct = true;
    for (int k = 0; k < 5 && distinct; ++k) {
      pts[k] = random_point();
      lines[k] = flag_at(r, pts[k]).line;
      for (int j = 0; j < k && distinct; ++j)
        distinct = line_distance(lines[j], lines[k]) >= 1e-6;
    }
    if (!distinct) continue;
    const auto& [x, y, z, t, w] = pts;
    double b, e_norm, e_coc, e_sym;
    try {
      b = B_rho(r, x, y, z, t);
      e_norm = std::max(std::fabs(B_rho(r, x, x, z, t)), std::fabs(B_rho(r, x, y, x, t) - 1.0));
      e_coc = std::max(rel_err(b, B_rho(r, x, y, w, t) * B_rho(r, w, y, z, t)),
                       rel_err(b, B_rho(r, x, y, z, w) * B_rho(r, x, w, z, t)));
      e_sym = std::max({rel_err(b, B_rho(r, z, t, x, y)), rel_err(b, 1.0 / B_rho(r, z, y, x, t)),
                        rel_err(b, 1.0 / B_rho(r, x, t, z, y))});
    } catch (const DegenerateQuadruple&) {
      ++rep.rejected;
      continue;
    }
    ++rep.quadruples;
    rep.max_normalization_error = std::max(rep.max_normalization_error, e_norm);
    rep.max_cocycle_error = std::max(rep.max_cocycle_error, e_coc);
    rep.max_symmetry_error = std::max(rep.max_symmetry_error, e_sym);
    try {
      const CyclicOrder c = cyclic_order(r, x, y, z, t);
      if (c == CyclicOrder::degenerate) {
        ++rep.degenerate;
        continue;
      }
      if (c == CyclicOrder::unordered) continue;
      // a negatively ordered quadruple is positively ordered when read backwards
      const BoundaryPoint *p0 = &x, *p1 = &y, *p2 = &z, *p3 = &t;
      if (c == CyclicOrder::negative) std::swap(p1, p3);
      const double gt = B_rho(r, *p0, *p2, *p3, *p1), neg = B_rho(r, *p0, *p1, *p2, *p3);
      ++rep.ordered;
      if (!(gt > 1.0)) ++rep.ordered_gt_one_failures;
      if (!(neg < 0.0)) ++rep.ordered_negative_failures;
    } catch (const DegenerateQuadruple&) {
      ++rep.degenerate;
    }
  }
  return rep;
}

}  // namespace orthospec
