#include "orthospec/rep_builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "orthospec/errors.hpp"

namespace orthospec {

namespace {

// [[p q][r s]] with trace y and tr(diag(lam, 1/lam) B) = z, det 1.
Mat second_generator(double lam, double y, double z) {
  const double p = (z - y / lam) / (lam - 1.0 / lam);
  const double s = y - p;
  const double qr = p * s - 1.0;
  const double root = std::sqrt(std::fabs(qr));
  Mat b(2, 2);
  b << p, root, (qr >= 0.0 ? root : -root), s;
  return b;
}

double hyperbolic_eigenvalue(double trace) {
  const double disc = trace * trace - 4.0;
  if (disc <= 0.0) throw ConfigError("trace must exceed 2 in absolute value");
  return (trace + std::copysign(std::sqrt(disc), trace)) / 2.0;
}

Representation conjugate_by_reflection(const Representation& r) {
  Mat d = Mat::Identity(2, 2);
  d(1, 1) = -1.0;
  std::vector<Mat> gens;
  for (const Mat& g : r.generators()) gens.push_back(d * g * d);
  return Representation(r.presentation(), std::move(gens), r.construction());
}

// The constructions fix the marking, so a reversed circle order is undone by
// an orientation-reversing conjugation.
Representation orient_fuchsian(Representation r) {
  const Orientation o = circle_orientation(r);
  if (o == Orientation::positive) return r;
  if (o == Orientation::reversed) {
    Representation c = conjugate_by_reflection(r);
    if (circle_orientation(c) == Orientation::positive) return c;
  }
  throw InvariantViolation("Fuchsian construction has inconsistent boundary orientation");
}

void poly_mul(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& out) {
  out.assign(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
}

double circle_angle(const Vec& v) {
  double u = v[0], w = v[1];
  if (w < 0.0 || (w == 0.0 && u < 0.0)) {
    u = -u;
    w = -w;
  }
  return std::atan2(u, w);  // monotone in u / w, with infinity last
}

bool ccw(double a, double b, double c) { return (a < b && b < c) || (b < c && c < a) || (c < a && a < b); }

}  // namespace

Representation fuchsian_pants(double l1, double l2, double l3) {
  if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0))
    throw ConfigError("pants boundary lengths must be positive");
  const double x = 2.0 * std::cosh(l1 / 2.0);
  const double y = 2.0 * std::cosh(l2 / 2.0);
  const double z = -2.0 * std::cosh(l3 / 2.0);
  const double lam = hyperbolic_eigenvalue(x);
  Mat a(2, 2);
  a << lam, 0.0, 0.0, 1.0 / lam;
  Representation r(surface_presentation(0, 3), {a, second_generator(lam, y, z)}, "fuchsian");
  return orient_fuchsian(std::move(r));
}

Representation fuchsian_one_holed_torus(double ta, double tb) {
  const double x = ta, y = tb, z = ta * tb / 2.0;
  const double kappa = x * x + y * y + z * z - x * y * z - 2.0;
  if (!(kappa <= -2.0 - 1e-6))
    throw ConfigError("traces (" + std::to_string(ta) + ", " + std::to_string(tb) +
                      ") give commutator trace " + std::to_string(kappa) +
                      " > -2: boundary is not loxodromic");
  const double lam = hyperbolic_eigenvalue(x);
  Mat a(2, 2);
  a << lam, 0.0, 0.0, 1.0 / lam;
  Representation r(surface_presentation(1, 1), {a, second_generator(lam, y, z)}, "fuchsian");
  return orient_fuchsian(std::move(r));
}

Mat sym_power(const Mat& m, int n) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  Mat out = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    // (a + c t)^{n-1-k} (b + d t)^k, t marking the second variable
    std::vector<double> poly{1.0}, tmp;
    for (int e = 0; e < n - 1 - k; ++e) {
      poly_mul(poly, {a, c}, tmp);
      poly.swap(tmp);
    }
    for (int e = 0; e < k; ++e) {
      poly_mul(poly, {b, d}, tmp);
      poly.swap(tmp);
    }
    for (int i = 0; i < n; ++i) out(i, k) = poly[static_cast<std::size_t>(i)];
  }
  const double det = out.determinant();
  if (det < 0.0 && n % 2 == 0) throw InvariantViolation("negative determinant in even dimension");
  out /= std::copysign(std::pow(std::fabs(det), 1.0 / n), det);
  return out;
}

Representation irreducible_embed(const Representation& r, int n_target) {
  if (r.n() != 2) throw ConfigError("irreducible_embed needs an n = 2 representation");
  if (n_target < 2) throw ConfigError("target dimension must be at least 2");
  if (n_target == 2) return r;
  std::vector<Mat> gens;
  for (const Mat& g : r.generators()) gens.push_back(sym_power(g, n_target));
  Representation out(r.presentation(), std::move(gens), "irreducible_embed");
  out.set_base(std::make_shared<Representation>(r));
  if (r.zeta_sign() != 0) out.set_zeta(r.zeta_word(), r.zeta_sign());
  return out;
}

Representation explicit_representation(const SurfacePresentation& p, std::vector<Mat> gens) {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Mat& g = gens[k];
    const double det = g.determinant();
    const long n = g.rows();
    if (std::fabs(det - 1.0) <= 1e-8) continue;
    if (std::fabs(det + 1.0) <= 1e-8) {
      if (n % 2 == 0)
        throw InvariantViolation("generator " + p.names[k] +
                                 " has determinant -1 in even dimension");
      g = -g;
      continue;
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "generator " << p.names[k] << " has determinant " << det << ", expected 1";
    throw InvariantViolation(msg.str());
  }
  Representation r(p, std::move(gens), "explicit");
  if (homomorphism_defect(r, 64, 7) > 1e-10)
    throw InvariantViolation("evaluation fails the homomorphism spot check");
  if (r.n() == 2) {
    const Orientation o = circle_orientation(r);
    if (o == Orientation::reversed) {
      Representation flipped(with_inverted_marking(p), r.generators(), "explicit");
      if (circle_orientation(flipped) != Orientation::positive)
        throw InvariantViolation("boundary orientation fails in both directions");
      r = flipped;
    } else if (o == Orientation::mixed) {
      throw InvariantViolation("boundary orientation fails in both directions");
    }
  }
  if (!relative_orientation_consistent(r))
    throw InvariantViolation("peripheral orientations are not mutually consistent");
  return r;
}

SurfacePresentation presentation_for(const RepresentationSpec& spec) {
  if (spec.family == "pants") return surface_presentation(0, 3);
  if (spec.family == "one_holed_torus") return surface_presentation(1, 1);
  if (spec.family == "custom") {
    if (spec.genus < 0 || spec.boundaries < 0)
      throw ConfigError("custom surface needs surface.genus and surface.boundaries");
    return surface_presentation(spec.genus, spec.boundaries);
  }
  throw ConfigError("unknown surface.family '" + spec.family + "'");
}

namespace {

Representation fuchsian_from(const RepresentationSpec& spec) {
  if (spec.family == "pants") {
    if (spec.lengths.size() != 3) throw ConfigError("rep.lengths needs three values for pants");
    return fuchsian_pants(spec.lengths[0], spec.lengths[1], spec.lengths[2]);
  }
  if (spec.family == "one_holed_torus") {
    if (spec.traces.size() != 2)
      throw ConfigError("rep.traces needs two values for one_holed_torus");
    return fuchsian_one_holed_torus(spec.traces[0], spec.traces[1]);
  }
  throw ConfigError("Fuchsian construction supports pants and one_holed_torus only");
}

}  // namespace

Representation load_representation(const RepresentationSpec& spec) {
  const SurfacePresentation pres = presentation_for(spec);
  std::optional<Representation> rep;
  if (spec.construction == "fuchsian") {
    if (spec.n != 2) throw ConfigError("rep.construction = fuchsian requires rep.n = 2");
    rep = fuchsian_from(spec);
  } else if (spec.construction == "irreducible_embed") {
    rep = irreducible_embed(fuchsian_from(spec), spec.n);
  } else if (spec.construction == "explicit") {
    std::vector<Mat> gens;
    for (const std::string& name : pres.names) {
      auto it = spec.matrices.find(name);
      if (it == spec.matrices.end()) throw ConfigError("missing rep.matrix." + name);
      const auto& e = it->second;
      if (static_cast<long>(e.size()) != static_cast<long>(spec.n) * spec.n)
        throw ConfigError("rep.matrix." + name + " needs " + std::to_string(spec.n * spec.n) +
                          " entries, got " + std::to_string(e.size()));
      Mat m(spec.n, spec.n);
      for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j) m(i, j) = e[static_cast<std::size_t>(i * spec.n + j)];
      gens.push_back(m);
    }
    for (const auto& [name, _] : spec.matrices)
      if (std::find(pres.names.begin(), pres.names.end(), name) == pres.names.end())
        throw ConfigError("rep.matrix." + name + " is not a generator of this surface");
    rep = explicit_representation(pres, std::move(gens));
  } else {
    throw ConfigError("unknown rep.construction '" + spec.construction + "'");
  }
  if (!spec.zeta.empty()) {
    std::string text = spec.zeta;
    int sign = 1;
    const auto last = text.find_last_not_of(" \t");
    if (last != std::string::npos && (text[last] == '+' || text[last] == '-')) {
      sign = text[last] == '+' ? 1 : -1;
      text.erase(last);
    }
    const Word w = rep->presentation().parse(text);
    if (w.empty() || power_exponent(w, rep->presentation().alpha(0)))
      throw ConfigError("run.zeta must not be a fixed point of alpha_1");
    rep->set_zeta(w, sign);
  }
  return *rep;
}

ValidationReport validate_loxodromic(const Representation& r, int L, double margin) {
  ValidationReport rep;
  rep.min_gap_ratio = std::numeric_limits<double>::infinity();
  enumerate_words(r.rank(), L, [&](const Word& w) {
    if (w.empty()) return;
    WordRecord rec;
    rec.word = w;
    try {
      const EigenFrame f = eigenframe(r, w);
      rec.log_moduli = f.log_moduli;
      rec.min_gap_ratio = f.min_gap_ratio;
      rec.residual = f.residual;
      rec.ok = f.min_gap_ratio >= 1.0 + margin;
      if (!rec.ok) rec.note = "spectral gap below margin";
    } catch (const LoxodromyError& e) {
      rec.ok = false;
      rec.min_gap_ratio = 1.0;
      rec.note = e.what();
    }
    rep.min_gap_ratio = std::min(rep.min_gap_ratio, rec.min_gap_ratio);
    if (!rec.ok) ++rep.failures;
    rep.records.push_back(std::move(rec));
  });
  rep.pass = rep.failures == 0;
  return rep;
}

double homomorphism_defect(const Representation& r, int pairs, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 4), letter(0, 2 * r.rank() - 1);
  auto random_word = [&] {
    Word w;
    const int k = len(rng);
    for (int i = 0; i < k; ++i) w.letters.push_back(static_cast<Letter>(letter(rng)));
    return reduce(w);
  };
  double worst = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const Word u = random_word(), v = random_word();
    const Mat mu = r.eval(u), mv = r.eval(v);
    const double d = (r.eval(mul(u, v)) - mu * mv).norm() / (mu.norm() * mv.norm());
    worst = std::max(worst, d);
  }
  return worst;
}

Orientation circle_orientation(const Representation& r) {
  if (r.n() != 2) throw ConfigError("circle orientation needs n = 2");
  const auto& p = r.presentation();
  std::vector<Word> samples;
  for (int k = 0; k < p.rank; ++k) samples.push_back(Word{make_letter(k, 1)});
  for (const Word& a : p.peripheral) samples.push_back(a);
  int pos = 0, neg = 0;
  for (int i = 0; i < p.boundary_count; ++i) {
    const double ap = circle_angle(flag_at(r, attracting(p.alpha(i))).line);
    const double am = circle_angle(flag_at(r, repelling(p.alpha(i))).line);
    for (const Word& w : samples) {
      for (int s : {1, -1}) {
        const Vec line = flag_at(r, {w, s}).line;
        if (line_distance(line, flag_at(r, attracting(p.alpha(i))).line) < kPointTol ||
            line_distance(line, flag_at(r, repelling(p.alpha(i))).line) < kPointTol)
          continue;
        (ccw(ap, circle_angle(line), am) ? pos : neg) += 1;
      }
    }
  }
  if (neg == 0) return Orientation::positive;
  if (pos == 0) return Orientation::reversed;
  return Orientation::mixed;
}

bool relative_orientation_consistent(const Representation& r) {
  const auto& p = r.presentation();
  for (const OrthosetElement& x : orthoset_stream(p, 2)) {
    const Word beta = mul(x.canonical, p.alpha(x.to), inverse(x.canonical));
    const double b = B_rho(r, attracting(p.alpha(x.from)), attracting(beta),
                           repelling(p.alpha(x.from)), repelling(beta));
    if (!(b > 1.0)) return false;
  }
  return true;
}

}  // namespace orthospec
