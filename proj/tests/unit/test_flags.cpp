#include <doctest.h>

#include <cmath>
#include <limits>

#include "orthospec/errors.hpp"
#include "orthospec/flags.hpp"
#include "orthospec/rep_builder.hpp"
#include "support.hpp"

using namespace orthospec;
using testsupport::rel_err;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

double angle(const Vec& a, const Vec& b) { return line_distance(a, b); }

// Attracting (sign +1) or repelling fixed point of z -> (az+b)/(cz+d) on the
// real projective line, in the chart u/w of vectors (u, w).
// Fixed point of z -> (az+b)/(cz+d) as an angle on the circle RP^1, so infinity is an
// ordinary point.
double mobius_fixed_point(const Mat& m, int sign) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const double tr = a + d;
  const double root = std::sqrt(tr * tr - 4 * (a * d - b * c));
  const double big = tr > 0 ? (tr + root) / 2 : (tr - root) / 2;
  const double lam = sign > 0 ? big : (a * d - b * c) / big;
  // eigenvector (u, v) of m for lam; z = u / v
  double u = b, v = lam - a;
  if (std::hypot(lam - d, c) > std::hypot(u, v)) {
    u = lam - d;
    v = c;
  }
  const double ang = 2 * std::atan2(u, v);
  return ang < 0 ? ang + 2 * M_PI : ang;
}

// +1 when t0 -> t1 -> t2 -> t3 runs once around the circle in increasing direction.
int circle_order(double x, double y, double z, double t) {
  const double v[4] = {x, y, z, t};
  int descents = 0;
  for (int k = 0; k < 4; ++k)
    if (v[(k + 1) % 4] < v[k]) ++descents;
  return descents == 1 ? 1 : descents == 3 ? -1 : 0;
}

Representation diagonal_rep() {
  Mat d(3, 3), g(3, 3);
  d << 2, 0, 0, 0, 1, 0, 0, 0, 0.5;
  g << 2, 1, 0, 1, 1, 0, 0, 0, 1;
  return Representation(surface_presentation(0, 3), {d, g}, "explicit");
}

}  // namespace

TEST_CASE("eigenframe of a diagonal matrix") {
  const auto r = diagonal_rep();
  const Word c1 = r.presentation().parse("c1");
  const auto f = eigenframe(r, c1);
  REQUIRE(f.eigenvalues.size() == 3);
  CHECK(std::abs(f.eigenvalues[0] - 2.0) < 1e-14);
  CHECK(std::abs(f.eigenvalues[1] - 1.0) < 1e-14);
  CHECK(std::abs(f.eigenvalues[2] - 0.5) < 1e-14);
  CHECK((f.vectors - Mat::Identity(3, 3)).norm() < 1e-14);
  const auto fi = eigenframe(r, inverse(c1));
  for (int k = 0; k < 3; ++k) CHECK(angle(fi.vectors.col(k), f.vectors.col(2 - k)) < 1e-14);
  const Flag fl = flag_at(r, attracting(c1));
  CHECK(angle(fl.line, Vec::Unit(3, 0)) < 1e-14);
  CHECK(angle(fl.cov, Vec::Unit(3, 2)) < 1e-14);
}

TEST_CASE("eigenframes and flags are equivariant") {
  const auto r = irreducible_embed(fuchsian_pants(2, 2, 2), 4);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 40; ++k) {
    const Word gamma = cyclic_reduce(testsupport::random_word_upto(rng, 2, 1, 4)).core;
    const Word g = testsupport::random_word_upto(rng, 2, 1, 4);
    if (gamma.empty()) continue;
    const auto f = eigenframe(r, gamma);
    const auto fc = eigenframe(r, mul(g, gamma, inverse(g)));
    for (int j = 0; j < 4; ++j) CHECK(angle(fc.vectors.col(j), r.apply(g, f.vectors.col(j))) < 1e-8);
    const Flag a = flag_at(r, attracting(gamma)), a2 = flag_at(r, attracting(power(gamma, 2)));
    CHECK(angle(a.line, a2.line) < 1e-8);
    CHECK(angle(a.cov, a2.cov) < 1e-8);
    const Flag t = flag_at(r, translate(g, attracting(gamma)));
    CHECK(angle(t.line, r.apply(g, a.line)) < 1e-8);
    // the hyperplane of the attracting point contains every other eigenline
    for (int j = 0; j + 1 < 4; ++j) CHECK(std::abs(a.cov.dot(f.vectors.col(j))) < 1e-8);
    CHECK(std::abs(a.cov.dot(f.vectors.col(3))) > 1e-6);
  }
}

TEST_CASE("classical cross ratio") {
  CHECK(classical_cross_ratio(0, 1, kInf, -1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(classical_cross_ratio(3, 1, 3, -2) == doctest::Approx(1.0));
  CHECK(classical_cross_ratio(2, 2, 5, 7) == doctest::Approx(0.0));
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 200; ++k) {
    double p[4] = {nd(rng), nd(rng), nd(rng), nd(rng)};
    const double a = nd(rng), b = nd(rng), c = nd(rng);
    const double d = (1 + b * c) / a;  // ad - bc = 1
    auto m = [&](double z) { return (a * z + b) / (c * z + d); };
    const double before = classical_cross_ratio(p[0], p[1], p[2], p[3]);
    const double after = classical_cross_ratio(m(p[0]), m(p[1]), m(p[2]), m(p[3]));
    if (std::abs(before) > 1e6) continue;
    CHECK(std::abs(after - before) <= 1e-10 * std::max(1.0, std::abs(before)) * 100);
  }
}

TEST_CASE("flag cross ratio in low dimension") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (int k = 0; k < 200; ++k) {
    const double x = nd(rng), y = nd(rng), z = nd(rng), t = nd(rng);
    // n = 2: the hyperplane of s is the covector killing (s, 1)
    auto cov2 = [](double s) { return Vec((Vec(2) << 1.0, -s).finished()); };
    auto line2 = [](double s) { return Vec((Vec(2) << s, 1.0).finished()); };
    const double c = classical_cross_ratio(x, y, z, t);
    CHECK(rel_err(frak_B(cov2(x), line2(y), cov2(z), line2(t)), c) < 1e-9 * std::max(1.0, std::abs(c)));
    CHECK(rel_err(frak_B(3.0 * cov2(x), -2.0 * line2(y), 0.5 * cov2(z), 7.0 * line2(t)), c) <
          1e-9 * std::max(1.0, std::abs(c)));
    // n = 3 Veronese conic
    auto theta = [](double s) { return Vec((Vec(3) << s * s, -2 * s, 1.0).finished()); };
    auto xi = [](double s) { return Vec((Vec(3) << 1.0, s, s * s).finished()); };
    CHECK(rel_err(frak_B(theta(x), xi(y), theta(z), xi(t)), c * c) < 1e-9 * std::max(1.0, c * c));
  }
}

TEST_CASE("boundary cross ratio normalizations and invariance") {
  const auto r = irreducible_embed(fuchsian_pants(2, 2, 2), 3);
  const auto& p = r.presentation();
  const auto x = attracting(p.parse("c1")), y = attracting(p.parse("c2")),
             z = repelling(p.parse("c1 c2")), t = attracting(p.parse("C2 c1 c1"));
  CHECK(std::abs(B_rho(r, x, x, z, t)) < 1e-12);
  CHECK(std::abs(B_rho(r, x, y, x, t) - 1.0) < 1e-12);
  std::mt19937_64 rng(4);
  const double base = B_rho(r, x, y, z, t);
  for (int k = 0; k < 50; ++k) {
    const Word g = testsupport::random_word_upto(rng, 2, 1, 6);
    const double moved = B_rho(r, translate(g, x), translate(g, y), translate(g, z), translate(g, t));
    CHECK(rel_err(moved, base) < 1e-9);
  }
}

TEST_CASE("a point pairs to zero with itself") {
  const auto r = irreducible_embed(fuchsian_pants(2, 2, 2), 5);
  const auto& p = r.presentation();
  // same point written three ways
  const auto x = attracting(p.parse("c1 c2")), x2 = attracting(p.parse("c1 c2 c1 c2")),
             x3 = repelling(p.parse("C2 C1"));
  const auto z = repelling(p.parse("c2")), t = attracting(p.parse("C1 c2 c2"));
  CHECK(B_rho(r, x, x2, z, t) == 0.0);
  CHECK(B_rho(r, x, x3, z, t) == 0.0);
  CHECK(std::abs(B_rho(r, x, z, x2, t) - 1.0) < 1e-12);
}

TEST_CASE("periods equal lengths") {
  const auto r2 = fuchsian_pants(2, 2, 2);
  const auto& p = r2.presentation();
  CHECK(std::abs(period(r2, p.alpha(0), attracting(p.parse("c2"))) - 2.0) < 1e-9);
  for (int n : {2, 3, 5}) {
    const auto r = irreducible_embed(r2, n);
    std::mt19937_64 rng(5 + n);
    int tested = 0;
    while (tested < 25) {
      const Word g = testsupport::random_word_upto(rng, 2, 1, 8);
      if (cyclic_reduce(g).core.empty()) continue;
      const double l = length(r, g);
      std::vector<double> per;
      for (const char* xs : {"c1", "c2 c2 c1", "C1 c2"}) {
        const BoundaryPoint x = attracting(p.parse(xs));
        if (same_point(r, x, attracting(g)) || same_point(r, x, repelling(g))) continue;
        per.push_back(period(r, g, x));
      }
      for (double v : per) CHECK(std::abs(v - l) <= 1e-9 * (1 + l));
      if (!cyclic_reduce(g).core.empty())
        CHECK(std::abs(period(r, power(g, 2), repelling(p.parse("c2 C1"))) - 2 * l) < 2e-9 * (1 + l));
      ++tested;
    }
  }
}

TEST_CASE("length examples") {
  Mat d(2, 2), g(2, 2);
  d << std::exp(1.0), 0, 0, std::exp(-1.0);
  g << 2, 1, 1, 1;
  const Representation r(surface_presentation(0, 3), {d, g}, "explicit");
  CHECK(std::abs(length(r, r.presentation().parse("c1")) - 2.0) < 1e-14);
  CHECK(std::abs(length(r, r.presentation().parse("C1")) - 2.0) < 1e-14);
  CHECK_THROWS_AS(length(r, Word{}), LoxodromyError);
}

TEST_CASE("cyclic order agrees with the circle order") {
  const auto r = fuchsian_pants(2, 2, 2);
  std::mt19937_64 rng(6);
  int agree = 0, disagree = 0, skipped = 0;
  for (int k = 0; k < 500; ++k) {
    BoundaryPoint q[4];
    double c[4];
    for (int j = 0; j < 4; ++j) {
      Word w;
      do w = testsupport::random_word_upto(rng, 2, 1, 5);
      while (cyclic_reduce(w).core.empty());
      q[j] = {w, (rng() & 1) ? 1 : -1};
      const Mat m = r.eval(w);
      c[j] = mobius_fixed_point(m, q[j].sign);
    }
    const auto got = cyclic_order(r, q[0], q[1], q[2], q[3]);
    const int want = circle_order(c[0], c[1], c[2], c[3]);
    bool close = false;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        const double dd = std::fmod(std::abs(c[a] - c[b]), 2 * M_PI);
        close = close || std::min(dd, 2 * M_PI - dd) < 1e-7;
      }
    if (close) {
      ++skipped;
      continue;
    }
    REQUIRE(got != CyclicOrder::degenerate);
    const int sg = got == CyclicOrder::positive ? 1 : got == CyclicOrder::negative ? -1 : 0;
    if (sg == want) ++agree;
    else if (sg == -want) ++disagree;
    else FAIL("ordered/unordered mismatch");
  }
  // one global orientation convention; the same for every quadruple
  CHECK(std::min(agree, disagree) == 0);
  CHECK(agree + disagree + skipped == 500);
  CHECK(agree + disagree > 300);
}

TEST_CASE("cyclic order under swaps and repeats") {
  const auto r = irreducible_embed(fuchsian_pants(2, 2, 2), 3);
  const auto& p = r.presentation();
  const auto x = attracting(p.parse("c1")), t = repelling(p.parse("c1"));
  auto y = attracting(p.parse("c2")), z = repelling(p.parse("c2"));
  // the c1 fixed points are adjacent, so exactly one placement of the c2 pair is ordered
  const bool first = cyclic_order(r, x, y, z, t) != CyclicOrder::unordered;
  CHECK(first != (cyclic_order(r, x, z, y, t) != CyclicOrder::unordered));
  if (!first) std::swap(y, z);
  const auto o = cyclic_order(r, x, y, z, t);
  REQUIRE((o == CyclicOrder::positive || o == CyclicOrder::negative));
  const auto flipped = o == CyclicOrder::positive ? CyclicOrder::negative : CyclicOrder::positive;
  CHECK(cyclic_order(r, z, y, x, t) == flipped);
  CHECK(cyclic_order(r, x, t, z, y) == flipped);
  CHECK(cyclic_order(r, y, z, t, x) == o);
  CHECK(cyclic_order(r, y, x, z, t) == CyclicOrder::unordered);
  CHECK(cyclic_order(r, x, x, z, t) == CyclicOrder::degenerate);
  CHECK(cyclic_order(r, x, attracting(p.parse("c1 c1")), z, t) == CyclicOrder::degenerate);
}

TEST_CASE("cross ratio axioms on sampled quadruples") {
  for (int n : {2, 3, 4, 5}) {
    const auto r = irreducible_embed(fuchsian_pants(2, 2, 2), n);
    const auto rep = cross_ratio_axioms(r, 300, 99);
    CHECK(rep.quadruples == 300);
    CHECK(rep.max_normalization_error < 1e-9);
    CHECK(rep.max_cocycle_error < 1e-9);
    CHECK(rep.max_symmetry_error < 1e-9);
    CHECK(rep.ordered > 30);
    CHECK(rep.ordered_gt_one_failures == 0);
  }
}
