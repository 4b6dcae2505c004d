// One line per acceptance criterion: "criterion N PASS|FAIL <detail>".
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orthospec/basmajian.hpp"
#include "orthospec/flags.hpp"
#include "orthospec/mcshane.hpp"
#include "orthospec/rep_builder.hpp"

using namespace orthospec;

namespace {

// Tolerances
constexpr double kAxiomTol = 1e-9;
constexpr int kAxiomSamples = 1000;
constexpr double kAxiomSeconds = 30;
constexpr double kPeriodTol = 1e-9;
constexpr int kPeriodWords = 200;
constexpr double kOracleTol = 1e-8;
constexpr double kHexagonTol = 1e-10;
constexpr double kScalingTol = 1e-8;
constexpr double kSumSlack = 1e-9;
constexpr double kRelativeDefect = 0.05;
constexpr double kBasmajianSeconds = 300;
constexpr double kGapTol = 1e-9;
constexpr double kOverlapTol = 1e-10;
constexpr double kIntervalTol = 1e-9;
constexpr double kHilbertTol = 1e-10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

int failures = 0;

void report(int n, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("criterion %d %s %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

void guarded(int n, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, false, std::string("exception: ") + e.what());
  }
}

void criterion1() {
  const auto t0 = Clock::now();
  const auto base = fuchsian_pants(2, 2, 2);
  double norm = 0, coc = 0, sym = 0;
  std::size_t ordered = 0, gt_one = 0, negative = 0, degenerate = 0, rejected = 0;
  std::string neg_by_n;
  for (int n : {2, 3, 4, 5}) {
    const auto r = irreducible_embed(base, n);
    const auto rep = cross_ratio_axioms(r, kAxiomSamples, 20240917 + n);
    norm = std::max(norm, rep.max_normalization_error);
    coc = std::max(coc, rep.max_cocycle_error);
    sym = std::max(sym, rep.max_symmetry_error);
    ordered += rep.ordered;
    gt_one += rep.ordered_gt_one_failures;
    negative += rep.ordered_negative_failures;
    degenerate += rep.degenerate;
    rejected += rep.rejected;
    neg_by_n += " n" + std::to_string(n) + ":" + std::to_string(rep.ordered_negative_failures) + "/" +
                std::to_string(rep.ordered);
  }
  const double secs = seconds_since(t0);
  const bool pass = norm <= kAxiomTol && coc <= kAxiomTol && sym <= kAxiomTol && ordered > 0 && gt_one == 0 &&
                    negative == 0 && secs < kAxiomSeconds;
  report(1, pass,
         "normalization " + fmt("%.2e", norm) + " cocycle " + fmt("%.2e", coc) + " symmetry " + fmt("%.2e", sym) +
             " ordered " + std::to_string(ordered) + " B(x,z,t,y)<=1 " + std::to_string(gt_one) +
             " B(x,y,z,t)>=0" + neg_by_n + " degenerate " + std::to_string(degenerate) + " resampled " + std::to_string(rejected) + " time " +
             fmt("%.1fs", secs));
}

void criterion2() {
  const auto base = fuchsian_pants(2, 2, 2);
  const std::array<const char*, 3> xs = {"c1", "c2 c2 c1", "C1 c2"};
  double worst = 0, spread = 0;
  int checked = 0;
  for (int n : {2, 3, 5}) {
    const auto r = irreducible_embed(base, n);
    const auto& p = r.presentation();
    std::mt19937_64 rng(1000 + n);
    std::uniform_int_distribution<int> len(1, 10), letter(0, 3);
    int words = 0;
    while (words < kPeriodWords) {
      Word raw;
      const int k = len(rng);
      for (int i = 0; i < k; ++i) raw.letters.push_back(static_cast<Letter>(letter(rng)));
      const Word g = reduce(raw);
      if (cyclic_reduce(g).core.empty()) continue;
      ++words;
      const double l = length(r, g);
      double lo = INFINITY, hi = -INFINITY;
      for (const char* s : xs) {
        const BoundaryPoint x = attracting(p.parse(s));
        if (same_point(r, x, attracting(g)) || same_point(r, x, repelling(g))) continue;
        const double per = period(r, g, x);
        worst = std::max(worst, std::abs(per - l) / (1 + l));
        lo = std::min(lo, per);
        hi = std::max(hi, per);
        ++checked;
      }
      spread = std::max(spread, (hi - lo) / (1 + l));
    }
  }
  report(2, worst <= kPeriodTol && spread <= kPeriodTol,
         "max |period-length|/(1+length) " + fmt("%.2e", worst) + " max x-spread " + fmt("%.2e", spread) +
             " over " + std::to_string(checked) + " periods");
}

void criterion3() {
  const auto r = fuchsian_pants(2, 2, 2);
  const SummandEngine eng(r);
  const auto os = orthoset_stream(r.presentation(), 6);
  double worst = 0;
  for (const auto& x : os)
    worst = std::max(worst, std::abs(eng.G(x) - basmajian_term(hyperbolic_orthogeodesic_length(r, x))));
  const double c = std::cosh(1.0), s = std::sinh(1.0);
  const double hex = std::acosh((c + c * c) / (s * s));
  const double dhex = std::abs(hyperbolic_orthogeodesic_length(r, OrthosetElement{0, 1, Word{}}) - hex);
  report(3, worst <= kOracleTol && dhex <= kHexagonTol,
         std::to_string(os.size()) + " cosets max |G-2logcoth(d/2)| " + fmt("%.2e", worst) + " hexagon " +
             fmt("%.2e", dhex));
}

void criterion4() {
  const auto base = fuchsian_pants(2, 2, 2);
  const auto os = orthoset_stream(base.presentation(), 5);
  const SummandEngine e2(base);
  std::vector<double> v2;
  for (const auto& x : os) v2.push_back(e2.G(x));
  double worst = 0, p52 = 0;
  for (int n : {3, 4, 5}) {
    const auto r = irreducible_embed(base, n);
    const SummandEngine en(r);
    for (std::size_t k = 0; k < os.size(); ++k) {
      const double g = en.G(os[k]);
      worst = std::max(worst, std::abs(g - (n - 1) * v2[k]) / ((n - 1) * v2[k]));
      if (n == 3)
        p52 = std::max(p52, std::abs(g - n3_closed_form(2 * hyperbolic_orthogeodesic_length(base, os[k]))));
    }
  }
  report(4, os.size() >= 100 && worst <= kScalingTol && p52 <= kScalingTol,
         std::to_string(os.size()) + " cosets max relative scaling error " + fmt("%.2e", worst) +
             " n3-closed-form " + fmt("%.2e", p52));
}

void criterion5() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  for (int n : {2, 3}) {
    const auto r = irreducible_embed(fuchsian_pants(2, 2, 2), n);
    const auto s = basmajian_series(r, 12, 2);
    const double bound = 6.0 * (n - 1);
    bool increasing = true, bounded = true;
    for (std::size_t k = 0; k < s.size(); ++k) {
      bounded = bounded && s[k].total <= s[k].total_length + kSumSlack &&
                std::abs(s[k].total_length - bound) < 1e-9;
      if (k > 0) increasing = increasing && s[k].total > s[k - 1].total;
    }
    const double d0 = s[0].defect, d6 = s[3].defect, d12 = s[6].defect;
    const double rel = d12 / s[6].total_length;
    const bool ok = s.size() == 7 && increasing && bounded && d12 < d6 && d6 < d0 && rel < kRelativeDefect;
    pass = pass && ok;
    detail += "n" + std::to_string(n) + " total(12) " + fmt("%.6f", s[6].total) + "/" + fmt("%g", bound) +
              " relative defect " + fmt("%.2e", rel) + (increasing ? "" : " not increasing") + "; ";
  }
  const double secs = seconds_since(t0);
  report(5, pass && secs < kBasmajianSeconds, detail + "time " + fmt("%.1fs", secs));
}

void criterion6() {
  double worst = 0;
  for (int n : {2, 3}) {
    const auto r = irreducible_embed(fuchsian_pants(2, 2, 2), n);
    const auto cls = pants_enumeration(r.presentation(), 1);
    if (cls.size() != 1) throw std::runtime_error("pants surface must have one class");
    worst = std::max(worst, std::abs(gap_H(r, cls[0]) - length(r, r.presentation().alpha(0))));
  }
  report(6, worst <= kGapTol, "max |H - length(alpha_1)| " + fmt("%.2e", worst));
}

void criterion7() {
  const auto r = fuchsian_pants(2, 2, 2);
  const auto P = pants_enumeration(r.presentation(), 1).at(0);
  bool pants_ok = true;
  double prev = INFINITY;
  std::string pd;
  for (int L : {2, 4, 6, 8}) {
    const auto c = verify_corollary(r, P, L);
    pants_ok = pants_ok && c.sum <= c.H + kSumSlack && c.defect < prev;
    prev = c.defect;
    pd += fmt(" %.3e", c.defect);
  }
  const auto t = fuchsian_one_holed_torus(3, 3);
  const auto cls = pants_enumeration(t.presentation(), 3);
  const auto rep = mcshane_series(t, cls, 8, 2);
  bool torus_ok = true;
  int strict = 0;
  for (std::size_t k = 0; k < cls.size(); ++k) {
    double last = INFINITY, first = INFINITY;
    for (const auto& row : rep.rows) {
      if (row.pants_index != k || row.L < 2) continue;
      if (!std::isfinite(first)) first = row.defect;
      torus_ok = torus_ok && row.defect > 0 && row.defect <= last && row.sum <= row.H + kSumSlack;
      last = row.defect;
    }
    if (last < first) ++strict;
  }
  torus_ok = torus_ok && strict == static_cast<int>(cls.size());
  report(7, pants_ok && torus_ok,
         "pants defects L=2..8" + pd + "; torus " + std::to_string(cls.size()) + " pants, " +
             std::to_string(strict) + " with defect(8) < defect(2)");
}

void criterion8() {
  const auto r = fuchsian_pants(2, 2, 2);
  const McShaneContext ctx(r);
  const SummandEngine eng(r);
  const auto cls = pants_enumeration(r.presentation(), 1);
  const auto J = ctx.interval_J(cls.at(0));
  std::vector<CircleInterval> arcs;
  double len_err = 0, total = 0;
  int outside = 0;
  for (const auto& x : orthoset_stream(r.presentation(), 8)) {
    if (x.from != 0) continue;
    const auto I = ctx.interval_I(x);
    len_err = std::max(len_err, std::abs(I.length - eng.G(x)));
    bool in = false;
    for (const auto& j : J) in = in || ctx.contains(j, I, kContainSlack);
    if (!in) ++outside;
    arcs.push_back(I);
    total += I.length;
  }
  const double overlap = max_overlap(arcs, ctx.ell());
  report(8, overlap < kOverlapTol && len_err <= kIntervalTol && outside == 0 && total <= ctx.ell() + kSumSlack,
         std::to_string(arcs.size()) + " intervals max overlap " + fmt("%.2e", overlap) + " max |len-G| " +
             fmt("%.2e", len_err) + " outside J " + std::to_string(outside) + " total " + fmt("%.9f", total) +
             "/" + fmt("%.9f", ctx.ell()));
}

void criterion9() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    Eigen::Vector2d p, q;
    do p = {u(rng), u(rng)};
    while (p.squaredNorm() >= 0.99);
    do q = {u(rng), u(rng)};
    while (q.squaredNorm() >= 0.99);
    // hyperbolic distance of the Klein model
    const double d = std::acosh((1 - p.dot(q)) / std::sqrt((1 - p.squaredNorm()) * (1 - q.squaredNorm())));
    worst = std::max(worst, std::abs(hilbert_distance_disk(p, q) - 2 * d));
  }
  report(9, worst <= kHilbertTol, "max |h - 2d| " + fmt("%.2e", worst));
}

int run_verify(const std::string& args) {
  const std::string cmd = std::string(VERIFY_EXE) + " " + args + " 2>/dev/null";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_explicit(const std::string& path, const Representation& r, double corrupt) {
  std::ofstream out(path, std::ios::binary);
  out << "[surface]\nfamily = pants\n[rep]\nconstruction = explicit\nn = " << r.n() << "\n";
  char buf[64];
  for (int k = 0; k < r.rank(); ++k) {
    Mat m = r.generator(k);
    if (k == 0) m(0, 0) *= corrupt;
    out << "matrix." << r.presentation().names[static_cast<std::size_t>(k)] << " =";
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        std::snprintf(buf, sizeof buf, " %.17g", m(i, j));
        out << buf;
      }
    out << "\n";
  }
  out << "[run]\nmax_word_length = 6\n";
}

void criterion10() {
  const auto r = fuchsian_pants(2, 2, 2);
  write_explicit("acceptance_good.conf", r, 1.0);
  write_explicit("acceptance_bad.conf", r, 1.1);
  const int a = run_verify("basmajian --config acceptance_good.conf --out acceptance_run1.csv");
  const int b = run_verify("basmajian --config acceptance_good.conf --out acceptance_run2.csv");
  setenv("VERIFY_THREADS", "4", 1);
  const int c = run_verify("basmajian --config acceptance_good.conf --out acceptance_run3.csv");
  unsetenv("VERIFY_THREADS");
  const std::string s1 = slurp("acceptance_run1.csv"), s2 = slurp("acceptance_run2.csv"),
                    s3 = slurp("acceptance_run3.csv");
  const bool same = !s1.empty() && s1 == s2 && s1 == s3;
  const int bad_basmajian = run_verify("basmajian --config acceptance_bad.conf --out acceptance_bad.csv");
  const int bad_validate = run_verify("validate --config acceptance_bad.conf --out acceptance_bad_validate.csv");
  report(10, a == 0 && b == 0 && c == 0 && same && bad_basmajian != 0 && bad_validate != 0,
         "exits " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
             (same ? " byte-identical" : " outputs differ") + "; corrupted entry exits basmajian " +
             std::to_string(bad_basmajian) + " validate " + std::to_string(bad_validate));
}

}  // namespace

int main() {
  guarded(1, criterion1);
  guarded(2, criterion2);
  guarded(3, criterion3);
  guarded(4, criterion4);
  guarded(5, criterion5);
  guarded(6, criterion6);
  guarded(7, criterion7);
  guarded(8, criterion8);
  guarded(9, criterion9);
  guarded(10, criterion10);
  return failures == 0 ? 0 : 1;
}
