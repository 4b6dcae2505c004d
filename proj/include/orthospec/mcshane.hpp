#pragma once

#include <optional>
#include <vector>

#include "orthospec/basmajian.hpp"
#include "orthospec/flags.hpp"

namespace orthospec {

// Good pair for the distinguished boundary alpha: alpha gamma beta = e.
struct PantsClass {
  Word beta;
  Word gamma;
  friend bool operator==(const PantsClass&, const PantsClass&) = default;
};

// Positively oriented arc of R / ell Z: start in [0, ell), length in (0, ell].
struct CircleInterval {
  double start = 0.0;
  double length = 0.0;
};

// Conjugate into some <alpha_k> (and nontrivial).
bool is_peripheral(const SurfacePresentation& p, const Word& w);

// Least pair under conjugation by alpha^k and the swap (beta, gamma) -> (gamma, gamma beta gamma^-1),
// ordered by total length, then gamma, then beta (shortlex).
PantsClass canonical_pants(const SurfacePresentation& p, int alpha_index, const PantsClass& P);

// Pants: the single class. One-holed torus: one class per unoriented primitive
// slope (p, q) with |p| + |q| <= depth + 1.
std::vector<PantsClass> pants_enumeration(const SurfacePresentation& p, int depth);

class McShaneContext {
 public:
  McShaneContext(const Representation& r, int alpha_index = 0,
                 std::optional<BoundaryPoint> zeta = std::nullopt);

  const Representation& representation() const { return r_; }
  int alpha_index() const { return alpha_; }
  const BoundaryPoint& zeta() const { return zeta_; }
  double ell() const { return ell_; }

  // log B(alpha^+, x, alpha^-, zeta)
  double F(const BoundaryPoint& x) const;
  double wrap(double t) const;

  CircleInterval interval_I(const OrthosetElement& x) const;
  double gap_H(const PantsClass& P) const;
  std::vector<CircleInterval> interval_J(const PantsClass& P) const;
  bool contains(const CircleInterval& outer, const CircleInterval& inner, double slack) const;

 private:
  // B(alpha^+, y, alpha^-, t)
  double B(const BoundaryPoint& y, const BoundaryPoint& t) const;

  const Representation& r_;
  int alpha_;
  BoundaryPoint zeta_;
  BoundaryPoint plus_, minus_;
  double ell_;
};

double F_B(const Representation& r, int alpha_index, const BoundaryPoint& zeta, const BoundaryPoint& x);
CircleInterval interval_I(const Representation& r, int alpha_index, const BoundaryPoint& zeta,
                          const OrthosetElement& x);
double gap_H(const Representation& r, const PantsClass& P);
std::vector<CircleInterval> interval_J(const Representation& r, const PantsClass& P,
                                       const BoundaryPoint& zeta);

inline constexpr double kContainSlack = 1e-10;

// Index of the unique class whose J contains I_x; nullopt when none does.
std::optional<std::size_t> classify(const McShaneContext& ctx, const OrthosetElement& x,
                                    const std::vector<std::vector<CircleInterval>>& J);
std::optional<std::size_t> classify(const Representation& r, const OrthosetElement& x,
                                    const std::vector<PantsClass>& pants, const BoundaryPoint& zeta);

// Largest overlap among arcs of R / ell Z (<= 0 when pairwise disjoint).
double max_overlap(std::vector<CircleInterval> arcs, double ell);

struct CorollaryRow {
  int L = 0;
  std::size_t pants_index = 0;
  double sum = 0.0;
  double H = 0.0;
  double defect = 0.0;
  std::size_t term_count = 0;
};

struct McShaneReport {
  std::vector<PantsClass> pants;
  std::vector<double> H;
  std::vector<std::vector<CircleInterval>> J;
  std::vector<CorollaryRow> rows;               // by L, then pants
  std::vector<double> classified_sum;           // by L
  std::vector<double> unclassified_sum;         // by L
  std::vector<std::size_t> unclassified_count;  // by L
  std::vector<int> cutoffs;
  BoundaryPoint zeta;
  double ell = 0.0;
};

McShaneReport mcshane_series(const Representation& r, const std::vector<PantsClass>& pants, int L,
                             int step = 2);
CorollaryRow verify_corollary(const Representation& r, const PantsClass& P, int L);

}  // namespace orthospec
