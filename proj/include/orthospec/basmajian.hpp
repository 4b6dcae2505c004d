#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "orthospec/flags.hpp"
#include "orthospec/representation.hpp"
#include "orthospec/surface.hpp"

namespace orthospec {

// Evaluates G(H_i g H_j) = log B(alpha_i^+, g alpha_j^+, alpha_i^-, g alpha_j^-).
//
// B - 1 is the pairing of the 2-form phi_r ^ phi_s with the bivector
// rho(g)(xi_j^+ ^ xi_j^-), which is carried through the word by the second
// exterior power of the generators. This avoids the cancellation of forming
// B and subtracting 1 when g alpha_j^+- are very close.
class SummandEngine {
 public:
  explicit SummandEngine(const Representation& r);
  double G(const OrthosetElement& x) const;
  const Representation& representation() const { return r_; }

 private:
  const Representation& r_;
  std::vector<std::pair<int, int>> pairs_;  // basis e_a ^ e_b, a < b
  std::vector<Mat> wedge_;                  // by letter
  std::vector<Flag> plus_, minus_;          // flags of alpha_k^+-
  std::vector<Vec> omega_;                  // theta(alpha_k^+) ^ theta(alpha_k^-)
  std::vector<Vec> biv_;                    // xi(alpha_k^+) ^ xi(alpha_k^-)
};

double G(const Representation& r, const OrthosetElement& x);

struct SummandRecord {
  OrthosetElement element;
  double value = 0.0;
  std::optional<double> closed_form;
  int word_length = 0;
};

// n = 2: hyperbolic distance between the axes of alpha_i and g alpha_j g^-1,
// from their fixed points on the circle.
double hyperbolic_orthogeodesic_length(const Representation& r, const OrthosetElement& x);
// 2 log coth(d / 2)
double basmajian_term(double d);
// 2 log coth(d/2) for n = 2, (n-1) times the base value for an iota_n embedding.
std::optional<double> closed_form(const Representation& r, const OrthosetElement& x);

std::vector<SummandRecord> summands(const Representation& r, int L, bool with_closed_form);

struct PartialSumReport {
  int L = 0;
  std::vector<double> per_boundary;
  std::vector<std::size_t> per_boundary_count;
  double total = 0.0;
  std::vector<double> boundary_lengths;
  double total_length = 0.0;
  double defect = 0.0;
  std::size_t term_count = 0;
};

PartialSumReport basmajian_partial_sum(const Representation& r, int L);
// Reports at L' = 0, step, 2 step, ... <= L from one enumeration.
std::vector<PartialSumReport> basmajian_series(const Representation& r, int L, int step = 2);

// Hilbert distance in the unit disk, log B(a, q, b, p) with a, b the chord ends.
double hilbert_distance_disk(const Eigen::Vector2d& p, const Eigen::Vector2d& q);
// 4 log coth(l / 4)
double n3_closed_form(double l);

}  // namespace orthospec
