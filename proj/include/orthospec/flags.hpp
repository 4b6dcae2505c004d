#pragma once

#include <limits>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthospec/representation.hpp"

namespace orthospec {

// Fixed point of a nontrivial element: sign +1 attracting, -1 repelling.
struct BoundaryPoint {
  Word word;
  int sign = 1;
};

BoundaryPoint attracting(Word w);
BoundaryPoint repelling(Word w);
// g . (w, s) = (g w g^-1, s)
BoundaryPoint translate(const Word& g, const BoundaryPoint& x);

struct Flag {
  Vec line;  // xi
  Vec cov;   // theta, as a covector
  // For the flag of a cyclically reduced word h: rho(h) xi = line_sign e^line_log_eig xi
  // and theta rho(h) = cov_sign e^cov_log_eig theta. Translated flags keep the values of h.
  double line_log_eig = 0.0;
  double cov_log_eig = 0.0;
  int line_sign = 1;
  int cov_sign = 1;
};

// Moduli strictly decreasing. Vectors are columns, unit length.
struct EigenFrame {
  std::vector<double> eigenvalues;
  std::vector<double> log_moduli;
  Mat vectors;
  double residual = 0.0;     // max |Mv - lambda v| / |M| on the scaled matrix
  double min_gap_ratio = 0;  // min |lambda_k| / |lambda_{k+1}|
};

struct FlagStore {
  std::shared_mutex mu;
  std::unordered_map<std::string, Flag> cache;
};

inline constexpr double kGapMargin = 1e-10;
inline constexpr double kResidualTol = 1e-8;
inline constexpr double kPointTol = 1e-8;
inline constexpr double kDegenerateTol = 1e-12;

EigenFrame eigenframe(const Representation& r, const Word& w);
Flag flag_at(const Representation& r, const BoundaryPoint& p);

// sin of the angle between two lines
double line_distance(const Vec& a, const Vec& b);
bool same_point(const Representation& r, const BoundaryPoint& x, const BoundaryPoint& y);

// (x-y)(z-t) / ((x-t)(z-y)); infinities allowed.
double classical_cross_ratio(double x, double y, double z, double t);
// phi_s(q) phi_r(p) / (phi_s(p) phi_r(q))
double frak_B(const Vec& r_cov, const Vec& p, const Vec& s_cov, const Vec& q);
double B_rho(const Representation& r, const BoundaryPoint& x, const BoundaryPoint& y,
             const BoundaryPoint& z, const BoundaryPoint& t);

double length(const Representation& r, const Word& gamma);
double period(const Representation& r, const Word& gamma, const BoundaryPoint& x);

enum class CyclicOrder { positive, negative, unordered, degenerate };
std::string to_string(CyclicOrder c);

// First point (w,+) in shortlex order off the axis of alpha_i, unless overridden.
BoundaryPoint default_zeta(const Representation& r, int alpha_index);
// log B(alpha_1^+, x, alpha_1^-, zeta): a linear coordinate on the limit set,
// -inf at alpha_1^+ and +inf at alpha_1^-.
double order_coordinate(const Representation& r, const BoundaryPoint& x);
CyclicOrder cyclic_order(const Representation& r, const BoundaryPoint& x, const BoundaryPoint& y,
                         const BoundaryPoint& z, const BoundaryPoint& t);

struct AxiomReport {
  std::size_t quadruples = 0;
  double max_normalization_error = 0.0;  // |B(x,x,z,t)|, |B(x,y,x,t) - 1|
  double max_cocycle_error = 0.0;        // relative, both identities
  double max_symmetry_error = 0.0;       // relative, all three symmetries
  std::size_t ordered = 0;               // quadruples classified as cyclically ordered
  std::size_t ordered_gt_one_failures = 0;   // B(x,z,t,y) > 1 violated
  std::size_t ordered_negative_failures = 0; // B(x,y,z,t) < 0 violated
  std::size_t degenerate = 0;
  std::size_t rejected = 0;  // samples where some B_rho hit the degeneracy threshold; resampled
};

// Random quadruples of distinct fixed points of words of length 1..max_len.
AxiomReport cross_ratio_axioms(const Representation& r, int samples, unsigned long long seed,
                               int max_len = 5);

}  // namespace orthospec
