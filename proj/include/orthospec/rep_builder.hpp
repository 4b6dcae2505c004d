#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthospec/flags.hpp"
#include "orthospec/representation.hpp"

namespace orthospec {

// n = 2 pants group with |tr rho(alpha_i)| = 2 cosh(l_i / 2).
Representation fuchsian_pants(double l1, double l2, double l3);

// n = 2 one-holed torus with tr A = ta, tr B = tb and tr AB = ta tb / 2.
Representation fuchsian_one_holed_torus(double ta, double tb);

// Action of an SL(2) matrix on degree n-1 binary forms, monomials x^{n-1-k} y^k.
Mat sym_power(const Mat& m, int n);
Representation irreducible_embed(const Representation& r, int n_target);

// Explicit matrices; each must have determinant +-1 within 1e-8. For odd n a
// determinant of -1 is fixed by negation, for even n it is rejected.
Representation explicit_representation(const SurfacePresentation& p, std::vector<Mat> gens);

struct RepresentationSpec {
  std::string family;  // pants | one_holed_torus | custom
  int genus = -1;
  int boundaries = -1;
  std::string construction;  // fuchsian | irreducible_embed | explicit
  int n = 2;
  std::vector<double> lengths;
  std::vector<double> traces;
  std::map<std::string, std::vector<double>> matrices;  // generator name -> row-major entries
  std::string zeta;  // optional "word [+|-]"
};

SurfacePresentation presentation_for(const RepresentationSpec& spec);
Representation load_representation(const RepresentationSpec& spec);

struct WordRecord {
  Word word;
  std::vector<double> log_moduli;
  double min_gap_ratio = 0.0;
  double residual = 0.0;
  bool ok = false;
  std::string note;
};

struct ValidationReport {
  std::vector<WordRecord> records;
  double min_gap_ratio = 0.0;
  std::size_t failures = 0;
  bool pass = false;
};

ValidationReport validate_loxodromic(const Representation& r, int L, double margin = kGapMargin);

// Largest relative deviation |rho(uv) - rho(u) rho(v)| over random pairs.
double homomorphism_defect(const Representation& r, int pairs, unsigned long long seed);

enum class Orientation { positive, reversed, mixed };
// n = 2 only: order of (alpha_i^+, x, alpha_i^-) on the circle for sample limit points x.
Orientation circle_orientation(const Representation& r);
// Any n: log B(alpha_i^+, g alpha_j^+, alpha_i^-, g alpha_j^-) > 0 on short cosets.
bool relative_orientation_consistent(const Representation& r);

}  // namespace orthospec
