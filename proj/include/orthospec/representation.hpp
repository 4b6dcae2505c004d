#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "orthospec/surface.hpp"

namespace orthospec {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// true matrix = m * 2^exp2
struct ScaledMatrix {
  Mat m;
  long exp2 = 0;
  double log_scale() const;
};

struct FlagStore;

class Representation {
 public:
  // gens[k] is the image of generator k. Matrices are taken as given; the
  // builders are responsible for determinant checks.
  Representation(SurfacePresentation p, std::vector<Mat> gens, std::string construction);

  int n() const { return n_; }
  int rank() const { return pres_.rank; }
  const SurfacePresentation& presentation() const { return pres_; }
  const std::string& construction() const { return construction_; }

  const Mat& generator(int k) const { return mats_.at(2 * static_cast<std::size_t>(k)); }
  const Mat& letter_matrix(Letter l) const { return mats_[l]; }
  const std::vector<Mat>& generators() const { return gens_; }

  Mat eval(const Word& w) const;
  ScaledMatrix eval_scaled(const Word& w) const;
  // rho(w) v and rho(w)^T v, normalized to unit length.
  Vec apply(const Word& w, const Vec& v) const;
  Vec apply_transpose(const Word& w, const Vec& v) const;

  // Set when this representation is iota_n of an n = 2 one.
  std::shared_ptr<const Representation> base() const { return base_; }
  void set_base(std::shared_ptr<const Representation> b) { base_ = std::move(b); }

  // Optional override of the reference point used by the boundary coordinate.
  const Word& zeta_word() const { return zeta_word_; }
  int zeta_sign() const { return zeta_sign_; }
  void set_zeta(Word w, int sign) {
    zeta_word_ = std::move(w);
    zeta_sign_ = sign;
  }

  FlagStore& flags() const { return *store_; }

 private:
  int n_ = 0;
  SurfacePresentation pres_;
  std::vector<Mat> gens_;
  std::vector<Mat> mats_;  // indexed by letter
  std::string construction_;
  std::shared_ptr<const Representation> base_;
  Word zeta_word_;
  int zeta_sign_ = 0;
  std::shared_ptr<FlagStore> store_;
};

// Rescale so the largest entry magnitude lies in [0.5, 1); returns the exponent removed.
long normalize_pow2(Mat& m);
long normalize_pow2(Vec& v);
Vec unit_canonical(Vec v);

}  // namespace orthospec
