#include "orthospec/representation.hpp"

#include <cmath>

#include "orthospec/errors.hpp"
#include "orthospec/flags.hpp"

namespace orthospec {

double ScaledMatrix::log_scale() const { return static_cast<double>(exp2) * std::log(2.0); }

long normalize_pow2(Mat& m) {
  const double mx = m.cwiseAbs().maxCoeff();
  if (!(mx > 0.0) || !std::isfinite(mx)) return 0;
  int e = 0;
  std::frexp(mx, &e);
  m = m.unaryExpr([e](double x) { return std::ldexp(x, -e); });
  return e;
}

long normalize_pow2(Vec& v) {
  const double mx = v.cwiseAbs().maxCoeff();
  if (!(mx > 0.0) || !std::isfinite(mx)) return 0;
  int e = 0;
  std::frexp(mx, &e);
  v = v.unaryExpr([e](double x) { return std::ldexp(x, -e); });
  return e;
}

Vec unit_canonical(Vec v) {
  const double nrm = v.norm();
  if (nrm > 0.0) v /= nrm;
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  if (v[k] < 0.0) v = -v;
  return v;
}

Representation::Representation(SurfacePresentation p, std::vector<Mat> gens,
                               std::string construction)
    : pres_(std::move(p)), gens_(std::move(gens)), construction_(std::move(construction)) {
  if (static_cast<int>(gens_.size()) != pres_.rank)
    throw ConfigError("expected " + std::to_string(pres_.rank) + " generator matrices, got " +
                      std::to_string(gens_.size()));
  n_ = static_cast<int>(gens_.front().rows());
  mats_.reserve(2 * gens_.size());
  for (const Mat& g : gens_) {
    if (g.rows() != n_ || g.cols() != n_) throw ConfigError("generator matrices must be n x n");
    Eigen::FullPivLU<Mat> lu(g);
    if (!lu.isInvertible()) throw InvariantViolation("singular generator matrix");
    mats_.push_back(g);
    mats_.push_back(lu.inverse());
  }
  store_ = std::make_shared<FlagStore>();
}

Mat Representation::eval(const Word& w) const {
  Mat m = Mat::Identity(n_, n_);
  for (Letter l : w.letters) m = m * mats_[l];
  return m;
}

ScaledMatrix Representation::eval_scaled(const Word& w) const {
  ScaledMatrix s{Mat::Identity(n_, n_), 0};
  for (Letter l : w.letters) {
    s.m = s.m * mats_[l];
    s.exp2 += normalize_pow2(s.m);
  }
  return s;
}

Vec Representation::apply(const Word& w, const Vec& v) const {
  Vec x = v;
  for (std::size_t k = w.size(); k-- > 0;) {
    x = mats_[w[k]] * x;
    normalize_pow2(x);
  }
  return x / x.norm();
}

Vec Representation::apply_transpose(const Word& w, const Vec& v) const {
  Vec x = v;
  for (Letter l : w.letters) {
    x = mats_[l].transpose() * x;
    normalize_pow2(x);
  }
  return x / x.norm();
}

}  // namespace orthospec
