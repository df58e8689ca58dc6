#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gq/dual.hpp"

namespace gq {

// RepMatrix per dual point
using DualField = std::vector<Eigen::MatrixXcd>;

// Node ordering and axis data for the separable evaluation of
// sum_x m(x) w(x) pi_xi(x) D^{1/2} and its adjoint.
class PlancherelPlan {
 public:
  explicit PlancherelPlan(const Model& m);

  // input: values already multiplied by the Haar weights
  DualField forward_weighted(const Model& m, const Eigen::VectorXcd& mw) const;
  Eigen::VectorXcd adjoint(const Model& m, const DualField& F) const;

 private:
  void exps(const Model& m, int k, int i, std::vector<Eigen::VectorXcd>& E) const;

  int ns_ = 1;
  std::vector<int> dims_;
  std::vector<std::vector<double>> coords_;
  std::vector<int> perm_;
  std::vector<long> offsets_;
};

Eigen::MatrixXcd fourier_op(const Model& m, int k, const SampledFunction& w);
DualField plancherel_forward(const Model& m, const SampledFunction& w);
DualField plancherel_forward(const Model& m, const Eigen::VectorXcd& values);
// inversion formula w(x) = sum_xi nu_xi Tr(F(xi) D^{1/2} pi_xi(x)^*); the
// discrete adjoint of plancherel_forward
SampledFunction plancherel_inverse(const Model& m, const DualField& F);
Eigen::VectorXcd plancherel_inverse_values(const Model& m, const DualField& F);

DualField zero_field(const Model& m);
cplx dual_inner(const Model& m, const DualField& a, const DualField& b);
double dual_norm(const Model& m, const DualField& a);

struct Calibration {
  std::vector<double> kappa;
  std::vector<double> residuals;  // Parseval residual per test after calibration
};

// least-squares kappa per class from relative Parseval residuals; sets it on m
Calibration calibrate(Model& m, const std::vector<SampledFunction>& tests);
double parseval_residual(const Model& m, const SampledFunction& w);

}  // namespace gq
