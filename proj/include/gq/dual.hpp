#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gq/function.hpp"
#include "gq/grid.hpp"

namespace gq {

// Representation space sampled on t_i = (i0 + i) h.
struct RepSpace {
  enum class Kind { scalar, log_line, line };
  Kind kind = Kind::scalar;
  double h = 1.0;
  long i0 = 0;
  int d = 1;

  double t(int i) const { return (i0 + i) * h; }
  // quadrature weight of sample i: e^t h on the log grid, h on the line
  double weight(int i) const;
};

struct DualPoint {
  int layer = 0;
  double lambda = 0.0;
  double sign = 1.0;               // affine sheet
  Eigen::Vector2d sigma{0.0, 0.0};  // bianchi cross-section point
  Point zeta{};                    // euclidean frequencies / characters
  int nzeta = 0;
  double base_weight = 1.0;        // gamma(lambda) * cell
  int kappa_class = 0;
};

struct DualGrid {
  std::vector<DualPoint> points;
  std::vector<double> kappa{1.0};
  std::vector<std::string> layer_names;

  int size() const { return static_cast<int>(points.size()); }
  double weight(int k) const { return kappa[points[k].kappa_class] * points[k].base_weight; }
  int kappa_classes() const { return static_cast<int>(kappa.size()); }
};

// Grid parameters for one discretization level.
struct ModelParams {
  GroupSpec group;
  std::vector<Axis> axes;
  // rep window: explicit [t_min, t_max] or derived from the grid Nyquist
  bool t_explicit = false;
  double t_min = 0.0, t_max = 0.0;
  double t_span = 6.0;
  double t_margin = 0.2;
  // dual grid: lambda count per component, lambda_max for unbounded families
  int dual_count = 16;
  double lambda_max = 4.0;

  ModelParams refined() const;
};

class PlancherelPlan;

class Model {
 public:
  Model(GroupGrid grid, RepSpace rep, DualGrid dual);

  const GroupSpec& group() const { return grid_->group(); }
  const GridPtr& grid() const { return grid_; }
  const RepSpace& rep() const { return rep_; }
  const DualGrid& dual() const { return dual_; }
  void set_kappa(const std::vector<double>& k);
  int d() const { return rep_.d; }
  int dual_size() const { return dual_.size(); }

  const std::vector<int>& trans_axes() const { return trans_axes_; }
  int shift_axis() const { return shift_axis_; }

  // translation frequencies of row i of pi_k: phase = exp(i eta . x_trans)
  void eta(int k, int i, double* out) const;
  cplx phase(int k, int i, const Point& x) const;
  // t-index shift of pi(x): (pi(x) c)_i = phase_i c_{i + shift}
  double shift(const Point& x) const;
  // amplitude exponent for fractional shifts (1/2 on the log grid)
  double shift_alpha() const { return rep_.kind == RepSpace::Kind::log_line ? 0.5 : 0.0; }

  const Eigen::VectorXd& dm() const { return dm_; }
  const Eigen::VectorXd& dm_sqrt() const { return dm_sqrt_; }

  // t-offset k_s of the s-th node along the shift axis
  long shift_offset(int s) const;

  const PlancherelPlan& plan() const;

 private:
  mutable std::shared_ptr<const PlancherelPlan> plan_;
  GridPtr grid_;
  RepSpace rep_;
  DualGrid dual_;
  std::vector<int> trans_axes_;
  int shift_axis_ = -1;
  Eigen::VectorXd dm_, dm_sqrt_;
};

using ModelPtr = std::shared_ptr<Model>;

ModelPtr build_model(const ModelParams& p);

// bianchi cross-section point for (layer, lambda)
Eigen::Vector2d cross_section(const GroupSpec& g, int layer, double lambda);
// number of times the orbit t -> e^{-t M^T} sigma0 crosses the given layer's
// transversal, by RK4 integration over |t| <= t_max
int count_transversal_crossings(const GroupSpec& g, int layer, const Eigen::Vector2d& sigma0, double t_max,
                                double dt = 1e-3);

// dense pi_k(x) in the orthonormal basis of the weighted rep space
Eigen::MatrixXcd rep_apply(const Model& m, int k, const Point& x);
Eigen::VectorXd duflo_moore(const Model& m, int k);
// conversion to the kernel convention (T phi)(s_i) = sum_j T_ij phi(s_j) w_j
Eigen::MatrixXcd to_kernel_convention(const Model& m, const Eigen::MatrixXcd& coeff);
Eigen::MatrixXcd from_kernel_convention(const Model& m, const Eigen::MatrixXcd& kernel);

// max over dual points of |pi(z) D pi(z)^* - Delta(z)^-1 D| / |Delta(z)^-1 D|, on
// the rep indices that pi(z) keeps inside the window
double semi_invariance_residual(const Model& m, const Point& z);

// Tr(B pi_k(z)) for a d x d matrix B, using the shift structure of pi
cplx trace_times_rep(const Model& m, int k, const Eigen::MatrixXcd& B, const Point& z);

DualGrid euclidean_dual(const std::vector<Axis>& axes);
DualGrid affine_dual();
DualGrid bianchi_dual(const GroupSpec& g, int count, double lambda_max);
// tensor product of dual data: pairs of points, multiplied weights
DualGrid product_dual(const DualGrid& a, const DualGrid& b);

// Plancherel density of the cross-section parametrization with kappa = 1,
// i.e. the analytic kappa relating gamma to |det(sigma', M^T sigma)|/(4 pi^2)
double theoretical_kappa(const GroupSpec& g, int kappa_class);

}  // namespace gq
