#pragma once

#include <array>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "gq/group.hpp"

namespace gq {

enum class Scale { linear, geometric, periodic };

// One chart coordinate. Nodes sit at u_i = x0 + i*h in the internal
// coordinate, which is log a for geometric axes and the chart value otherwise.
struct Axis {
  Scale scale = Scale::linear;
  double x0 = 0.0;
  double h = 1.0;
  int count = 1;

  // [min, max] split into count cells (midpoints as nodes); periodic axes use
  // count nodes starting at min with period max - min.
  static Axis cells(Scale scale, double min, double max, int count);
  // count nodes on the lattice h*Z, symmetric about the origin
  static Axis centered(Scale scale, double h, int count);

  double u(int i) const { return x0 + i * h; }
  double coord(int i) const;
  double internal(double chart) const;
  double period() const { return count * h; }
  bool anchored() const;
  long kmin() const;
  Axis refined() const;
};

struct Stencil {
  int n = 0;
  std::array<int, 16> idx{};
  std::array<double, 16> w{};
};

class GroupGrid {
 public:
  GroupGrid(const GroupSpec& g, std::vector<Axis> axes);

  const GroupSpec& group() const { return g_; }
  const std::vector<Axis>& axes() const { return axes_; }
  int dim() const { return static_cast<int>(axes_.size()); }
  int size() const { return size_; }
  const Point& node(int i) const { return nodes_[i]; }
  double weight(int i) const { return weights_[i]; }
  const Eigen::VectorXd& weights() const { return weights_; }
  int stride(int axis) const { return strides_[axis]; }

  std::array<int, kMaxDim> multi_index(int i) const;
  int flat(const std::array<int, kMaxDim>& k) const;

  // multilinear weights of the nodes surrounding x; nodes hit within 1e-9 (in
  // units of h) give a single entry, points outside a non-periodic box give none
  Stencil stencil(const Point& x) const;
  // node index of x if x is a node, else -1
  int locate(const Point& x) const;

  GroupGrid refined() const;

 private:
  GroupSpec g_;
  std::vector<Axis> axes_;
  std::array<int, kMaxDim> strides_{};
  int size_ = 0;
  std::vector<Point> nodes_;
  Eigen::VectorXd weights_;
};

using GridPtr = std::shared_ptr<const GroupGrid>;

// default axis layout check: affine a geometric, bianchi c linear
void validate_axes(const GroupSpec& g, const std::vector<Axis>& axes);

}  // namespace gq
