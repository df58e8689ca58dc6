#include "gq/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gq {

namespace {

constexpr double kHitTol = 1e-9;

struct AxisLoc {
  int n = 0;
  int i[2] = {0, 0};
  double w[2] = {0.0, 0.0};
};

AxisLoc locate_axis(const Axis& ax, double chart) {
  AxisLoc loc;
  if (ax.scale == Scale::geometric && !(chart > 0.0)) return loc;
  double u = (ax.internal(chart) - ax.x0) / ax.h;
  if (!std::isfinite(u)) return loc;
  if (ax.scale == Scale::periodic) {
    u = std::fmod(u, static_cast<double>(ax.count));
    if (u < 0) u += ax.count;
    double r = std::round(u);
    if (std::abs(u - r) < kHitTol) {
      loc.n = 1;
      loc.i[0] = static_cast<int>(r) % ax.count;
      loc.w[0] = 1.0;
      return loc;
    }
    int i0 = static_cast<int>(std::floor(u));
    double f = u - i0;
    loc.n = 2;
    loc.i[0] = i0 % ax.count;
    loc.i[1] = (i0 + 1) % ax.count;
    loc.w[0] = 1.0 - f;
    loc.w[1] = f;
    return loc;
  }
  double r = std::round(u);
  if (std::abs(u - r) < kHitTol) {
    if (r < 0 || r > ax.count - 1) return loc;
    loc.n = 1;
    loc.i[0] = static_cast<int>(r);
    loc.w[0] = 1.0;
    return loc;
  }
  if (u < 0 || u > ax.count - 1) return loc;
  int i0 = static_cast<int>(std::floor(u));
  double f = u - i0;
  loc.n = 2;
  loc.i[0] = i0;
  loc.i[1] = i0 + 1;
  loc.w[0] = 1.0 - f;
  loc.w[1] = f;
  return loc;
}

}  // namespace

Axis Axis::cells(Scale scale, double min, double max, int count) {
  if (count < 1) throw std::invalid_argument("axis count must be positive");
  if (!(max > min)) throw std::invalid_argument("axis range must satisfy min < max");
  Axis a;
  a.scale = scale;
  a.count = count;
  if (scale == Scale::geometric) {
    if (!(min > 0)) throw std::invalid_argument("geometric axis needs min > 0");
    min = std::log(min);
    max = std::log(max);
  }
  a.h = (max - min) / count;
  a.x0 = scale == Scale::periodic ? min : min + 0.5 * a.h;
  return a;
}

Axis Axis::centered(Scale scale, double h, int count) {
  if (count < 1) throw std::invalid_argument("axis count must be positive");
  if (!(h > 0)) throw std::invalid_argument("axis spacing must be positive");
  Axis a;
  a.scale = scale;
  a.h = h;
  a.count = count;
  a.x0 = -std::floor(count / 2.0) * h;
  return a;
}

double Axis::coord(int i) const { return scale == Scale::geometric ? std::exp(u(i)) : u(i); }

double Axis::internal(double chart) const { return scale == Scale::geometric ? std::log(chart) : chart; }

bool Axis::anchored() const {
  double k = x0 / h;
  return std::abs(k - std::round(k)) < 1e-9;
}

long Axis::kmin() const { return std::lround(x0 / h); }

Axis Axis::refined() const {
  Axis r = *this;
  r.h = h / std::sqrt(2.0);
  if (anchored()) {
    r.x0 = 2 * kmin() * r.h;
    r.count = scale == Scale::periodic ? 2 * count : 2 * count - 1;
  } else {
    double c = x0 + 0.5 * (count - 1) * h;
    r.count = 2 * count;
    r.x0 = std::sqrt(2.0) * c - 0.5 * (r.count - 1) * r.h;
  }
  return r;
}

void validate_axes(const GroupSpec& g, const std::vector<Axis>& axes) {
  if (static_cast<int>(axes.size()) != g.dim())
    throw std::invalid_argument(g.name() + " needs " + std::to_string(g.dim()) + " grid axes");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    bool geo = axes[i].scale == Scale::geometric;
    bool want_geo = (g.kind == Kind::affine || g.kind == Kind::affine_line) && i == 0;
    if (geo != want_geo)
      throw std::invalid_argument(g.name() + ": axis " + std::to_string(i) +
                                  (want_geo ? " must be geometric" : " must not be geometric"));
    if (g.kind == Kind::bianchi && i == 2 && axes[i].scale != Scale::linear)
      throw std::invalid_argument(g.name() + ": c axis must be linear");
  }
}

GroupGrid::GroupGrid(const GroupSpec& g, std::vector<Axis> axes) : g_(g), axes_(std::move(axes)) {
  validate_axes(g_, axes_);
  size_ = 1;
  for (int a = dim() - 1; a >= 0; --a) {
    strides_[a] = size_;
    size_ *= axes_[a].count;
  }
  std::vector<std::vector<double>> axis_w(dim());
  for (int a = 0; a < dim(); ++a) {
    const Axis& ax = axes_[a];
    axis_w[a].resize(ax.count);
    for (int i = 0; i < ax.count; ++i) {
      double w = ax.h;
      if (ax.scale == Scale::geometric) {
        // integral of a^-2 da over [e^{u-h/2}, e^{u+h/2}]
        w = std::exp(-ax.u(i)) * 2.0 * std::sinh(0.5 * ax.h);
      } else if (g_.kind == Kind::bianchi && a == 2) {
        w = ax.h * std::exp(-ax.u(i) * g_.trace_m());
      }
      axis_w[a][i] = w;
    }
  }
  nodes_.resize(size_);
  weights_.resize(size_);
  for (int i = 0; i < size_; ++i) {
    auto k = multi_index(i);
    Point p{};
    double w = 1.0;
    for (int a = 0; a < dim(); ++a) {
      p[a] = axes_[a].coord(k[a]);
      w *= axis_w[a][k[a]];
    }
    nodes_[i] = p;
    weights_[i] = w;
  }
}

std::array<int, kMaxDim> GroupGrid::multi_index(int i) const {
  std::array<int, kMaxDim> k{};
  for (int a = 0; a < dim(); ++a) {
    k[a] = i / strides_[a];
    i %= strides_[a];
  }
  return k;
}

int GroupGrid::flat(const std::array<int, kMaxDim>& k) const {
  int i = 0;
  for (int a = 0; a < dim(); ++a) i += k[a] * strides_[a];
  return i;
}

Stencil GroupGrid::stencil(const Point& x) const {
  Stencil s;
  AxisLoc loc[kMaxDim];
  int total = 1;
  for (int a = 0; a < dim(); ++a) {
    loc[a] = locate_axis(axes_[a], x[a]);
    if (loc[a].n == 0) return s;
    total *= loc[a].n;
  }
  for (int t = 0; t < total; ++t) {
    int r = t, idx = 0;
    double w = 1.0;
    for (int a = dim() - 1; a >= 0; --a) {
      int c = r % loc[a].n;
      r /= loc[a].n;
      idx += loc[a].i[c] * strides_[a];
      w *= loc[a].w[c];
    }
    s.idx[s.n] = idx;
    s.w[s.n] = w;
    ++s.n;
  }
  return s;
}

int GroupGrid::locate(const Point& x) const {
  Stencil s = stencil(x);
  return s.n == 1 ? s.idx[0] : -1;
}

GroupGrid GroupGrid::refined() const {
  std::vector<Axis> r;
  for (const auto& a : axes_) r.push_back(a.refined());
  return GroupGrid(g_, r);
}

}  // namespace gq
