#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

namespace gq {

constexpr int kMaxDim = 4;
using Point = std::array<double, kMaxDim>;

enum class Kind { euclidean, affine, affine_line, bianchi };
enum class Family { IV, V, VI, VII };

struct GroupSpec {
  Kind kind = Kind::euclidean;
  int n = 1;
  Family family = Family::V;
  double param = 0.0;

  static GroupSpec euclidean(int n);
  static GroupSpec affine();
  static GroupSpec affine_line();
  static GroupSpec bianchi(Family f, double param = 0.0);
  // "euclidean(2)", "affine", "affine_line", "bianchi(V)", "bianchi(VII,1)"
  static GroupSpec parse(const std::string& text);

  int dim() const;
  std::string name() const;
  bool unimodular() const;

  Eigen::Matrix2d m_matrix() const;
  double trace_m() const;
  // e^{cM}
  Eigen::Matrix2d exp_m(double c) const;
};

Point multiply(const GroupSpec& g, const Point& x, const Point& y);
Point inverse(const GroupSpec& g, const Point& x);
Point identity(const GroupSpec& g);
double modular(const GroupSpec& g, const Point& x);
// density of the left Haar measure in the chart
double haar_density(const GroupSpec& g, const Point& x);
bool valid_point(const GroupSpec& g, const Point& x);
void require_valid(const GroupSpec& g, const Point& x);

Point make_point(std::initializer_list<double> c);

}  // namespace gq
