#include "gq/group.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>

namespace gq {

GroupSpec GroupSpec::euclidean(int n) {
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("euclidean dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  GroupSpec g;
  g.kind = Kind::euclidean;
  g.n = n;
  return g;
}

GroupSpec GroupSpec::affine() {
  GroupSpec g;
  g.kind = Kind::affine;
  g.n = 2;
  return g;
}

GroupSpec GroupSpec::affine_line() {
  GroupSpec g;
  g.kind = Kind::affine_line;
  g.n = 3;
  return g;
}

GroupSpec GroupSpec::bianchi(Family f, double param) {
  if (f == Family::VI && (param == 0.0 || param == -1.0))
    throw std::invalid_argument("bianchi(VI, q) requires q not in {0, -1}");
  if (f == Family::VII && !(param > 0.0))
    throw std::invalid_argument("bianchi(VII, p) requires p > 0");
  GroupSpec g;
  g.kind = Kind::bianchi;
  g.n = 3;
  g.family = f;
  g.param = (f == Family::VI || f == Family::VII) ? param : 0.0;
  return g;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::smatch m;
  static const std::regex eu(R"(\s*euclidean\s*\(\s*(\d+)\s*\)\s*)");
  static const std::regex bi(R"(\s*bianchi\s*\(\s*(IV|VII|VI|V)\s*(?:,\s*([-+0-9.eE]+)\s*)?\)\s*)");
  if (std::regex_match(text, m, eu)) return euclidean(std::stoi(m[1]));
  if (text == "affine") return affine();
  if (text == "affine_line") return affine_line();
  if (std::regex_match(text, m, bi)) {
    Family f = m[1] == "IV" ? Family::IV : m[1] == "V" ? Family::V : m[1] == "VI" ? Family::VI : Family::VII;
    double p = m[2].matched ? std::stod(m[2]) : 0.0;
    if ((f == Family::VI || f == Family::VII) && !m[2].matched)
      throw std::invalid_argument("bianchi(" + std::string(m[1]) + ") needs a parameter");
    return bianchi(f, p);
  }
  throw std::invalid_argument("unknown group '" + text + "'");
}

int GroupSpec::dim() const {
  switch (kind) {
    case Kind::euclidean: return n;
    case Kind::affine: return 2;
    default: return 3;
  }
}

static const char* family_name(Family f) {
  switch (f) {
    case Family::IV: return "IV";
    case Family::V: return "V";
    case Family::VI: return "VI";
    default: return "VII";
  }
}

std::string GroupSpec::name() const {
  switch (kind) {
    case Kind::euclidean: return "euclidean(" + std::to_string(n) + ")";
    case Kind::affine: return "affine";
    case Kind::affine_line: return "affine_line";
    default: break;
  }
  std::string s = std::string("bianchi(") + family_name(family);
  if (family == Family::VI || family == Family::VII) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ",%g", param);
    s += buf;
  }
  return s + ")";
}

bool GroupSpec::unimodular() const {
  if (kind == Kind::euclidean) return true;
  if (kind == Kind::bianchi) return trace_m() == 0.0;
  return false;
}

Eigen::Matrix2d GroupSpec::m_matrix() const {
  Eigen::Matrix2d M;
  switch (family) {
    case Family::IV: M << 1, 0, 1, 1; break;
    case Family::V: M << 1, 0, 0, 1; break;
    case Family::VI: M << 1, 0, 0, -param; break;
    case Family::VII: M << param, -1, 1, param; break;
  }
  return M;
}

double GroupSpec::trace_m() const { return m_matrix().trace(); }

Eigen::Matrix2d GroupSpec::exp_m(double c) const {
  Eigen::Matrix2d E;
  switch (family) {
    case Family::IV: {
      double e = std::exp(c);
      E << e, 0, c * e, e;
      break;
    }
    case Family::V: {
      double e = std::exp(c);
      E << e, 0, 0, e;
      break;
    }
    case Family::VI: E << std::exp(c), 0, 0, std::exp(-param * c); break;
    case Family::VII: {
      double e = std::exp(param * c);
      E << e * std::cos(c), -e * std::sin(c), e * std::sin(c), e * std::cos(c);
      break;
    }
  }
  return E;
}

Point make_point(std::initializer_list<double> c) {
  Point p{};
  int i = 0;
  for (double v : c) {
    if (i >= kMaxDim) break;
    p[i++] = v;
  }
  return p;
}

bool valid_point(const GroupSpec& g, const Point& x) {
  for (int i = 0; i < g.dim(); ++i)
    if (!std::isfinite(x[i])) return false;
  if (g.kind == Kind::affine || g.kind == Kind::affine_line) return x[0] > 0.0;
  return true;
}

void require_valid(const GroupSpec& g, const Point& x) {
  if (!valid_point(g, x)) throw std::domain_error("invalid point for " + g.name());
}

Point multiply(const GroupSpec& g, const Point& x, const Point& y) {
  require_valid(g, x);
  require_valid(g, y);
  Point r{};
  switch (g.kind) {
    case Kind::euclidean:
      for (int i = 0; i < g.n; ++i) r[i] = x[i] + y[i];
      break;
    case Kind::affine_line:
      r[2] = x[2] + y[2];
      [[fallthrough]];
    case Kind::affine:
      r[0] = x[0] * y[0];
      r[1] = x[0] * y[1] + x[1];
      break;
    case Kind::bianchi: {
      Eigen::Vector2d v = g.exp_m(x[2]) * Eigen::Vector2d(y[0], y[1]);
      r[0] = x[0] + v[0];
      r[1] = x[1] + v[1];
      r[2] = x[2] + y[2];
      break;
    }
  }
  return r;
}

Point inverse(const GroupSpec& g, const Point& x) {
  require_valid(g, x);
  Point r{};
  switch (g.kind) {
    case Kind::euclidean:
      for (int i = 0; i < g.n; ++i) r[i] = -x[i];
      break;
    case Kind::affine_line:
      r[2] = -x[2];
      [[fallthrough]];
    case Kind::affine:
      r[0] = 1.0 / x[0];
      r[1] = -x[1] / x[0];
      break;
    case Kind::bianchi: {
      Eigen::Vector2d v = -(g.exp_m(-x[2]) * Eigen::Vector2d(x[0], x[1]));
      r[0] = v[0];
      r[1] = v[1];
      r[2] = -x[2];
      break;
    }
  }
  return r;
}

Point identity(const GroupSpec& g) {
  Point r{};
  if (g.kind == Kind::affine || g.kind == Kind::affine_line) r[0] = 1.0;
  return r;
}

double modular(const GroupSpec& g, const Point& x) {
  switch (g.kind) {
    case Kind::euclidean: return 1.0;
    case Kind::affine:
    case Kind::affine_line: return 1.0 / x[0];
    case Kind::bianchi: return std::exp(-x[2] * g.trace_m());
  }
  return 1.0;
}

double haar_density(const GroupSpec& g, const Point& x) {
  switch (g.kind) {
    case Kind::euclidean: return 1.0;
    case Kind::affine:
    case Kind::affine_line: return 1.0 / (x[0] * x[0]);
    case Kind::bianchi: return std::exp(-x[2] * g.trace_m());
  }
  return 1.0;
}

}  // namespace gq
