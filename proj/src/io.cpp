#include "gq/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace gq {

namespace {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

std::vector<std::vector<std::string>> read_table(std::istream& is, const std::vector<std::string>& header) {
  std::string line;
  if (!std::getline(is, line)) throw DimensionError("empty array file");
  auto h = split(strip(line));
  if (h != header) {
    std::string want;
    for (const auto& s : header) want += (want.empty() ? "" : ",") + s;
    throw DimensionError("unexpected header '" + strip(line) + "', expected '" + want + "'");
  }
  std::vector<std::vector<std::string>> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    auto r = split(line);
    if (r.size() != header.size())
      throw DimensionError("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) + " columns");
    rows.push_back(r);
  }
  return rows;
}

long to_long(const std::string& s) {
  std::size_t n = 0;
  long v = std::stol(s, &n);
  if (n != s.size()) throw DimensionError("bad index '" + s + "'");
  return v;
}

int grid_index(const GroupGrid& g, const std::vector<std::string>& r) {
  std::array<int, kMaxDim> k{};
  for (int a = 0; a < g.dim(); ++a) {
    long v = to_long(r[a]);
    if (v < 0 || v >= g.axes()[a].count) throw DimensionError("index " + r[a] + " outside axis " + std::to_string(a));
    k[a] = static_cast<int>(v);
  }
  return g.flat(k);
}

}  // namespace

std::vector<std::string> axis_names(const GroupSpec& g) {
  switch (g.kind) {
    case Kind::euclidean: {
      std::vector<std::string> v;
      for (int i = 0; i < g.n; ++i) v.push_back("x" + std::to_string(i));
      return v;
    }
    case Kind::affine: return {"a", "b"};
    case Kind::affine_line:
    case Kind::bianchi: return {"a", "b", "c"};
  }
  return {};
}

void write_function_csv(std::ostream& os, const SampledFunction& f) {
  const GroupGrid& g = *f.grid;
  auto names = axis_names(g.group());
  for (const auto& n : names) os << n << ',';
  os << "re,im\n";
  for (int i = 0; i < g.size(); ++i) {
    auto k = g.multi_index(i);
    for (int a = 0; a < g.dim(); ++a) os << k[a] << ',';
    os << num17(f.values[i].real()) << ',' << num17(f.values[i].imag()) << '\n';
  }
}

SampledFunction read_function_csv(std::istream& is, const GridPtr& grid) {
  auto header = axis_names(grid->group());
  header.push_back("re");
  header.push_back("im");
  auto rows = read_table(is, header);
  if (static_cast<int>(rows.size()) != grid->size())
    throw DimensionError("expected " + std::to_string(grid->size()) + " rows, got " + std::to_string(rows.size()));
  SampledFunction f(grid);
  std::vector<char> seen(grid->size(), 0);
  int dim = grid->dim();
  for (const auto& r : rows) {
    int i = grid_index(*grid, r);
    if (seen[i]) throw DimensionError("duplicate grid index");
    seen[i] = 1;
    f.values[i] = cplx(std::stod(r[dim]), std::stod(r[dim + 1]));
  }
  return f;
}

SampledFunction read_function_csv(const std::string& path, const GridPtr& grid) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return read_function_csv(in, grid);
}

void write_symbol_csv(std::ostream& os, const SymbolField& A) {
  const Model& m = *A.model;
  const GroupGrid& g = *m.grid();
  for (const auto& n : axis_names(g.group())) os << n << ',';
  os << "xi,i,j,re,im\n";
  for (int p = 0; p < A.rowset.size(); ++p) {
    auto k = g.multi_index(A.rowset.rows[p]);
    for (int q = 0; q < m.dual_size(); ++q) {
      Eigen::MatrixXcd T = to_kernel_convention(m, A.data[p][q]);
      for (int i = 0; i < m.d(); ++i)
        for (int j = 0; j < m.d(); ++j) {
          for (int a = 0; a < g.dim(); ++a) os << k[a] << ',';
          os << q << ',' << i << ',' << j << ',' << num17(T(i, j).real()) << ',' << num17(T(i, j).imag()) << '\n';
        }
    }
  }
}

SymbolField read_symbol_csv(std::istream& is, const ModelPtr& model) {
  const GroupGrid& g = *model->grid();
  auto header = axis_names(g.group());
  for (const char* s : {"xi", "i", "j", "re", "im"}) header.push_back(s);
  auto rows = read_table(is, header);
  int dim = g.dim(), d = model->d(), nd = model->dual_size();
  std::map<int, std::vector<std::vector<std::string>>> by_node;
  for (auto& r : rows) by_node[grid_index(g, r)].push_back(std::move(r));
  std::vector<int> nodes;
  for (const auto& kv : by_node) nodes.push_back(kv.first);
  SymbolField A(model, RowSet(g.size(), nodes));
  for (int p = 0; p < A.rowset.size(); ++p) {
    const auto& entries = by_node[A.rowset.rows[p]];
    if (static_cast<long>(entries.size()) != static_cast<long>(nd) * d * d)
      throw DimensionError("node " + std::to_string(A.rowset.rows[p]) + ": expected " + std::to_string(nd * d * d) +
                           " entries, got " + std::to_string(entries.size()));
    std::vector<Eigen::MatrixXcd> T(nd, Eigen::MatrixXcd::Zero(d, d));
    for (const auto& r : entries) {
      long q = to_long(r[dim]), i = to_long(r[dim + 1]), j = to_long(r[dim + 2]);
      if (q < 0 || q >= nd || i < 0 || i >= d || j < 0 || j >= d) throw DimensionError("dual or matrix index out of range");
      T[q](i, j) = cplx(std::stod(r[dim + 3]), std::stod(r[dim + 4]));
    }
    for (int q = 0; q < nd; ++q) A.data[p][q] = from_kernel_convention(*model, T[q]);
  }
  return A;
}

SymbolField read_symbol_csv(const std::string& path, const ModelPtr& model) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return read_symbol_csv(in, model);
}

}  // namespace gq
