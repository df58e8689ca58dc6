#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gq/plancherel.hpp"

namespace gq {

// Active group rows of a row-sparse field; a dense field lists every node.
struct RowSet {
  std::vector<int> rows;
  std::vector<int> pos;  // node -> position in rows, or -1

  RowSet() = default;
  RowSet(int n_nodes, std::vector<int> rows);
  static RowSet all(int n_nodes);
  int size() const { return static_cast<int>(rows.size()); }
  int find(int node) const { return pos[node]; }
  bool dense() const { return size() == static_cast<int>(pos.size()); }
};

// K(x_i, y_j) on active rows x_i and all columns y_j. Kernel convention:
// (Upsilon(K) u)(x_i) = sum_j K_ij u(y_j) m_j.
struct KernelMatrix {
  GridPtr grid;
  RowSet rowset;
  Eigen::MatrixXcd data;

  KernelMatrix() = default;
  KernelMatrix(GridPtr g, RowSet rs);
  static KernelMatrix dense(GridPtr g);
  // v(x) * u(y)
  static KernelMatrix tensor(const SampledFunction& v, const SampledFunction& u);

  // interpolated value; rows outside the active set count as zero
  cplx at(const Point& x, const Point& y) const;
  double norm() const;
  cplx inner(const KernelMatrix& other) const;
  KernelMatrix to_rows(const RowSet& rs) const;
};

// Operator on SampledFunction stored as a matrix on values:
// (T u)(x_i) = sum_j M_ij u(x_j), M = 0 outside the active rows.
struct GridOperator {
  GridPtr grid;
  RowSet rowset;
  Eigen::MatrixXcd mat;

  SampledFunction apply(const SampledFunction& u) const;
  double hs_norm() const;
  // Hilbert-Schmidt inner product Tr(S T^*) on L^2(G)
  cplx hs_inner(const GridOperator& other) const;
  Eigen::MatrixXcd dense_matrix() const;
};

// RepMatrix per (active group row, dual point).
struct SymbolField {
  ModelPtr model;
  RowSet rowset;
  std::vector<DualField> data;

  SymbolField() = default;
  SymbolField(ModelPtr m, RowSet rs);
  static SymbolField dense(ModelPtr m);

  // interpolated in the group slot
  DualField at(const Point& x) const;
  double norm() const;
  cplx inner(const SymbolField& other) const;
  SymbolField to_rows(const RowSet& rs) const;
};

// relative distances over the union of active rows
double relative_distance(const KernelMatrix& a, const KernelMatrix& b);
double relative_distance(const SymbolField& a, const SymbolField& b);
double relative_distance(const GridOperator& a, const GridOperator& b);

}  // namespace gq
