#pragma once

#include <optional>
#include <string>

#include "gq/fields.hpp"

namespace gq {

struct TauMap {
  enum class Name { kohn_nirenberg, right, euclidean_weyl };
  Name name = Name::kohn_nirenberg;

  static TauMap parse(const std::string& text);
  std::string str() const;
  // throws for euclidean_weyl on a non-euclidean group
  void check(const GroupSpec& g) const;
  Point operator()(const GroupSpec& g, const Point& x) const;
  // tau = e keeps the active rows of kernels and symbols
  bool row_preserving() const { return name == Name::kohn_nirenberg; }
};

GridOperator upsilon(const KernelMatrix& K);
KernelMatrix upsilon_inv(const GridOperator& T);

// [C K](x,y) = Delta(y)^{-1/2} K(tau(y x^-1) x, x y^-1)
KernelMatrix c_tau(const KernelMatrix& K, const TauMap& tau);
// [C^-1 L](x,y) = Delta(w)^{1/2} L(tau(y^-1)^-1 x, w),  w = y^-1 tau(y^-1)^-1 x
KernelMatrix c_tau_inv(const KernelMatrix& L, const TauMap& tau);

// (id (x) P^-1): rows of A mapped to functions of the second variable
KernelMatrix partial_inverse(const SymbolField& A);
// (id (x) P)
SymbolField partial_forward(const ModelPtr& model, const KernelMatrix& L);

KernelMatrix kernel_of_symbol(const SymbolField& A, const TauMap& tau);
// path 1: Upsilon o C o (id (x) P)^-1
GridOperator op_tau(const SymbolField& A, const TauMap& tau);
// path 2: direct quadrature of the kernel with A interpolated in x
GridOperator op_tau_direct(const SymbolField& A, const TauMap& tau);
// path-2 kernel; only the listed columns are filled (all if empty)
KernelMatrix kernel_direct(const SymbolField& A, const TauMap& tau, const std::vector<int>& cols = {});

// (id (x) P) o C^-1 o Upsilon^-1
SymbolField wig_tau(const ModelPtr& model, const GridOperator& T, const TauMap& tau);
// Wig_{u,v} by direct quadrature, on the given rows (all rows if empty)
SymbolField wig_rank_one(const ModelPtr& model, const SampledFunction& u, const SampledFunction& v,
                         const TauMap& tau, const std::vector<int>& rows = {});

// fields over (dual x group): entry y holds the dual field at group node y
using DualGroupField = std::vector<DualField>;
// (P (x) P^-1) A for a dense symbol
DualGroupField symbol_hat(const SymbolField& A);
DualGroupField fwig(const ModelPtr& model, const SampledFunction& u, const SampledFunction& v, const TauMap& tau);
cplx dual_group_inner(const Model& m, const DualGroupField& a, const DualGroupField& b);

SampledFunction sch(const KernelMatrix& K, const SampledFunction& v, const TauMap& tau);

// |<Op(A)u, v> - <A, Wig_{u,v}>| / (|A| |u| |v|)
double duality_residual(const SymbolField& A, const SampledFunction& u, const SampledFunction& v, const TauMap& tau);

}  // namespace gq
