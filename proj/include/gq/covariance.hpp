#pragma once

#include <Eigen/Sparse>

#include "gq/quantization.hpp"

namespace gq {

enum class Direction { left, right };

struct TranslationOp {
  Direction direction = Direction::left;
  Point z{};
};

// matrix on values: (Left_z u)(x) = u(z^-1 x), (Right_z u)(x) = Delta(z)^{1/2} u(x z)
Eigen::SparseMatrix<double, Eigen::RowMajor> translation_matrix(const GroupGrid& grid, const TranslationOp& t);

SampledFunction left_translate(const Point& z, const SampledFunction& u);
SampledFunction right_translate(const Point& z, const SampledFunction& u);
// Left_z Right_z
SampledFunction conj_translate(const Point& z, const SampledFunction& u);

// pi_xi(z) F(xi) pi_xi(z)^*
DualField ad_pi(const Model& m, const Point& z, const DualField& F);
SymbolField ad_pi(const Point& z, const SymbolField& A);
// (Left_z (x) ad_Pi(z)) A
SymbolField left_ad(const Point& z, const SymbolField& A);

// Left_z T Left_z^*
GridOperator conjugate_left(const Point& z, const GridOperator& T);
// (Left_z (x) Left_z) K
KernelMatrix left_left(const Point& z, const KernelMatrix& K);
// (Left_z (x) Left_z Right_z) K
KernelMatrix left_conj(const Point& z, const KernelMatrix& K);

double covariance_defect(const SymbolField& A, const Point& z, const TauMap& tau);
// measured through Op, i.e. covariance_defect of the rank-one symbol
double wigner_covariance_defect(const ModelPtr& model, const SampledFunction& u, const SampledFunction& v,
                                const Point& z, const TauMap& tau, const std::vector<int>& rows = {});
// symbol-side distance between Wig(Left_z u, Left_z v) and (Left_z x ad) Wig(u, v)
double wigner_symbol_defect(const ModelPtr& model, const SampledFunction& u, const SampledFunction& v,
                            const Point& z, const TauMap& tau, const std::vector<int>& rows = {});

struct LemmaResiduals {
  double upsilon = 0.0;    // ad_{Left_z} o Upsilon vs Upsilon o (Left (x) Left)
  double change = 0.0;     // (Left (x) Left) o C vs C o (Left (x) Left Right)
  double plancherel = 0.0; // P o Left Right vs ad_Pi o P
};

// kernel lemmas on K = (id (x) P^-1) A; the Plancherel lemma on w
LemmaResiduals lemma_residuals(const SymbolField& A, const SampledFunction& w, const Point& z, const TauMap& tau);

}  // namespace gq
