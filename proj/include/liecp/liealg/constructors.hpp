#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecp/liealg/assoc.hpp"
#include "liecp/liealg/lie_algebra.hpp"

namespace liecp {

/// Block sum with no cross brackets. Clashing labels of L2 get a trailing "'".
LieAlgebra direct_product(const LieAlgebra& L1, const LieAlgebra& L2);

/// g ⊕ V with [x, v] = x.v and V abelian. action[i] is the matrix of x_i on V
/// (column k is x_i . v_k). Throws Error{NotARepresentation} naming the pair.
LieAlgebra semidirect_product(const LieAlgebra& g, const std::vector<QMatrix>& action, std::size_t dimV,
                              std::vector<std::string> v_labels = {});

/// Checks rho([x_i, x_j]) = [rho(x_i), rho(x_j)] on all basis pairs.
void check_representation(const LieAlgebra& g, const std::vector<QMatrix>& action, std::size_t dimV);

/// Adjoint matrices of the basis, for g acting on itself.
std::vector<QMatrix> adjoint_action(const LieAlgebra& g);

/// k d ⊕ M with [d, x] = d(x); d is placed first. Throws Error{NotADerivation}.
LieAlgebra derivation_extend(const LieAlgebra& M, const QMatrix& d, std::string label = "d");
bool is_derivation(const LieAlgebra& M, const QMatrix& d);

/// M ⊕ S with S = <s_1..s_r, t_1..t_r>, [s_i, t_j] = δ_ij z and [M, S] = 0.
/// Throws Error{ZeroVector} or Error{NotCentral}.
LieAlgebra heisenberg_extend(const LieAlgebra& M, const QVector& z, std::size_t r);

/// A ⊗ M with [a ⊗ x, b ⊗ y] = ab ⊗ [x, y], basis a_i ⊗ x_j in row-major order
/// labelled "a.x" (just "x" when A is one-dimensional). Throws Error{NotCommutative}.
LieAlgebra tensor_commutative(const AssocAlgebra& A, const LieAlgebra& M);
/// Index of a_i ⊗ x_j in the tensor basis.
inline std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t dimM) { return i * dimM + j; }

/// Linearly independent matrices spanning a matrix Lie algebra; brackets are
/// commutators. Throws Error{NotASubalgebra} when the span is not closed.
LieAlgebra matrix_lie_algebra(const std::vector<QMatrix>& basis, std::vector<std::string> labels,
                              std::string name = {});

}  // namespace liecp
