#pragma once

#include <map>
#include <optional>

#include "modcat/modular.hpp"

namespace modcat {

struct ProjectionFailed : GroupError {
    ProjectionFailed() : GroupError("isotypic projection failed to isolate an irreducible block") {}
};
struct NotAMorphism : GroupError {
    NotAMorphism() : GroupError("matrix is not a module morphism") {}
};

/// Explicit Y-graded right X-module. Row convention:
/// xi_i <|^ x = sum_j act[x][i][j] xi_j; grade covariance
/// grades[j] = grades[i] <|~ x on the support of act[x].
struct GradedModule {
    const CosetFactorization* f = nullptr;
    std::vector<int> grades;      // Y = X elements
    std::vector<CycMatrix> act;   // indexed by x in X

    int dim() const { return static_cast<int>(grades.size()); }
    std::vector<Cyclotomic> row_act(int x, int i) const { return act[static_cast<size_t>(x)][static_cast<size_t>(i)]; }
    void check_grading() const;            // grade covariance only (cheap)
    void check_action(bool all_pairs) const;
};

/// Exact irreducible right-representation matrices of the subgroup with the
/// given character, by isotypic projection of the regular representation.
std::map<int, CycMatrix> irrep_matrices(const FiniteGroup& X, const std::vector<int>& stab,
                                        const ClassFunction& chi);

GradedModule build_explicit_module(const CategoryD& cat, const SimpleObjectD& V);

/// Dual module: grades y^L, action transported through |>~.
GradedModule dual_module(const GradedModule& A);

/// (xi (x) eta) <|^ x = xi <|^ (||eta|| |>~ x)  (x)  eta <|^ x,
/// graded by ||xi|| o ||eta|| = |eta|^-1 |xi|^-1 <xi><eta>.
GradedModule tensor_module(const GradedModule& A, const GradedModule& B);
int tensor_grade(const CosetFactorization& f, int y1, int y2);

/// Psi : A (x) B -> B (x) A, Psi(xi (x) eta) = eta <|^ (<xi> <| |eta|)^-1 (x) xi <|^ |eta|.
CycMatrix braid(const GradedModule& A, const GradedModule& B);

/// theta(xi) = xi <|^ ||xi||, as a matrix; scalar Theta on simples.
CycMatrix twist(const GradedModule& A);

/// Multiplicity of each simple of the category in an explicit module.
std::vector<int> decompose_module(const CategoryD& cat, const GradedModule& T);

Cyclotomic plain_trace(const CycMatrix& T);

/// Categorical trace per the closed ribbon diagram. For a plain module the
/// dual pairing is the delta pairing; Tmat must be a module morphism.
Cyclotomic categorical_trace(const GradedModule& A, const CycMatrix& Tmat);
/// Same for U = A (x) B realizing U* = B* (x) A* with the tau-twisted
/// pairing and dual basis; used for the double-braiding traces.
Cyclotomic categorical_trace_tensor(const GradedModule& A, const GradedModule& B, const CycMatrix& Tmat);

/// Literal evaluation of the trace diagram: coev with tau twists, T (x) id,
/// braiding, inverse twist, evaluation. Agrees with categorical_trace.
Cyclotomic diagram_trace(const GradedModule& A, const CycMatrix& Tmat);
Cyclotomic diagram_trace_tensor(const GradedModule& A, const GradedModule& B, const CycMatrix& Tmat);

/// The tau-twisted dual basis of (A (x) B)* as rows over B* (x) A*, and the
/// twisted evaluation matrix; hat * eval is the identity.
CycMatrix twisted_dual_basis_matrix(const GradedModule& A, const GradedModule& B,
                             const GradedModule& dA, const GradedModule& dB);
CycMatrix twisted_eval_matrix(const GradedModule& A, const GradedModule& B,
                              const GradedModule& dA, const GradedModule& dB);

/// Categorical trace of Psi_{WV} o Psi_{VW} on V (x) W — the S~ oracle.
Cyclotomic double_braiding_trace(const GradedModule& V_mod, const GradedModule& W_mod,
                                 bool literal_diagram = false);

/// Character of delta_y (x) x on an explicit module via the basis formula
/// sum over xi with <xi>|xi|^-1 = y of xihat(xi <|^ <xi>^-1 x <xi>).
Cyclotomic brute_char(const GradedModule& A, int y, int x);

// ---- the D(X) double and the functor to its modules ----

/// Formal sum of basis symbols delta_y (x) x with cyclotomic coefficients.
using DXElement = std::map<std::pair<int, int>, Cyclotomic>;

DXElement dx_basis(int y, int x);
DXElement dx_unit(const FiniteGroup& X);
DXElement dx_product(const FiniteGroup& X, const DXElement& a, const DXElement& b);
bool dx_equal(const DXElement& a, const DXElement& b);

/// psi(delta_y (x) x) = delta_{x^-1 y^-1 x} (x) x^-1, extended linearly.
/// (Antipode-shaped: the variant that satisfies the functor intertwining.)
DXElement psi_map(const FiniteGroup& X, const DXElement& a);

/// Product of basis elements of the algebra D in the category; nullopt when
/// the delta conditions annihilate it. (delta_y (x) x)(delta_{y'} (x) x') =
/// [y' = y <|~ x] delta_{y <|~ tau} (x) tau^-1 x x', tau = tau(<a>, <b>).
std::optional<std::pair<int, int>> d_product(const CosetFactorization& f, std::pair<int, int> a,
                                             std::pair<int, int> b);

/// Action of delta_y (x) x in D on a module: project to fiber y, act by x.
CycMatrix d_action(const GradedModule& A, int y, int x);

/// The D(X)-module chi(A): grade |||chi(eta)||| = ||eta||^-1 and the left
/// action matrix of x (row convention: apply = v -> v M).
int chi_functor_grade(const FiniteGroup& X, int module_grade);
CycMatrix chi_functor_act(const GradedModule& A, int x);
/// Action matrix of delta_y (x) x in D(X) on chi(A).
CycMatrix dx_action_on_chi(const GradedModule& A, int y, int x);

/// c : chi(A) (x) chi(B) -> chi(A (x) B) (identity-shaped on the underlying
/// space of A (x) B), as a matrix.
CycMatrix c_map(const GradedModule& A, const GradedModule& B);

/// t |>bar on basis vector i of A, as a coefficient row.
std::vector<Cyclotomic> m_action_row(const GradedModule& A, int t, int i);

bool mat_is_invertible(const CycMatrix& m);
CycMatrix mat_identity(size_t n, int conductor);

}  // namespace modcat
