#pragma once

#include <map>

#include "modcat/group.hpp"

namespace modcat {

struct FactorizationError : GroupError {
    using GroupError::GroupError;
};
struct NotATransversal : FactorizationError {
    NotATransversal() : FactorizationError("M is not a transversal of the left cosets of G") {}
};
struct FactorizationNotClosed : FactorizationError {
    FactorizationNotClosed() : FactorizationError("X = GM factorization is not total/unique") {}
};
struct IdentityNotInM : FactorizationError {
    IdentityNotInM() : FactorizationError("transversal must contain the identity") {}
};

/// Matched-pair data for X with subgroup G and transversal M: the actions
/// |> and <|, the cocycle tau, the binary operation . on M, left inverses,
/// both factorizations X = GM and X = MG, and the Y = X double actions.
/// All invariants are validated exhaustively at build time.
class CosetFactorization {
public:
    CosetFactorization(const FiniteGroup& X, Subgroup G, std::vector<int> M);

    const FiniteGroup& group() const { return *X_; }
    const Subgroup& subgroup() const { return G_; }
    const std::vector<int>& transversal() const { return M_; }

    // s u = (s |> u)(s <| u), s in M, u in G
    int act_G(int s, int u) const { return tri_l_.at(key(s, u)); }  // s |> u, in G
    int act_M(int s, int u) const { return tri_r_.at(key(s, u)); }  // s <| u, in M
    // s t = tau(s, t)(s . t)
    int tau(int s, int t) const { return tau_.at(key(s, t)); }
    int dot(int s, int t) const { return dot_.at(key(s, t)); }
    int left_inv(int s) const { return left_inv_.at(s); }           // s^L . s = e
    int inv_left_inv(int t) const { return inv_left_inv_.at(t); }   // s with s^L = t

    struct Pair {
        int first, second;
    };
    Pair factor_GM(int x) const { return {gm_g_[x], gm_m_[x]}; }  // x = u s
    Pair factor_MG(int x) const { return {mg_m_[x], mg_g_[x]}; }  // x = s v

    /// y = u^-1 s -> (<y> = s, |y| = u)
    int m_grade(int y) const { return gm_m_[y]; }
    int g_grade(int y) const { return X_->inv(gm_g_[y]); }
    /// ||y||^L = |y| <y>^-1, the grade of the dual basis vector.
    int grade_left_inv(int y) const { return yL_[y]; }

    // Y = X with y <|~ x = x^-1 y x and the companion |>~ action
    int conj_Y(int y, int x) const { return X_->conj(y, x); }
    int tri_l_Y(int y, int x) const { return triY_[y][x]; }      // y |>~ x
    int tri_l_Y_inv(int y, int xp) const { return triYinv_[y][xp]; }

    /// x -> unique t in M with s . t = m0; requires left dot translations
    /// to be bijective on M (validated; throws otherwise).
    int dot_solve(int s, int m0) const;

    /// Grades of the algebra-D basis element delta_y (x) x, derived from the
    /// action-morphism constraint; see the oracle module.
    struct DGrade {
        int m;  // <a> in M
        int g;  // |a| in G
    };
    DGrade d_grade(int y, int x) const;

private:
    const FiniteGroup* X_;
    Subgroup G_;
    std::vector<int> M_;
    std::vector<int> gm_g_, gm_m_, mg_m_, mg_g_;  // per element of X
    std::vector<int> yL_;
    std::vector<std::vector<int>> triY_, triYinv_;
    // tables keyed by packed element pairs (small maps keep parent-id keys)
    long key(int a, int b) const { return static_cast<long>(a) * X_->order() + b; }
    std::map<long, int> tri_l_, tri_r_, tau_, dot_;
    std::map<int, int> left_inv_, inv_left_inv_;
    bool dot_left_bijective_ = true;

    void validate() const;
};

}  // namespace modcat
