#include "modcat/matched_pair.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace modcat {

CosetFactorization::CosetFactorization(const FiniteGroup& X, Subgroup G, std::vector<int> M)
    : X_(&X), G_(std::move(G)), M_(std::move(M)) {
    const int n = X.order();
    std::sort(M_.begin(), M_.end());
    M_.erase(std::unique(M_.begin(), M_.end()), M_.end());
    if (M_.empty() || M_.front() != X.identity()) throw IdentityNotInM();
    if (static_cast<int>(M_.size()) * G_.order() != n) throw NotATransversal();

    // left cosets sG must be pairwise distinct (MG factorization)
    mg_m_.assign(n, -1);
    mg_g_.assign(n, -1);
    for (int s : M_)
        for (int v : G_.elements) {
            int x = X.mul(s, v);
            if (mg_m_[x] != -1) throw NotATransversal();
            mg_m_[x] = s;
            mg_g_[x] = v;
        }

    // X = GM must also be total and unique
    gm_g_.assign(n, -1);
    gm_m_.assign(n, -1);
    for (int u : G_.elements)
        for (int s : M_) {
            int x = X.mul(u, s);
            if (gm_g_[x] != -1) throw FactorizationNotClosed();
            gm_g_[x] = u;
            gm_m_[x] = s;
        }

    for (int s : M_)
        for (int u : G_.elements) {
            int x = X.mul(s, u);
            tri_l_[key(s, u)] = gm_g_[x];  // s |> u
            tri_r_[key(s, u)] = gm_m_[x];  // s <| u
        }
    for (int s : M_)
        for (int t : M_) {
            int x = X.mul(s, t);
            tau_[key(s, t)] = gm_g_[x];
            dot_[key(s, t)] = gm_m_[x];
        }
    for (int s : M_) {
        int found = -1;
        for (int t : M_)
            if (dot(t, s) == X.identity()) {
                if (found != -1) throw FactorizationNotClosed();
                found = t;
            }
        if (found == -1) throw FactorizationNotClosed();
        left_inv_[s] = found;
    }
    for (auto [s, t] : left_inv_) {
        if (inv_left_inv_.count(t)) throw FactorizationNotClosed();
        inv_left_inv_[t] = s;
    }

    for (int s : M_) {
        std::set<int> image;
        for (int t : M_) image.insert(dot(s, t));
        if (static_cast<int>(image.size()) != static_cast<int>(M_.size())) {
            dot_left_bijective_ = false;
            break;
        }
    }

    yL_.assign(n, -1);
    for (int y = 0; y < n; ++y) yL_[y] = X.mul(g_grade(y), X.inv(m_grade(y)));

    // y |>~ x = v^-1 x v' where y = v t and x^-1 y x = v' t' in GM order
    triY_.assign(n, std::vector<int>(n, -1));
    triYinv_.assign(n, std::vector<int>(n, -1));
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            int v = gm_g_[y];
            int vp = gm_g_[X.conj(y, x)];
            triY_[y][x] = X.mul(X.mul(X.inv(v), x), vp);
        }
        for (int x = 0; x < n; ++x) {
            int xp = triY_[y][x];
            if (triYinv_[y][xp] != -1) throw FactorizationNotClosed();
            triYinv_[y][xp] = x;
        }
    }

    validate();
}

void CosetFactorization::validate() const {
    const FiniteGroup& X = *X_;
    // s u = (s |> u)(s <| u) with values in G and M
    for (int s : M_)
        for (int u : G_.elements) {
            if (!G_.contains(act_G(s, u))) throw FactorizationNotClosed();
            if (!std::binary_search(M_.begin(), M_.end(), act_M(s, u))) throw FactorizationNotClosed();
            if (X.mul(s, u) != X.mul(act_G(s, u), act_M(s, u))) throw FactorizationNotClosed();
        }
    // s t = tau(s,t)(s . t)
    for (int s : M_)
        for (int t : M_) {
            if (!G_.contains(tau(s, t))) throw FactorizationNotClosed();
            if (X.mul(s, t) != X.mul(tau(s, t), dot(s, t))) throw FactorizationNotClosed();
        }
    // e is a unit for the actions and the dot
    for (int u : G_.elements) {
        if (act_G(X.identity(), u) != u) throw FactorizationNotClosed();
        if (act_M(X.identity(), u) != X.identity()) throw FactorizationNotClosed();
    }
    for (int s : M_) {
        if (tau(s, X.identity()) != X.identity() || tau(X.identity(), s) != X.identity())
            throw FactorizationNotClosed();
        if (dot(s, X.identity()) != s || dot(X.identity(), s) != s) throw FactorizationNotClosed();
        if (dot(left_inv(s), s) != X.identity()) throw FactorizationNotClosed();
        if (tau(left_inv(s), s) != X.mul(left_inv(s), s)) throw FactorizationNotClosed();
    }
    // <| is a right action of G on M
    for (int s : M_)
        for (int u : G_.elements)
            for (int v : G_.elements)
                if (act_M(act_M(s, u), v) != act_M(s, X.mul(u, v))) throw FactorizationNotClosed();
    // transport identity (s . t) <| u = (s <| (t |> u)) . (t <| u)
    for (int s : M_)
        for (int t : M_)
            for (int u : G_.elements)
                if (act_M(dot(s, t), u) != dot(act_M(s, act_G(t, u)), act_M(t, u)))
                    throw FactorizationNotClosed();
    // grade decomposition and its left inverse
    for (int y = 0; y < X.order(); ++y) {
        if (y != X.mul(X.inv(g_grade(y)), m_grade(y))) throw FactorizationNotClosed();
        int s = m_grade(y);
        if (grade_left_inv(y) != X.mul(s, X.mul(X.inv(y), X.inv(s)))) throw FactorizationNotClosed();
        for (int x = 0; x < X.order(); ++x)
            if (grade_left_inv(conj_Y(y, x)) != conj_Y(grade_left_inv(y), tri_l_Y(y, x)))
                throw FactorizationNotClosed();
    }
}

int CosetFactorization::dot_solve(int s, int m0) const {
    if (!dot_left_bijective_)
        throw FactorizationError("dot left translations are not bijective on M");
    for (int t : M_)
        if (dot(s, t) == m0) return t;
    throw FactorizationError("dot equation has no solution");
}

CosetFactorization::DGrade CosetFactorization::d_grade(int y, int x) const {
    const FiniteGroup& X = *X_;
    const int c = X.conj(y, x);
    const int s = m_grade(y);
    const int u = g_grade(y);
    const int t = dot_solve(s, gm_m_[c]);
    // |a| = u^-1 s t c^-1, forced by u^-1 s <a> = |a| c
    const int g = X.mul(X.mul(X.inv(u), X.mul(s, t)), X.inv(c));
    if (!G_.contains(g)) throw FactorizationError("D-grade solve failed");
    return {t, g};
}

}  // namespace modcat
