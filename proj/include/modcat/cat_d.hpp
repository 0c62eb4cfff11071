#pragma once

#include "modcat/cat_c.hpp"

namespace modcat {

/// Simple object of the double category: a conjugacy class of X graded by
/// Y = X with conjugation, together with an irreducible character of the
/// base-point centralizer.
struct SimpleObjectD {
    ConjugacyClass cls;
    int base = 0;            // smallest index in the class
    std::vector<int> stab;   // centralizer of base, sorted
    ClassFunction chi;       // irreducible character of stab
    int table_row = 0;
    std::string label;       // "<base name>#<row>" unless relabeled
};

class CategoryD {
public:
    CategoryD(const CosetFactorization& f);

    const CosetFactorization& factorization() const { return *f_; }
    const FiniteGroup& group() const { return f_->group(); }
    const std::vector<SimpleObjectD>& simples() const { return simples_; }
    int conductor() const { return conductor_; }

    /// Theta_V = chi(base)/chi(e), a root of unity.
    Cyclotomic ribbon_theta(const SimpleObjectD& V) const;
    /// |class| * chi(e)
    long dim_D(const SimpleObjectD& V) const;

    /// Transported character of the fiber V_y evaluated at v: zero unless
    /// y lies in V's class and v centralizes y.
    Cyclotomic char_at(const SimpleObjectD& V, int y, int v) const;

    /// chi_V(delta_y (x) x): zero unless xy = yx; otherwise with y = s u^-1
    /// (s in M, u in G) the value chi_{V_{u^-1 s}}(s^-1 x s).
    Cyclotomic char_D(const SimpleObjectD& V, int y, int x) const;

    /// Index of the dual simple in `simples()`, and the dual object itself.
    int dual_index(int simple_index) const;
    SimpleObjectD dual_D(const SimpleObjectD& V) const;

    /// Index of the simple isomorphic to (class of y, transported chi at y).
    int identify(int y, const ClassFunction& chi_at_y) const;

    /// Conjugator x with base <|~ x = y (cached, deterministic).
    int conjugator(int base, int y) const;

private:
    const CosetFactorization* f_;
    std::vector<SimpleObjectD> simples_;
    int conductor_;
    mutable std::map<std::pair<int, int>, int> conj_cache_;
};

}  // namespace modcat
