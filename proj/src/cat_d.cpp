#include "modcat/cat_d.hpp"

#include <algorithm>

namespace modcat {

CategoryD::CategoryD(const CosetFactorization& f) : f_(&f) {
    const FiniteGroup& X = f.group();
    conductor_ = X.exponent();
    for (const auto& c : conjugacy_classes(X)) {
        Subgroup cent = centralizer(X, c.representative);
        auto table = character_table(X, cent);
        for (size_t r = 0; r < table.rows.size(); ++r) {
            SimpleObjectD V;
            V.cls = c;
            V.base = c.representative;
            V.stab = cent.elements;
            V.chi = table.rows[r];
            V.table_row = static_cast<int>(r);
            V.label = X.name(V.base) + "#" + std::to_string(r);
            simples_.push_back(std::move(V));
        }
    }
}

int CategoryD::conjugator(int base, int y) const {
    auto it = conj_cache_.find({base, y});
    if (it != conj_cache_.end()) return it->second;
    const FiniteGroup& X = group();
    for (int x = 0; x < X.order(); ++x)
        if (X.conj(base, x) == y) {
            conj_cache_.emplace(std::make_pair(base, y), x);
            return x;
        }
    throw ElementDoesNotConnect();
}

Cyclotomic CategoryD::ribbon_theta(const SimpleObjectD& V) const {
    return V.chi.at(V.base) / V.chi.at(group().identity());
}

long CategoryD::dim_D(const SimpleObjectD& V) const {
    Rational d = V.chi.at(group().identity()).rational_value();
    return static_cast<long>(V.cls.members.size()) * d.get_num().get_si();
}

Cyclotomic CategoryD::char_at(const SimpleObjectD& V, int y, int v) const {
    if (!std::binary_search(V.cls.members.begin(), V.cls.members.end(), y))
        return Cyclotomic::zero(conductor_);
    const FiniteGroup& X = group();
    if (X.mul(v, y) != X.mul(y, v)) return Cyclotomic::zero(conductor_);
    const int c = conjugator(V.base, y);  // c^-1 base c = y
    return V.chi.at(X.mul(X.mul(c, v), X.inv(c))).lifted(conductor_);
}

Cyclotomic CategoryD::char_D(const SimpleObjectD& V, int y, int x) const {
    const FiniteGroup& X = group();
    if (X.mul(x, y) != X.mul(y, x)) return Cyclotomic::zero(conductor_);
    const auto [s, v] = f_->factor_MG(y);  // y = s v, u = v^-1
    const int q = X.mul(v, s);             // u^-1 s = s^-1 y s
    return char_at(V, q, X.mul(X.mul(X.inv(s), x), s));
}

SimpleObjectD CategoryD::dual_D(const SimpleObjectD& V) const {
    const FiniteGroup& X = group();
    const int yb = V.base;
    const int yinv = X.inv(yb);
    // character of V* at the point y^L = |y| <y>^-1, via
    // chi_{(V*)_{y^L}}(y |>~ z) = chi_{V_y}(z^-1), z in C(y); here
    // y |>~ z = u z u^-1 with u = |y| for z centralizing y.
    const int u = f_->g_grade(yb);
    const int ypl = f_->grade_left_inv(yb);
    Subgroup cent_l = centralizer(X, ypl);
    ClassFunction at_l;
    at_l.X = &X;
    at_l.elems = cent_l.elements;
    for (int w : cent_l.elements) {
        int z = X.mul(X.mul(X.inv(u), w), u);
        at_l.vals.push_back(V.chi.at(X.inv(z)));
    }
    // move to the canonical base point of class(y^-1) (= class(y^L))
    const auto classes = conjugacy_classes(X);
    const ConjugacyClass* cls = nullptr;
    for (const auto& c : classes)
        if (std::binary_search(c.members.begin(), c.members.end(), yinv)) cls = &c;
    SimpleObjectD out;
    out.cls = *cls;
    out.base = cls->representative;
    out.stab = centralizer(X, out.base).elements;
    if (out.base == ypl) {
        out.chi = std::move(at_l);
    } else {
        int w = conjugator(ypl, out.base);  // w^-1 y^L w = base
        out.chi = transport_character(at_l, w, out.stab);
    }
    auto table = character_table(X, Subgroup(X, out.stab));
    out.table_row = -1;
    for (size_t r = 0; r < table.rows.size(); ++r)
        if (table.rows[r] == out.chi) out.table_row = static_cast<int>(r);
    if (out.table_row < 0) throw GroupError("dual character is not irreducible");
    out.label = X.name(out.base) + "#" + std::to_string(out.table_row);
    return out;
}

int CategoryD::identify(int y, const ClassFunction& chi_at_y) const {
    const FiniteGroup& X = group();
    for (size_t k = 0; k < simples_.size(); ++k) {
        const auto& V = simples_[k];
        if (!std::binary_search(V.cls.members.begin(), V.cls.members.end(), y)) continue;
        const int c = conjugator(V.base, y);
        // chi_{V_y}(v) = chi_base(c v c^-1); compare with the given character
        bool same = true;
        for (size_t i = 0; i < chi_at_y.elems.size() && same; ++i) {
            int v = chi_at_y.elems[i];
            same = (V.chi.at(X.mul(X.mul(c, v), X.inv(c))) == chi_at_y.vals[i]);
        }
        if (same) return static_cast<int>(k);
    }
    return -1;
}

int CategoryD::dual_index(int simple_index) const {
    SimpleObjectD d = dual_D(simples_[static_cast<size_t>(simple_index)]);
    for (size_t k = 0; k < simples_.size(); ++k) {
        const auto& V = simples_[k];
        if (V.base == d.base && V.table_row == d.table_row) return static_cast<int>(k);
    }
    throw GroupError("dual simple not found in catalog");
}

}  // namespace modcat
