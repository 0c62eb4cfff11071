#pragma once

#include "modcat/cyclotomic.hpp"
#include "modcat/group.hpp"

namespace modcat {

struct GroupTooLarge : GroupError {
    GroupTooLarge() : GroupError("group exceeds the character-table size bound") {}
};
struct ElementDoesNotConnect : GroupError {
    ElementDoesNotConnect() : GroupError("element does not connect the given base points") {}
};

/// A function on a subgroup of X that is constant on the subgroup's
/// conjugacy classes. Values indexed by position in `elems` (sorted
/// parent indices).
struct ClassFunction {
    const FiniteGroup* X = nullptr;
    std::vector<int> elems;
    std::vector<Cyclotomic> vals;

    const Cyclotomic& at(int parent_elem) const;
    Cyclotomic degree() const { return at(0); }
    bool operator==(const ClassFunction& o) const { return elems == o.elems && vals == o.vals; }
};

struct CharacterTable {
    const FiniteGroup* X = nullptr;       // ambient group
    std::vector<int> elems;               // subgroup elements (sorted parent ids)
    std::vector<ConjugacyClass> classes;  // classes of the subgroup, by parent ids
    std::vector<ClassFunction> rows;      // irreducible characters, canonical order
    std::vector<int> degrees;
};

/// Burnside-Dixon character table of the subgroup `H` of `X`.
/// Throws GroupTooLarge above `bound`.
CharacterTable character_table(const FiniteGroup& X, const Subgroup& H, int bound = 2000);
CharacterTable character_table(const FiniteGroup& X, int bound = 2000);  // H = X

/// chi'(v) = chi(u v u^-1), a class function on u^-1 H u. For the coset
/// category pass u in G with s <| u = t; for the double pass the
/// conjugator x with base <|~ x = y. `connects` must hold: u H u^-1 = H'.
ClassFunction transport_character(const ClassFunction& chi, int u, const std::vector<int>& target_elems);

/// chi*(z) = chi(z^-1)
ClassFunction dual_character(const ClassFunction& chi);

/// (1/|H|) sum_h a(h) conj(b(h)), exact.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

}  // namespace modcat
