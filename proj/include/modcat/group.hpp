#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace modcat {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonAssociative : GroupError {
    NonAssociative() : GroupError("product table is not associative") {}
};
struct NotLatinSquare : GroupError {
    NotLatinSquare() : GroupError("product table is not a Latin square") {}
};
struct EmptyGeneratorSet : GroupError {
    EmptyGeneratorSet() : GroupError("empty generator set") {}
};

/// Cayley-table group on dense element indices 0..order-1, identity at 0.
class FiniteGroup {
public:
    /// Validates Latin square, associativity, identity and inverses.
    FiniteGroup(std::vector<std::vector<int>> product_table, std::vector<std::string> names);

    /// Closure of permutations of {0..degree-1} under composition, breadth
    /// first in order of discovery (identity first, then the generators).
    static FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& generators);

    int order() const { return order_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return product_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int conj(int y, int x) const { return mul(mul(inv(x), y), x); }  // x^-1 y x
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<int>>& table() const { return product_; }

    int element_order(int a) const;
    int exponent() const;  // lcm of element orders

    int index_of(const std::string& name) const;  // -1 if absent

private:
    int order_;
    std::vector<std::vector<int>> product_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
};

/// Subgroup as a sorted set of parent element indices.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements;  // sorted, contains identity

    Subgroup() = default;
    /// Validates closure under product and inverse, membership of identity.
    Subgroup(const FiniteGroup& X, std::vector<int> elems);

    bool contains(int g) const;
    int order() const { return static_cast<int>(elements.size()); }
    /// Position of parent element g in `elements`, -1 if absent.
    int position(int g) const;
    /// Extract a standalone FiniteGroup (element k = elements[k]); identity
    /// stays at index 0 because elements are sorted and contain 0.
    FiniteGroup as_group() const;
};

struct ConjugacyClass {
    int representative = 0;        // smallest element index
    std::vector<int> members;      // sorted
};

/// Classes partition the group; sorted by representative.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& X);

/// {x in X : xy = yx}
Subgroup centralizer(const FiniteGroup& X, int y);

/// Subgroup generated by a set of elements.
Subgroup generated_subgroup(const FiniteGroup& X, const std::vector<int>& gens);

}  // namespace modcat
