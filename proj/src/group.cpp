#include "modcat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace modcat {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> product_table, std::vector<std::string> names)
    : order_(static_cast<int>(product_table.size())),
      product_(std::move(product_table)),
      names_(std::move(names)) {
    if (order_ == 0) throw GroupError("empty product table");
    if (static_cast<int>(names_.size()) != order_) throw GroupError("names/table size mismatch");
    for (const auto& row : product_)
        if (static_cast<int>(row.size()) != order_) throw GroupError("ragged product table");
    for (const auto& row : product_)
        for (int v : row)
            if (v < 0 || v >= order_) throw GroupError("product table entry out of range");

    // Latin square
    for (int i = 0; i < order_; ++i) {
        std::vector<bool> seen_row(order_, false), seen_col(order_, false);
        for (int j = 0; j < order_; ++j) {
            if (seen_row[product_[i][j]]) throw NotLatinSquare();
            seen_row[product_[i][j]] = true;
            if (seen_col[product_[j][i]]) throw NotLatinSquare();
            seen_col[product_[j][i]] = true;
        }
    }
    // identity at index 0
    for (int j = 0; j < order_; ++j)
        if (product_[0][j] != j || product_[j][0] != j)
            throw GroupError("element 0 is not a two-sided identity");
    // associativity, O(n^3)
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (product_[product_[a][b]][c] != product_[a][product_[b][c]])
                    throw NonAssociative();
    inverse_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (product_[a][b] == 0) {
                inverse_[a] = b;
                break;
            }
    for (int a = 0; a < order_; ++a)
        if (inverse_[a] < 0 || product_[a][inverse_[a]] != 0 || product_[inverse_[a]][a] != 0)
            throw GroupError("missing two-sided inverse");
}

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<std::vector<int>>& generators) {
    if (generators.empty()) throw EmptyGeneratorSet();
    if (degree <= 0) throw GroupError("permutation degree must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree) throw GroupError("generator degree mismatch");
        std::vector<bool> hit(degree, false);
        for (int v : g) {
            if (v < 0 || v >= degree || hit[v]) throw GroupError("generator is not a permutation");
            hit[v] = true;
        }
    }
    std::vector<int> idperm(degree);
    std::iota(idperm.begin(), idperm.end(), 0);
    auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(degree);
        for (int i = 0; i < degree; ++i) c[i] = b[a[i]];  // apply a, then b
        return c;
    };

    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index;
    auto add = [&](const std::vector<int>& p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(elems.size());
        elems.push_back(p);
        index.emplace(p, id);
        return id;
    };
    add(idperm);
    for (const auto& g : generators) add(g);
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : generators) {
            auto p = compose(elems[head], g);
            add(p);
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = index.at(compose(elems[i], elems[j]));
    std::vector<std::string> names(n);
    names[0] = "e";
    for (int i = 1; i < n; ++i) names[i] = "g" + std::to_string(i);
    return FiniteGroup(std::move(table), std::move(names));
}

int FiniteGroup::element_order(int a) const {
    int k = 1, p = a;
    while (p != 0) {
        p = mul(p, a);
        ++k;
    }
    return k;
}

int FiniteGroup::exponent() const {
    long long l = 1;
    for (int a = 0; a < order_; ++a) l = std::lcm(l, static_cast<long long>(element_order(a)));
    return static_cast<int>(l);
}

int FiniteGroup::index_of(const std::string& name) const {
    for (int i = 0; i < order_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

Subgroup::Subgroup(const FiniteGroup& X, std::vector<int> elems) : parent(&X), elements(std::move(elems)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements.front() != X.identity())
        throw GroupError("subgroup must contain the identity");
    for (int a : elements) {
        if (a < 0 || a >= X.order()) throw GroupError("subgroup element out of range");
        if (!std::binary_search(elements.begin(), elements.end(), X.inv(a)))
            throw GroupError("subgroup not closed under inverse");
        for (int b : elements)
            if (!std::binary_search(elements.begin(), elements.end(), X.mul(a, b)))
                throw GroupError("subgroup not closed under product");
    }
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

int Subgroup::position(int g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || *it != g) return -1;
    return static_cast<int>(it - elements.begin());
}

FiniteGroup Subgroup::as_group() const {
    const int n = order();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = position(parent->mul(elements[i], elements[j]));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = parent->name(elements[i]);
    return FiniteGroup(std::move(table), std::move(names));
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& X) {
    std::vector<ConjugacyClass> out;
    std::vector<bool> seen(X.order(), false);
    for (int y = 0; y < X.order(); ++y) {
        if (seen[y]) continue;
        std::set<int> members;
        for (int x = 0; x < X.order(); ++x) members.insert(X.conj(y, x));
        ConjugacyClass c;
        c.members.assign(members.begin(), members.end());
        c.representative = c.members.front();
        for (int m : c.members) seen[m] = true;
        out.push_back(std::move(c));
    }
    return out;
}

Subgroup centralizer(const FiniteGroup& X, int y) {
    std::vector<int> elems;
    for (int x = 0; x < X.order(); ++x)
        if (X.mul(x, y) == X.mul(y, x)) elems.push_back(x);
    return Subgroup(X, std::move(elems));
}

Subgroup generated_subgroup(const FiniteGroup& X, const std::vector<int>& gens) {
    std::set<int> elems{X.identity()};
    std::vector<int> frontier{X.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int g : gens) {
                int p = X.mul(a, g);
                if (elems.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return Subgroup(X, std::vector<int>(elems.begin(), elems.end()));
}

}  // namespace modcat
