#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "modcat/io.hpp"
#include "modcat/oracle.hpp"

namespace testing {

using namespace modcat;

inline std::string data_dir() { return MODCAT_DATA_DIR; }

/// D6 = <a, b | a^6 = b^2 = e, ab = ba^5>, elements a^i then b a^i.
inline FiniteGroup d6() {
    auto idx = [](int b, int i) { return b * 6 + ((i % 6) + 6) % 6; };
    std::vector<std::vector<int>> t(12, std::vector<int>(12));
    for (int bi = 0; bi < 2; ++bi)
        for (int i = 0; i < 6; ++i)
            for (int bj = 0; bj < 2; ++bj)
                for (int j = 0; j < 6; ++j) {
                    // (b^bi a^i)(b^bj a^j), using a^i b = b a^-i
                    t[idx(bi, i)][idx(bj, j)] = bj ? idx(1 - bi, j - i) : idx(bi, i + j);
                }
    std::vector<std::string> names = {"e",  "a",  "a2",  "a3",  "a4",  "a5",
                                      "b", "ba", "ba2", "ba3", "ba4", "ba5"};
    return FiniteGroup(std::move(t), std::move(names));
}

inline Subgroup d6_G(const FiniteGroup& X) { return Subgroup(X, {0, 2, 4, 6, 8, 10}); }
inline std::vector<int> d6_M() { return {0, 1}; }

inline CosetFactorization d6_fact(const FiniteGroup& X) { return CosetFactorization(X, d6_G(X), d6_M()); }

inline FiniteGroup s3() { return FiniteGroup::from_permutations(3, {{1, 2, 0}, {1, 0, 2}}); }
inline FiniteGroup z3() { return FiniteGroup::from_permutations(3, {{1, 2, 0}}); }
inline FiniteGroup c6() { return FiniteGroup::from_permutations(6, {{1, 2, 3, 4, 5, 0}}); }
inline FiniteGroup d4() { return FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {2, 1, 0, 3}}); }

/// Quaternion group: 1,-1,i,-i,j,-j,k,-k.
inline FiniteGroup q8() {
    // unit multiplication: (a, b) -> (sign, unit), units 0..3 = 1,i,j,k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    auto enc = [](int u, int s) { return u * 2 + (s < 0 ? 1 : 0); };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int ua = 0; ua < 4; ++ua)
        for (int sa : {+1, -1})
            for (int ub = 0; ub < 4; ++ub)
                for (int sb : {+1, -1})
                    t[enc(ua, sa)][enc(ub, sb)] = enc(unit[ua][ub], sa * sb * sign[ua][ub]);
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return FiniteGroup(std::move(t), std::move(names));
}

/// Subgroup of all elements whose order divides 3, plus closure (A3 in S3).
inline Subgroup rotation_subgroup(const FiniteGroup& X, int order) {
    for (int g = 1; g < X.order(); ++g)
        if (X.element_order(g) == order) return generated_subgroup(X, {g});
    throw std::runtime_error("no element of requested order");
}

inline std::vector<int> names_to_ids(const FiniteGroup& X, const std::vector<std::string>& ns) {
    std::vector<int> out;
    for (const auto& n : ns) out.push_back(X.index_of(n));
    return out;
}

/// First transversal (in lexicographic element order) that is simultaneously
/// a left and right transversal of G, i.e. accepted by the factorization.
inline std::vector<int> find_two_sided_transversal(const FiniteGroup& X, const Subgroup& G) {
    std::vector<std::vector<int>> cosets;
    std::set<int> covered;
    for (int s = 0; s < X.order(); ++s) {
        if (covered.count(s)) continue;
        std::vector<int> c;
        for (int v : G.elements) {
            c.push_back(X.mul(s, v));
            covered.insert(X.mul(s, v));
        }
        std::sort(c.begin(), c.end());
        cosets.push_back(std::move(c));
    }
    std::vector<int> M(cosets.size());
    std::function<bool(size_t)> dfs = [&](size_t k) -> bool {
        if (k == cosets.size()) {
            try {
                CosetFactorization f(X, G, M);
                return true;
            } catch (const FactorizationError&) {
                return false;
            }
        }
        for (int cand : cosets[k]) {
            if (k == 0 && cand != X.identity()) continue;
            M[k] = cand;
            if (dfs(k + 1)) return true;
        }
        return false;
    };
    if (!dfs(0)) throw std::runtime_error("no two-sided transversal found");
    return M;
}

}  // namespace testing
