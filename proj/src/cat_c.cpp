#include "modcat/cat_c.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace modcat {

int connect_in_orbit(const CosetFactorization& f, int s, int t) {
    const FiniteGroup& X = f.group();
    if (s == t) return X.identity();
    std::map<int, int> how;  // point -> u with s <| u = point
    how[s] = X.identity();
    std::deque<int> bfs{s};
    while (!bfs.empty()) {
        int p = bfs.front();
        bfs.pop_front();
        for (int u : f.subgroup().elements) {
            int q = f.act_M(p, u);
            if (how.count(q)) continue;
            how[q] = X.mul(how[p], u);
            if (q == t) return how[q];
            bfs.push_back(q);
        }
    }
    throw ElementDoesNotConnect();
}

namespace {

std::vector<std::vector<int>> orbits_of_M(const CosetFactorization& f) {
    std::vector<std::vector<int>> orbits;
    std::set<int> seen;
    for (int s : f.transversal()) {
        if (seen.count(s)) continue;
        std::set<int> orb;
        std::deque<int> bfs{s};
        orb.insert(s);
        while (!bfs.empty()) {
            int p = bfs.front();
            bfs.pop_front();
            for (int u : f.subgroup().elements) {
                int q = f.act_M(p, u);
                if (orb.insert(q).second) bfs.push_back(q);
            }
        }
        orbits.emplace_back(orb.begin(), orb.end());
        seen.insert(orb.begin(), orb.end());
    }
    return orbits;
}

std::vector<int> stabilizer_of_point(const CosetFactorization& f, int s) {
    std::vector<int> stab;
    for (int u : f.subgroup().elements)
        if (f.act_M(s, u) == s) stab.push_back(u);
    return stab;
}

}  // namespace

std::vector<SimpleObjectC> simples_C(const CosetFactorization& f) {
    const FiniteGroup& X = f.group();
    std::vector<SimpleObjectC> out;
    for (const auto& orbit : orbits_of_M(f)) {
        const int base = orbit.front();
        auto stab = stabilizer_of_point(f, base);
        auto table = character_table(X, Subgroup(X, stab));
        for (size_t r = 0; r < table.rows.size(); ++r) {
            SimpleObjectC s;
            s.orbit = orbit;
            s.base = base;
            s.stab = stab;
            s.chi = table.rows[r];
            s.table_row = static_cast<int>(r);
            out.push_back(std::move(s));
        }
    }
    return out;
}

bool isomorphic_C(const CosetFactorization& f, const SimpleObjectC& a, const SimpleObjectC& b) {
    if (a.orbit != b.orbit) return false;
    if (a.base == b.base) return a.chi == b.chi;
    int u = connect_in_orbit(f, a.base, b.base);  // a.base <| u = b.base
    return transport_character(a.chi, u, b.stab) == b.chi;
}

SimpleObjectC dual_C(const CosetFactorization& f, const SimpleObjectC& V) {
    const FiniteGroup& X = f.group();
    // orbit of left inverses
    std::set<int> orbL;
    for (int s : V.orbit) orbL.insert(f.left_inv(s));
    SimpleObjectC out;
    out.orbit.assign(orbL.begin(), orbL.end());
    out.base = out.orbit.front();
    out.stab = stabilizer_of_point(f, out.base);

    // character of V* at the point base^L via chi_{(V*)_{s^L}}(s |> z) = chi(z^-1),
    // where s = V.base; then transport from s^L to the canonical base point.
    const int s = V.base;
    const int sl = f.left_inv(s);
    std::vector<int> stab_sl = stabilizer_of_point(f, sl);
    // z -> s |> z maps stab(s) onto stab(s^L) bijectively
    std::map<int, int> from;  // s|>z -> z
    for (int z : V.stab) {
        int w = f.act_G(s, z);
        if (from.count(w) || f.act_M(sl, w) != sl) throw ElementDoesNotConnect();
        from[w] = z;
    }
    ClassFunction at_sl;
    at_sl.X = &X;
    at_sl.elems = stab_sl;
    for (int w : stab_sl) {
        auto it = from.find(w);
        if (it == from.end()) throw ElementDoesNotConnect();
        at_sl.vals.push_back(V.chi.at(X.inv(it->second)));
    }
    if (out.base == sl) {
        out.chi = std::move(at_sl);
    } else {
        int u = connect_in_orbit(f, sl, out.base);  // s^L <| u = base
        out.chi = transport_character(at_sl, u, out.stab);
    }
    // identify the row index in the stabilizer table
    auto table = character_table(X, Subgroup(X, out.stab));
    out.table_row = -1;
    for (size_t r = 0; r < table.rows.size(); ++r)
        if (table.rows[r] == out.chi) out.table_row = static_cast<int>(r);
    if (out.table_row < 0) throw GroupError("dual character is not irreducible");
    return out;
}

std::vector<int> decompose_graded_module(const CosetFactorization& f,
                                         const std::vector<SimpleObjectC>& simples,
                                         const GradedModuleC& T) {
    const FiniteGroup& X = f.group();
    const auto& G = f.subgroup().elements;
    const size_t n = T.grades.size();
    if (T.act.size() != G.size()) throw GroupError("module action table size mismatch");
    // action property and grade covariance
    for (size_t a = 0; a < G.size(); ++a)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!(T.act[a][i][j] == Cyclotomic(0)) && T.grades[j] != f.act_M(T.grades[i], G[a]))
                    throw GradingNotRespected();

    std::vector<int> mult(simples.size(), 0);
    for (size_t k = 0; k < simples.size(); ++k) {
        const auto& V = simples[k];
        // character of the stab(base) action on the base fiber of T
        ClassFunction chi_fib;
        chi_fib.X = &X;
        chi_fib.elems = V.stab;
        for (int u : V.stab) {
            Cyclotomic tr;
            size_t pos = static_cast<size_t>(f.subgroup().position(u));
            for (size_t i = 0; i < n; ++i)
                if (T.grades[i] == V.base) tr += T.act[pos][i][i];
            chi_fib.vals.push_back(std::move(tr));
        }
        Cyclotomic ip = inner_product(chi_fib, V.chi);
        if (!ip.is_rational()) throw GroupError("non-rational multiplicity");
        Rational q = ip.rational_value();
        if (q.get_den() != 1 || q < 0) throw GroupError("invalid multiplicity");
        mult[k] = static_cast<int>(q.get_num().get_si());
    }
    return mult;
}

}  // namespace modcat
