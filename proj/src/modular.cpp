#include "modcat/modular.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace modcat {

bool RelationReport::all() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.holds; });
}

const RelationReport::Item* RelationReport::find(const std::string& name) const {
    for (const auto& i : items)
        if (i.name == name) return &i;
    return nullptr;
}

Cyclotomic s_tilde_entry(const CategoryD& cat, const SimpleObjectD& V, const SimpleObjectD& W) {
    // trace(Psi^2 on V (x) W) in the group-character form: the sum over the
    // grade pairs of both objects of transported fiber characters.
    const FiniteGroup& X = cat.group();
    const CosetFactorization& f = cat.factorization();
    Cyclotomic total = Cyclotomic::zero(cat.conductor());
    for (int yW : W.cls.members) {
        const int s = f.m_grade(yW);
        const int u = f.g_grade(yW);
        for (int yV : V.cls.members) {
            const int t = f.m_grade(yV);
            const int v = f.g_grade(yV);
            // chi_{W_{u^-1 s}}(u^-1 t^-1 v u) * chi_{V_{v^-1 t}}(u s^-1)
            const int xW = X.mul(X.mul(X.inv(u), X.mul(X.inv(t), v)), u);
            const int xV = X.mul(u, X.inv(s));
            Cyclotomic a = cat.char_at(W, yW, xW);
            if (a.is_zero()) continue;
            Cyclotomic b = cat.char_at(V, yV, xV);
            if (b.is_zero()) continue;
            total += a * b;
        }
    }
    return total;
}

namespace {

std::string coord(const std::vector<std::string>& labels, size_t i, size_t j) {
    return "(" + labels[i] + "," + labels[j] + ")";
}

}  // namespace

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
    const size_t n = a.size(), m = b[0].size(), k = b.size();
    CycMatrix out(n, std::vector<Cyclotomic>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (b[l][j].is_zero()) continue;
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    return out;
}

bool mat_equal(const CycMatrix& a, const CycMatrix& b, std::string* witness) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) {
                if (witness) *witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
    }
    return true;
}

CycMatrix mat_scale(const CycMatrix& a, const Cyclotomic& c) {
    CycMatrix out = a;
    for (auto& row : out)
        for (auto& v : row) v *= c;
    return out;
}

Cyclotomic mat_det(CycMatrix a) {
    const size_t n = a.size();
    Cyclotomic det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Cyclotomic(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Cyclotomic ipiv = a[col][col].inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Cyclotomic f = a[i][col] * ipiv;
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

ModularData build_modular_data(const CategoryD& cat, std::vector<int> ordering,
                               std::vector<std::string> labels, int threads) {
    const auto& simples = cat.simples();
    const size_t n = simples.size();
    ModularData md;
    if (ordering.empty()) {
        ordering.resize(n);
        std::iota(ordering.begin(), ordering.end(), 0);
    }
    if (ordering.size() != n) throw GroupError("ordering must enumerate all simples");
    md.order = ordering;
    if (labels.empty())
        for (int k : ordering) labels.push_back(simples[static_cast<size_t>(k)].label);
    md.labels = labels;

    const int cond = cat.conductor();
    const Cyclotomic zero = Cyclotomic::zero(cond);

    std::vector<int> dual(n);
    for (size_t k = 0; k < n; ++k) dual[k] = cat.dual_index(static_cast<int>(k));

    md.s_tilde.assign(n, std::vector<Cyclotomic>(n, zero));
    md.t_mat.assign(n, std::vector<Cyclotomic>(n, zero));
    md.c_mat.assign(n, std::vector<Cyclotomic>(n, zero));

    auto fill_rows = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            const auto& V = simples[static_cast<size_t>(ordering[i])];
            for (size_t j = 0; j < n; ++j) {
                const auto& W = simples[static_cast<size_t>(ordering[j])];
                md.s_tilde[i][j] = s_tilde_entry(cat, V, W).lifted(cond);
            }
            md.t_mat[i][i] = cat.ribbon_theta(V).lifted(cond);
        }
    };
    if (threads <= 1) {
        fill_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (n + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
        for (size_t lo = 0; lo < n; lo += chunk)
            pool.emplace_back(fill_rows, lo, std::min(n, lo + chunk));
        for (auto& t : pool) t.join();
    }

    std::vector<size_t> pos(n);
    for (size_t i = 0; i < n; ++i) pos[static_cast<size_t>(ordering[i])] = i;
    for (size_t i = 0; i < n; ++i)
        md.c_mat[i][pos[static_cast<size_t>(dual[static_cast<size_t>(ordering[i])])]] = Cyclotomic::one(cond);

    md.p_plus = zero;
    md.p_minus = zero;
    for (size_t k = 0; k < n; ++k) {
        const auto& V = simples[k];
        Cyclotomic th = cat.ribbon_theta(V).lifted(cond);
        Cyclotomic d2(static_cast<long>(cat.dim_D(V)) * cat.dim_D(V));
        md.p_plus += th * d2;
        md.p_minus += th.inverse() * d2;
    }
    Cyclotomic pp = md.p_plus * md.p_minus;
    if (pp.is_rational()) {
        Rational q = pp.rational_value();
        if (q >= 0 && q.get_den() == 1) {
            mpz_class root = sqrt(q.get_num());
            if (root * root == q.get_num()) md.sqrt_pp = Rational(root);
        }
    }
    if (md.sqrt_pp) {
        Cyclotomic inv_root = Cyclotomic(Rational(1) / *md.sqrt_pp, cond);
        md.s_normalized = mat_scale(md.s_tilde, inv_root);
    }

    // relation report (exact, square-root free where needed)
    auto& items = md.report.items;
    auto add = [&](const std::string& name, bool holds, std::string witness) {
        items.push_back({name, holds, holds ? "" : witness});
    };
    std::string w;
    {
        bool sym = true;
        std::string wit;
        for (size_t i = 0; i < n && sym; ++i)
            for (size_t j = i + 1; j < n && sym; ++j)
                if (!(md.s_tilde[i][j] == md.s_tilde[j][i])) {
                    sym = false;
                    wit = coord(md.labels, i, j);
                }
        add("s_tilde_symmetric", sym, wit);
    }
    {
        // column of the unit object (class {e}, trivial character)
        size_t unit = n;
        for (size_t j = 0; j < n; ++j) {
            const auto& W = simples[static_cast<size_t>(ordering[j])];
            bool trivial = W.base == cat.group().identity();
            if (trivial)
                for (const auto& v : W.chi.vals) trivial = trivial && v == Cyclotomic(1);
            if (trivial) {
                unit = j;
                break;
            }
        }
        bool ok = unit < n;
        std::string wit = "unit object not found";
        if (ok)
            for (size_t i = 0; i < n && ok; ++i) {
                long d = cat.dim_D(simples[static_cast<size_t>(ordering[i])]);
                if (!(md.s_tilde[i][unit] == Cyclotomic(d))) {
                    ok = false;
                    wit = coord(md.labels, i, unit);
                }
            }
        add("s_tilde_unit_column_is_dim", ok, wit);
    }
    {
        CycMatrix st = mat_mul(md.s_tilde, md.t_mat);
        CycMatrix st3 = mat_mul(mat_mul(st, st), st);
        CycMatrix s2 = mat_mul(md.s_tilde, md.s_tilde);
        bool ok = mat_equal(st3, mat_scale(s2, md.p_plus), &w);
        add("(S~T)^3 = P+ * S~^2", ok, w);
        bool ok2 = mat_equal(s2, mat_scale(md.c_mat, pp), &w);
        add("S~^2 = (P+P-) * C", ok2, w);
        // square-root-free squared form of (ST)^3 = sqrt(P+/P-) S^2
        bool ok3 = mat_equal(mat_mul(st3, st3), mat_scale(mat_mul(s2, s2), md.p_plus * md.p_plus), &w);
        add("(S~T)^6 = P+^2 * S~^4", ok3, w);
    }
    {
        // S~_{VW} = S~_{V*W*}
        bool ok = true;
        std::string wit;
        std::vector<size_t> pos(n);
        for (size_t i = 0; i < n; ++i) pos[static_cast<size_t>(ordering[i])] = i;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j) {
                size_t di = pos[static_cast<size_t>(dual[static_cast<size_t>(ordering[i])])];
                size_t dj = pos[static_cast<size_t>(dual[static_cast<size_t>(ordering[j])])];
                if (!(md.s_tilde[i][j] == md.s_tilde[di][dj])) {
                    ok = false;
                    wit = coord(md.labels, i, j);
                }
            }
        add("S~_{VW} = S~_{V*W*}", ok, wit);
    }
    add("C^2 = 1", mat_equal(mat_mul(md.c_mat, md.c_mat),
                             [&] {
                                 CycMatrix id(n, std::vector<Cyclotomic>(n, zero));
                                 for (size_t i = 0; i < n; ++i) id[i][i] = Cyclotomic::one(cond);
                                 return id;
                             }(),
                             &w),
        w);
    add("CT = TC", mat_equal(mat_mul(md.c_mat, md.t_mat), mat_mul(md.t_mat, md.c_mat), &w), w);
    add("CS~ = S~C", mat_equal(mat_mul(md.c_mat, md.s_tilde), mat_mul(md.s_tilde, md.c_mat), &w), w);
    {
        long long sum_d2 = 0;
        for (size_t k = 0; k < n; ++k) {
            long d = cat.dim_D(simples[k]);
            sum_d2 += static_cast<long long>(d) * d;
        }
        add("P+P- = sum dim^2", pp == Cyclotomic(static_cast<long>(sum_d2)),
            "P+P- = " + pp.to_string());
    }
    if (md.sqrt_pp) {
        const auto& S = *md.s_normalized;
        CycMatrix s2 = mat_mul(S, S);
        bool ok = mat_equal(s2, md.c_mat, &w);
        add("S^2 = C (normalized)", ok, w);
        // (ST)^3 = sqrt(P+/P-) S^2 with sqrt(P+/P-) = P+/sqrt(P+P-)
        CycMatrix st = mat_mul(S, md.t_mat);
        CycMatrix st3 = mat_mul(mat_mul(st, st), st);
        Cyclotomic lam = md.p_plus * Cyclotomic(Rational(1) / *md.sqrt_pp, cond);
        bool ok2 = mat_equal(st3, mat_scale(s2, lam), &w);
        add("(ST)^3 = sqrt(P+/P-) S^2 (normalized)", ok2, w);
    }
    return md;
}

ModularityReport verify_modular(const CategoryD& cat, const ModularData& md) {
    ModularityReport r;
    r.finitely_many = true;
    // Schur labels: (class base, transported character) pairwise distinct
    const auto& simples = cat.simples();
    r.schur_labels_distinct = true;
    for (size_t a = 0; a < simples.size() && r.schur_labels_distinct; ++a)
        for (size_t b = a + 1; b < simples.size() && r.schur_labels_distinct; ++b) {
            if (simples[a].base != simples[b].base) continue;
            if (simples[a].chi == simples[b].chi) r.schur_labels_distinct = false;
        }
    r.s_invertible = !mat_det(md.s_tilde).is_zero();
    return r;
}

}  // namespace modcat
