#include "modcat/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace modcat {

const Cyclotomic& ClassFunction::at(int parent_elem) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), parent_elem);
    if (it == elems.end() || *it != parent_elem)
        throw GroupError("class function evaluated outside its subgroup");
    return vals[static_cast<size_t>(it - elems.begin())];
}

namespace {

// ---- arithmetic mod a small prime ----
long pw(long b, long e, long p) {
    long r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
long inv_mod(long a, long p) { return pw(((a % p) + p) % p, p - 2, p); }

long smallest_dixon_prime(long exponent, long order) {
    const double lim = 2.0 * std::sqrt(static_cast<double>(order));
    for (long p = 2;; ++p) {
        bool prime = p >= 2;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if ((p - 1) % exponent != 0) continue;
        if (static_cast<double>(p) <= lim) continue;
        return p;
    }
}

long primitive_root(long p) {
    std::vector<long> fac;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) fac.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : fac)
            if (pw(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

using FpMatrix = std::vector<std::vector<long>>;

// kernel basis of M over F_p (rows are vectors)
std::vector<std::vector<long>> kernel_mod_p(FpMatrix M, long p) {
    const size_t n = M.size();
    std::vector<long> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && M[piv][col] % p == 0) ++piv;
        if (piv == n) continue;
        std::swap(M[piv], M[row]);
        long iv = inv_mod(M[row][col], p);
        for (size_t j = 0; j < n; ++j) M[row][j] = M[row][j] % p * iv % p;
        for (size_t i = 0; i < n; ++i) {
            if (i == row) continue;
            long f = ((M[i][col] % p) + p) % p;
            if (!f) continue;
            for (size_t j = 0; j < n; ++j) M[i][j] = ((M[i][j] - f * M[row][j]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<long>(col));
        ++row;
    }
    std::vector<std::vector<long>> basis;
    std::vector<bool> is_pivot(n, false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<long> v(n, 0);
        v[fc] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<size_t>(pivot_col[r])] = ((-M[r][fc]) % p + p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

struct EmbeddingKey {
    double re, im;
    bool operator<(const EmbeddingKey& o) const {
        if (re < o.re - 1e-9) return true;
        if (re > o.re + 1e-9) return false;
        return im < o.im - 1e-9;
    }
};

}  // namespace

CharacterTable character_table(const FiniteGroup& X, const Subgroup& Hsub, int bound) {
    if (Hsub.order() > bound) throw GroupTooLarge();
    const FiniteGroup H = Hsub.as_group();
    const int h = H.order();
    const auto classes = conjugacy_classes(H);
    const int r = static_cast<int>(classes.size());
    const long N = H.exponent();
    const long p = smallest_dixon_prime(N, h);

    std::vector<int> class_of(h);
    for (int i = 0; i < r; ++i)
        for (int m : classes[i].members) class_of[m] = i;
    std::vector<int> inv_class(r);
    for (int i = 0; i < r; ++i) inv_class[i] = class_of[H.inv(classes[i].representative)];

    // class multiplication coefficients a[i][j][k]: #{(x,y) in C_i x C_j : xy = rep_k}
    std::vector<FpMatrix> B(r, FpMatrix(r, std::vector<long>(r, 0)));
    for (int k = 0; k < r; ++k) {
        const int z = classes[k].representative;
        for (int x = 0; x < h; ++x) {
            const int i = class_of[x];
            const int j = class_of[H.mul(H.inv(x), z)];
            B[i][j][k] += 1;  // accumulate a_{ijk}
        }
    }
    // central character vector v: (B_i v)_j = sum_k a_{ijk} v_k = w_i v_j
    std::vector<FpMatrix> Bi(r, FpMatrix(r, std::vector<long>(r, 0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) Bi[i][j][k] = B[i][j][k] % p;

    // split F_p^r into common eigenspaces of the Bi
    std::vector<std::vector<std::vector<long>>> spaces;
    {
        std::vector<std::vector<long>> full;
        for (int i = 0; i < r; ++i) {
            std::vector<long> e(r, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        std::vector<std::vector<std::vector<long>>> next;
        for (auto& S : spaces) {
            const size_t d = S.size();
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            // restriction R of Bi to span(S): treat the basis rows as column
            // vectors, t_a = Bi * s_a, and solve t_a = sum_b R[b][a] s_b
            FpMatrix T(d, std::vector<long>(r, 0));
            for (size_t a = 0; a < d; ++a)
                for (int row = 0; row < r; ++row) {
                    long acc = 0;
                    for (int k = 0; k < r; ++k) acc = (acc + Bi[i][row][k] * S[a][k]) % p;
                    T[a][row] = acc;
                }
            // solve for R via Gaussian elimination on S^T augmented with T^T
            FpMatrix aug(r, std::vector<long>(d + d, 0));
            for (int row = 0; row < r; ++row) {
                for (size_t a = 0; a < d; ++a) aug[row][a] = S[a][static_cast<size_t>(row)];
                for (size_t a = 0; a < d; ++a) aug[row][d + a] = T[a][static_cast<size_t>(row)];
            }
            // eliminate
            size_t rr = 0;
            for (size_t col = 0; col < d && rr < static_cast<size_t>(r); ++col) {
                size_t piv = rr;
                while (piv < static_cast<size_t>(r) && aug[piv][col] % p == 0) ++piv;
                if (piv == static_cast<size_t>(r)) throw std::logic_error("basis not independent");
                std::swap(aug[piv], aug[rr]);
                long ivv = inv_mod(aug[rr][col], p);
                for (size_t j = 0; j < d + d; ++j) aug[rr][j] = aug[rr][j] % p * ivv % p;
                for (size_t ii = 0; ii < static_cast<size_t>(r); ++ii) {
                    if (ii == rr) continue;
                    long f = ((aug[ii][col] % p) + p) % p;
                    if (!f) continue;
                    for (size_t j = 0; j < d + d; ++j)
                        aug[ii][j] = ((aug[ii][j] - f * aug[rr][j]) % p + p) % p;
                }
                ++rr;
            }
            FpMatrix R(d, std::vector<long>(d, 0));
            for (size_t a = 0; a < d; ++a)       // column a of R sits in aug rows
                for (size_t b = 0; b < d; ++b) R[b][a] = aug[b][d + a];
            // eigen-split R over F_p
            bool split = false;
            for (long lam = 0; lam < p; ++lam) {
                FpMatrix K(d, std::vector<long>(d, 0));
                for (size_t a = 0; a < d; ++a)
                    for (size_t b = 0; b < d; ++b) K[a][b] = ((R[a][b] - (a == b ? lam : 0)) % p + p) % p;
                auto ker = kernel_mod_p(K, p);
                if (ker.empty() || ker.size() == d) continue;
                split = true;
                // new subspace: rows = combinations ker * S
                std::vector<std::vector<long>> NS;
                for (auto& kv : ker) {
                    std::vector<long> v(r, 0);
                    for (size_t b = 0; b < d; ++b)
                        for (int k = 0; k < r; ++k) v[k] = (v[k] + kv[b] * S[b][k]) % p;
                    NS.push_back(std::move(v));
                }
                next.push_back(std::move(NS));
            }
            if (!split) next.push_back(std::move(S));  // Bi acts as a scalar here
        }
        spaces = std::move(next);
        bool all1 = std::all_of(spaces.begin(), spaces.end(), [](const auto& S) { return S.size() == 1; });
        if (all1) break;
    }
    if (static_cast<int>(spaces.size()) != r) throw std::logic_error("eigenspace split incomplete");

    // central characters, normalized so that the identity-class entry is 1
    std::vector<std::vector<long>> omega;
    for (auto& S : spaces) {
        auto v = S[0];
        if (v[0] % p == 0) throw std::logic_error("degenerate central character");
        long f = inv_mod(v[0], p);
        for (auto& c : v) c = ((c % p) * f % p + p) % p;
        omega.push_back(std::move(v));
    }

    // degrees
    const long sq_h = static_cast<long>(std::sqrt(static_cast<double>(h))) + 1;
    std::vector<long> degree_mod(r), degrees(r);
    for (int t = 0; t < r; ++t) {
        long acc = 0;
        for (int i = 0; i < r; ++i) {
            long ni = static_cast<long>(classes[i].members.size());
            acc = (acc + omega[t][i] * omega[t][static_cast<size_t>(inv_class[i])] % p * inv_mod(ni, p)) % p;
        }
        long d2 = h % p * inv_mod(acc, p) % p;
        long d = -1;
        for (long c = 1; c <= sq_h; ++c)
            if (c * c % p == d2) {
                d = c;
                break;
            }
        if (d < 0) throw std::logic_error("degree recovery failed");
        degree_mod[t] = d;
        degrees[t] = d;
    }

    // lift values to Q(zeta_N) via eigenvalue multiplicities
    const long w0 = primitive_root(p);
    const long zN = pw(w0, (p - 1) / N, p);
    std::vector<long> power_class(static_cast<size_t>(N) * r);  // class_of(rep_j^t)
    for (int j = 0; j < r; ++j) {
        int g = classes[j].representative, cur = H.identity();
        for (long t = 0; t < N; ++t) {
            power_class[static_cast<size_t>(j) * N + t] = class_of[cur];
            cur = H.mul(cur, g);
        }
    }

    CharacterTable table;
    table.X = &X;
    table.elems = Hsub.elements;
    for (const auto& c : classes) {
        ConjugacyClass pc;
        pc.members.reserve(c.members.size());
        for (int m : c.members) pc.members.push_back(Hsub.elements[m]);
        std::sort(pc.members.begin(), pc.members.end());
        pc.representative = pc.members.front();
        table.classes.push_back(std::move(pc));
    }

    for (int t = 0; t < r; ++t) {
        std::vector<long> chi_mod(r);
        for (int j = 0; j < r; ++j) {
            long nj = static_cast<long>(classes[j].members.size());
            chi_mod[j] = degree_mod[t] * omega[t][j] % p * inv_mod(nj, p) % p;
        }
        ClassFunction row;
        row.X = &X;
        row.elems = Hsub.elements;
        std::vector<Cyclotomic> class_vals(r);
        for (int j = 0; j < r; ++j) {
            const long m = H.element_order(classes[j].representative);
            const long zm = pw(zN, N / m, p);
            Cyclotomic val = Cyclotomic::zero(static_cast<int>(N));
            for (long k = 0; k < m; ++k) {
                long mu = 0;
                for (long tt = 0; tt < m; ++tt) {
                    long cls = power_class[static_cast<size_t>(j) * N + (tt % m)];
                    mu = (mu + chi_mod[cls] * pw(zm, ((m - k) * tt) % m, p)) % p;
                }
                mu = mu * inv_mod(m % p, p) % p;
                if (mu > degrees[t]) throw std::logic_error("eigenvalue multiplicity out of range");
                if (mu)
                    val += Cyclotomic(Rational(mu)) * Cyclotomic::root_of_unity(static_cast<int>(N),
                                                                                k * (N / m));
            }
            class_vals[j] = std::move(val);
        }
        row.vals.resize(Hsub.order());
        for (int e = 0; e < h; ++e) row.vals[e] = class_vals[class_of[e]];
        table.rows.push_back(std::move(row));
        table.degrees.push_back(static_cast<int>(degrees[t]));
    }

    // exact sanity checks
    long long sum_d2 = 0;
    for (int d : table.degrees) sum_d2 += static_cast<long long>(d) * d;
    if (sum_d2 != h) throw std::logic_error("character degrees do not satisfy sum d^2 = |H|");
    for (size_t i = 0; i < table.rows.size(); ++i)
        for (size_t j = i; j < table.rows.size(); ++j) {
            Cyclotomic ip = inner_product(table.rows[i], table.rows[j]);
            if (!(ip == Cyclotomic(i == j ? 1 : 0))) throw std::logic_error("row orthogonality failed");
        }

    // canonical order: by degree, then lexicographically by complex embedding
    std::vector<size_t> perm(table.rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto key = [&](size_t t) {
        std::vector<EmbeddingKey> k;
        for (const auto& c : table.classes) {
            auto z = table.rows[t].at(c.representative).to_complex();
            k.push_back({z.real(), z.imag()});
        }
        return k;
    };
    std::vector<std::vector<EmbeddingKey>> keys(table.rows.size());
    for (size_t t = 0; t < keys.size(); ++t) keys[t] = key(t);
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
        return keys[a] < keys[b];
    });
    CharacterTable sorted = table;
    for (size_t t = 0; t < perm.size(); ++t) {
        sorted.rows[t] = table.rows[perm[t]];
        sorted.degrees[t] = table.degrees[perm[t]];
    }
    return sorted;
}

CharacterTable character_table(const FiniteGroup& X, int bound) {
    std::vector<int> all(X.order());
    std::iota(all.begin(), all.end(), 0);
    return character_table(X, Subgroup(X, all), bound);
}

ClassFunction transport_character(const ClassFunction& chi, int u, const std::vector<int>& target_elems) {
    const FiniteGroup& X = *chi.X;
    ClassFunction out;
    out.X = chi.X;
    out.elems = target_elems;
    std::sort(out.elems.begin(), out.elems.end());
    out.vals.reserve(out.elems.size());
    for (int v : out.elems) {
        int z = X.mul(X.mul(u, v), X.inv(u));
        if (!std::binary_search(chi.elems.begin(), chi.elems.end(), z)) throw ElementDoesNotConnect();
        out.vals.push_back(chi.at(z));
    }
    return out;
}

ClassFunction dual_character(const ClassFunction& chi) {
    ClassFunction out;
    out.X = chi.X;
    out.elems = chi.elems;
    out.vals.reserve(chi.vals.size());
    for (size_t i = 0; i < chi.elems.size(); ++i) out.vals.push_back(chi.at(chi.X->inv(chi.elems[i])));
    return out;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.elems != b.elems) throw GroupError("inner product of class functions on different subgroups");
    Cyclotomic acc;
    for (size_t i = 0; i < a.elems.size(); ++i) acc += a.vals[i] * b.vals[i].conjugate();
    return acc / Cyclotomic(static_cast<long>(a.elems.size()));
}

}  // namespace modcat
