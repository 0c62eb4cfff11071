#include "modcat/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace modcat {

namespace {

std::vector<Cyclotomic> vec_mat(const std::vector<Cyclotomic>& v, const CycMatrix& m) {
    std::vector<Cyclotomic> out(m[0].size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < out.size(); ++j) {
            if (m[i][j].is_zero()) continue;
            out[j] += v[i] * m[i][j];
        }
    }
    return out;
}

// reduced row echelon form over the cyclotomic field; returns pivot columns
std::vector<size_t> rref(CycMatrix& m) {
    std::vector<size_t> pivots;
    const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Cyclotomic ip = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= ip;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Cyclotomic f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

// coefficients of v in the RREF row basis; nullopt if outside the span
std::optional<std::vector<Cyclotomic>> in_rowspace(const CycMatrix& basis,
                                                   const std::vector<size_t>& pivots,
                                                   std::vector<Cyclotomic> v) {
    std::vector<Cyclotomic> coef(basis.size());
    for (size_t r = 0; r < basis.size(); ++r) {
        Cyclotomic c = v[pivots[r]];
        coef[r] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * basis[r][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return std::nullopt;
    return coef;
}

}  // namespace

void GradedModule::check_grading() const {
    const FiniteGroup& X = f->group();
    for (int x = 0; x < X.order(); ++x)
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (!act[static_cast<size_t>(x)][static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero() &&
                    grades[static_cast<size_t>(j)] != X.conj(grades[static_cast<size_t>(i)], x))
                    throw GradingNotRespected();
}

void GradedModule::check_action(bool all_pairs) const {
    const FiniteGroup& X = f->group();
    auto check_pair = [&](int x, int y) {
        CycMatrix lhs = mat_mul(act[static_cast<size_t>(x)], act[static_cast<size_t>(y)]);
        if (!mat_equal(lhs, act[static_cast<size_t>(X.mul(x, y))]))
            throw GroupError("module action property fails");
    };
    if (all_pairs) {
        for (int x = 0; x < X.order(); ++x)
            for (int y = 0; y < X.order(); ++y) check_pair(x, y);
    } else {
        for (int x = 0; x < X.order(); ++x) check_pair(x, x == 0 ? 0 : X.inv(x));
    }
}

std::map<int, CycMatrix> irrep_matrices(const FiniteGroup& X, const std::vector<int>& stab,
                                        const ClassFunction& chi) {
    Subgroup H(X, stab);
    const FiniteGroup L = H.as_group();
    const int h = L.order();
    const Rational dq = chi.degree().rational_value();
    const int d = static_cast<int>(dq.get_num().get_si());
    std::map<int, CycMatrix> out;
    if (d == 1) {
        for (int g : stab) out[g] = CycMatrix{{chi.at(g)}};
        return out;
    }
    const int nH = L.exponent();
    const Cyclotomic zero = Cyclotomic::zero(nH);

    // isotypic projector of the right regular representation
    CycMatrix P(h, std::vector<Cyclotomic>(h, zero));
    const Cyclotomic scale = Cyclotomic(Rational(d, h), nH);
    for (int x = 0; x < h; ++x) {
        Cyclotomic c = chi.at(stab[static_cast<size_t>(x)]).conjugate().lifted(nH) * scale;
        if (c.is_zero()) continue;
        for (int g = 0; g < h; ++g) P[static_cast<size_t>(g)][static_cast<size_t>(L.mul(g, x))] += c;
    }

    auto try_basis = [&](CycMatrix basis) -> std::optional<std::map<int, CycMatrix>> {
        auto pivots = rref(basis);
        if (static_cast<int>(basis.size()) != d) return std::nullopt;
        std::map<int, CycMatrix> rho;
        for (int a = 0; a < h; ++a) {
            CycMatrix m(d, std::vector<Cyclotomic>(d, zero));
            for (int i = 0; i < d; ++i) {
                // u_i * R_a
                std::vector<Cyclotomic> img(h, zero);
                for (int g = 0; g < h; ++g)
                    if (!basis[static_cast<size_t>(i)][static_cast<size_t>(g)].is_zero())
                        img[static_cast<size_t>(L.mul(g, a))] += basis[static_cast<size_t>(i)][static_cast<size_t>(g)];
                auto coef = in_rowspace(basis, pivots, std::move(img));
                if (!coef) return std::nullopt;
                for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = (*coef)[static_cast<size_t>(j)];
            }
            rho[stab[static_cast<size_t>(a)]] = std::move(m);
        }
        // character and homomorphism checks, exact
        for (int a = 0; a < h; ++a) {
            Cyclotomic tr;
            for (int i = 0; i < d; ++i) tr += rho[stab[static_cast<size_t>(a)]][static_cast<size_t>(i)][static_cast<size_t>(i)];
            if (!(tr == chi.at(stab[static_cast<size_t>(a)]))) return std::nullopt;
        }
        for (int a = 0; a < h; ++a)
            for (int b = 0; b < h; ++b)
                if (!mat_equal(mat_mul(rho[stab[static_cast<size_t>(a)]], rho[stab[static_cast<size_t>(b)]]),
                               rho[stab[static_cast<size_t>(L.mul(a, b))]]))
                    return std::nullopt;
        return rho;
    };

    // cut one copy with a rank-d left projector from a cyclic subgroup
    for (int c = 0; c < h; ++c) {
        const int m = L.element_order(c);
        if (m == 1) continue;
        for (int j = 0; j < m; ++j) {
            // F = (1/m) sum_t conj(lambda_j(c^t)) L_{c^t}, lambda_j(c) = zeta_m^j
            CycMatrix B(h, std::vector<Cyclotomic>(h, zero));
            int ct = L.identity();
            for (int t = 0; t < m; ++t) {
                Cyclotomic coef = Cyclotomic::root_of_unity(nH, -static_cast<long>(j) * t * (nH / m)) *
                                  Cyclotomic(Rational(1, m), nH);
                for (int g = 0; g < h; ++g) {
                    int tg = L.mul(ct, g);
                    if (!P[static_cast<size_t>(tg)].empty())
                        for (int k = 0; k < h; ++k)
                            if (!P[static_cast<size_t>(tg)][static_cast<size_t>(k)].is_zero())
                                B[static_cast<size_t>(g)][static_cast<size_t>(k)] +=
                                    coef * P[static_cast<size_t>(tg)][static_cast<size_t>(k)];
                }
                ct = L.mul(ct, c);
            }
            auto got = try_basis(std::move(B));
            if (got) return *got;
        }
    }
    // fallback: cyclic spans of projected delta vectors
    for (int z = 0; z < h; ++z) {
        CycMatrix span;
        for (int a = 0; a < h; ++a) {
            std::vector<Cyclotomic> v(h, zero);
            for (int g = 0; g < h; ++g)
                if (!P[static_cast<size_t>(z)][static_cast<size_t>(g)].is_zero())
                    v[static_cast<size_t>(L.mul(g, a))] += P[static_cast<size_t>(z)][static_cast<size_t>(g)];
            span.push_back(std::move(v));
        }
        auto got = try_basis(std::move(span));
        if (got) return *got;
    }
    throw ProjectionFailed();
}

GradedModule build_explicit_module(const CategoryD& cat, const SimpleObjectD& V) {
    const FiniteGroup& X = cat.group();
    const CosetFactorization& f = cat.factorization();
    auto rho = irrep_matrices(X, V.stab, V.chi);
    const int d = static_cast<int>(rho.begin()->second.size());
    const auto& pts = V.cls.members;
    const int k = static_cast<int>(pts.size());
    std::vector<int> cj(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) cj[i] = cat.conjugator(V.base, pts[i]);

    GradedModule mod;
    mod.f = &f;
    mod.grades.resize(static_cast<size_t>(k * d));
    for (int i = 0; i < k; ++i)
        for (int m = 0; m < d; ++m) mod.grades[static_cast<size_t>(i * d + m)] = pts[static_cast<size_t>(i)];
    const int cond = cat.conductor();
    const Cyclotomic zero = Cyclotomic::zero(cond);
    mod.act.assign(static_cast<size_t>(X.order()),
                   CycMatrix(static_cast<size_t>(k * d), std::vector<Cyclotomic>(static_cast<size_t>(k * d), zero)));
    for (int x = 0; x < X.order(); ++x) {
        for (int i = 0; i < k; ++i) {
            const int yj = X.conj(pts[static_cast<size_t>(i)], x);
            const int j = static_cast<int>(std::lower_bound(pts.begin(), pts.end(), yj) - pts.begin());
            const int hh = X.mul(X.mul(cj[static_cast<size_t>(i)], x), X.inv(cj[static_cast<size_t>(j)]));
            const CycMatrix& block = rho.at(hh);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    mod.act[static_cast<size_t>(x)][static_cast<size_t>(i * d + a)][static_cast<size_t>(j * d + b)] =
                        block[static_cast<size_t>(a)][static_cast<size_t>(b)].lifted(cond);
        }
    }
    mod.check_grading();
    return mod;
}

GradedModule dual_module(const GradedModule& A) {
    const CosetFactorization& f = *A.f;
    const FiniteGroup& X = f.group();
    const int n = A.dim();
    GradedModule out;
    out.f = A.f;
    out.grades.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.grades[static_cast<size_t>(i)] = f.grade_left_inv(A.grades[static_cast<size_t>(i)]);
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    out.act.assign(static_cast<size_t>(X.order()),
                   CycMatrix(static_cast<size_t>(n), std::vector<Cyclotomic>(static_cast<size_t>(n), zero)));
    for (int xp = 0; xp < X.order(); ++xp)
        for (int i = 0; i < n; ++i) {
            const int y = A.grades[static_cast<size_t>(i)];
            const int x = f.tri_l_Y_inv(y, xp);           // y |>~ x = xp
            const auto& src = A.act[static_cast<size_t>(X.inv(x))];
            for (int j = 0; j < n; ++j)
                out.act[static_cast<size_t>(xp)][static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    src[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
    out.check_grading();
    return out;
}

int tensor_grade(const CosetFactorization& f, int y1, int y2) {
    const FiniteGroup& X = f.group();
    return X.mul(X.mul(X.inv(f.g_grade(y2)), X.inv(f.g_grade(y1))),
                 X.mul(f.m_grade(y1), f.m_grade(y2)));
}

GradedModule tensor_module(const GradedModule& A, const GradedModule& B) {
    const CosetFactorization& f = *A.f;
    const FiniteGroup& X = f.group();
    const int nA = A.dim(), nB = B.dim(), n = nA * nB;
    GradedModule out;
    out.f = A.f;
    out.grades.resize(static_cast<size_t>(n));
    for (int i = 0; i < nA; ++i)
        for (int j = 0; j < nB; ++j)
            out.grades[static_cast<size_t>(i * nB + j)] =
                tensor_grade(f, A.grades[static_cast<size_t>(i)], B.grades[static_cast<size_t>(j)]);
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    out.act.assign(static_cast<size_t>(X.order()),
                   CycMatrix(static_cast<size_t>(n), std::vector<Cyclotomic>(static_cast<size_t>(n), zero)));
    for (int x = 0; x < X.order(); ++x)
        for (int j = 0; j < nB; ++j) {
            const int xa = f.tri_l_Y(B.grades[static_cast<size_t>(j)], x);
            for (int i = 0; i < nA; ++i)
                for (int i2 = 0; i2 < nA; ++i2) {
                    const Cyclotomic& ca = A.act[static_cast<size_t>(xa)][static_cast<size_t>(i)][static_cast<size_t>(i2)];
                    if (ca.is_zero()) continue;
                    for (int j2 = 0; j2 < nB; ++j2) {
                        const Cyclotomic& cb = B.act[static_cast<size_t>(x)][static_cast<size_t>(j)][static_cast<size_t>(j2)];
                        if (cb.is_zero()) continue;
                        out.act[static_cast<size_t>(x)][static_cast<size_t>(i * nB + j)][static_cast<size_t>(i2 * nB + j2)] = ca * cb;
                    }
                }
        }
    out.check_grading();
    return out;
}

CycMatrix braid(const GradedModule& A, const GradedModule& B) {
    const CosetFactorization& f = *A.f;
    const FiniteGroup& X = f.group();
    const int nA = A.dim(), nB = B.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    CycMatrix P(static_cast<size_t>(nA * nB), std::vector<Cyclotomic>(static_cast<size_t>(nA * nB), zero));
    for (int i = 0; i < nA; ++i) {
        const int si = f.m_grade(A.grades[static_cast<size_t>(i)]);
        for (int j = 0; j < nB; ++j) {
            const int uj = f.g_grade(B.grades[static_cast<size_t>(j)]);
            const int g1 = X.inv(f.act_M(si, uj));  // (<xi> <| |eta|)^-1
            const int g2 = uj;
            for (int j2 = 0; j2 < nB; ++j2) {
                const Cyclotomic& cb = B.act[static_cast<size_t>(g1)][static_cast<size_t>(j)][static_cast<size_t>(j2)];
                if (cb.is_zero()) continue;
                for (int i2 = 0; i2 < nA; ++i2) {
                    const Cyclotomic& ca = A.act[static_cast<size_t>(g2)][static_cast<size_t>(i)][static_cast<size_t>(i2)];
                    if (ca.is_zero()) continue;
                    P[static_cast<size_t>(i * nB + j)][static_cast<size_t>(j2 * nA + i2)] += cb * ca;
                }
            }
        }
    }
    return P;
}

CycMatrix twist(const GradedModule& A) {
    const int n = A.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    CycMatrix T(static_cast<size_t>(n), std::vector<Cyclotomic>(static_cast<size_t>(n), zero));
    for (int i = 0; i < n; ++i)
        T[static_cast<size_t>(i)] = A.act[static_cast<size_t>(A.grades[static_cast<size_t>(i)])][static_cast<size_t>(i)];
    return T;
}

std::vector<int> decompose_module(const CategoryD& cat, const GradedModule& T) {
    const FiniteGroup& X = cat.group();
    std::vector<int> mult(cat.simples().size(), 0);
    for (size_t k = 0; k < cat.simples().size(); ++k) {
        const auto& V = cat.simples()[k];
        ClassFunction chi_fib;
        chi_fib.X = &X;
        chi_fib.elems = V.stab;
        bool any = false;
        for (int u : V.stab) {
            Cyclotomic tr;
            for (int i = 0; i < T.dim(); ++i)
                if (T.grades[static_cast<size_t>(i)] == V.base) {
                    tr += T.act[static_cast<size_t>(u)][static_cast<size_t>(i)][static_cast<size_t>(i)];
                    any = true;
                }
            chi_fib.vals.push_back(std::move(tr));
        }
        if (!any) continue;
        Cyclotomic ip = inner_product(chi_fib, V.chi);
        Rational q = ip.rational_value();
        if (q.get_den() != 1 || q < 0) throw GroupError("invalid multiplicity");
        mult[k] = static_cast<int>(q.get_num().get_si());
    }
    return mult;
}

Cyclotomic plain_trace(const CycMatrix& T) {
    Cyclotomic tr;
    for (size_t i = 0; i < T.size(); ++i) tr += T[i][i];
    return tr;
}

namespace {

void require_morphism(const GradedModule& A, const CycMatrix& T) {
    // grade preserving and equivariant
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            if (!T[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero() &&
                A.grades[static_cast<size_t>(i)] != A.grades[static_cast<size_t>(j)])
                throw NotAMorphism();
    const FiniteGroup& X = A.f->group();
    for (int x = 0; x < X.order(); ++x)
        if (!mat_equal(mat_mul(T, A.act[static_cast<size_t>(x)]), mat_mul(A.act[static_cast<size_t>(x)], T)))
            throw NotAMorphism();
}

}  // namespace

Cyclotomic categorical_trace(const GradedModule& A, const CycMatrix& Tmat) {
    require_morphism(A, Tmat);
    return plain_trace(Tmat);
}

CycMatrix twisted_dual_basis_matrix(const GradedModule& A, const GradedModule& B,
                             const GradedModule& dA, const GradedModule& dB) {
    const CosetFactorization& f = *A.f;
    const FiniteGroup& X = f.group();
    const int nA = A.dim(), nB = B.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    CycMatrix H(static_cast<size_t>(nA * nB), std::vector<Cyclotomic>(static_cast<size_t>(nA * nB), zero));
    for (int a = 0; a < nA; ++a) {
        const int sa = f.m_grade(A.grades[static_cast<size_t>(a)]);
        for (int b = 0; b < nB; ++b) {
            const int sb = f.m_grade(B.grades[static_cast<size_t>(b)]);
            const int t2 = f.tau(sa, sb);
            const int t1 = X.inv(f.tau(f.act_M(f.left_inv(sa), t2), f.dot(sa, sb)));
            // hat(xi_a x eta_b) = (etahat_b <| t1) (x) (xihat_a <| t2) in B* (x) A*
            for (int jb = 0; jb < nB; ++jb) {
                const Cyclotomic& cb = dB.act[static_cast<size_t>(t1)][static_cast<size_t>(b)][static_cast<size_t>(jb)];
                if (cb.is_zero()) continue;
                for (int ia = 0; ia < nA; ++ia) {
                    const Cyclotomic& ca = dA.act[static_cast<size_t>(t2)][static_cast<size_t>(a)][static_cast<size_t>(ia)];
                    if (ca.is_zero()) continue;
                    H[static_cast<size_t>(a * nB + b)][static_cast<size_t>(jb * nA + ia)] = cb * ca;
                }
            }
        }
    }
    return H;
}

CycMatrix twisted_eval_matrix(const GradedModule& A, const GradedModule& B,
                              const GradedModule& dA, const GradedModule& dB) {
    const CosetFactorization& f = *A.f;
    const FiniteGroup& X = f.group();
    const int nA = A.dim(), nB = B.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    // E[(j,i) over B* (x) A*][(c,d) over A (x) B] = (alpha <| tau(<beta>, s_c . s_d))(eta_d)
    //                                            * (beta <| tau(s_c, s_d)^-1)(xi_c)
    CycMatrix E(static_cast<size_t>(nB * nA), std::vector<Cyclotomic>(static_cast<size_t>(nA * nB), zero));
    for (int i = 0; i < nA; ++i) {
        const int sbeta = f.m_grade(dA.grades[static_cast<size_t>(i)]);
        for (int c = 0; c < nA; ++c) {
            const int sc = f.m_grade(A.grades[static_cast<size_t>(c)]);
            for (int d = 0; d < nB; ++d) {
                const int sd = f.m_grade(B.grades[static_cast<size_t>(d)]);
                const int g1 = f.tau(sbeta, f.dot(sc, sd));
                const int g2 = X.inv(f.tau(sc, sd));
                const Cyclotomic& vb = dA.act[static_cast<size_t>(g2)][static_cast<size_t>(i)][static_cast<size_t>(c)];
                if (vb.is_zero()) continue;
                for (int j = 0; j < nB; ++j) {
                    const Cyclotomic& va = dB.act[static_cast<size_t>(g1)][static_cast<size_t>(j)][static_cast<size_t>(d)];
                    if (va.is_zero()) continue;
                    E[static_cast<size_t>(j * nA + i)][static_cast<size_t>(c * nB + d)] = va * vb;
                }
            }
        }
    }
    return E;
}

Cyclotomic categorical_trace_tensor(const GradedModule& A, const GradedModule& B, const CycMatrix& Tmat) {
    GradedModule dA = dual_module(A), dB = dual_module(B);
    CycMatrix H = twisted_dual_basis_matrix(A, B, dA, dB);
    CycMatrix E = twisted_eval_matrix(A, B, dA, dB);
    CycMatrix HE = mat_mul(H, E);
    Cyclotomic tr;
    for (size_t ab = 0; ab < HE.size(); ++ab)
        for (size_t cd = 0; cd < HE.size(); ++cd) {
            if (HE[ab][cd].is_zero() || Tmat[ab][cd].is_zero()) continue;
            tr += HE[ab][cd] * Tmat[ab][cd];
        }
    return tr;
}

namespace {

// shared tail of the literal trace diagram: given the object U, its
// realized dual (rows = hat basis elements over Ustar's basis), and the
// pairing eval : Ustar (x) U -> k, run coev -> T (x) id -> Psi -> theta^-1 -> eval.
Cyclotomic diagram_trace_impl(const GradedModule& U, const GradedModule& Ustar, const CycMatrix& hat,
                              const CycMatrix& eval, const CycMatrix& Tmat) {
    const CosetFactorization& f = *U.f;
    const FiniteGroup& X = f.group();
    const int n = U.dim();
    Cyclotomic total;
    for (int a = 0; a < n; ++a) {
        const int su = f.m_grade(U.grades[static_cast<size_t>(a)]);
        const int tw = X.inv(f.tau(f.left_inv(su), su));
        // v1 = T(u_a <|^ tw) over U basis
        std::vector<Cyclotomic> v1 = vec_mat(U.row_act(tw, a), Tmat);
        // hat element of u_a, with its (homogeneous) grade in Ustar
        const auto& h = hat[static_cast<size_t>(a)];
        int ghat = -1;
        for (int q = 0; q < Ustar.dim(); ++q)
            if (!h[static_cast<size_t>(q)].is_zero()) {
                if (ghat >= 0 && ghat != Ustar.grades[static_cast<size_t>(q)])
                    throw GroupError("dual basis element is not homogeneous");
                ghat = Ustar.grades[static_cast<size_t>(q)];
            }
        if (ghat < 0) throw GroupError("empty dual basis element");
        const int uhat = f.g_grade(ghat);
        for (int k = 0; k < n; ++k) {
            if (v1[static_cast<size_t>(k)].is_zero()) continue;
            const int szk = f.m_grade(U.grades[static_cast<size_t>(k)]);
            const int g1 = X.inv(f.act_M(szk, uhat));
            std::vector<Cyclotomic> h2 = vec_mat(h, Ustar.act[static_cast<size_t>(g1)]);
            std::vector<Cyclotomic> v2 = U.row_act(uhat, k);
            // theta^{-1} on the U factor
            std::vector<Cyclotomic> v3(static_cast<size_t>(n));
            for (int l = 0; l < n; ++l) {
                if (v2[static_cast<size_t>(l)].is_zero()) continue;
                const auto& rowl = U.act[static_cast<size_t>(X.inv(U.grades[static_cast<size_t>(l)]))][static_cast<size_t>(l)];
                for (int q = 0; q < n; ++q)
                    if (!rowl[static_cast<size_t>(q)].is_zero())
                        v3[static_cast<size_t>(q)] += v2[static_cast<size_t>(l)] * rowl[static_cast<size_t>(q)];
            }
            // eval(h2 (x) v3)
            Cyclotomic acc;
            for (int q = 0; q < Ustar.dim(); ++q) {
                if (h2[static_cast<size_t>(q)].is_zero()) continue;
                for (int l = 0; l < n; ++l) {
                    if (v3[static_cast<size_t>(l)].is_zero() ||
                        eval[static_cast<size_t>(q)][static_cast<size_t>(l)].is_zero())
                        continue;
                    acc += h2[static_cast<size_t>(q)] * eval[static_cast<size_t>(q)][static_cast<size_t>(l)] *
                           v3[static_cast<size_t>(l)];
                }
            }
            total += v1[static_cast<size_t>(k)] * acc;
        }
    }
    return total;
}

}  // namespace

Cyclotomic diagram_trace(const GradedModule& A, const CycMatrix& Tmat) {
    GradedModule dA = dual_module(A);
    const int n = A.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    CycMatrix hat = mat_identity(static_cast<size_t>(n), zero.conductor());
    CycMatrix eval = mat_identity(static_cast<size_t>(n), zero.conductor());
    return diagram_trace_impl(A, dA, hat, eval, Tmat);
}

Cyclotomic diagram_trace_tensor(const GradedModule& A, const GradedModule& B, const CycMatrix& Tmat) {
    GradedModule U = tensor_module(A, B);
    GradedModule dA = dual_module(A), dB = dual_module(B);
    GradedModule Ustar = tensor_module(dB, dA);
    CycMatrix hat = twisted_dual_basis_matrix(A, B, dA, dB);
    CycMatrix eval = twisted_eval_matrix(A, B, dA, dB);
    return diagram_trace_impl(U, Ustar, hat, eval, Tmat);
}

Cyclotomic double_braiding_trace(const GradedModule& V_mod, const GradedModule& W_mod, bool literal_diagram) {
    CycMatrix P2 = mat_mul(braid(V_mod, W_mod), braid(W_mod, V_mod));
    if (literal_diagram) return diagram_trace_tensor(V_mod, W_mod, P2);
    return categorical_trace_tensor(V_mod, W_mod, P2);
}

Cyclotomic brute_char(const GradedModule& A, int y, int x) {
    const CosetFactorization& f = *A.f;
    const FiniteGroup& X = f.group();
    Cyclotomic total;
    if (X.mul(x, y) != X.mul(y, x)) return total;
    for (int i = 0; i < A.dim(); ++i) {
        const int z = A.grades[static_cast<size_t>(i)];
        const int s = f.m_grade(z);
        if (X.mul(s, X.inv(f.g_grade(z))) != y) continue;  // <xi>|xi|^-1 = y
        const int arg = X.mul(X.mul(X.inv(s), x), s);
        total += A.act[static_cast<size_t>(arg)][static_cast<size_t>(i)][static_cast<size_t>(i)];
    }
    return total;
}

// ---- D(X) ----

DXElement dx_basis(int y, int x) { return {{{y, x}, Cyclotomic(1)}}; }

DXElement dx_unit(const FiniteGroup& X) {
    DXElement u;
    for (int y = 0; y < X.order(); ++y) u[{y, X.identity()}] = Cyclotomic(1);
    return u;
}

namespace {
void dx_add(DXElement& acc, std::pair<int, int> key, const Cyclotomic& c) {
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, c);
    else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}
}  // namespace

DXElement dx_product(const FiniteGroup& X, const DXElement& a, const DXElement& b) {
    DXElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const auto [y, x] = ka;
            const auto [y2, x2] = kb;
            if (X.conj(y, x) != y2) continue;
            dx_add(out, {y, X.mul(x, x2)}, ca * cb);
        }
    return out;
}

bool dx_equal(const DXElement& a, const DXElement& b) {
    DXElement diff = a;
    for (const auto& [k, c] : b) dx_add(diff, k, -c);
    return diff.empty();
}

DXElement psi_map(const FiniteGroup& X, const DXElement& a) {
    DXElement out;
    for (const auto& [k, c] : a) {
        const auto [y, x] = k;
        dx_add(out, {X.conj(X.inv(y), x), X.inv(x)}, c);
    }
    return out;
}

std::optional<std::pair<int, int>> d_product(const CosetFactorization& f, std::pair<int, int> a,
                                             std::pair<int, int> b) {
    const FiniteGroup& X = f.group();
    const auto [y, x] = a;
    const auto [y2, x2] = b;
    if (y2 != X.conj(y, x)) return std::nullopt;
    const int ta = f.d_grade(y, x).m;
    const int tb = f.d_grade(y2, x2).m;
    const int tt = f.tau(ta, tb);
    return std::make_pair(X.conj(y, tt), X.mul(X.inv(tt), X.mul(x, x2)));
}

CycMatrix d_action(const GradedModule& A, int y, int x) {
    const int n = A.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    CycMatrix M(static_cast<size_t>(n), std::vector<Cyclotomic>(static_cast<size_t>(n), zero));
    for (int i = 0; i < n; ++i)
        if (A.grades[static_cast<size_t>(i)] == y) M[static_cast<size_t>(i)] = A.act[static_cast<size_t>(x)][static_cast<size_t>(i)];
    return M;
}

int chi_functor_grade(const FiniteGroup& X, int module_grade) { return X.inv(module_grade); }

std::vector<Cyclotomic> m_action_row(const GradedModule& A, int t, int i) {
    const CosetFactorization& f = *A.f;
    const int g = f.g_grade(A.grades[static_cast<size_t>(i)]);
    const int sp = f.inv_left_inv(f.act_M(t, g));  // s' with s'^L = t <| |xi|
    const int tw = f.group().inv(f.tau(f.left_inv(sp), sp));
    return vec_mat(A.row_act(sp, i), A.act[static_cast<size_t>(tw)]);
}

CycMatrix chi_functor_act(const GradedModule& A, int x) {
    const CosetFactorization& f = *A.f;
    const FiniteGroup& X = f.group();
    const auto [u, s] = f.factor_GM(x);
    const int n = A.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    CycMatrix M(static_cast<size_t>(n), std::vector<Cyclotomic>(static_cast<size_t>(n), zero));
    for (int i = 0; i < n; ++i) {
        const int t = f.act_M(s, X.inv(f.g_grade(A.grades[static_cast<size_t>(i)])));
        std::vector<Cyclotomic> row = vec_mat(m_action_row(A, t, i), A.act[static_cast<size_t>(X.inv(u))]);
        M[static_cast<size_t>(i)] = std::move(row);
    }
    return M;
}

CycMatrix dx_action_on_chi(const GradedModule& A, int y, int x) {
    const FiniteGroup& X = A.f->group();
    CycMatrix M = chi_functor_act(A, x);
    for (auto& row : M)
        for (size_t j = 0; j < row.size(); ++j)
            if (chi_functor_grade(X, A.grades[j]) != y) row[j] = Cyclotomic::zero(row[j].conductor());
    return M;
}

CycMatrix c_map(const GradedModule& A, const GradedModule& B) {
    const CosetFactorization& f = *A.f;
    const FiniteGroup& X = f.group();
    const int nA = A.dim(), nB = B.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.act[0][0][0].conductor());
    CycMatrix C(static_cast<size_t>(nA * nB), std::vector<Cyclotomic>(static_cast<size_t>(nA * nB), zero));
    for (int i = 0; i < nA; ++i) {
        const int geta = f.g_grade(A.grades[static_cast<size_t>(i)]);
        for (int j = 0; j < nB; ++j) {
            const int t = f.act_M(f.m_grade(B.grades[static_cast<size_t>(j)]), X.inv(geta));
            std::vector<Cyclotomic> row = m_action_row(A, t, i);
            for (int k = 0; k < nA; ++k)
                C[static_cast<size_t>(i * nB + j)][static_cast<size_t>(k * nB + j)] = row[static_cast<size_t>(k)];
        }
    }
    return C;
}

bool mat_is_invertible(const CycMatrix& m) { return !mat_det(m).is_zero(); }

CycMatrix mat_identity(size_t n, int conductor) {
    CycMatrix id(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(conductor)));
    for (size_t i = 0; i < n; ++i) id[i][i] = Cyclotomic::one(conductor);
    return id;
}

}  // namespace modcat
