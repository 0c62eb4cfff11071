#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace modcat {

using Rational = mpq_class;

/// Exact element of Q(zeta_n), stored as a rational vector on the power
/// basis zeta^0..zeta^{phi(n)-1} reduced modulo the n-th cyclotomic
/// polynomial. zeta_n embeds as e^{2 pi i / n}; equality is coefficient-wise.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r, int n = 1);
    Cyclotomic(long num, long den = 1) : Cyclotomic(Rational(num, den)) {}

    /// e^{2 pi i k / n}
    static Cyclotomic root_of_unity(int n, long k);
    static Cyclotomic zero(int n = 1) { return Cyclotomic(Rational(0), n); }
    static Cyclotomic one(int n = 1) { return Cyclotomic(Rational(1), n); }

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws if not rational

    Cyclotomic lifted(int m) const;   // view in Q(zeta_m), n | m

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic conjugate() const;     // zeta -> zeta^{-1}
    Cyclotomic inverse() const;       // throws on zero

    std::complex<double> to_complex() const;

    /// Exact multiplicative order if this is a root of unity, else 0.
    long root_order() const;
    /// If this equals q * zeta_n^k, report (q, k); used by the renderer.
    bool as_monomial(Rational& q, long& k) const;

    /// "2", "-1/3", "w^2", "-w", "1+w^2-2w^3" with w = zeta_{conductor}.
    std::string to_string() const;
    /// Parse the to_string forms (sums of rational multiples of w^k).
    static Cyclotomic parse(const std::string& s, int n);

    static int phi(int n);
    /// Coefficients of the n-th cyclotomic polynomial (degree phi(n)).
    static const std::vector<long>& cyclotomic_polynomial(int n);

private:
    int n_;
    std::vector<Rational> coeffs_;   // size phi(n_)

    static void align(Cyclotomic& a, Cyclotomic& b);
    static Cyclotomic from_power_vector(int n, std::vector<Rational> pows);
};

}  // namespace modcat
