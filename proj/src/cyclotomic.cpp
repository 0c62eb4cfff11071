#include "modcat/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace modcat {

namespace {

// remainder of p modulo the monic integer polynomial f (in place result)
std::vector<Rational> poly_mod(std::vector<Rational> p, const std::vector<long>& f) {
    const size_t deg_f = f.size() - 1;
    while (p.size() > deg_f) {
        Rational c = p.back();
        p.pop_back();
        if (c != 0) {
            const size_t off = p.size() - deg_f;
            for (size_t i = 0; i < deg_f; ++i) p[off + i] -= c * f[i];
        }
    }
    p.resize(deg_f, Rational(0));
    return p;
}

std::vector<long> poly_div_exact(const std::vector<long>& num, const std::vector<long>& den) {
    // exact division of integer polynomials, den monic
    std::vector<long> rem(num);
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (size_t k = quot.size(); k-- > 0;) {
        long c = rem[k + den.size() - 1];
        quot[k] = c;
        if (c != 0)
            for (size_t i = 0; i < den.size(); ++i) rem[k + i] -= c * den[i];
    }
    for (long r : rem)
        if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return quot;
}

}  // namespace

int Cyclotomic::phi(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<long>& Cyclotomic::cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<long>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, built bottom-up over divisors of n
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        std::vector<long> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) num = poly_div_exact(num, cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

Cyclotomic::Cyclotomic(const Rational& r, int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    cyclotomic_polynomial(n);
    coeffs_.assign(std::max(1, phi(n)), Rational(0));
    coeffs_[0] = r;
    coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::from_power_vector(int n, std::vector<Rational> pows) {
    Cyclotomic out(Rational(0), n);
    out.coeffs_ = poly_mod(std::move(pows), cyclotomic_polynomial(n));
    out.coeffs_.resize(std::max(1, phi(n)), Rational(0));
    return out;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> pows(n, Rational(0));
    pows[static_cast<size_t>(k)] = 1;
    return from_power_vector(n, std::move(pows));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("lift target must be a multiple of conductor");
    const int step = m / n_;
    std::vector<Rational> pows(static_cast<size_t>(m), Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) pows[j * step] = coeffs_[j];
    return from_power_vector(m, std::move(pows));
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.n_ == b.n_) return;
    const int m = std::lcm(a.n_, b.n_);
    a = a.lifted(m);
    b = b.lifted(m);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    Cyclotomic rhs(o);
    align(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    Cyclotomic rhs(o);
    align(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    Cyclotomic rhs(o);
    align(*this, rhs);
    std::vector<Rational> conv(2 * coeffs_.size(), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = poly_mod(std::move(conv), cyclotomic_polynomial(n_));
    coeffs_.resize(std::max(1, phi(n_)), Rational(0));
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero cyclotomic");
    if (is_rational()) {
        Cyclotomic out(Rational(1) / coeffs_[0], n_);
        return out;
    }
    // solve (this) * x = 1 as a linear system on the power basis
    const size_t d = coeffs_.size();
    std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(d + 1, Rational(0)));
    for (size_t j = 0; j < d; ++j) {
        std::vector<Rational> pows(d + j, Rational(0));
        for (size_t i = 0; i < d; ++i) pows[i + j] = coeffs_[i];
        auto col = poly_mod(std::move(pows), cyclotomic_polynomial(n_));
        col.resize(d, Rational(0));
        for (size_t i = 0; i < d; ++i) aug[i][j] = col[i];
    }
    aug[0][d] = 1;
    // Gaussian elimination
    for (size_t col = 0, row = 0; col < d && row < d; ++col) {
        size_t piv = row;
        while (piv < d && aug[piv][col] == 0) ++piv;
        if (piv == d) continue;
        std::swap(aug[piv], aug[row]);
        Rational p = aug[row][col];
        for (size_t j = col; j <= d; ++j) aug[row][j] /= p;
        for (size_t i = 0; i < d; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (size_t j = col; j <= d; ++j) aug[i][j] -= f * aug[row][j];
        }
        ++row;
    }
    Cyclotomic out(Rational(0), n_);
    for (size_t i = 0; i < d; ++i) out.coeffs_[i] = aug[i][d];
    return out;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    Cyclotomic rhs(o);
    align(*this, rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x(a), y(b);
    Cyclotomic::align(x, y);
    return x.coeffs_ == y.coeffs_;
}

Cyclotomic Cyclotomic::conjugate() const {
    std::vector<Rational> pows(static_cast<size_t>(n_) + coeffs_.size(), Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        size_t k = (j == 0) ? 0 : static_cast<size_t>(n_) - j;
        pows[k] += coeffs_[j];
    }
    return from_power_vector(n_, std::move(pows));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        double c = mpq_get_d(coeffs_[j].get_mpq_t());
        double ang = 2.0 * M_PI * static_cast<double>(j) / n_;
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

long Cyclotomic::root_order() const {
    auto z = to_complex();
    if (std::abs(std::abs(z) - 1.0) > 1e-9) return 0;
    const long bound = 2L * n_;
    Cyclotomic p = *this;
    for (long k = 1; k <= bound; ++k) {
        if (p.is_rational() && p.rational_value() == 1) return k;
        p *= *this;
    }
    return 0;
}

bool Cyclotomic::as_monomial(Rational& q, long& k) const {
    if (is_rational()) {
        q = coeffs_[0];
        k = 0;
        return true;
    }
    for (long j = 1; j < n_; ++j) {
        Cyclotomic t = *this * root_of_unity(n_, -j);
        if (t.is_rational()) {
            q = t.rational_value();
            k = j;
            return true;
        }
    }
    return false;
}

namespace {
std::string rat_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}
std::string term_str(const Rational& q, long k, bool leading) {
    std::string out;
    Rational a = q < 0 ? Rational(-q) : q;
    bool neg = q < 0;
    if (k == 0) {
        out = rat_str(a);
    } else {
        std::string w = (k == 1) ? "w" : "w^" + std::to_string(k);
        out = (a == 1) ? w : rat_str(a) + "*" + w;
    }
    if (neg) return (leading ? "-" : " - ") + out;
    return leading ? out : " + " + out;
}
}  // namespace

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    Rational q;
    long k = 0;
    if (as_monomial(q, k)) return term_str(q, k, true);
    std::string out;
    bool leading = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        out += term_str(coeffs_[j], static_cast<long>(j), leading);
        leading = false;
    }
    return out;
}

Cyclotomic Cyclotomic::parse(const std::string& s, int n) {
    Cyclotomic acc = Cyclotomic::zero(n);
    size_t i = 0;
    auto skip_ws = [&]() { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("empty cyclotomic string");
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected +/- in cyclotomic string: " + s);
        }
        first = false;
        // optional rational
        Rational q(1);
        bool have_num = false;
        size_t start = i;
        while (i < s.size() && (isdigit(s[i]) || s[i] == '/')) ++i;
        if (i > start) {
            q = Rational(s.substr(start, i - start));
            q.canonicalize();
            have_num = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        long k = 0;
        if (i < s.size() && s[i] == 'w') {
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t st = i;
                while (i < s.size() && isdigit(s[i])) ++i;
                if (st == i) throw std::invalid_argument("bad exponent in: " + s);
                k = std::stol(s.substr(st, i - st));
            }
        } else if (!have_num) {
            throw std::invalid_argument("bad term in cyclotomic string: " + s);
        }
        Cyclotomic term = root_of_unity(n, k);
        term *= Cyclotomic(q, n);
        if (sign < 0) term = -term;
        acc += term;
        skip_ws();
    }
    return acc;
}

}  // namespace modcat
