#include "anyon/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "anyon/errors.hpp"

namespace anyon {

IntPoly::IntPoly(long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t power) {
    if (c == 0) return {};
    std::vector<BigInt> coeffs(power + 1);
    coeffs[power] = c;
    return IntPoly(std::move(coeffs));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return {};
    if (degree() < divisor.degree()) throw std::domain_error("inexact polynomial division");

    // Divisors from the solver usually have a unit constant term, so run the
    // division from the low end when possible; otherwise from the top.
    const auto& d = divisor.coeffs_;
    std::vector<BigInt> rem = coeffs_;
    const std::size_t qsize = rem.size() - d.size() + 1;
    std::vector<BigInt> q(qsize);
    BigInt r;

    std::size_t low = 0;
    while (d[low] == 0) ++low;
    for (std::size_t i = 0; i < low; ++i)
        if (rem[i] != 0) throw std::domain_error("inexact polynomial division");

    const bool unit_low = (d[low] == 1 || d[low] == -1);
    if (unit_low || d.back() != 1) {
        // Low-order elimination: q_i from rem[i + low].
        for (std::size_t i = 0; i < qsize; ++i) {
            BigInt& target = rem[i + low];
            if (target == 0) continue;
            mpz_fdiv_qr(q[i].get_mpz_t(), r.get_mpz_t(), target.get_mpz_t(), d[low].get_mpz_t());
            if (r != 0) throw std::domain_error("inexact polynomial division");
            for (std::size_t j = low; j < d.size(); ++j) {
                if (d[j] == 0) continue;
                mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), d[j].get_mpz_t());
            }
        }
    } else {
        for (std::size_t step = qsize; step-- > 0;) {
            BigInt& target = rem[step + d.size() - 1];
            if (target == 0) continue;
            mpz_fdiv_qr(q[step].get_mpz_t(), r.get_mpz_t(), target.get_mpz_t(), d.back().get_mpz_t());
            if (r != 0) throw std::domain_error("inexact polynomial division");
            for (std::size_t j = 0; j < d.size(); ++j) {
                if (d[j] == 0) continue;
                mpz_submul(rem[step + j].get_mpz_t(), q[step].get_mpz_t(), d[j].get_mpz_t());
            }
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
        throw std::domain_error("inexact polynomial division");
    return IntPoly(std::move(q));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    const BigInt g = content();
    IntPoly r = *this;
    if (g != 1)
        for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

BigRational IntPoly::evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

double IntPoly::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

int IntPoly::sign_at_dyadic(const BigInt& num, unsigned long exponent) const {
    if (is_zero()) return 0;
    // sign of sum c_i num^i 2^(e(d-i)), i.e. p(num/2^e) scaled by 2^(e d) > 0.
    BigInt acc = coeffs_.back();
    BigInt scale = 1;
    BigInt term;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc *= num;
        scale <<= exponent;
        term = coeffs_[i] * scale;
        acc += term;
    }
    return sgn(acc);
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t p = 0; p < coeffs_.size(); ++p) {
        const BigInt& c = coeffs_[p];
        if (c == 0) continue;
        if (first) {
            out << c.get_str();
        } else {
            out << (c < 0 ? " - " : " + ") << BigInt(abs(c)).get_str();
        }
        if (p == 1) out << "*t";
        if (p > 1) out << "*t^" << p;
        first = false;
    }
    return out.str();
}

nlohmann::json IntPoly::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : coeffs_) coeffs.push_back(c.get_str());
    return {{"coeffs", coeffs}};
}

IntPoly IntPoly::from_json(const nlohmann::json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return IntPoly(std::move(coeffs));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
    IntPoly r = a;
    const BigInt& lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        IntPoly scaled = r * lb;
        scaled -= b * IntPoly::monomial(r.leading(), shift);
        r = std::move(scaled);
    }
    return r;
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
    IntPoly a = p.primitive_part();
    IntPoly b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.leading() < 0 ? -a : a;
}

RationalFn::RationalFn(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    const IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    BigInt c = gcd(num_.content(), den_.content());
    if (c != 1) {
        num_ = num_.divide_exact(IntPoly(std::vector<BigInt>{c}));
        den_ = den_.divide_exact(IntPoly(std::vector<BigInt>{c}));
    }
    const BigInt& anchor = den_.coeff(0) != 0 ? den_.coeffs()[0] : den_.leading();
    if (anchor < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::string RationalFn::to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

nlohmann::json RationalFn::to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }

std::vector<BigRational> series_coeffs(const IntPoly& num, const IntPoly& den, std::size_t n_max) {
    if (den.is_zero() || den.coeff(0) == 0)
        throw SingularAtOrigin("denominator vanishes at t = 0; no Taylor expansion");
    const auto d = den.coeffs();
    BigRational inv0(1, d[0]);
    inv0.canonicalize();  // d[0] may be negative
    std::vector<BigRational> c(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        BigRational acc(num.coeff(n));
        for (std::size_t m = 1; m < d.size() && m <= n; ++m)
            if (d[m] != 0) acc -= BigRational(d[m]) * c[n - m];
        c[n] = acc * inv0;
        c[n].canonicalize();
    }
    return c;
}

std::vector<BigRational> series_coeffs(const RationalFn& f, std::size_t n_max) {
    return series_coeffs(f.num(), f.den(), n_max);
}

}  // namespace anyon
