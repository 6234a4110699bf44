#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace k3fix {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a reduced rational num/den. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Exact element a + b*xi of Q(xi), xi a primitive 6th root of unity, xi^2 = xi - 1.
class Cyc6 {
public:
    Cyc6() = default;
    Cyc6(Rational a, Rational b);
    Cyc6(long a) : a_(a) {}  // NOLINT: rationals embed implicitly

    static Cyc6 xi() { return {0, 1}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    /// Field norm a^2 + ab + b^2; zero iff the element is zero.
    Rational norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    friend Cyc6 operator+(const Cyc6& x, const Cyc6& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend Cyc6 operator-(const Cyc6& x, const Cyc6& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend Cyc6 operator-(const Cyc6& x) { return {-x.a_, -x.b_}; }
    friend Cyc6 operator*(const Cyc6& x, const Cyc6& y);
    friend Cyc6 operator/(const Cyc6& x, const Cyc6& y);

    Cyc6& operator+=(const Cyc6& y) { return *this = *this + y; }
    Cyc6& operator-=(const Cyc6& y) { return *this = *this - y; }
    Cyc6& operator*=(const Cyc6& y) { return *this = *this * y; }

    friend bool operator==(const Cyc6& x, const Cyc6& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
    Rational a_{0};
    Rational b_{0};
};

Cyc6 mul(const Cyc6& x, const Cyc6& y);

/// Multiplicative inverse. Throws std::domain_error on zero.
Cyc6 inv(const Cyc6& x);

/// Complex conjugation xi -> xi^5 = 1 - xi.
Cyc6 conj(const Cyc6& x);

Cyc6 pow(const Cyc6& x, long e);

/// xi_n^k for n in {1,2,3,6}, returned as xi6^(6k/n mod 6).
Cyc6 root_of_unity(int n, long k);

/// Evaluates at xi = exp(i*pi/3).
std::complex<double> to_complex(const Cyc6& x);

std::string to_string(const Cyc6& x);
std::ostream& operator<<(std::ostream& os, const Cyc6& x);

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// {"a":[num,den],"b":[num,den]}; numbers are emitted as strings once they leave int64 range.
nlohmann::json to_json(const Cyc6& x);
Cyc6 cyc6_from_json(const nlohmann::json& j);

}  // namespace k3fix
