#include "k3fix/cyclotomic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace k3fix {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Cyc6::Cyc6(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

// (a + b x)(c + d x) with x^2 = x - 1
Cyc6 operator*(const Cyc6& x, const Cyc6& y) {
    Rational bd = x.b_ * y.b_;
    return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
}

Cyc6 operator/(const Cyc6& x, const Cyc6& y) { return x * inv(y); }

Cyc6 mul(const Cyc6& x, const Cyc6& y) { return x * y; }

Cyc6 conj(const Cyc6& x) { return {x.a() + x.b(), -x.b()}; }

Cyc6 inv(const Cyc6& x) {
    if (x.is_zero()) throw std::domain_error("Cyc6 division by zero");
    Rational n = x.norm();
    Cyc6 c = conj(x);
    return {c.a() / n, c.b() / n};
}

Cyc6 pow(const Cyc6& x, long e) {
    if (e < 0) return pow(inv(x), -e);
    Cyc6 result(1);
    Cyc6 base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Cyc6 root_of_unity(int n, long k) {
    if (n <= 0 || 6 % n != 0) {
        throw std::invalid_argument("root_of_unity: order " + std::to_string(n) + " does not divide 6");
    }
    long e = ((k % n + n) % n) * (6 / n);
    switch (e % 6) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 1};
        case 3: return {-1, 0};
        case 4: return {0, -1};
        default: return {1, -1};
    }
}

std::complex<double> to_complex(const Cyc6& x) {
    const double a = x.a().get_d();
    const double b = x.b().get_d();
    return {a + 0.5 * b, b * std::sqrt(3.0) / 2.0};
}

std::string to_string(const Cyc6& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc6& x) {
    if (sgn(x.b()) == 0) return os << x.a().get_str();
    if (sgn(x.a()) != 0) os << x.a().get_str() << (sgn(x.b()) > 0 ? "+" : "-");
    else if (sgn(x.b()) < 0) os << "-";
    Rational mag = abs(x.b());
    if (mag != 1) os << mag.get_str() << "*";
    return os << "xi6";
}

namespace {

nlohmann::json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected integer in rational JSON");
}

}  // namespace

nlohmann::json to_json(const Rational& r) {
    return nlohmann::json::array({integer_json(r.get_num()), integer_json(r.get_den())});
}

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
    return make_rational(integer_from_json(j[0]), integer_from_json(j[1]));
}

nlohmann::json to_json(const Cyc6& x) {
    return {{"a", to_json(x.a())}, {"b", to_json(x.b())}};
}

Cyc6 cyc6_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
        throw std::invalid_argument("Cyc6 JSON needs \"a\" and \"b\"");
    }
    return {rational_from_json(j.at("a")), rational_from_json(j.at("b"))};
}

}  // namespace k3fix
