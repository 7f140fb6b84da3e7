#pragma once

// Exact rational arithmetic on top of boost::multiprecision, plus the
// factorial / Pochhammer / binomial helpers used throughout the coefficient
// algebra. All operations are exact; there is no floating fallback here.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bergman {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long long>(n)) {}
    Rational(long long n) : v_(n) {}
    Rational(unsigned n) : v_(static_cast<long long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        Int n = num, d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int g = boost::multiprecision::gcd(n < 0 ? Int(-n) : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        v_ = boost::multiprecision::cpp_rational(n, d);
    }
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    // Strict "a", "-a", "a/b" syntax. Decimal notation is rejected on purpose:
    // the rigidity checks need the inputs bit-exact.
    static Rational parse(std::string_view text) {
        auto fail = [&] {
            throw std::invalid_argument("Rational::parse: expected 'num' or 'num/den', got '" +
                                        std::string(text) + "'");
        };
        if (text.empty()) fail();
        std::size_t slash = text.find('/');
        auto is_int = [](std::string_view t) {
            if (t.empty()) return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        if (slash == std::string_view::npos) {
            if (!is_int(text)) fail();
            return Rational(Int(std::string(text)));
        }
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) fail();
        Int d{std::string(den)};
        if (d == 0) fail();
        return Rational(Int(std::string(num)), d);
    }

    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    double to_double() const { return v_.convert_to<double>(); }

    std::string str() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// Rising factorial (x)_l = x (x+1) ... (x+l-1); empty product for l = 0.
// Works for any numeric kind with ring operations and construction from int.
template <class T>
T pochhammer(const T& x, unsigned l) {
    T result(1);
    T term = x;
    for (unsigned i = 0; i < l; ++i) {
        result *= term;
        term += T(1);
    }
    return result;
}

inline double pochhammer(double x, unsigned l) { return pochhammer<double>(x, l); }

// Generalized binomial coefficient binom(alpha, v) for arbitrary alpha.
template <class T>
T binomial(const T& alpha, unsigned v) {
    T result(1);
    for (unsigned j = 0; j < v; ++j) {
        result *= (alpha - T(static_cast<int>(j)));
        result /= T(static_cast<int>(j + 1));
    }
    return result;
}

// binom(beta + l - 1, l) = (beta)_l / l!, the coefficient of the series
// (1 - u)^{-beta} = sum_l binom(beta + l - 1, l) u^l.
template <class T>
T negative_binomial_coeff(const T& beta, unsigned l) {
    return pochhammer(beta, l) / T(factorial(l));
}

inline double negative_binomial_coeff(double beta, unsigned l) {
    double r = pochhammer(beta, l);
    for (unsigned i = 2; i <= l; ++i) r /= static_cast<double>(i);
    return r;
}

inline Rational pow_int(const Rational& base, long e) {
    if (e < 0) {
        if (base.is_zero()) throw std::domain_error("pow_int: zero to negative power");
        return Rational(1) / pow_int(base, -e);
    }
    Rational r(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

} // namespace bergman
