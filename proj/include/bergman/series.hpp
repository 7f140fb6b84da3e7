#pragma once

// Order-R truncated power series over a scalar field (double, complex,
// extended-precision floats for oracle work). Arithmetic is exact through
// the truncation order; real powers use the logarithmic-derivative
// recurrence h_k = (1/(k f_0)) sum_i (c i - (k-i)) f_i h_{k-i}.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace bergman {

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class S>
struct is_complex<std::complex<S>> : std::true_type {};

template <class T>
T scalar_pow(const T& base, double expo) {
    using std::pow;
    if constexpr (is_complex<T>::value) {
        return pow(base, typename T::value_type(expo));
    } else {
        return T(pow(base, T(expo)));
    }
}

template <class T>
double scalar_abs(const T& x) {
    using std::abs;
    return static_cast<double>(abs(x));
}

inline bool nearly_integer(double c, long& out) {
    double r = std::round(c);
    if (std::abs(c - r) < 1e-12) {
        out = static_cast<long>(r);
        return true;
    }
    return false;
}

} // namespace detail

template <class T>
class PowerSeries {
public:
    PowerSeries() : c_(1, T{}) {}
    explicit PowerSeries(std::size_t order) : c_(order + 1, T{}) {}
    explicit PowerSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(T{});
    }

    static PowerSeries constant(const T& v, std::size_t order) {
        PowerSeries s(order);
        s.c_[0] = v;
        return s;
    }
    // c0 + x
    static PowerSeries variable(const T& c0, std::size_t order) {
        PowerSeries s(order);
        s.c_[0] = c0;
        if (order >= 1) s.c_[1] = T(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    T& operator[](std::size_t i) { return c_[i]; }
    const std::vector<T>& coefficients() const { return c_; }

    PowerSeries truncated(std::size_t order) const {
        std::vector<T> r(order + 1, T{});
        for (std::size_t i = 0; i <= order && i < c_.size(); ++i) r[i] = c_[i];
        return PowerSeries(std::move(r));
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    PowerSeries operator-() const {
        PowerSeries r(order());
        for (std::size_t i = 0; i <= order(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend PowerSeries operator*(const T& s, const PowerSeries& a) {
        PowerSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

private:
    std::vector<T> c_;
};

// Cauchy product through the smaller of the two truncation orders.
template <class T>
PowerSeries<T> series_mul(const PowerSeries<T>& f, const PowerSeries<T>& g) {
    std::size_t n = std::min(f.order(), g.order());
    PowerSeries<T> r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        T acc{};
        for (std::size_t j = 0; j <= i; ++j) acc += f[j] * g[i - j];
        r[i] = acc;
    }
    return r;
}

template <class T>
PowerSeries<T> series_pow_uint(const PowerSeries<T>& f, unsigned long e) {
    PowerSeries<T> r = PowerSeries<T>::constant(T(1), f.order());
    PowerSeries<T> b = f;
    while (e) {
        if (e & 1) r = series_mul(r, b);
        b = series_mul(b, b);
        e >>= 1;
    }
    return r;
}

// f^c through order R. Nonnegative integer exponents work for any f;
// otherwise the constant term must be invertible (nonzero, and positive in
// the real non-integer case).
template <class T>
PowerSeries<T> series_real_pow(const PowerSeries<T>& f, double c) {
    long ci = 0;
    bool c_is_integer = detail::nearly_integer(c, ci);
    if (c_is_integer && ci >= 0) return series_pow_uint(f, static_cast<unsigned long>(ci));

    const T f0 = f[0];
    if (detail::scalar_abs(f0) == 0.0)
        throw std::domain_error("series_real_pow: non-invertible input (f(0) = 0)");
    if constexpr (!detail::is_complex<T>::value) {
        if (!c_is_integer && !(f0 > T(0)))
            throw std::domain_error("series_real_pow: f(0) must be positive for non-integer exponents");
    }

    std::size_t n = f.order();
    PowerSeries<T> h(n);
    h[0] = detail::scalar_pow(f0, c);
    for (std::size_t k = 1; k <= n; ++k) {
        T acc{};
        for (std::size_t i = 1; i <= k; ++i) {
            double w = c * static_cast<double>(i) - static_cast<double>(k - i);
            acc += T(w) * f[i] * h[k - i];
        }
        h[k] = acc / (T(static_cast<double>(k)) * f0);
    }
    return h;
}

} // namespace bergman
