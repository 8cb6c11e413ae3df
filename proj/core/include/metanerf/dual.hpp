#pragma once

#include <cmath>

namespace metanerf {

/// Forward-mode dual number a + b*eps. Running a gradient computation with
/// Dual parameters (value = theta, tangent = v) yields gradients whose
/// tangent part is the exact Hessian-vector product H*v.
template <class T>
struct Dual {
    T v{};  // value
    T d{};  // tangent

    constexpr Dual() = default;
    constexpr Dual(T value) : v(value), d(0) {}
    constexpr Dual(T value, T tangent) : v(value), d(tangent) {}

    constexpr Dual operator-() const { return {-v, -d}; }

    constexpr Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
    constexpr Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
    constexpr Dual& operator*=(const Dual& o) {
        d = d * o.v + v * o.d;
        v *= o.v;
        return *this;
    }
    constexpr Dual& operator/=(const Dual& o) {
        v /= o.v;
        d = (d - v * o.d) / o.v;
        return *this;
    }

    friend constexpr Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend constexpr Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend constexpr Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend constexpr Dual operator/(Dual a, const Dual& b) { return a /= b; }

    friend constexpr bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
    friend constexpr bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
    friend constexpr bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
    friend constexpr bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }
    friend constexpr bool operator==(const Dual& a, const Dual& b) { return a.v == b.v; }
};

template <class T>
Dual<T> exp(const Dual<T>& a) {
    T e = std::exp(a.v);
    return {e, a.d * e};
}

template <class T>
Dual<T> log(const Dual<T>& a) {
    return {std::log(a.v), a.d / a.v};
}

template <class T>
Dual<T> log1p(const Dual<T>& a) {
    return {std::log1p(a.v), a.d / (T(1) + a.v)};
}

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
    T s = std::sqrt(a.v);
    return {s, a.d / (T(2) * s)};
}

template <class T>
Dual<T> max(const Dual<T>& a, const Dual<T>& b) {
    return a.v >= b.v ? a : b;
}

template <class T>
bool isfinite(const Dual<T>& a) {
    return std::isfinite(a.v) && std::isfinite(a.d);
}

/// Numeric-trait hooks shared by the templated kernels. For plain floats
/// these resolve to std:: functions; for duals to the overloads above.
namespace num {
using std::exp;
using std::log;
using std::log1p;
using std::max;
using std::sqrt;
using std::isfinite;
using metanerf::exp;
using metanerf::log;
using metanerf::log1p;
using metanerf::max;
using metanerf::sqrt;
using metanerf::isfinite;

template <class S>
double value_of(S x) { return static_cast<double>(x); }

template <class T>
double value_of(const Dual<T>& x) { return static_cast<double>(x.v); }
}  // namespace num

}  // namespace metanerf
