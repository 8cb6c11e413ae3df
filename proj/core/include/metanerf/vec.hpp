#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace metanerf {

template <class S>
struct Vec3T {
    S x{}, y{}, z{};

    constexpr Vec3T() = default;
    constexpr Vec3T(S vx, S vy, S vz) : x(vx), y(vy), z(vz) {}

    constexpr S operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr S& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3T operator+(const Vec3T& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3T operator-(const Vec3T& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3T operator-() const { return {-x, -y, -z}; }
    constexpr Vec3T operator*(S s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3T operator/(S s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3T& operator+=(const Vec3T& o) { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Vec3T& operator-=(const Vec3T& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Vec3T& operator*=(S s) { x *= s; y *= s; z *= s; return *this; }

    constexpr S dot(const Vec3T& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3T cross(const Vec3T& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    S norm() const { return std::sqrt(dot(*this)); }
    Vec3T normalized() const { return *this / norm(); }
    constexpr Vec3T cwise_mul(const Vec3T& o) const { return {x * o.x, y * o.y, z * o.z}; }

    constexpr bool operator==(const Vec3T&) const = default;
};

template <class S>
constexpr Vec3T<S> operator*(S s, const Vec3T<S>& v) { return v * s; }

using Vec3 = Vec3T<double>;
using Vec3f = Vec3T<float>;

/// Row-major 3x3 matrix, double precision.
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 identity() {
        Mat3 r;
        r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return r;
    }
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        Mat3 r;
        r.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
        return r;
    }

    double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
    double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }

    Vec3 col(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
};

}  // namespace metanerf
