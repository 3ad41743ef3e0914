// Copyright (c) 2026 The pig authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pig {

#ifdef PIG_USE_FLOAT32
using real = float;
#else
using real = double;
#endif

struct Vec3 {
    real x = 0, y = 0, z = 0;

    Vec3() = default;
    Vec3(real x_, real y_, real z_) : x(x_), y(y_), z(z_) {}

    real& operator[](int i) { return (&x)[i]; }
    real operator[](int i) const { return (&x)[i]; }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(real s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(real s) { x *= s; y *= s; z *= s; return *this; }
};

inline real dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline real norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) {
    real n = norm(a);
    if (n == 0) throw std::invalid_argument("normalized: zero-length vector");
    return a * (real(1) / n);
}

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<real, 9> m{};

    static Mat3 identity() {
        Mat3 r;
        r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return r;
    }
    real& operator()(int r_, int c_) { return m[r_ * 3 + c_]; }
    real operator()(int r_, int c_) const { return m[r_ * 3 + c_]; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                real s = 0;
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
};

// Columns t,b,n packed as a rotation-like frame matrix [t | b | n].
inline Mat3 frame_columns(const Vec3& t, const Vec3& b, const Vec3& n) {
    Mat3 r;
    r.m = {t.x, b.x, n.x, t.y, b.y, n.y, t.z, b.z, n.z};
    return r;
}

struct Quat {
    real w = 1, x = 0, y = 0, z = 0;
};

inline Mat3 quat_to_mat(const Quat& q) {
    Mat3 r;
    const real w = q.w, x = q.x, y = q.y, z = q.z;
    r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
           2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
           2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)};
    return r;
}

inline std::string format_shape(const std::vector<int>& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "]";
    return out;
}

}  // namespace pig
