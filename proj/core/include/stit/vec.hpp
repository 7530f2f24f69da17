#ifndef STIT_VEC_HPP
#define STIT_VEC_HPP

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace stit {

// Small fixed-capacity vector for points and directions.  Ambient
// dimension is a runtime value but never exceeds kMaxDim.
inline constexpr int kMaxDim = 8;

struct Vec {
    int dim = 0;
    std::array<double, kMaxDim> c{};

    Vec() = default;
    explicit Vec(int d) : dim(d) { assert(d >= 0 && d <= kMaxDim); }
    Vec(std::initializer_list<double> xs) {
        assert(static_cast<int>(xs.size()) <= kMaxDim);
        dim = static_cast<int>(xs.size());
        int i = 0;
        for (double x : xs) c[i++] = x;
    }

    double& operator[](int i) { return c[static_cast<size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < dim; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < dim; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < dim; ++i) c[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }

    friend double dot(const Vec& a, const Vec& b) {
        double s = 0;
        for (int i = 0; i < a.dim; ++i) s += a.c[i] * b.c[i];
        return s;
    }
    double norm2() const { return dot(*this, *this); }
    double norm() const { return std::sqrt(norm2()); }

    Vec normalized() const {
        Vec r = *this;
        double n = norm();
        if (n > 0) r *= 1.0 / n;
        return r;
    }
};

inline double distance(const Vec& a, const Vec& b) { return (a - b).norm(); }

inline Vec cross(const Vec& a, const Vec& b) {
    assert(a.dim == 3 && b.dim == 3);
    Vec r(3);
    r[0] = a[1] * b[2] - a[2] * b[1];
    r[1] = a[2] * b[0] - a[0] * b[2];
    r[2] = a[0] * b[1] - a[1] * b[0];
    return r;
}

inline Vec unit_axis(int dim, int axis) {
    Vec r(dim);
    r[axis] = 1.0;
    return r;
}

}  // namespace stit

#endif
