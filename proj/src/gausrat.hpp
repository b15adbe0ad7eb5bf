// Exact Gaussian rationals: numbers x + y*i with x, y rational.
#pragma once

#include <gmpxx.h>
#include <string>

namespace qsu2 {

struct GausRat {
    mpq_class re, im;

    GausRat() : re(0), im(0) {}
    GausRat(long r) : re(r), im(0) {}
    GausRat(const mpq_class& r) : re(r), im(0) {}
    GausRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GausRat unit_i() { return GausRat(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GausRat conj() const { return GausRat(re, -im); }

    GausRat operator-() const { return GausRat(-re, -im); }
    GausRat operator+(const GausRat& o) const { return GausRat(re + o.re, im + o.im); }
    GausRat operator-(const GausRat& o) const { return GausRat(re - o.re, im - o.im); }
    GausRat operator*(const GausRat& o) const {
        return GausRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GausRat operator/(const GausRat& o) const;

    GausRat& operator+=(const GausRat& o) { re += o.re; im += o.im; return *this; }
    GausRat& operator-=(const GausRat& o) { re -= o.re; im -= o.im; return *this; }
    GausRat& operator*=(const GausRat& o) { *this = *this * o; return *this; }

    bool operator==(const GausRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GausRat& o) const { return !(*this == o); }

    // |z|^2 = z * conj(z), always a nonnegative rational.
    mpq_class norm() const { return re * re + im * im; }

    std::string str() const;
};

GausRat parse_rational(const std::string& text);

} // namespace qsu2
