#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace paulipt {

using Rational = mpq_class;

/// Complex number with exact rational real and imaginary parts.
struct CRat {
    Rational re{0};
    Rational im{0};

    CRat() = default;
    CRat(Rational r) : re(std::move(r)) {}
    CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    CRat(long r) : re(r) {}
    CRat(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }

    CRat conj() const { return {re, -im}; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("CRat: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

    CRat& operator+=(const CRat& b) { *this = *this + b; return *this; }
    CRat& operator-=(const CRat& b) { *this = *this - b; return *this; }
    CRat& operator*=(const CRat& b) { *this = *this * b; return *this; }
};

/// Magnitude as a double (|a+bi| = sqrt(a^2+b^2)); used only for scaling heuristics.
inline double abs_d(const CRat& c) {
    return std::abs(c.to_complex());
}

/// Exact rational from a double (every finite double is a dyadic rational).
inline Rational rational_from_double(double v) {
    Rational r;
    mpq_set_d(r.get_mpq_t(), v);
    return r;
}

/// Parse a plain decimal string ("-1.25", "3", ".5") into an exact rational.
Rational rational_from_decimal(const std::string& s);

}  // namespace paulipt
