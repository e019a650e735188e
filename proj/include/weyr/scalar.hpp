#ifndef WEYR_SCALAR_HPP
#define WEYR_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <string>

namespace weyr {

using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
/// Equality is decidable, so eigenvalue distinctness and rank
/// computations never depend on a tolerance.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long r) : re(r), im(0) {}
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Scalar operator-() const { return {-re, -im}; }

    Scalar& operator+=(const Scalar& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& b) {
        re -= b.re;
        im -= b.im;
        return *this;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }

    /// "p/q" for real values, "p/q+r/si" otherwise.
    std::string str() const;

    /// Parses the format produced by str(); throws std::invalid_argument.
    static Scalar parse(const std::string& s);
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace weyr

#endif
