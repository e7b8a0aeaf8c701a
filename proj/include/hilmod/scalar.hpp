#pragma once

// Exact scalars: GMP rationals and Gaussian rationals (p/q + r/s i).

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hilmod {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational conj(const Rational& x) { return x; }
inline bool is_positive_real(const Rational& x) { return sgn(x) > 0; }

/// "p/q" (or "p" for integers), GMP canonical form.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Gaussian rational re + im*i.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}
    GaussRat(const Rational& re) : re_(re) {}
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    /// |z|^2, always a non-negative rational.
    Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o)
    {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational s = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(s);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o)
    {
        if (o.is_zero())
            throw std::domain_error("GaussRat: division by zero");
        if (o.is_real()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        Rational n = o.norm();
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

inline bool is_zero(const GaussRat& x) { return x.is_zero(); }
inline GaussRat conj(const GaussRat& x) { return x.conj(); }
inline bool is_positive_real(const GaussRat& x) { return x.is_real() && sgn(x.re()) > 0; }

/// Renders as "a", "b*i", "a+b*i", with rationals in "p/q" form.
inline std::string to_string(const GaussRat& x)
{
    if (x.is_real())
        return x.re().get_str();
    std::string im;
    if (x.im() == 1)
        im = "i";
    else if (x.im() == -1)
        im = "-i";
    else
        im = x.im().get_str() + "*i";
    if (sgn(x.re()) == 0)
        return im;
    return x.re().get_str() + (sgn(x.im()) > 0 ? "+" : "") + im;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& x)
{
    return os << to_string(x);
}

/// Parses "p", "p/q" (optionally signed) into a canonical rational.
inline Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/// Rising factorial (a)_k = a(a+1)...(a+k-1).
inline Rational pochhammer(const Rational& a, unsigned long k)
{
    Rational r(1);
    for (unsigned long j = 0; j < k; ++j)
        r *= a + j;
    return r;
}

} // namespace hilmod
