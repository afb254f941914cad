#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace rblie {

/// Exact scalar of the form re + im*i with rational re, im.
///
/// Components are always kept in lowest terms with positive denominator
/// (mpq_class canonical form).  The text form accepted by parse() and
/// produced by str() uses "p/q" for rationals ("/q" omitted when q = 1)
/// and "*i" for the imaginary component, e.g. "3", "-3/4", "3*i", "i",
/// "1/2-2/3*i".  str() is canonical: parse(str(x)) == x and equal values
/// print identically.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    GaussRat(long num, unsigned long den) : re_(num, den), im_(0) { re_.canonicalize(); }
    GaussRat(const mpq_class& re) : re_(re), im_(0) {}
    GaussRat(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    /// Parses the text form.  Throws std::invalid_argument on malformed input.
    static GaussRat parse(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussRat inv() const;

    std::string str() const;

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inv(); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& q);

/// Shorthand for building rationals in code: frac(2,3) = 2/3.
inline GaussRat frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRat(q);
}

}  // namespace rblie
