#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace tmoyal {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact complex rational z = re + im*i.  Closed under +,-,*,/ and conjugation,
// so coefficient arithmetic never leaves Q(i).
struct CRat {
    Rat re{0};
    Rat im{0};

    CRat() = default;
    CRat(long n) : re(n) {}
    CRat(long n, long d) : re(Rat(n, d)) {}
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static CRat unit_i() { return CRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRat conj() const { return CRat(re, -im); }

    CRat operator-() const { return CRat(-re, -im); }

    CRat& operator+=(const CRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRat& operator-=(const CRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CRat& operator*=(const CRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    CRat& operator/=(const CRat& o) {
        Rat n = o.re * o.re + o.im * o.im;  // |o|^2, zero only for o == 0
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }

    // "3/2", "-1", "(1/2+3i)", "(0-1/4i)"
    std::string str() const {
        std::ostringstream os;
        if (im == 0) {
            os << re;
        } else {
            os << "(" << re << (im < 0 ? "-" : "+");
            Rat m = im < 0 ? Rat(-im) : im;
            os << m << "i)";
        }
        return os.str();
    }
};

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Rat rat_from_str(const std::string& s) { return Rat(s); }

inline Rat rat_pow(const Rat& base, int e) {
    Rat r(1);
    Rat b = base;
    int n = e < 0 ? -e : e;
    for (int i = 0; i < n; ++i) r *= b;
    if (e < 0) r = Rat(1) / r;
    return r;
}

inline Rat factorial(int n) {
    Rat r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace tmoyal
