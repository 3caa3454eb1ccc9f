#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include "twistedmoyal/rational.hpp"

#include <nlohmann/json_fwd.hpp>

namespace tmoyal {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAUnit : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NonTerminating : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct LevelTooLarge : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct IndexOutOfRange : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ParseError : AlgebraError {
    using AlgebraError::AlgebraError;
};

// One monomial  a^p abar^q w^r wbar^s G^g theta^t sqrt2^h, where
// G^g = exp(-2 g a abar / theta) and h in {0,1} is the sqrt(2) parity
// (even powers fold into the rational coefficient).
// Canonical ordering is (g, r, s, p, q, t, h).
struct Term {
    int p = 0;  // exponent of a (may be negative)
    int q = 0;  // exponent of abar (may be negative)
    int r = 0;  // exponent of w, 0 or 1
    int s = 0;  // exponent of wbar, 0 or 1
    int g = 0;  // Gaussian weight, >= 0
    int t = 0;  // power of theta
    int h = 0;  // sqrt(2) parity, 0 or 1

    auto key() const { return std::tie(g, r, s, p, q, t, h); }
    friend bool operator<(const Term& a, const Term& b) { return a.key() < b.key(); }
    friend bool operator==(const Term& a, const Term& b) { return a.key() == b.key(); }
};

enum class Var { a, abar };

// Finite sum of Terms with exact coefficients, truncated at first order in
// (w, wbar): any operation producing r+s >= 2 drops the term.  Immutable in
// spirit: all operations return new canonical elements.
class TwistedElement {
public:
    using TermMap = std::map<Term, CRat>;

    TwistedElement() = default;

    static TwistedElement zero() { return {}; }
    static TwistedElement one() { return constant(CRat(1)); }
    static TwistedElement constant(const CRat& c);
    static TwistedElement make_term(const Term& m, const CRat& c);

    static TwistedElement gen_a() { return make_term(Term{.p = 1}, CRat(1)); }
    static TwistedElement gen_abar() { return make_term(Term{.q = 1}, CRat(1)); }
    static TwistedElement twist_w() { return make_term(Term{.r = 1}, CRat(1)); }
    static TwistedElement twist_wbar() { return make_term(Term{.s = 1}, CRat(1)); }
    static TwistedElement theta(int power = 1) { return make_term(Term{.t = power}, CRat(1)); }
    static TwistedElement gaussian(int weight = 1) { return make_term(Term{.g = weight}, CRat(1)); }
    static TwistedElement root_two() { return make_term(Term{.h = 1}, CRat(1)); }

    // e^{-1} = 1 - a w - abar wbar  and  e = 1 + a w + abar wbar
    static TwistedElement e_inverse();
    static TwistedElement e_factor();

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const TwistedElement& a, const TwistedElement& b) {
        return a.terms_ == b.terms_;
    }

    TwistedElement operator-() const;
    TwistedElement& operator+=(const TwistedElement& o);
    TwistedElement& operator-=(const TwistedElement& o);
    friend TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
    friend TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a -= b; }
    friend TwistedElement operator*(const TwistedElement& a, const TwistedElement& b);

    // scalar multiple c * theta^tpow * sqrt2^r2pow * (*this)
    TwistedElement scaled(const CRat& c, int theta_pow = 0, int root2_pow = 0) const;

    // insert with canonicalization (truncation, zero removal, parity folding)
    void accumulate(Term m, CRat c);

private:
    TermMap terms_;
};

// --- spec operations on the function class ---

TwistedElement add(const TwistedElement& f, const TwistedElement& g);
TwistedElement mul_pointwise(const TwistedElement& f, const TwistedElement& g);
TwistedElement derive(const TwistedElement& f, Var v);
TwistedElement limit_omega_zero(const TwistedElement& f);
TwistedElement invert_unit(const TwistedElement& f);

// involution a<->abar, w<->wbar (coefficients untouched)
TwistedElement mirror(const TwistedElement& f);

// parts of fixed order in (w, wbar)
TwistedElement omega_part(const TwistedElement& f, int order);

// Pointwise quotient N/D to first order, requiring the w^0 part of D to be a
// single term; verifies quotient*D == N exactly and reports the residual
// inside NotProportional otherwise.
struct NotProportional : AlgebraError {
    TwistedElement residual;
    explicit NotProportional(const std::string& msg, TwistedElement res = {})
        : AlgebraError(msg), residual(std::move(res)) {}
};
TwistedElement divide_exact(const TwistedElement& num, const TwistedElement& den);

// Images of the real coordinates and derivatives in (a, abar) variables:
// x1 = (a+abar)/sqrt2, x2 = (a-abar)/(i sqrt2),
// d1 = (d_a + d_abar)/sqrt2, d2 = i(d_a - d_abar)/sqrt2.
struct CoordImages {
    TwistedElement x1;
    TwistedElement x2;
};
CoordImages coord_images();
TwistedElement deriv_x(const TwistedElement& f, int axis);  // axis 1 or 2

// canonical text form, e.g. "2 G + -2 θ^-1 a^2 abar w G"
std::string to_text(const TwistedElement& f);
TwistedElement parse_element(const std::string& text);

nlohmann::json element_to_json(const TwistedElement& f);
TwistedElement element_from_json(const nlohmann::json& j);

}  // namespace tmoyal
