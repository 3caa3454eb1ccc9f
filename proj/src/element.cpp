#include "twistedmoyal/element.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace tmoyal {

TwistedElement TwistedElement::constant(const CRat& c) {
    TwistedElement e;
    e.accumulate(Term{}, c);
    return e;
}

TwistedElement TwistedElement::make_term(const Term& m, const CRat& c) {
    TwistedElement e;
    e.accumulate(m, c);
    return e;
}

TwistedElement TwistedElement::e_inverse() {
    TwistedElement e = one();
    e.accumulate(Term{.p = 1, .r = 1}, CRat(-1));
    e.accumulate(Term{.q = 1, .s = 1}, CRat(-1));
    return e;
}

TwistedElement TwistedElement::e_factor() {
    TwistedElement e = one();
    e.accumulate(Term{.p = 1, .r = 1}, CRat(1));
    e.accumulate(Term{.q = 1, .s = 1}, CRat(1));
    return e;
}

void TwistedElement::accumulate(Term m, CRat c) {
    if (c.is_zero()) return;
    if (m.r + m.s >= 2) return;  // first-order truncation
    if (m.g < 0) throw AlgebraError("negative Gaussian weight is not representable");
    // fold even sqrt2 parity into the coefficient
    if (m.h < 0 || m.h > 1) {
        int fold = m.h >= 0 ? m.h / 2 : (m.h - 1) / 2;
        m.h -= 2 * fold;
        c *= CRat(rat_pow(Rat(2), fold));
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TwistedElement TwistedElement::operator-() const {
    TwistedElement e;
    for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
    return e;
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
}

TwistedElement& TwistedElement::operator-=(const TwistedElement& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
}

TwistedElement operator*(const TwistedElement& a, const TwistedElement& b) {
    TwistedElement out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.r + ma.s + mb.r + mb.s >= 2) continue;
            Term m{.p = ma.p + mb.p,
                   .q = ma.q + mb.q,
                   .r = ma.r + mb.r,
                   .s = ma.s + mb.s,
                   .g = ma.g + mb.g,
                   .t = ma.t + mb.t,
                   .h = ma.h + mb.h};
            out.accumulate(m, ca * cb);
        }
    }
    return out;
}

TwistedElement TwistedElement::scaled(const CRat& c, int theta_pow, int root2_pow) const {
    TwistedElement out;
    for (const auto& [m, cf] : terms_) {
        Term mm = m;
        mm.t += theta_pow;
        mm.h += root2_pow;
        out.accumulate(mm, cf * c);
    }
    return out;
}

TwistedElement add(const TwistedElement& f, const TwistedElement& g) { return f + g; }

TwistedElement mul_pointwise(const TwistedElement& f, const TwistedElement& g) { return f * g; }

TwistedElement derive(const TwistedElement& f, Var v) {
    TwistedElement out;
    for (const auto& [m, c] : f.terms()) {
        if (v == Var::a) {
            if (m.p != 0) {
                Term d = m;
                d.p -= 1;
                out.accumulate(d, c * CRat(m.p));
            }
            if (m.g != 0) {  // exp(-2g a abar/theta) contributes -(2g/theta) abar
                Term d = m;
                d.q += 1;
                d.t -= 1;
                out.accumulate(d, c * CRat(-2 * m.g));
            }
        } else {
            if (m.q != 0) {
                Term d = m;
                d.q -= 1;
                out.accumulate(d, c * CRat(m.q));
            }
            if (m.g != 0) {
                Term d = m;
                d.p += 1;
                d.t -= 1;
                out.accumulate(d, c * CRat(-2 * m.g));
            }
        }
    }
    return out;
}

TwistedElement limit_omega_zero(const TwistedElement& f) { return omega_part(f, 0); }

TwistedElement omega_part(const TwistedElement& f, int order) {
    TwistedElement out;
    for (const auto& [m, c] : f.terms())
        if (m.r + m.s == order) out.accumulate(m, c);
    return out;
}

TwistedElement mirror(const TwistedElement& f) {
    TwistedElement out;
    for (const auto& [m, c] : f.terms()) {
        Term mm = m;
        std::swap(mm.p, mm.q);
        std::swap(mm.r, mm.s);
        out.accumulate(mm, c);
    }
    return out;
}

namespace {

// divide a term by a single base term; throws on non-representable Gaussian weight
Term term_quotient(const Term& n, const Term& d, CRat& coeff_scale) {
    Term out = n;
    out.p -= d.p;
    out.q -= d.q;
    out.r -= d.r;
    out.s -= d.s;
    out.t -= d.t;
    out.g -= d.g;
    out.h -= d.h;  // h = -1 folds to h = 1 with value /2 in accumulate
    if (out.g < 0) throw NotProportional("quotient would need a negative Gaussian weight");
    if (out.r < 0 || out.s < 0)
        throw NotProportional("quotient would need a negative twist power");
    coeff_scale = CRat(1);
    return out;
}

}  // namespace

TwistedElement divide_exact(const TwistedElement& num, const TwistedElement& den) {
    TwistedElement d0 = omega_part(den, 0);
    if (d0.size() != 1)
        throw NotProportional("denominator w^0 part is not a single term", num);
    const auto& [base, base_c] = *d0.terms().begin();

    auto div_by_base = [&](const TwistedElement& x) {
        TwistedElement out;
        for (const auto& [m, c] : x.terms()) {
            CRat scale;
            Term qm = term_quotient(m, base, scale);
            out.accumulate(qm, c / base_c * scale);
        }
        return out;
    };

    TwistedElement delta = div_by_base(den - d0);   // first order by construction
    TwistedElement quotient = div_by_base(num);
    quotient -= quotient * delta;                   // (N/D0)(1 - delta), truncated

    TwistedElement residual = num - quotient * den;
    if (!residual.is_zero())
        throw NotProportional("no exact first-order quotient", residual);
    return quotient;
}

TwistedElement invert_unit(const TwistedElement& f) {
    TwistedElement f0 = omega_part(f, 0);
    if (f0.is_zero()) throw NotAUnit("w^0 part vanishes");
    if (f0.size() != 1) throw NotAUnit("w^0 part has more than one term");
    if (f0.terms().begin()->first.g != 0) throw NotAUnit("w^0 part carries a Gaussian weight");
    return divide_exact(TwistedElement::one(), f);
}

CoordImages coord_images() {
    // x1 = (a + abar)/sqrt2, x2 = -i (a - abar)/sqrt2
    TwistedElement x1 = (TwistedElement::gen_a() + TwistedElement::gen_abar())
                            .scaled(CRat(1, 2), 0, 1);
    TwistedElement x2 = (TwistedElement::gen_a() - TwistedElement::gen_abar())
                            .scaled(-CRat::unit_i() * CRat(1, 2), 0, 1);
    return {x1, x2};
}

TwistedElement deriv_x(const TwistedElement& f, int axis) {
    TwistedElement da = derive(f, Var::a);
    TwistedElement dab = derive(f, Var::abar);
    if (axis == 1) return (da + dab).scaled(CRat(1, 2), 0, 1);
    if (axis == 2) return (da - dab).scaled(CRat::unit_i() * CRat(1, 2), 0, 1);
    throw IndexOutOfRange("axis must be 1 or 2");
}

// ---------------- text form ----------------

std::string to_text(const TwistedElement& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.h == 1) os << " sqrt2";
        if (m.t != 0) os << " θ^" << m.t;
        if (m.p != 0) {
            os << " a";
            if (m.p != 1) os << "^" << m.p;
        }
        if (m.q != 0) {
            os << " abar";
            if (m.q != 1) os << "^" << m.q;
        }
        if (m.r == 1) os << " w";
        if (m.s == 1) os << " wbar";
        if (m.g != 0) {
            os << " G";
            if (m.g != 1) os << "^" << m.g;
        }
    }
    return os.str();
}

namespace {

struct Tokenizer {
    std::string s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*'))
            ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

Rat parse_rat(Tokenizer& tk) {
    tk.skip_ws();
    std::size_t start = tk.i;
    if (tk.i < tk.s.size() && (tk.s[tk.i] == '-' || tk.s[tk.i] == '+')) ++tk.i;
    while (tk.i < tk.s.size() && (std::isdigit(static_cast<unsigned char>(tk.s[tk.i])) || tk.s[tk.i] == '/'))
        ++tk.i;
    if (tk.i == start) throw ParseError("expected a rational at '" + tk.s.substr(tk.i) + "'");
    return Rat(tk.s.substr(start, tk.i - start));
}

int parse_exponent(Tokenizer& tk, int dflt) {
    if (tk.i < tk.s.size() && tk.s[tk.i] == '^') {
        ++tk.i;
        std::size_t start = tk.i;
        if (tk.i < tk.s.size() && tk.s[tk.i] == '-') ++tk.i;
        while (tk.i < tk.s.size() && std::isdigit(static_cast<unsigned char>(tk.s[tk.i]))) ++tk.i;
        return std::stoi(tk.s.substr(start, tk.i - start));
    }
    return dflt;
}

bool eat(Tokenizer& tk, const std::string& word) {
    tk.skip_ws();
    if (tk.s.compare(tk.i, word.size(), word) == 0) {
        // must not be a prefix of a longer identifier (e.g. "a" in "abar")
        std::size_t end = tk.i + word.size();
        if (end < tk.s.size() && std::isalpha(static_cast<unsigned char>(tk.s[end]))) return false;
        tk.i = end;
        return true;
    }
    return false;
}

}  // namespace

TwistedElement parse_element(const std::string& text) {
    Tokenizer tk{text};
    TwistedElement out;
    int sign = 1;
    bool first = true;
    while (!tk.done()) {
        sign = 1;
        bool saw_sign = false;
        while (!tk.done() && (tk.peek() == '+' || tk.peek() == '-')) {
            if (tk.peek() == '-') sign = -sign;
            ++tk.i;
            saw_sign = true;
        }
        if (!first && !saw_sign) throw ParseError("expected '+' or '-' between terms");
        first = false;
        if (tk.done()) throw ParseError("dangling sign");

        CRat coeff(sign);
        Term m;
        bool saw_factor = false;
        // optional numeric / complex coefficient
        tk.skip_ws();
        if (tk.peek() == '(') {
            ++tk.i;
            Rat re = parse_rat(tk);
            tk.skip_ws();
            char op = tk.s[tk.i];
            if (op != '+' && op != '-') throw ParseError("bad complex coefficient");
            ++tk.i;
            Rat imabs = parse_rat(tk);
            if (!eat(tk, "i")) throw ParseError("expected 'i' in complex coefficient");
            tk.skip_ws();
            if (tk.i >= tk.s.size() || tk.s[tk.i] != ')') throw ParseError("unclosed coefficient");
            ++tk.i;
            coeff *= CRat(re, op == '-' ? Rat(-imabs) : imabs);
            saw_factor = true;
        } else if (std::isdigit(static_cast<unsigned char>(tk.peek()))) {
            coeff *= CRat(parse_rat(tk));
            saw_factor = true;
        }
        // monomial factors in any order
        while (!tk.done() && tk.peek() != '+' && tk.peek() != '-') {
            if (eat(tk, "sqrt2")) {
                m.h += parse_exponent(tk, 1);
            } else if (eat(tk, "θ") || eat(tk, "theta") || eat(tk, "th")) {
                m.t += parse_exponent(tk, 1);
            } else if (eat(tk, "abar")) {
                m.q += parse_exponent(tk, 1);
            } else if (eat(tk, "a")) {
                m.p += parse_exponent(tk, 1);
            } else if (eat(tk, "wbar")) {
                m.s += parse_exponent(tk, 1);
            } else if (eat(tk, "w")) {
                m.r += parse_exponent(tk, 1);
            } else if (eat(tk, "G")) {
                m.g += parse_exponent(tk, 1);
            } else {
                throw ParseError("unexpected token at '" + tk.s.substr(tk.i) + "'");
            }
            saw_factor = true;
        }
        if (!saw_factor) throw ParseError("empty term");
        out.accumulate(m, coeff);
    }
    return out;
}

// ---------------- structured form ----------------

nlohmann::json element_to_json(const TwistedElement& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        terms.push_back({{"re", rat_str(c.re)},
                         {"im", rat_str(c.im)},
                         {"theta", m.t},
                         {"sqrt2", m.h},
                         {"p", m.p},
                         {"q", m.q},
                         {"w", m.r},
                         {"wbar", m.s},
                         {"G", m.g}});
    }
    return {{"terms", terms}};
}

TwistedElement element_from_json(const nlohmann::json& j) {
    TwistedElement out;
    for (const auto& t : j.at("terms")) {
        Term m{.p = t.at("p").get<int>(),
               .q = t.at("q").get<int>(),
               .r = t.at("w").get<int>(),
               .s = t.at("wbar").get<int>(),
               .g = t.at("G").get<int>(),
               .t = t.at("theta").get<int>(),
               .h = t.at("sqrt2").get<int>()};
        out.accumulate(m, CRat(rat_from_str(t.at("re").get<std::string>()),
                               rat_from_str(t.at("im").get<std::string>())));
    }
    return out;
}

}  // namespace tmoyal
