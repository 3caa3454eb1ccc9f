#include "twistedmoyal/star.hpp"

#include <algorithm>

namespace tmoyal {

namespace {

const CRat kHalf(1, 2);
const CRat kI = CRat::unit_i();

TwistedElement half_theta_einv_times(const TwistedElement& df) {
    return (TwistedElement::e_inverse() * df).scaled(kHalf, 1);
}

}  // namespace

TwistedElement star_gen_left(Gen gen, const TwistedElement& f) {
    switch (gen) {
        case Gen::a:
            return TwistedElement::gen_a() * f + half_theta_einv_times(derive(f, Var::abar));
        case Gen::abar:
            return TwistedElement::gen_abar() * f - half_theta_einv_times(derive(f, Var::a));
        case Gen::x1: {
            auto [x1, x2] = coord_images();
            return x1 * f + half_theta_einv_times(deriv_x(f, 2)).scaled(kI);
        }
        case Gen::x2: {
            auto [x1, x2] = coord_images();
            return x2 * f - half_theta_einv_times(deriv_x(f, 1)).scaled(kI);
        }
    }
    throw AlgebraError("unreachable");
}

TwistedElement star_gen_right(const TwistedElement& f, Gen gen) {
    switch (gen) {
        case Gen::a:
            return TwistedElement::gen_a() * f - half_theta_einv_times(derive(f, Var::abar));
        case Gen::abar:
            return TwistedElement::gen_abar() * f + half_theta_einv_times(derive(f, Var::a));
        case Gen::x1: {
            auto [x1, x2] = coord_images();
            return x1 * f - half_theta_einv_times(deriv_x(f, 2)).scaled(kI);
        }
        case Gen::x2: {
            auto [x1, x2] = coord_images();
            return x2 * f + half_theta_einv_times(deriv_x(f, 1)).scaled(kI);
        }
    }
    throw AlgebraError("unreachable");
}

namespace {

void require_polynomial(const TwistedElement& P) {
    for (const auto& [m, c] : P.terms()) {
        if (m.g != 0) throw NonTerminating("series factor carries a Gaussian weight");
        if (m.p < 0 || m.q < 0) throw NonTerminating("series factor has a negative exponent");
    }
}

// Evaluates P * f (or f * P) monomial by monomial; the memo holds
// (a^p abar^q) * f for the fixed f of one evaluation, so shared subproblems
// of the peeling recursion are computed once.
struct Peeler {
    const TwistedElement& f;
    Side side;
    std::map<std::pair<int, int>, TwistedElement> memo;

    TwistedElement element(const TwistedElement& P) {
        TwistedElement out;
        for (const auto& [m, c] : P.terms()) {
            Term rest{.r = m.r, .s = m.s, .t = m.t, .h = m.h};
            out += TwistedElement::make_term(rest, c) * mono(m.p, m.q);
        }
        return out;
    }

    TwistedElement mono(int p, int q) {
        if (p == 0 && q == 0) return f;
        auto it = memo.find({p, q});
        if (it != memo.end()) return it->second;
        TwistedElement out;
        if (side == Side::left) {
            // a^p abar^q = abar*(a^p abar^{q-1}) + (p theta/2) e^{-1} a^{p-1} abar^{q-1}
            if (q > 0) {
                out = star_gen_left(Gen::abar, mono(p, q - 1));
                if (p > 0) {
                    TwistedElement corr =
                        TwistedElement::e_inverse() *
                        TwistedElement::make_term(Term{.p = p - 1, .q = q - 1, .t = 1}, CRat(p, 2));
                    out += element(corr);
                }
            } else {
                out = star_gen_left(Gen::a, mono(p - 1, 0));
            }
        } else {
            // a^p abar^q = (a^{p-1} abar^q)*a + (q theta/2) e^{-1} a^{p-1} abar^{q-1}
            if (p > 0) {
                out = star_gen_right(mono(p - 1, q), Gen::a);
                if (q > 0) {
                    TwistedElement corr =
                        TwistedElement::e_inverse() *
                        TwistedElement::make_term(Term{.p = p - 1, .q = q - 1, .t = 1}, CRat(q, 2));
                    out += element(corr);
                }
            } else {
                out = star_gen_right(mono(0, q - 1), Gen::abar);
            }
        }
        memo.emplace(std::make_pair(p, q), out);
        return out;
    }
};

}  // namespace

TwistedElement star_series(const TwistedElement& P, const TwistedElement& f, Side side) {
    require_polynomial(P);
    Peeler peeler{f, side, {}};
    return peeler.element(P);
}

namespace {

TwistedElement iter_derive(TwistedElement f, int na, int nab) {
    for (int i = 0; i < na; ++i) f = derive(f, Var::a);
    for (int i = 0; i < nab; ++i) f = derive(f, Var::abar);
    return f;
}

TwistedElement double_sum(const TwistedElement& P, const TwistedElement& f, Side side,
                          bool twist_coefficient) {
    require_polynomial(P);
    int deg = 0;
    for (const auto& [m, c] : P.terms()) deg = std::max(deg, m.p + m.q);

    TwistedElement aw = TwistedElement::make_term(Term{.p = 1, .r = 1}, CRat(1)) +
                        TwistedElement::make_term(Term{.q = 1, .s = 1}, CRat(1));
    TwistedElement out;
    for (int n = 0; n <= deg; ++n) {
        TwistedElement order_n;
        for (int k = 0; k <= n; ++k) {
            // left slot takes d_a^k d_abar^{n-k}, right slot d_abar^k d_a^{n-k}
            TwistedElement ls, rs;
            if (side == Side::left) {
                ls = iter_derive(P, k, n - k);
                rs = iter_derive(f, n - k, k);
            } else {
                ls = iter_derive(f, k, n - k);
                rs = iter_derive(P, n - k, k);
            }
            if (ls.is_zero() || rs.is_zero()) continue;
            CRat cf = CRat(1) / CRat(factorial(k) * factorial(n - k));
            if ((n - k) % 2 == 1) cf = -cf;
            order_n += (ls * rs).scaled(cf);
        }
        if (order_n.is_zero()) continue;
        TwistedElement coeff = TwistedElement::one();
        if (twist_coefficient && n > 0) coeff -= aw.scaled(CRat(n));
        out += (coeff * order_n).scaled(CRat(Rat(BigInt(1), BigInt(1) << n)), n);
    }
    return out;
}

}  // namespace

TwistedElement star_series_frozen(const TwistedElement& P, const TwistedElement& f, Side side) {
    return double_sum(P, f, side, true);
}

TwistedElement star_moyal_constant(const TwistedElement& P, const TwistedElement& f, Side side) {
    return double_sum(P, f, side, false);
}

TwistedElement e_inverse_star_left(const TwistedElement& f) {
    return f - star_gen_left(Gen::a, f) * TwistedElement::twist_w() -
           star_gen_left(Gen::abar, f) * TwistedElement::twist_wbar();
}

TwistedElement e_inverse_star_right(const TwistedElement& f) {
    return f - star_gen_right(f, Gen::a) * TwistedElement::twist_w() -
           star_gen_right(f, Gen::abar) * TwistedElement::twist_wbar();
}

namespace {

// polynomial total degree, or -1 when the element is not polynomial
int poly_degree(const TwistedElement& P) {
    int deg = 0;
    for (const auto& [m, c] : P.terms()) {
        if (m.g != 0 || m.p < 0 || m.q < 0) return -1;
        deg = std::max(deg, m.p + m.q);
    }
    return deg;
}

// A * B, factoring the lower-degree polynomial side through the generator
// actions (the ordering the paper's own computations use)
TwistedElement star_any(const TwistedElement& A, const TwistedElement& B) {
    int da = poly_degree(A), db = poly_degree(B);
    if (da < 0 && db < 0) throw NonTerminating("neither star factor is polynomial");
    if (db < 0 || (da >= 0 && da <= db)) return star_series(A, B, Side::left);
    return star_series(B, A, Side::right);
}

}  // namespace

TwistedElement commutator_star(const TwistedElement& P, const TwistedElement& Q) {
    return star_any(P, Q) - star_any(Q, P);
}

TwistedElement anticommutator_star(const TwistedElement& P, const TwistedElement& Q) {
    return star_any(P, Q) + star_any(Q, P);
}

namespace {

// printed mu operators in (a, abar) variables, applied through the coordinate
// images; sign = +1 gives mu_1 (left), sign = -1 gives mu_2 (right)
TwistedElement mu_apply(const TwistedElement& f, int sign) {
    auto [x1, x2] = coord_images();
    TwistedElement einv = TwistedElement::e_inverse();
    TwistedElement esq = einv * einv;  // e^{-2} to first order
    // w112 = -i(w - wbar)/sqrt2,  w212 = (w + wbar)/sqrt2
    TwistedElement w112 = (TwistedElement::twist_w() - TwistedElement::twist_wbar())
                              .scaled(-kI * kHalf, 0, 1);
    TwistedElement w212 = (TwistedElement::twist_w() + TwistedElement::twist_wbar())
                              .scaled(kHalf, 0, 1);

    TwistedElement d1 = deriv_x(f, 1);
    TwistedElement d2 = deriv_x(f, 2);
    TwistedElement lap = deriv_x(deriv_x(f, 1), 1) + deriv_x(deriv_x(f, 2), 2);

    TwistedElement out = (x1 * x1 + x2 * x2) * f;
    TwistedElement grp1 = (einv * x1).scaled(kI, 1) - w112.scaled(CRat(1, 4), 2);
    TwistedElement grp2 = (einv * x2).scaled(kI, 1) - w212.scaled(CRat(1, 4), 2);
    if (sign > 0)
        out += grp1 * d2 - grp2 * d1;
    else
        out += grp2 * d1 - grp1 * d2;
    out -= (esq * lap).scaled(CRat(1, 4), 2);
    return out.scaled(kHalf);  // H acts as mu/2
}

}  // namespace

TwistedElement hamiltonian_left(const TwistedElement& f, HMethod method) {
    switch (method) {
        case HMethod::series:
            return star_series(TwistedElement::gen_a() * TwistedElement::gen_abar(), f, Side::left);
        case HMethod::bracket:
            return star_gen_left(Gen::abar, star_gen_left(Gen::a, f)) +
                   e_inverse_star_left(f).scaled(kHalf, 1);
        case HMethod::mu_operator:
            return mu_apply(f, +1);
    }
    throw AlgebraError("unreachable");
}

TwistedElement hamiltonian_right(const TwistedElement& f, HMethod method) {
    switch (method) {
        case HMethod::series:
            return star_series(TwistedElement::gen_a() * TwistedElement::gen_abar(), f, Side::right);
        case HMethod::bracket:
            return star_gen_right(star_gen_right(f, Gen::abar), Gen::a) +
                   e_inverse_star_right(f).scaled(kHalf, 1);
        case HMethod::mu_operator:
            return mu_apply(f, -1);
    }
    throw AlgebraError("unreachable");
}

TwistedElement vector_field_apply(int index, const TwistedElement& f) {
    auto [x1, x2] = coord_images();
    TwistedElement w112 = (TwistedElement::twist_w() - TwistedElement::twist_wbar())
                              .scaled(-kI * kHalf, 0, 1);
    TwistedElement w212 = (TwistedElement::twist_w() + TwistedElement::twist_wbar())
                              .scaled(kHalf, 0, 1);
    TwistedElement d1 = deriv_x(f, 1);
    TwistedElement d2 = deriv_x(f, 2);
    if (index == 1) return (TwistedElement::one() + w112 * x2) * d1 + (w212 * x2) * d2;
    if (index == 2) return (w112 * x1).scaled(CRat(-1)) * d1 + (TwistedElement::one() - w212 * x1) * d2;
    throw IndexOutOfRange("vector field index must be 1 or 2");
}

TwistedElement associator(const TwistedElement& f, const TwistedElement& g,
                          const TwistedElement& h) {
    TwistedElement fg = star_series(f, g, Side::left);
    TwistedElement gh = star_series(g, h, Side::left);
    return star_series(fg, h, Side::left) - star_series(f, gh, Side::left);
}

std::array<JacobiTriple, 8> jacobi_residuals() {
    auto [x1, x2] = coord_images();
    const TwistedElement x[2] = {x1, x2};
    std::array<JacobiTriple, 8> out;
    int idx = 0;
    for (int mu = 1; mu <= 2; ++mu)
        for (int nu = 1; nu <= 2; ++nu)
            for (int rho = 1; rho <= 2; ++rho) {
                TwistedElement t1 = commutator_star(x[mu - 1], commutator_star(x[nu - 1], x[rho - 1]));
                TwistedElement t2 = commutator_star(x[rho - 1], commutator_star(x[mu - 1], x[nu - 1]));
                TwistedElement t3 = commutator_star(x[nu - 1], commutator_star(x[rho - 1], x[mu - 1]));
                out[idx++] = JacobiTriple{mu, nu, rho, t1 + t2 + t3};
            }
    return out;
}

}  // namespace tmoyal
