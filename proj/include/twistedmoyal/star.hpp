#pragma once

#include <array>

#include "twistedmoyal/element.hpp"

namespace tmoyal {

enum class Side { left, right };
enum class Gen { a, abar, x1, x2 };
enum class HMethod { series, mu_operator, bracket };

// First-order differential form of the generator star actions:
//   a * f = (a + (theta e^{-1}/2) d_abar) f,    abar * f = (abar - (theta e^{-1}/2) d_a) f,
//   f * a = (a - (theta e^{-1}/2) d_abar) f,    f * abar = (abar + (theta e^{-1}/2) d_a) f,
// and the x^mu versions with (i/2) theta e^{-1} d_{2,1}.
TwistedElement star_gen_left(Gen gen, const TwistedElement& f);
TwistedElement star_gen_right(const TwistedElement& f, Gen gen);

// P * f (side = left) or f * P (side = right) for polynomial P, evaluated by
// factoring P through the generator actions: each monomial a^p abar^q peels one
// generator at a time, a^p abar^q = abar*(a^p abar^{q-1}) + (p theta e^{-1}/2) a^{p-1} abar^{q-1}
// on the left (mirror ordering on the right).  Exact at first order and
// terminating for every polynomial; reduces to the constant-theta Moyal series
// at w = 0.  Throws NonTerminating when P has a Gaussian weight or a negative
// exponent.
TwistedElement star_series(const TwistedElement& P, const TwistedElement& f, Side side);

// The literal double sum with the coefficient (theta e^{-1}/2)^n frozen at the
// outer point and expanded to (theta/2)^n (1 - n(a w + abar wbar)).  Kept as a
// probe: at first order it differs from star_series by twist-derivative terms,
// and the difference is reported, never silently dropped.
TwistedElement star_series_frozen(const TwistedElement& P, const TwistedElement& f, Side side);

// Independent constant-theta Moyal series (no twist at all); reference for the
// w = 0 reduction checks.
TwistedElement star_moyal_constant(const TwistedElement& P, const TwistedElement& f, Side side);

// e^{-1} * f and f * e^{-1}, term by term through the generator actions.
TwistedElement e_inverse_star_left(const TwistedElement& f);
TwistedElement e_inverse_star_right(const TwistedElement& f);

TwistedElement commutator_star(const TwistedElement& P, const TwistedElement& Q);
TwistedElement anticommutator_star(const TwistedElement& P, const TwistedElement& Q);

// H * f and f * H for H = abar a;  method selects the evaluation route:
//   series      star_series(abar a, f, side)
//   bracket     abar*(a*f) + (theta/2)(e^{-1}*f)   (resp. the right mirror)
//   mu_operator the printed second-order operator mu_1/2 (resp. mu_2/2)
TwistedElement hamiltonian_left(const TwistedElement& f, HMethod method);
TwistedElement hamiltonian_right(const TwistedElement& f, HMethod method);

// X_a f = e_a^mu(x) d_mu f with the affine frame, in (a, abar) variables.
TwistedElement vector_field_apply(int index, const TwistedElement& f);

// (f*g)*h - f*(g*h); preconditions of star_series apply to f and g.
TwistedElement associator(const TwistedElement& f, const TwistedElement& g,
                          const TwistedElement& h);

// Cyclic commutator sums [x^mu,[x^nu,x^rho]] + cyclic for all 8 index triples.
struct JacobiTriple {
    int mu, nu, rho;
    TwistedElement residual;
};
std::array<JacobiTriple, 8> jacobi_residuals();

}  // namespace tmoyal
