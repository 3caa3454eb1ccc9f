#pragma once

#include <complex>
#include <vector>

#include "twistedmoyal/states.hpp"

namespace tmoyal {

struct DivisionAtPole : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NonIntegrable : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct BadConfig : AlgebraError {
    using AlgebraError::AlgebraError;
};

using Complex = std::complex<double>;

// Values for a, abar plus numeric theta, omega (omegabar = conj(omega)).
// real_point marks the standard substitution a = (x1+ix2)/sqrt2; independent
// complex (a, abar) pairs are allowed for algebra checks and flagged.
struct NumericPoint {
    Complex a{0.0, 0.0};
    Complex abar{0.0, 0.0};
    double theta = 1.0;
    Complex omega{0.0, 0.0};
    bool real_point = true;

    static NumericPoint from_x(double x1, double x2, double theta_val,
                               Complex omega_val = {0.0, 0.0});
    static NumericPoint from_complex(Complex a, Complex abar, double theta_val,
                                     Complex omega_val = {0.0, 0.0});
    double x1() const;
    double x2() const;
};

struct NumericConfig {
    double theta_val = 1.0;
    Complex omega_val{0.0, 0.0};  // omegabar is always the conjugate
    int quadrature_nodes = 48;    // per axis, >= 8
    int series_terms = 30;        // >= 1

    void validate() const;
};

// Substitutes numeric values, Gaussian weights exp(-2 g a abar/theta) included;
// norm applies the suppressed (m! n! theta^{m+n})^{-1/2}.
Complex eval(const TwistedElement& f, const NumericPoint& at, NormTag norm = {});

// Physicists' Gauss-Hermite rule: integrates g(x) e^{-x^2} as sum w_i g(x_i).
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Numeric twisted product at a point through the 4D integral form
//   (f*g)(x) = (e/(pi theta))^2 int d2y d2z f(y) g(z) exp(-(2 e i/theta)(x-y)J(x-z)),
// with e frozen at x and the Gaussian weights of f and g carried by the
// quadrature rule.  Requires every term of f and g to have weight g >= 1.
Complex star_quadrature(const TwistedElement& f, const TwistedElement& g,
                        const NumericPoint& at, const NumericConfig& cfg);

// e^{ikx} * e^{iqx}: series_value sums the bi-derivative series with the
// coefficient (theta e^{-1}/2)^n expanded to first order in omega (the same
// truncation the symbolic engine uses); formula_value evaluates the printed
// closed form e^{i(k+q)x} exp(-(i/2) theta e^{-1} kJq) nonperturbatively.
struct PlaneWaveResult {
    Complex series_value;
    Complex formula_value;
};
PlaneWaveResult plane_wave_check(const double k[2], const double q[2], const NumericPoint& at,
                                 const NumericConfig& cfg);

}  // namespace tmoyal
