#include "twistedmoyal/numeric.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace tmoyal {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

Complex to_complex(const CRat& c) {
    return Complex(static_cast<double>(c.re), static_cast<double>(c.im));
}

Complex ipow(Complex z, int n) {
    if (n == 0) return {1.0, 0.0};
    Complex r{1.0, 0.0};
    Complex b = n > 0 ? z : 1.0 / z;
    int e = n > 0 ? n : -n;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// pairwise (cascade) summation, deterministic and accurate
Complex pairwise_sum(std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        Complex s{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

NumericPoint NumericPoint::from_x(double x1, double x2, double theta_val, Complex omega_val) {
    NumericPoint p;
    p.a = Complex(x1, x2) / kSqrt2;
    p.abar = Complex(x1, -x2) / kSqrt2;
    p.theta = theta_val;
    p.omega = omega_val;
    p.real_point = true;
    return p;
}

NumericPoint NumericPoint::from_complex(Complex a, Complex abar, double theta_val,
                                        Complex omega_val) {
    NumericPoint p;
    p.a = a;
    p.abar = abar;
    p.theta = theta_val;
    p.omega = omega_val;
    p.real_point = false;
    return p;
}

double NumericPoint::x1() const { return ((a + abar) / kSqrt2).real(); }
double NumericPoint::x2() const { return ((a - abar) / (Complex(0, 1) * kSqrt2)).real(); }

void NumericConfig::validate() const {
    if (!(theta_val > 0)) throw BadConfig("theta must be positive");
    if (quadrature_nodes < 8) throw BadConfig("quadrature_nodes must be >= 8");
    if (series_terms < 1) throw BadConfig("series_terms must be >= 1");
}

namespace {

Complex eval_term(const Term& m, const CRat& c, const NumericPoint& at, bool with_gaussian) {
    Complex wbar = std::conj(at.omega);
    if ((m.p < 0 && at.a == 0.0) || (m.q < 0 && at.abar == 0.0))
        throw DivisionAtPole("negative power at a vanishing coordinate");
    Complex v = to_complex(c);
    v *= std::pow(at.theta, m.t);
    if (m.h) v *= kSqrt2;
    v *= ipow(at.a, m.p);
    v *= ipow(at.abar, m.q);
    if (m.r) v *= at.omega;
    if (m.s) v *= wbar;
    if (with_gaussian && m.g) v *= std::exp(-2.0 * m.g * at.a * at.abar / at.theta);
    return v;
}

}  // namespace

Complex eval(const TwistedElement& f, const NumericPoint& at, NormTag norm) {
    std::vector<Complex> parts;
    parts.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) parts.push_back(eval_term(m, c, at, true));
    Complex s = parts.empty() ? Complex{0.0, 0.0} : pairwise_sum(parts, 0, parts.size());
    if (norm.m || norm.n) {
        double fac = static_cast<double>(factorial(norm.m) * factorial(norm.n));
        s /= std::sqrt(fac * std::pow(at.theta, norm.m + norm.n));
    }
    return s;
}

void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    // Newton iteration on the orthonormal Hermite recurrence
    //   h_j(x) = x sqrt(2/j) h_{j-1}(x) - sqrt((j-1)/j) h_{j-2}(x),
    // h_j' = sqrt(2j) h_{j-1};  weights w_i = 2 / h_n'(x_i)^2.
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double eps = 1e-15;
    const int half = (n + 1) / 2;
    double x = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            x = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            x -= 1.14 * std::pow(n, 0.426) / x;
        } else if (i == 2) {
            x = 1.86 * x - 0.86 * nodes[0];
        } else if (i == 3) {
            x = 1.91 * x - 0.91 * nodes[1];
        } else {
            x = 2.0 * x - nodes[i - 2];
        }
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = std::pow(std::numbers::pi, -0.25);
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = x * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) <= eps * std::max(1.0, std::abs(x))) break;
        }
        nodes[i] = x;                    // descending positive roots first
        nodes[n - 1 - i] = -x;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

namespace {

// polynomial part of all terms with a fixed Gaussian weight, evaluated without
// the exp factor (the quadrature weight carries it)
TwistedElement weight_slice(const TwistedElement& f, int gw) {
    TwistedElement out;
    for (const auto& [m, c] : f.terms())
        if (m.g == gw) {
            Term mm = m;
            mm.g = 0;
            out.accumulate(mm, c);
        }
    return out;
}

std::vector<int> gaussian_weights(const TwistedElement& f) {
    std::vector<int> ws;
    for (const auto& [m, c] : f.terms()) {
        if (m.g < 1) throw NonIntegrable("factor has a term without Gaussian weight");
        if (ws.empty() || ws.back() != m.g) ws.push_back(m.g);
    }
    return ws;
}

}  // namespace

Complex star_quadrature(const TwistedElement& f, const TwistedElement& g,
                        const NumericPoint& at, const NumericConfig& cfg) {
    cfg.validate();
    if (f.is_zero() || g.is_zero()) return {0.0, 0.0};
    std::vector<int> wf = gaussian_weights(f);
    std::vector<int> wg = gaussian_weights(g);

    const int n = cfg.quadrature_nodes;
    std::vector<double> u, w;
    gauss_hermite(n, u, w);

    const double x1 = at.x1(), x2 = at.x2();
    // e and e^{-1} frozen at the outer point (exactly linear for the affine frame).
    // Kernel sign: +2ei/theta.  The displayed integral form carries a minus, but
    // re-deriving it from the plane-wave law e^{ikx} * e^{iqx} =
    // e^{i(k+q)x} e^{-(i/2) theta e^{-1} kJq} fixes the plus; the minus evaluates
    // the reversed product g * f.
    const Complex u_at = at.a * at.omega + at.abar * std::conj(at.omega);
    const Complex e_at = 1.0 + u_at;
    const Complex phase = 2.0 * e_at * Complex(0, 1) / at.theta;

    Complex total{0.0, 0.0};
    for (int gf : wf) {
        for (int gg : wg) {
            TwistedElement pf = weight_slice(f, gf);
            TwistedElement pg = weight_slice(g, gg);
            const double sy = std::sqrt(at.theta / gf);
            const double sz = std::sqrt(at.theta / gg);

            // Pf(i,j) = w_i w_j f_poly(y), y = (sy u_i, sy u_j); same for Pg with sz
            std::vector<Complex> Pf(n * n), Pg(n * n), K1(n * n), K2(n * n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    NumericPoint py = NumericPoint::from_x(sy * u[i], sy * u[j], at.theta, at.omega);
                    NumericPoint pz = NumericPoint::from_x(sz * u[i], sz * u[j], at.theta, at.omega);
                    Pf[i * n + j] = w[i] * w[j] * eval(pf, py);
                    Pg[i * n + j] = w[i] * w[j] * eval(pg, pz);
                    // K1(y1, z2) and K2(y2, z1) split the antisymmetric kernel
                    K1[i * n + j] = std::exp(phase * (x1 - sy * u[i]) * (x2 - sz * u[j]));
                    K2[i * n + j] = std::exp(-phase * (x2 - sy * u[i]) * (x1 - sz * u[j]));
                }
            }
            // contract:  S = sum_{i j k l} Pf(i,j) Pg(k,l) K1(i,l) K2(j,k)
            std::vector<Complex> M(n * n, Complex{0, 0});  // M(i,k) = sum_j Pf(i,j) K2(j,k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Complex pfij = Pf[i * n + j];
                    for (int k = 0; k < n; ++k) M[i * n + k] += pfij * K2[j * n + k];
                }
            std::vector<Complex> T(n * n, Complex{0, 0});  // T(i,l) = sum_k M(i,k) Pg(k,l)
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    Complex mik = M[i * n + k];
                    for (int l = 0; l < n; ++l) T[i * n + l] += mik * Pg[k * n + l];
                }
            std::vector<Complex> parts(n * n);
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) parts[i * n + l] = K1[i * n + l] * T[i * n + l];
            Complex S = pairwise_sum(parts, 0, parts.size());

            const double jac = (at.theta / gf) * (at.theta / gg);
            total += S * jac;
        }
    }
    const Complex pref = e_at / (std::numbers::pi * at.theta);
    return pref * pref * total;
}

PlaneWaveResult plane_wave_check(const double k[2], const double q[2], const NumericPoint& at,
                                 const NumericConfig& cfg) {
    cfg.validate();
    const double kJq = k[0] * q[1] - k[1] * q[0];
    const Complex u_at = at.a * at.omega + at.abar * std::conj(at.omega);
    const Complex einv = 1.0 - u_at;  // first order, exact for the affine determinant
    const double x1 = at.x1(), x2 = at.x2();
    const Complex pre = std::exp(Complex(0, 1) * ((k[0] + q[0]) * x1 + (k[1] + q[1]) * x2));

    // z = -(i/2) theta kJq; series coefficient (theta e^{-1}/2)^n truncated to
    // (theta/2)^n (1 - n u) exactly as the symbolic engine stores it
    const Complex z = Complex(0, -0.5) * at.theta * kJq;
    Complex series{0.0, 0.0};
    Complex zn{1.0, 0.0};
    double fact = 1.0;
    for (int n = 0; n <= cfg.series_terms; ++n) {
        if (n > 0) {
            zn *= z;
            fact *= n;
        }
        series += zn / fact * (1.0 - static_cast<double>(n) * u_at);
    }
    PlaneWaveResult r;
    r.series_value = pre * series;
    r.formula_value = pre * std::exp(z * einv);
    return r;
}

}  // namespace tmoyal
