#include "twistedmoyal/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tmoyal {

int Report::count(Verdict v) const {
    int n = 0;
    for (const auto& c : cases)
        if (c.status == v) ++n;
    return n;
}

int Report::required_failures() const {
    int n = 0;
    for (const auto& c : cases)
        if (c.required && c.status == Verdict::FAIL) ++n;
    return n;
}

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PASS: return "PASS";
        case Verdict::FAIL: return "FAIL";
        case Verdict::INFO: return "INFO";
    }
    return "?";
}

Verdict verdict_from_name(const std::string& s) {
    if (s == "PASS") return Verdict::PASS;
    if (s == "FAIL") return Verdict::FAIL;
    return Verdict::INFO;
}

ConformanceCase exact_case(std::string id, std::string anchor, const TwistedElement& lhs,
                           const TwistedElement& rhs, bool required, std::string note = "") {
    ConformanceCase c;
    c.id = std::move(id);
    c.paper_anchor = std::move(anchor);
    c.required = required;
    c.note = std::move(note);
    TwistedElement resid = lhs - rhs;
    if (resid.is_zero()) {
        c.status = Verdict::PASS;
    } else {
        c.status = Verdict::FAIL;
        c.residual = resid;
    }
    return c;
}

ConformanceCase info_case(std::string id, std::string anchor, const TwistedElement& value,
                          std::string note = "") {
    ConformanceCase c;
    c.id = std::move(id);
    c.paper_anchor = std::move(anchor);
    c.status = Verdict::INFO;
    if (!value.is_zero()) c.residual = value;
    c.note = std::move(note);
    return c;
}

ConformanceCase numeric_case(std::string id, std::string anchor, std::complex<double> expected,
                             std::complex<double> actual, double tol, int nodes, bool required,
                             std::string note = "") {
    ConformanceCase c;
    c.id = std::move(id);
    c.paper_anchor = std::move(anchor);
    c.required = required;
    c.note = std::move(note);
    NumericRecord r;
    r.expected = expected;
    r.actual = actual;
    r.abs_error = std::abs(actual - expected);
    r.rel_error = std::abs(expected) > 0 ? r.abs_error / std::abs(expected) : r.abs_error;
    r.nodes = nodes;
    c.numeric = r;
    c.status = r.abs_error <= tol ? Verdict::PASS : Verdict::FAIL;
    return c;
}

// ---- seeded random elements (mt19937_64 with modulo draws keeps reports
//      byte-identical across platforms) ----

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int pick(int lo, int hi) { return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

CRat random_coeff(Rng& rng) {
    int num = rng.pick(-9, 9);
    if (num == 0) num = 1;
    int den = rng.pick(1, 4);
    CRat c{Rat(num, den)};
    if (rng.pick(0, 3) == 0) c.im = Rat(rng.pick(-3, 3), den);
    return c;
}

TwistedElement random_element(Rng& rng, bool laurent, bool gaussian, bool twists) {
    TwistedElement f;
    int nterms = rng.pick(1, 4);
    for (int i = 0; i < nterms; ++i) {
        Term m;
        m.p = rng.pick(laurent ? -3 : 0, 3);
        m.q = rng.pick(laurent ? -3 : 0, 3);
        if (twists) {
            int tw = rng.pick(0, 2);
            m.r = tw == 1;
            m.s = tw == 2;
        }
        m.g = gaussian ? rng.pick(0, 2) : 0;
        m.t = rng.pick(-1, 2);
        f.accumulate(m, random_coeff(rng));
    }
    return f;
}

TwistedElement random_polynomial(Rng& rng, bool twists) {
    return random_element(rng, false, false, twists);
}

std::string iter_id(const std::string& base, int i) {
    return base + "[" + std::to_string(i) + "]";
}

// first failing trial becomes the case residual
ConformanceCase property_case(std::string id, std::string anchor, int trials,
                              const std::function<TwistedElement(Rng&)>& residual_fn, Rng& rng,
                              bool required = true) {
    ConformanceCase c;
    c.id = std::move(id);
    c.paper_anchor = std::move(anchor);
    c.required = required;
    c.status = Verdict::PASS;
    for (int i = 0; i < trials; ++i) {
        TwistedElement r = residual_fn(rng);
        if (!r.is_zero()) {
            c.status = Verdict::FAIL;
            c.residual = r;
            c.note = "failed at trial " + std::to_string(i);
            return c;
        }
    }
    c.note = std::to_string(trials) + " seeded trials";
    return c;
}

using E = TwistedElement;

E theta_times(const E& f, const CRat& c = CRat(1), int pow = 1) { return f.scaled(c, pow); }

E f00(StateSide s) { return fundamental(s).body; }

// ------------------------- suites -------------------------

void suite_algebra(Report& rep) {
    Rng rng(rep.config.seed);
    auto& cases = rep.cases;

    cases.push_back(property_case(
        "ring.mul_associative", "invented — artifact plumbing", 200,
        [](Rng& r) {
            E f = random_element(r, true, true, true), g = random_element(r, true, true, true),
              h = random_element(r, true, true, true);
            return (f * g) * h - f * (g * h);
        },
        rng));
    cases.push_back(property_case(
        "ring.mul_commutative", "ordinary multiplication of functions", 200,
        [](Rng& r) {
            E f = random_element(r, true, true, true), g = random_element(r, true, true, true);
            return f * g - g * f;
        },
        rng));
    cases.push_back(property_case(
        "ring.distributive", "invented — artifact plumbing", 200,
        [](Rng& r) {
            E f = random_element(r, true, true, true), g = random_element(r, true, true, true),
              h = random_element(r, true, true, true);
            return f * (g + h) - (f * g + f * h);
        },
        rng));
    cases.push_back(property_case(
        "derive.leibniz_pointwise", "Useful identities", 200,
        [](Rng& r) {
            E f = random_element(r, true, true, true), g = random_element(r, true, true, true);
            Var v = r.pick(0, 1) ? Var::a : Var::abar;
            return derive(f * g, v) - (derive(f, v) * g + f * derive(g, v));
        },
        rng));
    cases.push_back(property_case(
        "limit_omega_zero.ring_homomorphism", "corresponding to the usual Moyal star-product spectrum",
        200,
        [](Rng& r) {
            E f = random_element(r, true, true, true), g = random_element(r, true, true, true);
            E d1 = limit_omega_zero(f + g) - (limit_omega_zero(f) + limit_omega_zero(g));
            E d2 = limit_omega_zero(f * g) - limit_omega_zero(f) * limit_omega_zero(g);
            return d1 + d2.scaled(CRat(1), 3);  // distinct theta grade keeps both visible
        },
        rng));
    cases.push_back(property_case(
        "mirror.involution_and_homomorphism", "f00^(n)L = f00^(n)R(abar<->a, wbar<->w)", 200,
        [](Rng& r) {
            E f = random_element(r, true, true, true), g = random_element(r, true, true, true);
            E d1 = mirror(mirror(f)) - f;
            E d2 = mirror(f * g) - mirror(f) * mirror(g);
            return d1 + d2.scaled(CRat(1), 3);
        },
        rng));
    cases.push_back(property_case(
        "invert_unit.pointwise_inverse", "leading to useful relations", 200,
        [](Rng& r) {
            Term m{.p = r.pick(-2, 2), .q = r.pick(-2, 2), .t = r.pick(-1, 1)};
            E f = E::make_term(m, random_coeff(r));
            E first = random_element(r, true, true, false);
            f += omega_part(first * E::twist_w(), 1);
            if (r.pick(0, 1)) f += omega_part(random_element(r, true, true, false) * E::twist_wbar(), 1);
            return f * invert_unit(f) - E::one();
        },
        rng));
    cases.push_back(property_case(
        "serialization.roundtrip", "invented — artifact plumbing", 200,
        [](Rng& r) {
            E f = random_element(r, true, true, true);
            E back = parse_element(to_text(f));
            E back2 = element_from_json(element_to_json(f));
            return (back - f) + (back2 - f).scaled(CRat(1), 3);
        },
        rng));

    // pinned examples
    cases.push_back(exact_case("add.additive_inverse", "invented — artifact plumbing",
                               f00(StateSide::right) + (-f00(StateSide::right)), E::zero(), true));
    cases.push_back(exact_case("mul.e_times_e_inverse", "leading to useful relations",
                               E::e_factor() * E::e_inverse(), E::one(), true));
    {
        E ek = E::one();
        bool ok = true;
        for (int k = 1; k <= 3; ++k) {
            ek = ek * E::e_factor();
            if (!(E::twist_w() * ek == E::twist_w())) ok = false;
            if (!(E::twist_wbar() * ek == E::twist_wbar())) ok = false;
        }
        E em = invert_unit(E::e_factor());
        ok = ok && E::twist_w() * em == E::twist_w();
        ConformanceCase c;
        c.id = "mul.w_absorbs_e_powers";
        c.paper_anchor = "w e^k = w";
        c.required = true;
        c.status = ok ? Verdict::PASS : Verdict::FAIL;
        cases.push_back(c);
    }
    cases.push_back(exact_case("mul.cross_twist_truncated", "|w^mu| << 1",
                               (E::gen_a() * E::twist_w()) * (E::gen_abar() * E::twist_wbar()),
                               E::zero(), true));
    cases.push_back(exact_case("derive.e_inverse", "de^{-1}/da = -w",
                               derive(E::e_inverse(), Var::a), -E::twist_w(), true));
    cases.push_back(exact_case(
        "derive.fundamental_abar", "Useful identities, k = 1",
        derive(f00(StateSide::right), Var::abar),
        (E::gen_a() * E::e_factor()).scaled(CRat(-2), -1) * f00(StateSide::right), true));
    cases.push_back(exact_case("derive.laurent_power_rule", "invented — artifact plumbing",
                               derive(E::make_term(Term{.p = -1}, CRat(1)), Var::a),
                               E::make_term(Term{.p = -2}, CRat(-1)), true));
    cases.push_back(exact_case("limit.e_inverse", "corresponding to the usual Moyal star-product spectrum",
                               limit_omega_zero(E::e_inverse()), E::one(), true));
    cases.push_back(exact_case("limit.fundamental", "the fundamental state given by 2e^{-2a abar/theta}",
                               limit_omega_zero(f00(StateSide::right)),
                               E::gaussian().scaled(CRat(2)), true));
    cases.push_back(exact_case("invert.e_factor", "leading to useful relations",
                               invert_unit(E::e_factor()), E::e_inverse(), true));
    cases.push_back(exact_case("invert.identity", "invented — artifact plumbing",
                               invert_unit(E::one()), E::one(), true));
    {
        // 2 abar (1 + a w)  ->  (1/2) abar^{-1} (1 - a w)
        E f = E::make_term(Term{.q = 1}, CRat(2)) +
              E::make_term(Term{.p = 1, .q = 1, .r = 1}, CRat(2));
        E expect = E::make_term(Term{.q = -1}, CRat(1, 2)) +
                   E::make_term(Term{.p = 1, .q = -1, .r = 1}, CRat(-1, 2));
        cases.push_back(exact_case("invert.laurent_unit", "invented — artifact plumbing",
                                   invert_unit(f), expect, true));
        cases.push_back(exact_case("invert.multiply_back", "invented — artifact plumbing",
                                   f * invert_unit(f), E::one(), true));
    }
    {
        auto [x1, x2] = coord_images();
        cases.push_back(exact_case("coord.radius_squared", "giving rise to the creation and annihilation functions",
                                   x1 * x1 + x2 * x2,
                                   E::make_term(Term{.p = 1, .q = 1}, CRat(2)), true));
        E cross = (E::make_term(Term{.p = 2}, CRat(1)) - E::make_term(Term{.q = 2}, CRat(1)))
                      .scaled(CRat(1, 2) / CRat::unit_i());
        cases.push_back(exact_case("coord.cross_product", "giving rise to the creation and annihilation functions",
                                   x1 * x2, cross, true));
    }
    cases.push_back(property_case(
        "coord.laplacian_image", "The star brackets (anticommutator and commutator)", 50,
        [](Rng& r) {
            E f = random_element(r, true, true, true);
            E lhs = deriv_x(deriv_x(f, 1), 1) + deriv_x(deriv_x(f, 2), 2);
            return lhs - derive(derive(f, Var::a), Var::abar).scaled(CRat(2));
        },
        rng));
}

void suite_star(Report& rep) {
    Rng rng(rep.config.seed);
    auto& cases = rep.cases;
    const E a = E::gen_a(), ab = E::gen_abar();

    cases.push_back(exact_case("commutator.a_abar", "with the commutation relation",
                               commutator_star(a, ab), theta_times(E::e_inverse()), true));
    {
        auto [x1, x2] = coord_images();
        cases.push_back(exact_case("commutator.x1_x2", "[x^mu, x^nu]_star = i Theta^{ab} e_a^mu e_b^nu",
                                   commutator_star(x1, x2),
                                   theta_times(E::e_inverse(), CRat::unit_i()), true));
    }
    cases.push_back(exact_case("commutator.self", "invented — artifact plumbing",
                               commutator_star(a, a), E::zero(), true));
    cases.push_back(exact_case("gen.a_on_one", "invented — artifact plumbing",
                               star_gen_left(Gen::a, E::one()), a, true));
    cases.push_back(exact_case("gen.one_on_a", "invented — artifact plumbing",
                               star_gen_right(E::one(), Gen::a), a, true));
    cases.push_back(exact_case("series.unit", "invented — artifact plumbing",
                               star_series(E::one(), f00(StateSide::right), Side::left),
                               f00(StateSide::right), true));

    cases.push_back(property_case(
        "anticommutator.x_mu", "{x^mu, f}_star = 2 x^mu f", 200,
        [](Rng& r) {
            auto [x1, x2] = coord_images();
            const E& x = r.pick(0, 1) ? x1 : x2;
            E f = random_element(r, true, true, true);
            return anticommutator_star(x, f) - (x * f).scaled(CRat(2));
        },
        rng));

    cases.push_back(property_case(
        "series.generators_match_frozen_sum", "in terms of vectors fields", 200,
        [](Rng& r) {
            auto [x1, x2] = coord_images();
            E gens[4] = {E::gen_a(), E::gen_abar(), x1, x2};
            Gen tags[4] = {Gen::a, Gen::abar, Gen::x1, Gen::x2};
            int i = r.pick(0, 3);
            E f = random_element(r, true, true, true);
            if (r.pick(0, 1))
                return star_series_frozen(gens[i], f, Side::left) - star_gen_left(tags[i], f);
            return star_series_frozen(gens[i], f, Side::right) - star_gen_right(f, tags[i]);
        },
        rng));
    cases.push_back(property_case(
        "series.generators_match_factored", "in terms of vectors fields", 200,
        [](Rng& r) {
            E gens[2] = {E::gen_a(), E::gen_abar()};
            Gen tags[2] = {Gen::a, Gen::abar};
            int i = r.pick(0, 1);
            E f = random_element(r, true, true, true);
            if (r.pick(0, 1)) return star_series(gens[i], f, Side::left) - star_gen_left(tags[i], f);
            return star_series(gens[i], f, Side::right) - star_gen_right(f, tags[i]);
        },
        rng));
    cases.push_back(property_case(
        "series.moyal_reduction_at_omega_zero", "The usual multiplication law can be hence reproduced",
        200,
        [](Rng& r) {
            E P = random_polynomial(r, false), f = random_polynomial(r, false);
            Side s = r.pick(0, 1) ? Side::left : Side::right;
            E moyal = star_moyal_constant(P, f, s);
            E d1 = limit_omega_zero(star_series(P, f, s)) - moyal;
            E d2 = limit_omega_zero(star_series_frozen(P, f, s)) - moyal;
            return d1 + d2.scaled(CRat(1), 4);
        },
        rng));
    cases.push_back(property_case(
        "series.mirror_symmetry", "f00^(n)L = f00^(n)R(abar<->a, wbar<->w)", 200,
        [](Rng& r) {
            E P = random_polynomial(r, true);
            E f = random_element(r, true, true, true);
            return mirror(star_series(P, f, Side::left)) -
                   star_series(mirror(P), mirror(f), Side::right);
        },
        rng));

    // Hamiltonian method comparisons
    const E fr = f00(StateSide::right);
    cases.push_back(exact_case("hamiltonian.series_equals_bracket_on_f00R",
                               "H star (.) = [abar star a + theta e^{-1}/2] star (.)",
                               hamiltonian_left(fr, HMethod::series),
                               hamiltonian_left(fr, HMethod::bracket), true));
    cases.push_back(property_case(
        "hamiltonian.series_equals_bracket", "H star (.) = [abar star a + theta e^{-1}/2] star (.)",
        50,
        [](Rng& r) {
            E f = random_element(r, true, true, true);
            E d1 = hamiltonian_left(f, HMethod::series) - hamiltonian_left(f, HMethod::bracket);
            E d2 = hamiltonian_right(f, HMethod::series) - hamiltonian_right(f, HMethod::bracket);
            return d1 + d2.scaled(CRat(1), 4);
        },
        rng));
    for (int m = 0; m <= 3; ++m) {
        E body = ladder(StateSide::right, m).body;
        cases.push_back(exact_case(
            iter_id("hamiltonian.mu_vs_bracket.right", m), "self-adjoint unbounded twisted ho Hamiltonian",
            hamiltonian_left(body, HMethod::mu_operator), hamiltonian_left(body, HMethod::bracket),
            false, "printed mu_1/2 against the bracket route; disagreement is data about the paper"));
    }
    cases.push_back(exact_case("hamiltonian.mu_right_omega_zero_on_gaussian",
                               "self-adjoint unbounded twisted ho Hamiltonian",
                               limit_omega_zero(hamiltonian_right(E::gaussian().scaled(CRat(2)),
                                                                  HMethod::mu_operator)),
                               E::gaussian().scaled(CRat(1), 1), true,
                               "mu_2 on 2exp(-2a abar/theta) at omega = 0 gives theta exp(-2a abar/theta)"));
    {
        E diff = hamiltonian_left(fr, HMethod::series) - star_series_frozen(a * ab, fr, Side::left);
        cases.push_back(info_case(
            "hamiltonian.frozen_coefficient_probe", "in terms of vectors fields", diff,
            "factored series minus frozen-coefficient double sum on f00R; the frozen reading shifts "
            "the fundamental eigenvalue by (theta/2) abar wbar"));
    }
    {
        E f = fr;
        E lhs = star_gen_left(Gen::abar, star_gen_left(Gen::a, f)) + e_inverse_star_left(f).scaled(CRat(1, 2), 1);
        E rhs = star_gen_left(Gen::a, star_gen_left(Gen::abar, f)) - e_inverse_star_left(f).scaled(CRat(1, 2), 1);
        cases.push_back(info_case("hamiltonian.bracket_ordering_probe",
                                  "H star (.) = [a star abar - theta e^{-1}/2] star (.)", lhs - rhs,
                                  "the two printed decompositions of abar a differ at first order"));
    }
    {
        E f = fr + E::make_term(Term{.p = 1, .q = 2, .g = 1, .t = -1}, CRat(3));
        E mismatch = mirror(hamiltonian_left(f, HMethod::mu_operator)) -
                     hamiltonian_right(mirror(f), HMethod::mu_operator);
        cases.push_back(info_case("hamiltonian.mu_mirror_probe",
                                  "self-adjoint unbounded twisted ho Hamiltonian", mismatch,
                                  "the printed mu_1/mu_2 pair is not a mirror pair; mu_2 flips "
                                  "the theta^2 omega/4 corrections along with the e^{-1} group"));
    }

    // vector field spot value
    {
        auto [x1, x2] = coord_images();
        E w112x2 = (E::twist_w() - E::twist_wbar())
                       .scaled(-CRat::unit_i() * CRat(1, 2), 0, 1) * x2;
        cases.push_back(exact_case("vector_field.frame_entry", "infinitesimal affine transformation",
                                   vector_field_apply(1, x1), E::one() + w112x2, true));
        cases.push_back(exact_case("vector_field.constant", "invented — artifact plumbing",
                                   vector_field_apply(2, E::one()), E::zero(), true));
    }
}

void suite_jacobi(Report& rep) {
    for (const auto& tr : jacobi_residuals()) {
        std::string id = "jacobi(" + std::to_string(tr.mu) + "," + std::to_string(tr.nu) + "," +
                         std::to_string(tr.rho) + ")";
        rep.cases.push_back(exact_case(id, "conferring a Lie algebra structure", tr.residual,
                                       TwistedElement::zero(), true));
    }
}

void suite_leibniz(Report& rep) {
    Rng rng(rep.config.seed);
    for (int i = 0; i < 12; ++i) {
        E f = random_polynomial(rng, false);
        E g = random_polynomial(rng, false);
        for (int idx = 1; idx <= 2; ++idx) {
            E lhs = vector_field_apply(idx, star_series(f, g, Side::left));
            E rhs = star_series(vector_field_apply(idx, f), g, Side::left) +
                    star_series(f, vector_field_apply(idx, g), Side::left);
            E resid = lhs - rhs;
            rep.cases.push_back(exact_case(
                iter_id("leibniz.omega_zero.X" + std::to_string(idx), i), "Leibniz rule extends to the commuting fields",
                limit_omega_zero(resid), E::zero(), true));
            rep.cases.push_back(exact_case(
                iter_id("leibniz.first_order.X" + std::to_string(idx), i), "Leibniz rule extends to the commuting fields",
                resid, E::zero(), false,
                "the affine frame fields do not commute at first order; the residual is recorded"));
        }
    }
}

void suite_states(Report& rep) {
    auto& cases = rep.cases;
    const int maxm = std::min(rep.config.max_level, kMaxLevel);

    cases.push_back(exact_case("fundamental.right_annihilated", "a star f00^R = 0",
                               star_gen_left(Gen::a, f00(StateSide::right)), E::zero(), true));
    cases.push_back(exact_case("fundamental.left_annihilated", "f00^L star abar = 0",
                               star_gen_right(f00(StateSide::left), Gen::abar), E::zero(), true));
    cases.push_back(exact_case("fundamental.mirror", "f00^(n)L = f00^(n)R(abar<->a, wbar<->w)",
                               f00(StateSide::left), mirror(f00(StateSide::right)), true));
    cases.push_back(exact_case("ladder.level0", "the ho right fundamental state",
                               ladder(StateSide::right, 0).body, f00(StateSide::right), true));

    for (int m = 0; m + 1 <= maxm; ++m) {
        cases.push_back(exact_case(iter_id("ladder.recursion", m),
                                   "abar star f^R_m0 = sqrt(theta(m+1)) f^R_{m+1,0}",
                                   star_gen_left(Gen::abar, ladder(StateSide::right, m).body),
                                   ladder(StateSide::right, m + 1).body, true));
    }
    for (int m = 0; m <= maxm; ++m) {
        cases.push_back(exact_case(iter_id("ladder.mirror", m), "the construction of the left states",
                                   ladder(StateSide::left, m).body,
                                   mirror(ladder(StateSide::right, m).body), true));
        cases.push_back(exact_case(iter_id("ladder.vs_closed_form.right", m),
                                   "solve the eigenvalue problem",
                                   ladder(StateSide::right, m).body, closed_form(StateSide::right, m),
                                   false, "Eq.(ls) audited against the recursion"));
    }
    for (int m = 2; m <= maxm; ++m) {
        Rat eng = ladder_u_coefficient(StateSide::right, m);
        Rat prn = u_sequence(m);
        ConformanceCase c;
        c.id = iter_id("u_sequence.printed_vs_recursion", m);
        c.paper_anchor = "U_m = (m-1)2^{m-2} + sum";
        c.status = eng == prn ? Verdict::PASS : Verdict::FAIL;
        c.note = "printed U_" + std::to_string(m) + " = " + rat_str(prn) +
                 ", recursion gives " + rat_str(eng);
        if (c.status == Verdict::FAIL)
            c.residual = E::constant(CRat(prn - eng));
        cases.push_back(c);
    }

    const int maxdeg = std::min(6, maxm);
    for (int m = 0; m <= maxdeg; ++m) {
        LadderState st = ladder(StateSide::right, m);
        cases.push_back(exact_case(iter_id("degeneracy.right", m), "a^{m+2} star f^R_m0 = 0",
                                   apply_ladder_lowering(StateSide::right, st, m + 2), E::zero(),
                                   true));
        LadderState stl = ladder(StateSide::left, m);
        cases.push_back(exact_case(iter_id("degeneracy.left", m), "f^L_0m star abar^{m+2} = 0",
                                   apply_ladder_lowering(StateSide::left, stl, m + 2), E::zero(),
                                   true));
        if (m >= 1) {
            E low = apply_ladder_lowering(StateSide::right, st, m + 1);
            ConformanceCase c;
            c.id = iter_id("prop23.proportional_to_f00", m);
            c.paper_anchor = "a^{m+1} star f^R_m0 proportional to f00^R";
            c.required = true;
            try {
                E factor = divide_exact(low, f00(StateSide::right));
                c.status = Verdict::PASS;
                c.note = "factor " + to_text(factor);
            } catch (const NotProportional& e) {
                c.status = Verdict::FAIL;
                c.residual = e.residual;
            }
            cases.push_back(c);
            cases.push_back(exact_case(iter_id("prop23.printed_factor", m),
                                       "The right and left fundamental states defined by", low,
                                       appendix_a_expression(StateSide::right, m, m + 1), false,
                                       "printed omega-bar sum audited against the engine"));
        }
    }
}

void suite_spectra(Report& rep) {
    auto& cases = rep.cases;
    const int maxm = std::min(rep.config.max_level, kMaxLevel);

    for (int m = 0; m <= maxm; ++m) {
        for (StateSide side : {StateSide::right, StateSide::left}) {
            const bool right = side == StateSide::right;
            LadderState st = ladder(side, m);
            E Hf = right ? hamiltonian_left(st.body, HMethod::bracket)
                         : hamiltonian_right(st.body, HMethod::bracket);
            std::string tag = right ? "right" : "left";
            ConformanceCase c;
            c.id = iter_id("eigenvalue.extraction." + tag, m);
            c.paper_anchor = "solve the eigenvalue problem";
            c.required = true;
            E eig;
            try {
                eig = extract_eigenvalue(Hf, st.body);
                c.status = Verdict::PASS;
            } catch (const NotProportional& e) {
                c.status = Verdict::FAIL;
                c.residual = e.residual;
                cases.push_back(c);
                continue;
            }
            cases.push_back(c);

            E limit_expect = E::theta().scaled(CRat(2 * m + 1, 2));
            cases.push_back(exact_case(iter_id("eigenvalue.omega_zero_limit." + tag, m),
                                       "usual Moyal star-product spectrum",
                                       limit_omega_zero(eig), limit_expect, true));
            EnergyKind kind = right ? EnergyKind::right_m : EnergyKind::left_n;
            cases.push_back(exact_case(iter_id("eigenvalue.vs_paper." + tag, m),
                                       "Prop 2.1/2.2 energies", eig, paper_energy(kind, m), false,
                                       "printed energy audited against the bracket route"));
            Rat ueng = m >= 2 ? ladder_u_coefficient(StateSide::right, m) : Rat(0);
            cases.push_back(exact_case(
                iter_id("eigenvalue.vs_paper_structure." + tag, m), "Prop 2.1/2.2 energies", eig,
                paper_energy(kind, m, 0, ueng), false,
                "printed energy with the recursion's U substituted for the printed U"));

            E eig_series = extract_eigenvalue(
                right ? hamiltonian_left(st.body, HMethod::series)
                      : hamiltonian_right(st.body, HMethod::series),
                st.body);
            cases.push_back(exact_case(iter_id("eigenvalue.series_route." + tag, m),
                                       "H star f^R_m0 = E^R_m0 f^R_m0", eig_series, eig, true,
                                       "series and bracket routes agree"));
        }
    }

    // Lambda states: single twisted (m-k+1) right particles and the left mirror
    const int maxl = std::min(6, maxm);
    for (int m = 1; m <= maxl; ++m) {
        LadderState st = ladder(StateSide::right, m);
        for (int k = 1; k <= m; ++k) {
            E lam = apply_ladder_lowering(StateSide::right, st, k);
            E Hf = hamiltonian_left(lam, HMethod::bracket);
            E eig = extract_eigenvalue(Hf, lam);
            cases.push_back(exact_case("lambda.right.eig(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")",
                                       "single twisted (m-k+1) right particles states", eig,
                                       paper_energy(EnergyKind::lambda_mk_R, m, k), false,
                                       "Eq.(qu5) audited against the engine"));
        }
    }
    for (int n = 1; n <= maxl; ++n) {
        LadderState st = ladder(StateSide::left, n);
        for (int l = 1; l <= n; ++l) {
            E lam = apply_ladder_lowering(StateSide::left, st, l);
            E Hf = hamiltonian_right(lam, HMethod::bracket);
            E eig = extract_eigenvalue(Hf, lam);
            cases.push_back(exact_case("lambda.left.eig(n=" + std::to_string(n) + ",l=" + std::to_string(l) + ")",
                                       "are associated with the left action energy values", eig,
                                       paper_energy(EnergyKind::lambda_nl_L, n, l), false,
                                       "Eq.(qu6) audited against the engine"));
        }
    }
    for (int m = 1; m <= 6; ++m) {
        cases.push_back(exact_case(iter_id("lambda.qu5_specializes_to_qu3", m),
                                   "by replacing m = k and n = l",
                                   paper_energy(EnergyKind::lambda_mk_R, m, m),
                                   paper_energy(EnergyKind::lambda11_R, m), true));
        cases.push_back(exact_case(iter_id("lambda.qu6_specializes_to_qu4", m),
                                   "by replacing m = k and n = l",
                                   paper_energy(EnergyKind::lambda_nl_L, m, m),
                                   paper_energy(EnergyKind::lambda11_L, m), true));
        for (int k = 1; k <= m; ++k)
            cases.push_back(exact_case(
                "lambda.omega_zero_limit(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")",
                "well reproduce the ordinary Moyal plane",
                limit_omega_zero(paper_energy(EnergyKind::lambda_mk_R, m, k)),
                E::theta().scaled(CRat(2 * (m - k) + 1, 2)), true));
    }
}

void suite_appendix_a(Report& rep) {
    auto& cases = rep.cases;
    const int maxm = std::min(6, rep.config.max_level);
    for (StateSide side : {StateSide::right, StateSide::left}) {
        std::string tag = side == StateSide::right ? "right" : "left";
        for (int m = 1; m <= maxm; ++m) {
            LadderState st = ladder(side, m);
            for (int k = 1; k <= m; ++k) {
                E lhs = apply_ladder_lowering(side, st, k);
                std::string id = "appendixA." + tag + "(m=" + std::to_string(m) +
                                 ",k=" + std::to_string(k) + ")";
                cases.push_back(exact_case(id, "Right and left star-actions of the creation", lhs,
                                           appendix_a_expression(side, m, k), false,
                                           "printed closed form audited against iterated actions"));
                Rat ueng = ladder_u_coefficient(StateSide::right, m);
                cases.push_back(exact_case(id + ".with_recursion_U",
                                           "Right and left star-actions of the creation", lhs,
                                           appendix_a_expression(side, m, k, ueng), false,
                                           "same line with the recursion's U value"));
            }
            cases.push_back(exact_case("appendixA." + tag + ".prop23(m=" + std::to_string(m) + ")",
                                       "proportional to f00", apply_ladder_lowering(side, st, m + 1),
                                       appendix_a_expression(side, m, m + 1), false));
            cases.push_back(exact_case("appendixA." + tag + ".null(m=" + std::to_string(m) + ")",
                                       "a^{m+2} star f^R_m0 = 0",
                                       apply_ladder_lowering(side, st, m + 2),
                                       appendix_a_expression(side, m, m + 2), true));
        }
    }
}

void suite_appendix_b(Report& rep) {
    auto& cases = rep.cases;
    const E fr = f00(StateSide::right);
    const E fl = f00(StateSide::left);
    const E a = E::gen_a(), ab = E::gen_abar();

    auto ek = [](int l) {  // e^l = 1 + l(a w + abar wbar) at first order
        E s = E::one();
        s += (E::gen_a() * E::twist_w() + E::gen_abar() * E::twist_wbar()).scaled(CRat(l));
        return s;
    };
    auto dpow = [](E f, Var v, int k) {
        for (int i = 0; i < k; ++i) f = derive(f, v);
        return f;
    };
    auto mono = [](int p, int q, const CRat& c, int t) {
        return E::make_term(Term{.p = p, .q = q, .t = t}, c);
    };

    for (int k = 1; k <= 6; ++k) {
        const CRat mtt = CRat(rat_pow(Rat(-2), k));  // (-2/theta)^k carried as value and t-shift
        // B1: da^k f00R, with (1 + k a w - k abar wbar/2) folded against e^k
        E rhs1;
        {
            E lead = mono(0, k - 1, CRat(Rat(k * (k - 1)) * rat_pow(Rat(-2), k - 1)), -(k - 1)) *
                     E::twist_w();
            E main = mono(0, k, mtt, -k) * ek(k) *
                     (E::one() + (a * E::twist_w()).scaled(CRat(k)) -
                      (ab * E::twist_wbar()).scaled(CRat(Rat(k, 2))));
            rhs1 = (lead + main) * fr;
            cases.push_back(exact_case(iter_id("appendixB.da_f00R", k), "Useful identities",
                                       dpow(fr, Var::a, k), rhs1, true));
        }
        // B2: dabar^k f00R
        E rhs2;
        {
            E lead = mono(k - 1, 0, CRat(Rat(k * (k - 1), 2) * rat_pow(Rat(-2), k - 1)), -(k - 1)) *
                     E::twist_wbar();
            E main = mono(k, 0, mtt, -k) * ek(k);
            rhs2 = (lead + main) * fr;
            cases.push_back(exact_case(iter_id("appendixB.dabar_f00R", k), "Useful identities",
                                       dpow(fr, Var::abar, k), rhs2, true));
        }
        // B3/B4: printed left lines are the exact mirrors of B1/B2
        cases.push_back(exact_case(iter_id("appendixB.dabar_f00L", k), "Useful identities",
                                   dpow(fl, Var::abar, k), mirror(rhs1), true));
        cases.push_back(exact_case(iter_id("appendixB.da_f00L", k), "Useful identities",
                                   dpow(fl, Var::a, k), mirror(rhs2), true));
    }

    // B5/B6: da^k (-2a/(theta e^{-1}))^l and the conjugate
    for (int l = 1; l <= 6; ++l) {
        E base = mono(l, 0, CRat(rat_pow(Rat(-2), l)), -l) * ek(l);
        for (int k = 1; k <= l + 1; ++k) {
            E rhs;
            if (l - k + 1 >= 0) {
                Rat c = Rat(k * l) * factorial(l) / factorial(l - k + 1) * rat_pow(Rat(-2), k - 1) *
                        rat_pow(Rat(-2), l - k + 1);
                rhs += mono(l - k + 1, 0, CRat(c), -l) * E::twist_w();
            }
            if (l - k >= 0) {
                Rat c = factorial(l) / factorial(l - k) * rat_pow(Rat(-2), l);
                rhs += mono(l - k, 0, CRat(c), -l) * ek(l);
            }
            cases.push_back(exact_case(
                "appendixB.da_power(l=" + std::to_string(l) + ",k=" + std::to_string(k) + ")",
                "Useful identities", dpow(base, Var::a, k), rhs, true));
            cases.push_back(exact_case(
                "appendixB.dabar_power(l=" + std::to_string(l) + ",k=" + std::to_string(k) + ")",
                "Useful identities", dpow(mirror(base), Var::abar, k), mirror(rhs), true));
        }
    }
}

void suite_matrix_basis(Report& rep) {
    auto& cases = rep.cases;
    MatrixBasisElement b00;

    {
        auto [b, scalar] = matrix_basis_action(BasisOp::lower_left, b00);
        cases.push_back(exact_case("basis.a_annihilates_b00", "a star b^(2)_00 = 0", scalar,
                                   E::zero(), true));
    }
    {
        auto [b, scalar] = matrix_basis_action(BasisOp::lower_right, b00);
        cases.push_back(exact_case("basis.b00_annihilates_abar", "b^(2)_00 star abar = 0", scalar,
                                   E::zero(), true));
    }
    {
        MatrixBasisElement b = b00;
        bool ok = true;
        for (int m = 0; m < 4; ++m) {
            auto [raised, scalar] = matrix_basis_action(BasisOp::raise_left, b);
            ok = ok && raised.m == m + 1 && scalar == E::one();
            b = raised;
        }
        E product = E::one();
        for (int m = 4; m >= 1; --m) {
            auto [lowered, scalar] = matrix_basis_action(BasisOp::lower_left, b);
            product = product * scalar;
            b = lowered;
        }
        // lowering abar^{* 4} b00 back down accumulates theta^4 4!
        cases.push_back(exact_case("basis.raise_lower_roundtrip",
                                   "actions of the annihilation and creation", product,
                                   E::theta(4).scaled(CRat(24)), true));
    }
    for (int m = 0; m <= 4; ++m) {
        MatrixBasisElement b{m, 2};
        auto [bh, scalar] = matrix_basis_action(BasisOp::H_left, b);
        cases.push_back(exact_case(iter_id("basis.H_left_eigenvalue", m),
                                   "corresponding eigenvalue problems are given by", scalar,
                                   paper_energy(EnergyKind::right_m, m), true));
        auto [bh2, scalar2] = matrix_basis_action(BasisOp::H_right, b);
        cases.push_back(exact_case(iter_id("basis.H_right_eigenvalue", m),
                                   "corresponding eigenvalue problems are given by", scalar2,
                                   paper_energy(EnergyKind::left_n, 2), true));
    }
    for (int m = 1; m <= 6; ++m) {
        cases.push_back(exact_case(iter_id("basis.lambda11_from_qu5", m),
                                   "depending on the right and left Hamiltonian",
                                   paper_energy(EnergyKind::lambda_mk_R, m, m),
                                   paper_energy(EnergyKind::lambda11_R, m), true,
                                   "H-eigenvalue rule for the fully lowered sandwich"));
    }
}

void suite_numeric(Report& rep) {
    auto& cases = rep.cases;
    NumericConfig cfg;
    cfg.theta_val = rep.config.theta;
    cfg.omega_val = rep.config.omega;
    cfg.quadrature_nodes = rep.config.nodes >= 8 ? rep.config.nodes : 48;
    cfg.validate();
    const E fr = f00(StateSide::right);

    {
        NumericPoint p = NumericPoint::from_x(0.3, -0.2, 1.0);
        cases.push_back(numeric_case("eval.fundamental_closed_form", "the ho right fundamental state",
                                     2.0 * std::exp(-0.13), eval(limit_omega_zero(fr), p), 1e-14, 0,
                                     true));
        cases.push_back(numeric_case("eval.one", "invented — artifact plumbing", {1.0, 0.0},
                                     eval(E::one(), p), 0.0, 0, true));
        cases.push_back(numeric_case("eval.theta_e_inverse", "can be explicit as", {p.theta, 0.0},
                                     eval(theta_times(E::e_inverse()), p), 0.0, 0, true));
    }
    {
        // exact whenever the truncated second-order twist terms evaluate to zero:
        // either omega = 0 at the point, or the elements carry no twist factors
        Rng rng(rep.config.seed);
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            bool twisted = rng.pick(0, 1) == 1;
            E f = random_element(rng, false, true, twisted);
            E g = random_element(rng, false, true, twisted);
            Complex omega = twisted ? Complex{0.0, 0.0}
                                    : Complex{rng.pick(-5, 5) / 100.0, rng.pick(-5, 5) / 100.0};
            NumericPoint p = NumericPoint::from_x(rng.pick(-10, 10) / 10.0, rng.pick(-10, 10) / 10.0,
                                                  1.0 + rng.pick(0, 20) / 10.0, omega);
            Complex lhs = eval(f * g, p);
            Complex rhs = eval(f, p) * eval(g, p);
            Complex sum_lhs = eval(f + g, p);
            Complex sum_rhs = eval(f, p) + eval(g, p);
            double scale = std::max({1.0, std::abs(lhs), std::abs(sum_lhs)});
            double err = std::max(std::abs(lhs - rhs), std::abs(sum_lhs - sum_rhs)) / scale;
            worst = std::max(worst, err);
            if (err > 1e-12) ok = false;
        }
        ConformanceCase c;
        c.id = "eval.ring_homomorphism";
        c.paper_anchor = "invented — artifact plumbing";
        c.required = true;
        c.status = ok ? Verdict::PASS : Verdict::FAIL;
        std::ostringstream os;
        os << "200 seeded trials, worst relative error " << worst;
        c.note = os.str();
        cases.push_back(c);
    }

    // f00 * f00 = f00 at omega = 0 (idempotent Gaussian), five sample points
    const double pts[5][2] = {{0.3, -0.2}, {0.0, 0.0}, {0.5, 0.1}, {-0.4, -0.3}, {0.2, 0.6}};
    const E fz = limit_omega_zero(fr);
    for (int i = 0; i < 5; ++i) {
        NumericPoint p = NumericPoint::from_x(pts[i][0], pts[i][1], cfg.theta_val);
        Complex expect = eval(fz, p);
        NumericConfig c48 = cfg;
        c48.quadrature_nodes = 48;
        NumericConfig c96 = cfg;
        c96.quadrature_nodes = 96;
        Complex q48 = star_quadrature(fz, fz, p, c48);
        Complex q96 = star_quadrature(fz, fz, p, c96);
        cases.push_back(numeric_case(iter_id("quadrature.f00_star_f00.n48", i),
                                     "the adapted form for the proof", expect, q48, 1e-4, 48, true));
        double e48 = std::abs(q48 - expect);
        double e96 = std::abs(q96 - expect);
        ConformanceCase c;
        c.id = iter_id("quadrature.f00_star_f00.n96_improves", i);
        c.paper_anchor = "the adapted form for the proof";
        c.required = true;
        NumericRecord r;
        r.expected = expect;
        r.actual = q96;
        r.abs_error = e96;
        r.rel_error = e48 > 0 ? e96 / e48 : 0.0;
        r.nodes = 96;
        c.numeric = r;
        c.status = (e96 * 10.0 <= e48 || e96 < 1e-12) ? Verdict::PASS : Verdict::FAIL;
        std::ostringstream os;
        os << "error ratio 96/48 = " << (e48 > 0 ? e96 / e48 : 0.0);
        c.note = os.str();
        cases.push_back(c);
    }
    {
        // convergence from 24 to 48 nodes
        NumericPoint p = NumericPoint::from_x(0.3, -0.2, cfg.theta_val);
        Complex expect = eval(fz, p);
        NumericConfig c24 = cfg;
        c24.quadrature_nodes = 24;
        NumericConfig c48 = cfg;
        c48.quadrature_nodes = 48;
        double e24 = std::abs(star_quadrature(fz, fz, p, c24) - expect);
        double e48 = std::abs(star_quadrature(fz, fz, p, c48) - expect);
        ConformanceCase c;
        c.id = "quadrature.convergence_doubling";
        c.paper_anchor = "the adapted form for the proof";
        c.required = true;
        c.status = (e48 * 10.0 <= e24 || e48 < 1e-12) ? Verdict::PASS : Verdict::FAIL;
        std::ostringstream os;
        os << "errors " << e24 << " -> " << e48;
        c.note = os.str();
        cases.push_back(c);
    }
    {
        // (abar f00) * f00 = 2 abar G and f00 * (abar f00) = 0 at omega = 0
        NumericPoint p = NumericPoint::from_x(0.3, -0.2, cfg.theta_val);
        E abar_f = E::gen_abar() * fz;
        Complex expect = eval(E::make_term(Term{.q = 1, .g = 1}, CRat(2)), p);
        cases.push_back(numeric_case("quadrature.lowered_state_left", "exploits the star-multiplication of",
                                     expect, star_quadrature(abar_f, fz, p, cfg), 1e-4,
                                     cfg.quadrature_nodes, true,
                                     "(abar f00) star f00 against the symbolic (1/2) abar star f00"));
        cases.push_back(numeric_case("quadrature.lowered_state_right", "f00^L star abar = 0", {0.0, 0.0},
                                     star_quadrature(fz, abar_f, p, cfg), 1e-4, cfg.quadrature_nodes,
                                     true, "f00 star (abar f00) vanishes at omega = 0"));
        ConformanceCase c;
        c.id = "quadrature.kernel_sign_note";
        c.paper_anchor = "the adapted form for the proof";
        c.status = Verdict::INFO;
        c.note = "the displayed kernel sign -(2ei/theta)(x-y)J(x-z) evaluates the reversed product; "
                 "the engine uses the sign its own plane-wave law fixes (+), which the ordered "
                 "lowered-state cases above confirm";
        cases.push_back(c);
    }

    // plane waves
    {
        double k[2] = {1.0, 0.0}, q[2] = {0.0, 1.0};
        NumericPoint p0 = NumericPoint::from_x(0.0, 0.0, 0.5);
        auto pw = plane_wave_check(k, q, p0, cfg);
        cases.push_back(numeric_case("plane_wave.formula_phase", "one can see that",
                                     std::exp(Complex(0, -0.25)), pw.formula_value, 1e-12, 0, true));
        cases.push_back(numeric_case("plane_wave.series_vs_formula_omega_zero", "one can see that",
                                     pw.formula_value, pw.series_value, 1e-8, 0, true));
        double kk[2] = {0.7, -0.4};
        auto pw2 = plane_wave_check(kk, kk, NumericPoint::from_x(0.2, -0.1, 1.0), cfg);
        Complex expect = std::exp(Complex(0, 2 * (0.7 * 0.2 + -0.4 * -0.1)));
        cases.push_back(numeric_case("plane_wave.self_product_pure_phase", "kJk = 0", expect,
                                     pw2.formula_value, 1e-12, 0, true));
        cases.push_back(numeric_case("plane_wave.self_series_matches", "kJk = 0", expect,
                                     pw2.series_value, 1e-8, 0, true));

        // |series - formula| should scale as O(|omega|^2)
        double err[3];
        double mag = 0.02;
        for (int i = 0; i < 3; ++i, mag /= 2) {
            NumericPoint p = NumericPoint::from_x(0.4, 0.3, 1.0, {mag, mag / 3});
            auto r = plane_wave_check(k, q, p, cfg);
            err[i] = std::abs(r.series_value - r.formula_value);
        }
        ConformanceCase c;
        c.id = "plane_wave.omega_squared_scaling";
        c.paper_anchor = "|w^mu| << 1";
        c.required = true;
        bool ok = err[0] > 3.0 * err[1] && err[1] > 3.0 * err[2];
        c.status = ok ? Verdict::PASS : Verdict::FAIL;
        std::ostringstream os;
        os << "errors " << err[0] << ", " << err[1] << ", " << err[2] << " under |omega| halving";
        c.note = os.str();
        cases.push_back(c);
    }
    if (std::abs(rep.config.omega) > 0) {
        ConformanceCase c;
        c.id = "quadrature.omega_nonzero_caveat";
        c.paper_anchor = "|w^mu| << 1";
        c.status = Verdict::INFO;
        c.note = "omega != 0: quadrature results are first-order-only";
        cases.push_back(c);
    }
}

void suite_associator(Report& rep) {
    Rng rng(rep.config.seed);
    auto& cases = rep.cases;
    const E a = E::gen_a(), ab = E::gen_abar();

    cases.push_back(info_case("associator(a,abar,f00R)", "probes the implicit associativity assumption",
                              associator(a, ab, f00(StateSide::right)),
                              "published, not asserted"));
    cases.push_back(info_case("associator(a,abar,1)", "probes the implicit associativity assumption",
                              associator(a, ab, E::one())));
    cases.push_back(exact_case("associator.unit_left", "invented — artifact plumbing",
                               associator(E::one(), a, f00(StateSide::right)) +
                                   associator(E::one(), a * ab, ab),
                               E::zero(), true));
    cases.push_back(property_case(
        "associator.vanishes_at_omega_zero", "constant-theta Moyal product is associative", 50,
        [](Rng& r) {
            E f = random_polynomial(r, false), g = random_polynomial(r, false),
              h = random_polynomial(r, false);
            return limit_omega_zero(associator(f, g, h));
        },
        rng));
    for (int i = 0; i < 5; ++i) {
        E f = random_polynomial(rng, true);
        E g = random_polynomial(rng, true);
        E h = random_element(rng, true, true, true);
        cases.push_back(info_case(iter_id("associator.random", i),
                                  "probes the implicit associativity assumption", associator(f, g, h)));
    }
}

}  // namespace

ConformanceCase jacobi_check() {
    ConformanceCase c;
    c.id = "jacobi.all_triples";
    c.paper_anchor = "conferring a Lie algebra structure";
    c.required = true;
    c.status = Verdict::PASS;
    for (const auto& tr : jacobi_residuals()) {
        if (!tr.residual.is_zero()) {
            c.status = Verdict::FAIL;
            c.residual = tr.residual;
            break;
        }
    }
    return c;
}

std::vector<std::string> suite_names() {
    return {"algebra", "star", "jacobi", "leibniz", "states", "spectra",
            "appendix_a", "appendix_b", "matrix_basis", "numeric", "associator"};
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
    Report rep;
    rep.suite = name;
    rep.config = cfg;
    if (name == "algebra") suite_algebra(rep);
    else if (name == "star") suite_star(rep);
    else if (name == "jacobi") suite_jacobi(rep);
    else if (name == "leibniz") suite_leibniz(rep);
    else if (name == "states") suite_states(rep);
    else if (name == "spectra") suite_spectra(rep);
    else if (name == "appendix_a") suite_appendix_a(rep);
    else if (name == "appendix_b") suite_appendix_b(rep);
    else if (name == "matrix_basis") suite_matrix_basis(rep);
    else if (name == "numeric") suite_numeric(rep);
    else if (name == "associator") suite_associator(rep);
    else throw UnknownSuite("unknown suite '" + name + "'");
    return rep;
}

// ------------------------- rendering -------------------------

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (engine " << engine_version << ", seed " << config.seed << ")\n";
    for (const auto& c : cases) {
        os << "  [" << verdict_name(c.status) << "] " << c.id;
        if (!c.note.empty()) os << "  -- " << c.note;
        if (c.status != Verdict::PASS && c.residual)
            os << "\n         residual: " << tmoyal::to_text(*c.residual);
        if (c.numeric) {
            os << "  (|err| = " << c.numeric->abs_error;
            if (c.numeric->nodes) os << ", nodes " << c.numeric->nodes;
            os << ")";
        }
        os << "\n";
    }
    os << "  summary: " << count(Verdict::PASS) << " pass, " << count(Verdict::FAIL) << " fail, "
       << count(Verdict::INFO) << " info";
    if (required_failures()) os << "  [" << required_failures() << " required failures]";
    os << "\n";
    return os.str();
}

nlohmann::json Report::to_json() const {
    nlohmann::json cases_json = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json j{{"id", c.id},
                         {"paper_anchor", c.paper_anchor},
                         {"status", verdict_name(c.status)},
                         {"required", c.required}};
        if (!c.note.empty()) j["note"] = c.note;
        if (c.residual) j["residual"] = element_to_json(*c.residual);
        if (c.numeric) {
            j["numeric"] = {{"expected_re", c.numeric->expected.real()},
                            {"expected_im", c.numeric->expected.imag()},
                            {"actual_re", c.numeric->actual.real()},
                            {"actual_im", c.numeric->actual.imag()},
                            {"abs_error", c.numeric->abs_error},
                            {"rel_error", c.numeric->rel_error},
                            {"nodes", c.numeric->nodes}};
        }
        cases_json.push_back(std::move(j));
    }
    return {{"suite", suite},
            {"engine_version", engine_version},
            {"seed", config.seed},
            {"config",
             {{"max_level", config.max_level},
              {"theta", config.theta},
              {"omega_re", config.omega.real()},
              {"omega_im", config.omega.imag()},
              {"nodes", config.nodes}}},
            {"cases", cases_json},
            {"summary",
             {{"pass", count(Verdict::PASS)},
              {"fail", count(Verdict::FAIL)},
              {"info", count(Verdict::INFO)},
              {"required_failures", required_failures()}}}};
}

Report Report::from_json(const nlohmann::json& j) {
    Report rep;
    rep.suite = j.at("suite").get<std::string>();
    rep.engine_version = j.at("engine_version").get<std::string>();
    rep.config.seed = j.at("seed").get<std::uint64_t>();
    const auto& cfg = j.at("config");
    rep.config.max_level = cfg.at("max_level").get<int>();
    rep.config.theta = cfg.at("theta").get<double>();
    rep.config.omega = {cfg.at("omega_re").get<double>(), cfg.at("omega_im").get<double>()};
    rep.config.nodes = cfg.at("nodes").get<int>();
    for (const auto& cj : j.at("cases")) {
        ConformanceCase c;
        c.id = cj.at("id").get<std::string>();
        c.paper_anchor = cj.at("paper_anchor").get<std::string>();
        c.status = verdict_from_name(cj.at("status").get<std::string>());
        c.required = cj.at("required").get<bool>();
        if (cj.contains("note")) c.note = cj.at("note").get<std::string>();
        if (cj.contains("residual")) c.residual = element_from_json(cj.at("residual"));
        if (cj.contains("numeric")) {
            NumericRecord r;
            const auto& nj = cj.at("numeric");
            r.expected = {nj.at("expected_re").get<double>(), nj.at("expected_im").get<double>()};
            r.actual = {nj.at("actual_re").get<double>(), nj.at("actual_im").get<double>()};
            r.abs_error = nj.at("abs_error").get<double>();
            r.rel_error = nj.at("rel_error").get<double>();
            r.nodes = nj.at("nodes").get<int>();
            c.numeric = r;
        }
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

SpectrumTable spectrum_table(StateSide side, int max_level, bool omega_zero) {
    if (max_level > kMaxLevel) throw LevelTooLarge("spectrum table limited to level 12");
    SpectrumTable tab;
    tab.side = side;
    tab.omega_zero = omega_zero;
    for (int m = 0; m <= max_level; ++m) {
        LadderState st = ladder(side, m);
        TwistedElement Hf = side == StateSide::right
                                ? hamiltonian_left(st.body, HMethod::bracket)
                                : hamiltonian_right(st.body, HMethod::bracket);
        TwistedElement eng = extract_eigenvalue(Hf, st.body);
        TwistedElement paper = paper_energy(
            side == StateSide::right ? EnergyKind::right_m : EnergyKind::left_n, m);
        TwistedElement limit = limit_omega_zero(eng);
        SpectrumRow row;
        row.level = m;
        if (omega_zero) {
            row.engine = limit;
            row.paper = limit_omega_zero(paper);
        } else {
            row.engine = eng;
            row.paper = paper;
        }
        row.residual = row.engine - row.paper;
        row.limit = limit;
        tab.rows.push_back(std::move(row));
    }
    return tab;
}

std::string SpectrumTable::to_text() const {
    std::ostringstream os;
    os << (side == StateSide::right ? "right" : "left") << " spectrum"
       << (omega_zero ? " (omega -> 0)" : " (symbolic)") << "\n";
    for (const auto& r : rows) {
        os << "  level " << r.level << ":\n";
        os << "    engine   " << tmoyal::to_text(r.engine) << "\n";
        os << "    paper    " << tmoyal::to_text(r.paper) << "\n";
        os << "    residual " << tmoyal::to_text(r.residual) << "\n";
        os << "    limit    " << tmoyal::to_text(r.limit) << "\n";
    }
    return os.str();
}

nlohmann::json SpectrumTable::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"level", r.level},
                             {"engine", element_to_json(r.engine)},
                             {"paper", element_to_json(r.paper)},
                             {"residual", element_to_json(r.residual)},
                             {"omega_zero_limit", element_to_json(r.limit)}});
    }
    return {{"side", side == StateSide::right ? "right" : "left"},
            {"omega_zero", omega_zero},
            {"rows", rows_json}};
}

}  // namespace tmoyal
