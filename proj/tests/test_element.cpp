#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "twistedmoyal/element.hpp"

using namespace tmoyal;
using E = TwistedElement;

namespace {
E f00R() {
    E e;
    e.accumulate(Term{.g = 1}, CRat(2));
    e.accumulate(Term{.p = 2, .q = 1, .r = 1, .g = 1, .t = -1}, CRat(-4));
    e.accumulate(Term{.p = 1, .q = 2, .s = 1, .g = 1, .t = -1}, CRat(-2));
    return e;
}
}  // namespace

TEST_CASE("complex rational arithmetic") {
    CRat i = CRat::unit_i();
    CHECK(i * i == CRat(-1));
    CHECK((CRat(3, 2) + CRat(1, 2)) == CRat(2));
    CHECK((CRat(1) / i) == -i);
    CHECK(CRat(Rat(2, 4)).re == Rat(1, 2));  // stored in lowest terms
    CHECK(CRat(Rat(1, 3), Rat(-2)).conj() == CRat(Rat(1, 3), Rat(2)));
}

TEST_CASE("canonicalization drops second order twists and zero terms") {
    E f;
    f.accumulate(Term{.r = 1, .s = 1}, CRat(5));
    CHECK(f.is_zero());
    f.accumulate(Term{.p = 1}, CRat(1));
    f.accumulate(Term{.p = 1}, CRat(-1));
    CHECK(f.is_zero());
    CHECK((E::twist_w() * E::twist_wbar()).is_zero());
    CHECK((E::twist_w() * E::twist_w()).is_zero());
}

TEST_CASE("sqrt2 parity folds into the coefficient") {
    E r2 = E::root_two();
    CHECK(r2 * r2 == E::constant(CRat(2)));
    // (sqrt2)^{-1} = sqrt2 / 2
    E inv = E::make_term(Term{.h = -1}, CRat(1));
    CHECK(inv == E::root_two().scaled(CRat(1, 2)));
    CHECK(E::make_term(Term{.h = 4}, CRat(1)) == E::constant(CRat(4)));
}

TEST_CASE("addition keeps distinct monomials distinct") {
    E f = E::gen_a() + E::gen_abar();
    CHECK(f.size() == 2);
    E g = E::gen_a() * E::twist_w() + E::gen_a() * E::twist_wbar();
    CHECK(g.size() == 2);
}

TEST_CASE("pointwise product adds Gaussian weights") {
    E g1 = E::gaussian(1), g2 = E::gaussian(2);
    CHECK(g1 * g2 == E::gaussian(3));
    CHECK_THROWS_AS(E::make_term(Term{.g = -1}, CRat(1)), AlgebraError);
}

TEST_CASE("e and its inverse") {
    CHECK(E::e_factor() * E::e_inverse() == E::one());
    E ek = E::e_factor() * E::e_factor() * E::e_factor();
    CHECK(E::twist_w() * ek == E::twist_w());
    CHECK(E::twist_wbar() * ek == E::twist_wbar());
}

TEST_CASE("derivatives") {
    CHECK(derive(E::e_inverse(), Var::a) == -E::twist_w());
    CHECK(derive(E::e_inverse(), Var::abar) == -E::twist_wbar());
    CHECK(derive(E::make_term(Term{.p = -1}, CRat(1)), Var::a) ==
          E::make_term(Term{.p = -2}, CRat(-1)));
    // Gaussian weight contributes -(2g/theta) times the conjugate variable
    CHECK(derive(E::gaussian().scaled(CRat(2)), Var::abar) ==
          E::make_term(Term{.p = 1, .g = 1, .t = -1}, CRat(-4)));
    // Appendix B k=1:  dabar f00R = -(2a/theta)(1 + a w + abar wbar) f00R
    E expect = (E::gen_a() * E::e_factor()).scaled(CRat(-2), -1) * f00R();
    CHECK(derive(f00R(), Var::abar) == expect);
}

TEST_CASE("limit_omega_zero") {
    CHECK(limit_omega_zero(E::e_inverse()) == E::one());
    CHECK(limit_omega_zero(f00R()) == E::gaussian().scaled(CRat(2)));
    CHECK(omega_part(f00R(), 1).size() == 2);
}

TEST_CASE("invert_unit") {
    CHECK(invert_unit(E::e_factor()) == E::e_inverse());
    CHECK(invert_unit(E::one()) == E::one());
    // 2 abar (1 + a w) -> (1/2) abar^{-1} (1 - a w)
    E f = E::make_term(Term{.q = 1}, CRat(2)) + E::make_term(Term{.p = 1, .q = 1, .r = 1}, CRat(2));
    E inv = invert_unit(f);
    E expect = E::make_term(Term{.q = -1}, CRat(1, 2)) +
               E::make_term(Term{.p = 1, .q = -1, .r = 1}, CRat(-1, 2));
    CHECK(inv == expect);
    CHECK(f * inv == E::one());

    CHECK_THROWS_AS(invert_unit(E::gen_a() * E::twist_w()), NotAUnit);   // w^0 part vanishes
    CHECK_THROWS_AS(invert_unit(E::gaussian()), NotAUnit);               // Gaussian weight
    CHECK_THROWS_AS(invert_unit(E::gen_a() + E::gen_abar()), NotAUnit);  // two monomials
}

TEST_CASE("divide_exact reports residuals") {
    E quot = divide_exact(E::gen_a() + E::gaussian(), E::gen_a());
    CHECK(quot * E::gen_a() == E::gen_a() + E::gaussian());
    // Laurent quotients with Gaussians are fine as long as weights stay nonnegative
    CHECK(divide_exact(E::gaussian(), E::gen_a() * E::gen_a()) ==
          E::make_term(Term{.p = -2, .g = 1}, CRat(1)));
    CHECK_THROWS_AS(divide_exact(E::gen_a(), E::gen_a() + E::gen_abar()), NotProportional);
    CHECK_THROWS_AS(divide_exact(E::gaussian(1), E::gaussian(2)), NotProportional);
}

TEST_CASE("mirror swaps a with abar and w with wbar") {
    E f = E::make_term(Term{.p = 2, .q = -1, .r = 1, .t = 1}, CRat(Rat(1), Rat(3)));
    E m = mirror(f);
    CHECK(m == E::make_term(Term{.p = -1, .q = 2, .s = 1, .t = 1}, CRat(Rat(1), Rat(3))));
    CHECK(mirror(m) == f);
}

TEST_CASE("coordinate images") {
    auto [x1, x2] = coord_images();
    CHECK(x1 * x1 + x2 * x2 == E::make_term(Term{.p = 1, .q = 1}, CRat(2)));
    E cross = (E::make_term(Term{.p = 2}, CRat(1)) - E::make_term(Term{.q = 2}, CRat(1)))
                  .scaled(CRat(1, 2) / CRat::unit_i());
    CHECK(x1 * x2 == cross);
    E f = f00R();
    E lap = deriv_x(deriv_x(f, 1), 1) + deriv_x(deriv_x(f, 2), 2);
    CHECK(lap == derive(derive(f, Var::a), Var::abar).scaled(CRat(2)));
    CHECK_THROWS_AS(deriv_x(f, 3), IndexOutOfRange);
}

TEST_CASE("canonical text form and parsing") {
    E f = f00R();
    CHECK(to_text(E::zero()) == "0");
    CHECK(to_text(E::one()) == "1");
    CHECK(parse_element(to_text(f)) == f);

    E gnarly = E::make_term(Term{.p = -2, .q = 3, .r = 1, .g = 2, .t = -1, .h = 1},
                            CRat(Rat(-3, 2), Rat(1, 7))) +
               E::make_term(Term{.q = -1, .s = 1, .t = 4}, CRat(5));
    CHECK(parse_element(to_text(gnarly)) == gnarly);

    CHECK(parse_element("2 G - 4 theta^-1 a^2 abar w G - 2 theta^-1 a abar^2 wbar G") == f);
    CHECK(parse_element("1/2 th a + 1/2 th a") == E::gen_a().scaled(CRat(1), 1));
    CHECK_THROWS_AS(parse_element("3 bogus"), ParseError);
    CHECK_THROWS_AS(parse_element("+"), ParseError);
}

TEST_CASE("structured serialization round-trips") {
    E f = f00R() + E::make_term(Term{.p = -3, .t = 2, .h = 1}, CRat(Rat(22, 7), Rat(-1, 3)));
    nlohmann::json j = element_to_json(f);
    CHECK(element_from_json(j) == f);
    CHECK(j.dump() == element_to_json(element_from_json(j)).dump());
}
