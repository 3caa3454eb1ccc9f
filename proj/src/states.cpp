#include "twistedmoyal/states.hpp"

namespace tmoyal {

namespace {

TwistedElement f00_right_body() {
    TwistedElement e;
    e.accumulate(Term{.g = 1}, CRat(2));
    e.accumulate(Term{.p = 2, .q = 1, .r = 1, .g = 1, .t = -1}, CRat(-4));
    e.accumulate(Term{.p = 1, .q = 2, .s = 1, .g = 1, .t = -1}, CRat(-2));
    return e;
}

// sum_{j=1}^{k} (m+4j+1)/(m-j)!
Rat appendix_sum(int m, int k) {
    Rat s(0);
    for (int j = 1; j <= k; ++j) s += Rat(m + 4 * j + 1) / factorial(m - j);
    return s;
}

}  // namespace

LadderState fundamental(StateSide side) {
    TwistedElement body = f00_right_body();
    if (side == StateSide::left) body = mirror(body);
    return LadderState{body, side, 0, NormTag{}};
}

LadderState ladder(StateSide side, int level) {
    if (level < 0 || level > kMaxLevel) throw LevelTooLarge("ladder level out of range");
    LadderState st = fundamental(side);
    for (int i = 0; i < level; ++i) {
        st.body = side == StateSide::right ? star_gen_left(Gen::abar, st.body)
                                           : star_gen_right(st.body, Gen::a);
    }
    st.level = level;
    st.norm = side == StateSide::right ? NormTag{level, 0} : NormTag{0, level};
    return st;
}

TwistedElement closed_form(StateSide side, int level) {
    const int m = level;
    if (m < 0) throw IndexOutOfRange("level must be nonnegative");
    TwistedElement bracket;
    Rat two_m = rat_pow(Rat(2), m);
    bracket.accumulate(Term{.q = m}, CRat(two_m));
    if (m > 0) {
        bracket.accumulate(Term{.p = 1, .q = m, .r = 1}, CRat(two_m * Rat(m, 2)));
        bracket.accumulate(Term{.q = m + 1, .s = 1}, CRat(-two_m * Rat(m, 4)));
        Rat u = u_sequence(m);
        if (u != 0) bracket.accumulate(Term{.q = m - 1, .r = 1, .t = 1}, CRat(-u / 2));
    }
    TwistedElement out = bracket * f00_right_body();
    return side == StateSide::right ? out : mirror(out);
}

Rat u_sequence(int m) {
    if (m <= 1) return Rat(0);
    if (m == 2) return Rat(1);
    Rat u = Rat(m - 1) * rat_pow(Rat(2), m - 2);
    for (int k = 0; k <= m - 3; ++k) u += Rat(k + 1) * rat_pow(Rat(2), k + 1);
    return u;
}

Rat ladder_u_coefficient(StateSide side, int m) {
    TwistedElement body = ladder(side, m).body;
    if (side == StateSide::left) body = mirror(body);  // reduce to the right-side pattern
    TwistedElement base;
    Rat two_m = rat_pow(Rat(2), m);
    base.accumulate(Term{.q = m}, CRat(two_m));
    if (m > 0) {
        base.accumulate(Term{.p = 1, .q = m, .r = 1}, CRat(two_m * Rat(m, 2)));
        base.accumulate(Term{.q = m + 1, .s = 1}, CRat(-two_m * Rat(m, 4)));
    }
    TwistedElement resid = body - base * f00_right_body();
    if (resid.is_zero()) return Rat(0);
    // expect exactly -(U/2) theta w abar^{m-1} * 2G
    Term expect{.q = m - 1, .r = 1, .g = 1, .t = 1};
    if (resid.size() != 1 || resid.terms().begin()->first != expect ||
        !resid.terms().begin()->second.is_real())
        throw NotProportional("ladder state does not have the Eq.(ls) bracket shape", resid);
    return -resid.terms().begin()->second.re;
}

TwistedElement extract_eigenvalue(const TwistedElement& Hf, const TwistedElement& f) {
    return divide_exact(Hf, f);
}

TwistedElement paper_energy(EnergyKind kind, int i1, int i2, std::optional<Rat> u_value) {
    switch (kind) {
        case EnergyKind::right_m: {
            const int m = i1;
            if (m < 0) throw IndexOutOfRange("m must be nonnegative");
            Rat u = u_value.value_or(u_sequence(m));
            TwistedElement e;
            e.accumulate(Term{.t = 1}, CRat(Rat(2 * m + 1, 2)));
            if (m > 0) {
                e.accumulate(Term{.p = 1, .r = 1, .t = 1}, CRat(-Rat(m, 2)));
            }
            e.accumulate(Term{.q = 1, .s = 1, .t = 1}, CRat(-Rat(3 * m + 2, 2)));
            Rat laurent = -Rat(m * m, 8) + u / (2 * rat_pow(Rat(2), m));
            if (laurent != 0) e.accumulate(Term{.q = -1, .r = 1, .t = 2}, CRat(laurent));
            return e;
        }
        case EnergyKind::left_n:
            return mirror(paper_energy(EnergyKind::right_m, i1, 0, u_value));
        case EnergyKind::lambda11_R: {
            const int m = i1;
            if (m <= 0) throw IndexOutOfRange("lambda11 requires m > 0");
            TwistedElement e;
            e.accumulate(Term{.t = 1}, CRat(Rat(1, 2)));
            e.accumulate(Term{.q = 1, .s = 1, .t = 1}, CRat(-(appendix_sum(m, m) + 4) / 4));
            return e;
        }
        case EnergyKind::lambda11_L:
            return mirror(paper_energy(EnergyKind::lambda11_R, i1, 0, u_value));
        case EnergyKind::lambda_mk_R: {
            const int m = i1, k = i2;
            if (!(m >= k && k > 0)) throw IndexOutOfRange("lambda_mk requires m >= k > 0");
            Rat u = u_value.value_or(u_sequence(m));
            TwistedElement e;
            e.accumulate(Term{.t = 1}, CRat(Rat(2 * (m - k) + 1, 2)));
            if (m != k) e.accumulate(Term{.p = 1, .r = 1, .t = 1}, CRat(-Rat(m - k, 2)));
            Rat wbar_c = (Rat(m - k - 1) * factorial(m - k) * appendix_sum(m, k) -
                          Rat((m - k) * (m + 4 * k + 6)) - 4) / 4;
            if (wbar_c != 0) e.accumulate(Term{.q = 1, .s = 1, .t = 1}, CRat(wbar_c));
            Rat laurent = -Rat((m - k) * (m - 2 * k), 8) +
                          Rat((m - k + 1) * (m - k)) * u / (Rat(m) * rat_pow(Rat(2), m + 2));
            if (laurent != 0) e.accumulate(Term{.q = -1, .r = 1, .t = 2}, CRat(laurent));
            return e;
        }
        case EnergyKind::lambda_nl_L:
            return mirror(paper_energy(EnergyKind::lambda_mk_R, i1, i2, u_value));
    }
    throw AlgebraError("unreachable");
}

TwistedElement apply_ladder_lowering(StateSide side, const LadderState& state, int power) {
    TwistedElement out = state.body;
    for (int i = 0; i < power; ++i) {
        out = side == StateSide::right ? star_gen_left(Gen::a, out)
                                       : star_gen_right(out, Gen::abar);
    }
    return out;
}

TwistedElement appendix_a_expression(StateSide side, int m, int k, std::optional<Rat> u_value) {
    if (m < 0 || k < 0 || k > m + 2) throw IndexOutOfRange("appendix A requires 0 <= k <= m+2");
    TwistedElement out;
    if (k == m + 2) {
        return out;  // a^{m+2} * fRm = 0
    }
    if (k == m + 1) {
        TwistedElement factor;
        Rat c = -factorial(m) * appendix_sum(m, m) / 8;
        if (c != 0) factor.accumulate(Term{.s = 1, .t = m + 1}, CRat(c));
        out = factor * f00_right_body();
    } else {
        Rat u = u_value.value_or(u_sequence(m));
        TwistedElement bracket;
        Rat lead = factorial(m) / factorial(m - k) * rat_pow(Rat(2), m - k);
        bracket.accumulate(Term{.q = m - k}, CRat(lead));
        if (m - 2 * k != 0)
            bracket.accumulate(Term{.p = 1, .q = m - k, .r = 1}, CRat(lead * Rat(m - 2 * k, 2)));
        Rat wbar_c = lead * factorial(m - k) * appendix_sum(m, k) / 4;
        if (wbar_c != 0) bracket.accumulate(Term{.q = m - k + 1, .s = 1}, CRat(-wbar_c));
        if (k <= m - 1 && u != 0) {
            Rat uc = factorial(m - 1) / factorial(m - k - 1) * u / rat_pow(Rat(2), k + 1);
            bracket.accumulate(Term{.q = m - k - 1, .r = 1, .t = 1}, CRat(-uc));
        }
        out = bracket.scaled(CRat(1), k) * f00_right_body();
    }
    return side == StateSide::right ? out : mirror(out);
}

std::pair<MatrixBasisElement, TwistedElement> matrix_basis_action(BasisOp op,
                                                                  const MatrixBasisElement& b) {
    switch (op) {
        case BasisOp::raise_left:
            return {MatrixBasisElement{b.m + 1, b.n, b.prefactor}, TwistedElement::one()};
        case BasisOp::raise_right:
            return {MatrixBasisElement{b.m, b.n + 1, b.prefactor}, TwistedElement::one()};
        case BasisOp::lower_left:
            if (b.m == 0) return {MatrixBasisElement{0, b.n, TwistedElement::zero()},
                                  TwistedElement::zero()};
            return {MatrixBasisElement{b.m - 1, b.n, b.prefactor},
                    TwistedElement::theta().scaled(CRat(b.m))};
        case BasisOp::lower_right:
            if (b.n == 0) return {MatrixBasisElement{b.m, 0, TwistedElement::zero()},
                                  TwistedElement::zero()};
            return {MatrixBasisElement{b.m, b.n - 1, b.prefactor},
                    TwistedElement::theta().scaled(CRat(b.n))};
        case BasisOp::H_left:
            return {b, paper_energy(EnergyKind::right_m, b.m)};
        case BasisOp::H_right:
            return {b, paper_energy(EnergyKind::left_n, b.n)};
    }
    throw AlgebraError("unreachable");
}

}  // namespace tmoyal
