#pragma once

#include <optional>
#include <utility>

#include "twistedmoyal/star.hpp"

namespace tmoyal {

enum class StateSide { right, left };

// Suppressed normalization factor (m! n! theta^{m+n})^{-1/2}; bodies stay
// rational, the tag is applied only on numeric evaluation.
struct NormTag {
    int m = 0;
    int n = 0;
};

struct LadderState {
    TwistedElement body;  // unnormalized: abar^{*m} * f00R  (resp. f00L * a^{*n})
    StateSide side = StateSide::right;
    int level = 0;
    NormTag norm;
};

inline constexpr int kMaxLevel = 12;

// f00R = 2 G (1 - (2 a^2 abar/theta) w - (a abar^2/theta) wbar), mirror for left.
LadderState fundamental(StateSide side);

// Recursion-built state: one generator star action per level.  Ground truth.
LadderState ladder(StateSide side, int level);

// Printed closed-form bracket (unnormalized):
//   [2^m abar^m (1 + m a w/2 - m abar wbar/4) - U_m theta w abar^{m-1}/2] f00R.
// Conformance target, never the constructor.
TwistedElement closed_form(StateSide side, int level);

// The printed U_m: U_{<=1} = 0, U_2 = 1, U_m = (m-1)2^{m-2} + sum_{k=0}^{m-3}(k+1)2^{k+1}.
Rat u_sequence(int m);

// U value the ladder recursion actually produces, read off as the coefficient
// of -theta w abar^{m-1}/2 in body/f00 after removing the non-U bracket.
// Independent oracle for u_sequence; the two differ from m = 4 on.
Rat ladder_u_coefficient(StateSide side, int m);

// Pointwise eigenvalue: E with E * f == Hf exactly to first order.
TwistedElement extract_eigenvalue(const TwistedElement& Hf, const TwistedElement& f);

enum class EnergyKind { right_m, left_n, lambda11_R, lambda11_L, lambda_mk_R, lambda_nl_L };

// Printed spectra (Prop 2.1/2.2 and the Lambda-state energies).  u_value
// overrides the printed U_m when auditing the energy structure separately
// from the printed U formula.
TwistedElement paper_energy(EnergyKind kind, int i1, int i2 = 0,
                            std::optional<Rat> u_value = std::nullopt);

// a^{*power} * state (right side) or state * abar^{*power} (left side).
TwistedElement apply_ladder_lowering(StateSide side, const LadderState& state, int power);

// Printed Appendix A expression for a^k * fRm (unnormalized), k <= m+2;
// k = m+1 is the Prop 2.3 proportionality line, k = m+2 is zero.
TwistedElement appendix_a_expression(StateSide side, int m, int k,
                                     std::optional<Rat> u_value = std::nullopt);

// Unnormalized basis element  b_{mn} ~ abar^{*m} * f00R * f00L * a^{*n}
// (normalization kept as level shifts), manipulated by rewrite rules only.
struct MatrixBasisElement {
    int m = 0;
    int n = 0;
    TwistedElement prefactor = TwistedElement::one();
};

enum class BasisOp { raise_left, raise_right, lower_left, lower_right, H_left, H_right };

// Applies one rewrite rule; returns the new element and the scalar factor
// produced by the rule (theta m for lowering, the paper energy for H).
std::pair<MatrixBasisElement, TwistedElement> matrix_basis_action(BasisOp op,
                                                                  const MatrixBasisElement& b);

}  // namespace tmoyal
