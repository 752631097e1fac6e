#pragma once

#include <cstddef>
#include <optional>

#include "tdpoly/families.hpp"
#include "tdpoly/polynomial.hpp"

namespace tdpoly {

// Closed forms and recurrences for D_t of the generated families.
//
// Families whose published statement and derivation disagree take a
// Fidelity: `printed` evaluates the statement as typeset, `derived` the
// form the derivation supports. Where the two agree the parameter is absent.

/// Printed barbell formula:
///   sum_{i=2..n} C(2n-2, i-2) x^i + sum_{i=n+1..2n} C(2n, i) x^i,  n >= 2.
Polynomial dt_closed_barbell(std::size_t n);

/// x^{2n} (x+2)^n.
Polynomial dt_closed_h3(std::size_t n);

std::size_t gamma_t_friendship4(std::size_t n);

/// F_{n,4}: x(x+2)[(x+1) F_{n-1} - s^{n-1}] from F_1 = x^4+4x^3+4x^2, where
/// s = x^3+2x (printed) or D_t(P_3) = x^3+2x^2 (derived).
Polynomial dt_recurrence_friendship4(std::size_t n, Fidelity fidelity);

enum class TriChain { t, g };

/// T_n (n >= 1) and G_n (n >= 0), evaluated bottom-up from
/// G_0 = x^2, G_1 = x^4+3x^3+3x^2, T_1 = x^3+3x^2, T_2 = x^5+5x^4+6x^3+4x^2.
Polynomial dt_recurrence_tri_chain(std::size_t n, TriChain which);

enum class ParaMember { q, q1, q2, qprime, qdelta, q_plus_e };

/// Para-chain and its auxiliaries, n >= 0 (n >= 1 for q_plus_e).
Polynomial dt_recurrence_para(std::size_t n, ParaMember which, Fidelity fidelity);

enum class OrthoMember { o, o1, o2, odelta };

/// Ortho-chain and its auxiliaries, n >= 0.
Polynomial dt_recurrence_ortho(std::size_t n, OrthoMember which);

bool has_fidelity_variants(Family family);

/// The family's formula at spec.n (and spec.fidelity where it matters), or
/// empty when there is none (friendship graphs with q != 4).
std::optional<Polynomial> dt_formula(const FamilySpec& spec);

}  // namespace tdpoly
