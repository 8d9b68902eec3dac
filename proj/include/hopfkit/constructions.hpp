#pragma once

// Builders: group algebras, dual group algebras, abelian extensions
// k^Γ #^τ_σ kF from matched pairs, Drinfeld doubles, and Sweedler's algebra.

#include <vector>

#include "hopfkit/hopf_algebra.hpp"

namespace hopfkit {

HopfPtr group_algebra(const GroupPtr& g, const Field& f = Field::rationals());
/// Basis e_g of indicator functions, same order as the group elements.
HopfPtr dual_group_algebra(const GroupPtr& g, const Field& f = Field::rationals());

/// Matched pair (F, Γ) with Γ ◁ F → Γ and Γ ▷ F → F, plus cocycles.
struct MatchedPair {
  GroupPtr F;
  GroupPtr Gamma;
  std::vector<std::vector<int>> lact;  // lact[g][x] = g ▷ x, an element of F
  std::vector<std::vector<int>> ract;  // ract[g][x] = g ◁ x, an element of Γ
  // sigma[g][x][y] = σ_g(x, y) and tau[x][g][h] = τ_x(g, h); empty means 1.
  std::vector<std::vector<std::vector<Scalar>>> sigma;
  std::vector<std::vector<std::vector<Scalar>>> tau;
};

struct AbelianExtension {
  MatchedPair pair;
  HopfPtr algebra;
  HopfMorphism inclusion;   // k^Γ → H, e_g ↦ e_g # 1
  HopfMorphism projection;  // H → kF, ε ⊗ id
};

/// Basis index of e_g # x.
inline int extension_index(const MatchedPair& mp, int g, int x) { return g * mp.F->order() + x; }

/// Throws DomainError naming the failed axiom when the data are incompatible.
AbelianExtension abelian_extension(const MatchedPair& mp, const Field& f = Field::rationals());
/// Structure constants only; no axiom check.
HopfPtr abelian_extension_algebra(const MatchedPair& mp, const Field& f = Field::rationals());
void validate_matched_pair(const MatchedPair& mp);

/// D(G) = k^G # kG: trivial ▷, g ◁ x = x⁻¹ g x, trivial cocycles.
MatchedPair drinfeld_double_pair(const GroupPtr& g);
HopfPtr drinfeld_double(const GroupPtr& g, const Field& f = Field::rationals());
/// Γ = A3 ≅ C3 and F = C2 from the factorization S3 = A3·⟨(1 2)⟩.
MatchedPair bismash_s3_pair();

/// Restriction of a matched pair to Γ-stable F' ≤ F, or to S ≤ Γ stable
/// under ◁ (used for the quotient by k^{Γ/S}).
MatchedPair restrict_f(const MatchedPair& mp, Mask f_sub);
MatchedPair restrict_gamma(const MatchedPair& mp, Mask gamma_sub);
/// Is S stable under ◁ by all of F?
bool is_ract_stable(const MatchedPair& mp, Mask gamma_sub);
/// Actions of Γ on F as automorphism tables (for Γ-stability checks).
std::vector<std::vector<int>> gamma_action_on_f(const MatchedPair& mp);

/// Sweedler's 4-dimensional Hopf algebra over Q, basis 1, g, x, gx.
HopfPtr sweedler_algebra();

/// kN inside kG.
Subspace group_subalgebra(const HopfAlgebra& kg, Mask n);
/// k^{G/S} inside k^G: indicators of the cosets of S.
Subspace dual_group_quotient_subalgebra(const FiniteGroup& g, const HopfAlgebra& kg_dual, Mask s);
/// k^{Γ/S} # 1 inside an abelian extension.
Subspace extension_gamma_subalgebra(const MatchedPair& mp, const HopfAlgebra& h, Mask s);
/// k^Γ # kF' inside an abelian extension.
Subspace extension_f_subalgebra(const MatchedPair& mp, const HopfAlgebra& h, Mask f_sub);
/// k^{Γ/S} # kN: span of Σ_{g ∈ C} e_g # x over cosets C of S and x in N.
/// Not a Hopf subalgebra in general.
Subspace extension_subspace(const MatchedPair& mp, const HopfAlgebra& h, Mask s, Mask n);

}  // namespace hopfkit
