#pragma once

// Subobjects of a Hopf algebra H: adjoint actions, closures, normality,
// products, Hopf ideals HK⁺, quotients, coinvariants and exact sequences.
// Subspaces are always expressed in the coordinates of the algebra passed in.

#include <string>
#include <vector>

#include "hopfkit/hopf_algebra.hpp"

namespace hopfkit {

enum class Side { left, right };
enum class NormalSide { left, right, both };

/// left: h.a = h₁ a S(h₂); right: a.h = S(h₁) a h₂.
SparseVec adjoint_action(const HopfAlgebra& h, Side side, const SparseVec& x, const SparseVec& a);

bool is_subalgebra(const HopfAlgebra& h, const Subspace& k);
bool is_hopf_subalgebra(const HopfAlgebra& h, const Subspace& k);
/// Subalgebra with Δ(K) ⊆ K⊗H.
bool is_right_coideal_subalgebra(const HopfAlgebra& h, const Subspace& k);
/// K stable under the given adjoint action of every basis element of H.
bool is_ad_stable(const HopfAlgebra& h, const Subspace& k, Side side);
/// Checks both sides for `both` and throws InternalError if they disagree
/// on a Hopf subalgebra.
bool is_normal(const HopfAlgebra& h, const Subspace& k, NormalSide side = NormalSide::both);
/// B stable under both adjoint actions of A.
bool normalizes(const HopfAlgebra& h, const Subspace& a, const Subspace& b);

/// Smallest Hopf subalgebra containing the seed.
Subspace hopf_closure(const HopfAlgebra& h, const std::vector<SparseVec>& seed);
/// Smallest normal Hopf subalgebra containing the seed.
Subspace normal_closure(const HopfAlgebra& h, const std::vector<SparseVec>& seed);

/// AB; requires normalizes(A, B).
Subspace product_subalgebras(const HopfAlgebra& h, const Subspace& a, const Subspace& b);

/// Basis of K⁺ = K ∩ ker ε.
std::vector<SparseVec> augmentation(const HopfAlgebra& h, const Subspace& k);
/// Left ideal H·X.
Subspace left_ideal(const HopfAlgebra& h, const std::vector<SparseVec>& gens);
/// H K⁺ for a right normal right coideal subalgebra K, verified to be a
/// Hopf ideal.
Subspace hopf_ideal(const HopfAlgebra& h, const Subspace& k);
bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& ideal);

struct QuotientHopf {
  HopfPtr parent;
  Subspace kernel_ideal;
  HopfPtr quotient;
  HopfMorphism projection;
  /// Parent basis indices whose images form the quotient basis.
  std::vector<int> section;
};

/// H / HK⁺ with basis the images of the non-pivot coordinates of HK⁺.
QuotientHopf quotient(const HopfPtr& h, const Subspace& k);
QuotientHopf quotient_by_ideal(const HopfPtr& h, const Subspace& ideal);

/// left: {h : (π⊗id)Δh = 1⊗h}; right: {h : (id⊗π)Δh = h⊗1}.
Subspace coinvariants(const HopfMorphism& pi, Side side = Side::left);

/// A Hopf subalgebra as a standalone algebra on its RREF basis.
HopfPtr materialize(const HopfPtr& h, const Subspace& l);
HopfMorphism inclusion_morphism(const HopfPtr& h, const Subspace& l, const HopfPtr& materialized);
/// Inner subspace in the coordinates of outer's basis.
Subspace relative(const Subspace& outer, const Subspace& inner);
/// Inverse of relative.
Subspace embed(const Subspace& outer, const Subspace& inner_relative);
/// Image of a subspace under a morphism.
Subspace image(const HopfMorphism& f, const Subspace& s);

/// Basis of a nested materialized algebra written in ambient coordinates.
class Frame {
 public:
  Frame() = default;
  Frame(const Field& f, int ambient_dim, std::vector<SparseVec> basis);
  static Frame identity(const Field& f, int n);

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return ambient_; }
  const std::vector<SparseVec>& basis() const { return basis_; }
  /// Frame of materialize(local algebra, sub).
  Frame restrict(const Subspace& local_sub) const;
  SparseVec to_ambient(const SparseVec& local) const;
  Subspace to_ambient(const Subspace& local) const;
  /// Throws DomainError when the subspace is not inside the frame.
  SparseVec to_local(const SparseVec& ambient) const;
  Subspace to_local(const Subspace& ambient) const;

 private:
  Field field_;
  int ambient_ = 0;
  std::vector<SparseVec> basis_;
  Subspace span_;
  LinearMap solve_;  // RREF coordinates -> frame coordinates
};

struct ExactSequenceReport {
  bool morphisms = true;
  bool injective = true;
  bool surjective = true;
  bool kernel_condition = true;       // ker π = H i(H')⁺
  bool coinvariant_condition = true;  // i(H') = ^{coπ}H
  bool dimension_law = true;
  std::string failure;
  bool ok() const {
    return morphisms && injective && surjective && kernel_condition && coinvariant_condition && dimension_law;
  }
};

ExactSequenceReport verify_exact_sequence(const HopfMorphism& i, const HopfMorphism& pi);

/// dim K divides dim H.
bool nichols_zoeller_check(const Subspace& k, const HopfAlgebra& h);

}  // namespace hopfkit
