#pragma once

// Providers of the lattice of normal Hopf subalgebras. Every provider knows
// how to hand out the provider of a member (as a standalone algebra) and of
// the quotient by a member, so series computations can recurse.
//
// Contract: for_subalgebra(L)->algebra() has the same structure constants as
// materialize(algebra(), L), and for_quotient(K)->algebra() the same as
// quotient(algebra(), K).quotient.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/constructions.hpp"
#include "hopfkit/subobjects.hpp"

namespace hopfkit {

class LatticeProvider;
using LatticePtr = std::shared_ptr<const LatticeProvider>;

class LatticeProvider : public std::enable_shared_from_this<LatticeProvider> {
 public:
  explicit LatticeProvider(HopfPtr h) : h_(std::move(h)) {}
  virtual ~LatticeProvider() = default;

  const HopfPtr& algebra() const { return h_; }
  /// Includes k and H; sorted by dimension, ties in discovery order.
  const std::vector<Subspace>& normal_subalgebras() const;
  virtual LatticePtr for_subalgebra(const Subspace& l) const = 0;
  virtual LatticePtr for_quotient(const Subspace& k) const = 0;
  virtual FactorTag tag() const { return {}; }
  /// False when the lattice comes from a search that may miss members.
  virtual bool exact() const { return true; }
  virtual std::string name() const = 0;

  bool is_simple() const { return h_->dim() > 1 && normal_subalgebras().size() == 2; }
  /// Proper members not contained in another proper member.
  std::vector<Subspace> maximal_members() const;
  /// Nontrivial members containing no other nontrivial member.
  std::vector<Subspace> minimal_members() const;
  bool contains_member(const Subspace& s) const;

 protected:
  virtual std::vector<Subspace> compute_members() const = 0;
  LatticePtr self() const { return shared_from_this(); }

 private:
  HopfPtr h_;
  mutable std::once_flag once_;
  mutable std::vector<Subspace> members_;
};

std::optional<GroupPtr> recognize_group_algebra(const HopfAlgebra& h);
/// Basis of orthogonal idempotents summing to 1 with Δ(b_i) = Σ_{jk=i} b_j⊗b_k.
std::optional<GroupPtr> recognize_dual_group_algebra(const HopfAlgebra& h);

/// kG with basis index i the i-th group element.
LatticePtr group_lattice(const HopfPtr& h, const GroupPtr& g);
/// k^G with basis index i the indicator of the i-th group element.
LatticePtr dual_group_lattice(const HopfPtr& h, const GroupPtr& g);
/// k^Γ # kF; members k^{Γ/S} and k^Γ # kF' filtered by an exact normality
/// check. Falls back to recognition when Γ or F is trivial.
LatticePtr extension_lattice(const MatchedPair& mp, const HopfPtr& h);
/// Normal closures of k1 + span(e_i), of grouplike basis elements, and of
/// pairwise sums. Not exact.
LatticePtr seeded_lattice(const HopfPtr& h);
/// Lattice of dual(inner.algebra()) via annihilators of Hopf ideals.
LatticePtr dual_lattice(const LatticePtr& inner);
/// Transports inner along an isomorphism phi: h -> inner.algebra().
LatticePtr mapped_lattice(const LatticePtr& inner, const HopfPtr& h, const LinearMap& phi);
/// Trivial, group, dual group, then seeded search.
LatticePtr auto_lattice(const HopfPtr& h);

}  // namespace hopfkit
