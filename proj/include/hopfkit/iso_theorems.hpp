#pragma once

// Constructive isomorphism theorems. Every certificate carries an explicit
// map between standalone quotient algebras that is checked to be a bijective
// Hopf morphism; a failed check means the input data are inconsistent.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hopfkit/lattice.hpp"

namespace hopfkit {

struct IsoCertificate {
  std::string theorem;
  HopfPtr lhs;
  HopfPtr rhs;
  HopfMorphism iso;
  bool verified = false;
  std::string failure;
  std::map<std::string, int> dims;
};

/// Checks that m is a bijective Hopf morphism lhs -> rhs.
IsoCertificate certify(std::string theorem, const HopfPtr& lhs, const HopfPtr& rhs, LinearMap m);

/// H/HK⁺ ≅ H̄ for a surjection π with K its left coinvariants.
IsoCertificate first_isomorphism(const HopfMorphism& pi);

struct FactorThrough {
  bool exists = false;
  std::optional<HopfMorphism> map;
  bool verified = false;
  /// A vector of K outside the coinvariants of π when no factorization exists.
  std::string witness;
};

/// π = π̄ ∘ π_K exists iff K ⊆ ^{coπ}H.
FactorThrough factor_through(const Subspace& k, const HopfMorphism& pi);

/// A/A(A∩B)⁺ ≅ AB/AB⁺ when A normalizes B, with parts (i) and (ii)
/// re-verified.
IsoCertificate second_isomorphism(const HopfPtr& h, const Subspace& a, const Subspace& b);
/// dim(AB)·dim(A∩B) = dim A·dim B.
bool dim_formula_check(const HopfAlgebra& h, const Subspace& a, const Subspace& b);

/// Part (i): (H/HB⁺)/(π_B(A))⁺ ≅ H/HA⁺; part (ii): A/AB⁺ ≅ π_B(A).
std::pair<IsoCertificate, IsoCertificate> third_isomorphism(const HopfPtr& h, const Subspace& a, const Subspace& b);

enum class MaximalityVerdict { verified, not_applicable, violation };
std::string to_string(MaximalityVerdict v);
/// If H/HB⁺ is simple, every lattice member containing B is B or H.
MaximalityVerdict maximality_from_simple_quotient(const LatticePtr& p, const Subspace& b);

/// K normal in L (both Hopf subalgebras of h, K ⊆ L).
bool normal_in(const HopfAlgebra& h, const Subspace& k, const Subspace& l);

struct ButterflyReport {
  bool part_i = false;    // A'(A∩B') normal in A'(A∩B)
  bool part_ii = false;   // B'(A'∩B) normal in B'(A∩B)
  bool part_iii = false;  // the three-way subspace equality
  IsoCertificate part_iv;
  Subspace upper_a, lower_a, upper_b, lower_b, middle;
  bool ok() const { return part_i && part_ii && part_iii && part_iv.verified; }
};

/// Zassenhaus lemma for A' normal in A and B' normal in B.
ButterflyReport butterfly(const HopfPtr& h, const Subspace& a, const Subspace& a1, const Subspace& b,
                          const Subspace& b1);

}  // namespace hopfkit
