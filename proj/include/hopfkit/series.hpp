#pragma once

// Composition series, lower and upper subnormal series, lengths, Schreier
// refinement and factor equivalence.

#include <array>
#include <string>
#include <vector>

#include "hopfkit/iso_theorems.hpp"
#include "hopfkit/lattice.hpp"

namespace hopfkit {

/// dim, center, radical (-1 outside characteristic 0), abelianization,
/// rational characters; for H and for H*.
struct IsoFingerprint {
  std::array<int, 5> primal{};
  std::array<int, 5> dual{};
  friend bool operator==(const IsoFingerprint& a, const IsoFingerprint& b) {
    return a.primal == b.primal && a.dual == b.dual;
  }
  IsoFingerprint dualized() const { return {dual, primal}; }
  std::string str() const;
};

IsoFingerprint fingerprint(const HopfAlgebra& h);
int center_dim(const HopfAlgebra& h);
int abelianization_dim(const HopfAlgebra& h);
/// Algebra maps H -> k.
int rational_characters(const HopfAlgebra& h);

struct Factor {
  HopfPtr algebra;
  FactorTag tag;
  IsoFingerprint fingerprint;
  bool simple = true;
  bool exact = true;  // simplicity decided by an exact lattice
};

Factor make_factor(const LatticePtr& p);
Factor dual_factor(const Factor& f);

enum class Verdict { equivalent, distinct, undecided };
std::string to_string(Verdict v);
Verdict factor_equiv(const Factor& a, const Factor& b, bool strict = true);
/// Order-independent comparison; dimension-1 factors are ignored.
Verdict multiset_equiv(const std::vector<Factor>& a, const std::vector<Factor>& b, bool strict = true);

struct CompositionTree {
  int dim = 0;
  std::string provider;
  std::string tag;     // set on leaves
  int chosen_dim = 0;  // dim of the chosen normal subalgebra A, 0 on leaves
  std::vector<CompositionTree> children;  // A, then H/HA⁺
};

struct Composition {
  std::vector<Factor> factors;
  CompositionTree tree;
  bool exact = true;
  int length() const { return static_cast<int>(factors.size()); }
};

/// Recursion H ↦ (A, H/HA⁺). At the top level `first_choice` indexes the
/// proper nontrivial members; below, and by default, the smallest is taken.
Composition composition_series(const LatticePtr& p, int first_choice = -1);
int length(const LatticePtr& p);

struct JordanHolderReport {
  std::vector<int> choice_dims;
  std::vector<Composition> branches;
  Verdict verdict = Verdict::equivalent;
};
JordanHolderReport jordan_holder_verify(const LatticePtr& p);

struct AdditivityReport {
  ExactSequenceReport sequence;
  int whole = 0, sub = 0, quot = 0;
  bool ok() const { return sequence.ok() && whole == sub + quot; }
};
/// Lengths of H, H', H'' for k -> H' -> H -> H'' -> k.
AdditivityReport additivity_check(const HopfMorphism& i, const HopfMorphism& pi, const LatticePtr& sub,
                                  const LatticePtr& whole, const LatticePtr& quot);

/// Factors of H* against duals of factors of H, using the dual lattice.
Verdict dual_factors_check(const LatticePtr& p);

struct SemisimpleReport {
  bool semisimple = false, factors_semisimple = false;
  bool cosemisimple = false, factors_cosemisimple = false;
  bool ok() const { return semisimple == factors_semisimple && cosemisimple == factors_cosemisimple; }
};
SemisimpleReport semisimple_factors_check(const LatticePtr& p);

enum class Direction { lower, upper };
std::string to_string(Direction d);

/// Outermost first. Lower: H = H_0 ⊇ H_1 ⊇ ... ⊇ H_n = k, Hopf subalgebras.
/// Upper: H = L_n ⊇ ... ⊇ L_0 = k, where L_i is the coinvariant right
/// coideal subalgebra of the i-th quotient H -> H_(i).
struct SubnormalSeries {
  Direction direction = Direction::lower;
  std::vector<Subspace> chain;
};

struct SeriesReport {
  bool valid = true;
  int failed_step = -1;
  std::string failure;
  std::vector<Factor> factors;  // one per step, including dimension-1 steps
  bool dimension_law = false;
  bool exact = true;
};

SeriesReport verify_subnormal(const LatticePtr& p, const SubnormalSeries& s);
/// Non-unit factors only.
std::vector<Factor> nontrivial(const std::vector<Factor>& f);

struct LowerCheck {
  bool ok = false;
  std::string failure;
};
/// Strict descent and no lattice member strictly between consecutive terms.
LowerCheck is_lower_composition_series(const LatticePtr& p, const SubnormalSeries& s);

/// Greedy: repeatedly pass to a largest maximal proper member.
SubnormalSeries lower_composition_series(const LatticePtr& p);
/// Repeatedly quotient by a smallest minimal nontrivial member.
SubnormalSeries upper_composition_series(const LatticePtr& p);
int lower_length(const LatticePtr& p);
int upper_length(const LatticePtr& p);

struct LowerJordanHolderReport {
  std::vector<std::vector<Factor>> series_factors;
  int series_count = 0;
  bool truncated = false;
  Verdict verdict = Verdict::equivalent;
};
/// Every lower composition series reachable through the lattice.
LowerJordanHolderReport jh_lower_verify(const LatticePtr& p, int limit = 512);

enum class Applicability { holds, fails, not_applicable };
std::string to_string(Applicability a);
Applicability simple_factors_imply_composition(const LatticePtr& p, const SubnormalSeries& s);

struct SchreierMatch {
  int i = 0, j = 0;
  int dim = 1;
  bool verified = false;
};

struct SchreierResult {
  SubnormalSeries r1, r2;
  SeriesReport report1, report2;
  std::vector<SchreierMatch> matches;  // factor (i, j) of R1 with (j, i) of R2
  Verdict verdict = Verdict::undecided;
  bool verified() const;
};

SchreierResult schreier_refine(const LatticePtr& p, const SubnormalSeries& s1, const SubnormalSeries& s2);

/// The lower composition series k ⊆ k^{Γ/Γ_1} ⊆ ... ⊆ k^Γ ⊆ k^Γ#kF_{m-1} ⊆ ... ⊆ H
/// from a principal series of Γ and a Γ-composition series of F.
SubnormalSeries abelian_ext_lower_series(const MatchedPair& mp, const HopfAlgebra& h);

}  // namespace hopfkit
