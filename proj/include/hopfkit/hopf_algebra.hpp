#pragma once

// Finite-dimensional Hopf algebras given by sparse structure constants.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/groups.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

enum class FactorKind { group_algebra, dual_group_algebra, generic };

/// Provenance of an algebra: kG or k^G for a known group, or nothing.
struct FactorTag {
  FactorKind kind = FactorKind::generic;
  GroupPtr group;

  static FactorTag group_algebra(GroupPtr g) { return {FactorKind::group_algebra, std::move(g)}; }
  static FactorTag dual_group_algebra(GroupPtr g) { return {FactorKind::dual_group_algebra, std::move(g)}; }

  FactorTag dualized() const;
  /// "kS3", "k^C2" or "generic".
  std::string str() const;
  std::string kind_name() const;
};

/// Raw structure constants. Tensors in H⊗H use the index l*dim + r.
struct HopfData {
  Field field;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<SparseVec> mult;      // mult[i*dim + j] = e_i e_j
  SparseVec unit;
  std::vector<SparseVec> comult;    // comult[i] = Δ(e_i)
  SparseVec counit;
  std::vector<SparseVec> antipode;  // antipode[j] = S(e_j)
  std::optional<FactorTag> provenance;
};

class HopfAlgebra {
 public:
  /// Validates shapes and index ranges; sorts and merges entries.
  explicit HopfAlgebra(HopfData data);

  const Field& field() const { return d_.field; }
  int dim() const { return d_.dim; }
  const std::vector<std::string>& basis() const { return d_.basis; }
  const HopfData& data() const { return d_; }
  const std::optional<FactorTag>& provenance() const { return d_.provenance; }

  const SparseVec& mult(int i, int j) const { return d_.mult[static_cast<std::size_t>(i) * d_.dim + j]; }
  const SparseVec& comult(int i) const { return d_.comult[i]; }
  const SparseVec& antipode(int j) const { return d_.antipode[j]; }
  const SparseVec& unit() const { return d_.unit; }
  const SparseVec& counit() const { return d_.counit; }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  SparseVec comultiply(const SparseVec& a) const;
  SparseVec apply_antipode(const SparseVec& a) const;
  Scalar apply_counit(const SparseVec& a) const;
  /// Product in H⊗H.
  SparseVec tensor_multiply(const SparseVec& x, const SparseVec& y) const;
  LinearMap left_multiplication(const SparseVec& a) const;
  LinearMap antipode_map() const;

  /// Basis elements g with Δg = g⊗g and ε(g) = 1.
  std::vector<int> grouplike_basis() const;

 private:
  HopfData d_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

inline HopfPtr make_hopf(HopfData d) { return std::make_shared<const HopfAlgebra>(std::move(d)); }

/// Tensor equality; labels and provenance are ignored.
bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // first offending basis triple, when failed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  /// "axiom: witness" of the first failure, or empty.
  std::string first_failure() const;
};

AxiomReport verify_axioms(const HopfAlgebra& h);

/// Dual basis e_i^*; labels gain or lose a trailing '*'.
HopfPtr dual(const HopfAlgebra& h);

struct HopfMorphism {
  HopfPtr source;
  HopfPtr target;
  LinearMap map;  // columns are images of source basis vectors
};

struct MorphismReport {
  bool ok = true;
  std::string failure;
};

MorphismReport verify_morphism(const HopfMorphism& f);
HopfMorphism compose(const HopfMorphism& outer, const HopfMorphism& inner);
HopfMorphism identity_morphism(const HopfPtr& h);

/// Kernel of the trace form T(a,b) = trace(L_ab); characteristic 0 only.
Subspace trace_radical(const HopfAlgebra& h);
bool is_semisimple(const HopfAlgebra& h);
bool is_cosemisimple(const HopfAlgebra& h);

std::string format_vector(const HopfAlgebra& h, const SparseVec& v);

}  // namespace hopfkit
