#pragma once

// Exact linear algebra over a Field: sparse vectors, incremental echelon
// forms, and canonical (RREF) subspaces.

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Vec = std::vector<Scalar>;

struct Entry {
  int index;
  Scalar value;
  friend bool operator==(const Entry& a, const Entry& b) { return a.index == b.index && a.value == b.value; }
};

/// Sorted by index, no explicit zeros.
using SparseVec = std::vector<Entry>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int n);
SparseVec unit_vector(int index);
/// y + a*x.
SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x, const Field& f);
SparseVec scale(const SparseVec& x, const Scalar& a, const Field& f);
SparseVec add(const SparseVec& x, const SparseVec& y, const Field& f);
SparseVec subtract(const SparseVec& x, const SparseVec& y, const Field& f);
Scalar coefficient(const SparseVec& v, int index);
/// Merges duplicate indices and drops zeros.
SparseVec normalize(std::vector<Entry> entries, const Field& f);

/// Accumulates a sparse vector from unsorted contributions.
class SparseAccumulator {
 public:
  explicit SparseAccumulator(const Field& f) : field_(f) {}
  void add(int index, const Scalar& value);
  void add(const SparseVec& v, const Scalar& scale);
  SparseVec take();

 private:
  Field field_;
  std::unordered_map<int, Scalar> values_;
};

/// Forward echelon form built one vector at a time. When tracking is enabled
/// every stored row remembers which combination of inserted vectors it is,
/// and every dependent insertion yields a kernel relation.
class Echelon {
 public:
  Echelon(const Field& f, int width, bool track_combinations = false);

  /// Returns true when v was independent of the rows inserted so far.
  bool insert(const SparseVec& v);
  /// Forward-reduces v against the stored rows; zero iff v lies in the span.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  int inserted() const { return inserted_; }
  /// Fully reduced rows sorted by pivot.
  std::vector<SparseVec> reduced_rows() const;
  /// Coefficient vectors (over insertion order) of every dependent insertion.
  const std::vector<SparseVec>& relations() const { return relations_; }

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  Field field_;
  int width_;
  bool track_;
  int inserted_ = 0;
  std::vector<Row> rows_;
  std::unordered_map<int, int> pivot_row_;
  std::vector<SparseVec> relations_;
};

/// A subspace of k^n held as its canonical reduced row echelon basis. Two
/// Subspaces are equal as sets iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, int parent_dim);  // zero subspace

  static Subspace span(const Field& f, int parent_dim, const std::vector<SparseVec>& rows);
  static Subspace span_dense(const Field& f, int parent_dim, const std::vector<Vec>& rows);
  static Subspace whole(const Field& f, int parent_dim);
  /// Takes rows already in RREF (as produced by Echelon::reduced_rows).
  static Subspace from_rref(const Field& f, int parent_dim, std::vector<SparseVec> rows);

  const Field& field() const { return field_; }
  int parent_dim() const { return parent_dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& basis() const { return rows_; }
  std::vector<Vec> dense_basis() const;
  const std::vector<int>& pivots() const { return pivots_; }
  /// Indices that are not pivots, ascending; they index a complement.
  std::vector<int> non_pivots() const;

  /// v minus its projection onto the pivot coordinates; zero iff v is inside.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to basis(); only meaningful when contains(v).
  Vec coordinates(const SparseVec& v) const;
  SparseVec sparse_coordinates(const SparseVec& v) const;
  /// Element with the given coordinates.
  SparseVec combine(const Vec& coords) const;
  SparseVec combine(const SparseVec& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.parent_dim_ == b.parent_dim_ && a.rows_ == b.rows_;
  }

 private:
  Field field_;
  int parent_dim_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
  std::unordered_map<int, int> pivot_index_;
};

/// Canonical basis of the span; rows must have length parent_dim.
Subspace canonicalize(const Field& f, const std::vector<Vec>& rows, int parent_dim);
Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
/// Annihilator {c : sum_j c_j v_j = 0 for all v in U} in the dual coordinates.
Subspace annihilator(const Subspace& u);
/// Image of a subspace under a linear map given by its columns.
Subspace image(const Subspace& u, const std::vector<SparseVec>& columns, int target_dim);

/// A linear map k^source -> k^target stored by columns.
struct LinearMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<SparseVec> columns;

  SparseVec apply(const SparseVec& v, const Field& f) const;
};

LinearMap compose(const LinearMap& outer, const LinearMap& inner, const Field& f);
LinearMap identity_map(int n);
/// Kernel of the map as a subspace of k^source.
Subspace kernel(const LinearMap& m, const Field& f);
int rank(const LinearMap& m, const Field& f);
std::optional<LinearMap> inverse(const LinearMap& m, const Field& f);

/// Polynomials with coefficients low degree first.
using Polynomial = std::vector<Scalar>;

/// Minimal polynomial of a square matrix (monic).
Polynomial minimal_polynomial(const LinearMap& m, const Field& f);
/// Distinct rational roots of a polynomial over Q.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace hopfkit
