#pragma once

// Finite groups of order at most 60 given by Cayley tables. Subgroups are
// bit masks over element indices.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Mask = std::uint64_t;
using Perm = std::vector<int>;  // 0-based images

constexpr int kMaxGroupOrder = 60;

/// Parses "(1 2)(3 4 5)"; points are 1-based. "()" is the identity.
Perm parse_cycles(const std::string& text, int degree = 0);
std::string format_cycles(const Perm& p);

class FiniteGroup {
 public:
  /// Verifies closure, associativity, identity and inverses.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
  /// Closes the generators; elements sorted by image tuple, identity first.
  static FiniteGroup from_permutations(const std::vector<Perm>& gens);
  /// Cn, Sn, An (n <= 5), Dn (dihedral of order n), V4.
  static FiniteGroup named(const std::string& name);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  int element_order(int a) const { return orders_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }
  std::optional<int> find(const std::string& label) const;
  /// Permutation images when the group came from permutations.
  const std::vector<Perm>& permutations() const { return perms_; }

  /// Isomorphism invariant: order, element-order profile, class count,
  /// center and derived subgroup orders.
  const std::string& canonical_id() const { return canonical_id_; }
  /// Human-readable name ("S3", "C2xC2" style) when recognized, else the id.
  const std::string& display_name() const { return display_name_; }

  Mask all() const;

 private:
  static FiniteGroup closure(const std::vector<Perm>& gens);
  void finish();
  void assign_name();

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  std::vector<Perm> perms_;
  int identity_ = 0;
  std::string canonical_id_;
  std::string display_name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline int mask_size(Mask m) { return __builtin_popcountll(m); }
std::vector<int> mask_elements(Mask m);
Mask mask_of(const std::vector<int>& elements);

Mask generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, Mask s);
bool is_normal_subgroup(const FiniteGroup& g, Mask s);
/// Normal in the subgroup `in` (s must lie in `in`).
bool is_normal_in(const FiniteGroup& g, Mask s, Mask in);
/// All subgroups sorted by (order, element index set).
std::vector<Mask> subgroups(const FiniteGroup& g);
std::vector<Mask> normal_subgroups(const FiniteGroup& g);

/// Subgroup as a group of its own; element i is the i-th smallest index of s.
FiniteGroup subgroup_group(const FiniteGroup& g, Mask s);
/// Quotient by a normal subgroup; cosets ordered by smallest element,
/// the coset of element i labelled by its smallest representative.
FiniteGroup quotient_group(const FiniteGroup& g, Mask n);
/// Index of the coset of each element in quotient_group order.
std::vector<int> coset_index(const FiniteGroup& g, Mask n);

struct GroupSeries {
  enum class Kind { composition, chief, maximal_chain, gamma_composition };
  Kind kind;
  /// Outermost first: G = chain[0] > chain[1] > ... > {e}.
  std::vector<Mask> chain;
};

std::vector<GroupSeries> composition_series_group(const FiniteGroup& g);
std::vector<GroupSeries> chief_series_group(const FiniteGroup& g);
/// act[gamma][x] is the image of x under gamma; rows must be permutations.
std::vector<GroupSeries> gamma_composition_series(const FiniteGroup& f, const std::vector<std::vector<int>>& act);
bool is_gamma_stable(Mask s, const std::vector<std::vector<int>>& act);
/// Factor groups of consecutive terms, outermost first.
std::vector<FiniteGroup> series_factors(const FiniteGroup& g, const GroupSeries& s);

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
bool group_isomorphic(const FiniteGroup& a, const FiniteGroup& b);
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);
bool is_characteristically_simple(const FiniteGroup& g);

/// Chains {e} < ... < G where each term is maximal in the next, listed
/// outermost first like GroupSeries.
std::vector<GroupSeries> maximal_subgroup_chains(const FiniteGroup& g);

std::string describe(const FiniteGroup& g, Mask s);

}  // namespace hopfkit
