#include "hopfkit/lattice.hpp"

#include <algorithm>

namespace hopfkit {

namespace {

void sort_members(std::vector<Subspace>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
}

void add_unique(std::vector<Subspace>& v, Subspace s) {
  for (const auto& x : v)
    if (x == s) return;
  v.push_back(std::move(s));
}

Subspace trivial_subalgebra(const HopfAlgebra& h) { return Subspace::span(h.field(), h.dim(), {h.unit()}); }

// Map on the quotient basis induced by a map of parents.
LinearMap induced_on_quotients(const QuotientHopf& from, const QuotientHopf& to, const LinearMap& parent_map,
                               const Field& f) {
  LinearMap m{from.quotient->dim(), to.quotient->dim(), {}};
  for (int s : from.section)
    m.columns.push_back(to.projection.map.apply(parent_map.apply(unit_vector(s), f), f));
  return m;
}

class TrivialLattice final : public LatticeProvider {
 public:
  using LatticeProvider::LatticeProvider;
  LatticePtr for_subalgebra(const Subspace&) const override { return self(); }
  LatticePtr for_quotient(const Subspace&) const override { return self(); }
  std::string name() const override { return "trivial"; }

 protected:
  std::vector<Subspace> compute_members() const override { return {Subspace::whole(algebra()->field(), 1)}; }
};

class GroupLattice final : public LatticeProvider {
 public:
  GroupLattice(HopfPtr h, GroupPtr g) : LatticeProvider(std::move(h)), g_(std::move(g)) {}
  LatticePtr for_subalgebra(const Subspace& l) const override {
    if (l.dim() == algebra()->dim()) return self();
    return auto_lattice(materialize(algebra(), l));
  }
  LatticePtr for_quotient(const Subspace& k) const override {
    if (k.dim() == 1) return self();
    return auto_lattice(quotient(algebra(), k).quotient);
  }
  FactorTag tag() const override { return FactorTag::group_algebra(g_); }
  std::string name() const override { return "group"; }

 protected:
  std::vector<Subspace> compute_members() const override {
    std::vector<Subspace> out;
    for (Mask n : normal_subgroups(*g_)) out.push_back(group_subalgebra(*algebra(), n));
    return out;
  }

 private:
  GroupPtr g_;
};

class DualGroupLattice final : public LatticeProvider {
 public:
  DualGroupLattice(HopfPtr h, GroupPtr g) : LatticeProvider(std::move(h)), g_(std::move(g)) {}
  LatticePtr for_subalgebra(const Subspace& l) const override {
    if (l.dim() == algebra()->dim()) return self();
    return auto_lattice(materialize(algebra(), l));
  }
  LatticePtr for_quotient(const Subspace& k) const override {
    if (k.dim() == 1) return self();
    return auto_lattice(quotient(algebra(), k).quotient);
  }
  FactorTag tag() const override { return FactorTag::dual_group_algebra(g_); }
  std::string name() const override { return "dual-group"; }

 protected:
  std::vector<Subspace> compute_members() const override {
    // k^{G/S} grows as S shrinks; normal_subgroups is sorted by order.
    std::vector<Subspace> out;
    auto ns = normal_subgroups(*g_);
    for (auto it = ns.rbegin(); it != ns.rend(); ++it)
      out.push_back(dual_group_quotient_subalgebra(*g_, *algebra(), *it));
    return out;
  }

 private:
  GroupPtr g_;
};

class ExtensionLattice final : public LatticeProvider {
 public:
  ExtensionLattice(MatchedPair mp, HopfPtr h) : LatticeProvider(std::move(h)), mp_(std::move(mp)) {}

  LatticePtr for_subalgebra(const Subspace& l) const override {
    if (l.dim() == algebra()->dim()) return self();
    HopfPtr m = materialize(algebra(), l);
    for (Mask f : f_candidates()) {
      if (!(extension_f_subalgebra(mp_, *algebra(), f) == l)) continue;
      MatchedPair sub = restrict_f(mp_, f);
      if (same_structure(*m, *abelian_extension_algebra(sub, algebra()->field()))) return extension_lattice(sub, m);
      break;
    }
    return auto_lattice(m);
  }

  LatticePtr for_quotient(const Subspace& k) const override {
    if (k.dim() == 1) return self();
    HopfPtr q = quotient(algebra(), k).quotient;
    for (Mask s : normal_subgroups(*mp_.Gamma)) {
      if (!(extension_gamma_subalgebra(mp_, *algebra(), s) == k)) continue;
      if (!is_ract_stable(mp_, s)) break;
      MatchedPair sub = restrict_gamma(mp_, s);
      if (same_structure(*q, *abelian_extension_algebra(sub, algebra()->field()))) return extension_lattice(sub, q);
      break;
    }
    return auto_lattice(q);
  }

  std::string name() const override { return "abelian-extension"; }

 protected:
  std::vector<Subspace> compute_members() const override {
    const HopfAlgebra& h = *algebra();
    std::vector<Subspace> cands;
    for (Mask s : normal_subgroups(*mp_.Gamma)) add_unique(cands, extension_gamma_subalgebra(mp_, h, s));
    for (Mask f : f_candidates()) add_unique(cands, extension_f_subalgebra(mp_, h, f));
    for (Mask s : normal_subgroups(*mp_.Gamma))
      for (Mask n : subgroups(*mp_.F))
        if (mask_size(s) > 1 && mask_size(n) > 1) add_unique(cands, extension_subspace(mp_, h, s, n));
    std::vector<Subspace> out;
    for (auto& c : cands)
      if (c.dim() == 1 || c.dim() == h.dim() || (is_hopf_subalgebra(h, c) && is_normal(h, c))) out.push_back(std::move(c));
    return out;
  }

 private:
  std::vector<Mask> f_candidates() const {
    std::vector<Mask> out;
    for (Mask f : normal_subgroups(*mp_.F))
      if (is_gamma_stable(f, mp_.lact)) out.push_back(f);
    return out;
  }

  MatchedPair mp_;
};

class SeededLattice final : public LatticeProvider {
 public:
  using LatticeProvider::LatticeProvider;
  LatticePtr for_subalgebra(const Subspace& l) const override {
    if (l.dim() == algebra()->dim()) return self();
    return auto_lattice(materialize(algebra(), l));
  }
  LatticePtr for_quotient(const Subspace& k) const override {
    if (k.dim() == 1) return self();
    return auto_lattice(quotient(algebra(), k).quotient);
  }
  bool exact() const override { return false; }
  std::string name() const override { return "search-based"; }

 protected:
  std::vector<Subspace> compute_members() const override {
    const HopfAlgebra& h = *algebra();
    std::vector<Subspace> found;
    add_unique(found, trivial_subalgebra(h));
    add_unique(found, Subspace::whole(h.field(), h.dim()));
    std::vector<Subspace> seeds;
    for (int i = 0; i < h.dim(); ++i) add_unique(seeds, normal_closure(h, {unit_vector(i)}));
    for (const auto& s : seeds) add_unique(found, s);
    const std::size_t base = found.size();
    for (std::size_t a = 0; a < base; ++a)
      for (std::size_t b = a + 1; b < base; ++b) {
        std::vector<SparseVec> gens = found[a].basis();
        gens.insert(gens.end(), found[b].basis().begin(), found[b].basis().end());
        add_unique(found, normal_closure(h, gens));
      }
    return found;
  }
};

class DualLattice final : public LatticeProvider {
 public:
  explicit DualLattice(LatticePtr inner) : LatticeProvider(dual(*inner->algebra())), inner_(std::move(inner)) {}

  LatticePtr for_subalgebra(const Subspace& l) const override {
    if (l.dim() == algebra()->dim()) return self();
    const HopfPtr& h = inner_->algebra();
    Subspace j = annihilator(l);
    Subspace k = coinvariants(quotient_by_ideal(h, j).projection);
    QuotientHopf q = quotient(h, k);
    if (!(q.kernel_ideal == j)) throw InternalError("Hopf ideal of the coinvariants does not match the annihilator");
    LatticePtr child = dual_lattice(inner_->for_quotient(k));
    // A functional vanishing on the ideal is read off at the quotient section.
    LinearMap psi{l.dim(), q.quotient->dim(), {}};
    for (const auto& row : l.basis()) {
      SparseVec col;
      for (int a = 0; a < static_cast<int>(q.section.size()); ++a) {
        Scalar c = coefficient(row, q.section[a]);
        if (!c.is_zero()) col.push_back({a, c});
      }
      psi.columns.push_back(std::move(col));
    }
    return mapped_lattice(child, materialize(algebra(), l), psi);
  }

  LatticePtr for_quotient(const Subspace& m) const override {
    if (m.dim() == 1) return self();
    QuotientHopf q = quotient(algebra(), m);
    Subspace k = annihilator(q.kernel_ideal);
    LatticePtr child = dual_lattice(inner_->for_subalgebra(k));
    // The class of a functional goes to its restriction to K.
    LinearMap phi{q.quotient->dim(), k.dim(), {}};
    for (int s : q.section) {
      SparseVec col;
      for (int c = 0; c < k.dim(); ++c) {
        Scalar v = coefficient(k.basis()[c], s);
        if (!v.is_zero()) col.push_back({c, v});
      }
      phi.columns.push_back(std::move(col));
    }
    return mapped_lattice(child, q.quotient, phi);
  }

  FactorTag tag() const override { return inner_->tag().dualized(); }
  bool exact() const override { return inner_->exact(); }
  std::string name() const override { return "dual(" + inner_->name() + ")"; }

 protected:
  std::vector<Subspace> compute_members() const override {
    const HopfAlgebra& h = *inner_->algebra();
    std::vector<Subspace> out;
    for (const auto& k : inner_->normal_subalgebras()) out.push_back(annihilator(hopf_ideal(h, k)));
    return out;
  }

 private:
  LatticePtr inner_;
};

class MappedLattice final : public LatticeProvider {
 public:
  MappedLattice(LatticePtr inner, HopfPtr h, LinearMap phi, LinearMap inv)
      : LatticeProvider(std::move(h)), inner_(std::move(inner)), phi_(std::move(phi)), inv_(std::move(inv)) {}

  LatticePtr for_subalgebra(const Subspace& l) const override {
    if (l.dim() == algebra()->dim()) return self();
    const Field& f = algebra()->field();
    Subspace li = image(l, phi_.columns, phi_.target_dim);
    LatticePtr child = inner_->for_subalgebra(li);
    LinearMap psi{l.dim(), li.dim(), {}};
    for (const auto& row : l.basis()) psi.columns.push_back(li.sparse_coordinates(phi_.apply(row, f)));
    return mapped_lattice(child, materialize(algebra(), l), psi);
  }

  LatticePtr for_quotient(const Subspace& k) const override {
    if (k.dim() == 1) return self();
    const Field& f = algebra()->field();
    Subspace ki = image(k, phi_.columns, phi_.target_dim);
    LatticePtr child = inner_->for_quotient(ki);
    QuotientHopf qa = quotient(algebra(), k);
    QuotientHopf qi = quotient(inner_->algebra(), ki);
    return mapped_lattice(child, qa.quotient, induced_on_quotients(qa, qi, phi_, f));
  }

  FactorTag tag() const override { return inner_->tag(); }
  bool exact() const override { return inner_->exact(); }
  std::string name() const override { return inner_->name(); }

 protected:
  std::vector<Subspace> compute_members() const override {
    std::vector<Subspace> out;
    for (const auto& s : inner_->normal_subalgebras()) out.push_back(image(s, inv_.columns, inv_.target_dim));
    return out;
  }

 private:
  LatticePtr inner_;
  LinearMap phi_, inv_;
};

bool is_identity(const LinearMap& m) {
  if (m.source_dim != m.target_dim) return false;
  for (int i = 0; i < m.source_dim; ++i)
    if (m.columns[i] != unit_vector(i)) return false;
  return true;
}

}  // namespace

const std::vector<Subspace>& LatticeProvider::normal_subalgebras() const {
  std::call_once(once_, [this] {
    members_ = compute_members();
    sort_members(members_);
  });
  return members_;
}

std::vector<Subspace> LatticeProvider::maximal_members() const {
  const auto& m = normal_subalgebras();
  const int n = h_->dim();
  std::vector<Subspace> out;
  for (const auto& a : m) {
    if (a.dim() == n) continue;
    bool maximal = true;
    for (const auto& b : m)
      if (b.dim() > a.dim() && b.dim() < n && b.contains(a)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<Subspace> LatticeProvider::minimal_members() const {
  const auto& m = normal_subalgebras();
  std::vector<Subspace> out;
  for (const auto& a : m) {
    if (a.dim() == 1) continue;
    bool minimal = true;
    for (const auto& b : m)
      if (b.dim() > 1 && b.dim() < a.dim() && a.contains(b)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

bool LatticeProvider::contains_member(const Subspace& s) const {
  for (const auto& m : normal_subalgebras())
    if (m == s) return true;
  return false;
}

std::optional<GroupPtr> recognize_group_algebra(const HopfAlgebra& h) {
  const int n = h.dim();
  if (n > kMaxGroupOrder) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    const SparseVec& c = h.comult(i);
    if (c.size() != 1 || c[0].index != i * n + i || !c[0].value.is_one()) return std::nullopt;
    if (!coefficient(h.counit(), i).is_one()) return std::nullopt;
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SparseVec& p = h.mult(i, j);
      if (p.size() != 1 || !p[0].value.is_one()) return std::nullopt;
      table[i][j] = p[0].index;
    }
  try {
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(table), h.basis()));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<GroupPtr> recognize_dual_group_algebra(const HopfAlgebra& h) {
  const int n = h.dim();
  if (n > kMaxGroupOrder) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SparseVec& p = h.mult(i, j);
      if (i != j ? !p.empty() : (p.size() != 1 || p[0].index != i || !p[0].value.is_one())) return std::nullopt;
    }
  if (static_cast<int>(h.unit().size()) != n) return std::nullopt;
  for (const auto& e : h.unit())
    if (!e.value.is_one()) return std::nullopt;
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (const auto& e : h.comult(i)) {
      if (!e.value.is_one() || table[e.index / n][e.index % n] >= 0) return std::nullopt;
      table[e.index / n][e.index % n] = i;
    }
  for (const auto& row : table)
    for (int x : row)
      if (x < 0) return std::nullopt;
  try {
    auto g = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(table), h.basis()));
    if (h.counit() != SparseVec{{g->identity(), Scalar(1)}}) return std::nullopt;
    return g;
  } catch (const Error&) {
    return std::nullopt;
  }
}

LatticePtr group_lattice(const HopfPtr& h, const GroupPtr& g) { return std::make_shared<GroupLattice>(h, g); }

LatticePtr dual_group_lattice(const HopfPtr& h, const GroupPtr& g) { return std::make_shared<DualGroupLattice>(h, g); }

LatticePtr extension_lattice(const MatchedPair& mp, const HopfPtr& h) {
  if (mp.F->order() == 1 || mp.Gamma->order() == 1) return auto_lattice(h);
  return std::make_shared<ExtensionLattice>(mp, h);
}

LatticePtr seeded_lattice(const HopfPtr& h) { return std::make_shared<SeededLattice>(h); }

LatticePtr dual_lattice(const LatticePtr& inner) { return std::make_shared<DualLattice>(inner); }

LatticePtr mapped_lattice(const LatticePtr& inner, const HopfPtr& h, const LinearMap& phi) {
  if (is_identity(phi) && same_structure(*h, *inner->algebra())) return inner;
  auto inv = inverse(phi, h->field());
  if (!inv) throw InternalError("transport map is not invertible");
  return std::make_shared<MappedLattice>(inner, h, phi, *inv);
}

LatticePtr auto_lattice(const HopfPtr& h) {
  if (h->dim() == 1) return std::make_shared<TrivialLattice>(h);
  if (auto g = recognize_group_algebra(*h)) return group_lattice(h, *g);
  if (auto g = recognize_dual_group_algebra(*h)) return dual_group_lattice(h, *g);
  return seeded_lattice(h);
}

}  // namespace hopfkit
