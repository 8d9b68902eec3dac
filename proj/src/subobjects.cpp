#include "hopfkit/subobjects.hpp"

#include <algorithm>
#include <map>

namespace hopfkit {

namespace {

// Splits a tensor in H⊗H into its left and right coefficient vectors.
void coefficient_spaces(const SparseVec& t, int n, std::vector<SparseVec>& left, std::vector<SparseVec>& right) {
  std::map<int, std::vector<Entry>> by_right, by_left;
  for (const auto& e : t) {
    by_left[e.index / n].push_back({e.index % n, e.value});
    by_right[e.index % n].push_back({e.index / n, e.value});
  }
  for (auto& [l, v] : by_left) right.push_back(std::move(v));  // already sorted by r
  for (auto& [r, v] : by_right) {
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    left.push_back(std::move(v));
  }
}

std::vector<SparseVec> with_unit(const HopfAlgebra& h, std::vector<SparseVec> seed) {
  seed.push_back(h.unit());
  return seed;
}

Subspace algebra_generated(const HopfAlgebra& h, const std::vector<SparseVec>& gens_in) {
  Echelon e(h.field(), h.dim());
  std::vector<SparseVec> gens, queue;
  for (const auto& g : gens_in)
    if (e.insert(g)) {
      gens.push_back(g);
      queue.push_back(g);
    }
  while (!queue.empty() && e.rank() < h.dim()) {
    SparseVec v = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      SparseVec w = h.multiply(g, v);
      if (e.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::from_rref(h.field(), h.dim(), e.reduced_rows());
}

Subspace span_with(const Subspace& v, const std::vector<SparseVec>& extra) {
  std::vector<SparseVec> rows = v.basis();
  rows.insert(rows.end(), extra.begin(), extra.end());
  return Subspace::span(v.field(), v.parent_dim(), rows);
}

}  // namespace

SparseVec adjoint_action(const HopfAlgebra& h, Side side, const SparseVec& x, const SparseVec& a) {
  const int n = h.dim();
  SparseAccumulator acc(h.field());
  for (const auto& t : h.comultiply(x)) {
    SparseVec l = unit_vector(t.index / n), r = unit_vector(t.index % n);
    SparseVec term = side == Side::left ? h.multiply(h.multiply(l, a), h.antipode(t.index % n))
                                        : h.multiply(h.multiply(h.antipode(t.index / n), a), r);
    acc.add(term, t.value);
  }
  return acc.take();
}

bool is_subalgebra(const HopfAlgebra& h, const Subspace& k) {
  if (!k.contains(h.unit())) return false;
  for (const auto& a : k.basis())
    for (const auto& b : k.basis())
      if (!k.contains(h.multiply(a, b))) return false;
  return true;
}

bool is_hopf_subalgebra(const HopfAlgebra& h, const Subspace& k) {
  if (k.parent_dim() != h.dim()) throw InputError("subspace does not live in this algebra");
  if (!is_subalgebra(h, k)) return false;
  for (const auto& v : k.basis()) {
    std::vector<SparseVec> left, right;
    coefficient_spaces(h.comultiply(v), h.dim(), left, right);
    for (const auto& w : left)
      if (!k.contains(w)) return false;
    for (const auto& w : right)
      if (!k.contains(w)) return false;
    if (!k.contains(h.apply_antipode(v))) return false;
  }
  return true;
}

bool is_right_coideal_subalgebra(const HopfAlgebra& h, const Subspace& k) {
  if (k.parent_dim() != h.dim()) throw InputError("subspace does not live in this algebra");
  if (!is_subalgebra(h, k)) return false;
  for (const auto& v : k.basis()) {
    std::vector<SparseVec> left, right;
    coefficient_spaces(h.comultiply(v), h.dim(), left, right);
    for (const auto& w : left)
      if (!k.contains(w)) return false;
  }
  return true;
}

bool is_ad_stable(const HopfAlgebra& h, const Subspace& k, Side side) {
  for (int i = 0; i < h.dim(); ++i) {
    SparseVec x = unit_vector(i);
    for (const auto& v : k.basis())
      if (!k.contains(adjoint_action(h, side, x, v))) return false;
  }
  return true;
}

bool is_normal(const HopfAlgebra& h, const Subspace& k, NormalSide side) {
  if (side == NormalSide::left) return is_ad_stable(h, k, Side::left);
  if (side == NormalSide::right) return is_ad_stable(h, k, Side::right);
  bool l = is_ad_stable(h, k, Side::left);
  bool r = is_ad_stable(h, k, Side::right);
  if (l != r && is_hopf_subalgebra(h, k))
    throw InternalError("left and right normality disagree on a Hopf subalgebra; the structure constants are corrupt");
  return l && r;
}

bool normalizes(const HopfAlgebra& h, const Subspace& a, const Subspace& b) {
  if (a.parent_dim() != b.parent_dim() || a.parent_dim() != h.dim()) throw InputError("subalgebras of different parents");
  for (const auto& x : a.basis())
    for (const auto& v : b.basis())
      if (!b.contains(adjoint_action(h, Side::left, x, v)) || !b.contains(adjoint_action(h, Side::right, x, v)))
        return false;
  return true;
}

Subspace hopf_closure(const HopfAlgebra& h, const std::vector<SparseVec>& seed) {
  Subspace v = Subspace::span(h.field(), h.dim(), with_unit(h, seed));
  while (true) {
    v = algebra_generated(h, v.basis());
    std::vector<SparseVec> extra;
    for (const auto& b : v.basis()) {
      coefficient_spaces(h.comultiply(b), h.dim(), extra, extra);
      extra.push_back(h.apply_antipode(b));
    }
    Subspace w = span_with(v, extra);
    if (w.dim() == v.dim()) return v;
    v = std::move(w);
  }
}

Subspace normal_closure(const HopfAlgebra& h, const std::vector<SparseVec>& seed) {
  Subspace v = hopf_closure(h, seed);
  while (true) {
    std::vector<SparseVec> extra;
    for (int i = 0; i < h.dim(); ++i) {
      SparseVec x = unit_vector(i);
      for (const auto& b : v.basis()) {
        extra.push_back(adjoint_action(h, Side::left, x, b));
        extra.push_back(adjoint_action(h, Side::right, x, b));
      }
    }
    Subspace w = span_with(v, extra);
    if (w.dim() == v.dim()) return v;
    v = hopf_closure(h, w.basis());
  }
}

Subspace product_subalgebras(const HopfAlgebra& h, const Subspace& a, const Subspace& b) {
  if (!normalizes(h, a, b)) throw DomainError("product AB requires A to normalize B");
  std::vector<SparseVec> rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) rows.push_back(h.multiply(x, y));
  Subspace ab = Subspace::span(h.field(), h.dim(), rows);
  if (!is_hopf_subalgebra(h, ab)) throw InternalError("AB is not a Hopf subalgebra although A normalizes B");
  return ab;
}

std::vector<SparseVec> augmentation(const HopfAlgebra& h, const Subspace& k) {
  std::vector<SparseVec> out;
  for (const auto& v : k.basis()) {
    SparseVec w = axpy(v, h.field().neg(h.apply_counit(v)), h.unit(), h.field());
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

Subspace left_ideal(const HopfAlgebra& h, const std::vector<SparseVec>& gens) {
  Echelon e(h.field(), h.dim());
  for (int i = 0; i < h.dim() && e.rank() < h.dim(); ++i) {
    SparseVec x = unit_vector(i);
    for (const auto& g : gens) e.insert(h.multiply(x, g));
  }
  return Subspace::from_rref(h.field(), h.dim(), e.reduced_rows());
}

bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& ideal) {
  const Field& f = h.field();
  const int n = h.dim();
  for (const auto& v : ideal.basis()) {
    if (!h.apply_counit(v).is_zero()) return false;
    if (!ideal.contains(h.apply_antipode(v))) return false;
    for (int i = 0; i < n; ++i) {
      SparseVec x = unit_vector(i);
      if (!ideal.contains(h.multiply(x, v)) || !ideal.contains(h.multiply(v, x))) return false;
    }
  }
  // Coideal: (π⊗π)Δ(v) = 0 where π is the projection along the ideal.
  std::vector<int> nonpiv = ideal.non_pivots();
  std::vector<int> pos(n, -1);
  for (int k = 0; k < static_cast<int>(nonpiv.size()); ++k) pos[nonpiv[k]] = k;
  const int m = static_cast<int>(nonpiv.size());
  std::vector<SparseVec> proj(n);
  for (int j = 0; j < n; ++j) {
    SparseVec r = ideal.reduce(unit_vector(j));
    for (auto& e : r) e.index = pos[e.index];
    proj[j] = std::move(r);
  }
  for (const auto& v : ideal.basis()) {
    SparseAccumulator acc(f);
    for (const auto& t : h.comultiply(v))
      for (const auto& a : proj[t.index / n])
        for (const auto& b : proj[t.index % n]) acc.add(a.index * m + b.index, f.mul(t.value, f.mul(a.value, b.value)));
    if (!acc.take().empty()) return false;
  }
  return true;
}

Subspace hopf_ideal(const HopfAlgebra& h, const Subspace& k) {
  if (!is_right_coideal_subalgebra(h, k)) throw DomainError("HK⁺ requires a right coideal subalgebra");
  if (!is_ad_stable(h, k, Side::right)) throw DomainError("HK⁺ requires K to be right normal");
  Subspace ideal = left_ideal(h, augmentation(h, k));
  if (!is_hopf_ideal(h, ideal)) throw InternalError("HK⁺ is not a Hopf ideal for a right normal K; invalid input data");
  return ideal;
}

QuotientHopf quotient_by_ideal(const HopfPtr& hp, const Subspace& ideal) {
  const HopfAlgebra& h = *hp;
  const Field& f = h.field();
  const int n = h.dim();
  if (ideal.parent_dim() != n) throw InputError("ideal does not live in this algebra");
  if (!is_hopf_ideal(h, ideal)) throw DomainError("quotient by a subspace that is not a Hopf ideal");
  std::vector<int> section = ideal.non_pivots();
  const int m = static_cast<int>(section.size());
  std::vector<int> pos(n, -1);
  for (int k = 0; k < m; ++k) pos[section[k]] = k;
  auto project = [&](const SparseVec& v) {
    SparseVec r = ideal.reduce(v);
    for (auto& e : r) e.index = pos[e.index];
    return r;
  };
  std::vector<SparseVec> proj(n);
  for (int j = 0; j < n; ++j) proj[j] = project(unit_vector(j));
  HopfData d;
  d.field = f;
  d.dim = m;
  for (int c : section) d.basis.push_back("[" + h.basis()[c] + "]");
  d.mult.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) d.mult[a * m + b] = project(h.mult(section[a], section[b]));
  d.unit = project(h.unit());
  d.comult.resize(m);
  for (int a = 0; a < m; ++a) {
    SparseAccumulator acc(f);
    for (const auto& t : h.comult(section[a]))
      for (const auto& x : proj[t.index / n])
        for (const auto& y : proj[t.index % n]) acc.add(x.index * m + y.index, f.mul(t.value, f.mul(x.value, y.value)));
    d.comult[a] = acc.take();
    Scalar e = h.apply_counit(unit_vector(section[a]));
    if (!e.is_zero()) d.counit.push_back({a, e});
  }
  d.antipode.resize(m);
  for (int a = 0; a < m; ++a) d.antipode[a] = project(h.antipode(section[a]));
  HopfPtr q = make_hopf(std::move(d));
  return {hp, ideal, q, {hp, q, LinearMap{n, m, std::move(proj)}}, std::move(section)};
}

QuotientHopf quotient(const HopfPtr& h, const Subspace& k) { return quotient_by_ideal(h, hopf_ideal(*h, k)); }

Subspace coinvariants(const HopfMorphism& pi, Side side) {
  const HopfAlgebra& h = *pi.source;
  const Field& f = h.field();
  const int n = h.dim(), m = pi.target->dim();
  SparseVec one = pi.map.apply(h.unit(), f);
  LinearMap t{n, n * m, {}};
  for (int i = 0; i < n; ++i) {
    SparseAccumulator acc(f);
    for (const auto& u : h.comult(i)) {
      int l = u.index / n, r = u.index % n;
      if (side == Side::left) {
        for (const auto& x : pi.map.columns[l]) acc.add(x.index * n + r, f.mul(u.value, x.value));
      } else {
        for (const auto& x : pi.map.columns[r]) acc.add(l * m + x.index, f.mul(u.value, x.value));
      }
    }
    Scalar minus = f.neg(Scalar(1));
    for (const auto& x : one) {
      if (side == Side::left)
        acc.add(x.index * n + i, f.mul(minus, x.value));
      else
        acc.add(i * m + x.index, f.mul(minus, x.value));
    }
    t.columns.push_back(acc.take());
  }
  return kernel(t, f);
}

HopfPtr materialize(const HopfPtr& hp, const Subspace& l) {
  const HopfAlgebra& h = *hp;
  const Field& f = h.field();
  const int n = h.dim(), d = l.dim();
  if (l.parent_dim() != n) throw InputError("subspace does not live in this algebra");
  const auto& rows = l.basis();
  const auto& piv = l.pivots();
  std::vector<int> pos(n, -1);
  for (int a = 0; a < d; ++a) pos[piv[a]] = a;
  auto coords = [&](const SparseVec& v) {
    if (!l.contains(v)) throw DomainError("subspace is not a Hopf subalgebra");
    return l.sparse_coordinates(v);
  };
  HopfData data;
  data.field = f;
  data.dim = d;
  for (const auto& r : rows) {
    if (r.size() == 1 && r[0].value.is_one()) {
      data.basis.push_back(h.basis()[r[0].index]);
    } else {
      std::string s = format_vector(h, r);
      data.basis.push_back(s.size() <= 64 ? s : "v" + std::to_string(data.basis.size()));
    }
  }
  data.mult.resize(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) data.mult[a * d + b] = coords(h.multiply(rows[a], rows[b]));
  data.unit = coords(h.unit());
  data.comult.resize(d);
  data.antipode.resize(d);
  for (int a = 0; a < d; ++a) {
    SparseVec t = h.comultiply(rows[a]);
    // Δ(r_a) lies in L⊗L, so its coordinates are read at pivot pairs.
    SparseVec out;
    for (const auto& e : t) {
      int x = pos[e.index / n], y = pos[e.index % n];
      if (x >= 0 && y >= 0) out.push_back({x * d + y, e.value});
    }
    out = normalize(std::move(out), f);
    // Check: reconstruct and compare.
    SparseAccumulator acc(f);
    for (const auto& e : out) {
      const SparseVec& ra = rows[e.index / d];
      const SparseVec& rb = rows[e.index % d];
      for (const auto& x : ra)
        for (const auto& y : rb) acc.add(x.index * n + y.index, f.mul(e.value, f.mul(x.value, y.value)));
    }
    if (acc.take() != t) throw DomainError("subspace is not a subcoalgebra");
    data.comult[a] = std::move(out);
    Scalar eps = h.apply_counit(rows[a]);
    if (!eps.is_zero()) data.counit.push_back({a, eps});
    data.antipode[a] = coords(h.apply_antipode(rows[a]));
  }
  return make_hopf(std::move(data));
}

HopfMorphism inclusion_morphism(const HopfPtr& h, const Subspace& l, const HopfPtr& materialized) {
  return {materialized, h, LinearMap{l.dim(), h->dim(), l.basis()}};
}

Subspace relative(const Subspace& outer, const Subspace& inner) {
  if (outer.parent_dim() != inner.parent_dim()) throw InputError("subspaces of different parents");
  std::vector<SparseVec> rows;
  for (const auto& r : inner.basis()) {
    if (!outer.contains(r)) throw DomainError("subspace is not contained in the ambient subalgebra");
    rows.push_back(outer.sparse_coordinates(r));
  }
  return Subspace::span(outer.field(), outer.dim(), rows);
}

Subspace embed(const Subspace& outer, const Subspace& inner_relative) {
  if (inner_relative.parent_dim() != outer.dim()) throw InputError("relative subspace has the wrong ambient dimension");
  std::vector<SparseVec> rows;
  for (const auto& r : inner_relative.basis()) rows.push_back(outer.combine(r));
  return Subspace::span(outer.field(), outer.parent_dim(), rows);
}

Subspace image(const HopfMorphism& f, const Subspace& s) {
  return image(s, f.map.columns, f.target->dim());
}

ExactSequenceReport verify_exact_sequence(const HopfMorphism& i, const HopfMorphism& pi) {
  ExactSequenceReport rep;
  if (i.target->dim() != pi.source->dim() || !same_structure(*i.target, *pi.source))
    throw InputError("exact sequence maps are not composable");
  const HopfAlgebra& h = *pi.source;
  const Field& f = h.field();
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.failure.empty()) rep.failure = what;
  };
  MorphismReport mi = verify_morphism(i), mp = verify_morphism(pi);
  if (!mi.ok) fail(rep.morphisms, "i is not a Hopf morphism: " + mi.failure);
  if (!mp.ok) fail(rep.morphisms, "π is not a Hopf morphism: " + mp.failure);
  if (rank(i.map, f) != i.source->dim()) fail(rep.injective, "(a) i is not injective");
  if (rank(pi.map, f) != pi.target->dim()) fail(rep.surjective, "(a) π is not surjective");
  Subspace img = image(i, Subspace::whole(f, i.source->dim()));
  Subspace ideal = left_ideal(h, augmentation(h, img));
  if (!(kernel(pi.map, f) == ideal)) fail(rep.kernel_condition, "(b) ker π ≠ H i(H')⁺");
  if (!(coinvariants(pi, Side::left) == img)) fail(rep.coinvariant_condition, "(c) i(H') ≠ ^{coπ}H");
  if (h.dim() != i.source->dim() * pi.target->dim()) fail(rep.dimension_law, "dim H ≠ dim H' · dim H''");
  return rep;
}

Frame::Frame(const Field& f, int ambient_dim, std::vector<SparseVec> basis)
    : field_(f), ambient_(ambient_dim), basis_(std::move(basis)) {
  span_ = Subspace::span(f, ambient_dim, basis_);
  if (span_.dim() != dim()) throw InternalError("frame basis is linearly dependent");
  LinearMap m{dim(), dim(), {}};
  for (const auto& b : basis_) m.columns.push_back(span_.sparse_coordinates(b));
  auto inv = inverse(m, f);
  if (!inv) throw InternalError("frame basis is linearly dependent");
  solve_ = std::move(*inv);
}

Frame Frame::identity(const Field& f, int n) {
  std::vector<SparseVec> rows;
  for (int i = 0; i < n; ++i) rows.push_back(unit_vector(i));
  return Frame(f, n, std::move(rows));
}

Frame Frame::restrict(const Subspace& local_sub) const {
  std::vector<SparseVec> rows;
  for (const auto& r : local_sub.basis()) rows.push_back(to_ambient(r));
  return Frame(field_, ambient_, std::move(rows));
}

SparseVec Frame::to_ambient(const SparseVec& local) const {
  SparseAccumulator acc(field_);
  for (const auto& e : local) acc.add(basis_[e.index], e.value);
  return acc.take();
}

Subspace Frame::to_ambient(const Subspace& local) const {
  std::vector<SparseVec> rows;
  for (const auto& r : local.basis()) rows.push_back(to_ambient(r));
  return Subspace::span(field_, ambient_, rows);
}

SparseVec Frame::to_local(const SparseVec& ambient) const {
  if (!span_.contains(ambient)) throw DomainError("vector lies outside the subalgebra");
  return solve_.apply(span_.sparse_coordinates(ambient), field_);
}

Subspace Frame::to_local(const Subspace& ambient) const {
  std::vector<SparseVec> rows;
  for (const auto& r : ambient.basis()) rows.push_back(to_local(r));
  return Subspace::span(field_, dim(), rows);
}

bool nichols_zoeller_check(const Subspace& k, const HopfAlgebra& h) { return k.dim() > 0 && h.dim() % k.dim() == 0; }

}  // namespace hopfkit
