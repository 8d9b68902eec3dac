#include "hopfkit/iso_theorems.hpp"

#include <functional>

namespace hopfkit {

namespace {

// Map induced on Q_from by a linear map of parents, plus the first kernel
// vector whose image does not vanish (empty when well defined).
struct Induced {
  LinearMap map;
  std::string bad;
};

Induced induce(const QuotientHopf& from, const QuotientHopf& to, const std::function<SparseVec(const SparseVec&)>& f) {
  const HopfAlgebra& src = *from.parent;
  Induced out{LinearMap{from.quotient->dim(), to.quotient->dim(), {}}, {}};
  const Field& fld = src.field();
  for (int s : from.section) out.map.columns.push_back(to.projection.map.apply(f(unit_vector(s)), fld));
  for (const auto& v : from.kernel_ideal.basis())
    if (!to.projection.map.apply(f(v), fld).empty()) {
      out.bad = format_vector(src, v);
      break;
    }
  return out;
}

void require_hopf_subalgebra(const HopfAlgebra& h, const Subspace& s, const char* what) {
  if (s.parent_dim() != h.dim()) throw InputError(std::string(what) + " does not live in this algebra");
  if (!is_hopf_subalgebra(h, s)) throw DomainError(std::string(what) + " is not a Hopf subalgebra");
}

}  // namespace

IsoCertificate certify(std::string theorem, const HopfPtr& lhs, const HopfPtr& rhs, LinearMap m) {
  IsoCertificate c;
  c.theorem = std::move(theorem);
  c.lhs = lhs;
  c.rhs = rhs;
  c.iso = HopfMorphism{lhs, rhs, std::move(m)};
  c.dims["lhs"] = lhs->dim();
  c.dims["rhs"] = rhs->dim();
  if (lhs->dim() != rhs->dim()) {
    c.failure = "dimensions differ";
    return c;
  }
  if (rank(c.iso.map, lhs->field()) != lhs->dim()) {
    c.failure = "induced map is not bijective";
    return c;
  }
  MorphismReport r = verify_morphism(c.iso);
  if (!r.ok) {
    c.failure = "induced map is not a Hopf morphism: " + r.failure;
    return c;
  }
  c.verified = true;
  return c;
}

IsoCertificate first_isomorphism(const HopfMorphism& pi) {
  const HopfAlgebra& h = *pi.source;
  const Field& f = h.field();
  if (rank(pi.map, f) != pi.target->dim()) throw DomainError("first isomorphism theorem needs a surjective map");
  MorphismReport mr = verify_morphism(pi);
  if (!mr.ok) throw DomainError("map is not a Hopf morphism: " + mr.failure);
  Subspace k = coinvariants(pi);
  QuotientHopf q = quotient(pi.source, k);
  LinearMap m{q.quotient->dim(), pi.target->dim(), {}};
  for (int s : q.section) m.columns.push_back(pi.map.columns[s]);
  IsoCertificate c = certify("first", q.quotient, pi.target, std::move(m));
  for (const auto& v : q.kernel_ideal.basis())
    if (!pi.map.apply(v, f).empty()) {
      c.verified = false;
      c.failure = "π does not vanish on HK⁺ at " + format_vector(h, v) + "; the input data are inconsistent";
      break;
    }
  c.dims["K"] = k.dim();
  return c;
}

FactorThrough factor_through(const Subspace& k, const HopfMorphism& pi) {
  const HopfAlgebra& h = *pi.source;
  const Field& f = h.field();
  FactorThrough out;
  Subspace co = coinvariants(pi);
  for (const auto& v : k.basis())
    if (!co.contains(v)) {
      out.witness = format_vector(h, v);
      return out;
    }
  QuotientHopf q = quotient(pi.source, k);
  LinearMap m{q.quotient->dim(), pi.target->dim(), {}};
  for (int s : q.section) m.columns.push_back(pi.map.columns[s]);
  HopfMorphism bar{q.quotient, pi.target, std::move(m)};
  out.exists = true;
  bool factors = compose(bar.map, q.projection.map, f).columns == pi.map.columns;
  out.verified = factors && verify_morphism(bar).ok;
  out.map = std::move(bar);
  return out;
}

IsoCertificate second_isomorphism(const HopfPtr& hp, const Subspace& a, const Subspace& b) {
  const HopfAlgebra& h = *hp;
  require_hopf_subalgebra(h, a, "A");
  require_hopf_subalgebra(h, b, "B");
  if (!normalizes(h, a, b)) throw DomainError("second isomorphism theorem needs A to normalize B");
  Subspace ab = product_subalgebras(h, a, b);
  Subspace acb = intersect(a, b);
  HopfPtr ma = materialize(hp, a);
  HopfPtr mab = materialize(hp, ab);
  QuotientHopf q1 = quotient(ma, relative(a, acb));
  QuotientHopf q2 = quotient(mab, relative(ab, b));
  Induced ind = induce(q1, q2, [&](const SparseVec& v) { return ab.sparse_coordinates(a.combine(v)); });
  IsoCertificate c = certify("second", q1.quotient, q2.quotient, std::move(ind.map));
  if (!ind.bad.empty()) {
    c.verified = false;
    c.failure = "map A → AB/AB⁺ does not vanish on A(A∩B)⁺ at " + ind.bad + "; the input data are inconsistent";
  }
  c.dims["A"] = a.dim();
  c.dims["B"] = b.dim();
  c.dims["AB"] = ab.dim();
  c.dims["A∩B"] = acb.dim();
  return c;
}

bool dim_formula_check(const HopfAlgebra& h, const Subspace& a, const Subspace& b) {
  if (!normalizes(h, a, b)) throw DomainError("dimension formula needs A to normalize B");
  Subspace ab = product_subalgebras(h, a, b);
  return static_cast<long long>(ab.dim()) * intersect(a, b).dim() == static_cast<long long>(a.dim()) * b.dim();
}

std::pair<IsoCertificate, IsoCertificate> third_isomorphism(const HopfPtr& hp, const Subspace& a, const Subspace& b) {
  const HopfAlgebra& h = *hp;
  const Field& f = h.field();
  require_hopf_subalgebra(h, a, "A");
  if (!is_normal(h, a)) throw DomainError("third isomorphism theorem needs A normal in H");
  if (!a.contains(b)) throw DomainError("third isomorphism theorem needs B ⊆ A");
  QuotientHopf qb = quotient(hp, b);
  QuotientHopf qa = quotient(hp, a);
  Subspace pa = image(qb.projection, a);
  QuotientHopf qba = quotient(qb.quotient, pa);

  // π̄_A : H/HB⁺ → H/HA⁺ through the section of π_B, checked against π_A.
  LinearMap bar{qb.quotient->dim(), qa.quotient->dim(), {}};
  for (int s : qb.section) bar.columns.push_back(qa.projection.map.columns[s]);
  bool factors = compose(bar, qb.projection.map, f).columns == qa.projection.map.columns;

  Induced i1 = induce(qba, QuotientHopf{qa.quotient, Subspace(f, qa.quotient->dim()), qa.quotient,
                                        identity_morphism(qa.quotient), {}},
                      [&](const SparseVec& v) { return bar.apply(v, f); });
  IsoCertificate c1 = certify("third (i)", qba.quotient, qa.quotient, std::move(i1.map));
  if (!factors) {
    c1.verified = false;
    c1.failure = "π_A does not factor through π_B; the input data are inconsistent";
  } else if (!i1.bad.empty()) {
    c1.verified = false;
    c1.failure = "π̄_A does not vanish on the kernel at " + i1.bad;
  }
  c1.dims["H/HB+"] = qb.quotient->dim();
  c1.dims["pi_B(A)"] = pa.dim();

  HopfPtr ma = materialize(hp, a);
  QuotientHopf qab = quotient(ma, relative(a, b));
  HopfPtr mpa = materialize(qb.quotient, pa);
  LinearMap m{qab.quotient->dim(), pa.dim(), {}};
  for (int s : qab.section) m.columns.push_back(pa.sparse_coordinates(qb.projection.map.apply(a.basis()[s], f)));
  IsoCertificate c2 = certify("third (ii)", qab.quotient, mpa, std::move(m));
  for (const auto& v : qab.kernel_ideal.basis())
    if (!qb.projection.map.apply(a.combine(v), f).empty()) {
      c2.verified = false;
      c2.failure = "π_B does not vanish on AB⁺ at " + format_vector(*ma, v);
      break;
    }
  c2.dims["A"] = a.dim();
  c2.dims["B"] = b.dim();
  return {std::move(c1), std::move(c2)};
}

std::string to_string(MaximalityVerdict v) {
  switch (v) {
    case MaximalityVerdict::verified: return "corollary-verified";
    case MaximalityVerdict::not_applicable: return "not-applicable (quotient not simple)";
    case MaximalityVerdict::violation: return "violation";
  }
  return "";
}

MaximalityVerdict maximality_from_simple_quotient(const LatticePtr& p, const Subspace& b) {
  if (!p->contains_member(b)) throw DomainError("B is not a member of the normal lattice");
  if (!p->for_quotient(b)->is_simple()) return MaximalityVerdict::not_applicable;
  const int n = p->algebra()->dim();
  for (const auto& m : p->normal_subalgebras())
    if (m.contains(b) && !(m == b) && m.dim() != n) return MaximalityVerdict::violation;
  return MaximalityVerdict::verified;
}

bool normal_in(const HopfAlgebra& h, const Subspace& k, const Subspace& l) {
  return l.contains(k) && normalizes(h, l, k);
}

ButterflyReport butterfly(const HopfPtr& hp, const Subspace& a, const Subspace& a1, const Subspace& b,
                          const Subspace& b1) {
  const HopfAlgebra& h = *hp;
  require_hopf_subalgebra(h, a, "A");
  require_hopf_subalgebra(h, b, "B");
  require_hopf_subalgebra(h, a1, "A'");
  require_hopf_subalgebra(h, b1, "B'");
  if (!normal_in(h, a1, a)) throw DomainError("butterfly lemma needs A' normal in A");
  if (!normal_in(h, b1, b)) throw DomainError("butterfly lemma needs B' normal in B");
  ButterflyReport r;
  Subspace acb = intersect(a, b), acb1 = intersect(a, b1), a1cb = intersect(a1, b);
  r.upper_a = product_subalgebras(h, acb, a1);   // A'(A∩B)
  r.lower_a = product_subalgebras(h, acb1, a1);  // A'(A∩B')
  r.upper_b = product_subalgebras(h, acb, b1);   // B'(A∩B)
  r.lower_b = product_subalgebras(h, a1cb, b1);  // B'(A'∩B)
  r.middle = product_subalgebras(h, a1cb, acb1);  // (A'∩B)(A∩B')
  r.part_i = normal_in(h, r.lower_a, r.upper_a);
  r.part_ii = normal_in(h, r.lower_b, r.upper_b);
  r.part_iii = intersect(r.lower_a, acb) == r.middle && intersect(r.lower_b, acb) == r.middle;
  if (!r.part_i || !r.part_ii || !r.part_iii) {
    r.part_iv.theorem = "butterfly";
    r.part_iv.failure = "parts (i)-(iii) fail; the input data are inconsistent";
    return r;
  }
  // Both sides are the image of (A∩B)/(A∩B)D⁺ by the second isomorphism theorem.
  IsoCertificate left = second_isomorphism(hp, acb, r.lower_a);
  IsoCertificate right = second_isomorphism(hp, acb, r.lower_b);
  const Field& f = h.field();
  r.part_iv.theorem = "butterfly";
  if (!left.verified || !right.verified || !same_structure(*left.lhs, *right.lhs)) {
    r.part_iv.failure = "second isomorphism certificates do not verify";
    return r;
  }
  auto inv = inverse(left.iso.map, f);
  if (!inv) {
    r.part_iv.failure = "left certificate is not invertible";
    return r;
  }
  r.part_iv = certify("butterfly", left.rhs, right.rhs, compose(right.iso.map, *inv, f));
  r.part_iv.dims["A∩B"] = acb.dim();
  r.part_iv.dims["D"] = r.middle.dim();
  return r;
}

}  // namespace hopfkit
