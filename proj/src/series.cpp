#include "hopfkit/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hopfkit {

namespace {

Subspace unit_span(const HopfAlgebra& h) { return Subspace::span(h.field(), h.dim(), {h.unit()}); }

LinearMap transpose_minus(const LinearMap& m, const Scalar& lambda, const Field& f) {
  LinearMap t{m.target_dim, m.source_dim, std::vector<SparseVec>(m.target_dim)};
  for (int c = 0; c < m.source_dim; ++c)
    for (const auto& e : m.columns[c]) t.columns[e.index].push_back({c, e.value});
  for (int r = 0; r < m.target_dim; ++r) {
    auto& col = t.columns[r];
    col.push_back({r, f.neg(lambda)});
    col = normalize(std::move(col), f);
  }
  return t;
}

std::vector<Scalar> roots_in_field(const Polynomial& p, const Field& f) {
  std::vector<Scalar> out;
  if (f.is_rationals()) {
    for (const auto& r : rational_roots(p)) out.push_back(r);
    return out;
  }
  const std::int64_t q = f.characteristic();
  if (q > 1000000) throw UnsupportedError("root finding over GF(p) is limited to p <= 10^6");
  for (std::int64_t a = 0; a < q; ++a) {
    Scalar x = f.from_int(a), acc = f.from_int(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    if (acc.is_zero()) out.push_back(x);
  }
  return out;
}

// Maximum bipartite matching over allowed pairs.
bool perfect_matching(int n, const std::function<bool(int, int)>& allowed) {
  std::vector<int> match(n, -1);
  for (int u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    std::function<bool(int)> augment = [&](int x) {
      for (int v = 0; v < n; ++v) {
        if (seen[v] || !allowed(x, v)) continue;
        seen[v] = 1;
        if (match[v] < 0 || augment(match[v])) {
          match[v] = x;
          return true;
        }
      }
      return false;
    };
    if (!augment(u)) return false;
  }
  return true;
}

bool is_elementary_split(const FiniteGroup& g, const Field& f) {
  int e = 1;
  for (int a = 0; a < g.order(); ++a) e = std::lcm(e, g.element_order(a));
  if (f.is_rationals()) return e <= 2;
  return (f.characteristic() - 1) % e == 0;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < a; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

void composition_rec(const LatticePtr& p, int choice, Composition& out, CompositionTree& node) {
  const int n = p->algebra()->dim();
  node.dim = n;
  node.provider = p->name();
  out.exact = out.exact && p->exact();
  if (n == 1) return;
  if (p->is_simple()) {
    out.factors.push_back(make_factor(p));
    node.tag = p->tag().str();
    return;
  }
  std::vector<Subspace> proper;
  for (const auto& m : p->normal_subalgebras())
    if (m.dim() > 1 && m.dim() < n) proper.push_back(m);
  if (choice < 0) choice = 0;
  if (choice >= static_cast<int>(proper.size())) throw InputError("first choice index out of range");
  const Subspace& a = proper[choice];
  node.chosen_dim = a.dim();
  node.children.resize(2);
  composition_rec(p->for_subalgebra(a), -1, out, node.children[0]);
  composition_rec(p->for_quotient(a), -1, out, node.children[1]);
}

SeriesReport fail(SeriesReport r, int step, std::string why) {
  r.valid = false;
  r.failed_step = step;
  r.failure = std::move(why);
  return r;
}

SeriesReport verify_lower(const LatticePtr& p, const SubnormalSeries& s) {
  SeriesReport r;
  const HopfAlgebra& h = *p->algebra();
  const auto& ch = s.chain;
  if (ch.size() < 2 || !(ch.front() == Subspace::whole(h.field(), h.dim())) || !(ch.back() == unit_span(h)))
    return fail(r, -1, "chain must start at H and end at k");
  Frame fr = Frame::identity(h.field(), h.dim());
  LatticePtr cur = p;
  for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
    const int step = static_cast<int>(i);
    if (ch[i + 1].parent_dim() != h.dim()) return fail(r, step, "term does not live in H");
    Subspace local;
    try {
      local = fr.to_local(ch[i + 1]);
    } catch (const DomainError&) {
      return fail(r, step, "term " + std::to_string(i + 1) + " is not contained in term " + std::to_string(i));
    }
    const HopfAlgebra& a = *cur->algebra();
    if (!is_hopf_subalgebra(a, local)) return fail(r, step, "term " + std::to_string(i + 1) + " is not a Hopf subalgebra");
    if (!is_normal(a, local))
      return fail(r, step, "term " + std::to_string(i + 1) + " is not normal in term " + std::to_string(i));
    r.exact = r.exact && cur->exact();
    r.factors.push_back(make_factor(cur->for_quotient(local)));
    cur = cur->for_subalgebra(local);
    fr = fr.restrict(local);
  }
  return r;
}

SeriesReport verify_upper(const LatticePtr& p, const SubnormalSeries& s) {
  SeriesReport r;
  const HopfPtr& hp = p->algebra();
  const HopfAlgebra& h = *hp;
  const Field& f = h.field();
  const auto& ch = s.chain;
  if (ch.size() < 2 || !(ch.front() == Subspace::whole(f, h.dim())) || !(ch.back() == unit_span(h)))
    return fail(r, -1, "chain must start at H and end at k");
  LinearMap proj = identity_map(h.dim());
  LatticePtr cur = p;
  const int m = static_cast<int>(ch.size()) - 1;
  for (int t = 0; t < m; ++t) {
    const Subspace& prev = ch[m - t];
    const Subspace& next = ch[m - t - 1];
    if (next.parent_dim() != h.dim()) return fail(r, t, "term does not live in H");
    if (!next.contains(prev)) return fail(r, t, "coinvariant chain is not increasing");
    const HopfAlgebra& a = *cur->algebra();
    Subspace k = image(next, proj.columns, a.dim());
    if (!is_hopf_subalgebra(a, k)) return fail(r, t, "image of the next term is not a Hopf subalgebra of the quotient");
    if (!is_normal(a, k)) return fail(r, t, "image of the next term is not normal in the quotient");
    r.exact = r.exact && cur->exact();
    r.factors.push_back(make_factor(cur->for_subalgebra(k)));
    QuotientHopf q = quotient(cur->algebra(), k);
    proj = compose(q.projection.map, proj, f);
    if (!(coinvariants(HopfMorphism{hp, q.quotient, proj}) == next))
      return fail(r, t, "term is not the coinvariants of the composite quotient");
    cur = cur->for_quotient(k);
  }
  return r;
}

}  // namespace

std::string IsoFingerprint::str() const {
  auto one = [](const std::array<int, 5>& a) {
    std::string s = "(";
    for (int i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
  };
  return one(primal) + "/" + one(dual);
}

int center_dim(const HopfAlgebra& h) {
  const int n = h.dim();
  const Field& f = h.field();
  LinearMap m{n, n * n, {}};
  for (int j = 0; j < n; ++j) {
    SparseAccumulator acc(f);
    for (int i = 0; i < n; ++i) {
      for (const auto& e : h.mult(j, i)) acc.add(i * n + e.index, e.value);
      for (const auto& e : h.mult(i, j)) acc.add(i * n + e.index, f.neg(e.value));
    }
    m.columns.push_back(acc.take());
  }
  return n - rank(m, f);
}

int abelianization_dim(const HopfAlgebra& h) {
  const int n = h.dim();
  const Field& f = h.field();
  Echelon e(f, n);
  std::vector<SparseVec> queue;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SparseVec c = subtract(h.mult(i, j), h.mult(j, i), f);
      if (e.insert(c)) queue.push_back(std::move(c));
    }
  while (!queue.empty() && e.rank() < n) {
    SparseVec v = std::move(queue.back());
    queue.pop_back();
    for (int k = 0; k < n; ++k) {
      SparseVec x = unit_vector(k);
      SparseVec l = h.multiply(x, v), r = h.multiply(v, x);
      if (e.insert(l)) queue.push_back(std::move(l));
      if (e.insert(r)) queue.push_back(std::move(r));
    }
  }
  return n - e.rank();
}

int rational_characters(const HopfAlgebra& h) {
  const int n = h.dim();
  const Field& f = h.field();
  // A nonzero joint eigenvector of all transposed left multiplications is a
  // character, and each character spans its joint eigenspace.
  std::vector<Subspace> spaces{Subspace::whole(f, n)};
  for (int i = 0; i < n && !spaces.empty(); ++i) {
    LinearMap l = h.left_multiplication(unit_vector(i));
    std::vector<Scalar> roots = roots_in_field(minimal_polynomial(l, f), f);
    std::vector<Subspace> next;
    for (const auto& lambda : roots) {
      Subspace ker = kernel(transpose_minus(l, lambda, f), f);
      for (const auto& w : spaces) {
        Subspace x = intersect(w, ker);
        if (x.dim() > 0) next.push_back(std::move(x));
      }
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.dim() != 1) throw InternalError("joint eigenspace of a character is not one-dimensional");
  return static_cast<int>(spaces.size());
}

IsoFingerprint fingerprint(const HopfAlgebra& h) {
  auto five = [](const HopfAlgebra& a) {
    int rad = a.field().is_rationals() ? trace_radical(a).dim() : -1;
    return std::array<int, 5>{a.dim(), center_dim(a), rad, abelianization_dim(a), rational_characters(a)};
  };
  return {five(h), five(*dual(h))};
}

Factor make_factor(const LatticePtr& p) {
  return {p->algebra(), p->tag(), fingerprint(*p->algebra()), p->is_simple(), p->exact()};
}

Factor dual_factor(const Factor& f) {
  return {dual(*f.algebra), f.tag.dualized(), f.fingerprint.dualized(), f.simple, f.exact};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::distinct: return "distinct";
    case Verdict::undecided: return "undecided";
  }
  return "";
}

Verdict factor_equiv(const Factor& a, const Factor& b, bool strict) {
  if (a.algebra->dim() != b.algebra->dim()) return Verdict::distinct;
  const Field& f = a.algebra->field();
  const bool ga = a.tag.group != nullptr && a.tag.kind != FactorKind::generic;
  const bool gb = b.tag.group != nullptr && b.tag.kind != FactorKind::generic;
  if (ga && gb) {
    const FiniteGroup& x = *a.tag.group;
    const FiniteGroup& y = *b.tag.group;
    if (a.tag.kind == b.tag.kind) return group_isomorphic(x, y) ? Verdict::equivalent : Verdict::distinct;
    if (x.order() > 1 && (!is_abelian(x) || !is_abelian(y))) return Verdict::distinct;
    // kA ≅ k^A for abelian A once k holds the exp(A)-th roots of unity.
    if (is_abelian(x) && is_elementary_split(x, f) && group_isomorphic(x, y)) return Verdict::equivalent;
  }
  if (!(a.fingerprint == b.fingerprint)) return Verdict::distinct;
  return strict ? Verdict::undecided : Verdict::equivalent;
}

Verdict multiset_equiv(const std::vector<Factor>& a0, const std::vector<Factor>& b0, bool strict) {
  std::vector<Factor> a = nontrivial(a0), b = nontrivial(b0);
  if (a.size() != b.size()) return Verdict::distinct;
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Verdict>> v(n, std::vector<Verdict>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[i][j] = factor_equiv(a[i], b[j], strict);
  if (perfect_matching(n, [&](int i, int j) { return v[i][j] == Verdict::equivalent; })) return Verdict::equivalent;
  if (perfect_matching(n, [&](int i, int j) { return v[i][j] != Verdict::distinct; })) return Verdict::undecided;
  return Verdict::distinct;
}

std::vector<Factor> nontrivial(const std::vector<Factor>& f) {
  std::vector<Factor> out;
  for (const auto& x : f)
    if (x.algebra->dim() > 1) out.push_back(x);
  return out;
}

Composition composition_series(const LatticePtr& p, int first_choice) {
  Composition c;
  composition_rec(p, first_choice, c, c.tree);
  return c;
}

int length(const LatticePtr& p) { return composition_series(p).length(); }

JordanHolderReport jordan_holder_verify(const LatticePtr& p) {
  JordanHolderReport r;
  const int n = p->algebra()->dim();
  int idx = 0;
  for (const auto& m : p->normal_subalgebras()) {
    if (m.dim() == 1 || m.dim() == n) continue;
    r.choice_dims.push_back(m.dim());
    r.branches.push_back(composition_series(p, idx++));
  }
  if (r.branches.empty()) {
    r.choice_dims.push_back(0);
    r.branches.push_back(composition_series(p));
  }
  for (std::size_t i = 1; i < r.branches.size(); ++i) {
    Verdict v = multiset_equiv(r.branches[0].factors, r.branches[i].factors);
    if (v == Verdict::distinct || (v == Verdict::undecided && r.verdict == Verdict::equivalent)) r.verdict = v;
  }
  return r;
}

AdditivityReport additivity_check(const HopfMorphism& i, const HopfMorphism& pi, const LatticePtr& sub,
                                  const LatticePtr& whole, const LatticePtr& quot) {
  AdditivityReport r;
  r.sequence = verify_exact_sequence(i, pi);
  if (!same_structure(*sub->algebra(), *i.source) || !same_structure(*whole->algebra(), *pi.source) ||
      !same_structure(*quot->algebra(), *pi.target))
    throw InputError("lattice providers do not match the exact sequence");
  r.whole = length(whole);
  r.sub = length(sub);
  r.quot = length(quot);
  return r;
}

Verdict dual_factors_check(const LatticePtr& p) {
  Composition c = composition_series(p);
  Composition d = composition_series(dual_lattice(p));
  std::vector<Factor> duals;
  for (const auto& f : c.factors) duals.push_back(dual_factor(f));
  return multiset_equiv(duals, d.factors);
}

SemisimpleReport semisimple_factors_check(const LatticePtr& p) {
  const HopfAlgebra& h = *p->algebra();
  SemisimpleReport r;
  r.semisimple = is_semisimple(h);
  r.cosemisimple = is_cosemisimple(h);
  r.factors_semisimple = r.factors_cosemisimple = true;
  for (const auto& f : composition_series(p).factors) {
    r.factors_semisimple = r.factors_semisimple && is_semisimple(*f.algebra);
    r.factors_cosemisimple = r.factors_cosemisimple && is_cosemisimple(*f.algebra);
  }
  return r;
}

std::string to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

SeriesReport verify_subnormal(const LatticePtr& p, const SubnormalSeries& s) {
  SeriesReport r = s.direction == Direction::lower ? verify_lower(p, s) : verify_upper(p, s);
  if (r.valid) {
    long long prod = 1;
    for (const auto& f : r.factors) prod *= f.algebra->dim();
    r.dimension_law = prod == p->algebra()->dim();
  }
  return r;
}

LowerCheck is_lower_composition_series(const LatticePtr& p, const SubnormalSeries& s) {
  LowerCheck out;
  if (s.direction != Direction::lower) {
    out.failure = "series is not a lower series";
    return out;
  }
  SeriesReport rep = verify_subnormal(p, s);
  if (!rep.valid) {
    out.failure = rep.failure;
    return out;
  }
  const HopfAlgebra& h = *p->algebra();
  Frame fr = Frame::identity(h.field(), h.dim());
  LatticePtr cur = p;
  for (std::size_t i = 0; i + 1 < s.chain.size(); ++i) {
    Subspace local = fr.to_local(s.chain[i + 1]);
    if (local.dim() == cur->algebra()->dim()) {
      out.failure = "step " + std::to_string(i) + " is not a strict descent";
      return out;
    }
    bool maximal = false;
    for (const auto& m : cur->maximal_members()) maximal = maximal || m == local;
    if (!maximal) {
      out.failure = "term " + std::to_string(i + 1) + " is not a maximal normal Hopf subalgebra of term " +
                    std::to_string(i);
      return out;
    }
    cur = cur->for_subalgebra(local);
    fr = fr.restrict(local);
  }
  out.ok = true;
  return out;
}

SubnormalSeries lower_composition_series(const LatticePtr& p) {
  const HopfAlgebra& h = *p->algebra();
  SubnormalSeries s{Direction::lower, {Subspace::whole(h.field(), h.dim())}};
  Frame fr = Frame::identity(h.field(), h.dim());
  LatticePtr cur = p;
  while (cur->algebra()->dim() > 1) {
    auto max = cur->maximal_members();
    const Subspace* best = &max.front();
    for (const auto& m : max)
      if (m.dim() > best->dim()) best = &m;
    s.chain.push_back(fr.to_ambient(*best));
    fr = fr.restrict(*best);
    cur = cur->for_subalgebra(*best);
  }
  return s;
}

SubnormalSeries upper_composition_series(const LatticePtr& p) {
  const HopfPtr& hp = p->algebra();
  const Field& f = hp->field();
  std::vector<Subspace> inner{unit_span(*hp)};
  LinearMap proj = identity_map(hp->dim());
  LatticePtr cur = p;
  while (cur->algebra()->dim() > 1) {
    Subspace k = cur->minimal_members().front();
    QuotientHopf q = quotient(cur->algebra(), k);
    proj = compose(q.projection.map, proj, f);
    inner.push_back(coinvariants(HopfMorphism{hp, q.quotient, proj}));
    cur = cur->for_quotient(k);
  }
  std::reverse(inner.begin(), inner.end());
  return {Direction::upper, std::move(inner)};
}

int lower_length(const LatticePtr& p) { return static_cast<int>(lower_composition_series(p).chain.size()) - 1; }

int upper_length(const LatticePtr& p) { return static_cast<int>(upper_composition_series(p).chain.size()) - 1; }

LowerJordanHolderReport jh_lower_verify(const LatticePtr& p, int limit) {
  LowerJordanHolderReport r;
  std::vector<Factor> path;
  std::function<void(const LatticePtr&)> dfs = [&](const LatticePtr& cur) {
    if (r.series_count >= limit) {
      r.truncated = true;
      return;
    }
    if (cur->algebra()->dim() == 1) {
      ++r.series_count;
      r.series_factors.push_back(path);
      return;
    }
    for (const auto& m : cur->maximal_members()) {
      path.push_back(make_factor(cur->for_quotient(m)));
      dfs(cur->for_subalgebra(m));
      path.pop_back();
    }
  };
  dfs(p);
  for (std::size_t i = 1; i < r.series_factors.size(); ++i) {
    Verdict v = multiset_equiv(r.series_factors[0], r.series_factors[i]);
    if (v == Verdict::distinct || (v == Verdict::undecided && r.verdict == Verdict::equivalent)) r.verdict = v;
  }
  return r;
}

std::string to_string(Applicability a) {
  switch (a) {
    case Applicability::holds: return "holds";
    case Applicability::fails: return "fails";
    case Applicability::not_applicable: return "not-applicable";
  }
  return "";
}

Applicability simple_factors_imply_composition(const LatticePtr& p, const SubnormalSeries& s) {
  SeriesReport rep = verify_subnormal(p, s);
  if (!rep.valid) throw DomainError("invalid series: " + rep.failure);
  std::vector<Factor> f = nontrivial(rep.factors);
  for (const auto& x : f)
    if (!x.simple) return Applicability::not_applicable;
  return multiset_equiv(f, composition_series(p).factors) == Verdict::equivalent ? Applicability::holds
                                                                                : Applicability::fails;
}

bool SchreierResult::verified() const {
  if (!report1.valid || !report2.valid || verdict != Verdict::equivalent) return false;
  for (const auto& m : matches)
    if (!m.verified) return false;
  return true;
}

SchreierResult schreier_refine(const LatticePtr& p, const SubnormalSeries& s1, const SubnormalSeries& s2) {
  if (s1.direction != Direction::lower || s2.direction != Direction::lower)
    throw DomainError("Schreier refinement is implemented for lower series");
  for (const auto* s : {&s1, &s2}) {
    SeriesReport r = verify_subnormal(p, *s);
    if (!r.valid) throw DomainError("invalid series: " + r.failure);
  }
  const HopfPtr& hp = p->algebra();
  const HopfAlgebra& h = *hp;
  const auto& a = s1.chain;
  const auto& b = s2.chain;
  const int n = static_cast<int>(a.size()) - 1, m = static_cast<int>(b.size()) - 1;
  SchreierResult out;
  out.r1.direction = out.r2.direction = Direction::lower;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) out.r1.chain.push_back(product_subalgebras(h, intersect(b[j], a[i]), a[i + 1]));
  out.r1.chain.push_back(a[n]);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) out.r2.chain.push_back(product_subalgebras(h, intersect(a[i], b[j]), b[j + 1]));
  out.r2.chain.push_back(b[m]);
  out.report1 = verify_subnormal(p, out.r1);
  out.report2 = verify_subnormal(p, out.r2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      ButterflyReport bf = butterfly(hp, a[i], a[i + 1], b[j], b[j + 1]);
      SchreierMatch sm{i, j, bf.part_iv.lhs ? bf.part_iv.lhs->dim() : 0, bf.ok()};
      if (out.report1.valid && out.report2.valid)
        sm.verified = sm.verified && out.report1.factors[i * m + j].algebra->dim() == sm.dim &&
                      out.report2.factors[j * n + i].algebra->dim() == sm.dim;
      out.matches.push_back(sm);
    }
  out.verdict = out.report1.valid && out.report2.valid ? multiset_equiv(out.report1.factors, out.report2.factors)
                                                       : Verdict::undecided;
  return out;
}

SubnormalSeries abelian_ext_lower_series(const MatchedPair& mp, const HopfAlgebra& h) {
  GroupSeries chief = chief_series_group(*mp.Gamma).front();
  GroupSeries gcs = gamma_composition_series(*mp.F, mp.lact).front();
  SubnormalSeries s{Direction::lower, {}};
  for (Mask f : gcs.chain) s.chain.push_back(extension_f_subalgebra(mp, h, f));
  for (int i = static_cast<int>(chief.chain.size()) - 2; i >= 0; --i)
    s.chain.push_back(extension_gamma_subalgebra(mp, h, chief.chain[i]));
  return s;
}

}  // namespace hopfkit
