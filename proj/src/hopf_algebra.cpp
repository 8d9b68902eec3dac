#include "hopfkit/hopf_algebra.hpp"

#include <algorithm>

namespace hopfkit {

namespace {

// Dense scratch vector that remembers touched coordinates.
class DenseAccumulator {
 public:
  DenseAccumulator(const Field& f, std::size_t size) : field_(f), values_(size), used_(size, 0) {}

  void add(int index, const Scalar& v) {
    if (v.is_zero()) return;
    if (!used_[index]) {
      used_[index] = 1;
      touched_.push_back(index);
      values_[index] = v;
    } else {
      values_[index] = field_.add(values_[index], v);
    }
  }

  bool all_zero() const {
    for (int i : touched_)
      if (!values_[i].is_zero()) return false;
    return true;
  }

  void clear() {
    for (int i : touched_) {
      used_[i] = 0;
      values_[i] = Scalar();
    }
    touched_.clear();
  }

  SparseVec take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    for (int i : touched_)
      if (!values_[i].is_zero()) out.push_back({i, values_[i]});
    clear();
    return out;
  }

 private:
  Field field_;
  std::vector<Scalar> values_;
  std::vector<char> used_;
  std::vector<int> touched_;
};

SparseVec clean(SparseVec v, const Field& f, int limit, const char* what) {
  for (const auto& e : v)
    if (e.index < 0 || e.index >= limit)
      throw InputError(std::string(what) + ": index " + std::to_string(e.index) + " out of range");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].index <= v[i - 1].index) return normalize(std::move(v), f);
  for (const auto& e : v)
    if (e.value.is_zero()) return normalize(std::move(v), f);
  return v;
}

}  // namespace

FactorTag FactorTag::dualized() const {
  switch (kind) {
    case FactorKind::group_algebra:
      return dual_group_algebra(group);
    case FactorKind::dual_group_algebra:
      return group_algebra(group);
    case FactorKind::generic:
      break;
  }
  return {};
}

std::string FactorTag::str() const {
  switch (kind) {
    case FactorKind::group_algebra:
      return "k" + group->display_name();
    case FactorKind::dual_group_algebra:
      return "k^" + group->display_name();
    case FactorKind::generic:
      break;
  }
  return "generic";
}

std::string FactorTag::kind_name() const {
  switch (kind) {
    case FactorKind::group_algebra:
      return "group_algebra";
    case FactorKind::dual_group_algebra:
      return "dual_group_algebra";
    case FactorKind::generic:
      break;
  }
  return "generic";
}

HopfAlgebra::HopfAlgebra(HopfData data) : d_(std::move(data)) {
  const int n = d_.dim;
  if (n < 1) throw InputError("dimension must be positive");
  if (n > 4096) throw UnsupportedError("dimension too large");
  if (d_.basis.empty())
    for (int i = 0; i < n; ++i) d_.basis.push_back("e" + std::to_string(i));
  if (static_cast<int>(d_.basis.size()) != n) throw InputError("basis label count does not match dim");
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  d_.mult.resize(nn);
  d_.comult.resize(n);
  d_.antipode.resize(n);
  if (d_.mult.size() != nn || d_.comult.size() != static_cast<std::size_t>(n)) throw InputError("tensor shape mismatch");
  for (auto& v : d_.mult) v = clean(std::move(v), d_.field, n, "mult");
  for (auto& v : d_.comult) v = clean(std::move(v), d_.field, static_cast<int>(nn), "comult");
  for (auto& v : d_.antipode) v = clean(std::move(v), d_.field, n, "antipode");
  d_.unit = clean(std::move(d_.unit), d_.field, n, "unit");
  d_.counit = clean(std::move(d_.counit), d_.field, n, "counit");
}

SparseVec HopfAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  if (a.size() == 1 && b.size() == 1) return scale(mult(a[0].index, b[0].index), d_.field.mul(a[0].value, b[0].value), d_.field);
  SparseAccumulator acc(d_.field);
  for (const auto& x : a)
    for (const auto& y : b) acc.add(mult(x.index, y.index), d_.field.mul(x.value, y.value));
  return acc.take();
}

SparseVec HopfAlgebra::comultiply(const SparseVec& a) const {
  if (a.size() == 1) return scale(comult(a[0].index), a[0].value, d_.field);
  SparseAccumulator acc(d_.field);
  for (const auto& x : a) acc.add(comult(x.index), x.value);
  return acc.take();
}

SparseVec HopfAlgebra::apply_antipode(const SparseVec& a) const {
  SparseAccumulator acc(d_.field);
  for (const auto& x : a) acc.add(antipode(x.index), x.value);
  return acc.take();
}

Scalar HopfAlgebra::apply_counit(const SparseVec& a) const {
  Scalar s;
  std::size_t j = 0;
  for (const auto& x : a) {
    while (j < d_.counit.size() && d_.counit[j].index < x.index) ++j;
    if (j < d_.counit.size() && d_.counit[j].index == x.index) s = d_.field.add(s, d_.field.mul(x.value, d_.counit[j].value));
  }
  return s;
}

SparseVec HopfAlgebra::tensor_multiply(const SparseVec& x, const SparseVec& y) const {
  const int n = d_.dim;
  SparseAccumulator acc(d_.field);
  for (const auto& a : x) {
    int al = a.index / n, ar = a.index % n;
    for (const auto& b : y) {
      int bl = b.index / n, br = b.index % n;
      Scalar c = d_.field.mul(a.value, b.value);
      for (const auto& l : mult(al, bl))
        for (const auto& r : mult(ar, br)) acc.add(l.index * n + r.index, d_.field.mul(c, d_.field.mul(l.value, r.value)));
    }
  }
  return acc.take();
}

LinearMap HopfAlgebra::left_multiplication(const SparseVec& a) const {
  LinearMap m{d_.dim, d_.dim, {}};
  for (int j = 0; j < d_.dim; ++j) m.columns.push_back(multiply(a, unit_vector(j)));
  return m;
}

LinearMap HopfAlgebra::antipode_map() const { return LinearMap{d_.dim, d_.dim, d_.antipode}; }

std::vector<int> HopfAlgebra::grouplike_basis() const {
  std::vector<int> out;
  const int n = d_.dim;
  for (int i = 0; i < n; ++i) {
    const SparseVec& c = comult(i);
    if (c.size() == 1 && c[0].index == i * n + i && c[0].value.is_one() && apply_counit(unit_vector(i)).is_one())
      out.push_back(i);
  }
  return out;
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
  const auto& x = a.data();
  const auto& y = b.data();
  return x.field == y.field && x.dim == y.dim && x.mult == y.mult && x.unit == y.unit && x.comult == y.comult &&
         x.counit == y.counit && x.antipode == y.antipode;
}

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::string AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name + ": " + c.witness;
  return {};
}

AxiomReport verify_axioms(const HopfAlgebra& h) {
  const Field& f = h.field();
  const int n = h.dim();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const auto& lab = h.basis();
  AxiomReport report;
  auto fail = [&](AxiomCheck& c, std::string w) {
    if (c.passed) {
      c.passed = false;
      c.witness = std::move(w);
    }
  };
  auto triple = [&](int i, int j, int k) { return "(" + lab[i] + ", " + lab[j] + ", " + lab[k] + ")"; };
  auto pair = [&](int i, int j) { return "(" + lab[i] + ", " + lab[j] + ")"; };

  DenseAccumulator acc(f, n);
  DenseAccumulator acc2(f, nn);
  const Scalar minus_one = f.neg(Scalar(1));

  AxiomCheck assoc{"associativity", true, {}};
  for (int i = 0; i < n && assoc.passed; ++i)
    for (int j = 0; j < n && assoc.passed; ++j) {
      const SparseVec& ij = h.mult(i, j);
      for (int k = 0; k < n; ++k) {
        for (const auto& t : ij)
          for (const auto& u : h.mult(t.index, k)) acc.add(u.index, f.mul(t.value, u.value));
        for (const auto& t : h.mult(j, k))
          for (const auto& u : h.mult(i, t.index)) acc.add(u.index, f.mul(minus_one, f.mul(t.value, u.value)));
        bool ok = acc.all_zero();
        acc.clear();
        if (!ok) {
          fail(assoc, triple(i, j, k));
          break;
        }
      }
    }
  report.checks.push_back(assoc);

  AxiomCheck unit{"unit", true, {}};
  for (int i = 0; i < n && unit.passed; ++i) {
    SparseVec e = unit_vector(i);
    if (h.multiply(h.unit(), e) != e) fail(unit, "1 * " + lab[i]);
    if (h.multiply(e, h.unit()) != e) fail(unit, lab[i] + " * 1");
  }
  report.checks.push_back(unit);

  AxiomCheck coassoc{"coassociativity", true, {}};
  for (int i = 0; i < n && coassoc.passed; ++i) {
    const long long N = n;
    // (Δ⊗id)Δ and (id⊗Δ)Δ compared on keys a*n^2 + b*n + c.
    std::vector<std::pair<long long, Scalar>> lhs, rhs;
    for (const auto& t : h.comult(i)) {
      int l = t.index / n, r = t.index % n;
      for (const auto& u : h.comult(l)) lhs.emplace_back((u.index / n) * N * N + (u.index % n) * N + r, f.mul(t.value, u.value));
      for (const auto& u : h.comult(r)) rhs.emplace_back(l * N * N + u.index, f.mul(t.value, u.value));
    }
    auto canon = [&](std::vector<std::pair<long long, Scalar>>& v) {
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<std::pair<long long, Scalar>> out;
      for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first)
          out.back().second = f.add(out.back().second, e.second);
        else
          out.push_back(std::move(e));
      }
      out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second.is_zero(); }), out.end());
      return out;
    };
    auto a = canon(lhs), b = canon(rhs);
    bool equal = a.size() == b.size();
    for (std::size_t k = 0; equal && k < a.size(); ++k) equal = a[k].first == b[k].first && a[k].second == b[k].second;
    if (!equal) fail(coassoc, lab[i]);
  }
  report.checks.push_back(coassoc);

  AxiomCheck counit{"counit", true, {}};
  for (int i = 0; i < n && counit.passed; ++i) {
    SparseAccumulator l(f), r(f);
    for (const auto& t : h.comult(i)) {
      int a = t.index / n, b = t.index % n;
      l.add(b, f.mul(t.value, h.apply_counit(unit_vector(a))));
      r.add(a, f.mul(t.value, h.apply_counit(unit_vector(b))));
    }
    SparseVec e = unit_vector(i);
    if (l.take() != e || r.take() != e) fail(counit, lab[i]);
  }
  report.checks.push_back(counit);

  AxiomCheck unit_grouplike{"unit is grouplike", true, {}};
  {
    SparseVec one = h.unit();
    SparseVec one_one;
    for (const auto& a : one)
      for (const auto& b : one) one_one.push_back({a.index * n + b.index, f.mul(a.value, b.value)});
    one_one = normalize(std::move(one_one), f);
    if (h.comultiply(one) != one_one) fail(unit_grouplike, "Δ(1) ≠ 1⊗1");
    if (!h.apply_counit(one).is_one()) fail(unit_grouplike, "ε(1) ≠ 1");
  }
  report.checks.push_back(unit_grouplike);

  AxiomCheck counit_mult{"counit is multiplicative", true, {}};
  std::vector<Scalar> eps(n);
  for (int i = 0; i < n; ++i) eps[i] = h.apply_counit(unit_vector(i));
  for (int i = 0; i < n && counit_mult.passed; ++i)
    for (int j = 0; j < n; ++j)
      if (h.apply_counit(h.mult(i, j)) != f.mul(eps[i], eps[j])) {
        fail(counit_mult, pair(i, j));
        break;
      }
  report.checks.push_back(counit_mult);

  AxiomCheck bialg{"comultiplication is multiplicative", true, {}};
  for (int i = 0; i < n && bialg.passed; ++i)
    for (int j = 0; j < n; ++j) {
      for (const auto& t : h.mult(i, j))
        for (const auto& u : h.comult(t.index)) acc2.add(u.index, f.mul(t.value, u.value));
      for (const auto& a : h.comult(i)) {
        int al = a.index / n, ar = a.index % n;
        for (const auto& b : h.comult(j)) {
          Scalar c = f.mul(minus_one, f.mul(a.value, b.value));
          const SparseVec& ml = h.mult(al, b.index / n);
          const SparseVec& mr = h.mult(ar, b.index % n);
          for (const auto& l : ml)
            for (const auto& r : mr) acc2.add(l.index * n + r.index, f.mul(c, f.mul(l.value, r.value)));
        }
      }
      bool ok = acc2.all_zero();
      acc2.clear();
      if (!ok) {
        fail(bialg, pair(i, j));
        break;
      }
    }
  report.checks.push_back(bialg);

  AxiomCheck anti{"antipode", true, {}};
  for (int i = 0; i < n && anti.passed; ++i) {
    SparseVec target = scale(h.unit(), eps[i], f);
    SparseAccumulator l(f), r(f);
    for (const auto& t : h.comult(i)) {
      int a = t.index / n, b = t.index % n;
      l.add(h.multiply(h.antipode(a), unit_vector(b)), t.value);
      r.add(h.multiply(unit_vector(a), h.antipode(b)), t.value);
    }
    if (l.take() != target) fail(anti, "m(S⊗id)Δ(" + lab[i] + ") ≠ ε(" + lab[i] + ")1");
    else if (r.take() != target) fail(anti, "m(id⊗S)Δ(" + lab[i] + ") ≠ ε(" + lab[i] + ")1");
  }
  report.checks.push_back(anti);

  AxiomCheck bij{"antipode invertible", true, {}};
  if (rank(h.antipode_map(), f) != n) fail(bij, "S is singular");
  report.checks.push_back(bij);
  return report;
}

HopfPtr dual(const HopfAlgebra& h) {
  const int n = h.dim();
  const Field& f = h.field();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  HopfData d;
  d.field = f;
  d.dim = n;
  for (const auto& l : h.basis()) {
    if (!l.empty() && l.back() == '*')
      d.basis.push_back(l.substr(0, l.size() - 1));
    else
      d.basis.push_back(l + "*");
  }
  std::vector<std::vector<Entry>> mult(nn);
  for (int k = 0; k < n; ++k)
    for (const auto& t : h.comult(k)) mult[t.index].push_back({k, t.value});
  d.mult.resize(nn);
  for (std::size_t i = 0; i < nn; ++i) d.mult[i] = normalize(std::move(mult[i]), f);
  std::vector<std::vector<Entry>> comult(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& t : h.mult(i, j)) comult[t.index].push_back({i * n + j, t.value});
  d.comult.resize(n);
  for (int k = 0; k < n; ++k) d.comult[k] = normalize(std::move(comult[k]), f);
  d.unit = h.counit();
  d.counit = h.unit();
  std::vector<std::vector<Entry>> anti(n);
  for (int i = 0; i < n; ++i)
    for (const auto& t : h.antipode(i)) anti[t.index].push_back({i, t.value});
  d.antipode.resize(n);
  for (int j = 0; j < n; ++j) d.antipode[j] = normalize(std::move(anti[j]), f);
  if (h.provenance()) d.provenance = h.provenance()->dualized();
  return make_hopf(std::move(d));
}

MorphismReport verify_morphism(const HopfMorphism& m) {
  const HopfAlgebra& s = *m.source;
  const HopfAlgebra& t = *m.target;
  const Field& f = s.field();
  MorphismReport rep;
  if (!(s.field() == t.field())) return {false, "source and target fields differ"};
  if (m.map.source_dim != s.dim() || m.map.target_dim != t.dim() ||
      static_cast<int>(m.map.columns.size()) != s.dim())
    throw InputError("morphism matrix shape does not match source and target dimensions");
  const auto& lab = s.basis();
  const int n = s.dim(), tn = t.dim();
  auto img = [&](int i) -> const SparseVec& { return m.map.columns[i]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.map.apply(s.mult(i, j), f) != t.multiply(img(i), img(j)))
        return {false, "f(ab) ≠ f(a)f(b) at (" + lab[i] + ", " + lab[j] + ")"};
  if (m.map.apply(s.unit(), f) != t.unit()) return {false, "f(1) ≠ 1"};
  for (int i = 0; i < n; ++i) {
    SparseAccumulator acc(f);
    for (const auto& u : s.comult(i)) {
      const SparseVec& a = img(u.index / n);
      const SparseVec& b = img(u.index % n);
      for (const auto& x : a)
        for (const auto& y : b) acc.add(x.index * tn + y.index, f.mul(u.value, f.mul(x.value, y.value)));
    }
    if (acc.take() != t.comultiply(img(i))) return {false, "(f⊗f)Δ ≠ Δf at " + lab[i]};
    if (t.apply_counit(img(i)) != s.apply_counit(unit_vector(i))) return {false, "εf ≠ ε at " + lab[i]};
  }
  return rep;
}

HopfMorphism compose(const HopfMorphism& outer, const HopfMorphism& inner) {
  return {inner.source, outer.target, compose(outer.map, inner.map, inner.source->field())};
}

HopfMorphism identity_morphism(const HopfPtr& h) { return {h, h, identity_map(h->dim())}; }

Subspace trace_radical(const HopfAlgebra& h) {
  if (!h.field().is_rationals())
    throw UnsupportedError("semisimplicity test requires characteristic 0");
  const int n = h.dim();
  const Field& f = h.field();
  std::vector<Scalar> tr(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) tr[k] = f.add(tr[k], coefficient(h.mult(k, i), i));
  LinearMap form{n, n, {}};
  for (int j = 0; j < n; ++j) {
    std::vector<Entry> col;
    for (int i = 0; i < n; ++i) {
      Scalar s;
      for (const auto& t : h.mult(i, j)) s = f.add(s, f.mul(t.value, tr[t.index]));
      if (!s.is_zero()) col.push_back({i, s});
    }
    form.columns.push_back(std::move(col));
  }
  return kernel(form, f);
}

bool is_semisimple(const HopfAlgebra& h) { return trace_radical(h).dim() == 0; }

bool is_cosemisimple(const HopfAlgebra& h) { return is_semisimple(*dual(h)); }

std::string format_vector(const HopfAlgebra& h, const SparseVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& e : v) {
    std::string c = h.field().format(e.value);
    if (!out.empty()) out += " + ";
    if (e.value.is_one())
      out += h.basis()[e.index];
    else
      out += c + "*" + h.basis()[e.index];
  }
  return out;
}

}  // namespace hopfkit
