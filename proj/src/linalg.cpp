#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hopfkit {

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  return out;
}

Vec to_dense(const SparseVec& v, int n) {
  Vec out(n);
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

SparseVec unit_vector(int index) { return {{index, Scalar(1)}}; }

SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x, const Field& f) {
  if (a.is_zero() || x.empty()) return y;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].index < y[i].index) {
      out.push_back({x[j].index, f.mul(a, x[j].value)});
      ++j;
    } else {
      Scalar s = f.add(y[i].value, f.mul(a, x[j].value));
      if (!s.is_zero()) out.push_back({y[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const SparseVec& x, const Scalar& a, const Field& f) {
  if (a.is_zero()) return {};
  SparseVec out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back({e.index, f.mul(a, e.value)});
  return out;
}

SparseVec add(const SparseVec& x, const SparseVec& y, const Field& f) { return axpy(x, Scalar(1), y, f); }

SparseVec subtract(const SparseVec& x, const SparseVec& y, const Field& f) {
  return axpy(x, f.neg(Scalar(1)), y, f);
}

Scalar coefficient(const SparseVec& v, int index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const Entry& e, int i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return Scalar();
}

SparseVec normalize(std::vector<Entry> entries, const Field& f) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVec out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value = f.add(out.back().value, e.value);
    } else {
      if (!out.empty() && out.back().value.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().value.is_zero()) out.pop_back();
  return out;
}

void SparseAccumulator::add(int index, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = values_.try_emplace(index, value);
  if (!inserted) it->second = field_.add(it->second, value);
}

void SparseAccumulator::add(const SparseVec& v, const Scalar& s) {
  for (const auto& e : v) add(e.index, field_.mul(s, e.value));
}

SparseVec SparseAccumulator::take() {
  SparseVec out;
  out.reserve(values_.size());
  for (auto& [i, v] : values_)
    if (!v.is_zero()) out.push_back({i, v});
  values_.clear();
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  return out;
}

Echelon::Echelon(const Field& f, int width, bool track_combinations)
    : field_(f), width_(width), track_(track_combinations) {}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivot_row_.find(v[pos].index);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    const int pivot = v[pos].index;
    Scalar c = field_.neg(v[pos].value);
    v = axpy(v, c, rows_[it->second].v, field_);
    pos = static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), pivot + 1, [](const Entry& e, int i) { return e.index < i; }) -
        v.begin());
  }
  return v;
}

bool Echelon::insert(const SparseVec& input) {
  for (const auto& e : input)
    if (e.index < 0 || e.index >= width_) throw InputError("vector index out of range in echelon insert");
  SparseVec v = input;
  SparseVec combo = track_ ? unit_vector(inserted_) : SparseVec{};
  ++inserted_;
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivot_row_.find(v[pos].index);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    const int pivot = v[pos].index;
    Scalar c = field_.neg(v[pos].value);
    const Row& row = rows_[it->second];
    v = axpy(v, c, row.v, field_);
    if (track_) combo = axpy(combo, c, row.combo, field_);
    pos = static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), pivot + 1, [](const Entry& e, int i) { return e.index < i; }) -
        v.begin());
  }
  if (v.empty()) {
    if (track_) relations_.push_back(std::move(combo));
    return false;
  }
  // Nothing in the remainder sits on an existing pivot, so its first entry
  // becomes a new one.
  Scalar inv = field_.inv(v.front().value);
  int pivot = v.front().index;
  v = scale(v, inv, field_);
  if (track_) combo = scale(combo, inv, field_);
  pivot_row_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back({std::move(v), std::move(combo)});
  return true;
}

std::vector<SparseVec> Echelon::reduced_rows() const {
  std::vector<std::pair<int, int>> order;  // (pivot, row)
  for (const auto& [p, r] : pivot_row_) order.emplace_back(p, r);
  std::sort(order.begin(), order.end());
  std::unordered_map<int, SparseVec> done;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const SparseVec& original = rows_[it->second].v;
    SparseVec acc = original;
    for (const auto& e : original) {
      if (e.index == it->first) continue;
      auto d = done.find(e.index);
      if (d != done.end()) acc = axpy(acc, field_.neg(e.value), d->second, field_);
    }
    done.emplace(it->first, std::move(acc));
  }
  std::vector<SparseVec> out;
  out.reserve(order.size());
  for (const auto& [p, r] : order) out.push_back(std::move(done[p]));
  return out;
}

Subspace::Subspace(const Field& f, int parent_dim) : field_(f), parent_dim_(parent_dim) {}

Subspace Subspace::from_rref(const Field& f, int parent_dim, std::vector<SparseVec> rows) {
  Subspace s(f, parent_dim);
  s.rows_ = std::move(rows);
  for (int r = 0; r < static_cast<int>(s.rows_.size()); ++r) {
    int p = s.rows_[r].front().index;
    s.pivots_.push_back(p);
    s.pivot_index_[p] = r;
  }
  return s;
}

Subspace Subspace::span(const Field& f, int parent_dim, const std::vector<SparseVec>& rows) {
  Echelon e(f, parent_dim);
  for (const auto& r : rows) {
    if (e.rank() == parent_dim) break;
    e.insert(r);
  }
  return from_rref(f, parent_dim, e.reduced_rows());
}

Subspace Subspace::span_dense(const Field& f, int parent_dim, const std::vector<Vec>& rows) {
  std::vector<SparseVec> sparse;
  sparse.reserve(rows.size());
  for (const auto& r : rows) sparse.push_back(to_sparse(r));
  return span(f, parent_dim, sparse);
}

Subspace Subspace::whole(const Field& f, int parent_dim) {
  std::vector<SparseVec> rows;
  for (int i = 0; i < parent_dim; ++i) rows.push_back(unit_vector(i));
  return from_rref(f, parent_dim, std::move(rows));
}

std::vector<Vec> Subspace::dense_basis() const {
  std::vector<Vec> out;
  for (const auto& r : rows_) out.push_back(to_dense(r, parent_dim_));
  return out;
}

std::vector<int> Subspace::non_pivots() const {
  std::vector<int> out;
  for (int i = 0; i < parent_dim_; ++i)
    if (!pivot_index_.count(i)) out.push_back(i);
  return out;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec acc = v;
  for (const auto& e : v) {
    auto it = pivot_index_.find(e.index);
    if (it != pivot_index_.end()) acc = axpy(acc, field_.neg(e.value), rows_[it->second], field_);
  }
  return acc;
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.parent_dim_ != parent_dim_) throw InputError("subspaces of different parents");
  if (other.dim() > dim()) return false;
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Vec Subspace::coordinates(const SparseVec& v) const {
  Vec out(rows_.size());
  for (const auto& e : v) {
    auto it = pivot_index_.find(e.index);
    if (it != pivot_index_.end()) out[it->second] = e.value;
  }
  return out;
}

SparseVec Subspace::sparse_coordinates(const SparseVec& v) const {
  std::vector<Entry> out;
  for (const auto& e : v) {
    auto it = pivot_index_.find(e.index);
    if (it != pivot_index_.end()) out.push_back({it->second, e.value});
  }
  return normalize(std::move(out), field_);
}

SparseVec Subspace::combine(const Vec& coords) const { return combine(to_sparse(coords)); }

SparseVec Subspace::combine(const SparseVec& coords) const {
  SparseAccumulator acc(field_);
  for (const auto& c : coords) acc.add(rows_.at(c.index), c.value);
  return acc.take();
}

Subspace canonicalize(const Field& f, const std::vector<Vec>& rows, int parent_dim) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != parent_dim)
      throw InputError("row of length " + std::to_string(r.size()) + " in a space of dimension " +
                       std::to_string(parent_dim));
  return Subspace::span_dense(f, parent_dim, rows);
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.parent_dim() != w.parent_dim()) throw InputError("sum of subspaces with different parents");
  std::vector<SparseVec> rows = u.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.field(), u.parent_dim(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.parent_dim() != w.parent_dim()) throw InputError("intersection of subspaces with different parents");
  const int n = u.parent_dim();
  const Field& f = u.field();
  // Zassenhaus: rows (u|u) and (w|0); rows with vanishing left half span U ∩ W.
  Echelon e(f, 2 * n);
  for (const auto& r : u.basis()) {
    SparseVec row = r;
    for (const auto& x : r) row.push_back({x.index + n, x.value});
    e.insert(row);
  }
  for (const auto& r : w.basis()) e.insert(r);
  std::vector<SparseVec> out;
  for (const auto& row : e.reduced_rows()) {
    if (row.front().index < n) continue;
    SparseVec shifted;
    for (const auto& x : row) shifted.push_back({x.index - n, x.value});
    out.push_back(std::move(shifted));
  }
  return Subspace::span(f, n, out);
}

Subspace annihilator(const Subspace& u) {
  const Field& f = u.field();
  std::vector<SparseVec> rows;
  for (int j : u.non_pivots()) {
    std::vector<Entry> c{{j, Scalar(1)}};
    for (int r = 0; r < u.dim(); ++r) {
      Scalar x = coefficient(u.basis()[r], j);
      if (!x.is_zero()) c.push_back({u.pivots()[r], f.neg(x)});
    }
    rows.push_back(normalize(std::move(c), f));
  }
  return Subspace::span(f, u.parent_dim(), rows);
}

Subspace image(const Subspace& u, const std::vector<SparseVec>& columns, int target_dim) {
  LinearMap m{u.parent_dim(), target_dim, columns};
  std::vector<SparseVec> rows;
  for (const auto& r : u.basis()) rows.push_back(m.apply(r, u.field()));
  return Subspace::span(u.field(), target_dim, rows);
}

SparseVec LinearMap::apply(const SparseVec& v, const Field& f) const {
  SparseAccumulator acc(f);
  for (const auto& e : v) acc.add(columns.at(e.index), e.value);
  return acc.take();
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner, const Field& f) {
  if (outer.source_dim != inner.target_dim) throw InputError("composition of incompatible maps");
  LinearMap out{inner.source_dim, outer.target_dim, {}};
  out.columns.reserve(inner.columns.size());
  for (const auto& c : inner.columns) out.columns.push_back(outer.apply(c, f));
  return out;
}

LinearMap identity_map(int n) {
  LinearMap m{n, n, {}};
  for (int i = 0; i < n; ++i) m.columns.push_back(unit_vector(i));
  return m;
}

Subspace kernel(const LinearMap& m, const Field& f) {
  Echelon e(f, m.target_dim, true);
  for (const auto& c : m.columns) e.insert(c);
  return Subspace::span(f, m.source_dim, e.relations());
}

int rank(const LinearMap& m, const Field& f) {
  Echelon e(f, m.target_dim);
  for (const auto& c : m.columns) e.insert(c);
  return e.rank();
}

std::optional<LinearMap> inverse(const LinearMap& m, const Field& f) {
  const int n = m.source_dim;
  if (m.target_dim != n) return std::nullopt;
  // Gauss-Jordan on rows of [M | I].
  std::vector<SparseVec> rows(n);
  {
    std::vector<std::vector<Entry>> tmp(n);
    for (int j = 0; j < n; ++j)
      for (const auto& e : m.columns[j]) tmp[e.index].push_back({j, e.value});
    for (int i = 0; i < n; ++i) {
      tmp[i].push_back({n + i, Scalar(1)});
      rows[i] = normalize(std::move(tmp[i]), f);
    }
  }
  Echelon e(f, 2 * n);
  for (const auto& r : rows) e.insert(r);
  auto reduced = e.reduced_rows();
  if (static_cast<int>(reduced.size()) != n || reduced.back().front().index >= n) return std::nullopt;
  LinearMap inv{n, n, std::vector<SparseVec>(n)};
  // Row p reads e_p | (M^-1 row p).
  std::vector<std::vector<Entry>> cols(n);
  for (int p = 0; p < n; ++p)
    for (const auto& x : reduced[p])
      if (x.index >= n) cols[x.index - n].push_back({p, x.value});
  for (int j = 0; j < n; ++j) inv.columns[j] = normalize(std::move(cols[j]), f);
  return inv;
}

Polynomial minimal_polynomial(const LinearMap& m, const Field& f) {
  const int n = m.source_dim;
  if (m.target_dim != n) throw InputError("minimal polynomial of a non-square matrix");
  auto flatten = [n](const LinearMap& a) {
    SparseVec v;
    for (int j = 0; j < n; ++j)
      for (const auto& e : a.columns[j]) v.push_back({j * n + e.index, e.value});
    return v;
  };
  Echelon e(f, n * n, true);
  LinearMap power = identity_map(n);
  for (int k = 0; k <= n; ++k) {
    if (!e.insert(flatten(power))) {
      const SparseVec& rel = e.relations().front();
      Polynomial p(k + 1);
      for (const auto& x : rel) p[x.index] = x.value;
      Scalar lead = p.back();
      for (auto& c : p) c = f.div(c, lead);
      return p;
    }
    power = compose(m, power, f);
  }
  throw InternalError("minimal polynomial degree exceeds dimension");
}

namespace {

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  if (v > mpz_class("1000000000000000000")) throw UnsupportedError("rational root search: coefficient too large");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<mpq_class> q;
  for (const auto& c : p) q.push_back(c.to_mpq());
  while (!q.empty() && q.back() == 0) q.pop_back();
  if (q.size() <= 1) return {};
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (q[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  mpz_class l = 1;
  for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> a;
  for (std::size_t i = shift; i < q.size(); ++i) a.push_back(mpz_class(q[i] * l));
  if (a.size() > 1) {
    auto eval = [&](const mpq_class& x) {
      mpq_class acc = 0;
      for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + mpq_class(*it);
      return acc;
    };
    for (const auto& num : divisors(a.front()))
      for (const auto& den : divisors(a.back()))
        for (int s : {1, -1}) {
          mpq_class x(num * s, den);
          x.canonicalize();
          if (eval(x) == 0) {
            Rational r(x);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
          }
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hopfkit
