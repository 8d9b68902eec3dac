#include "hopfkit/groups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace hopfkit {

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = 0;
  auto fail = [&]() { throw InputError("malformed cycle notation \"" + text + "\""); };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') fail();
    ++i;
    std::vector<int> cycle;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size()) fail();
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') fail();
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 1000) fail();
        ++i;
      }
      if (v < 1) fail();
      cycle.push_back(v - 1);
      max_point = std::max(max_point, v);
    }
    cycles.push_back(std::move(cycle));
  }
  int n = std::max(degree, max_point);
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  // Cycles compose right to left, matching the product convention below.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    std::set<int> seen(c.begin(), c.end());
    if (seen.size() != c.size()) fail();
    Perm step(n);
    std::iota(step.begin(), step.end(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) step[c[k]] = c[(k + 1) % c.size()];
    Perm next(n);
    for (int x = 0; x < n; ++x) next[x] = step[p[x]];
    p = std::move(next);
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

// (a*b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b) {
  std::size_t n = std::max(a.size(), b.size());
  Perm out(n);
  for (std::size_t x = 0; x < n; ++x) {
    int bx = x < b.size() ? b[x] : static_cast<int>(x);
    out[x] = static_cast<std::size_t>(bx) < a.size() ? a[bx] : bx;
  }
  return out;
}

Perm pad(Perm p, std::size_t n) {
  for (std::size_t x = p.size(); x < n; ++x) p.push_back(static_cast<int>(x));
  return p;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < a; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<int> small_primes(int n) {
  std::vector<int> ps;
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime && n % p == 0) ps.push_back(p);
  }
  return ps;
}

// Elementary divisors of an abelian group from element-order counts.
std::string abelian_name(const FiniteGroup& g) {
  if (g.order() == 1) return "C1";
  std::vector<int> divisors;
  for (int p : small_primes(g.order())) {
    // a_k = log_p #{x : x^(p^k) = 1}
    std::vector<int> a{0};
    int pk = 1;
    while (true) {
      pk *= p;
      int count = 0;
      for (int x = 0; x < g.order(); ++x)
        if (pk % g.element_order(x) == 0) ++count;
      int e = 0;
      while (count > 1) {
        count /= p;
        ++e;
      }
      if (e == a.back()) break;
      a.push_back(e);
    }
    // number of cyclic factors of order >= p^k is a_k - a_{k-1}
    int kmax = static_cast<int>(a.size()) - 1;
    for (int k = kmax; k >= 1; --k) {
      int ge_k = a[k] - a[k - 1];
      int ge_k1 = k + 1 <= kmax ? a[k + 1] - a[k] : 0;
      int q = 1;
      for (int t = 0; t < k; ++t) q *= p;
      for (int c = 0; c < ge_k - ge_k1; ++c) divisors.push_back(q);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  if (divisors == std::vector<int>{2, 2}) return "V4";
  // Combine coprime prime powers into invariant factors.
  std::map<int, std::vector<int>> by_prime;
  for (int d : divisors)
    for (int p : small_primes(d)) by_prime[p].push_back(d);
  std::size_t rank = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    rank = std::max(rank, v.size());
  }
  std::vector<int> invariants(rank, 1);
  for (auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) invariants[i] *= v[i];
  std::sort(invariants.begin(), invariants.end());
  std::string out;
  for (int d : invariants) out += (out.empty() ? "C" : "xC") + std::to_string(d);
  return out;
}

Perm cycle_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

Perm transposition(int n, int a, int b) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return p;
}

std::vector<Perm> named_generators(const std::string& name) {
  auto number = [&](std::size_t from) -> int {
    std::string digits = name.substr(from);
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw InputError("unknown group name \"" + name + "\"");
    return std::stoi(digits);
  };
  if (name == "V4") return {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)};
  if (name.size() < 2) throw InputError("unknown group name \"" + name + "\"");
  char kind = name[0];
  int n = number(1);
  if (kind == 'C') {
    if (n < 1 || n > kMaxGroupOrder) throw UnsupportedError("cyclic group order out of range: " + name);
    return n == 1 ? std::vector<Perm>{} : std::vector<Perm>{cycle_perm(n)};
  }
  if (kind == 'S' || kind == 'A') {
    if (n < 1) throw InputError("unknown group name \"" + name + "\"");
    if (n > 5) throw UnsupportedError("only n <= 5 is supported for " + std::string(1, kind) + "n");
    if (kind == 'S' && n == 5) throw UnsupportedError("S5 has order 120, above the order cap of 60");
    if (n == 1) return {};
    if (kind == 'S') return {transposition(n, 0, 1), cycle_perm(n)};
    std::vector<Perm> gens;
    for (int k = 2; k < n; ++k) {
      Perm p(n);
      std::iota(p.begin(), p.end(), 0);
      p[0] = 1;
      p[1] = k;
      p[k] = 0;
      gens.push_back(p);
    }
    return gens;
  }
  if (kind == 'D') {
    if (n < 2 || n % 2 != 0) throw InputError("dihedral group order must be even: " + name);
    if (n > kMaxGroupOrder) throw UnsupportedError("dihedral group order out of range: " + name);
    int m = n / 2;
    if (m == 1) return {transposition(2, 0, 1)};
    if (m == 2) return {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)};
    Perm r = cycle_perm(m), s(m);
    for (int i = 0; i < m; ++i) s[i] = (m - i) % m;
    return {r, s};
  }
  throw InputError("unknown group name \"" + name + "\"");
}

}  // namespace

void FiniteGroup::finish() {
  const int n = order();
  inverse_.assign(n, -1);
  orders_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_) inverse_[a] = b;
    int k = 1, x = a;
    while (x != identity_) {
      x = table_[x][a];
      ++k;
    }
    orders_[a] = k;
  }
  std::map<int, int> profile;
  for (int o : orders_) ++profile[o];
  // conjugacy classes
  std::vector<bool> seen(n);
  int classes = 0;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++classes;
    for (int g = 0; g < n; ++g) seen[table_[table_[g][a]][inverse_[g]]] = true;
  }
  int center = 0;
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int g = 0; g < n && central; ++g) central = table_[a][g] == table_[g][a];
    center += central;
  }
  std::vector<int> commutators;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) commutators.push_back(table_[table_[inverse_[a]][inverse_[b]]][table_[a][b]]);
  int derived = mask_size(generated_subgroup(*this, commutators));
  std::ostringstream id;
  id << "G" << n << "[";
  bool first = true;
  for (auto [o, c] : profile) {
    id << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  id << "]k" << classes << "z" << center << "d" << derived;
  canonical_id_ = id.str();
  display_name_ = canonical_id_;
}

Mask FiniteGroup::all() const { return order() == 64 ? ~Mask{0} : ((Mask{1} << order()) - 1); }

std::optional<int> FiniteGroup::find(const std::string& label) const {
  for (int i = 0; i < order(); ++i)
    if (labels_[i] == label) return i;
  if (!perms_.empty() && !label.empty() && label.front() == '(') {
    Perm p = pad(parse_cycles(label), perms_.front().size());
    if (p.size() == perms_.front().size())
      for (int i = 0; i < order(); ++i)
        if (perms_[i] == p) return i;
  }
  return std::nullopt;
}

void FiniteGroup::assign_name() {
  const int n = order();
  if (is_abelian(*this)) {
    display_name_ = abelian_name(*this);
  } else {
    std::vector<std::string> candidates;
    if (n == 6) candidates.push_back("S3");
    if (n == 12) candidates.push_back("A4");
    if (n == 24) candidates.push_back("S4");
    if (n == 60) candidates.push_back("A5");
    if (n % 2 == 0 && n >= 8) candidates.push_back("D" + std::to_string(n));
    for (const auto& c : candidates) {
      FiniteGroup h = closure(named_generators(c));
      if (h.canonical_id() == canonical_id() && group_isomorphic(h, *this)) {
        display_name_ = c;
        break;
      }
    }
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("group table is empty");
  if (n > kMaxGroupOrder) throw UnsupportedError("group order " + std::to_string(n) + " exceeds the cap of 60");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("group table entry out of range");
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw InputError("group table has no identity");
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n; ++b) has = has || (table[a][b] == e && table[b][a] == e);
    if (!has) throw InputError("group table: element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + ")");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (static_cast<int>(labels.size()) != n) throw InputError("group label count does not match the order");
  FiniteGroup g;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.identity_ = e;
  g.finish();
  g.assign_name();
  return g;
}

FiniteGroup FiniteGroup::closure(const std::vector<Perm>& gens_in) {
  std::size_t degree = 1;
  for (const auto& p : gens_in) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw InputError("generator is not a permutation");
    degree = std::max(degree, p.size());
  }
  std::vector<Perm> gens;
  for (const auto& p : gens_in) gens.push_back(pad(p, degree));
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> elements{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        Perm y = compose(x, s);
        if (elements.insert(y).second) {
          if (elements.size() > static_cast<std::size_t>(kMaxGroupOrder))
            throw UnsupportedError("generated group exceeds the order cap of 60");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Perm> sorted(elements.begin(), elements.end());
  std::map<Perm, int> index;
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) index[sorted[i]] = i;
  const int n = static_cast<int>(sorted.size());
  FiniteGroup g;
  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a][b] = index.at(compose(sorted[a], sorted[b]));
  for (const auto& p : sorted) g.labels_.push_back(format_cycles(p));
  g.perms_ = sorted;
  g.identity_ = 0;
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& gens) {
  FiniteGroup g = closure(gens);
  g.assign_name();
  return g;
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  FiniteGroup g = closure(named_generators(name));
  g.display_name_ = name;
  return g;
}

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) m |= Mask{1} << e;
  return m;
}

Mask generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  Mask m = Mask{1} << g.identity();
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        int y = g.mul(x, s);
        if (!(m >> y & 1)) {
          m |= Mask{1} << y;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return m;
}

bool is_subgroup(const FiniteGroup& g, Mask s) {
  if (!(s >> g.identity() & 1)) return false;
  for (int a : mask_elements(s))
    for (int b : mask_elements(s))
      if (!(s >> g.mul(a, b) & 1)) return false;
  return true;
}

bool is_normal_in(const FiniteGroup& g, Mask s, Mask in) {
  for (int h : mask_elements(in))
    for (int n : mask_elements(s))
      if (!(s >> g.mul(g.mul(h, n), g.inv(h)) & 1)) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, Mask s) { return is_subgroup(g, s) && is_normal_in(g, s, g.all()); }

std::vector<Mask> subgroups(const FiniteGroup& g) {
  std::map<Mask, std::vector<int>> found;
  std::vector<Mask> work;
  for (int x = 0; x < g.order(); ++x) {
    Mask c = generated_subgroup(g, {x});
    if (found.emplace(c, std::vector<int>{x}).second) work.push_back(c);
  }
  std::vector<Mask> cyclic = work;
  while (!work.empty()) {
    Mask s = work.back();
    work.pop_back();
    std::vector<int> gens = found.at(s);
    for (Mask c : cyclic) {
      if ((c & s) == c) continue;
      std::vector<int> more = gens;
      more.push_back(found.at(c).front());
      Mask t = generated_subgroup(g, more);
      if (found.emplace(t, more).second) work.push_back(t);
    }
  }
  std::vector<Mask> out;
  for (const auto& [m, gens] : found) out.push_back(m);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
    return mask_elements(a) < mask_elements(b);
  });
  return out;
}

std::vector<Mask> normal_subgroups(const FiniteGroup& g) {
  std::vector<Mask> out;
  for (Mask s : subgroups(g))
    if (is_normal_in(g, s, g.all())) out.push_back(s);
  return out;
}

namespace {

Mask relative_mask(Mask outer, Mask inner) {
  std::vector<int> elems = mask_elements(outer);
  Mask out = 0;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    if (inner >> elems[i] & 1) out |= Mask{1} << i;
  return out;
}

}  // namespace

FiniteGroup subgroup_group(const FiniteGroup& g, Mask s) {
  if (!is_subgroup(g, s)) throw DomainError("not a subgroup: " + describe(g, s));
  std::vector<int> elems = mask_elements(s);
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) pos[elems[i]] = i;
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    labels.push_back(g.label(elems[a]));
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = pos.at(g.mul(elems[a], elems[b]));
  }
  FiniteGroup h = FiniteGroup::from_table(std::move(table), std::move(labels));
  return h;
}

std::vector<int> coset_index(const FiniteGroup& g, Mask n) {
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (index[x] >= 0) continue;
    for (int m : mask_elements(n)) index[g.mul(x, m)] = next;
    ++next;
  }
  return index;
}

FiniteGroup quotient_group(const FiniteGroup& g, Mask n) {
  if (!is_normal_subgroup(g, n)) throw DomainError("quotient by a non-normal subgroup " + describe(g, n));
  std::vector<int> index = coset_index(g, n);
  int k = g.order() / mask_size(n);
  std::vector<int> rep(k, -1);
  for (int x = 0; x < g.order(); ++x)
    if (rep[index[x]] < 0) rep[index[x]] = x;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a) {
    labels.push_back(g.label(rep[a]));
    for (int b = 0; b < k; ++b) table[a][b] = index[g.mul(rep[a], rep[b])];
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

namespace {

using Pred = std::function<bool(Mask sub, Mask in)>;

// All maximal chains from `top` down to the trivial subgroup through
// candidates admissible under `ok`.
void chains(const FiniteGroup& g, const std::vector<Mask>& pool, Mask top, const Pred& ok,
            std::vector<Mask>& current, std::vector<std::vector<Mask>>& out) {
  current.push_back(top);
  if (mask_size(top) == 1) {
    out.push_back(current);
    current.pop_back();
    return;
  }
  std::vector<Mask> admissible;
  for (Mask s : pool)
    if (s != top && (s & top) == s && ok(s, top)) admissible.push_back(s);
  for (Mask s : admissible) {
    bool maximal = true;
    for (Mask t : admissible)
      if (t != s && (s & t) == s) maximal = false;
    if (maximal) chains(g, pool, s, ok, current, out);
  }
  current.pop_back();
}

std::vector<GroupSeries> to_series(std::vector<std::vector<Mask>> raw, GroupSeries::Kind kind) {
  std::vector<GroupSeries> out;
  for (auto& c : raw) out.push_back({kind, std::move(c)});
  return out;
}

}  // namespace

std::vector<GroupSeries> composition_series_group(const FiniteGroup& g) {
  std::vector<Mask> pool = subgroups(g), current;
  std::vector<std::vector<Mask>> out;
  chains(g, pool, g.all(), [&](Mask s, Mask in) { return is_normal_in(g, s, in); }, current, out);
  return to_series(std::move(out), GroupSeries::Kind::composition);
}

std::vector<GroupSeries> chief_series_group(const FiniteGroup& g) {
  std::vector<Mask> pool = normal_subgroups(g), current;
  std::vector<std::vector<Mask>> out;
  chains(g, pool, g.all(), [](Mask, Mask) { return true; }, current, out);
  return to_series(std::move(out), GroupSeries::Kind::chief);
}

bool is_gamma_stable(Mask s, const std::vector<std::vector<int>>& act) {
  for (const auto& row : act)
    for (int x : mask_elements(s))
      if (!(s >> row[x] & 1)) return false;
  return true;
}

std::vector<GroupSeries> gamma_composition_series(const FiniteGroup& f, const std::vector<std::vector<int>>& act) {
  for (const auto& row : act) {
    if (static_cast<int>(row.size()) != f.order()) throw InputError("action table has the wrong width");
    std::vector<int> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    for (int a = 0; a < f.order(); ++a)
      if (sorted[a] != a) throw InputError("action table row is not a permutation");
  }
  std::vector<Mask> pool, current;
  for (Mask s : subgroups(f))
    if (is_gamma_stable(s, act)) pool.push_back(s);
  std::vector<std::vector<Mask>> out;
  chains(f, pool, f.all(), [&](Mask s, Mask in) { return is_normal_in(f, s, in); }, current, out);
  return to_series(std::move(out), GroupSeries::Kind::gamma_composition);
}

std::vector<FiniteGroup> series_factors(const FiniteGroup& g, const GroupSeries& s) {
  std::vector<FiniteGroup> out;
  for (std::size_t i = 0; i + 1 < s.chain.size(); ++i) {
    FiniteGroup outer = subgroup_group(g, s.chain[i]);
    out.push_back(quotient_group(outer, relative_mask(s.chain[i], s.chain[i + 1])));
  }
  return out;
}

namespace {

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  Mask span = Mask{1} << g.identity();
  for (int x : order) {
    if (span == g.all()) break;
    if (span >> x & 1) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

// Extends generator images to a map and checks it is a bijective homomorphism.
std::optional<std::vector<int>> extend(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                                       const std::vector<int>& images) {
  std::vector<int> phi(a.order(), -1);
  phi[a.identity()] = b.identity();
  std::vector<int> frontier{a.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int v = a.mul(u, gens[i]);
        int w = b.mul(phi[u], images[i]);
        if (phi[v] < 0) {
          phi[v] = w;
          next.push_back(v);
        } else if (phi[v] != w) {
          return std::nullopt;
        }
      }
    frontier = std::move(next);
  }
  std::vector<bool> hit(b.order());
  for (int x : phi) {
    if (x < 0 || hit[x]) return std::nullopt;
    hit[x] = true;
  }
  return phi;
}

void search(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
            std::vector<int>& images, bool all, std::vector<std::vector<int>>& out) {
  if (!all && !out.empty()) return;
  if (images.size() == gens.size()) {
    if (auto phi = extend(a, b, gens, images)) out.push_back(std::move(*phi));
    return;
  }
  int target = a.element_order(gens[images.size()]);
  for (int y = 0; y < b.order(); ++y) {
    if (b.element_order(y) != target) continue;
    images.push_back(y);
    search(a, b, gens, images, all, out);
    images.pop_back();
    if (!all && !out.empty()) return;
  }
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.canonical_id() != b.canonical_id()) return std::nullopt;
  std::vector<int> gens = generating_set(a), images;
  std::vector<std::vector<int>> out;
  search(a, b, gens, images, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

bool group_isomorphic(const FiniteGroup& a, const FiniteGroup& b) { return find_isomorphism(a, b).has_value(); }

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  std::vector<int> gens = generating_set(g), images;
  std::vector<std::vector<int>> out;
  search(g, g, gens, images, true, out);
  return out;
}

bool is_characteristically_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  auto autos = automorphisms(g);
  for (Mask s : normal_subgroups(g)) {
    if (mask_size(s) == 1 || s == g.all()) continue;
    bool invariant = true;
    for (const auto& phi : autos)
      for (int x : mask_elements(s))
        if (!(s >> phi[x] & 1)) invariant = false;
    if (invariant) return false;
  }
  return true;
}

std::vector<GroupSeries> maximal_subgroup_chains(const FiniteGroup& g) {
  std::vector<Mask> pool = subgroups(g), current;
  std::vector<std::vector<Mask>> out;
  chains(g, pool, g.all(), [](Mask, Mask) { return true; }, current, out);
  return to_series(std::move(out), GroupSeries::Kind::maximal_chain);
}

std::string describe(const FiniteGroup& g, Mask s) {
  std::string out = "{";
  bool first = true;
  for (int x : mask_elements(s)) {
    out += (first ? "" : ", ") + g.label(x);
    first = false;
  }
  return out + "}";
}

}  // namespace hopfkit
