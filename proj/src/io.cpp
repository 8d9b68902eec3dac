#include "hopfkit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hopfkit {

namespace {

constexpr std::size_t kInlineWidth = 100;

void emit(const Json& j, std::size_t indent, std::string& out) {
  std::string flat = j.dump();
  if (!j.is_structured() || j.empty() || indent + flat.size() <= kInlineWidth) {
    out += flat;
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    emit(it.value(), indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (obj ? "}" : "]");
}

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail(where, "unknown key \"" + it.key() + "\"");
  }
}

const Json& array_of(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

int index_in(const Json& j, int bound, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer index");
  long long v = j.get<long long>();
  if (v < 0 || v >= bound) fail(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<int>(v);
}

Scalar scalar_of(const Json& j, const Field& f, const std::string& where) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar string such as \"-3/2\"");
}

std::vector<const Json*> entries(const Json& j, std::size_t width, const std::string& where) {
  std::vector<const Json*> out;
  std::size_t i = 0;
  for (const auto& e : array_of(j, where)) {
    if (!e.is_array() || e.size() != width)
      fail(at(where, i), "expected an entry of " + std::to_string(width) + " values");
    out.push_back(&e);
    ++i;
  }
  return out;
}

/// Element index from an integer or a label.
int element_of(const Json& j, const FiniteGroup& g, const std::string& where) {
  if (j.is_string()) {
    auto e = g.find(j.get<std::string>());
    if (!e) fail(where, "no group element labelled \"" + j.get<std::string>() + "\"");
    return *e;
  }
  return index_in(j, g.order(), where);
}

Mask subgroup_of(const Json& j, const FiniteGroup& g, const std::string& where) {
  std::vector<int> gens;
  std::size_t i = 0;
  for (const auto& e : array_of(j, where)) gens.push_back(element_of(e, g, at(where, i++)));
  return generated_subgroup(g, gens);
}

void collect_cycles(const Json& j, std::vector<std::string>& out, const std::string& where) {
  if (j.is_string()) {
    out.push_back(j.get<std::string>());
    return;
  }
  if (!j.is_array()) fail(where, "expected cycle notation strings");
  std::size_t i = 0;
  for (const auto& e : j) collect_cycles(e, out, at(where, i++));
}

Json scalar_json(const Field& f, const Scalar& s) { return f.format(s); }

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << text;
  if (!out) throw InputError(path + ": write failed");
}

Json field_to_json(const Field& f) {
  if (f.is_rationals()) return "Q";
  return "GF(" + std::to_string(f.characteristic()) + ")";
}

Field field_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected \"Q\" or \"GF(p)\"");
  std::string s = j.get<std::string>();
  if (s == "Q") return Field::rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    std::string digits = s.substr(3, s.size() - 4);
    if (!digits.empty() && digits.size() <= 18 && digits.find_first_not_of("0123456789") == std::string::npos) {
      try {
        return Field::prime(std::stoll(digits));
      } catch (const Error& e) {
        fail(where, e.what());
      }
    }
  }
  fail(where, "unknown field \"" + s + "\"");
}

Json group_to_json(const FiniteGroup& g) {
  const std::string& name = g.display_name();
  if (!name.empty()) {
    try {
      FiniteGroup n = FiniteGroup::named(name);
      if (n.table() == g.table() && n.labels() == g.labels()) return Json{{"name", name}};
    } catch (const Error&) {
    }
  }
  if (!g.permutations().empty()) {
    FiniteGroup p = FiniteGroup::from_permutations(g.permutations());
    if (p.table() == g.table() && p.labels() == g.labels()) {
      Json perms = Json::array();
      for (const auto& x : g.permutations()) perms.push_back(format_cycles(x));
      return Json{{"permutations", perms}};
    }
  }
  return Json{{"table", g.table()}, {"labels", g.labels()}};
}

GroupPtr group_from_json(const Json& j, const std::string& where) {
  only_keys(j, {"name", "permutations", "table", "labels"}, where);
  try {
    if (j.contains("name")) {
      only_keys(j, {"name"}, where);
      const Json& n = j["name"];
      if (!n.is_string()) fail(at(where, "name"), "expected a string");
      return std::make_shared<const FiniteGroup>(FiniteGroup::named(n.get<std::string>()));
    }
    if (j.contains("permutations")) {
      only_keys(j, {"permutations"}, where);
      std::vector<std::string> texts;
      collect_cycles(j["permutations"], texts, at(where, "permutations"));
      std::vector<Perm> gens;
      for (const auto& t : texts) gens.push_back(parse_cycles(t));
      if (gens.empty()) gens.push_back(Perm{0});
      return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(gens));
    }
    if (j.contains("table")) {
      std::vector<std::string> labels;
      if (j.contains("labels")) {
        std::size_t i = 0;
        for (const auto& l : array_of(j["labels"], at(where, "labels"))) {
          if (!l.is_string()) fail(at(at(where, "labels"), i), "expected a string");
          labels.push_back(l.get<std::string>());
          ++i;
        }
      }
      const Json& t = array_of(j["table"], at(where, "table"));
      const int n = static_cast<int>(t.size());
      if (n == 0 || n > kMaxGroupOrder) fail(at(where, "table"), "group order must be in [1, 60]");
      std::vector<std::vector<int>> table(n);
      for (int r = 0; r < n; ++r) {
        const std::string w = at(at(where, "table"), r);
        const Json& row = array_of(t[r], w);
        if (static_cast<int>(row.size()) != n) fail(w, "row length differs from the group order");
        for (int c = 0; c < n; ++c) {
          const Json& e = row[c];
          if (e.is_string()) {
            auto it = std::find(labels.begin(), labels.end(), e.get<std::string>());
            if (it == labels.end()) fail(at(w, c), "unknown label \"" + e.get<std::string>() + "\"");
            table[r].push_back(static_cast<int>(it - labels.begin()));
          } else {
            table[r].push_back(index_in(e, n, at(w, c)));
          }
        }
      }
      return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(table), std::move(labels)));
    }
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected one of \"name\", \"permutations\", \"table\"");
}

GroupPtr parse_group_arg(const std::string& arg) {
  if (arg.size() >= 5 && arg.compare(arg.size() - 5, 5, ".json") == 0) return group_from_json(read_json_file(arg), arg);
  try {
    return std::make_shared<const FiniteGroup>(FiniteGroup::named(arg));
  } catch (const Error& e) {
    throw InputError("--group " + arg + ": " + e.what());
  }
}

Json hopf_to_json(const HopfAlgebra& h) {
  const Field& f = h.field();
  const int n = h.dim();
  Json j;
  j["field"] = field_to_json(f);
  j["dim"] = n;
  j["basis"] = h.basis();
  Json mult = Json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& e : h.mult(a, b)) mult.push_back(Json::array({a, b, e.index, scalar_json(f, e.value)}));
  j["mult"] = std::move(mult);
  Json unit = Json::array();
  for (const auto& e : h.unit()) unit.push_back(Json::array({e.index, scalar_json(f, e.value)}));
  j["unit"] = std::move(unit);
  Json comult = Json::array();
  for (int a = 0; a < n; ++a)
    for (const auto& e : h.comult(a)) comult.push_back(Json::array({a, e.index / n, e.index % n, scalar_json(f, e.value)}));
  j["comult"] = std::move(comult);
  Json counit = Json::array();
  for (const auto& e : h.counit()) counit.push_back(Json::array({e.index, scalar_json(f, e.value)}));
  j["counit"] = std::move(counit);
  // Row-major over the matrix: entry [i, j] is the coefficient of e_i in S(e_j).
  std::vector<std::vector<Json>> rows(n);
  for (int c = 0; c < n; ++c)
    for (const auto& e : h.antipode(c)) rows[e.index].push_back(Json::array({e.index, c, scalar_json(f, e.value)}));
  Json antipode = Json::array();
  for (auto& r : rows)
    for (auto& e : r) antipode.push_back(std::move(e));
  j["antipode"] = std::move(antipode);
  if (const auto& p = h.provenance(); p && p->kind != FactorKind::generic && p->group)
    j["provenance"] = Json{{"kind", p->kind_name()}, {"group", group_to_json(*p->group)}};
  return j;
}

HopfPtr hopf_from_json(const Json& j, const std::string& where) {
  only_keys(j, {"field", "dim", "basis", "mult", "unit", "comult", "counit", "antipode", "provenance"}, where);
  HopfData d;
  d.field = field_from_json(require(j, "field", where), at(where, "field"));
  const Field& f = d.field;
  const Json& dj = require(j, "dim", where);
  if (!dj.is_number_integer() || dj.get<long long>() < 1 || dj.get<long long>() > 4096)
    fail(at(where, "dim"), "expected a positive integer up to 4096");
  const int n = dj.get<int>();
  d.dim = n;
  if (j.contains("basis")) {
    const Json& b = array_of(j["basis"], at(where, "basis"));
    if (static_cast<int>(b.size()) != n) fail(at(where, "basis"), "expected " + std::to_string(n) + " labels");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) fail(at(at(where, "basis"), i), "expected a string");
      if (!seen.insert(b[i].get<std::string>()).second) fail(at(at(where, "basis"), i), "duplicate label");
      d.basis.push_back(b[i].get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) d.basis.push_back("e" + std::to_string(i));
  }

  auto sparse_block = [&](const char* key, std::size_t width, auto&& place) {
    const std::string w = at(where, key);
    std::set<std::vector<int>> seen;
    std::size_t i = 0;
    for (const Json* e : entries(require(j, key, where), width, w)) {
      const std::string we = at(w, i++);
      std::vector<int> idx;
      for (std::size_t k = 0; k + 1 < width; ++k) idx.push_back(index_in((*e)[k], n, at(we, k)));
      if (!seen.insert(idx).second) fail(we, "duplicate entry");
      Scalar c = scalar_of((*e)[width - 1], f, at(we, width - 1));
      if (!c.is_zero()) place(idx, c);
    }
  };

  d.mult.assign(static_cast<std::size_t>(n) * n, {});
  d.comult.assign(n, {});
  d.antipode.assign(n, {});
  sparse_block("mult", 4, [&](const std::vector<int>& x, const Scalar& c) {
    d.mult[static_cast<std::size_t>(x[0]) * n + x[1]].push_back({x[2], c});
  });
  sparse_block("unit", 2, [&](const std::vector<int>& x, const Scalar& c) { d.unit.push_back({x[0], c}); });
  sparse_block("comult", 4, [&](const std::vector<int>& x, const Scalar& c) {
    d.comult[x[0]].push_back({x[1] * n + x[2], c});
  });
  sparse_block("counit", 2, [&](const std::vector<int>& x, const Scalar& c) { d.counit.push_back({x[0], c}); });
  std::vector<bool> row_seen(n, false);
  sparse_block("antipode", 3, [&](const std::vector<int>& x, const Scalar& c) {
    d.antipode[x[1]].push_back({x[0], c});
    row_seen[x[0]] = true;
  });
  for (auto& v : d.mult) v = normalize(std::move(v), f);
  for (auto& v : d.comult) v = normalize(std::move(v), f);
  for (auto& v : d.antipode) v = normalize(std::move(v), f);
  d.unit = normalize(std::move(d.unit), f);
  d.counit = normalize(std::move(d.counit), f);

  // The antipode of a finite-dimensional Hopf algebra is bijective, so an
  // empty row or column can only be a truncated file.
  for (int i = 0; i < n; ++i) {
    if (!row_seen[i]) fail(at(where, "antipode"), "row " + std::to_string(i) + " is empty");
    if (d.antipode[i].empty()) fail(at(where, "antipode"), "column " + std::to_string(i) + " is empty");
    if (d.comult[i].empty()) fail(at(where, "comult"), "no entries for basis element " + std::to_string(i));
  }
  if (d.unit.empty()) fail(at(where, "unit"), "the unit is zero");
  if (d.counit.empty()) fail(at(where, "counit"), "the counit is zero");

  if (j.contains("provenance") && !j["provenance"].is_null()) {
    const std::string w = at(where, "provenance");
    const Json& p = j["provenance"];
    only_keys(p, {"kind", "group"}, w);
    const Json& k = require(p, "kind", w);
    GroupPtr g = group_from_json(require(p, "group", w), at(w, "group"));
    if (k == "group_algebra")
      d.provenance = FactorTag::group_algebra(g);
    else if (k == "dual_group_algebra")
      d.provenance = FactorTag::dual_group_algebra(g);
    else
      fail(at(w, "kind"), "expected \"group_algebra\" or \"dual_group_algebra\"");
  }
  HopfPtr h;
  try {
    h = make_hopf(std::move(d));
  } catch (const Error& e) {
    fail(where, e.what());
  }
  if (const auto& p = h->provenance()) {
    auto rec = p->kind == FactorKind::group_algebra ? recognize_group_algebra(*h) : recognize_dual_group_algebra(*h);
    if (!rec || !group_isomorphic(**rec, *p->group))
      fail(at(where, "provenance"), "the structure constants are not those of " + p->str());
  }
  return h;
}

HopfPtr read_hopf_file(const std::string& path) { return hopf_from_json(read_json_file(path), path); }

Json matched_pair_to_json(const MatchedPair& mp) {
  Json j;
  j["F"] = group_to_json(*mp.F);
  j["Gamma"] = group_to_json(*mp.Gamma);
  j["lact"] = mp.lact;
  j["ract"] = mp.ract;
  auto cube = [](const std::vector<std::vector<std::vector<Scalar>>>& t) {
    Json out = Json::array();
    for (const auto& a : t) {
      Json ja = Json::array();
      for (const auto& b : a) {
        Json jb = Json::array();
        for (const auto& c : b) jb.push_back(c.str());
        ja.push_back(std::move(jb));
      }
      out.push_back(std::move(ja));
    }
    return out;
  };
  if (!mp.sigma.empty()) j["sigma"] = cube(mp.sigma);
  if (!mp.tau.empty()) j["tau"] = cube(mp.tau);
  return j;
}

MatchedPair matched_pair_from_json(const Json& j, const Field& f, const std::string& where) {
  only_keys(j, {"F", "Gamma", "lact", "ract", "sigma", "tau"}, where);
  MatchedPair mp;
  mp.F = group_from_json(require(j, "F", where), at(where, "F"));
  mp.Gamma = group_from_json(require(j, "Gamma", where), at(where, "Gamma"));
  const FiniteGroup& F = *mp.F;
  const FiniteGroup& G = *mp.Gamma;
  const int nf = F.order(), ng = G.order();

  auto table = [&](const char* key, const FiniteGroup& target, bool identity_default) {
    const std::string w = at(where, key);
    const Json& t = require(j, key, where);
    std::vector<std::vector<int>> out(ng, std::vector<int>(nf));
    if (t.is_string() && t.get<std::string>() == "trivial") {
      for (int g = 0; g < ng; ++g)
        for (int x = 0; x < nf; ++x) out[g][x] = identity_default ? x : g;
      return out;
    }
    if (!t.is_array() || static_cast<int>(t.size()) != ng)
      fail(w, "expected " + std::to_string(ng) + " rows or \"trivial\"");
    for (int g = 0; g < ng; ++g) {
      const Json& row = array_of(t[g], at(w, g));
      if (static_cast<int>(row.size()) != nf) fail(at(w, g), "expected " + std::to_string(nf) + " entries");
      for (int x = 0; x < nf; ++x) out[g][x] = element_of(row[x], target, at(at(w, g), x));
    }
    return out;
  };
  mp.lact = table("lact", F, true);
  mp.ract = table("ract", G, false);

  auto cube = [&](const char* key, int a, int b) {
    std::vector<std::vector<std::vector<Scalar>>> out;
    if (!j.contains(key) || j[key].is_null()) return out;
    const std::string w = at(where, key);
    const Json& t = array_of(j[key], w);
    if (static_cast<int>(t.size()) != a) fail(w, "expected " + std::to_string(a) + " blocks");
    out.assign(a, std::vector<std::vector<Scalar>>(b, std::vector<Scalar>(b)));
    for (int p = 0; p < a; ++p) {
      const Json& blk = array_of(t[p], at(w, p));
      if (static_cast<int>(blk.size()) != b) fail(at(w, p), "expected " + std::to_string(b) + " rows");
      for (int q = 0; q < b; ++q) {
        const Json& row = array_of(blk[q], at(at(w, p), q));
        if (static_cast<int>(row.size()) != b) fail(at(at(w, p), q), "expected " + std::to_string(b) + " entries");
        for (int r = 0; r < b; ++r) {
          Scalar s = scalar_of(row[r], f, at(at(at(w, p), q), r));
          if (s.is_zero()) fail(at(at(at(w, p), q), r), "cocycle values must be invertible");
          out[p][q][r] = s;
        }
      }
    }
    return out;
  };
  mp.sigma = cube("sigma", ng, nf);
  mp.tau = cube("tau", nf, ng);
  return mp;
}

Subspace subspace_from_json(const Json& j, const HopfAlgebra& h, const Source& src, const std::string& where) {
  const Field& f = h.field();
  const int n = h.dim();
  if (j.is_string()) {
    if (j == "whole") return Subspace::whole(f, n);
    if (j == "trivial") return Subspace::span(f, n, {h.unit()});
    fail(where, "expected \"whole\", \"trivial\" or an object");
  }
  only_keys(j, {"vectors", "subgroup", "gamma_quotient"}, where);
  if (j.size() != 1) fail(where, "expected exactly one of \"vectors\", \"subgroup\", \"gamma_quotient\"");
  try {
    if (j.contains("vectors")) {
      const std::string w = at(where, "vectors");
      std::vector<SparseVec> rows;
      std::size_t i = 0;
      for (const auto& v : array_of(j["vectors"], w)) {
        const std::string wv = at(w, i++);
        std::vector<Entry> e;
        if (v.is_array()) {
          if (static_cast<int>(v.size()) != n) fail(wv, "expected " + std::to_string(n) + " coefficients");
          for (int k = 0; k < n; ++k) e.push_back({k, scalar_of(v[k], f, at(wv, k))});
        } else if (v.is_object()) {
          for (auto it = v.begin(); it != v.end(); ++it) {
            auto pos = std::find(h.basis().begin(), h.basis().end(), it.key());
            if (pos == h.basis().end()) fail(wv, "no basis element labelled \"" + it.key() + "\"");
            e.push_back({static_cast<int>(pos - h.basis().begin()), scalar_of(it.value(), f, at(wv, it.key()))});
          }
        } else {
          fail(wv, "expected a coefficient array or a {label: coefficient} object");
        }
        rows.push_back(normalize(std::move(e), f));
      }
      return Subspace::span(f, n, rows);
    }
    const bool gamma = j.contains("gamma_quotient");
    const std::string w = at(where, gamma ? "gamma_quotient" : "subgroup");
    switch (src.kind) {
      case Source::Kind::group_algebra:
        if (gamma) fail(w, "only defined for dual group algebras and abelian extensions");
        return group_subalgebra(h, subgroup_of(j["subgroup"], *src.group, w));
      case Source::Kind::dual_group_algebra: {
        Mask s = subgroup_of(gamma ? j["gamma_quotient"] : j["subgroup"], *src.group, w);
        if (!is_normal_subgroup(*src.group, s)) fail(w, "k^{G/S} needs S normal in G");
        return dual_group_quotient_subalgebra(*src.group, h, s);
      }
      case Source::Kind::extension:
        if (gamma) return extension_gamma_subalgebra(*src.pair, h, subgroup_of(j["gamma_quotient"], *src.pair->Gamma, w));
        return extension_f_subalgebra(*src.pair, h, subgroup_of(j["subgroup"], *src.pair->F, w));
      case Source::Kind::generic:
        break;
    }
    fail(w, "subgroup shorthands need an algebra built from a group or a matched pair");
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& v : s.dense_basis()) {
    Json r = Json::array();
    for (const auto& c : v) r.push_back(s.field().format(c));
    rows.push_back(std::move(r));
  }
  return Json{{"vectors", rows}};
}

SubnormalSeries series_from_json(const Json& j, const HopfAlgebra& h, const Source& src, const std::string& where) {
  only_keys(j, {"direction", "chain"}, where);
  SubnormalSeries s;
  const Json& d = require(j, "direction", where);
  if (d == "lower")
    s.direction = Direction::lower;
  else if (d == "upper")
    s.direction = Direction::upper;
  else
    fail(at(where, "direction"), "expected \"lower\" or \"upper\"");
  const std::string w = at(where, "chain");
  std::size_t i = 0;
  for (const auto& e : array_of(require(j, "chain", where), w)) s.chain.push_back(subspace_from_json(e, h, src, at(w, i++)));
  if (s.chain.size() < 2) fail(w, "a series needs at least two terms");
  return s;
}

Json series_to_json(const SubnormalSeries& s) {
  Json chain = Json::array();
  const int n = s.chain.empty() ? 0 : s.chain.front().parent_dim();
  for (const auto& t : s.chain) {
    if (t.dim() == n)
      chain.push_back("whole");
    else
      chain.push_back(subspace_to_json(t));
  }
  return Json{{"direction", to_string(s.direction)}, {"chain", chain}};
}

Json fingerprint_to_json(const IsoFingerprint& f) { return Json{{"primal", f.primal}, {"dual", f.dual}}; }

Json factor_to_json(const Factor& f) {
  Json j;
  j["dim"] = f.algebra->dim();
  j["tag"] = f.tag.str();
  j["fingerprint"] = fingerprint_to_json(f.fingerprint);
  j["simple"] = f.simple;
  if (!f.exact) j["exact"] = false;
  return j;
}

Json factors_to_json(const std::vector<Factor>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(factor_to_json(f));
  return out;
}

}  // namespace hopfkit
