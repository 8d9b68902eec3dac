// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hopfkit/io.hpp"
#include "oracles.hpp"

using namespace hopfkit;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = HOPFKIT_FIXTURE_DIR;
const std::string kCli = HOPFKIT_CLI;

GroupPtr G(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::named(name)); }
std::string fixture(const std::string& f) { return kFixtures + "/" + f; }

// Collects failed checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::set<int> as_set(Mask m) {
  auto e = mask_elements(m);
  return {e.begin(), e.end()};
}

bool group_normalizes(const FiniteGroup& g, Mask a, Mask b) {
  for (int x : mask_elements(a))
    for (int y : mask_elements(b))
      if (!(b >> g.mul(g.mul(x, y), g.inv(x)) & 1)) return false;
  return true;
}

std::multiset<std::string> tags(const std::vector<Factor>& fs) {
  std::multiset<std::string> out;
  for (const auto& f : fs)
    if (f.algebra->dim() > 1) out.insert(f.tag.str());
  return out;
}

std::string join(const std::multiset<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
  return "{" + out + "}";
}

int run_cli(const std::string& args) {
  std::string cmd = "'" + kCli + "' " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

LatticePtr kg(const GroupPtr& g) { return group_lattice(group_algebra(g), g); }
LatticePtr kg_dual(const GroupPtr& g) { return dual_group_lattice(dual_group_algebra(g), g); }
LatticePtr ext_lattice(const MatchedPair& mp) { return extension_lattice(mp, abelian_extension(mp).algebra); }

MatchedPair fixture_pair() { return matched_pair_from_json(read_json_file(fixture("bismash_s3.mp.json"))); }
GroupPtr fixture_group(const std::string& f) { return group_from_json(read_json_file(fixture(f)), f); }

// ---------------------------------------------------------------------------

void criterion1(Check& check) {
  for (const char* name : {"C2", "C6", "S3", "A4", "S4", "A5"}) {
    check(verify_axioms(*group_algebra(G(name))).ok(), std::string("k") + name);
    check(verify_axioms(*dual_group_algebra(G(name))).ok(), std::string("k^") + name);
  }
  for (const char* name : {"C2", "S3", "A4"})
    check(verify_axioms(*drinfeld_double(G(name))).ok(), std::string("D(") + name + ")");
  check(verify_axioms(*abelian_extension(bismash_s3_pair()).algebra).ok(), "bismash S3");
  check(verify_axioms(*read_hopf_file(fixture("sweedler.hopf.json"))).ok(), "sweedler fixture");
}

void criterion2(Check& check) {
  for (const char* name : {"S4", "C6"}) {
    JordanHolderReport jh = jordan_holder_verify(kg(G(name)));
    check(jh.branches.size() >= 2, std::string(name) + ": fewer than two first choices");
    check(jh.verdict == Verdict::equivalent, std::string(name) + ": verdict " + to_string(jh.verdict));
    for (const auto& b : jh.branches)
      check(tags(b.factors) == tags(jh.branches.front().factors), std::string(name) + ": branch multisets differ");
  }
  Composition c = composition_series(kg(G("S4")));
  check(c.length() == 4, "kS4 length " + std::to_string(c.length()));
  check(tags(c.factors) == std::multiset<std::string>{"kC2", "kC2", "kC2", "kC3"}, "kS4 factors " + join(tags(c.factors)));
}

void criterion3(Check& check) {
  auto a4 = G("A4");
  MatchedPair mp = drinfeld_double_pair(a4);
  AbelianExtension ext = abelian_extension(mp);
  AdditivityReport r = additivity_check(ext.inclusion, ext.projection, dual_group_lattice(ext.inclusion.source, a4),
                                        extension_lattice(mp, ext.algebra), group_lattice(ext.projection.target, a4));
  check(r.sequence.ok(), "k^A4 -> D(A4) -> kA4 not exact: " + r.sequence.failure);
  check(r.sub == 3 && r.quot == 3 && r.whole == 6, "lengths " + std::to_string(r.sub) + "+" + std::to_string(r.quot) +
                                                       " vs " + std::to_string(r.whole));

  auto s4 = G("S4");
  std::vector<Factor> duals;
  for (const auto& f : composition_series(kg(s4)).factors) duals.push_back(dual_factor(f));
  Verdict v = multiset_equiv(composition_series(kg_dual(s4)).factors, duals);
  check(v == Verdict::equivalent, "factors of k^S4 vs duals of factors of kS4: " + to_string(v));
  check(dual_factors_check(kg(s4)) == Verdict::equivalent, "dual_factors_check(kS4)");
}

void criterion4(Check& check) {
  LatticePtr d = ext_lattice(drinfeld_double_pair(G("A4")));
  int l = length(d), lo = lower_length(d), up = upper_length(d);
  check(l == 6 && lo == 5 && up == 4,
        "lengths " + std::to_string(l) + "/" + std::to_string(lo) + "/" + std::to_string(up));
  check(up == lower_length(dual_lattice(d)), "upper length differs from lower length of the dual");
}

void criterion5(Check& check) {
  auto s4 = G("S4");
  LatticePtr p = kg_dual(s4);
  SubnormalSeries s = lower_composition_series(p);
  SeriesReport r = verify_subnormal(p, s);
  check(r.valid, "series invalid: " + r.failure);
  check(is_lower_composition_series(p, s).ok, "not a lower composition series");
  auto fs = nontrivial(r.factors);
  check(fs.size() == 3, "length " + std::to_string(fs.size()));
  check(tags(fs) == std::multiset<std::string>{"k^C2", "k^C3", "k^V4"}, "factors " + join(tags(fs)));
  bool saw_v4 = false;
  for (const auto& f : fs)
    if (f.tag.str() == "k^V4") {
      saw_v4 = true;
      check(!f.simple, "k^V4 reported simple");
    }
  check(saw_v4, "no k^V4 factor");

  GroupSeries chief = chief_series_group(*s4).front();
  bool found = false;
  for (const FiniteGroup& q : series_factors(*s4, chief))
    if (q.order() == 4) {
      found = true;
      check(is_characteristically_simple(q), "chief factor of order 4 not characteristically simple");
      check(group_isomorphic(q, FiniteGroup::named("V4")), "chief factor of order 4 not C2xC2");
    }
  check(found, "no chief factor of order 4");
}

void criterion6(Check& check) {
  std::mt19937 rng(20260);
  const std::vector<std::string> pool{"C4", "V4", "S3", "C6", "D8", "C8", "D10", "A4", "D12", "C12", "S4", "D24"};
  for (int t = 0; t < 25; ++t) {
    const std::string name = pool[rng() % pool.size()];
    auto g = G(name);
    auto subs = subgroups(*g);
    Mask a = subs[rng() % subs.size()];
    std::vector<Mask> bs;
    for (Mask b : subs)
      if (group_normalizes(*g, a, b)) bs.push_back(b);
    Mask b = bs[rng() % bs.size()];
    HopfPtr h = group_algebra(g);
    Subspace ka = group_subalgebra(*h, a), kb = group_subalgebra(*h, b);
    const std::string where = name + " |A|=" + std::to_string(mask_size(a)) + " |B|=" + std::to_string(mask_size(b));
    IsoCertificate c = second_isomorphism(h, ka, kb);
    check(c.verified, where + ": " + c.failure);
    check(dim_formula_check(*h, ka, kb), where + ": dimension formula");
    int ab = static_cast<int>(oracle::product_set(g->table(), as_set(a), as_set(b)).size());
    check(c.dims["AB"] == ab, where + ": dim AB");
    check(c.dims["AB"] * mask_size(a & b) == mask_size(a) * mask_size(b), where + ": |AB||A∩B| = |A||B|");
  }
  auto s4 = G("S4");
  HopfPtr h = group_algebra(s4);
  auto n = normal_subgroups(*s4);
  auto [c1, c2] = third_isomorphism(h, group_subalgebra(*h, n[2]), group_subalgebra(*h, n[1]));
  check(c1.verified && c2.verified, "third isomorphism on (kS4, kA4, kV4): " + c1.failure + c2.failure);
}

void criterion7(Check& check) {
  std::mt19937 rng(7);
  auto g = G("S4");
  HopfPtr h = group_algebra(g);
  std::vector<std::pair<Mask, Mask>> pairs;
  for (Mask x : subgroups(*g))
    for (Mask y : subgroups(*g))
      if ((y & ~x) == 0 && is_normal_in(*g, y, x)) pairs.emplace_back(x, y);
  for (int t = 0; t < 10; ++t) {
    auto [a, a1] = pairs[rng() % pairs.size()];
    auto [b, b1] = pairs[rng() % pairs.size()];
    ButterflyReport r = butterfly(h, group_subalgebra(*h, a), group_subalgebra(*h, a1), group_subalgebra(*h, b),
                                  group_subalgebra(*h, b1));
    const std::string where = "quadruple " + std::to_string(t);
    check(r.part_i, where + ": (i)");
    check(r.part_ii, where + ": (ii)");
    check(r.part_iii, where + ": (iii)");
    check(r.part_iv.verified, where + ": (iv) " + r.part_iv.failure);
    // the common middle term against the group computation (A'∩B)(A∩B')
    Mask mid = generated_subgroup(*g, mask_elements((a1 & b) | (a & b1)));
    check(r.middle == group_subalgebra(*h, mid), where + ": middle term");
  }
}

void criterion8(Check& check) {
  auto s4 = fixture_group("s4.group.json");
  LatticePtr p = kg(s4);
  Source src{Source::Kind::group_algebra, s4, std::nullopt};
  SubnormalSeries a = series_from_json(read_json_file(fixture("s4_via_v4.series.json")), *p->algebra(), src);
  SubnormalSeries b = series_from_json(read_json_file(fixture("s4_via_a4.series.json")), *p->algebra(), src);
  SchreierResult r = schreier_refine(p, a, b);
  check(r.verified(), "refinement isomorphisms do not verify");
  check(r.verdict == Verdict::equivalent, "refinements " + to_string(r.verdict));
  LowerJordanHolderReport jh = jh_lower_verify(kg_dual(s4));
  check(!jh.truncated, "enumeration of lower series of k^S4 truncated");
  check(jh.verdict == Verdict::equivalent, "lower series of k^S4 " + to_string(jh.verdict));
}

void criterion9(Check& check) {
  check(kg(G("C5"))->is_simple(), "kC5 not simple");
  HopfPtr sw = read_hopf_file(fixture("sweedler.hopf.json"));
  LatticePtr p = auto_lattice(sw);
  check(p->is_simple(), "Sweedler not simple");
  check(!is_semisimple(*sw), "Sweedler semisimple");
  check(!is_cosemisimple(*sw), "Sweedler cosemisimple");
  Composition c = composition_series(p);
  check(c.length() == 1 && same_structure(*c.factors[0].algebra, *sw), "Sweedler factors are not {itself}");

  auto s4 = fixture_group("s4.group.json");
  auto a5 = fixture_group("a5.group.json");
  std::vector<std::pair<std::string, LatticePtr>> all{{"sweedler", p},
                                                      {"kS4", kg(s4)},
                                                      {"k^S4", kg_dual(s4)},
                                                      {"kA5", kg(a5)},
                                                      {"k^A5", kg_dual(a5)},
                                                      {"bismash", ext_lattice(fixture_pair())}};
  for (const auto& [name, lat] : all) check(semisimple_factors_check(lat).ok(), name + ": semisimple_factors_check");
}

void criterion10(Check& check) {
  auto a5 = fixture_group("a5.group.json");
  auto chains = maximal_subgroup_chains(*a5);
  std::set<std::size_t> lengths;
  std::set<std::vector<Mask>> all;
  for (const auto& c : chains) {
    lengths.insert(c.chain.size() - 1);
    all.insert(c.chain);
  }
  check(lengths.count(3) == 1, "no chain of length 3");
  check(lengths.count(4) == 1, "no chain of length 4");
  const Json spec = read_json_file(fixture("a5_chains.json"));
  check(spec["chains"].size() == 2, "expected the two displayed chains");
  for (const auto& listed : spec["chains"]) {
    std::vector<Mask> chain;
    for (const auto& term : listed) {
      if (term == "whole") {
        chain.push_back((Mask(1) << a5->order()) - 1);
        continue;
      }
      std::vector<int> gens;
      for (const auto& label : term) gens.push_back(*a5->find(label.get<std::string>()));
      chain.push_back(generated_subgroup(*a5, gens));
    }
    check(all.count(chain) == 1, "chain " + listed.dump() + " not found");
  }
}

void criterion11(Check& check) {
  auto s4 = fixture_group("s4.group.json");
  auto a5 = fixture_group("a5.group.json");
  std::vector<std::pair<std::string, LatticePtr>> built{{"kS4", kg(s4)},
                                                        {"k^S4", kg_dual(s4)},
                                                        {"kA5", kg(a5)},
                                                        {"k^A5", kg_dual(a5)},
                                                        {"bismash", ext_lattice(fixture_pair())},
                                                        {"D(S3)", ext_lattice(drinfeld_double_pair(G("S3")))}};
  for (const auto& [name, p] : built) {
    const HopfPtr& h = p->algebra();
    for (const auto& k : p->normal_subalgebras()) {
      const std::string where = name + " dim K=" + std::to_string(k.dim());
      QuotientHopf q = quotient(h, k);
      check(coinvariants(q.projection) == k, where + ": left coinvariants of H -> H/HK+ differ from K");
      check(coinvariants(q.projection, Side::right) == k, where + ": right coinvariants differ from K");
      QuotientHopf again = quotient(h, coinvariants(q.projection));
      check(again.kernel_ideal == q.kernel_ideal, where + ": H(coinvariants)+ differs from the kernel");
      check(same_structure(*again.quotient, *q.quotient), where + ": quotient by the coinvariants differs");
    }
  }

  fs::path dir = fs::temp_directory_path() / ("hopfkit_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string mp = fixture("bismash_s3.mp.json");
  const std::vector<std::pair<std::string, std::string>> builds{
      {"group_S4", "group-algebra --group S4"},
      {"group_A5", "group-algebra --group '" + fixture("a5.group.json") + "'"},
      {"dual_group_S4", "dual-group-algebra --group S4"},
      {"double_A4", "drinfeld-double --group A4"},
      {"double_S3_dual", "drinfeld-double --group S3 --dual"},
      {"bismash", "bismash-s3"},
      {"extension", "abelian-extension --matched-pair '" + mp + "'"},
      {"sweedler", "sweedler"},
      {"group_S3_gf3", "group-algebra --group S3 --field 'GF(3)'"}};
  for (const auto& [stem, args] : builds) {
    const std::string out = (dir / (stem + ".hopf.json")).string();
    check(run_cli("build " + args + " -o '" + out + "'") == 0, stem + ": build failed");
    if (!fs::exists(out)) continue;
    check(run_cli("verify '" + out + "'") == 0, stem + ": build output does not re-verify");
    const std::string text = read_text_file(out);
    check(dump_json(hopf_to_json(*read_hopf_file(out))) == text, stem + ": hopf file does not round-trip");
  }
  fs::remove_all(dir);

  auto same_bytes = [&](const std::string& file, const std::function<Json(const Json&)>& through) {
    const std::string text = read_text_file(fixture(file));
    check(dump_json(through(Json::parse(text))) == text, file + ": does not round-trip byte-identically");
  };
  same_bytes("sweedler.hopf.json", [](const Json& j) { return hopf_to_json(*hopf_from_json(j)); });
  same_bytes("s4.group.json", [](const Json& j) { return group_to_json(*group_from_json(j)); });
  same_bytes("a5.group.json", [](const Json& j) { return group_to_json(*group_from_json(j)); });
  same_bytes("bismash_s3.mp.json", [](const Json& j) { return matched_pair_to_json(matched_pair_from_json(j)); });
  same_bytes("a5_chains.json", [](const Json& j) { return j; });
  // subobject and series files use the subgroup shorthand; their canonical form is a fixed point
  HopfPtr h = group_algebra(s4);
  Source src{Source::Kind::group_algebra, s4, std::nullopt};
  for (const char* f : {"s4_v4.sub.json", "s4_a4.sub.json"}) {
    Json canon = subspace_to_json(subspace_from_json(read_json_file(fixture(f)), *h, src));
    check(dump_json(subspace_to_json(subspace_from_json(Json::parse(dump_json(canon)), *h, Source{}))) ==
              dump_json(canon),
          std::string(f) + ": canonical form does not round-trip");
  }
  for (const char* f : {"s4_via_v4.series.json", "s4_via_a4.series.json"}) {
    Json canon = series_to_json(series_from_json(read_json_file(fixture(f)), *h, src));
    check(dump_json(series_to_json(series_from_json(Json::parse(dump_json(canon)), *h, Source{}))) ==
              dump_json(canon),
          std::string(f) + ": canonical form does not round-trip");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"axioms of the standard constructions and the Sweedler fixture", criterion1},
      {"Jordan-Holder for kS4 and kC6", criterion2},
      {"additivity on D(A4) and duality of the factors of kS4", criterion3},
      {"D(A4) has length 6, lower length 5, upper length 4", criterion4},
      {"non-simple lower factor k^V4 of k^S4", criterion5},
      {"second and third isomorphism theorems", criterion6},
      {"butterfly lemma on S4 subgroup data", criterion7},
      {"Schreier refinement and lower Jordan-Holder for k^S4", criterion8},
      {"simplicity and semisimplicity edge cases", criterion9},
      {"maximal subgroup chains of A5 of lengths 3 and 4", criterion10},
      {"quotient/coinvariant identities, build re-verification, byte round-trips", criterion11}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << "\n";
    for (const auto& f : check.failures) std::cout << "    " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
