#include <doctest.h>

#include "hopfkit/series.hpp"
#include "oracles.hpp"

using namespace hopfkit;

namespace {

GroupPtr G(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::named(name)); }

LatticePtr kg(const std::string& name, const Field& f = Field::rationals()) {
  auto g = G(name);
  return group_lattice(group_algebra(g, f), g);
}

LatticePtr kg_dual(const std::string& name, const Field& f = Field::rationals()) {
  auto g = G(name);
  return dual_group_lattice(dual_group_algebra(g, f), g);
}

LatticePtr double_of(const std::string& name) {
  MatchedPair mp = drinfeld_double_pair(G(name));
  return extension_lattice(mp, abelian_extension(mp).algebra);
}

std::multiset<std::string> tags(const std::vector<Factor>& fs) {
  std::multiset<std::string> out;
  for (const auto& f : fs)
    if (f.algebra->dim() > 1) out.insert(f.tag.str());
  return out;
}

int chief_length(const FiniteGroup& g) { return static_cast<int>(chief_series_group(g).front().chain.size()) - 1; }

Factor factor_of(const LatticePtr& p) { return make_factor(p); }

}  // namespace

TEST_CASE("lengths of kG and k^G against group invariants") {
  for (const char* name : {"C2", "C6", "S3", "D8", "A4", "S4", "C12", "D12"}) {
    auto g = G(name);
    const int comp = oracle::big_omega(g->order());  // solvable groups
    const int chief = chief_length(*g);
    LatticePtr a = kg(name), b = kg_dual(name);
    CHECK_MESSAGE(length(a) == comp, name);
    CHECK_MESSAGE(length(b) == comp, name);
    CHECK_MESSAGE(lower_length(a) == comp, name);
    CHECK_MESSAGE(upper_length(a) == chief, name);
    CHECK_MESSAGE(lower_length(b) == chief, name);
    CHECK_MESSAGE(upper_length(b) == comp, name);
  }
  CHECK(length(kg("A5")) == 1);
}

TEST_CASE("composition factors of kS4 do not depend on the first choice") {
  LatticePtr p = kg("S4");
  Composition c = composition_series(p);
  CHECK(c.length() == 4);
  CHECK(tags(c.factors) == std::multiset<std::string>{"kC2", "kC2", "kC2", "kC3"});
  JordanHolderReport jh = jordan_holder_verify(p);
  CHECK(jh.branches.size() == 2);
  CHECK(jh.verdict == Verdict::equivalent);
  for (const auto& b : jh.branches) CHECK(tags(b.factors) == tags(c.factors));
  CHECK(jordan_holder_verify(kg("C6")).verdict == Verdict::equivalent);
  CHECK(jordan_holder_verify(double_of("S3")).verdict == Verdict::equivalent);
}

TEST_CASE("factor equivalence rules") {
  Factor c3 = factor_of(kg("C3")), c3d = factor_of(kg_dual("C3"));
  Factor c2 = factor_of(kg("C2")), c2d = factor_of(kg_dual("C2"));
  CHECK(factor_equiv(c2, c2d) == Verdict::equivalent);
  CHECK(factor_equiv(c3, c3d) == Verdict::distinct);  // Q lacks cube roots of unity
  CHECK(factor_equiv(c3, dual_factor(c3d)) == Verdict::equivalent);
  Field f7 = Field::prime(7);
  CHECK(factor_equiv(factor_of(kg("C3", f7)), factor_of(kg_dual("C3", f7))) == Verdict::equivalent);
  CHECK(factor_equiv(factor_of(kg("S3")), factor_of(kg_dual("S3"))) == Verdict::distinct);
  CHECK(factor_equiv(c2, c3) == Verdict::distinct);
  Factor one = factor_of(kg("C1"));
  CHECK(multiset_equiv({c2, one, c3}, {c3, c2}) == Verdict::equivalent);
  CHECK(multiset_equiv({c2, c2}, {c2, c3}) == Verdict::distinct);
  CHECK(fingerprint(*kg("C3")->algebra()).primal == std::array<int, 5>{3, 3, 0, 3, 1});
  CHECK(fingerprint(*kg_dual("C3")->algebra()).primal == std::array<int, 5>{3, 3, 0, 3, 3});
}

TEST_CASE("duality preserves the length and dualizes the factors") {
  for (LatticePtr p : {kg("S4"), kg("D8"), double_of("S3"), double_of("C2")}) {
    LatticePtr d = dual_lattice(p);
    CHECK(length(d) == length(p));
    CHECK(upper_length(p) == lower_length(d));
    CHECK(lower_length(p) == upper_length(d));
    CHECK(dual_factors_check(p) == Verdict::equivalent);
  }
}

TEST_CASE("additivity along k^A4 -> D(A4) -> kA4") {
  auto a4 = G("A4");
  MatchedPair mp = drinfeld_double_pair(a4);
  AbelianExtension ext = abelian_extension(mp);
  LatticePtr whole = extension_lattice(mp, ext.algebra);
  AdditivityReport r = additivity_check(ext.inclusion, ext.projection, dual_group_lattice(ext.inclusion.source, a4),
                                        whole, group_lattice(ext.projection.target, a4));
  CHECK_MESSAGE(r.ok(), r.sequence.failure);
  CHECK(r.sub == 3);
  CHECK(r.quot == 3);
  CHECK(r.whole == 6);
}

TEST_CASE("three different lengths for D(A4)") {
  LatticePtr p = double_of("A4");
  CHECK(length(p) == 6);
  CHECK(lower_length(p) == 5);
  CHECK(upper_length(p) == 4);
  CHECK(lower_length(dual_lattice(p)) == 4);
  SubnormalSeries up = upper_composition_series(p);
  SeriesReport r = verify_subnormal(p, up);
  CHECK(r.valid);
  CHECK(r.dimension_law);
  CHECK(nontrivial(r.factors).size() == 4);
}

TEST_CASE("lower series of k^S4 has a non-simple factor") {
  LatticePtr p = kg_dual("S4");
  SubnormalSeries s = lower_composition_series(p);
  SeriesReport r = verify_subnormal(p, s);
  REQUIRE(r.valid);
  auto fs = nontrivial(r.factors);
  CHECK(fs.size() == 3);
  CHECK(tags(fs) == std::multiset<std::string>{"k^C2", "k^C3", "k^V4"});
  for (const auto& f : fs) CHECK(f.simple == (f.algebra->dim() != 4));
  CHECK(is_lower_composition_series(p, s).ok);
  CHECK(simple_factors_imply_composition(p, s) == Applicability::not_applicable);
  LowerJordanHolderReport jh = jh_lower_verify(p);
  CHECK(jh.verdict == Verdict::equivalent);
  CHECK(!jh.truncated);
}

TEST_CASE("invalid series are rejected with the failing step") {
  LatticePtr p = kg("S3");
  const HopfAlgebra& h = *p->algebra();
  auto s3 = G("S3");
  Subspace t = group_subalgebra(h, generated_subgroup(*s3, {*s3->find("(1 2)")}));
  SubnormalSeries bad{Direction::lower, {Subspace::whole(h.field(), 6), t, Subspace::span(h.field(), 6, {h.unit()})}};
  SeriesReport r = verify_subnormal(p, bad);
  CHECK(!r.valid);
  CHECK(r.failed_step == 0);
  SubnormalSeries up{Direction::upper, {Subspace::whole(h.field(), 6), t, Subspace::span(h.field(), 6, {h.unit()})}};
  CHECK(!verify_subnormal(p, up).valid);
}

TEST_CASE("simple factors imply a composition series when all factors are simple") {
  LatticePtr p = kg("S4");
  SubnormalSeries s = lower_composition_series(p);
  CHECK(is_lower_composition_series(p, s).ok);
  CHECK(simple_factors_imply_composition(p, s) == Applicability::holds);
}

TEST_CASE("Schreier refinement of two lower series of kS4") {
  LatticePtr p = kg("S4");
  const HopfAlgebra& h = *p->algebra();
  auto g = G("S4");
  auto n = normal_subgroups(*g);
  Subspace whole = Subspace::whole(h.field(), 24), one = Subspace::span(h.field(), 24, {h.unit()});
  SubnormalSeries via_v4{Direction::lower, {whole, group_subalgebra(h, n[1]), one}};
  SubnormalSeries via_a4{Direction::lower, {whole, group_subalgebra(h, n[2]), one}};
  SchreierResult r = schreier_refine(p, via_v4, via_a4);
  CHECK(r.verified());
  CHECK(r.verdict == Verdict::equivalent);
  CHECK(r.r1.chain.size() == r.r2.chain.size());
  for (const auto& m : r.matches) CHECK(m.verified);
}

TEST_CASE("abelian extension lower series") {
  auto a4 = G("A4");
  MatchedPair mp = drinfeld_double_pair(a4);
  LatticePtr p = extension_lattice(mp, abelian_extension(mp).algebra);
  SubnormalSeries s = abelian_ext_lower_series(mp, *p->algebra());
  SeriesReport r = verify_subnormal(p, s);
  REQUIRE(r.valid);
  CHECK(is_lower_composition_series(p, s).ok);
  CHECK(tags(r.factors) == std::multiset<std::string>{"kC2", "kC2", "kC3", "k^V4", "k^C3"});
  CHECK(static_cast<int>(nontrivial(r.factors).size()) == lower_length(p));
}

TEST_CASE("semisimplicity is detected by the factors") {
  for (LatticePtr p : {kg("S4"), kg_dual("S3"), double_of("S3"), auto_lattice(sweedler_algebra())}) {
    SemisimpleReport r = semisimple_factors_check(p);
    CHECK(r.ok());
  }
  LatticePtr sw = auto_lattice(sweedler_algebra());
  Composition c = composition_series(sw);
  REQUIRE(c.length() == 1);
  CHECK(same_structure(*c.factors[0].algebra, *sweedler_algebra()));
  SemisimpleReport r = semisimple_factors_check(sw);
  CHECK(!r.semisimple);
  CHECK(!r.cosemisimple);
}
