#include <doctest.h>

#include "hopfkit/lattice.hpp"
#include "oracles.hpp"

using namespace hopfkit;

namespace {

GroupPtr G(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::named(name)); }

std::set<int> as_set(Mask m) {
  auto e = mask_elements(m);
  return {e.begin(), e.end()};
}

Subspace span_of(const HopfAlgebra& h, const std::vector<std::string>& labels) {
  std::vector<SparseVec> rows;
  for (const auto& l : labels) {
    auto it = std::find(h.basis().begin(), h.basis().end(), l);
    REQUIRE(it != h.basis().end());
    rows.push_back(unit_vector(static_cast<int>(it - h.basis().begin())));
  }
  return Subspace::span(h.field(), h.dim(), rows);
}

void check_contract(const LatticePtr& p) {
  const HopfPtr& h = p->algebra();
  for (const auto& m : p->normal_subalgebras()) {
    CHECK(is_hopf_subalgebra(*h, m));
    CHECK(is_normal(*h, m));
    CHECK(same_structure(*p->for_subalgebra(m)->algebra(), *materialize(h, m)));
    CHECK(same_structure(*p->for_quotient(m)->algebra(), *quotient(h, m).quotient));
  }
}

}  // namespace

TEST_CASE("kN is normal in kG exactly when N is a normal subgroup") {
  for (const char* name : {"S3", "D8", "A4", "S4"}) {
    auto g = G(name);
    HopfPtr h = group_algebra(g);
    for (Mask n : subgroups(*g)) {
      Subspace kn = group_subalgebra(*h, n);
      CHECK(is_hopf_subalgebra(*h, kn));
      CHECK(nichols_zoeller_check(kn, *h));
      CHECK(is_normal(*h, kn) == oracle::normal(g->table(), as_set(n)));
    }
  }
}

TEST_CASE("quotients of kG are group algebras of quotient groups") {
  for (const char* name : {"S3", "D8", "A4", "S4"}) {
    auto g = G(name);
    HopfPtr h = group_algebra(g);
    for (Mask n : normal_subgroups(*g)) {
      Subspace kn = group_subalgebra(*h, n);
      QuotientHopf q = quotient(h, kn);
      CHECK(q.quotient->dim() * mask_size(n) == g->order());
      CHECK(verify_axioms(*q.quotient).ok());
      CHECK(verify_morphism(q.projection).ok);
      auto rec = recognize_group_algebra(*q.quotient);
      REQUIRE(rec.has_value());
      CHECK(group_isomorphic(**rec, quotient_group(*g, n)));
      // the canonical kernel recovers the subalgebra
      CHECK(coinvariants(q.projection) == kn);
      CHECK(coinvariants(q.projection, Side::right) == kn);
    }
  }
}

TEST_CASE("closures and products") {
  HopfPtr s3 = group_algebra(G("S3"));
  CHECK(hopf_closure(*s3, span_of(*s3, {"(1 2 3)"}).basis()).dim() == 3);
  Subspace t = hopf_closure(*s3, span_of(*s3, {"(1 2)"}).basis());
  CHECK(t.dim() == 2);
  CHECK(!is_normal(*s3, t));
  CHECK(normal_closure(*s3, span_of(*s3, {"(1 2)"}).basis()).dim() == 6);

  auto s4g = G("S4");
  HopfPtr s4 = group_algebra(s4g);
  auto subs = subgroups(*s4g);
  for (Mask a : subs)
    for (Mask b : subs) {
      auto sa = as_set(a), sb = as_set(b);
      bool norm = true;
      for (int x : sa) norm = norm && oracle::product_set(s4g->table(), oracle::product_set(s4g->table(), {x}, sb),
                                                         {s4g->inv(x)}) == sb;
      Subspace ka = group_subalgebra(*s4, a), kb = group_subalgebra(*s4, b);
      CHECK(normalizes(*s4, ka, kb) == norm);
      if (!norm) continue;
      CHECK(product_subalgebras(*s4, ka, kb).dim() ==
            static_cast<int>(oracle::product_set(s4g->table(), sa, sb).size()));
    }
}

TEST_CASE("Sweedler's algebra and the Drinfeld double of A4") {
  HopfPtr sw = sweedler_algebra();
  Subspace kg = span_of(*sw, {"1", "g"});
  CHECK(is_hopf_subalgebra(*sw, kg));
  CHECK(!is_normal(*sw, kg));

  auto a4 = G("A4");
  MatchedPair mp = drinfeld_double_pair(a4);
  HopfPtr d = abelian_extension(mp).algebra;
  Subspace kga = extension_f_subalgebra(mp, *d, 1);  // k^Γ # k1
  CHECK(kga.dim() == 12);
  CHECK(is_normal(*d, kga));
  QuotientHopf q = quotient(d, kga);
  CHECK(q.quotient->dim() == 12);
  CHECK(recognize_group_algebra(*q.quotient).has_value());
}

TEST_CASE("lattices: members and provider contract") {
  auto s4 = G("S4");
  LatticePtr gl = group_lattice(group_algebra(s4), s4);
  CHECK(gl->normal_subalgebras().size() == 4);
  check_contract(gl);
  LatticePtr dl = dual_group_lattice(dual_group_algebra(s4), s4);
  CHECK(dl->normal_subalgebras().size() == 4);
  check_contract(dl);
  check_contract(dual_lattice(gl));
  MatchedPair mp = drinfeld_double_pair(G("S3"));
  LatticePtr el = extension_lattice(mp, abelian_extension(mp).algebra);
  check_contract(el);
  LatticePtr bl = extension_lattice(bismash_s3_pair(), abelian_extension(bismash_s3_pair()).algebra);
  check_contract(bl);

  // members mixing both sides: k^{S3/A3} # kA3 in D(S3), 1 # kC2 in D(C2)
  CHECK(el->normal_subalgebras().size() == 6);
  Mask a3 = normal_subgroups(*mp.Gamma)[1];
  REQUIRE(mask_size(a3) == 3);
  CHECK(el->contains_member(extension_subspace(mp, *el->algebra(), a3, a3)));
  MatchedPair c2 = drinfeld_double_pair(G("C2"));
  LatticePtr dc2 = extension_lattice(c2, abelian_extension(c2).algebra);
  CHECK(dc2->contains_member(extension_subspace(c2, *dc2->algebra(), 0b11, 0b11)));
  check_contract(dc2);

  // the seeded search is complete on group algebras
  LatticePtr seeded = seeded_lattice(group_algebra(s4));
  CHECK(!seeded->exact());
  CHECK(seeded->name() == "search-based");
  CHECK(seeded->normal_subalgebras().size() == gl->normal_subalgebras().size());
  for (const auto& m : seeded->normal_subalgebras()) CHECK(gl->contains_member(m));
}

TEST_CASE("simplicity") {
  CHECK(group_lattice(group_algebra(G("C5")), G("C5"))->is_simple());
  CHECK(group_lattice(group_algebra(G("A5")), G("A5"))->is_simple());
  CHECK(!group_lattice(group_algebra(G("C6")), G("C6"))->is_simple());
  CHECK(auto_lattice(sweedler_algebra())->is_simple());
  CHECK(auto_lattice(dual_group_algebra(G("C3")))->is_simple());
}

TEST_CASE("frames track nested materializations") {
  auto s4 = G("S4");
  HopfPtr h = group_algebra(s4);
  Subspace a4 = group_subalgebra(*h, normal_subgroups(*s4)[2]);
  REQUIRE(a4.dim() == 12);
  Frame top = Frame::identity(h->field(), h->dim());
  Frame f = top.restrict(a4);
  Subspace v4_local = relative(a4, group_subalgebra(*h, normal_subgroups(*s4)[1]));
  CHECK(f.to_ambient(v4_local) == group_subalgebra(*h, normal_subgroups(*s4)[1]));
  CHECK(f.to_local(f.to_ambient(v4_local)) == v4_local);
  CHECK_THROWS_AS(f.to_local(SparseVec{{*s4->find("(1 2)"), Scalar(1)}}), DomainError);
}
