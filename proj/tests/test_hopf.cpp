#include <doctest.h>

#include <random>

#include "hopfkit/constructions.hpp"
#include "hopfkit/subobjects.hpp"

using namespace hopfkit;

namespace {

GroupPtr G(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::named(name)); }

bool commutative(const HopfAlgebra& h) {
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < i; ++j)
      if (h.mult(i, j) != h.mult(j, i)) return false;
  return true;
}

bool cocommutative(const HopfAlgebra& h) {
  const int n = h.dim();
  for (int i = 0; i < n; ++i) {
    std::vector<Entry> flipped;
    for (const auto& e : h.comult(i)) flipped.push_back({(e.index % n) * n + e.index / n, e.value});
    if (normalize(flipped, h.field()) != h.comult(i)) return false;
  }
  return true;
}

HopfData corrupt(const HopfAlgebra& h, std::mt19937& rng, int which) {
  HopfData d = h.data();
  const int n = d.dim;
  auto bump = [&](SparseVec& v, int range) {
    int idx = static_cast<int>(rng() % range);
    v = add(v, SparseVec{{idx, Scalar(1)}}, d.field);
  };
  switch (which) {
    case 0: bump(d.mult[rng() % (n * n)], n); break;
    case 1: bump(d.comult[rng() % n], n * n); break;
    case 2: bump(d.antipode[rng() % n], n); break;
    default: bump(d.counit, n); break;
  }
  return d;
}

}  // namespace

TEST_CASE("group algebra multiplication is permutation composition") {
  auto g = G("S3");
  HopfPtr h = group_algebra(g);
  auto apply = [](const Perm& p, int x) { return x < static_cast<int>(p.size()) ? p[x] : x; };
  // Which composition order the labels follow is a convention; it must be one
  // of the two, consistently for every pair.
  int left = 0, right = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Perm pa = parse_cycles(h->basis()[a], 3), pb = parse_cycles(h->basis()[b], 3);
      Perm lr(3), rl(3);
      for (int x = 0; x < 3; ++x) {
        lr[x] = apply(pb, apply(pa, x));
        rl[x] = apply(pa, apply(pb, x));
      }
      REQUIRE(h->mult(a, b).size() == 1);
      Perm got = parse_cycles(h->basis()[h->mult(a, b)[0].index], 3);
      left += got == lr;
      right += got == rl;
    }
  CHECK(std::max(left, right) == 36);
  for (int a = 0; a < 6; ++a) {
    Perm pa = parse_cycles(h->basis()[a], 3), inv(3);
    for (int x = 0; x < 3; ++x) inv[pa[x]] = x;
    CHECK(h->antipode(a) == SparseVec{{*g->find(format_cycles(inv)), Scalar(1)}});
  }
}

TEST_CASE("axioms hold for the standard constructions") {
  for (const char* name : {"C2", "C6", "S3", "A4", "D8"}) {
    CHECK_MESSAGE(verify_axioms(*group_algebra(G(name))).ok(), name);
    CHECK_MESSAGE(verify_axioms(*dual_group_algebra(G(name))).ok(), name);
  }
  for (const char* name : {"C2", "C3", "S3"}) CHECK_MESSAGE(verify_axioms(*drinfeld_double(G(name))).ok(), name);
  CHECK(verify_axioms(*abelian_extension(bismash_s3_pair()).algebra).ok());
  CHECK(verify_axioms(*sweedler_algebra()).ok());
  CHECK(verify_axioms(*group_algebra(G("S3"), Field::prime(3))).ok());
  CHECK(verify_axioms(*drinfeld_double(G("S3"), Field::prime(2))).ok());
}

TEST_CASE("corrupting one structure constant breaks an axiom") {
  std::mt19937 rng(5);
  std::vector<HopfPtr> algebras{group_algebra(G("S3")), dual_group_algebra(G("C4")), sweedler_algebra(),
                                drinfeld_double(G("C2"))};
  for (const auto& h : algebras)
    for (int which = 0; which < 4; ++which)
      for (int t = 0; t < 5; ++t) CHECK(!verify_axioms(HopfAlgebra(corrupt(*h, rng, which))).ok());
}

TEST_CASE("duality") {
  for (const char* name : {"C3", "S3", "A4"}) {
    HopfPtr kg = group_algebra(G(name));
    HopfPtr kgd = dual(*kg);
    CHECK(same_structure(*kgd, *dual_group_algebra(G(name))));
    CHECK(same_structure(*dual(*kgd), *kg));
    CHECK(kgd->provenance()->kind == FactorKind::dual_group_algebra);
  }
  HopfPtr sw = sweedler_algebra();
  CHECK(verify_axioms(*dual(*sw)).ok());
  CHECK(same_structure(*dual(*dual(*sw)), *sw));
  HopfPtr d = drinfeld_double(G("S3"));
  CHECK(verify_axioms(*dual(*d)).ok());
}

TEST_CASE("Drinfeld doubles: dimension and (co)commutativity") {
  for (const char* name : {"C2", "C3", "V4", "S3"}) {
    auto g = G(name);
    HopfPtr d = drinfeld_double(g);
    CHECK(d->dim() == g->order() * g->order());
    bool abelian = true;
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b) abelian = abelian && g->mul(a, b) == g->mul(b, a);
    CHECK(commutative(*d) == abelian);
    CHECK(cocommutative(*d) == abelian);
  }
  HopfPtr b = abelian_extension(bismash_s3_pair()).algebra;
  CHECK(!commutative(*b));
  CHECK(cocommutative(*b));
}

TEST_CASE("abelian extensions come with an exact sequence") {
  for (const MatchedPair& mp : {drinfeld_double_pair(G("S3")), bismash_s3_pair(), drinfeld_double_pair(G("C2"))}) {
    AbelianExtension ext = abelian_extension(mp);
    CHECK(verify_morphism(ext.inclusion).ok);
    CHECK(verify_morphism(ext.projection).ok);
    ExactSequenceReport r = verify_exact_sequence(ext.inclusion, ext.projection);
    CHECK_MESSAGE(r.ok(), r.failure);
  }
}

TEST_CASE("incompatible matched pairs are rejected") {
  MatchedPair mp = bismash_s3_pair();
  mp.ract[1][1] = 0;  // no longer an action
  CHECK_THROWS_AS(abelian_extension(mp), DomainError);
  MatchedPair bad = bismash_s3_pair();
  bad.lact.pop_back();
  CHECK_THROWS(abelian_extension(bad));
}

TEST_CASE("semisimplicity by the trace form") {
  CHECK(is_semisimple(*group_algebra(G("S3"))));
  CHECK(is_semisimple(*dual_group_algebra(G("S3"))));
  HopfPtr sw = sweedler_algebra();
  CHECK(trace_radical(*sw).dim() == 2);  // J = span(x, gx)
  CHECK(!is_semisimple(*sw));
  CHECK(!is_cosemisimple(*sw));
}

TEST_CASE("grouplike basis elements") {
  CHECK(group_algebra(G("S3"))->grouplike_basis().size() == 6);
  CHECK(sweedler_algebra()->grouplike_basis().size() == 2);
  CHECK(dual_group_algebra(G("S3"))->grouplike_basis().empty());
}
