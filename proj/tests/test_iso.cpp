#include <doctest.h>

#include <random>

#include "hopfkit/iso_theorems.hpp"
#include "oracles.hpp"

using namespace hopfkit;

namespace {

GroupPtr G(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::named(name)); }

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

}  // namespace

TEST_CASE("first isomorphism theorem for every quotient of kS4 and kD8") {
  for (const char* name : {"S4", "D8"}) {
    auto g = G(name);
    HopfPtr h = group_algebra(g);
    for (Mask n : normal_subgroups(*g)) {
      QuotientHopf q = quotient(h, group_subalgebra(*h, n));
      IsoCertificate c = first_isomorphism(q.projection);
      CHECK_MESSAGE(c.verified, c.failure);
      CHECK(c.dims["K"] == mask_size(n));
    }
  }
}

TEST_CASE("factorization through a quotient exists iff K lies in the coinvariants") {
  auto g = G("S4");
  HopfPtr h = group_algebra(g);
  auto normals = normal_subgroups(*g);
  QuotientHopf by_a4 = quotient(h, group_subalgebra(*h, normals[2]));
  for (Mask n : subgroups(*g)) {
    Subspace k = group_subalgebra(*h, n);
    bool inside = (n & ~normals[2]) == 0;
    if (inside && !is_normal_subgroup(*g, n)) {
      CHECK_THROWS_AS(factor_through(k, by_a4.projection), DomainError);
      continue;
    }
    FactorThrough f = factor_through(k, by_a4.projection);
    CHECK(f.exists == inside);
    if (inside) CHECK(f.verified);
    if (!inside) CHECK(!f.witness.empty());
  }
}

TEST_CASE("second isomorphism theorem over all normalizing subgroup pairs") {
  for (const char* name : {"S4", "D8", "D12"}) {
    auto g = G(name);
    HopfPtr h = group_algebra(g);
    auto subs = subgroups(*g);
    int checked = 0;
    for (Mask a : subs)
      for (Mask b : subs) {
        if (!group_normalizes(*g, a, b)) continue;
        Subspace ka = group_subalgebra(*h, a), kb = group_subalgebra(*h, b);
        IsoCertificate c = second_isomorphism(h, ka, kb);
        CHECK_MESSAGE(c.verified, c.failure);
        CHECK(dim_formula_check(*h, ka, kb));
        auto ab = oracle::product_set(g->table(), as_set(a), as_set(b));
        CHECK(c.dims["AB"] == static_cast<int>(ab.size()));
        CHECK(c.dims["A∩B"] == mask_size(a & b));
        ++checked;
      }
    CHECK(checked > 0);
  }
  auto s3 = G("S3");
  HopfPtr h = group_algebra(s3);
  Mask t1 = generated_subgroup(*s3, {*s3->find("(1 2)")}), t2 = generated_subgroup(*s3, {*s3->find("(1 3)")});
  CHECK_THROWS_AS(second_isomorphism(h, group_subalgebra(*h, t1), group_subalgebra(*h, t2)), DomainError);
}

TEST_CASE("isomorphism theorems inside a Drinfeld double") {
  MatchedPair mp = drinfeld_double_pair(G("S3"));
  HopfPtr d = abelian_extension(mp).algebra;
  LatticePtr p = extension_lattice(mp, d);
  const auto& members = p->normal_subalgebras();
  REQUIRE(members.size() > 2);
  for (const auto& a : members)
    for (const auto& b : members) {
      IsoCertificate c = second_isomorphism(d, a, b);
      CHECK_MESSAGE(c.verified, c.failure);
      CHECK(dim_formula_check(*d, a, b));
      if (a.contains(b)) {
        auto [c1, c2] = third_isomorphism(d, a, b);
        CHECK_MESSAGE(c1.verified, c1.failure);
        CHECK_MESSAGE(c2.verified, c2.failure);
      }
    }
}

TEST_CASE("third isomorphism theorem on (kS4, kA4, kV4)") {
  auto g = G("S4");
  HopfPtr h = group_algebra(g);
  auto n = normal_subgroups(*g);
  auto [c1, c2] = third_isomorphism(h, group_subalgebra(*h, n[2]), group_subalgebra(*h, n[1]));
  CHECK(c1.verified);
  CHECK(c2.verified);
  CHECK(c1.lhs->dim() == 2);
  CHECK(c2.lhs->dim() == 3);
  CHECK_THROWS_AS(third_isomorphism(h, group_subalgebra(*h, n[1]), group_subalgebra(*h, n[2])), DomainError);
}

TEST_CASE("maximality from a simple quotient") {
  auto g = G("S4");
  HopfPtr h = group_algebra(g);
  LatticePtr p = group_lattice(h, g);
  auto n = normal_subgroups(*g);
  CHECK(maximality_from_simple_quotient(p, group_subalgebra(*h, n[2])) == MaximalityVerdict::verified);
  CHECK(maximality_from_simple_quotient(p, group_subalgebra(*h, n[1])) == MaximalityVerdict::not_applicable);
}

TEST_CASE("butterfly lemma on random quadruples of subgroups") {
  std::mt19937 rng(21);
  for (const char* name : {"S4", "D8"}) {
    auto g = G(name);
    HopfPtr h = group_algebra(g);
    auto subs = subgroups(*g);
    std::vector<std::pair<Mask, Mask>> pairs;  // (X, X') with X' normal in X
    for (Mask x : subs)
      for (Mask y : subs)
        if ((y & ~x) == 0 && is_normal_in(*g, y, x)) pairs.emplace_back(x, y);
    for (int t = 0; t < 12; ++t) {
      auto [a, a1] = pairs[rng() % pairs.size()];
      auto [b, b1] = pairs[rng() % pairs.size()];
      ButterflyReport r = butterfly(h, group_subalgebra(*h, a), group_subalgebra(*h, a1), group_subalgebra(*h, b),
                                    group_subalgebra(*h, b1));
      CHECK_MESSAGE(r.ok(), r.part_iv.failure);
      // (iii) against the group oracle: (A'∩B)(A∩B') as a set
      auto mid = oracle::product_set(g->table(), as_set(a1 & b), as_set(a & b1));
      CHECK(r.middle.dim() == static_cast<int>(mid.size()));
    }
  }
}
