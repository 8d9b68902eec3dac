#include <doctest.h>

#include "hopfkit/io.hpp"

using namespace hopfkit;

namespace {

GroupPtr G(const std::string& name) { return std::make_shared<const FiniteGroup>(FiniteGroup::named(name)); }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

Json sweedler_json() { return hopf_to_json(*sweedler_algebra()); }

}  // namespace

TEST_CASE("hopf files round-trip byte for byte") {
  MatchedPair dd = drinfeld_double_pair(G("S3"));
  HopfPtr d = abelian_extension(dd).algebra;
  std::vector<HopfPtr> algebras{group_algebra(G("S3")),
                                dual_group_algebra(G("A4")),
                                d,
                                dual(*d),
                                abelian_extension(bismash_s3_pair()).algebra,
                                sweedler_algebra(),
                                group_algebra(G("C5"), Field::prime(3)),
                                quotient(d, extension_f_subalgebra(dd, *d, 1)).quotient};
  for (const auto& h : algebras) {
    std::string text = dump_json(hopf_to_json(*h));
    HopfPtr back = hopf_from_json(Json::parse(text));
    CHECK(same_structure(*back, *h));
    CHECK(back->basis() == h->basis());
    CHECK(back->field() == h->field());
    CHECK(dump_json(hopf_to_json(*back)) == text);
    CHECK(verify_axioms(*back).ok());
    CHECK(back->provenance().has_value() == h->provenance().has_value());
  }
}

TEST_CASE("the printer keeps short values on one line") {
  CHECK(dump_json(Json{{"length", 6}, {"lower", 5}, {"upper", 4}}) == "{\"length\":6,\"lower\":5,\"upper\":4}\n");
  Json big = Json::array();
  for (int i = 0; i < 40; ++i) big.push_back(Json::array({i, i, "1/1"}));
  std::string out = dump_json(Json{{"rows", big}});
  CHECK(out.find("\n    [0,0,\"1/1\"],\n") != std::string::npos);
}

TEST_CASE("malformed hopf files report a location") {
  Json j = sweedler_json();
  j.erase("unit");
  CHECK(error_of([&] { hopf_from_json(j, "f"); }) == "f: missing key \"unit\"");

  j = sweedler_json();
  j["mult"][3][2] = 9;
  CHECK(error_of([&] { hopf_from_json(j, "f"); }).find("f.mult[3][2]") == 0);

  j = sweedler_json();
  j["comult"][0][3] = "1/x";
  CHECK(error_of([&] { hopf_from_json(j, "f"); }).find("f.comult[0][3]") == 0);

  j = sweedler_json();
  j["mult"].push_back(j["mult"][0]);
  CHECK(error_of([&] { hopf_from_json(j, "f"); }).find("duplicate entry") != std::string::npos);

  j = sweedler_json();
  j["antipode"].erase(0);  // S(1) = 1 removed: row 0 of the matrix is empty
  CHECK(error_of([&] { hopf_from_json(j, "f"); }) == "f.antipode: row 0 is empty");

  j = sweedler_json();
  j["field"] = "GF(4)";
  CHECK(error_of([&] { hopf_from_json(j, "f"); }).find("f.field") == 0);

  j = sweedler_json();
  j["extra"] = 1;
  CHECK(error_of([&] { hopf_from_json(j, "f"); }) == "f: unknown key \"extra\"");

  j = sweedler_json();
  j["provenance"] = Json{{"kind", "group_algebra"}, {"group", {{"name", "C4"}}}};
  CHECK(error_of([&] { hopf_from_json(j, "f"); }).find("f.provenance") == 0);
}

TEST_CASE("a corrupted but well-formed file still loads and fails verification") {
  Json j = sweedler_json();
  j["mult"][0][3] = "2";
  HopfPtr h = hopf_from_json(j);
  CHECK(!verify_axioms(*h).ok());
}

TEST_CASE("group specs") {
  for (const char* name : {"S4", "A5", "C6", "V4", "D8"}) {
    GroupPtr g = G(name);
    Json j = group_to_json(*g);
    CHECK(j == Json{{"name", name}});
    CHECK(group_from_json(j)->table() == g->table());
  }
  GroupPtr p = group_from_json(Json{{"permutations", Json::array({Json::array({"(1 2)", "(1 2 3 4)"})})}});
  CHECK(p->order() == 24);
  CHECK(group_isomorphic(*p, *G("S4")));
  GroupPtr sub = std::make_shared<const FiniteGroup>(subgroup_group(*G("S4"), normal_subgroups(*G("S4"))[1]));
  Json t = group_to_json(*sub);
  GroupPtr back = group_from_json(t);
  CHECK(back->table() == sub->table());
  CHECK(group_to_json(*back) == t);
  CHECK(error_of([] { group_from_json(Json{{"table", {{0, 1}, {1, 1}}}}, "g"); }).find("g") == 0);
  CHECK(error_of([] { group_from_json(Json{{"name", "S9"}}, "g"); }).find("g") == 0);
  CHECK(error_of([] { parse_group_arg("Z7"); }).find("--group Z7") == 0);
}

TEST_CASE("matched pairs round-trip") {
  for (const MatchedPair& mp : {bismash_s3_pair(), drinfeld_double_pair(G("S3"))}) {
    Json j = matched_pair_to_json(mp);
    MatchedPair back = matched_pair_from_json(j);
    CHECK(matched_pair_to_json(back) == j);
    CHECK(same_structure(*abelian_extension(back).algebra, *abelian_extension(mp).algebra));
  }
  Json j = matched_pair_to_json(bismash_s3_pair());
  j["ract"][1][0] = 7;
  CHECK(error_of([&] { matched_pair_from_json(j, Field::rationals(), "m"); }).find("m.ract[1][0]") == 0);
  j = matched_pair_to_json(bismash_s3_pair());
  j["lact"] = "trivial";
  CHECK(matched_pair_from_json(j).lact == bismash_s3_pair().lact);
}

TEST_CASE("subobject and series specs") {
  GroupPtr g = G("S4");
  HopfPtr h = group_algebra(g);
  Source src{Source::Kind::group_algebra, g, std::nullopt};
  Subspace v4 = group_subalgebra(*h, normal_subgroups(*g)[1]);
  CHECK(subspace_from_json(Json{{"subgroup", {"(1 2)(3 4)", "(1 3)(2 4)"}}}, *h, src) == v4);
  CHECK(subspace_from_json(subspace_to_json(v4), *h, Source{}) == v4);
  CHECK(subspace_from_json("trivial", *h, src).dim() == 1);
  CHECK(subspace_from_json(Json{{"vectors", {{{"()", "1"}, {"(1 2)", "-1/2"}}}}}, *h, src).dim() == 1);
  CHECK(error_of([&] { subspace_from_json(Json{{"subgroup", {"(1 5)"}}}, *h, src, "s"); }).find("s.subgroup[0]") == 0);
  CHECK(error_of([&] { subspace_from_json(Json{{"subgroup", {"(1 2)"}}}, *h, Source{}, "s"); }).find("s.subgroup") ==
        0);
  CHECK(error_of([&] { subspace_from_json(Json{{"vectors", {{"1"}}}}, *h, src, "s"); }).find("s.vectors[0]") == 0);

  HopfPtr hd = dual_group_algebra(g);
  Source dsrc{Source::Kind::dual_group_algebra, g, std::nullopt};
  CHECK(subspace_from_json(Json{{"subgroup", {"(1 2)(3 4)", "(1 3)(2 4)"}}}, *hd, dsrc).dim() == 6);
  CHECK(error_of([&] { subspace_from_json(Json{{"subgroup", {"(1 2)"}}}, *hd, dsrc, "s"); }).find("normal") !=
        std::string::npos);

  MatchedPair mp = drinfeld_double_pair(G("S3"));
  HopfPtr d = abelian_extension(mp).algebra;
  Source esrc{Source::Kind::extension, nullptr, mp};
  CHECK(subspace_from_json(Json{{"subgroup", Json::array()}}, *d, esrc).dim() == 6);
  CHECK(subspace_from_json(Json{{"gamma_quotient", {"(1 2 3)"}}}, *d, esrc).dim() == 2);

  Json sj = {{"direction", "lower"}, {"chain", {"whole", {{"subgroup", {"(1 2)(3 4)", "(1 3)(2 4)"}}}, "trivial"}}};
  SubnormalSeries s = series_from_json(sj, *h, src);
  CHECK(s.chain.size() == 3);
  CHECK(s.chain[1] == v4);
  Json out = series_to_json(s);
  CHECK(dump_json(series_to_json(series_from_json(out, *h, Source{}))) == dump_json(out));
  CHECK(error_of([&] { series_from_json(Json{{"direction", "sideways"}, {"chain", sj["chain"]}}, *h, src, "q"); })
            .find("q.direction") == 0);
}
