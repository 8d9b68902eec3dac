// hopfkit command-line tool. Exit codes: 0 verified, 1 verification failed,
// 2 input or usage error.

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfkit/io.hpp"

namespace {

using namespace hopfkit;

struct Options {
  std::string file;
  std::string construction;
  std::string group;
  std::string matched_pair;
  std::string field = "Q";
  bool dual = false;
  std::vector<std::string> subs;
  std::string series_a, series_b;
  std::string report = "json";
  std::string output;
  bool all_branches = false;
  std::string chains;
};

struct Context {
  HopfPtr h;
  LatticePtr lattice;
  Source src;
};

struct Outcome {
  Json report;
  bool ok = true;
  bool raw = false;  // report is a file body, written verbatim
  std::string text;
};

Field parse_field(const std::string& s) { return field_from_json(Json(s), "--field"); }

GroupPtr need_group(const Options& o) {
  if (o.group.empty()) throw InputError("--group is required for this construction");
  return parse_group_arg(o.group);
}

Context build_context(const Options& o) {
  Context c;
  const Field f = parse_field(o.field);
  if (!o.file.empty() && !o.construction.empty()) throw InputError("give either a file or --construction, not both");
  if (!o.file.empty()) {
    c.h = read_hopf_file(o.file);
    if (auto g = recognize_group_algebra(*c.h)) {
      c.src = {Source::Kind::group_algebra, *g, std::nullopt};
    } else if (auto g2 = recognize_dual_group_algebra(*c.h)) {
      std::vector<std::string> labels = (*g2)->labels();
      bool prefixed = true;
      for (const auto& l : labels) prefixed = prefixed && l.rfind("e_", 0) == 0;
      if (prefixed)
        for (auto& l : labels) l = l.substr(2);
      auto g = std::make_shared<const FiniteGroup>(FiniteGroup::from_table((*g2)->table(), labels));
      c.src = {Source::Kind::dual_group_algebra, g, std::nullopt};
    }
    c.lattice = auto_lattice(c.h);
  } else {
    const std::string& k = o.construction;
    if (k.empty()) throw InputError("no algebra given: pass a .hopf.json file or --construction");
    if (k == "group-algebra") {
      GroupPtr g = need_group(o);
      c.h = group_algebra(g, f);
      c.lattice = group_lattice(c.h, g);
      c.src = {Source::Kind::group_algebra, g, std::nullopt};
    } else if (k == "dual-group-algebra") {
      GroupPtr g = need_group(o);
      c.h = dual_group_algebra(g, f);
      c.lattice = dual_group_lattice(c.h, g);
      c.src = {Source::Kind::dual_group_algebra, g, std::nullopt};
    } else if (k == "drinfeld-double" || k == "abelian-extension" || k == "bismash-s3") {
      MatchedPair mp;
      if (k == "drinfeld-double")
        mp = drinfeld_double_pair(need_group(o));
      else if (k == "bismash-s3")
        mp = bismash_s3_pair();
      else if (o.matched_pair.empty())
        throw InputError("abelian-extension needs --matched-pair FILE");
      else
        mp = matched_pair_from_json(read_json_file(o.matched_pair), f, o.matched_pair);
      AbelianExtension ext = abelian_extension(mp, f);
      c.h = ext.algebra;
      c.lattice = extension_lattice(mp, c.h);
      c.src = {Source::Kind::extension, nullptr, mp};
    } else if (k == "sweedler") {
      if (!f.is_rationals()) throw InputError("the Sweedler construction is defined over Q here");
      c.h = sweedler_algebra();
      c.lattice = auto_lattice(c.h);
    } else {
      throw InputError("unknown construction \"" + k +
                       "\" (group-algebra, dual-group-algebra, drinfeld-double, abelian-extension, bismash-s3, "
                       "sweedler)");
    }
  }
  if (o.dual) {
    c.lattice = dual_lattice(c.lattice);
    c.h = c.lattice->algebra();
    c.src = {};
  }
  return c;
}

std::vector<Subspace> read_subs(const Options& o, const Context& c, std::size_t count) {
  if (o.subs.size() != count)
    throw InputError("expected " + std::to_string(count) + " --sub file(s), got " + std::to_string(o.subs.size()));
  std::vector<Subspace> out;
  for (const auto& path : o.subs) out.push_back(subspace_from_json(read_json_file(path), *c.h, c.src, path));
  return out;
}

SubnormalSeries read_series(const std::string& path, const Context& c, const char* flag) {
  if (path.empty()) throw InputError(std::string(flag) + " is required");
  return series_from_json(read_json_file(path), *c.h, c.src, path);
}

Json certificate_json(const IsoCertificate& cert) {
  Json j;
  j["theorem"] = cert.theorem;
  j["verified"] = cert.verified;
  Json dims = Json::object();
  for (const auto& [k, v] : cert.dims) dims[k] = v;
  j["dims"] = dims;
  if (!cert.failure.empty()) j["witness"] = cert.failure;
  return j;
}

std::vector<int> chain_dims(const SubnormalSeries& s) {
  std::vector<int> d;
  for (const auto& t : s.chain) d.push_back(t.dim());
  return d;
}

Json series_report_json(const SubnormalSeries& s, const SeriesReport& r) {
  Json j;
  j["direction"] = to_string(s.direction);
  j["chain_dims"] = chain_dims(s);
  j["valid"] = r.valid;
  if (!r.valid) {
    j["failed_step"] = r.failed_step;
    j["witness"] = r.failure;
  }
  std::vector<Factor> nt = nontrivial(r.factors);
  j["factors"] = factors_to_json(nt);
  j["length"] = static_cast<int>(nt.size());
  j["dimension_law"] = r.dimension_law;
  if (!r.exact) j["lattice"] = "search-based";
  return j;
}

// ---------------------------------------------------------------- commands

Outcome cmd_verify(const Options& o) {
  Context c = build_context(o);
  AxiomReport r = verify_axioms(*c.h);
  Outcome out;
  out.report["dim"] = c.h->dim();
  out.report["field"] = field_to_json(c.h->field());
  Json axioms = Json::object();
  for (const auto& ch : r.checks) axioms[ch.name] = ch.passed;
  out.report["axioms"] = axioms;
  out.report["verified"] = r.ok();
  if (!r.ok()) out.report["witness"] = r.first_failure();
  out.ok = r.ok();
  return out;
}

Outcome cmd_build(const Options& o) {
  Context c = build_context(o);
  AxiomReport r = verify_axioms(*c.h);
  Outcome out;
  if (!r.ok()) {
    out.ok = false;
    out.report["verified"] = false;
    out.report["witness"] = r.first_failure();
    return out;
  }
  out.raw = true;
  out.text = dump_json(hopf_to_json(*c.h));
  return out;
}

Outcome cmd_factors(const Options& o) {
  Context c = build_context(o);
  Composition comp = composition_series(c.lattice);
  Outcome out;
  long long product = 1;
  bool simple = true;
  for (const auto& f : comp.factors) {
    product *= f.algebra->dim();
    simple = simple && f.simple;
  }
  out.report["dim"] = c.h->dim();
  out.report["lattice"] = c.lattice->name();
  out.report["exact"] = comp.exact;
  out.report["factors"] = factors_to_json(comp.factors);
  out.report["length"] = comp.length();
  bool ok = simple && product == c.h->dim();
  if (o.all_branches) {
    JordanHolderReport jh = jordan_holder_verify(c.lattice);
    out.report["branches"] = static_cast<int>(jh.branches.size());
    out.report["jordan_holder"] = to_string(jh.verdict);
    ok = ok && jh.verdict == Verdict::equivalent;
  }
  out.report["verified"] = ok;
  out.ok = ok;
  return out;
}

Outcome cmd_lengths(const Options& o) {
  Context c = build_context(o);
  Outcome out;
  out.report["length"] = length(c.lattice);
  out.report["lower"] = lower_length(c.lattice);
  out.report["upper"] = upper_length(c.lattice);
  return out;
}

Outcome cmd_series_verify(const Options& o) {
  Context c = build_context(o);
  SubnormalSeries s = read_series(o.series_a, c, "--series-a");
  SeriesReport r = verify_subnormal(c.lattice, s);
  Outcome out;
  out.report = series_report_json(s, r);
  if (r.valid && s.direction == Direction::lower) {
    LowerCheck lc = is_lower_composition_series(c.lattice, s);
    out.report["composition"] = lc.ok;
    if (!lc.ok) out.report["composition_witness"] = lc.failure;
  }
  out.report["verified"] = r.valid && r.dimension_law;
  out.ok = r.valid && r.dimension_law;
  return out;
}

Outcome cmd_refine(const Options& o) {
  Context c = build_context(o);
  SubnormalSeries a = read_series(o.series_a, c, "--series-a");
  SubnormalSeries b = read_series(o.series_b, c, "--series-b");
  SchreierResult r = schreier_refine(c.lattice, a, b);
  Outcome out;
  out.report["refinement_a"] = series_report_json(r.r1, r.report1);
  out.report["refinement_b"] = series_report_json(r.r2, r.report2);
  Json matches = Json::array();
  for (const auto& m : r.matches)
    matches.push_back(Json{{"i", m.i}, {"j", m.j}, {"dim", m.dim}, {"verified", m.verified}});
  out.report["matches"] = matches;
  out.report["verdict"] = to_string(r.verdict);
  out.report["verified"] = r.verified();
  out.ok = r.verified();
  return out;
}

Outcome cmd_butterfly(const Options& o) {
  Context c = build_context(o);
  std::vector<Subspace> s = read_subs(o, c, 4);
  ButterflyReport r = butterfly(c.h, s[0], s[1], s[2], s[3]);
  Outcome out;
  out.report["theorem"] = "butterfly";
  out.report["verified"] = r.ok();
  out.report["parts"] = Json{{"i", r.part_i}, {"ii", r.part_ii}, {"iii", r.part_iii}, {"iv", r.part_iv.verified}};
  Json dims = certificate_json(r.part_iv)["dims"];
  dims["A'(A∩B)"] = r.upper_a.dim();
  dims["A'(A∩B')"] = r.lower_a.dim();
  dims["B'(A∩B)"] = r.upper_b.dim();
  dims["B'(A'∩B)"] = r.lower_b.dim();
  out.report["dims"] = dims;
  if (!r.part_iv.failure.empty()) out.report["witness"] = r.part_iv.failure;
  out.ok = r.ok();
  return out;
}

Outcome cmd_iso(const std::string& which, const Options& o) {
  Context c = build_context(o);
  Outcome out;
  if (which == "first") {
    Subspace k = read_subs(o, c, 1)[0];
    if (!is_hopf_subalgebra(*c.h, k) || !is_normal(*c.h, k)) throw DomainError("--sub is not a normal Hopf subalgebra");
    QuotientHopf q = quotient(c.h, k);
    IsoCertificate cert = first_isomorphism(q.projection);
    out.report = certificate_json(cert);
    out.ok = cert.verified;
  } else if (which == "second") {
    std::vector<Subspace> s = read_subs(o, c, 2);
    IsoCertificate cert = second_isomorphism(c.h, s[0], s[1]);
    bool law = dim_formula_check(*c.h, s[0], s[1]);
    out.report = certificate_json(cert);
    out.report["dim_formula"] = law;
    out.ok = cert.verified && law;
    out.report["verified"] = out.ok;
  } else {
    std::vector<Subspace> s = read_subs(o, c, 2);
    auto [c1, c2] = third_isomorphism(c.h, s[0], s[1]);
    out.ok = c1.verified && c2.verified;
    out.report["theorem"] = "third";
    out.report["verified"] = out.ok;
    out.report["parts"] = Json::array({certificate_json(c1), certificate_json(c2)});
  }
  return out;
}

// Greedy generating set, written as labels; the same form --chains reads.
Json generators(const FiniteGroup& g, Mask m) {
  if (m == g.all()) return "whole";
  std::vector<int> gens;
  Mask got = generated_subgroup(g, {});
  for (int x : mask_elements(m))
    if (!(got >> x & 1)) {
      gens.push_back(x);
      got = generated_subgroup(g, gens);
    }
  Json out = Json::array();
  for (int x : gens) out.push_back(g.label(x));
  return out;
}

Json group_series_json(const FiniteGroup& g, const GroupSeries& s) {
  Json j;
  std::vector<int> orders;
  Json subs = Json::array();
  for (Mask m : s.chain) {
    orders.push_back(mask_size(m));
    subs.push_back(generators(g, m));
  }
  j["orders"] = orders;
  j["length"] = static_cast<int>(s.chain.size()) - 1;
  if (s.kind != GroupSeries::Kind::maximal_chain) {
    Json factors = Json::array();
    for (const auto& f : series_factors(g, s)) factors.push_back(f.display_name());
    j["factors"] = factors;
  }
  j["subgroups"] = subs;
  return j;
}

Outcome cmd_group(const std::string& which, const Options& o) {
  GroupPtr g = need_group(o);
  Outcome out;
  std::vector<GroupSeries> all = which == "composition" ? composition_series_group(*g)
                                 : which == "chief"     ? chief_series_group(*g)
                                                        : maximal_subgroup_chains(*g);
  out.report["group"] = g->display_name();
  out.report["order"] = g->order();
  out.report["count"] = static_cast<int>(all.size());
  std::set<int> lengths;
  for (const auto& s : all) lengths.insert(static_cast<int>(s.chain.size()) - 1);
  out.report["lengths"] = std::vector<int>(lengths.begin(), lengths.end());
  if (which == "chief") {
    bool cs = true;
    for (const auto& s : all)
      for (const auto& f : series_factors(*g, s)) cs = cs && is_characteristically_simple(f);
    out.report["factors_characteristically_simple"] = cs;
    out.ok = cs;
  }
  if (!o.chains.empty()) {
    // Each listed chain is given outermost first by generators; "whole" is G.
    Json spec = read_json_file(o.chains);
    const Json& list = spec.contains("chains") ? spec["chains"] : spec;
    if (!list.is_array()) throw InputError(o.chains + ": expected an array of chains");
    Json found = Json::array();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string w = o.chains + ": chains[" + std::to_string(i) + "]";
      if (!list[i].is_array()) throw InputError(w + ": expected an array of subgroups");
      std::vector<Mask> chain;
      for (std::size_t t = 0; t < list[i].size(); ++t) {
        const Json& term = list[i][t];
        if (term == "whole") {
          chain.push_back(g->all());
          continue;
        }
        if (!term.is_array()) throw InputError(w + "[" + std::to_string(t) + "]: expected generator labels");
        std::vector<int> gens;
        for (const auto& l : term) {
          auto e = l.is_string() ? g->find(l.get<std::string>()) : std::nullopt;
          if (!e) throw InputError(w + "[" + std::to_string(t) + "]: unknown element " + l.dump());
          gens.push_back(*e);
        }
        chain.push_back(generated_subgroup(*g, gens));
      }
      bool hit = false;
      for (const auto& s : all) hit = hit || s.chain == chain;
      Json e;
      std::vector<int> orders;
      for (Mask m : chain) orders.push_back(mask_size(m));
      e["orders"] = orders;
      e["length"] = static_cast<int>(chain.size()) - 1;
      e["found"] = hit;
      found.push_back(e);
      out.ok = out.ok && hit;
    }
    out.report["listed"] = found;
  }
  Json series = Json::array();
  for (const auto& s : all) series.push_back(group_series_json(*g, s));
  out.report["series"] = series;
  out.report["verified"] = out.ok;
  return out;
}

// Sample files shipped with the tool.
std::vector<std::pair<std::string, std::string>> fixture_files() {
  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back("sweedler.hopf.json", dump_json(hopf_to_json(*sweedler_algebra())));
  files.emplace_back("a5.group.json", dump_json(group_to_json(FiniteGroup::named("A5"))));
  files.emplace_back("a5_chains.json",
                     dump_json(Json{{"chains",
                                     {Json::array({"whole", {"(1 2 3)", "(1 2)(4 5)"}, {"(1 2 3)"}, Json::array()}),
                                      Json::array({"whole",
                                                   {"(1 2 3)", "(1 2)(3 4)"},
                                                   {"(1 2)(3 4)", "(1 4)(2 3)"},
                                                   {"(1 2)(3 4)"},
                                                   Json::array()})}}}));
  files.emplace_back("s4.group.json", dump_json(group_to_json(FiniteGroup::named("S4"))));
  files.emplace_back("s4_v4.sub.json", dump_json(Json{{"subgroup", {"(1 2)(3 4)", "(1 3)(2 4)"}}}));
  files.emplace_back("s4_a4.sub.json", dump_json(Json{{"subgroup", {"(1 2 3)", "(1 2)(3 4)"}}}));
  files.emplace_back("s4_via_v4.series.json",
                     dump_json(Json{{"direction", "lower"},
                                    {"chain", {"whole", {{"subgroup", {"(1 2)(3 4)", "(1 3)(2 4)"}}}, "trivial"}}}));
  files.emplace_back("s4_via_a4.series.json",
                     dump_json(Json{{"direction", "lower"},
                                    {"chain", {"whole", {{"subgroup", {"(1 2 3)", "(1 2)(3 4)"}}}, "trivial"}}}));
  files.emplace_back("bismash_s3.mp.json", dump_json(matched_pair_to_json(bismash_s3_pair())));
  return files;
}

Outcome cmd_fixtures(const Options& o) {
  const std::string dir = o.output.empty() ? "." : o.output;
  std::filesystem::create_directories(dir);
  Outcome out;
  Json written = Json::array();
  for (const auto& [name, body] : fixture_files()) {
    write_text_file((std::filesystem::path(dir) / name).string(), body);
    written.push_back(name);
  }
  out.report["directory"] = dir;
  out.report["written"] = written;
  return out;
}

// ---------------------------------------------------------------- output

std::string text_report(const Json& j, const std::string& command, double seconds) {
  std::vector<std::pair<std::string, std::string>> rows{{"command", command}};
  for (auto it = j.begin(); it != j.end(); ++it)
    rows.emplace_back(it.key(), it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  std::ostringstream t;
  t << std::fixed << std::setprecision(3) << seconds << " s";
  rows.emplace_back("elapsed", t.str());
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfkit: exact computations with finite-dimensional Hopf algebras"};
  app.require_subcommand(1);
  Options o;

  auto algebra_opts = [&](CLI::App* s) {
    s->add_option("file", o.file, "a .hopf.json file");
    s->add_option("--hopf", o.file, "a .hopf.json file");
    s->add_option("--construction", o.construction,
                  "group-algebra, dual-group-algebra, drinfeld-double, abelian-extension, bismash-s3, sweedler");
    s->add_option("--group", o.group, "group name such as S4, or a .group.json file");
    s->add_option("--matched-pair", o.matched_pair, "a .mp.json file");
    s->add_option("--field", o.field, "Q or GF(p)");
    s->add_flag("--dual", o.dual, "work with the dual Hopf algebra");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--report", o.report, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("-o,--output", o.output, "write the result to this file");
  };

  std::string command;
  std::string variant;
  auto* verify = app.add_subcommand("verify", "check the Hopf algebra axioms");
  algebra_opts(verify);
  common(verify);
  auto* build = app.add_subcommand("build", "write a construction as .hopf.json");
  build->add_option("construction", o.construction, "construction name");
  build->add_option("--group", o.group, "group name or .group.json file");
  build->add_option("--matched-pair", o.matched_pair, "a .mp.json file");
  build->add_option("--field", o.field, "Q or GF(p)");
  build->add_flag("--dual", o.dual, "write the dual instead");
  common(build);
  auto* factors = app.add_subcommand("factors", "composition factors");
  algebra_opts(factors);
  common(factors);
  factors->add_flag("--all-branches", o.all_branches, "compare every first choice of normal subalgebra");
  auto* lengths = app.add_subcommand("lengths", "length, lower length and upper length");
  algebra_opts(lengths);
  common(lengths);
  auto* sv = app.add_subcommand("series-verify", "check a lower or upper subnormal series");
  algebra_opts(sv);
  common(sv);
  sv->add_option("--series-a", o.series_a, "a .series.json file");
  auto* refine = app.add_subcommand("refine", "Schreier refinement of two lower series");
  algebra_opts(refine);
  common(refine);
  refine->add_option("--series-a", o.series_a, "a .series.json file");
  refine->add_option("--series-b", o.series_b, "a .series.json file");
  auto* bfly = app.add_subcommand("butterfly", "Zassenhaus lemma for --sub A --sub A' --sub B --sub B'");
  algebra_opts(bfly);
  common(bfly);
  bfly->add_option("--sub", o.subs, "a .sub.json file");
  auto* iso = app.add_subcommand("iso", "isomorphism theorems");
  iso->require_subcommand(1);
  for (const char* name : {"first", "second", "third"}) {
    auto* s = iso->add_subcommand(name, std::string(name) + " isomorphism theorem");
    algebra_opts(s);
    common(s);
    s->add_option("--sub", o.subs, "a .sub.json file");
  }
  auto* grp = app.add_subcommand("group", "series of a finite group");
  grp->require_subcommand(1);
  for (const char* name : {"composition", "chief", "maximal-chains"}) {
    auto* s = grp->add_subcommand(name, std::string(name) + " series");
    s->add_option("--group", o.group, "group name or .group.json file")->required();
    s->add_option("--chains", o.chains, "chains to look up, by generators");
    common(s);
  }
  auto* fixtures = app.add_subcommand("fixtures", "write the bundled sample files into -o DIR");
  fixtures->add_option("-o,--output", o.output, "target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  Outcome out;
  try {
    CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (sub == verify) {
      out = cmd_verify(o);
    } else if (sub == build) {
      out = cmd_build(o);
    } else if (sub == factors) {
      out = cmd_factors(o);
    } else if (sub == lengths) {
      out = cmd_lengths(o);
    } else if (sub == sv) {
      out = cmd_series_verify(o);
    } else if (sub == refine) {
      out = cmd_refine(o);
    } else if (sub == bfly) {
      out = cmd_butterfly(o);
    } else if (sub == iso) {
      variant = iso->get_subcommands().front()->get_name();
      out = cmd_iso(variant, o);
    } else if (sub == grp) {
      variant = grp->get_subcommands().front()->get_name();
      out = cmd_group(variant, o);
    } else {
      out = cmd_fixtures(o);
      o.output.clear();
    }
  } catch (const InternalError& e) {
    std::cerr << "hopfkit: inconsistent data: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "hopfkit: error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "hopfkit: error: " << e.what() << "\n";
    return 2;
  }
  if (!variant.empty()) command += " " + variant;
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::string body;
  if (out.raw)
    body = out.text;
  else if (o.report == "text")
    body = text_report(out.report, command, seconds);
  else
    body = dump_json(out.report);
  try {
    if (o.output.empty())
      std::cout << body;
    else
      write_text_file(o.output, body);
  } catch (const Error& e) {
    std::cerr << "hopfkit: error: " << e.what() << "\n";
    return 2;
  }
  return out.ok ? 0 : 1;
}
