#include "hopfkit/constructions.hpp"

#include <algorithm>

namespace hopfkit {

HopfPtr group_algebra(const GroupPtr& g, const Field& f) {
  const int n = g->order();
  HopfData d;
  d.field = f;
  d.dim = n;
  d.basis = g->labels();
  d.mult.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.mult[a * n + b] = {{g->mul(a, b), Scalar(1)}};
  d.unit = {{g->identity(), Scalar(1)}};
  d.comult.resize(n);
  d.antipode.resize(n);
  for (int a = 0; a < n; ++a) {
    d.comult[a] = {{a * n + a, Scalar(1)}};
    d.counit.push_back({a, Scalar(1)});
    d.antipode[a] = {{g->inv(a), Scalar(1)}};
  }
  d.provenance = FactorTag::group_algebra(g);
  return make_hopf(std::move(d));
}

HopfPtr dual_group_algebra(const GroupPtr& g, const Field& f) {
  const int n = g->order();
  HopfData d;
  d.field = f;
  d.dim = n;
  for (const auto& l : g->labels()) d.basis.push_back("e_" + l);
  d.mult.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) d.mult[a * n + a] = {{a, Scalar(1)}};
  for (int a = 0; a < n; ++a) d.unit.push_back({a, Scalar(1)});
  d.comult.resize(n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) d.comult[g->mul(s, t)].push_back({s * n + t, Scalar(1)});
  d.counit = {{g->identity(), Scalar(1)}};
  d.antipode.resize(n);
  for (int a = 0; a < n; ++a) d.antipode[a] = {{g->inv(a), Scalar(1)}};
  d.provenance = FactorTag::dual_group_algebra(g);
  return make_hopf(std::move(d));
}

namespace {

Scalar sigma_of(const MatchedPair& mp, int g, int x, int y) {
  return mp.sigma.empty() ? Scalar(1) : mp.sigma[g][x][y];
}

Scalar tau_of(const MatchedPair& mp, int x, int g, int h) { return mp.tau.empty() ? Scalar(1) : mp.tau[x][g][h]; }

}  // namespace

void validate_matched_pair(const MatchedPair& mp) {
  if (!mp.F || !mp.Gamma) throw InputError("matched pair needs both groups");
  const int nf = mp.F->order(), ng = mp.Gamma->order();
  auto check_table = [&](const std::vector<std::vector<int>>& t, int range, const char* what) {
    if (static_cast<int>(t.size()) != ng) throw InputError(std::string(what) + " must have one row per element of Gamma");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != nf) throw InputError(std::string(what) + " rows must have one entry per element of F");
      for (int v : row)
        if (v < 0 || v >= range) throw InputError(std::string(what) + " entry out of range");
    }
  };
  check_table(mp.lact, nf, "lact");
  check_table(mp.ract, ng, "ract");
  const int ef = mp.F->identity(), eg = mp.Gamma->identity();
  if (!mp.sigma.empty()) {
    if (static_cast<int>(mp.sigma.size()) != ng) throw InputError("sigma must be indexed by Gamma");
    for (int g = 0; g < ng; ++g) {
      if (static_cast<int>(mp.sigma[g].size()) != nf) throw InputError("sigma[g] must be indexed by F");
      for (int x = 0; x < nf; ++x) {
        if (static_cast<int>(mp.sigma[g][x].size()) != nf) throw InputError("sigma[g][x] must be indexed by F");
        for (int y = 0; y < nf; ++y)
          if (mp.sigma[g][x][y].is_zero()) throw DomainError("sigma takes the value 0");
        if (!mp.sigma[g][x][ef].is_one() || !mp.sigma[g][ef][x].is_one())
          throw DomainError("sigma is not normalized at g = " + mp.Gamma->label(g) + ", x = " + mp.F->label(x));
      }
    }
  }
  if (!mp.tau.empty()) {
    if (static_cast<int>(mp.tau.size()) != nf) throw InputError("tau must be indexed by F");
    for (int x = 0; x < nf; ++x) {
      if (static_cast<int>(mp.tau[x].size()) != ng) throw InputError("tau[x] must be indexed by Gamma");
      for (int g = 0; g < ng; ++g) {
        if (static_cast<int>(mp.tau[x][g].size()) != ng) throw InputError("tau[x][g] must be indexed by Gamma");
        for (int h = 0; h < ng; ++h)
          if (mp.tau[x][g][h].is_zero()) throw DomainError("tau takes the value 0");
        if (!mp.tau[x][g][eg].is_one() || !mp.tau[x][eg][g].is_one())
          throw DomainError("tau is not normalized at x = " + mp.F->label(x) + ", g = " + mp.Gamma->label(g));
      }
    }
  }
}

HopfPtr abelian_extension_algebra(const MatchedPair& mp, const Field& f) {
  validate_matched_pair(mp);
  const FiniteGroup& F = *mp.F;
  const FiniteGroup& G = *mp.Gamma;
  const int nf = F.order(), ng = G.order(), n = nf * ng;
  auto idx = [&](int g, int x) { return g * nf + x; };
  HopfData d;
  d.field = f;
  d.dim = n;
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nf; ++x) d.basis.push_back("e_" + G.label(g) + "#" + F.label(x));
  d.mult.resize(static_cast<std::size_t>(n) * n);
  // (e_g # x)(e_h # y) = δ_{g◁x, h} σ_g(x, y) e_g # xy
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nf; ++x) {
      int h = mp.ract[g][x];
      for (int y = 0; y < nf; ++y)
        d.mult[static_cast<std::size_t>(idx(g, x)) * n + idx(h, y)] = {
            {idx(g, F.mul(x, y)), f.from_rational(sigma_of(mp, g, x, y))}};
    }
  for (int g = 0; g < ng; ++g) d.unit.push_back({idx(g, F.identity()), Scalar(1)});
  // Δ(e_g # x) = Σ_{st=g} τ_x(s, t) e_s # (t ▷ x) ⊗ e_t # x
  d.comult.resize(n);
  for (int s = 0; s < ng; ++s)
    for (int t = 0; t < ng; ++t) {
      int g = G.mul(s, t);
      for (int x = 0; x < nf; ++x)
        d.comult[idx(g, x)].push_back(
            {idx(s, mp.lact[t][x]) * n + idx(t, x), f.from_rational(tau_of(mp, x, s, t))});
    }
  for (int x = 0; x < nf; ++x) d.counit.push_back({idx(G.identity(), x), Scalar(1)});
  // S(e_g # x) = σ_{(g◁x)⁻¹}((g▷x)⁻¹, g▷x)⁻¹ τ_x(g⁻¹, g)⁻¹ e_{(g◁x)⁻¹} # (g▷x)⁻¹
  d.antipode.resize(n);
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nf; ++x) {
      int gx = G.inv(mp.ract[g][x]);
      int fx = mp.lact[g][x];
      Scalar c = f.mul(f.from_rational(sigma_of(mp, gx, F.inv(fx), fx)), f.from_rational(tau_of(mp, x, G.inv(g), g)));
      d.antipode[idx(g, x)] = {{idx(gx, F.inv(fx)), f.inv(c)}};
    }
  return make_hopf(std::move(d));
}

AbelianExtension abelian_extension(const MatchedPair& mp, const Field& f) {
  HopfPtr h = abelian_extension_algebra(mp, f);
  AxiomReport rep = verify_axioms(*h);
  if (!rep.ok()) throw DomainError("incompatible matched pair data: " + rep.first_failure());
  const int nf = mp.F->order(), ng = mp.Gamma->order();
  HopfPtr kgamma = dual_group_algebra(mp.Gamma, f);
  HopfPtr kf = group_algebra(mp.F, f);
  LinearMap inc{ng, h->dim(), {}};
  for (int g = 0; g < ng; ++g) inc.columns.push_back(unit_vector(extension_index(mp, g, mp.F->identity())));
  LinearMap proj{h->dim(), nf, std::vector<SparseVec>(h->dim())};
  for (int x = 0; x < nf; ++x) proj.columns[extension_index(mp, mp.Gamma->identity(), x)] = unit_vector(x);
  return {mp, h, {kgamma, h, std::move(inc)}, {h, kf, std::move(proj)}};
}

MatchedPair drinfeld_double_pair(const GroupPtr& g) {
  MatchedPair mp;
  mp.F = g;
  mp.Gamma = g;
  const int n = g->order();
  mp.lact.assign(n, std::vector<int>(n));
  mp.ract.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      mp.lact[a][x] = x;
      mp.ract[a][x] = g->mul(g->mul(g->inv(x), a), x);
    }
  return mp;
}

HopfPtr drinfeld_double(const GroupPtr& g, const Field& f) {
  return abelian_extension(drinfeld_double_pair(g), f).algebra;
}

MatchedPair bismash_s3_pair() {
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::named("S3"));
  Mask a3 = generated_subgroup(*s3, {*s3->find("(1 2 3)")});
  Mask c2 = generated_subgroup(*s3, {*s3->find("(1 2)")});
  auto gamma = std::make_shared<const FiniteGroup>(subgroup_group(*s3, a3));
  auto f = std::make_shared<const FiniteGroup>(subgroup_group(*s3, c2));
  std::vector<int> ge = mask_elements(a3), fe = mask_elements(c2);
  MatchedPair mp;
  mp.F = f;
  mp.Gamma = gamma;
  mp.lact.assign(ge.size(), std::vector<int>(fe.size()));
  mp.ract.assign(ge.size(), std::vector<int>(fe.size()));
  for (std::size_t g = 0; g < ge.size(); ++g)
    for (std::size_t x = 0; x < fe.size(); ++x) {
      mp.lact[g][x] = static_cast<int>(x);
      int conj = s3->mul(s3->mul(s3->inv(fe[x]), ge[g]), fe[x]);
      mp.ract[g][x] = static_cast<int>(std::find(ge.begin(), ge.end(), conj) - ge.begin());
    }
  return mp;
}

namespace {

std::vector<int> positions(Mask m, int order) {
  std::vector<int> pos(order, -1);
  int k = 0;
  for (int e : mask_elements(m)) pos[e] = k++;
  return pos;
}

}  // namespace

bool is_ract_stable(const MatchedPair& mp, Mask gamma_sub) {
  for (int g : mask_elements(gamma_sub))
    for (int x = 0; x < mp.F->order(); ++x)
      if (!(gamma_sub >> mp.ract[g][x] & 1)) return false;
  return true;
}

std::vector<std::vector<int>> gamma_action_on_f(const MatchedPair& mp) { return mp.lact; }

MatchedPair restrict_f(const MatchedPair& mp, Mask f_sub) {
  if (!is_gamma_stable(f_sub, mp.lact)) throw DomainError("subgroup of F is not Gamma-stable");
  std::vector<int> fe = mask_elements(f_sub), pos = positions(f_sub, mp.F->order());
  MatchedPair out;
  out.F = std::make_shared<const FiniteGroup>(subgroup_group(*mp.F, f_sub));
  out.Gamma = mp.Gamma;
  const int ng = mp.Gamma->order(), nf = static_cast<int>(fe.size());
  out.lact.assign(ng, std::vector<int>(nf));
  out.ract.assign(ng, std::vector<int>(nf));
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nf; ++x) {
      out.lact[g][x] = pos[mp.lact[g][fe[x]]];
      out.ract[g][x] = mp.ract[g][fe[x]];
    }
  if (!mp.sigma.empty()) {
    out.sigma.assign(ng, std::vector<std::vector<Scalar>>(nf, std::vector<Scalar>(nf)));
    for (int g = 0; g < ng; ++g)
      for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y) out.sigma[g][x][y] = mp.sigma[g][fe[x]][fe[y]];
  }
  if (!mp.tau.empty()) {
    out.tau.resize(nf);
    for (int x = 0; x < nf; ++x) out.tau[x] = mp.tau[fe[x]];
  }
  return out;
}

MatchedPair restrict_gamma(const MatchedPair& mp, Mask gamma_sub) {
  if (!is_ract_stable(mp, gamma_sub)) throw DomainError("subgroup of Gamma is not stable under the right action");
  std::vector<int> ge = mask_elements(gamma_sub), pos = positions(gamma_sub, mp.Gamma->order());
  MatchedPair out;
  out.F = mp.F;
  out.Gamma = std::make_shared<const FiniteGroup>(subgroup_group(*mp.Gamma, gamma_sub));
  const int ng = static_cast<int>(ge.size()), nf = mp.F->order();
  out.lact.assign(ng, std::vector<int>(nf));
  out.ract.assign(ng, std::vector<int>(nf));
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nf; ++x) {
      out.lact[g][x] = mp.lact[ge[g]][x];
      out.ract[g][x] = pos[mp.ract[ge[g]][x]];
    }
  if (!mp.sigma.empty())
    for (int g : ge) out.sigma.push_back(mp.sigma[g]);
  if (!mp.tau.empty()) {
    out.tau.assign(nf, std::vector<std::vector<Scalar>>(ng, std::vector<Scalar>(ng)));
    for (int x = 0; x < nf; ++x)
      for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) out.tau[x][g][h] = mp.tau[x][ge[g]][ge[h]];
  }
  return out;
}

HopfPtr sweedler_algebra() {
  // basis 1, g, x, gx
  HopfData d;
  d.field = Field::rationals();
  d.dim = 4;
  d.basis = {"1", "g", "x", "gx"};
  d.mult.resize(16);
  auto set = [&](int i, int j, int k, long long c) { d.mult[i * 4 + j] = {{k, Scalar(c)}}; };
  for (int a = 0; a < 4; ++a) {
    set(0, a, a, 1);
    set(a, 0, a, 1);
  }
  set(1, 1, 0, 1);
  set(1, 2, 3, 1);
  set(1, 3, 2, 1);
  set(2, 1, 3, -1);
  set(3, 1, 2, -1);
  d.unit = {{0, Scalar(1)}};
  d.comult = {{{0, Scalar(1)}},
              {{1 * 4 + 1, Scalar(1)}},
              {{1 * 4 + 2, Scalar(1)}, {2 * 4 + 0, Scalar(1)}},
              {{0 * 4 + 3, Scalar(1)}, {3 * 4 + 1, Scalar(1)}}};
  d.counit = {{0, Scalar(1)}, {1, Scalar(1)}};
  d.antipode = {{{0, Scalar(1)}}, {{1, Scalar(1)}}, {{3, Scalar(-1)}}, {{2, Scalar(1)}}};
  return make_hopf(std::move(d));
}

Subspace group_subalgebra(const HopfAlgebra& kg, Mask n) {
  std::vector<SparseVec> rows;
  for (int e : mask_elements(n)) rows.push_back(unit_vector(e));
  return Subspace::from_rref(kg.field(), kg.dim(), std::move(rows));
}

Subspace dual_group_quotient_subalgebra(const FiniteGroup& g, const HopfAlgebra& kg_dual, Mask s) {
  std::vector<int> coset = coset_index(g, s);
  int k = g.order() / mask_size(s);
  std::vector<SparseVec> rows(k);
  for (int x = 0; x < g.order(); ++x) rows[coset[x]].push_back({x, Scalar(1)});
  return Subspace::from_rref(kg_dual.field(), kg_dual.dim(), std::move(rows));
}

Subspace extension_gamma_subalgebra(const MatchedPair& mp, const HopfAlgebra& h, Mask s) {
  std::vector<int> coset = coset_index(*mp.Gamma, s);
  int k = mp.Gamma->order() / mask_size(s);
  std::vector<SparseVec> rows(k);
  for (int g = 0; g < mp.Gamma->order(); ++g)
    rows[coset[g]].push_back({extension_index(mp, g, mp.F->identity()), Scalar(1)});
  return Subspace::span(h.field(), h.dim(), rows);
}

Subspace extension_f_subalgebra(const MatchedPair& mp, const HopfAlgebra& h, Mask f_sub) {
  std::vector<SparseVec> rows;
  for (int g = 0; g < mp.Gamma->order(); ++g)
    for (int x : mask_elements(f_sub)) rows.push_back(unit_vector(extension_index(mp, g, x)));
  return Subspace::from_rref(h.field(), h.dim(), std::move(rows));
}

Subspace extension_subspace(const MatchedPair& mp, const HopfAlgebra& h, Mask s, Mask n) {
  std::vector<int> coset = coset_index(*mp.Gamma, s);
  const int k = mp.Gamma->order() / mask_size(s);
  std::vector<SparseVec> rows;
  for (int x : mask_elements(n)) {
    std::vector<SparseVec> block(k);
    for (int g = 0; g < mp.Gamma->order(); ++g) block[coset[g]].push_back({extension_index(mp, g, x), Scalar(1)});
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return Subspace::span(h.field(), h.dim(), rows);
}

}  // namespace hopfkit
