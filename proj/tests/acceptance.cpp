#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pair_oracle.hpp"
#include "weakhopf/fuzz.hpp"
#include "weakhopf/groups.hpp"
#include "weakhopf/integrals.hpp"
#include "weakhopf/io.hpp"
#include "weakhopf/smash.hpp"
#include "weakhopf/zoo.hpp"

using namespace weakhopf;
using oracle::Num;

namespace {

Field Q = Field::rationals();
FiniteGroupTable C(std::size_t n) { return FiniteGroupTable::cyclic(n); }
FiniteGroupTable G(const char* s) { return FiniteGroupTable::parse(s); }

// Collects the first few failed expectations of one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void report(const std::string& what, const CheckReport& r) {
    std::vector<std::string> f = r.failures();
    expect(f.empty(), what + (f.empty() ? "" : " fails " + f.front()));
  }
  const std::vector<std::string>& failures() const { return failures_; }
  std::size_t checks() const { return checks_; }

 private:
  std::vector<std::string> failures_;
  std::size_t checks_ = 0;
};

MatchedPairData load(const std::string& name) {
  return pair_from_json(read_json_file(std::string(PAIRS_DIR) + "/" + name), PAIRS_DIR);
}

struct Fixtures {
  MatchedPairData hg_c2 = load("hg_c2.json");
  MatchedPairData hg_c2xc2 = load("hg_c2xc2.json");
  MatchedPairData lambda_z = load("lambda_z.json");
  MatchedPairData kaplansky = load("kaplansky.json");
  SmashData s_hg_c2 = build_smash(hg_c2);
  SmashData s_hg_c2xc2 = build_smash(hg_c2xc2);
  SmashData s_lambda_z = build_smash(lambda_z);
  SmashData s_kaplansky = build_smash(kaplansky);

  std::vector<std::pair<std::string, const SmashData*>> criterion_pairs() const {
    return {{"hg_c2", &s_hg_c2}, {"hg_c2xc2", &s_hg_c2xc2}, {"lambda_z", &s_lambda_z}};
  }
  std::vector<std::pair<std::string, const SmashData*>> all_smashes() const {
    auto v = criterion_pairs();
    v.emplace_back("kaplansky", &s_kaplansky);
    return v;
  }
};

std::vector<std::pair<std::string, WeakHopfAlgebra>> zoo() {
  std::vector<std::pair<std::string, WeakHopfAlgebra>> z;
  for (const char* g : {"C1", "C2", "C3", "C4", "C2xC2"}) {
    z.emplace_back(std::string("HG ") + g + " over Q", build_HG(G(g), Q));
    z.emplace_back(std::string("HG ") + g + " over F5", build_HG(G(g), Field::prime(5)));
    z.emplace_back(std::string("HG ") + g + " over F7", build_HG(G(g), Field::prime(7)));
    z.emplace_back(std::string("group ") + g, build_group_algebra(G(g), Q));
  }
  z.emplace_back("group S3", build_group_algebra(FiniteGroupTable::symmetric(3), Q));
  z.emplace_back("groupoid C2+C3", build_groupoid_algebra({C(2), C(3)}, Q));
  z.emplace_back("groupoid C4+C2xC2", build_groupoid_algebra({C(4), G("C2xC2")}, Q));
  z.emplace_back("groupoid C1+C2+C3+C2", build_groupoid_algebra({C(1), C(2), C(3), C(2)}, Q));
  z.emplace_back("groupoid S3+C2", build_groupoid_algebra({FiniteGroupTable::symmetric(3), C(2)}, Q));
  z.emplace_back("groupoid C2+C3 over F5", build_groupoid_algebra({C(2), C(3)}, Field::prime(5)));
  z.emplace_back("union HG C2 + kC3", build_disjoint_union({build_HG(C(2), Q), build_group_algebra(C(3), Q)}));
  z.emplace_back("union HG C2 + HG C3 + Kaplansky kC2",
                 build_disjoint_union({build_HG(C(2), Q), build_HG(C(3), Q), build_kaplansky(build_group_algebra(C(2), Q))}));
  z.emplace_back("Kaplansky kC2", build_kaplansky(build_group_algebra(C(2), Q)));
  z.emplace_back("Kaplansky kC2 over F7", build_kaplansky(build_group_algebra(C(2), Field::prime(7))));
  return z;
}

void zoo_validation(Tally& t, const Fixtures&) {
  for (const auto& [name, h] : zoo()) {
    t.report(name + " weak bialgebra", check_weak_bialgebra(h.wb));
    t.report(name + " antipode", verify_antipode(h.wb, h.antipode));
    t.report(name + " identities", identity_suite(h.wb, h.antipode));
    t.expect(oracle::first_violation(oracle::from_library(h.wb, &h.antipode), true).empty(),
             name + " reference axiom check");
  }
}

void hopf_coherence(Tally& t, const Fixtures&) {
  for (const auto& [name, h] : zoo()) {
    HopfCriterion hc = hopf_criterion(h);
    t.expect(hc.agree, name + " conditions disagree");
    bool single_group = name.rfind("group ", 0) == 0;
    bool multi = name.rfind("groupoid", 0) == 0;
    if (single_group) t.expect(hc.is_hopf(), name + " should be Hopf");
    if (multi) t.expect(!hc.conditions[0] && hc.agree, name + " should not be Hopf");
  }
  t.expect(!hopf_criterion(build_HG(C(2), Q)).conditions[0], "HG C2 should not be Hopf");
}

void integrals(Tally& t, const Fixtures&) {
  for (const char* g : {"C1", "C2", "C3", "C4", "C2xC2"}) {
    WeakHopfAlgebra h = build_HG(G(g), Q);
    t.expect(integral_space(h.wb).dim() == G(g).order(), std::string("dim of integrals of HG ") + g);
    MaschkeResult m = maschke_semisimple(h.wb);
    t.expect(m.semisimple && m.witness && eps_t(h.wb) * *m.witness == h.wb.alg.unit,
             std::string("HG ") + g + " semisimple witness");
    if (m.witness) t.expect(is_left_integral(h.wb, *m.witness), std::string("HG ") + g + " witness is an integral");
  }
  for (const WeakHopfAlgebra& base : {build_group_algebra(C(2), Q), build_group_algebra(C(3), Q),
                                      build_group_algebra(FiniteGroupTable::symmetric(3), Q), build_HG(C(1), Q)}) {
    t.expect(integral_space(build_kaplansky(base).wb).dim() == integral_space(base.wb).dim() + 1,
             "Kaplansky integrals gain one dimension");
  }
  std::vector<WeakHopfAlgebra> parts = {build_HG(C(2), Q), build_group_algebra(C(3), Q),
                                        build_kaplansky(build_group_algebra(C(2), Q))};
  WeakHopfAlgebra u = build_disjoint_union(parts);
  IntegralSpace iu = integral_space(u.wb);
  std::vector<std::size_t> off = block_offsets(parts);
  Mat sum(Q, u.dim(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    IntegralSpace ip = integral_space(parts[i].wb);
    Mat emb(Q, u.dim(), ip.dim());
    for (std::size_t c = 0; c < ip.dim(); ++c)
      for (std::size_t r = 0; r < parts[i].dim(); ++r) emb(off[i] + r, c) = ip.basis(r, c);
    sum = sum.hconcat(emb);
  }
  t.expect(sum.cols() == iu.dim() && rank(sum) == iu.dim() && rank(sum.hconcat(iu.basis)) == iu.dim(),
           "integrals of a disjoint union are the direct sum");
}

void matched_pairs(Tally& t, const Fixtures& fx) {
  for (const auto& [name, mp] : std::vector<std::pair<std::string, const MatchedPairData*>>{
           {"hg_c2", &fx.hg_c2}, {"hg_c2xc2", &fx.hg_c2xc2}}) {
    CheckReport r = check_weak_matched_pair(*mp);
    t.report(name + " weak matched pair", r);
    for (const char* id : {"module_algebra", "comodule_coalgebra", "coaction_action_exchange", "source_of_action",
                           "coaction_of_unit"})
      t.expect(r.passed(id), name + " " + id);
    t.expect(check_abelian(*mp).abelian(), name + " abelian");
    t.report(name + " compatible", check_compatible(*mp));
  }
  t.report("lambda_z weak matched pair", check_weak_matched_pair(fx.lambda_z));
  t.report("lambda_z compatible", check_compatible(fx.lambda_z));

  // a random λ on k(C2∪C3) that fails multiplicativity
  WeakHopfAlgebra g = build_groupoid_algebra({C(2), C(3)}, Q);
  StructurePtr p = share(g.wb);
  std::mt19937_64 rng(20240613);
  Mat lam(Q, 1, 5);
  std::string violation;
  for (int tries = 0; tries < 1000 && violation != "lambda(h)lambda(k) = lambda(hk)"; ++tries) {
    for (std::size_t i = 0; i < 5; ++i) lam(0, i) = Scalar(Q, static_cast<std::int64_t>(rng() % 2));
    violation = lambda_violation(g.wb, lam);
  }
  t.expect(violation == "lambda(h)lambda(k) = lambda(hk)", "found a non-multiplicative lambda");
  bool rejected = false;
  try {
    make_lambda_action(p, p, lam);
  } catch (const Error& e) {
    rejected = e.code() == Errc::InvalidLambda;
  }
  t.expect(rejected, "make_lambda_action rejects the fuzzed lambda");
  t.expect(!check_module_algebra(lambda_action_unchecked(p, p, lam)).all_passed(),
           "forced fuzzed lambda fails the module algebra check");
}

void generator_formulas(Tally& t, const std::string& name, const SmashData& sd) {
  oracle::PairOracle o(sd.mp);
  std::size_t dh = o.dh, n = sd.ambient_dim(), d = sd.dim();
  Mat PP = kron(sd.p, sd.p);
  auto product = [&](const Mat& u, const Mat& v) {
    std::vector<Num> r(n, Num(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (u(i, 0).is_zero() || v(j, 0).is_zero()) continue;
        Num c = oracle::from_scalar(u(i, 0)) * oracle::from_scalar(v(j, 0));
        std::vector<Num> pr = o.product(i / dh, i % dh, j / dh, j % dh);
        for (std::size_t k = 0; k < n; ++k) r[k] += c * pr[k];
      }
    return oracle::to_col(r);
  };
  bool mult_ok = true, comult_ok = true, counit_ok = true;
  for (std::size_t i = 0; i < d; ++i) {
    Mat bi = sd.basis.col(i);
    for (std::size_t j = 0; j < d; ++j) {
      Mat induced = sd.basis * (sd.sub->alg.mult * kron(Mat::unit_column(Q, d, i), Mat::unit_column(Q, d, j)));
      mult_ok = mult_ok && induced == sd.p * product(bi, sd.basis.col(j));
    }
    std::vector<Num> cop(n * n, Num(0));
    for (std::size_t k = 0; k < n; ++k) {
      if (bi(k, 0).is_zero()) continue;
      std::vector<Num> ck = o.coproduct(k / dh, k % dh);
      for (std::size_t m = 0; m < n * n; ++m) cop[m] += oracle::from_scalar(bi(k, 0)) * ck[m];
    }
    comult_ok = comult_ok && kron(sd.basis, sd.basis) * sd.sub->coalg.comult.col(i) == PP * oracle::to_col(cop);
  }
  // ε agrees with the formula on every representative of every class
  for (std::size_t x = 0; x < o.da; ++x)
    for (std::size_t h = 0; h < dh; ++h) {
      Mat c = sd.coords(sd.p * Mat::unit_column(Q, n, x * dh + h));
      counit_ok = counit_ok && oracle::from_scalar((sd.sub->coalg.counit * c)(0, 0)) == o.counit(x, h);
    }
  t.expect(mult_ok, name + " induced product matches the generator formula");
  t.expect(comult_ok, name + " induced coproduct matches the generator formula");
  t.expect(counit_ok, name + " counit is well defined across representatives");
}

void subspace(Tally& t, const Fixtures& fx) {
  for (const auto& [name, sd] : fx.criterion_pairs()) {
    t.expect(sd->p * sd->p == sd->p, name + " P^2 = P");
    t.expect(sd->sub.has_value(), name + " subspace extracted");
    t.report(name + " subspace weak bialgebra", check_weak_bialgebra(*sd->sub));
    t.report(name + " projection and formula identities", check_smash_bialgebra(*sd));
    generator_formulas(t, name, *sd);
  }
}

void antipode(Tally& t, const Fixtures& fx) {
  for (const auto& [name, sd] : fx.criterion_pairs()) {
    t.report(name + " antipode conditions", check_antipode_conditions(*sd));
    t.expect(sd->antipode.has_value(), name + " antipode built");
    if (sd->antipode) t.report(name + " antipode", verify_antipode(*sd->sub, *sd->antipode));
  }
  const WeakBialgebra& hg = *fx.s_hg_c2.sub;
  t.expect(!(hg.coalg.comult * hg.alg.unit == kron(hg.alg.unit, hg.alg.unit)), "HG C2 smash has Delta(1) != 1(x)1");
  HopfCriterion no = hopf_criterion(fx.s_hg_c2.hopf());
  t.expect(no.agree && !no.is_hopf(), "HG C2 smash is not Hopf");
  HopfCriterion yes = hopf_criterion(fx.s_lambda_z.hopf());
  bool all = true;
  for (bool c : yes.conditions) all = all && c;
  t.expect(all, "lambda_z smash satisfies every Hopf condition");
}

void quantitative(Tally& t, const Fixtures& fx) {
  const SmashData& sd = fx.s_hg_c2;
  t.expect(sd.dim() == 2, "HG C2 smash has dimension 2");
  FiniteGroupTable g = C(2), gg = direct_product(g, g);
  std::vector<std::size_t> anti;
  for (std::size_t x = 0; x < 2; ++x) anti.push_back(x * 2 + g.inverse(x));
  WeakHopfAlgebra q = build_HG(group_quotient(gg, anti), Q);
  t.expect(q.dim() == sd.dim() && is_commutative(q.wb) == is_commutative(*sd.sub) &&
               is_cocommutative(q.wb) == is_cocommutative(*sd.sub) &&
               integral_space(q.wb).dim() == integral_space(*sd.sub).dim(),
           "HG C2 smash invariants match the quotient group");

  // {xz # λ(h_1)h_2} spans the λ/z smash
  const SmashData& lz = fx.s_lambda_z;
  const MatchedPairData& mp = fx.lambda_z;
  std::size_t da = mp.a().dim(), dh = mp.h().dim();
  Mat z = Mat::unit_column(Q, da, 2), lambda(Q, 1, dh);
  lambda(0, 0) = lambda(0, 1) = Scalar(Q, 1);
  Mat right_by_z = mp.a().alg.mult * kron(Mat::identity(Q, da), z);
  Mat lambda_split = kron(lambda, Mat::identity(Q, dh)) * mp.h().coalg.comult;
  Mat span = kron(right_by_z, lambda_split);
  std::size_t dim_az = rank(right_by_z), dim_hl = rank(lambda_split);
  t.expect(rank(span) == lz.dim() && rank(span.hconcat(lz.basis)) == lz.dim(), "lambda_z smash is the span");
  t.expect(lz.dim() == dim_az * dim_hl, "lambda_z smash has dimension dim(Az) dim(H_lambda)");

  // Kaplansky extensions of kC2 acting on kC3: the smash is that of the base pair
  const SmashData& k = fx.s_kaplansky;
  std::size_t base = (fx.kaplansky.a().dim() - 1) * (fx.kaplansky.h().dim() - 1);
  t.expect(base == 6 && k.dim() == base, "Kaplansky smash has dimension dim A dim H");
}

void integral_condition(Tally& t, const Fixtures& fx) {
  const SmashData& sd = fx.s_lambda_z;
  IntegralSpace ia = integral_space(sd.mp.a()), ih = integral_space(sd.mp.h()), is = integral_space(*sd.sub);
  for (std::size_t i = 0; i < ia.dim(); ++i)
    for (std::size_t j = 0; j < ih.dim(); ++j) {
      Mat alpha = ia.basis.col(i), tt = ih.basis.col(j);
      t.report("integral condition", check_cond_int(sd, alpha, tt));
      Mat c = smash_integral(sd, alpha, tt);
      t.expect(is_left_integral(*sd.sub, c) && rank(is.basis.hconcat(c)) == is.dim(),
               "alpha##t is a left integral of the smash");
    }
  for (const auto& [name, s] : fx.all_smashes()) {
    SmashSemisimplicity r = smash_semisimple_criterion(*s);
    t.expect(r.agree(), name + " semisimplicity criterion agrees with the direct test");
    t.expect(r.direct == maschke_semisimple(*s->sub).semisimple, name + " direct test");
  }
}

void duality(Tally& t, const Fixtures& fx) {
  const MatchedPairData& mp = fx.hg_c2;
  MatchedPairData d = build_dual_matched_pair(mp);
  t.expect(d.mirrored(), "dual pair is mirrored");
  t.report("dual pair", check_weak_matched_pair(d));
  t.expect(d.co.coact == mp.act.act.transpose() && d.act.act.transpose() == mp.co.coact,
           "dual action and coaction transpose back");
  for (const WeakBialgebra* wb : {&mp.h(), &mp.a()}) {
    WeakBialgebra dd = build_dual(build_dual(*wb));
    t.expect(dd.alg.mult == wb->alg.mult && dd.alg.unit == wb->alg.unit && dd.coalg.comult == wb->coalg.comult &&
                 dd.coalg.counit == wb->coalg.counit,
             "double dual constants equal the originals");
  }
  WeakHopfAlgebra k = build_kaplansky(build_group_algebra(C(3), Q));
  WeakHopfAlgebra dk = build_dual(build_dual(k));
  t.expect(oracle::same_constants(dk, k), "double dual of Kaplansky kC3");
}

void fuzz(Tally& t, const Fixtures&) {
  std::vector<NamedHopf> pool = fuzz_pool();
  std::vector<CorruptionTrial> trials = run_corruption_trials(1, 200, pool);
  t.expect(trials.size() == 200, "200 trials");
  for (const auto& tr : trials) {
    std::string label = tr.instance + " " + corruption_name(tr.target) + " entry " + std::to_string(tr.row) + "," +
                        std::to_string(tr.col);
    t.expect(tr.caught() && !tr.witness.empty(), label + " not caught with a witness");
    const NamedHopf* inst = nullptr;
    for (const auto& p : pool)
      if (p.name == tr.instance) inst = &p;
    if (!inst) continue;
    WeakHopfAlgebra h = inst->h;
    Mat* m = nullptr;
    switch (tr.target) {
      case Corruption::Mult: m = &h.wb.alg.mult; break;
      case Corruption::Unit: m = &h.wb.alg.unit; break;
      case Corruption::Comult: m = &h.wb.coalg.comult; break;
      case Corruption::Counit: m = &h.wb.coalg.counit; break;
      case Corruption::Antipode: m = &h.antipode; break;
    }
    (*m)(tr.row, tr.col) = (*m)(tr.row, tr.col) + Scalar::parse(h.field(), tr.delta);
    t.expect(!oracle::first_violation(oracle::from_library(h.wb, &h.antipode), true).empty(),
             label + " is not a genuine violation");
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Tally&, const Fixtures&)>>> criteria = {
      {"zoo validation", zoo_validation},
      {"Hopf criterion coherence", hopf_coherence},
      {"integrals", integrals},
      {"matched pairs", matched_pairs},
      {"smash subspace and formulas", subspace},
      {"smash antipode", antipode},
      {"smash dimensions and spans", quantitative},
      {"integrals of smash products", integral_condition},
      {"duality", duality},
      {"corruption fuzzing", fuzz},
  };
  std::optional<Fixtures> fx;
  std::string setup_error;
  try {
    fx.emplace();
  } catch (const std::exception& e) {
    setup_error = e.what();
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    std::string err = setup_error;
    if (err.empty()) {
      try {
        criteria[i].second(t, *fx);
      } catch (const std::exception& e) {
        err = e.what();
      }
    }
    bool ok = err.empty() && t.failures().empty();
    failed += !ok;
    std::printf("%s criterion %zu: %s (%zu checks)", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), t.checks());
    if (!err.empty()) std::printf(": error %s", err.c_str());
    else if (!ok) std::printf(": %s", t.failures().front().c_str());
    std::printf("\n");
  }
  return failed == 0 ? 0 : 1;
}
