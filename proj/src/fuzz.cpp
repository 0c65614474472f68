#include "weakhopf/fuzz.hpp"

#include <random>

#include "weakhopf/groups.hpp"
#include "weakhopf/interact.hpp"
#include "weakhopf/zoo.hpp"

namespace weakhopf {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Scalar nonzero_delta(std::mt19937_64& rng, Field f) {
  if (!f.is_rational()) return Scalar(f, static_cast<std::int64_t>(1 + pick(rng, f.characteristic() - 1)));
  std::int64_t v = static_cast<std::int64_t>(1 + pick(rng, 3));
  return Scalar(f, pick(rng, 2) ? v : -v);
}

// entries (row, col) of m where pred holds
template <class Pred>
std::vector<std::pair<std::size_t, std::size_t>> support(const Mat& m, Pred pred) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (pred(r, c)) out.emplace_back(r, c);
  return out;
}

void record(CorruptionTrial& t, const CheckReport& r) {
  for (const auto& it : r.items()) {
    if (it.pass) continue;
    t.failures.push_back(it.id);
    if (t.caught_by.empty() && it.witness && it.residual) {
      t.caught_by = it.id;
      t.witness = *it.witness;
    }
  }
}

}  // namespace

const char* corruption_name(Corruption c) {
  switch (c) {
    case Corruption::Mult: return "mult";
    case Corruption::Unit: return "unit";
    case Corruption::Comult: return "comult";
    case Corruption::Counit: return "counit";
    case Corruption::Antipode: return "antipode";
  }
  return "?";
}

std::vector<NamedHopf> fuzz_pool() {
  Field q = Field::rationals();
  auto c = [](unsigned n) { return FiniteGroupTable::cyclic(n); };
  std::vector<NamedHopf> pool;
  pool.push_back({"kC2", build_group_algebra(c(2), q)});
  pool.push_back({"kC3", build_group_algebra(c(3), q)});
  pool.push_back({"kS3", build_group_algebra(FiniteGroupTable::symmetric(3), q)});
  pool.push_back({"H^C2", build_HG(c(2), q)});
  pool.push_back({"H^C3 over F7", build_HG(c(3), Field::prime(7))});
  pool.push_back({"k(C2+C3)", build_groupoid_algebra({c(2), c(3)}, q)});
  pool.push_back({"k(C1+C1+C2)", build_groupoid_algebra({c(1), c(1), c(2)}, q)});
  pool.push_back({"Kaplansky(kC2)", build_kaplansky(build_group_algebra(c(2), q))});
  pool.push_back({"dual(H^C2)", build_dual(build_HG(c(2), q))});
  pool.push_back({"kC2 + H^C2", build_disjoint_union({build_group_algebra(c(2), q), build_HG(c(2), q)})});
  return pool;
}

std::vector<CorruptionTrial> run_corruption_trials(std::uint64_t seed, std::size_t trials) {
  return run_corruption_trials(seed, trials, fuzz_pool());
}

std::vector<CorruptionTrial> run_corruption_trials(std::uint64_t seed, std::size_t trials,
                                                   const std::vector<NamedHopf>& pool) {
  std::mt19937_64 rng(seed);
  std::vector<CorruptionTrial> out;
  for (std::size_t n = 0; n < trials; ++n) {
    const NamedHopf& inst = pool[pick(rng, pool.size())];
    WeakHopfAlgebra h = inst.h;
    WeakBialgebra& wb = h.wb;
    std::size_t d = wb.dim();
    Field f = wb.field();
    CorruptionTrial t;
    t.instance = inst.name;
    t.target = static_cast<Corruption>(pick(rng, 5));
    std::vector<std::pair<std::size_t, std::size_t>> sup;
    Mat* m = nullptr;
    switch (t.target) {
      case Corruption::Mult:
        // e_i e_j with unit coefficient u_i != 0 feeds the left unit axiom
        m = &wb.alg.mult;
        sup = support(*m, [&](std::size_t, std::size_t c) { return !wb.alg.unit(c / d, 0).is_zero(); });
        break;
      case Corruption::Unit:
        m = &wb.alg.unit;
        sup = support(*m, [](std::size_t, std::size_t) { return true; });
        break;
      case Corruption::Comult:
        // component e_j (x) e_k of Delta(e_i) with eps(e_j) != 0 feeds the left counit axiom
        m = &wb.coalg.comult;
        sup = support(*m, [&](std::size_t r, std::size_t) { return !wb.coalg.counit(0, r / d).is_zero(); });
        break;
      case Corruption::Counit:
        m = &wb.coalg.counit;
        sup = support(*m, [](std::size_t, std::size_t) { return true; });
        break;
      case Corruption::Antipode:
        m = &h.antipode;
        sup = support(*m, [](std::size_t, std::size_t) { return true; });
        break;
    }
    auto [r, c] = sup[pick(rng, sup.size())];
    Scalar delta = nonzero_delta(rng, f);
    (*m)(r, c) = (*m)(r, c) + delta;
    t.row = r;
    t.col = c;
    t.delta = delta.to_string();
    record(t, check_weak_bialgebra(wb));
    record(t, verify_antipode(wb, h.antipode));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<CandidateTrial> run_candidate_trials(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  Field q = Field::rationals();
  WeakHopfAlgebra base = build_groupoid_algebra({FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(3)}, q);
  StructurePtr h = share(base.wb);
  std::size_t d = base.dim();
  // group-like lambdas are characters of the components; z candidates are sums of component units
  std::vector<std::size_t> units = {0, 2};
  std::vector<CandidateTrial> out;
  for (std::size_t n = 0; n < trials; ++n) {
    CandidateTrial t;
    bool lambda = pick(rng, 2) == 0;
    t.kind = lambda ? "lambda" : "z";
    Mat v(q, d, 1);
    if (pick(rng, 2) == 0) {
      // near-genuine: a valid candidate with possibly one entry perturbed
      if (lambda) {
        std::size_t comp = pick(rng, 2);
        if (comp == 0) v(0, 0) = v(1, 0) = Scalar(q, 1);
        else v(2, 0) = v(3, 0) = v(4, 0) = Scalar(q, 1);
      } else {
        for (std::size_t u : units)
          if (pick(rng, 2)) v(u, 0) = Scalar(q, 1);
      }
      if (pick(rng, 2)) {
        std::size_t i = pick(rng, d);
        v(i, 0) = v(i, 0) + Scalar(q, static_cast<std::int64_t>(pick(rng, 3)) - 1);
      }
    } else {
      for (std::size_t i = 0; i < d; ++i) v(i, 0) = Scalar(q, static_cast<std::int64_t>(pick(rng, 3)) - 1);
    }
    for (std::size_t i = 0; i < d; ++i) t.values.push_back(v(i, 0).to_string());
    if (lambda) {
      Mat lam = v.transpose();
      t.violation = lambda_violation(base.wb, lam);
      t.checker_passes = check_module_algebra(lambda_action_unchecked(h, h, lam)).all_passed();
    } else {
      t.violation = z_violation(base.wb, v);
      t.checker_passes = check_comodule_coalgebra(z_coaction_unchecked(h, h, v)).all_passed();
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace weakhopf
