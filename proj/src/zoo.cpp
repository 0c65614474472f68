#include "weakhopf/zoo.hpp"

namespace weakhopf {

namespace {

WeakHopfAlgebra empty_structure(Field f, std::size_t n) {
  WeakHopfAlgebra h;
  h.wb.alg = {n, Mat(f, n, n * n), Mat(f, n, 1)};
  h.wb.coalg = {n, Mat(f, n * n, n), Mat(f, 1, n)};
  h.antipode = Mat(f, n, n);
  return h;
}

}  // namespace

WeakHopfAlgebra build_groupoid_algebra(const GroupoidSpec& g, Field f) {
  if (g.empty()) throw Error(Errc::BadParams, "groupoid needs at least one component");
  std::size_t n = 0;
  for (const auto& c : g) n += c.order();
  WeakHopfAlgebra h = empty_structure(f, n);
  Scalar one(f, 1);
  std::size_t off = 0;
  for (std::size_t ci = 0; ci < g.size(); ++ci) {
    const auto& c = g[ci];
    for (std::size_t a = 0; a < c.order(); ++a) {
      std::size_t i = off + a;
      for (std::size_t b = 0; b < c.order(); ++b) h.wb.alg.mult(off + c.mul(a, b), i * n + off + b) = one;
      h.wb.coalg.comult(i * n + i, i) = one;
      h.wb.coalg.counit(0, i) = one;
      h.antipode(off + c.inverse(a), i) = one;
      std::string label = c.labels()[a];
      h.wb.labels.push_back(g.size() == 1 ? label : label + "@" + std::to_string(ci + 1));
    }
    h.wb.alg.unit(off + c.identity(), 0) = one;
    off += c.order();
  }
  return h;
}

WeakHopfAlgebra build_group_algebra(const FiniteGroupTable& g, Field f) { return build_groupoid_algebra({g}, f); }

WeakHopfAlgebra build_HG(const FiniteGroupTable& g, Field f) {
  if (!g.abelian()) throw Error(Errc::NotAbelian, "the averaged coproduct needs an abelian group");
  std::size_t n = g.order();
  if (!f.is_rational() && n % f.characteristic() == 0)
    throw Error(Errc::BadCharacteristic,
                "characteristic " + std::to_string(f.characteristic()) + " divides |G| = " + std::to_string(n));
  WeakHopfAlgebra h = empty_structure(f, n);
  Scalar one(f, 1);
  Scalar avg = Scalar(f, static_cast<std::int64_t>(n)).inv();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      h.wb.alg.mult(g.mul(a, b), a * n + b) = one;
      h.wb.coalg.comult(g.mul(a, b) * n + g.inverse(b), a) += avg;
    }
    h.antipode(a, a) = one;
  }
  h.wb.alg.unit(g.identity(), 0) = one;
  h.wb.coalg.counit(0, g.identity()) = Scalar(f, static_cast<std::int64_t>(n));
  h.wb.labels = g.labels();
  return h;
}

std::vector<std::size_t> block_offsets(const std::vector<WeakHopfAlgebra>& parts) {
  std::vector<std::size_t> off;
  std::size_t o = 0;
  for (const auto& p : parts) {
    off.push_back(o);
    o += p.dim();
  }
  return off;
}

WeakHopfAlgebra build_disjoint_union(const std::vector<WeakHopfAlgebra>& parts) {
  if (parts.empty()) throw Error(Errc::BadParams, "union needs at least one part");
  Field f = parts.front().field();
  std::size_t n = 0;
  for (const auto& p : parts) {
    if (!(p.field() == f)) throw Error(Errc::FieldMismatch, "union parts over different fields");
    n += p.dim();
  }
  WeakHopfAlgebra h = empty_structure(f, n);
  auto offs = block_offsets(parts);
  for (std::size_t pi = 0; pi < parts.size(); ++pi) {
    const auto& p = parts[pi];
    std::size_t m = p.dim();
    std::size_t o = offs[pi];
    for (std::size_t a = 0; a < m; ++a) {
      h.wb.alg.unit(o + a, 0) = p.wb.alg.unit(a, 0);
      h.wb.coalg.counit(0, o + a) = p.wb.coalg.counit(0, a);
      for (std::size_t b = 0; b < m; ++b) {
        h.antipode(o + b, o + a) = p.antipode(b, a);
        for (std::size_t c = 0; c < m; ++c) {
          h.wb.alg.mult(o + c, (o + a) * n + o + b) = p.wb.alg.mult(c, a * m + b);
          h.wb.coalg.comult((o + b) * n + o + c, o + a) = p.wb.coalg.comult(b * m + c, a);
        }
      }
      std::string label = p.wb.labels.empty() ? std::to_string(a) : p.wb.labels[a];
      h.wb.labels.push_back(parts.size() == 1 ? label : label + "@" + std::to_string(pi + 1));
    }
  }
  return h;
}

WeakHopfAlgebra build_kaplansky(const WeakHopfAlgebra& base) {
  if (!hopf_criterion(base).is_hopf()) throw Error(Errc::NotHopf, "adjoining a unit needs a Hopf algebra");
  Field f = base.field();
  std::size_t m = base.dim();
  std::size_t n = m + 1;
  std::size_t u = m;  // the new unit
  WeakHopfAlgebra h = empty_structure(f, n);
  Scalar one(f, 1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      h.antipode(b, a) = base.antipode(b, a);
      for (std::size_t c = 0; c < m; ++c) {
        h.wb.alg.mult(c, a * n + b) = base.wb.alg.mult(c, a * m + b);
        h.wb.coalg.comult(b * n + c, a) = base.wb.coalg.comult(b * m + c, a);
      }
    }
    h.wb.alg.mult(a, u * n + a) = one;
    h.wb.alg.mult(a, a * n + u) = one;
    h.wb.coalg.counit(0, a) = base.wb.coalg.counit(0, a);
  }
  h.wb.alg.mult(u, u * n + u) = one;
  h.wb.alg.unit(u, 0) = one;
  h.wb.coalg.counit(0, u) = Scalar(f, 2);
  h.antipode(u, u) = one;
  // Δ(1') = (1'-e)⊗(1'-e) + e⊗e
  std::vector<Scalar> d(n, Scalar(f)), e(n, Scalar(f));
  for (std::size_t a = 0; a < m; ++a) {
    e[a] = base.wb.alg.unit(a, 0);
    d[a] = -e[a];
  }
  d[u] = one;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.wb.coalg.comult(a * n + b, u) = d[a] * d[b] + e[a] * e[b];
  for (std::size_t a = 0; a < m; ++a) h.wb.labels.push_back(base.wb.labels.empty() ? std::to_string(a) : base.wb.labels[a]);
  h.wb.labels.push_back("1'");
  return h;
}

WeakBialgebra build_dual(const WeakBialgebra& wb) {
  check_shapes(wb);
  WeakBialgebra d;
  std::size_t n = wb.dim();
  d.alg = {n, wb.coalg.comult.transpose(), wb.coalg.counit.transpose()};
  d.coalg = {n, wb.alg.mult.transpose(), wb.alg.unit.transpose()};
  for (std::size_t i = 0; i < n; ++i) d.labels.push_back((wb.labels.empty() ? std::to_string(i) : wb.labels[i]) + "*");
  return d;
}

WeakHopfAlgebra build_dual(const WeakHopfAlgebra& h) { return {build_dual(h.wb), h.antipode.transpose()}; }

}  // namespace weakhopf
