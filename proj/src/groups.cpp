#include "weakhopf/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weakhopf/error.hpp"

namespace weakhopf {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> mult, std::vector<std::string> labels)
    : mult_(std::move(mult)), labels_(std::move(labels)) {
  std::size_t n = mult_.size();
  if (n == 0) throw Error(Errc::InvalidGroup, "empty table");
  for (const auto& row : mult_) {
    if (row.size() != n) throw Error(Errc::InvalidGroup, "table is not square");
    for (auto x : row)
      if (x >= n) throw Error(Errc::InvalidGroup, "entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mult_[e][x] == x && mult_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(Errc::InvalidGroup, "no identity element");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mult_[a][b] == identity_ && mult_[b][a] == identity_) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n) throw Error(Errc::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]]) throw Error(Errc::InvalidGroup, "not associative");
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = 0; b < n && abelian_; ++b) abelian_ = mult_[a][b] == mult_[b][a];
  if (labels_.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  } else if (labels_.size() != n) {
    throw Error(Errc::InvalidGroup, "label count differs from order");
  }
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidGroup, "cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return FiniteGroupTable(std::move(t), std::move(labels));
}

FiniteGroupTable FiniteGroupTable::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw Error(Errc::InvalidGroup, "symmetric group degree must be 1..5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    std::string l = "[";
    for (auto x : perms[a]) l += std::to_string(x + 1);
    labels.push_back(l + "]");
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index(c);
    }
  }
  return FiniteGroupTable(std::move(t), std::move(labels));
}

FiniteGroupTable FiniteGroupTable::parse(std::string_view spec) {
  auto bad = [&] { return Error(Errc::ParseError, "bad group '" + std::string(spec) + "'"); };
  if (spec.empty()) throw bad();
  std::vector<FiniteGroupTable> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('x', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view tok = spec.substr(start, end - start);
    if (tok.size() < 2 || (tok[0] != 'C' && tok[0] != 'S')) throw bad();
    std::size_t n = 0;
    for (char c : tok.substr(1)) {
      if (c < '0' || c > '9') throw bad();
      n = n * 10 + static_cast<std::size_t>(c - '0');
      if (n > 100000) throw bad();
    }
    if (n == 0) throw bad();
    factors.push_back(tok[0] == 'C' ? cyclic(n) : symmetric(n));
    start = end + 1;
  }
  FiniteGroupTable g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
  return g;
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < na * nb; ++x) {
    labels.push_back("(" + a.labels()[x / nb] + "," + b.labels()[x % nb] + ")");
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return FiniteGroupTable(std::move(t), std::move(labels));
}

FiniteGroupTable group_quotient(const FiniteGroupTable& g, const std::vector<std::size_t>& subgroup) {
  std::size_t n = g.order();
  std::set<std::size_t> sub(subgroup.begin(), subgroup.end());
  for (auto x : sub)
    if (x >= n) throw Error(Errc::NotSubgroup, "index out of range");
  if (!sub.count(g.identity())) throw Error(Errc::NotSubgroup, "missing the identity");
  for (auto x : sub) {
    if (!sub.count(g.inverse(x))) throw Error(Errc::NotSubgroup, "not closed under inverses");
    for (auto y : sub)
      if (!sub.count(g.mul(x, y))) throw Error(Errc::NotSubgroup, "not closed under multiplication");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (auto x : sub)
      if (!sub.count(g.mul(g.mul(a, x), g.inverse(a)))) throw Error(Errc::NotSubgroup, "not normal");
  std::vector<std::size_t> coset_of(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset_of[a] != n) continue;
    for (auto x : sub) coset_of[g.mul(a, x)] = reps.size();
    reps.push_back(a);
  }
  std::size_t m = reps.size();
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.labels()[reps[i]] + "N");
    for (std::size_t j = 0; j < m; ++j) t[i][j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return FiniteGroupTable(std::move(t), std::move(labels));
}

}  // namespace weakhopf
