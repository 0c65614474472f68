#include "weakhopf/tensor.hpp"

#include <algorithm>
#include <unordered_map>

#include "weakhopf/error.hpp"

namespace weakhopf {

namespace {

constexpr std::uint64_t kDenseLimit = 1ULL << 18;

std::uint64_t checked_product(const std::vector<Leg>& legs) {
  std::uint64_t t = 1;
  for (const auto& l : legs) {
    if (l.dim != 0 && t > (~0ULL) / l.dim) throw Error(Errc::ShapeMismatch, "tensor index overflow");
    t *= l.dim;
  }
  return t;
}

// Sums contributions to flat indices; emits sorted nonzero entries.
class Accumulator {
 public:
  Accumulator(Field f, std::uint64_t size) : field_(f), dense_(size <= kDenseLimit) {
    if (dense_) {
      slots_.assign(size, Scalar(f));
      seen_.assign(size, 0);
    }
  }
  void add(std::uint64_t idx, const Scalar& v) {
    if (dense_) {
      if (!seen_[idx]) {
        seen_[idx] = 1;
        touched_.push_back(idx);
        slots_[idx] = v;
      } else {
        slots_[idx] += v;
      }
    } else {
      auto [it, fresh] = map_.try_emplace(idx, v);
      if (!fresh) it->second += v;
    }
  }
  std::vector<std::pair<std::uint64_t, Scalar>> take() {
    std::vector<std::pair<std::uint64_t, Scalar>> out;
    if (dense_) {
      std::sort(touched_.begin(), touched_.end());
      for (auto i : touched_)
        if (!slots_[i].is_zero()) out.emplace_back(i, slots_[i]);
    } else {
      for (auto& [i, v] : map_)
        if (!v.is_zero()) out.emplace_back(i, v);
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return out;
  }

 private:
  Field field_;
  bool dense_;
  std::vector<Scalar> slots_;
  std::vector<char> seen_;
  std::vector<std::uint64_t> touched_;
  std::unordered_map<std::uint64_t, Scalar> map_;
};

void decompose(std::uint64_t flat, const std::vector<Leg>& legs, std::vector<std::uint64_t>& idx) {
  idx.resize(legs.size());
  for (std::size_t k = legs.size(); k-- > 0;) {
    idx[k] = flat % legs[k].dim;
    flat /= legs[k].dim;
  }
}

}  // namespace

LinMap::LinMap(const Mat& m) : field_(m.field()), rows_(m.rows()), cols_(m.cols()) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) cols_[j].emplace_back(static_cast<std::uint32_t>(i), m(i, j));
}

Tensor Tensor::scalar(const Scalar& s) {
  Tensor t(s.field());
  if (!s.is_zero()) t.entries_.emplace_back(0, s);
  return t;
}

Tensor Tensor::basis(Field f, const std::string& leg, std::size_t dim, std::size_t i) {
  Tensor t(f);
  t.legs_.push_back({leg, dim});
  t.entries_.emplace_back(i, Scalar(f, 1));
  return t;
}

Tensor Tensor::vector(const std::string& leg, const Mat& v) { return reshape(v, {{leg, v.rows()}}); }

Tensor Tensor::reshape(const Mat& v, std::vector<Leg> legs) {
  if (v.cols() != 1 || checked_product(legs) != v.rows())
    throw Error(Errc::ShapeMismatch, "reshape of a " + std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
  Tensor t(v.field());
  t.legs_ = std::move(legs);
  for (std::size_t i = 0; i < v.rows(); ++i)
    if (!v(i, 0).is_zero()) t.entries_.emplace_back(i, v(i, 0));
  return t;
}

std::size_t Tensor::position(const std::string& leg) const {
  for (std::size_t k = 0; k < legs_.size(); ++k)
    if (legs_[k].name == leg) return k;
  throw Error(Errc::ShapeMismatch, "no tensor leg '" + leg + "'");
}

bool Tensor::has(const std::string& leg) const {
  return std::any_of(legs_.begin(), legs_.end(), [&](const Leg& l) { return l.name == leg; });
}

std::size_t Tensor::dim(const std::string& leg) const { return legs_[position(leg)].dim; }

std::uint64_t Tensor::total() const { return checked_product(legs_); }

Tensor Tensor::operator*(const Tensor& b) const {
  if (!(field_ == b.field_)) throw Error(Errc::FieldMismatch, "tensor product across fields");
  Tensor r(field_);
  r.legs_ = legs_;
  for (const auto& l : b.legs_) {
    if (has(l.name)) throw Error(Errc::ShapeMismatch, "duplicate tensor leg '" + l.name + "'");
    r.legs_.push_back(l);
  }
  std::uint64_t bt = b.total();
  checked_product(r.legs_);
  r.entries_.reserve(entries_.size() * b.entries_.size());
  for (const auto& [i, x] : entries_)
    for (const auto& [j, y] : b.entries_) r.entries_.emplace_back(i * bt + j, x * y);
  return r;
}

Tensor Tensor::operator+(const Tensor& b) const {
  if (!(field_ == b.field_)) throw Error(Errc::FieldMismatch, "tensor sum across fields");
  if (legs_.size() != b.legs_.size()) throw Error(Errc::ShapeMismatch, "tensor sum with different legs");
  std::vector<std::string> order;
  for (const auto& l : legs_) {
    order.push_back(l.name);
    if (b.dim(l.name) != l.dim) throw Error(Errc::ShapeMismatch, "leg '" + l.name + "' dimension differs");
  }
  Tensor c = b.arranged(order);
  Tensor r(field_);
  r.legs_ = legs_;
  auto i = entries_.begin();
  auto j = c.entries_.begin();
  while (i != entries_.end() || j != c.entries_.end()) {
    if (j == c.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      r.entries_.push_back(*i++);
    } else if (i == entries_.end() || j->first < i->first) {
      r.entries_.push_back(*j++);
    } else {
      Scalar s = i->second + j->second;
      if (!s.is_zero()) r.entries_.emplace_back(i->first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

Tensor Tensor::operator-(const Tensor& b) const { return *this + b.scaled(Scalar(field_, -1)); }

Tensor Tensor::scaled(const Scalar& s) const {
  Tensor r(field_);
  r.legs_ = legs_;
  if (s.is_zero()) return r;
  r.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) r.entries_.emplace_back(i, x * s);
  return r;
}

Tensor Tensor::apply(const LinMap& m, const std::vector<std::string>& in, const std::vector<Leg>& out) const {
  if (!(field_ == m.field())) throw Error(Errc::FieldMismatch, "map and tensor over different fields");
  std::vector<std::size_t> in_pos;
  std::vector<bool> used(legs_.size(), false);
  std::uint64_t in_total = 1;
  for (const auto& name : in) {
    std::size_t p = position(name);
    if (used[p]) throw Error(Errc::ShapeMismatch, "leg '" + name + "' fed twice");
    used[p] = true;
    in_pos.push_back(p);
    in_total *= legs_[p].dim;
  }
  std::uint64_t out_total = checked_product(out);
  if (in_total != m.cols() || out_total != m.rows())
    throw Error(Errc::ShapeMismatch, "map is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                         ", legs give " + std::to_string(out_total) + "x" + std::to_string(in_total));
  Tensor r(field_);
  std::vector<std::size_t> rest_pos;
  for (std::size_t k = 0; k < legs_.size(); ++k)
    if (!used[k]) {
      rest_pos.push_back(k);
      r.legs_.push_back(legs_[k]);
    }
  for (const auto& l : out) {
    for (const auto& e : r.legs_)
      if (e.name == l.name) throw Error(Errc::ShapeMismatch, "duplicate tensor leg '" + l.name + "'");
    r.legs_.push_back(l);
  }
  Accumulator acc(field_, checked_product(r.legs_));
  std::vector<std::uint64_t> idx;
  for (const auto& [flat, x] : entries_) {
    decompose(flat, legs_, idx);
    std::uint64_t ii = 0;
    for (auto p : in_pos) ii = ii * legs_[p].dim + idx[p];
    std::uint64_t ri = 0;
    for (auto p : rest_pos) ri = ri * legs_[p].dim + idx[p];
    for (const auto& [row, c] : m.column(ii)) acc.add(ri * out_total + row, x * c);
  }
  r.entries_ = acc.take();
  return r;
}

Tensor Tensor::rename(const std::string& from, const std::string& to) const {
  Tensor r(*this);
  if (from == to) return r;
  if (has(to)) throw Error(Errc::ShapeMismatch, "duplicate tensor leg '" + to + "'");
  r.legs_[position(from)].name = to;
  return r;
}

Tensor Tensor::arranged(const std::vector<std::string>& order) const {
  if (order.size() != legs_.size()) throw Error(Errc::ShapeMismatch, "arrangement must list every leg");
  std::vector<std::size_t> perm;
  bool identity = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    perm.push_back(position(order[k]));
    identity = identity && perm.back() == k;
  }
  if (identity) return *this;
  Tensor r(field_);
  for (auto p : perm) r.legs_.push_back(legs_[p]);
  std::vector<std::uint64_t> idx;
  r.entries_.reserve(entries_.size());
  for (const auto& [flat, x] : entries_) {
    decompose(flat, legs_, idx);
    std::uint64_t f = 0;
    for (auto p : perm) f = f * legs_[p].dim + idx[p];
    r.entries_.emplace_back(f, x);
  }
  std::sort(r.entries_.begin(), r.entries_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

std::vector<Scalar> Tensor::dense(const std::vector<std::string>& order) const {
  Tensor t = arranged(order);
  std::vector<Scalar> v(t.total(), Scalar(field_));
  for (const auto& [i, x] : t.entries_) v[i] = x;
  return v;
}

Mat Tensor::column(const std::vector<std::string>& order) const { return Mat::column(field_, dense(order)); }

}  // namespace weakhopf
