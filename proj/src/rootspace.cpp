#include "coxkit/rootspace.hpp"

#include <algorithm>
#include <deque>

#include "coxkit/classify.hpp"
#include "coxkit/error.hpp"

namespace coxkit {

namespace {
double g_tolerance = 1e-9;
}

double root_tolerance() { return g_tolerance; }

void set_root_tolerance(double eps) {
  if (!(eps > 0)) throw Error("tolerance must be positive");
  g_tolerance = eps;
}

RootVector<double> apply_generator(const CoxeterGraph& g, int s,
                                   const RootVector<double>& v) {
  if (s < 0 || s >= g.size()) throw Error("unknown generator");
  if (v.size() != g.size()) throw Error("dimension mismatch");
  return apply_generator(bilinear_form<double>(g), s, v);
}

VertexSet support(const RootVector<double>& v) {
  VertexSet out = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > root_tolerance()) out |= singleton(static_cast<int>(i));
  return out;
}

RootTable::RootTable(const CoxeterGraph& g, std::size_t cap)
    : form_(bilinear_form<double>(g)) {
  const int n = g.size();
  long long expected = 0;
  for (TypeLabel t : classify_components(g)) {
    if (!t.is_finite()) throw InfiniteType("root system is infinite (component of type " + t.str() + ")");
    expected += positive_root_count(t);
  }
  if (static_cast<std::size_t>(2 * expected) > cap)
    throw CapExceeded("root count " + std::to_string(2 * expected) + " exceeds cap");

  const double eps = root_tolerance();
  std::vector<RootVector<double>> positive;
  for (int s = 0; s < n; ++s) positive.push_back(simple_root<double>(n, s));
  // Discovery by BFS; duplicates found by a linear scan of a sorted probe key.
  probe_ = RootVector<double>(n);
  for (int i = 0; i < n; ++i) probe_(i) = std::sqrt(2.0 + i);
  std::vector<std::pair<double, int>> keys;
  auto key_of = [&](const RootVector<double>& v) { return probe_.dot(v); };
  auto known = [&](const RootVector<double>& v) {
    const double k = key_of(v), win = probe_.norm() * eps;
    auto it = std::lower_bound(keys.begin(), keys.end(), std::make_pair(k - win, -1));
    for (; it != keys.end() && it->first <= k + win; ++it)
      if ((positive[it->second] - v).norm() <= eps) return true;
    return false;
  };
  auto insert_key = [&](int id) {
    auto entry = std::make_pair(key_of(positive[id]), id);
    keys.insert(std::upper_bound(keys.begin(), keys.end(), entry), entry);
  };
  for (int s = 0; s < n; ++s) insert_key(s);
  for (std::size_t i = 0; i < positive.size(); ++i) {
    for (int s = 0; s < n; ++s) {
      RootVector<double> next = apply_generator(form_, s, positive[i]);
      if (!is_positive_vector(next) || known(next)) continue;
      if (std::abs(pairing(form_, next, next) - 1.0) > 1e-6)
        throw InfiniteType("non-unit vector during root enumeration");
      positive.push_back(std::move(next));
      insert_key(static_cast<int>(positive.size()) - 1);
      if (2 * positive.size() > cap) throw CapExceeded("root cap exceeded");
    }
  }
  positive_ = static_cast<int>(positive.size());
  if (positive_ != expected)
    throw Error("root enumeration found " + std::to_string(positive_) +
                " positive roots, expected " + std::to_string(expected));
  coords_.resize(n, 2 * positive_);
  for (int i = 0; i < positive_; ++i) {
    coords_.col(i) = positive[i];
    coords_.col(i + positive_) = -positive[i];
  }
  build_index();
  reflect_.resize(static_cast<std::size_t>(n) * size());
  for (int s = 0; s < n; ++s)
    for (RootId r = 0; r < size(); ++r)
      reflect_[static_cast<std::size_t>(s) * size() + r] =
          lookup(apply_generator<double>(form_, s, coords_.col(r)));
}

void RootTable::build_index() {
  index_.clear();
  for (RootId r = 0; r < size(); ++r) index_.emplace_back(probe_.dot(coords_.col(r)), r);
  std::sort(index_.begin(), index_.end());
}

std::optional<RootId> RootTable::find(const RootVector<double>& v) const {
  if (v.size() != rank()) throw Error("dimension mismatch");
  const double eps = root_tolerance();
  const double k = probe_.dot(v), win = probe_.norm() * eps;
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(k - win, RootId{-1}));
  for (; it != index_.end() && it->first <= k + win; ++it)
    if ((coords_.col(it->second) - v).norm() <= eps) return it->second;
  return std::nullopt;
}

RootId RootTable::lookup(const RootVector<double>& v) const {
  auto r = find(v);
  if (!r) throw Error("vector is not a root within tolerance (numerical drift?)");
  return *r;
}

Eigen::MatrixXd action_matrix(const RootTable& table, const GroupElement& images) {
  Eigen::MatrixXd m(table.rank(), table.rank());
  for (int s = 0; s < table.rank(); ++s) m.col(s) = table.coordinates().col(images[s]);
  return m;
}

std::vector<RootId> phi_w(const GroupElement& images, const RootTable& table) {
  const Eigen::MatrixXd image = action_matrix(table, images) *
                                table.coordinates().leftCols(table.positive_count());
  std::vector<RootId> out;
  for (RootId r = 0; r < table.positive_count(); ++r)
    if (!is_positive_vector<double>(image.col(r))) out.push_back(r);
  return out;
}

GroupElement reflection_of_root(RootId gamma, const RootTable& table) {
  const RootVector<double> g = table.root(gamma);
  GroupElement out(table.rank());
  for (int s = 0; s < table.rank(); ++s) {
    RootVector<double> a = simple_root<double>(table.rank(), s);
    out[s] = table.lookup(a - 2.0 * pairing(table.form(), g, a) * g);
  }
  return out;
}

}  // namespace coxkit
