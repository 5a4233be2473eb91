#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "coxkit/graph.hpp"

namespace coxkit {

template <typename Scalar = double>
using RootVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar = double>
using FormMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RootId = std::int32_t;

// Images of the simple roots under a group element, as root ids.
using GroupElement = std::vector<RootId>;

// Global tolerance for root identification and sign tests.
double root_tolerance();
void set_root_tolerance(double eps);

template <typename Scalar = double>
FormMatrix<Scalar> bilinear_form(const CoxeterGraph& g) {
  const int n = g.size();
  const Scalar pi = Scalar(3.14159265358979323846264338327950288L);
  FormMatrix<Scalar> form(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int m = g.label(a, b);
      if (m == kInfinity)
        form(a, b) = Scalar(-1);
      else if (m == 1)
        form(a, b) = Scalar(1);
      else if (m == 2)
        form(a, b) = Scalar(0);
      else
        form(a, b) = -std::cos(pi / Scalar(m));
    }
  return form;
}

// s . v = v - 2 <alpha_s, v> alpha_s
template <typename Scalar>
RootVector<Scalar> apply_generator(const FormMatrix<Scalar>& form, int s,
                                   const RootVector<Scalar>& v) {
  RootVector<Scalar> out = v;
  out(s) -= Scalar(2) * form.row(s).dot(v);
  return out;
}

RootVector<double> apply_generator(const CoxeterGraph& g, int s,
                                   const RootVector<double>& v);

template <typename Scalar>
RootVector<Scalar> simple_root(int n, int s) {
  return RootVector<Scalar>::Unit(n, s);
}

template <typename Scalar>
Scalar pairing(const FormMatrix<Scalar>& form, const RootVector<Scalar>& u,
               const RootVector<Scalar>& v) {
  return u.dot(form * v);
}

// Sign of the coordinate of largest magnitude.
template <typename Scalar>
bool is_positive_vector(const RootVector<Scalar>& v) {
  Eigen::Index i = 0;
  v.cwiseAbs().maxCoeff(&i);
  return v(i) > Scalar(0);
}

VertexSet support(const RootVector<double>& v);

// All roots of a finite-type graph. Positive roots get ids [0, P) in BFS
// order starting from the simple roots (id of alpha_s is s); the negative of
// root i has id i + P.
class RootTable {
 public:
  explicit RootTable(const CoxeterGraph& g, std::size_t cap = 1000000);

  int rank() const { return static_cast<int>(form_.rows()); }
  int size() const { return 2 * positive_; }
  int positive_count() const { return positive_; }
  bool is_positive(RootId r) const { return r < positive_; }
  RootId negate(RootId r) const { return r < positive_ ? r + positive_ : r - positive_; }

  const FormMatrix<double>& form() const { return form_; }
  // Column r holds the coordinates of root r.
  const Eigen::MatrixXd& coordinates() const { return coords_; }
  RootVector<double> root(RootId r) const { return coords_.col(r); }

  // Id of s . root(r).
  RootId reflect(int s, RootId r) const { return reflect_[static_cast<std::size_t>(s) * size() + r]; }

  std::optional<RootId> find(const RootVector<double>& v) const;
  // Like find, but a miss is an error.
  RootId lookup(const RootVector<double>& v) const;

 private:
  void build_index();

  FormMatrix<double> form_;
  Eigen::MatrixXd coords_;
  int positive_ = 0;
  std::vector<RootId> reflect_;
  RootVector<double> probe_;
  std::vector<std::pair<double, RootId>> index_;
};

inline RootTable enumerate_roots(const CoxeterGraph& g, std::size_t cap = 1000000) {
  return RootTable(g, cap);
}

// Linear map sending alpha_s to root(images[s]).
Eigen::MatrixXd action_matrix(const RootTable& table, const GroupElement& images);

// Inversion set: positive roots sent to negative roots.
std::vector<RootId> phi_w(const GroupElement& images, const RootTable& table);

// s_gamma as images of the simple roots.
GroupElement reflection_of_root(RootId gamma, const RootTable& table);

}  // namespace coxkit
