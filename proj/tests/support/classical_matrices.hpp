#pragma once

#include <optional>

#include <Eigen/Dense>

#include "hss/roots.hpp"

// Root vectors of sl(r+1), so(2r+1), sp(2r) and so(2r) in their defining representations,
// built from the root coordinates alone.
namespace hss::oracle {

class ClassicalMatrices {
 public:
  explicit ClassicalMatrices(const RootSystem& rs) : rs_(rs) {
    const int r = rs.rank();
    switch (rs.family()) {
      case Family::A: n_ = r + 1; break;
      case Family::B: n_ = 2 * r + 1; break;
      case Family::C:
      case Family::D: n_ = 2 * r; break;
      default: n_ = 0;
    }
  }

  bool supported() const { return n_ > 0; }
  int size() const { return n_; }

  Eigen::MatrixXd root_matrix(RootIndex a) const {
    const RootVector& v = rs_.root(a);
    const int r = rs_.rank();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
    std::vector<std::pair<int, int>> nz;
    for (int i = 0; i < static_cast<int>(v.dim()); ++i)
      if (sgn(v[static_cast<std::size_t>(i)]) != 0) nz.emplace_back(i, sgn(v[static_cast<std::size_t>(i)]));
    if (rs_.family() == Family::A) {
      const int i = nz[0].second > 0 ? nz[0].first : nz[1].first;
      const int j = nz[0].second > 0 ? nz[1].first : nz[0].first;
      m(i, j) = 1;
      return m;
    }
    const bool sp = rs_.family() == Family::C;
    if (nz.size() == 2 && nz[0].second != nz[1].second) {
      const int i = nz[0].second > 0 ? nz[0].first : nz[1].first;
      const int j = nz[0].second > 0 ? nz[1].first : nz[0].first;
      m(i, j) = 1;
      m(r + j, r + i) = -1;
    } else if (nz.size() == 2) {
      const int i = nz[0].first, j = nz[1].first;
      const double s = sp ? 1 : -1;
      if (nz[0].second > 0) {
        m(i, r + j) = 1;
        m(j, r + i) = s;
      } else {
        m(r + i, j) = sp ? 1 : -1;
        m(r + j, i) = 1;
      }
    } else if (sp) {
      const int i = nz[0].first;
      if (nz[0].second > 0)
        m(i, r + i) = 1;
      else
        m(r + i, i) = 1;
    } else {
      const int i = nz[0].first, z = 2 * r;
      if (nz[0].second > 0) {
        m(i, z) = 1;
        m(z, r + i) = -1;
      } else {
        m(z, i) = 1;
        m(r + i, z) = -1;
      }
    }
    return m;
  }

  /// alpha evaluated on a diagonal matrix of the Cartan subalgebra.
  double evaluate(RootIndex a, const Eigen::MatrixXd& h) const {
    const RootVector& v = rs_.root(a);
    double s = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) s += v[i].get_d() * h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    return s;
  }

  /// c with [E_a, E_b] = c E_{a+b}; nullopt when the bracket is not proportional.
  std::optional<double> bracket_coefficient(RootIndex a, RootIndex b, RootIndex sum) const {
    const Eigen::MatrixXd x = root_matrix(a), y = root_matrix(b), z = root_matrix(sum);
    const Eigen::MatrixXd br = x * y - y * x;
    Eigen::Index r = 0, c = 0;
    z.cwiseAbs().maxCoeff(&r, &c);
    const double coeff = br(r, c) / z(r, c);
    if ((br - coeff * z).cwiseAbs().maxCoeff() > 1e-12) return std::nullopt;
    return coeff;
  }

 private:
  const RootSystem& rs_;
  int n_ = 0;
};

}  // namespace hss::oracle
