#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

// su(n) matrix model of the Grassmannian G_k(C^n). p consists of the block matrices
// [[0, X], [-X^*, 0]] with X of size k x (n-k), with metric -tr(xy).
namespace hss::oracle {

using CMat = Eigen::MatrixXcd;

struct GrassmannModel {
  int n = 0;
  int k = 0;
  std::vector<CMat> basis;  // orthonormal

  GrassmannModel(int n_, int k_) : n(n_), k(k_) {
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < k; ++i)
      for (int j = k; j < n; ++j) {
        CMat u = CMat::Zero(n, n), v = CMat::Zero(n, n);
        u(i, j) = s;
        u(j, i) = -s;
        v(i, j) = std::complex<double>(0, s);
        v(j, i) = std::complex<double>(0, s);
        basis.push_back(u);
        basis.push_back(v);
      }
  }

  static CMat br(const CMat& a, const CMat& b) { return a * b - b * a; }
  static double metric(const CMat& a, const CMat& b) { return -(a * b).trace().real(); }

  /// Matrix of x -> -[[x, w], w] for unit w, in the orthonormal basis.
  Eigen::MatrixXd jacobi(const CMat& w) const {
    const auto d = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
      const CMat img = -br(br(basis[static_cast<std::size_t>(b)], w), w);
      for (Eigen::Index a = 0; a < d; ++a) m(a, b) = metric(basis[static_cast<std::size_t>(a)], img);
    }
    return m;
  }

  /// Unit vector along u_delta for delta = e_1 - e_n.
  CMat unit_u_delta() const {
    CMat u = CMat::Zero(n, n);
    u(0, n - 1) = 1.0 / std::sqrt(2.0);
    u(n - 1, 0) = -1.0 / std::sqrt(2.0);
    return u;
  }
};

}  // namespace hss::oracle
