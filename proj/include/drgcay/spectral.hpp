#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "drgcay/graph.hpp"

namespace drgcay {

inline constexpr double kJacobiTolerance = 1e-10;
inline constexpr double kReportTolerance = 1e-6;

// Cyclic Jacobi eigenvalue iteration for a dense symmetric matrix.
//
// Sweeps the strict upper triangle row by row, annihilating each
// off-diagonal entry with a plane rotation, until the off-diagonal Frobenius
// norm drops below tol * max(1, ||A||_F). Returns the eigenvalues in
// descending order.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> jacobi_eigenvalues(
    const Eigen::MatrixBase<Derived>& input, typename Derived::Scalar tol = kJacobiTolerance,
    int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  eigen_assert(input.rows() == input.cols());
  Matrix a = input;
  const Eigen::Index n = a.rows();
  const Scalar scale = std::max<Scalar>(Scalar(1), a.norm());
  auto off_norm = [&] {
    Scalar s = 0;
    for (Eigen::Index j = 1; j < n; ++j) s += a.col(j).head(j).squaredNorm();
    return std::sqrt(Scalar(2) * s);
  };
  for (int sweep = 0; sweep < max_sweeps && off_norm() >= tol * scale; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar app = a(p, p), aqq = a(q, q);
        const Scalar theta = (aqq - app) / (Scalar(2) * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        // A <- J^T A J with J the rotation in the (p, q) plane.
        auto cp = a.col(p);
        auto cq = a.col(q);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar x = cp(k), y = cq(k);
          cp(k) = c * x - s * y;
          cq(k) = s * x + c * y;
        }
        a.row(p) = a.col(p).transpose();
        a.row(q) = a.col(q).transpose();
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values = a.diagonal();
  std::sort(values.data(), values.data() + values.size(), [](Scalar x, Scalar y) { return x > y; });
  return values;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g);

struct SpectrumEntry {
  double value = 0;
  int multiplicity = 0;
  // |value - round(value)| < kReportTolerance
  bool integral = false;
};

// Distinct eigenvalues (clustered within kReportTolerance), descending.
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  int total_multiplicity() const;
  double trace() const;
  double trace_of_square() const;
  double least() const { return entries.back().value; }
  // True if some entry lies within tol of `value`.
  bool contains(double value, double tol = kReportTolerance) const;
  std::optional<int> multiplicity_of(double value, double tol = kReportTolerance) const;
};

Spectrum cluster_eigenvalues(const Eigen::VectorXd& values, double tol = kReportTolerance);
Spectrum spectrum(const Graph& g, double tol = kJacobiTolerance);

struct SrgParams {
  int v = 0, k = 0, lambda = 0, mu = 0;
  bool operator==(const SrgParams&) const = default;
  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
};

// Parameters iff g is connected, regular, of diameter 2 with constant
// common-neighbour counts on adjacent and on non-adjacent pairs.
std::optional<SrgParams> srg_parameters(const Graph& g);

struct IntersectionArray {
  std::vector<int> b;  // b_0 .. b_{d-1}
  std::vector<int> c;  // c_1 .. c_d

  int diameter() const { return static_cast<int>(c.size()); }
  int degree() const { return b.empty() ? 0 : b.front(); }
  // a_i = k - b_i - c_i for 0 <= i <= d, with b_d = c_0 = 0.
  int a(int i) const;
  bool operator==(const IntersectionArray&) const = default;
};

// Checks distance-regularity from every base vertex. Throws
// std::invalid_argument for disconnected input.
std::optional<IntersectionArray> intersection_array(const Graph& g);

// Eigenvalues of the tridiagonal quotient matrix, descending.
std::vector<double> ia_eigenvalues(const IntersectionArray& arr);

bool least_eigenvalue_at_least(const Graph& g, double bound, double tol = kReportTolerance);

}  // namespace drgcay
