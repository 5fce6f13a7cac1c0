#include "drgcay/spectral.hpp"

#include <array>
#include <stdexcept>

#include "drgcay/metrics.hpp"

namespace drgcay {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

double Spectrum::trace() const {
  double s = 0;
  for (const auto& e : entries) s += e.value * e.multiplicity;
  return s;
}

double Spectrum::trace_of_square() const {
  double s = 0;
  for (const auto& e : entries) s += e.value * e.value * e.multiplicity;
  return s;
}

bool Spectrum::contains(double value, double tol) const { return multiplicity_of(value, tol).has_value(); }

std::optional<int> Spectrum::multiplicity_of(double value, double tol) const {
  for (const auto& e : entries) {
    if (std::abs(e.value - value) <= tol) return e.multiplicity;
  }
  return std::nullopt;
}

Spectrum cluster_eigenvalues(const Eigen::VectorXd& values, double tol) {
  std::vector<double> v(values.data(), values.data() + values.size());
  std::sort(v.begin(), v.end(), std::greater<>());
  Spectrum out;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i + 1;
    double sum = v[i];
    while (j < v.size() && v[j - 1] - v[j] < tol) sum += v[j++];
    SpectrumEntry e;
    e.multiplicity = static_cast<int>(j - i);
    e.value = sum / e.multiplicity;
    const double r = std::round(e.value);
    e.integral = std::abs(e.value - r) < kReportTolerance;
    // Snap exact zeros so that -0 never appears in reports.
    if (e.integral && r == 0.0) e.value = 0.0;
    out.entries.push_back(e);
    i = j;
  }
  return out;
}

Spectrum spectrum(const Graph& g, double tol) {
  if (g.order() < 1) throw std::invalid_argument("spectrum: graph must have at least one vertex");
  return cluster_eigenvalues(jacobi_eigenvalues(adjacency_matrix(g), tol));
}

std::optional<SrgParams> srg_parameters(const Graph& g) {
  const int n = g.order();
  const auto k = regular_degree(g);
  if (!k || n < 3 || *k == 0 || *k == n - 1 || !is_connected(g)) return std::nullopt;
  std::optional<int> lambda, mu;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      for (int w : g.neighbors(u)) common += g.adjacent(w, v);
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  // Connected and not complete, so both kinds of pairs occur; mu > 0 gives diameter 2.
  if (!lambda || !mu || *mu == 0) return std::nullopt;
  SrgParams p{n, *k, *lambda, *mu};
  if (!p.feasible()) throw std::logic_error("srg_parameters: feasibility identity violated");
  return p;
}

int IntersectionArray::a(int i) const {
  const int d = diameter();
  const int bi = i < d ? b[i] : 0;
  const int ci = i > 0 ? c[i - 1] : 0;
  return degree() - bi - ci;
}

std::optional<IntersectionArray> intersection_array(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("intersection_array: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("intersection_array: graph is disconnected");
  // counts[i] = (c_i, a_i, b_i) once observed.
  std::vector<std::optional<std::array<int, 3>>> counts;
  for (int x = 0; x < n; ++x) {
    const auto dist = bfs_distances(g, x);
    for (int y = 0; y < n; ++y) {
      const int i = dist[y];
      std::array<int, 3> obs{0, 0, 0};
      for (int z : g.neighbors(y)) {
        const int dz = dist[z];
        if (dz == i - 1) {
          ++obs[0];
        } else if (dz == i) {
          ++obs[1];
        } else {
          ++obs[2];
        }
      }
      if (static_cast<int>(counts.size()) <= i) counts.resize(i + 1);
      if (!counts[i]) {
        counts[i] = obs;
      } else if (*counts[i] != obs) {
        return std::nullopt;
      }
    }
  }
  const int d = static_cast<int>(counts.size()) - 1;
  IntersectionArray arr;
  for (int i = 0; i < d; ++i) arr.b.push_back((*counts[i])[2]);
  for (int i = 1; i <= d; ++i) arr.c.push_back((*counts[i])[0]);
  return arr;
}

std::vector<double> ia_eigenvalues(const IntersectionArray& arr) {
  const int d = arr.diameter();
  if (static_cast<int>(arr.b.size()) != d) throw std::invalid_argument("ia_eigenvalues: malformed array");
  // The tridiagonal quotient matrix is similar to the symmetric one with
  // off-diagonal entries sqrt(b_i c_{i+1}).
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) t(i, i) = arr.a(i);
  for (int i = 0; i < d; ++i) {
    t(i, i + 1) = t(i + 1, i) = std::sqrt(static_cast<double>(arr.b[i]) * arr.c[i]);
  }
  const Eigen::VectorXd v = jacobi_eigenvalues(t);
  return {v.data(), v.data() + v.size()};
}

bool least_eigenvalue_at_least(const Graph& g, double bound, double tol) {
  return spectrum(g).least() >= bound - tol;
}

}  // namespace drgcay
