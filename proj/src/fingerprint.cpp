#include "butson/fingerprint.hpp"

#include <Eigen/SVD>

#include "butson/errors.hpp"

namespace butson {

HaagerupSet haagerup_set(const ButsonMatrix& b) {
  const int n = b.size();
  const int q = b.order();
  HaagerupSet set{q, std::vector<std::int64_t>(static_cast<std::size_t>(q), 0)};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const int e = ((b(i, j) + b(k, l) - b(i, l) - b(k, j)) % q + 2 * q) % q;
          ++set.counts[static_cast<std::size_t>(e)];
        }
  return set;
}

bool same_haagerup_set(const ButsonMatrix& a, const ButsonMatrix& b) {
  if (a.size() != b.size()) return false;
  const auto [la, lb] = to_common_order(a, b);
  return haagerup_set(la) == haagerup_set(lb);
}

DefectAnalysis defect_analysis(const ButsonMatrix& b, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!is_hadamard_exact(b)) throw NotHadamard("defect requires a Hadamard matrix");

  const int n = b.size();
  const ComplexMatrix h = b.embed();
  const int equations = n * (n - 1);
  const int unknowns = n * n;
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(std::max(equations, 1), unknowns);

  int row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const std::complex<double> c = h(i, k) * std::conj(h(j, k));
        system(row, i * n + k) += c.real();
        system(row, j * n + k) -= c.real();
        system(row + 1, i * n + k) += c.imag();
        system(row + 1, j * n + k) -= c.imag();
      }
      row += 2;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system);
  const Eigen::VectorXd& sv = svd.singularValues();
  DefectAnalysis result;
  result.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;

  for (double s : result.singular_values) {
    if (s >= tol * sigma_max && s < 10.0 * tol * sigma_max) {
      throw IndeterminateRank("singular value " + std::to_string(s / sigma_max) + " (relative) is too close to the rank threshold");
    }
    if (sigma_max > 0 && s >= tol * sigma_max) ++result.rank;
  }
  result.defect = unknowns - result.rank - (2 * n - 1);
  return result;
}

int defect(const ButsonMatrix& b, double tol) { return defect_analysis(b, tol).defect; }

}  // namespace butson
