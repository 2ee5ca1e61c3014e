#ifndef GRAPHEVO_MMD_HPP
#define GRAPHEVO_MMD_HPP

#include <Eigen/Dense>
#include <span>

namespace graphevo {

/// Gaussian (RBF) kernel: exp(-||x - y||^2 / (2 sigma^2)).
double gaussian_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                       double sigma);

/// Biased squared-MMD estimator over two sample sets:
///   (1/m^2) sum k(x,x') - (2/mn) sum k(x,y) + (1/n^2) sum k(y,y')
template <typename Kernel>
double mmd2(std::span<const Eigen::VectorXd> xs,
            std::span<const Eigen::VectorXd> ys, Kernel&& k) {
  const auto m = static_cast<double>(xs.size());
  const auto n = static_cast<double>(ys.size());
  double xx = 0.0, xy = 0.0, yy = 0.0;
  for (const auto& a : xs) {
    for (const auto& b : xs) xx += k(a, b);
    for (const auto& b : ys) xy += k(a, b);
  }
  for (const auto& a : ys) {
    for (const auto& b : ys) yy += k(a, b);
  }
  return xx / (m * m) - 2.0 * xy / (m * n) + yy / (n * n);
}

/// Same with the Gaussian kernel.
double mmd2_gaussian(std::span<const Eigen::VectorXd> xs,
                     std::span<const Eigen::VectorXd> ys, double sigma);

}  // namespace graphevo

#endif
