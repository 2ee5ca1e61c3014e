#include "graphevo/mmd.hpp"

#include <cmath>

namespace graphevo {

double gaussian_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                       double sigma) {
  return std::exp(-(x - y).squaredNorm() / (2.0 * sigma * sigma));
}

double mmd2_gaussian(std::span<const Eigen::VectorXd> xs,
                     std::span<const Eigen::VectorXd> ys, double sigma) {
  return mmd2(xs, ys, [sigma](const Eigen::VectorXd& a,
                              const Eigen::VectorXd& b) {
    return gaussian_kernel(a, b, sigma);
  });
}

}  // namespace graphevo
