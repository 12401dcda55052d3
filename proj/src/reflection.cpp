#include "spinchain/reflection.hpp"

#include <stdexcept>

namespace spinchain {

namespace {
template <typename Vec>
Vec reflected_impl(const Vec& v) {
  if (v.size() % 2 == 0) {
    throw std::invalid_argument("reflection needs an odd-length vector (a centre site)");
  }
  return v.reverse();
}
}  // namespace

Eigen::VectorXd reflected(const Eigen::VectorXd& v) { return reflected_impl(v); }
Eigen::VectorXcd reflected(const Eigen::VectorXcd& v) { return reflected_impl(v); }

}  // namespace spinchain
