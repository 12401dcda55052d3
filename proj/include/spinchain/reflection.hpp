#pragma once

#include <Eigen/Core>

namespace spinchain {

// Site reflection i -> -i: amplitude at array index a moves to M-1-a.
// Requires odd length (a centre site); an involution that preserves norm.
Eigen::VectorXd reflected(const Eigen::VectorXd& v);
Eigen::VectorXcd reflected(const Eigen::VectorXcd& v);

}  // namespace spinchain
