// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_COMMON_H_
#define FSWGNN_COMMON_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fswgnn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Input violates a documented precondition (bad sizes, malformed files, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine failed on valid input (LP failure, non-convergence).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sum of a multiset of doubles that does not depend on the order in which the
// terms are listed: terms are sorted before accumulation.
double CanonicalSum(std::vector<double> terms);

// splitmix64; used to derive independent sub-seeds from a user seed.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace fswgnn

#endif  // FSWGNN_COMMON_H_
