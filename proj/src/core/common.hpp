// Copyright 2026 the fusegraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FUSEGRAPH_CORE_COMMON_HPP
#define FUSEGRAPH_CORE_COMMON_HPP

#include <Eigen/Core>

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace fusegraph {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class ErrorCode {
  invalid_argument,
  invalid_edge,
  not_symmetric,
  not_positive_definite,
  infeasible_update,
  ingest,
  parse,
  io,
  degenerate_input,
  label_mismatch,
  generation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Error(ErrorCode code, const std::string& message, Vector iterate)
      : std::runtime_error(message),
        code_(code),
        iterate_(std::make_shared<Vector>(std::move(iterate))) {}

  ErrorCode code() const noexcept { return code_; }

  // Offending iterate, when the failure happened inside a solver sweep.
  const Vector* iterate() const noexcept { return iterate_.get(); }

 private:
  ErrorCode code_;
  std::shared_ptr<const Vector> iterate_;
};

const char* error_code_name(ErrorCode code);

/// Number of free edge weights for p nodes, m = p(p-1)/2.
inline int edge_count(int p) {
  if (p < 2) throw Error(ErrorCode::invalid_argument, "node count must be >= 2");
  return p * (p - 1) / 2;
}

}  // namespace fusegraph

#endif  // FUSEGRAPH_CORE_COMMON_HPP
