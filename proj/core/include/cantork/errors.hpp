// Copyright 2026 The cantor-k Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <memory>
#include <stdexcept>
#include <string>

namespace cantork {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A stated precondition does not hold (mismatched tables, band violation,
// tie at 1/2, divisibility failure, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A refinement or search budget ran out before the question was decided.
// `detail` carries the last enclosure or search state so the caller can
// retry with a larger budget.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::string detail)
      : Error(what + " [" + detail + "]"), detail_(std::move(detail)) {}
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

// Cooperative cancellation for long searches. Copyable; a default token
// never cancels.
class CancelToken {
 public:
  CancelToken() = default;
  static CancelToken make() {
    CancelToken t;
    t.flag_ = std::make_shared<std::atomic<bool>>(false);
    return t;
  }
  void cancel() const {
    if (flag_) flag_->store(true);
  }
  bool cancelled() const { return flag_ && flag_->load(); }
  void throw_if_cancelled() const {
    if (cancelled()) throw Error("operation cancelled");
  }

 private:
  std::shared_ptr<std::atomic<bool>> flag_;
};

}  // namespace cantork
