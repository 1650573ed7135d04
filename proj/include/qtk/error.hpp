// Copyright 2026 The QTK Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (negative rates, wrong sizes, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Brute-force evaluation requested beyond its factorial cost cap.
class SizeError : public InputError {
 public:
  using InputError::InputError;
};

/// The model is well formed but degenerate for the requested operation
/// (reducible chain, vanishing dissipator, zero rates).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A reducible chain: the generator kernel has more than one dimension.
class ReducibleChainError : public DegenerateError {
 public:
  ReducibleChainError(std::size_t kernel_dim, const std::string& what)
      : DegenerateError(what), kernel_dim_(kernel_dim) {}
  std::size_t kernel_dim() const noexcept { return kernel_dim_; }

 private:
  std::size_t kernel_dim_;
};

/// Channel has a Hamiltonian part or several dissipators, so it has no
/// single-entropy gradient form.
class GradientFormUnavailable : public Error {
 public:
  using Error::Error;
};

/// Integration produced a non-finite state.
class DivergenceError : public Error {
 public:
  DivergenceError(std::size_t step, const std::string& what)
      : Error(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// A trajectory did not reach its stationary state closely enough to judge.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtk
