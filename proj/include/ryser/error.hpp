// Copyright 2026 The ryser-transfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RYSER_ERROR_HPP
#define RYSER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ryser {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (bad JSON shape or duplicate ids).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exact solver refused an instance larger than its configured guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// No certified sequence is available for the requested (r, alpha).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An assertion that a proof guarantees has failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ryser

#endif  // RYSER_ERROR_HPP
