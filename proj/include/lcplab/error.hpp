// Copyright 2026 The lcplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCPLAB_ERROR_HPP_
#define LCPLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lcplab {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad literals, ragged matrices, unknown identifiers,
// non-bijective permutations.
struct InputError : Error {
  using Error::Error;
};

// Operand shapes do not match the operation.
struct DimensionError : Error {
  using Error::Error;
};

// A matrix or pivot block required to be nonsingular is singular.
struct SingularMatrixError : Error {
  using Error::Error;
};

// A combinatorial operation was asked to exceed its size cap.
struct SizeCapError : Error {
  using Error::Error;
};

// A parameter is outside its admissible range (eps, delta, bounds).
struct ParameterError : Error {
  using Error::Error;
};

// A stated precondition gate failed (e.g. a mixed matrix is not an E-matrix).
struct PreconditionError : Error {
  using Error::Error;
};

// Arithmetic faults such as division by zero.
struct ArithmeticError : Error {
  using Error::Error;
};

// An internal postcondition failed; indicates a library bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace lcplab

#endif  // LCPLAB_ERROR_HPP_
