// Copyright 2026 The antilin Authors
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

#ifndef ANTILIN_ERRORS_HPP
#define ANTILIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace antilin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
    virtual const char *name() const noexcept = 0;
};

/// Numerical checks that fail because the input is too coarse rather than
/// structurally invalid.
class ToleranceError : public Error {
   public:
    using Error::Error;
};

#define ANTILIN_ERROR(NAME, BASE)                                      \
    class NAME : public BASE {                                         \
       public:                                                         \
        explicit NAME(const std::string &msg) : BASE(msg) {}           \
        const char *name() const noexcept override { return #NAME; }   \
    };

ANTILIN_ERROR(DimError, Error)
ANTILIN_ERROR(ZeroVectorError, Error)
ANTILIN_ERROR(UnsupportedDimError, Error)
ANTILIN_ERROR(NotNormalError, Error)
ANTILIN_ERROR(NotInvolutionError, Error)
ANTILIN_ERROR(NotUnitaryError, Error)
ANTILIN_ERROR(NotHermitianError, Error)
ANTILIN_ERROR(CommutationError, Error)
ANTILIN_ERROR(NotConjugationError, Error)
ANTILIN_ERROR(NotClosedError, Error)
ANTILIN_ERROR(NotLagrangianError, Error)
ANTILIN_ERROR(DegenerateInputError, Error)
ANTILIN_ERROR(BetaError, Error)
ANTILIN_ERROR(UndefinedPhaseError, Error)
ANTILIN_ERROR(BasisError, Error)
ANTILIN_ERROR(NotPositiveError, Error)
ANTILIN_ERROR(NotSeparatingError, Error)
ANTILIN_ERROR(NotUnimodularError, Error)
ANTILIN_ERROR(NotNormalizedError, Error)
ANTILIN_ERROR(IncompatibleError, Error)
ANTILIN_ERROR(DecompositionError, Error)
ANTILIN_ERROR(SamplingTooCoarse, ToleranceError)

#undef ANTILIN_ERROR

}  // namespace antilin

#endif
