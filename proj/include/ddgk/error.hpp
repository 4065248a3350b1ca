/*
   Copyright 2026 The ddgk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DDGK_ERROR_HPP
#define DDGK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ddgk {

/// Validation errors reject malformed input; computation errors reject a
/// well-formed request the mathematics cannot serve (e.g. a dimension query
/// under a non-degree ordering). The CLI maps them to exit codes 2 and 3.
enum class ErrorKind { Validation, Computation };

class Error : public std::runtime_error {
   public:
    Error(const char* name, ErrorKind kind, const std::string& what)
        : std::runtime_error(what), name_(name), kind_(kind) {}

    const char* name() const noexcept { return name_; }
    ErrorKind kind() const noexcept { return kind_; }

   private:
    const char* name_;
    ErrorKind kind_;
};

#define DDGK_DEFINE_ERROR(Name, Kind)                                             \
    class Name : public Error {                                                   \
       public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, ErrorKind::Kind, what) {} \
    };

// scalar
DDGK_DEFINE_ERROR(ZeroInversion, Computation)
DDGK_DEFINE_ERROR(ReducibleModulus, Validation)
DDGK_DEFINE_ERROR(InvalidMinimalPolynomial, Validation)
DDGK_DEFINE_ERROR(InvalidFieldAutomorphism, Validation)
DDGK_DEFINE_ERROR(NotAnAutomorphism, Validation)
DDGK_DEFINE_ERROR(FieldMismatch, Validation)

// algebra
DDGK_DEFINE_ERROR(SingularSigmaMatrix, Validation)
DDGK_DEFINE_ERROR(NonCommutingSigmas, Validation)
DDGK_DEFINE_ERROR(MixedMonomial, Computation)
DDGK_DEFINE_ERROR(PresentationMismatch, Validation)

// ordering
DDGK_DEFINE_ERROR(ShapeMismatch, Validation)

// groebner / modfree
DDGK_DEFINE_ERROR(ZeroElement, Computation)
DDGK_DEFINE_ERROR(NotDivisible, Computation)
DDGK_DEFINE_ERROR(RankMismatch, Validation)

// dimension / oracle
DDGK_DEFINE_ERROR(NonDegreeOrdering, Computation)
DDGK_DEFINE_ERROR(UncertifiedBasis, Computation)

// cli
DDGK_DEFINE_ERROR(ParseError, Validation)

#undef DDGK_DEFINE_ERROR

}  // namespace ddgk

#endif
