/*
   Copyright 2026 The fanodb Authors

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

#ifndef FANODB_ERRORS_HPP
#define FANODB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fanodb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define FANODB_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                       \
       public:                                                        \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    };

// series core
FANODB_DEFINE_ERROR(NotExpandable)
FANODB_DEFINE_ERROR(NotDivisible)
FANODB_DEFINE_ERROR(DegreeOverflow)
FANODB_DEFINE_ERROR(ZeroDenominator)
FANODB_DEFINE_ERROR(ParseError)
// singularities
FANODB_DEFINE_ERROR(NotTerminalType)
FANODB_DEFINE_ERROR(NotTerminalForm)
// hilbert / weights
FANODB_DEFINE_ERROR(NotCoprime)
FANODB_DEFINE_ERROR(NotUnital)
FANODB_DEFINE_ERROR(Underdetermined)
FANODB_DEFINE_ERROR(CycleDetected)
// oracle
FANODB_DEFINE_ERROR(NotIsolated)
FANODB_DEFINE_ERROR(NotAnticanonicalGrading)
// database / fixtures
FANODB_DEFINE_ERROR(FilterError)
FANODB_DEFINE_ERROR(CorruptFixture)

#undef FANODB_DEFINE_ERROR

}  // namespace fanodb

#endif  // FANODB_ERRORS_HPP
