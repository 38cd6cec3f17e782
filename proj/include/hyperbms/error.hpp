/*
   Copyright 2026 The hyperbms Authors

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

#ifndef HYPERBMS_ERROR_HPP
#define HYPERBMS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hbms {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid field parameters or arithmetic domain errors (reducible modulus, inverse of zero, ...).
class FieldError : public Error {
  public:
    using Error::Error;
};

/// Malformed text input: elements, polynomials, table files, reports.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// A hyperbolic set that does not fit into the table.
class DoesNotFit : public Error {
  public:
    using Error::Error;
};

/// Border-set and estimation routines are only defined for 2 <= t <= 4.
class UnsupportedRegime : public Error {
  public:
    using Error::Error;
};

}  // namespace hbms

#endif  // HYPERBMS_ERROR_HPP
