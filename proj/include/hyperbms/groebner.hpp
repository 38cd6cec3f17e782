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

#ifndef HYPERBMS_GROEBNER_HPP
#define HYPERBMS_GROEBNER_HPP

#include <span>
#include <vector>

#include "hyperbms/polynomial.hpp"

namespace hbms {

/// Remainder of multivariate division of f by `divisors`. Divisors are tried in descending
/// order of their leading powers; the first one whose leading power divides the current
/// term is used.
Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors, OrderKind order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, OrderKind order);

/// Buchberger criterion: every pairwise S-polynomial reduces to zero modulo the set.
bool buchberger_reduces(std::span<const Polynomial> basis, OrderKind order);

/// Reduced Groebner basis (monic, interreduced) of a set that already is a Groebner basis,
/// sorted by descending leading power.
std::vector<Polynomial> reduced_basis(std::span<const Polynomial> basis, OrderKind order);

}  // namespace hbms

#endif  // HYPERBMS_GROEBNER_HPP
