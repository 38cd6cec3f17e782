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

#ifndef HYPERBMS_RECURRENCE_HPP
#define HYPERBMS_RECURRENCE_HPP

#include <optional>
#include <span>

#include "hyperbms/grid.hpp"
#include "hyperbms/polynomial.hpp"

namespace hbms {

/// A linear recurrence touched a cell whose value is not known.
class NeededCellUnknown : public Error {
  public:
    explicit NeededCellUnknown(IndexPair cell)
        : Error("recurrence needs unknown cell " + cell.str()), cell_(cell) {}
    const IndexPair& cell() const { return cell_; }

  private:
    IndexPair cell_;
};

/**
 * f[U]_n = sum_m f_m u_{m+n-s} with s = LP(f) when s <= n, and 0 otherwise.
 * Cells are read modulo the table shape. Throws NeededCellUnknown.
 */
Element recurrence_value(const Polynomial& f, const CellGrid& u, const IndexPair& n, OrderKind order);

/// Non-throwing variant: nullopt with `missing` set to the first unknown cell.
std::optional<Element> try_recurrence_value(const Polynomial& f, const CellGrid& u, const IndexPair& n,
                                            OrderKind order, IndexPair* missing = nullptr);

/// f generates the prefix u^l: f[U]_k = 0 for every k in Z_r1 x Z_r2 with LP(f) <= k and k <_T l.
bool generates_prefix(const Polynomial& f, const CellGrid& u, const IndexPair& l, OrderKind order);

/// f[U]_k = 0 for every k of `points` with LP(f) <= k.
bool generates_on(const Polynomial& f, const CellGrid& u, std::span<const IndexPair> points, OrderKind order);

}  // namespace hbms

#endif  // HYPERBMS_RECURRENCE_HPP
