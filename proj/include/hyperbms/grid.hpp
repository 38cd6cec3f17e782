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

#ifndef HYPERBMS_GRID_HPP
#define HYPERBMS_GRID_HPP

#include <optional>
#include <vector>

#include "hyperbms/field.hpp"
#include "hyperbms/lattice.hpp"

namespace hbms {

/// r1 x r2 grid of Known/Unknown cells read doubly periodically.
class CellGrid {
  public:
    CellGrid() = default;
    explicit CellGrid(TableShape shape) : shape_(shape), cells_(static_cast<std::size_t>(shape.size())) {
        if (shape.r1 < 1 || shape.r2 < 1) throw Error("table shape must be positive");
    }

    const TableShape& shape() const { return shape_; }

    /// Cell at n taken modulo (r1, r2).
    const std::optional<Element>& at(const IndexPair& n) const { return cells_[index(n)]; }
    bool known(const IndexPair& n) const { return at(n).has_value(); }
    void set(const IndexPair& n, std::optional<Element> v) { cells_[index(n)] = v; }

    std::size_t known_count() const {
        std::size_t k = 0;
        for (const auto& c : cells_) k += c.has_value();
        return k;
    }
    std::vector<IndexPair> unknown_cells() const {
        std::vector<IndexPair> out;
        for (int i = 0; i < shape_.r1; ++i)
            for (int j = 0; j < shape_.r2; ++j)
                if (!known({i, j})) out.push_back({i, j});
        return out;
    }

    bool operator==(const CellGrid&) const = default;

  private:
    std::size_t index(const IndexPair& n) const {
        const auto w = shape_.wrap(n);
        return static_cast<std::size_t>(w.n1) * static_cast<std::size_t>(shape_.r2) + static_cast<std::size_t>(w.n2);
    }

    TableShape shape_;
    std::vector<std::optional<Element>> cells_;
};

}  // namespace hbms

#endif  // HYPERBMS_GRID_HPP
