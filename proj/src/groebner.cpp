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

#include "hyperbms/groebner.hpp"

#include <algorithm>

namespace hbms {

namespace {

std::vector<const Polynomial*> sorted_divisors(std::span<const Polynomial> divisors, OrderKind order) {
    std::vector<const Polynomial*> out;
    for (const auto& d : divisors)
        if (!d.is_zero()) out.push_back(&d);
    std::stable_sort(out.begin(), out.end(), [order](const Polynomial* a, const Polynomial* b) {
        return less_total(b->leading_power(order), a->leading_power(order), order);
    });
    return out;
}

}  // namespace

Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors, OrderKind order) {
    const auto divs = sorted_divisors(divisors, order);
    std::vector<IndexPair> lps;
    for (auto* d : divs) lps.push_back(d->leading_power(order));

    Polynomial p = f;
    Polynomial rem(f.field());
    while (!p.is_zero()) {
        const IndexPair lp = p.leading_power(order);
        const Element lc = p.coeff(lp);
        bool divided = false;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            if (!precedes(lps[i], lp)) continue;
            const Element factor = lc / divs[i]->coeff(lps[i]);
            p = p - divs[i]->shifted(lp - lps[i]) * factor;
            divided = true;
            break;
        }
        if (!divided) {
            rem.add_term(lp, lc);
            p.set(lp, f.field().zero());
        }
    }
    return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, OrderKind order) {
    const IndexPair a = f.leading_power(order);
    const IndexPair b = g.leading_power(order);
    const IndexPair lcm{std::max(a.n1, b.n1), std::max(a.n2, b.n2)};
    return f.shifted(lcm - a) * f.coeff(a).inv() - g.shifted(lcm - b) * g.coeff(b).inv();
}

bool buchberger_reduces(std::span<const Polynomial> basis, OrderKind order) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!remainder(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    return true;
}

std::vector<Polynomial> reduced_basis(std::span<const Polynomial> basis, OrderKind order) {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        const IndexPair lp = basis[i].leading_power(order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (j == i || basis[j].is_zero()) continue;
            const IndexPair other = basis[j].leading_power(order);
            // Strict divisibility, or equal leading powers where the earlier one wins.
            if (precedes(other, lp) && (other != lp || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i].monic(order));
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const IndexPair lp = minimal[i].leading_power(order);
        Polynomial tail = minimal[i];
        tail.set(lp, tail.field().zero());
        Polynomial r = remainder(tail, others, order);
        r.set(lp, tail.field().one());
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
        return less_total(b.leading_power(order), a.leading_power(order), order);
    });
    return reduced;
}

}  // namespace hbms
