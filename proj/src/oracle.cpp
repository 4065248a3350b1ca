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

#include "ddgk/oracle.hpp"

#include <algorithm>
#include <functional>

#include "ddgk/error.hpp"

namespace ddgk {

bool EchelonForm::insert(Row row) {
    while (!row.empty()) {
        const auto [col, lead] = *row.begin();
        auto pivot = pivots_.find(col);
        if (pivot == pivots_.end()) {
            const Rational inv = 1 / lead;
            for (auto& [c, v] : row) v *= inv;
            pivots_.emplace(col, std::move(row));
            return true;
        }
        for (const auto& [c, v] : pivot->second) {
            auto it = row.find(c);
            if (it == row.end()) {
                row.emplace(c, -lead * v);
            } else {
                it->second -= lead * v;
                if (it->second == 0) row.erase(it);
            }
        }
    }
    return false;
}

namespace {

std::vector<Monomial> monomials_up_to(std::size_t m, std::size_t n, std::size_t t) {
    const std::size_t l = m + n;
    std::vector<Monomial> out;
    ExponentVector x(l, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t budget) {
        if (i == l) {
            out.push_back(Monomial::from_exponents(x, m));
            return;
        }
        for (std::size_t k = 0; k <= budget; ++k) {
            x[i] = static_cast<Exponent>(k);
            rec(i + 1, budget - k);
        }
        x[i] = 0;
    };
    rec(0, t);
    return out;
}

std::size_t require_degree(const Degree& d) { return d.value_or(0); }

/// Column layout: ((pos - 1) * |M_{<=t}| + monomial index) * d + coefficient index.
class Columns {
   public:
    Columns(std::size_t m, std::size_t n, std::size_t t, std::size_t d) : d_(d) {
        const auto monos = monomials_up_to(m, n, t);
        for (std::size_t i = 0; i < monos.size(); ++i) index_.emplace(monos[i], i);
    }
    std::size_t width_per_position() const { return index_.size() * d_; }

    void add(EchelonForm::Row& row, std::size_t pos, const Monomial& u, const FieldElement& c) const {
        const std::size_t base = ((pos - 1) * index_.size() + index_.at(u)) * d_;
        for (std::size_t k = 0; k < d_; ++k)
            if (c.coeffs()[k] != 0) row.emplace(base + k, c.coeffs()[k]);
    }

   private:
    std::size_t d_;
    std::map<Monomial, std::size_t> index_;
};

}  // namespace

std::vector<Element> oracle_row_elements(const GroebnerBasis& gb, std::size_t t) {
    const DDAlgebra& alg = gb.algebra;
    std::vector<Element> rows;
    for (const auto& g : gb.elements) {
        const std::size_t dg = require_degree(g.tdeg());
        if (dg > t) continue;
        for (const auto& w : monomials_up_to(alg.m(), alg.n(), t - dg)) rows.push_back(alg.mul(alg.monomial(w), g));
    }
    return rows;
}

std::vector<ModElement> oracle_row_elements(const ModuleGroebnerBasis& gb, std::size_t t) {
    const DDAlgebra& alg = gb.algebra;
    std::vector<ModElement> rows;
    for (const auto& g : gb.elements) {
        const std::size_t dg = require_degree(g.tdeg());
        if (dg > t) continue;
        for (const auto& w : monomials_up_to(alg.m(), alg.n(), t - dg)) rows.push_back(left_mul(alg, alg.monomial(w), g));
    }
    return rows;
}

Integer oracle_hf(const GroebnerBasis& gb, std::size_t t) {
    if (!is_total_degree(gb.ordering))
        throw NonDegreeOrdering("oracle requires a total-degree ordering, got " + to_string(gb.ordering));
    if (!satisfies_spoly_criterion(gb)) throw UncertifiedBasis("input is not a Groebner basis");
    const DDAlgebra& alg = gb.algebra;
    const std::size_t d = alg.field().degree();
    const Columns cols(alg.m(), alg.n(), t, d);
    EchelonForm ech;
    for (const auto& e : oracle_row_elements(gb, t))
        for (std::size_t j = 0; j < d; ++j) {
            const Element v = e.scaled(alg.field().basis(j));
            EchelonForm::Row row;
            for (const auto& [u, c] : v.terms()) cols.add(row, 1, u, c);
            ech.insert(std::move(row));
        }
    return Integer(static_cast<unsigned long>(cols.width_per_position())) - static_cast<unsigned long>(ech.rank());
}

Integer oracle_hf(const ModuleGroebnerBasis& gb, std::size_t t) {
    if (!is_total_degree(gb.ordering))
        throw NonDegreeOrdering("oracle requires a total-degree ordering, got " + to_string(gb.ordering));
    if (!satisfies_svect_criterion(gb)) throw UncertifiedBasis("input is not a module Groebner basis");
    const DDAlgebra& alg = gb.algebra;
    const std::size_t d = alg.field().degree();
    const Columns cols(alg.m(), alg.n(), t, d);
    EchelonForm ech;
    for (const auto& e : oracle_row_elements(gb, t))
        for (std::size_t j = 0; j < d; ++j) {
            const ModElement v = e.scaled(alg.field().basis(j));
            EchelonForm::Row row;
            for (const auto& [u, c] : v.terms()) cols.add(row, u.pos, u.mono, c);
            ech.insert(std::move(row));
        }
    return Integer(static_cast<unsigned long>(cols.width_per_position() * gb.rank)) -
           static_cast<unsigned long>(ech.rank());
}

std::size_t default_oracle_bound(const DimensionReport& report) {
    return std::min<std::size_t>(report.stability_threshold + 3, 8);
}

}  // namespace ddgk
