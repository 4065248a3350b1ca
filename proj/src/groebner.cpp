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

#include "ddgk/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <tuple>

#include "ddgk/error.hpp"

namespace ddgk {

LeadingTerm leading(const Element& f, const OrderingSpec& ord) {
    if (f.is_zero()) throw ZeroElement("the zero element has no leading term");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (compare(ord, it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

Element make_monic(const Element& f, const OrderingSpec& ord) {
    const LeadingTerm lt = leading(f, ord);
    if (lt.coeff.is_one()) return f;
    return f.scaled(lt.coeff.inverse());
}

bool right_divides(const Monomial& v, const Monomial& u) {
    if (v.alpha.size() != u.alpha.size() || v.beta.size() != u.beta.size()) return false;
    for (std::size_t i = 0; i < v.alpha.size(); ++i)
        if (v.alpha[i] > u.alpha[i]) return false;
    for (std::size_t j = 0; j < v.beta.size(); ++j)
        if (v.beta[j] > u.beta[j]) return false;
    return true;
}

namespace {

/// sigma^{-gamma} on R.
FieldElement coeff_neg_power(const DDAlgebra& alg, const ExponentVector& gamma, FieldElement c) {
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (gamma[i] != 0) c = alg.sigma_r(i).apply_power(-static_cast<long>(gamma[i]), c);
    return c;
}

}  // namespace

Element left_quotient(const DDAlgebra& alg, const Monomial& u, const Monomial& v) {
    if (!right_divides(v, u)) throw NotDivisible(u.to_string() + " is not right divisible by " + v.to_string());
    const std::size_t m = alg.m(), n = alg.n();
    Monomial s_part = Monomial::one(m, n);
    Monomial d_part = Monomial::one(m, n);
    std::vector<long> neg_alpha(m);
    for (std::size_t i = 0; i < m; ++i) {
        s_part.alpha[i] = u.alpha[i] - v.alpha[i];
        neg_alpha[i] = -static_cast<long>(v.alpha[i]);
    }
    for (std::size_t j = 0; j < n; ++j) d_part.beta[j] = u.beta[j] - v.beta[j];
    const Element twisted = alg.sigma_power_on_dpoly(neg_alpha, alg.monomial(d_part));
    return alg.mul(alg.monomial(s_part), twisted);
}

Element reduction_multiplier(const DDAlgebra& alg, const LeadingTerm& f, const LeadingTerm& g) {
    const Element h0 = left_quotient(alg, f.mono, g.mono);
    ExponentVector gamma(alg.m());
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = f.mono.alpha[i] - g.mono.alpha[i];
    // h0 * c = sigma^{-gamma}(c) * h0, so this scalar makes lt(q g) = lt(f).
    const FieldElement e = f.coeff * coeff_neg_power(alg, gamma, g.coeff).inverse();
    return h0.scaled(e);
}

Element reduce_step(const DDAlgebra& alg, const Element& f, const Element& g, const OrderingSpec& ord) {
    const LeadingTerm lf = leading(f, ord);
    const LeadingTerm lg = leading(g, ord);
    const Element q = reduction_multiplier(alg, lf, lg);
    return f - alg.mul(q, g);
}

Reduction reduce(const DDAlgebra& alg, const Element& f, std::span<const Element> basis, const OrderingSpec& ord,
                 DivisorChoice choice) {
    std::vector<std::optional<LeadingTerm>> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) leads.push_back(g.is_zero() ? std::nullopt : std::optional(leading(g, ord)));

    Reduction out{alg.zero(), {}};
    Element p = f;
    while (!p.is_zero()) {
        const LeadingTerm lt = leading(p, ord);
        std::optional<std::size_t> divisor;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::size_t i = choice == DivisorChoice::First ? k : basis.size() - 1 - k;
            if (leads[i] && right_divides(leads[i]->mono, lt.mono)) {
                divisor = i;
                break;
            }
        }
        if (!divisor) {
            out.remainder.add_term(lt.mono, lt.coeff);
            p.add_term(lt.mono, -lt.coeff);
            continue;
        }
        Element q = reduction_multiplier(alg, lt, *leads[*divisor]);
        p -= alg.mul(q, basis[*divisor]);
        out.steps.push_back({std::move(q), *divisor});
    }
    return out;
}

Element remainder(const DDAlgebra& alg, const Element& f, std::span<const Element> basis, const OrderingSpec& ord,
                  DivisorChoice choice) {
    return reduce(alg, f, basis, ord, choice).remainder;
}

Element replay(const DDAlgebra& alg, const Reduction& red, std::span<const Element> basis) {
    Element acc = red.remainder;
    for (const auto& step : red.steps) acc += alg.mul(step.quotient, basis[step.divisor]);
    return acc;
}

Monomial lclm(const Monomial& u, const Monomial& v) {
    if (u.alpha.size() != v.alpha.size() || u.beta.size() != v.beta.size())
        throw ShapeMismatch("lclm of monomials with different (m,n)");
    Monomial w = u;
    for (std::size_t i = 0; i < w.alpha.size(); ++i) w.alpha[i] = std::max(u.alpha[i], v.alpha[i]);
    for (std::size_t j = 0; j < w.beta.size(); ++j) w.beta[j] = std::max(u.beta[j], v.beta[j]);
    return w;
}

Element spoly(const DDAlgebra& alg, const Element& f, const Element& g, const OrderingSpec& ord) {
    const LeadingTerm lf = leading(f, ord);
    const LeadingTerm lg = leading(g, ord);
    const LeadingTerm w{lclm(lf.mono, lg.mono), alg.field().one()};
    return alg.mul(reduction_multiplier(alg, w, lf), f) - alg.mul(reduction_multiplier(alg, w, lg), g);
}

namespace {

struct PendingPair {
    Monomial lcm;
    std::uint64_t seq;
    std::size_t i, j;
};

/// Drops members whose lm is right divisible by another member's lm, then
/// replaces each tail by its remainder modulo the survivors.
std::vector<Element> minimalize(const DDAlgebra& alg, std::vector<Element> g, const OrderingSpec& ord) {
    std::vector<Monomial> lms;
    for (const auto& e : g) lms.push_back(leading(e, ord).mono);
    std::vector<Element> kept;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !right_divides(lms[j], lms[i])) continue;
            // Equal leading monomials: keep the earliest.
            redundant = lms[j] != lms[i] || j < i;
        }
        if (!redundant) kept.push_back(std::move(g[i]));
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Element> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        const LeadingTerm lt = leading(kept[i], ord);
        Element tail = kept[i];
        tail.add_term(lt.mono, -lt.coeff);
        Element reduced = remainder(alg, tail, others, ord);
        reduced.add_term(lt.mono, lt.coeff);
        kept[i] = std::move(reduced);
    }
    std::sort(kept.begin(), kept.end(), [&](const Element& a, const Element& b) {
        return compare(ord, leading(a, ord).mono, leading(b, ord).mono) < 0;
    });
    return kept;
}

}  // namespace

GroebnerBasis buchberger(const DDAlgebra& alg, std::span<const Element> generators, const OrderingSpec& ord,
                         BuchbergerOptions options) {
    std::vector<Element> g;
    std::vector<Monomial> lms;
    for (const auto& f : generators) {
        if (f.is_zero()) continue;
        g.push_back(make_monic(f, ord));
        lms.push_back(leading(g.back(), ord).mono);
    }

    auto cmp = [&ord](const PendingPair& a, const PendingPair& b) {
        if (auto c = compare(ord, a.lcm, b.lcm); c != 0) return c < 0;
        return a.seq < b.seq;
    };
    std::set<PendingPair, decltype(cmp)> pairs(cmp);
    std::uint64_t seq = 0;
    auto add_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pairs.insert({lclm(lms[i], lms[j]), seq++, i, j});
    };
    for (std::size_t j = 1; j < g.size(); ++j) add_pairs_with(j);

    while (!pairs.empty()) {
        const PendingPair pair = *pairs.begin();
        pairs.erase(pairs.begin());
        const Element s = spoly(alg, g[pair.i], g[pair.j], ord);
        Element r = remainder(alg, s, g, ord);
        if (r.is_zero()) continue;
        g.push_back(make_monic(r, ord));
        lms.push_back(leading(g.back(), ord).mono);
        add_pairs_with(g.size() - 1);
    }

    GroebnerBasis gb{alg, ord, std::move(g), false};
    if (options.minimalize) {
        gb.elements = minimalize(alg, std::move(gb.elements), ord);
        gb.minimalized = true;
    }
    return gb;
}

bool satisfies_spoly_criterion(const GroebnerBasis& gb) {
    const auto& g = gb.elements;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!remainder(gb.algebra, spoly(gb.algebra, g[i], g[j], gb.ordering), g, gb.ordering).is_zero())
                return false;
    return true;
}

bool is_member(const Element& f, const GroebnerBasis& gb) {
    return remainder(gb.algebra, f, gb.elements, gb.ordering).is_zero();
}

Staircase Staircase::from_exponents(std::vector<ExponentVector> exps) {
    auto leq = [](const ExponentVector& a, const ExponentVector& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    Staircase s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < exps.size() && !absorbed; ++j)
            absorbed = j != i && leq(exps[j], exps[i]);
        if (!absorbed) s.minimal.push_back(exps[i]);
    }
    return s;
}

bool Staircase::dominates(const ExponentVector& x) const {
    for (const auto& e : minimal) {
        bool below = true;
        for (std::size_t i = 0; i < e.size() && below; ++i) below = e[i] <= x[i];
        if (below) return true;
    }
    return false;
}

Staircase staircase_of(const GroebnerBasis& gb) {
    std::vector<ExponentVector> exps;
    for (const auto& g : gb.elements) exps.push_back(leading(g, gb.ordering).mono.exponents());
    return Staircase::from_exponents(std::move(exps));
}

}  // namespace ddgk
