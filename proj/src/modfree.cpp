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

#include "ddgk/modfree.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "ddgk/error.hpp"

namespace ddgk {

ModElement::ModElement(NumberField field, std::size_t m, std::size_t n, std::size_t rank)
    : field_(std::move(field)), m_(m), n_(n), rank_(rank) {
    if (rank == 0) throw RankMismatch("free module rank must be at least 1");
}

ModElement ModElement::embed(const Element& f, std::size_t pos, std::size_t rank) {
    ModElement r(f.field(), f.m(), f.n(), rank);
    for (const auto& [u, c] : f.terms()) r.add_term({u, pos}, c);
    return r;
}

void ModElement::add_term(const ModMonomial& u, const FieldElement& c) {
    if (u.pos < 1 || u.pos > rank_)
        throw RankMismatch("position " + std::to_string(u.pos) + " outside 1.." + std::to_string(rank_));
    if (c.is_zero()) return;
    auto it = terms_.find(u);
    if (it == terms_.end()) {
        terms_.emplace(u, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FieldElement ModElement::coefficient(const ModMonomial& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? field_.zero() : it->second;
}

Element ModElement::component(std::size_t pos) const {
    Element e(field_, m_, n_);
    for (const auto& [u, c] : terms_)
        if (u.pos == pos) e.add_term(u.mono, c);
    return e;
}

void ModElement::check_compatible(const ModElement& rhs) const {
    if (rank_ != rhs.rank_) throw RankMismatch("module elements of rank " + std::to_string(rank_) + " and " +
                                               std::to_string(rhs.rank_));
    if (m_ != rhs.m_ || n_ != rhs.n_ || !(field_ == rhs.field_))
        throw PresentationMismatch("module elements over different algebras");
}

ModElement ModElement::operator-() const {
    ModElement r(field_, m_, n_, rank_);
    for (const auto& [u, c] : terms_) r.terms_.emplace(u, -c);
    return r;
}

ModElement& ModElement::operator+=(const ModElement& rhs) {
    check_compatible(rhs);
    for (const auto& [u, c] : rhs.terms_) add_term(u, c);
    return *this;
}

ModElement& ModElement::operator-=(const ModElement& rhs) {
    check_compatible(rhs);
    for (const auto& [u, c] : rhs.terms_) add_term(u, -c);
    return *this;
}

ModElement ModElement::scaled(const FieldElement& c) const {
    ModElement r(field_, m_, n_, rank_);
    if (c.is_zero()) return r;
    for (const auto& [u, a] : terms_) r.terms_.emplace(u, c * a);
    return r;
}

bool ModElement::operator==(const ModElement& rhs) const {
    return rank_ == rhs.rank_ && m_ == rhs.m_ && n_ == rhs.n_ && field_ == rhs.field_ && terms_ == rhs.terms_;
}

Degree ModElement::tdeg() const {
    Degree d;
    for (const auto& [u, c] : terms_) d = std::max(d.value_or(0), u.tdeg());
    return d;
}

std::string ModElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t pos = 1; pos <= rank_; ++pos) {
        const Element c = component(pos);
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << c.to_string() << ")*e" << pos;
        first = false;
    }
    return out.str();
}

ModElement left_mul(const DDAlgebra& alg, const Element& a, const ModElement& f) {
    ModElement r(f.field(), f.m(), f.n(), f.rank());
    for (std::size_t pos = 1; pos <= f.rank(); ++pos) {
        const Element c = f.component(pos);
        if (c.is_zero()) continue;
        const Element prod = alg.mul(a, c);
        for (const auto& [u, x] : prod.terms()) r.add_term({u, pos}, x);
    }
    return r;
}

ModLeadingTerm leading(const ModElement& f, const ModuleOrderingSpec& ord) {
    if (f.is_zero()) throw ZeroElement("the zero module element has no leading term");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (compare_module(ord, it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

ModElement make_monic(const ModElement& f, const ModuleOrderingSpec& ord) {
    const ModLeadingTerm lt = leading(f, ord);
    if (lt.coeff.is_one()) return f;
    return f.scaled(lt.coeff.inverse());
}

bool mod_divides(const ModMonomial& v, const ModMonomial& u) { return v.pos == u.pos && right_divides(v.mono, u.mono); }

std::optional<ModMonomial> mod_lclm(const ModMonomial& u, const ModMonomial& v) {
    if (u.pos != v.pos) return std::nullopt;
    return ModMonomial{lclm(u.mono, v.mono), u.pos};
}

namespace {

Element multiplier(const DDAlgebra& alg, const ModLeadingTerm& f, const ModLeadingTerm& g) {
    if (!mod_divides(g.mono, f.mono))
        throw NotDivisible(f.mono.to_string() + " is not right divisible by " + g.mono.to_string());
    return reduction_multiplier(alg, {f.mono.mono, f.coeff}, {g.mono.mono, g.coeff});
}

}  // namespace

ModElement mod_reduce_step(const DDAlgebra& alg, const ModElement& f, const ModElement& g,
                           const ModuleOrderingSpec& ord) {
    const Element q = multiplier(alg, leading(f, ord), leading(g, ord));
    return f - left_mul(alg, q, g);
}

ModElement svect(const DDAlgebra& alg, const ModElement& f, const ModElement& g, const ModuleOrderingSpec& ord) {
    if (f.rank() != g.rank()) throw RankMismatch("S-vector of elements with different ranks");
    const ModLeadingTerm lf = leading(f, ord);
    const ModLeadingTerm lg = leading(g, ord);
    const auto w = mod_lclm(lf.mono, lg.mono);
    if (!w) return ModElement(f.field(), f.m(), f.n(), f.rank());
    const ModLeadingTerm wt{*w, alg.field().one()};
    return left_mul(alg, multiplier(alg, wt, lf), f) - left_mul(alg, multiplier(alg, wt, lg), g);
}

ModReduction mod_reduce(const DDAlgebra& alg, const ModElement& f, std::span<const ModElement> basis,
                        const ModuleOrderingSpec& ord, DivisorChoice choice) {
    std::vector<std::optional<ModLeadingTerm>> leads;
    for (const auto& g : basis) {
        if (g.rank() != f.rank()) throw RankMismatch("divisor rank differs from dividend rank");
        leads.push_back(g.is_zero() ? std::nullopt : std::optional(leading(g, ord)));
    }
    ModReduction out{ModElement(f.field(), f.m(), f.n(), f.rank()), {}};
    ModElement p = f;
    while (!p.is_zero()) {
        const ModLeadingTerm lt = leading(p, ord);
        std::optional<std::size_t> divisor;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::size_t i = choice == DivisorChoice::First ? k : basis.size() - 1 - k;
            if (leads[i] && mod_divides(leads[i]->mono, lt.mono)) {
                divisor = i;
                break;
            }
        }
        if (!divisor) {
            out.remainder.add_term(lt.mono, lt.coeff);
            p.add_term(lt.mono, -lt.coeff);
            continue;
        }
        Element q = multiplier(alg, lt, *leads[*divisor]);
        p -= left_mul(alg, q, basis[*divisor]);
        out.steps.push_back({std::move(q), *divisor});
    }
    return out;
}

ModElement mod_remainder(const DDAlgebra& alg, const ModElement& f, std::span<const ModElement> basis,
                         const ModuleOrderingSpec& ord, DivisorChoice choice) {
    return mod_reduce(alg, f, basis, ord, choice).remainder;
}

ModElement mod_replay(const DDAlgebra& alg, const ModReduction& red, std::span<const ModElement> basis) {
    ModElement acc = red.remainder;
    for (const auto& step : red.steps) acc += left_mul(alg, step.quotient, basis[step.divisor]);
    return acc;
}

namespace {

struct PendingPair {
    ModMonomial lcm;
    std::uint64_t seq;
    std::size_t i, j;
};

std::vector<ModElement> minimalize(const DDAlgebra& alg, std::vector<ModElement> g, const ModuleOrderingSpec& ord) {
    std::vector<ModMonomial> lms;
    for (const auto& e : g) lms.push_back(leading(e, ord).mono);
    std::vector<ModElement> kept;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !mod_divides(lms[j], lms[i])) continue;
            redundant = lms[j] != lms[i] || j < i;
        }
        if (!redundant) kept.push_back(std::move(g[i]));
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModElement> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        const ModLeadingTerm lt = leading(kept[i], ord);
        ModElement tail = kept[i];
        tail.add_term(lt.mono, -lt.coeff);
        ModElement reduced = mod_remainder(alg, tail, others, ord);
        reduced.add_term(lt.mono, lt.coeff);
        kept[i] = std::move(reduced);
    }
    std::sort(kept.begin(), kept.end(), [&](const ModElement& a, const ModElement& b) {
        return compare_module(ord, leading(a, ord).mono, leading(b, ord).mono) < 0;
    });
    return kept;
}

}  // namespace

ModuleGroebnerBasis mod_buchberger(const DDAlgebra& alg, std::span<const ModElement> generators, std::size_t rank,
                                   const ModuleOrderingSpec& ord, BuchbergerOptions options) {
    std::vector<ModElement> g;
    std::vector<ModMonomial> lms;
    for (const auto& f : generators) {
        if (f.rank() != rank)
            throw RankMismatch("generator of rank " + std::to_string(f.rank()) + " in A^" + std::to_string(rank));
        if (f.is_zero()) continue;
        g.push_back(make_monic(f, ord));
        lms.push_back(leading(g.back(), ord).mono);
    }

    auto cmp = [&ord](const PendingPair& a, const PendingPair& b) {
        if (auto c = compare_module(ord, a.lcm, b.lcm); c != 0) return c < 0;
        return a.seq < b.seq;
    };
    std::set<PendingPair, decltype(cmp)> pairs(cmp);
    std::uint64_t seq = 0;
    auto add_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (auto w = mod_lclm(lms[i], lms[j])) pairs.insert({*w, seq++, i, j});
    };
    for (std::size_t j = 1; j < g.size(); ++j) add_pairs_with(j);

    while (!pairs.empty()) {
        const PendingPair pair = *pairs.begin();
        pairs.erase(pairs.begin());
        ModElement r = mod_remainder(alg, svect(alg, g[pair.i], g[pair.j], ord), g, ord);
        if (r.is_zero()) continue;
        g.push_back(make_monic(r, ord));
        lms.push_back(leading(g.back(), ord).mono);
        add_pairs_with(g.size() - 1);
    }

    ModuleGroebnerBasis gb{alg, ord, rank, std::move(g), false};
    if (options.minimalize) {
        gb.elements = minimalize(alg, std::move(gb.elements), ord);
        gb.minimalized = true;
    }
    return gb;
}

bool satisfies_svect_criterion(const ModuleGroebnerBasis& gb) {
    const auto& g = gb.elements;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (leading(g[i], gb.ordering).mono.pos != leading(g[j], gb.ordering).mono.pos) continue;
            if (!mod_remainder(gb.algebra, svect(gb.algebra, g[i], g[j], gb.ordering), g, gb.ordering).is_zero())
                return false;
        }
    return true;
}

bool is_member(const ModElement& f, const ModuleGroebnerBasis& gb) {
    return mod_remainder(gb.algebra, f, gb.elements, gb.ordering).is_zero();
}

std::vector<Staircase> staircases_of(const ModuleGroebnerBasis& gb) {
    std::vector<std::vector<ExponentVector>> per_pos(gb.rank);
    for (const auto& g : gb.elements) {
        const ModMonomial lm = leading(g, gb.ordering).mono;
        per_pos[lm.pos - 1].push_back(lm.mono.exponents());
    }
    std::vector<Staircase> out;
    for (auto& exps : per_pos) out.push_back(Staircase::from_exponents(std::move(exps)));
    return out;
}

}  // namespace ddgk
