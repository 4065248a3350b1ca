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

#ifndef DDGK_GROEBNER_HPP
#define DDGK_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ddgk/algebra.hpp"
#include "ddgk/ordering.hpp"

namespace ddgk {

struct LeadingTerm {
    Monomial mono;
    FieldElement coeff;
};

/// Throws ZeroElement for f = 0.
LeadingTerm leading(const Element& f, const OrderingSpec& ord);

/// Scales f so its leading coefficient is 1. f must be nonzero.
Element make_monic(const Element& f, const OrderingSpec& ord);

/// u = h * v for some h in A. For standard monomials this is componentwise
/// domination of exponents (not the same as left divisibility).
bool right_divides(const Monomial& v, const Monomial& u);

/// The unique h with h * v = u, namely S^{alpha-alpha'} sigma^{-alpha'}(D^{beta-beta'}).
/// Throws NotDivisible.
Element left_quotient(const DDAlgebra& alg, const Monomial& u, const Monomial& v);

/// The multiplier q with lt(q * g) = lt(f); requires lm(g) | lm(f) on the right.
Element reduction_multiplier(const DDAlgebra& alg, const LeadingTerm& f, const LeadingTerm& g);

/// f - q*g where q cancels lt(f). Throws NotDivisible, ZeroElement.
Element reduce_step(const DDAlgebra& alg, const Element& f, const Element& g, const OrderingSpec& ord);

enum class DivisorChoice { First, Last };

struct ReductionStep {
    Element quotient;
    std::size_t divisor;
};

/// f = sum steps[i].quotient * G[steps[i].divisor] + remainder, with every
/// lm(quotient * divisor) <= lm(f) and Supp(remainder) inside Irr(lm(G)).
struct Reduction {
    Element remainder;
    std::vector<ReductionStep> steps;
};

Reduction reduce(const DDAlgebra& alg, const Element& f, std::span<const Element> basis, const OrderingSpec& ord,
                 DivisorChoice choice = DivisorChoice::First);

Element remainder(const DDAlgebra& alg, const Element& f, std::span<const Element> basis, const OrderingSpec& ord,
                  DivisorChoice choice = DivisorChoice::First);

/// Rebuilds sum q_i g_i + r from a recorded reduction.
Element replay(const DDAlgebra& alg, const Reduction& red, std::span<const Element> basis);

/// Componentwise maximum of exponents.
Monomial lclm(const Monomial& u, const Monomial& v);

/// LQ(lclm/lt f) f - LQ(lclm/lt g) g. Throws ZeroElement.
Element spoly(const DDAlgebra& alg, const Element& f, const Element& g, const OrderingSpec& ord);

struct GroebnerBasis {
    DDAlgebra algebra;
    OrderingSpec ordering;
    /// Monic; sorted by ascending leading monomial when minimalized.
    std::vector<Element> elements;
    /// Redundant leading monomials dropped and tails reduced.
    bool minimalized = false;
};

struct BuchbergerOptions {
    bool minimalize = true;
};

/// Left Groebner-Shirshov completion with the normal pair strategy and no
/// pair criteria. Zero inputs are dropped; an empty input yields the zero ideal.
GroebnerBasis buchberger(const DDAlgebra& alg, std::span<const Element> generators, const OrderingSpec& ord,
                         BuchbergerOptions options = {});

/// Every pairwise S-polynomial reduces to zero modulo the basis.
bool satisfies_spoly_criterion(const GroebnerBasis& gb);

bool is_member(const Element& f, const GroebnerBasis& gb);

/// Antichain of minimal leading exponents (in N^{m+n}); Irr(G) is the set of
/// monomials it does not dominate.
struct Staircase {
    std::vector<ExponentVector> minimal;

    /// Reduces an arbitrary exponent list to its minimal antichain.
    static Staircase from_exponents(std::vector<ExponentVector> exps);

    /// Some minimal exponent lies componentwise below x.
    bool dominates(const ExponentVector& x) const;
    bool is_irreducible(const ExponentVector& x) const { return !dominates(x); }
};

Staircase staircase_of(const GroebnerBasis& gb);

}  // namespace ddgk

#endif
