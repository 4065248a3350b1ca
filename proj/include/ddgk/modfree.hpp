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

#ifndef DDGK_MODFREE_HPP
#define DDGK_MODFREE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddgk/algebra.hpp"
#include "ddgk/groebner.hpp"
#include "ddgk/ordering.hpp"

namespace ddgk {

/// An element of the free left module A^rank, sum c * X^alpha e_pos.
class ModElement {
   public:
    using Terms = std::map<ModMonomial, FieldElement>;

    ModElement(NumberField field, std::size_t m, std::size_t n, std::size_t rank);
    /// f placed in position pos (1-based) of A^rank.
    static ModElement embed(const Element& f, std::size_t pos, std::size_t rank);

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t rank() const noexcept { return rank_; }
    const NumberField& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Throws RankMismatch when u.pos is outside 1..rank.
    void add_term(const ModMonomial& u, const FieldElement& c);
    FieldElement coefficient(const ModMonomial& u) const;
    /// The coordinate at position pos, as an element of A.
    Element component(std::size_t pos) const;

    ModElement operator-() const;
    ModElement& operator+=(const ModElement& rhs);
    ModElement& operator-=(const ModElement& rhs);
    friend ModElement operator+(ModElement a, const ModElement& b) { return a += b; }
    friend ModElement operator-(ModElement a, const ModElement& b) { return a -= b; }
    ModElement scaled(const FieldElement& c) const;

    bool operator==(const ModElement& rhs) const;

    Degree tdeg() const;
    std::string to_string() const;

   private:
    void check_compatible(const ModElement& rhs) const;

    NumberField field_;
    std::size_t m_, n_, rank_;
    Terms terms_;
};

/// a * f for a in A, f in A^rank.
ModElement left_mul(const DDAlgebra& alg, const Element& a, const ModElement& f);

struct ModLeadingTerm {
    ModMonomial mono;
    FieldElement coeff;
};

/// Throws ZeroElement.
ModLeadingTerm leading(const ModElement& f, const ModuleOrderingSpec& ord);
ModElement make_monic(const ModElement& f, const ModuleOrderingSpec& ord);

/// Same position and componentwise exponent domination.
bool mod_divides(const ModMonomial& v, const ModMonomial& u);

/// std::nullopt plays the role of the zero lclm across different positions.
std::optional<ModMonomial> mod_lclm(const ModMonomial& u, const ModMonomial& v);

/// Throws NotDivisible, ZeroElement.
ModElement mod_reduce_step(const DDAlgebra& alg, const ModElement& f, const ModElement& g,
                           const ModuleOrderingSpec& ord);

/// Zero when the leading positions differ. Throws ZeroElement, RankMismatch.
ModElement svect(const DDAlgebra& alg, const ModElement& f, const ModElement& g, const ModuleOrderingSpec& ord);

struct ModReductionStep {
    Element quotient;
    std::size_t divisor;
};

struct ModReduction {
    ModElement remainder;
    std::vector<ModReductionStep> steps;
};

ModReduction mod_reduce(const DDAlgebra& alg, const ModElement& f, std::span<const ModElement> basis,
                        const ModuleOrderingSpec& ord, DivisorChoice choice = DivisorChoice::First);
ModElement mod_remainder(const DDAlgebra& alg, const ModElement& f, std::span<const ModElement> basis,
                         const ModuleOrderingSpec& ord, DivisorChoice choice = DivisorChoice::First);
ModElement mod_replay(const DDAlgebra& alg, const ModReduction& red, std::span<const ModElement> basis);

struct ModuleGroebnerBasis {
    DDAlgebra algebra;
    ModuleOrderingSpec ordering;
    std::size_t rank = 1;
    std::vector<ModElement> elements;
    bool minimalized = false;
};

/// Completion over same-position pairs only. Throws RankMismatch when a
/// generator does not live in A^rank.
ModuleGroebnerBasis mod_buchberger(const DDAlgebra& alg, std::span<const ModElement> generators, std::size_t rank,
                                   const ModuleOrderingSpec& ord, BuchbergerOptions options = {});

bool satisfies_svect_criterion(const ModuleGroebnerBasis& gb);
bool is_member(const ModElement& f, const ModuleGroebnerBasis& gb);

/// One staircase per position (index pos - 1).
std::vector<Staircase> staircases_of(const ModuleGroebnerBasis& gb);

}  // namespace ddgk

#endif
