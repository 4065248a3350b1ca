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

#ifndef DDGK_ALGEBRA_HPP
#define DDGK_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddgk/number_field.hpp"

namespace ddgk {

using Exponent = std::uint32_t;
using ExponentVector = std::vector<Exponent>;

/// Total degree of an element; std::nullopt stands for -infinity (the zero
/// element, or the zero module).
using Degree = std::optional<std::size_t>;

/// A standard monomial S^alpha D^beta.
struct Monomial {
    ExponentVector alpha;
    ExponentVector beta;

    static Monomial one(std::size_t m, std::size_t n) { return {ExponentVector(m, 0), ExponentVector(n, 0)}; }

    std::size_t tdeg() const noexcept;
    bool is_one() const noexcept;
    /// alpha followed by beta, i.e. the exponents of x_1..x_{m+n}.
    ExponentVector exponents() const;
    static Monomial from_exponents(std::span<const Exponent> x, std::size_t m);

    std::string to_string() const;

    auto operator<=>(const Monomial&) const = default;
};

/// A monomial X^alpha e_pos of the free module A^p; positions are 1-based.
struct ModMonomial {
    Monomial mono;
    std::size_t pos = 1;

    std::size_t tdeg() const noexcept { return mono.tdeg(); }
    std::string to_string() const;

    auto operator<=>(const ModMonomial&) const = default;
};

/// A left-coefficient combination sum c_u * u of standard monomials. The
/// storage order is structural, not a monomial ordering: leading data is
/// always computed against an explicit OrderingSpec.
class Element {
   public:
    using Terms = std::map<Monomial, FieldElement>;

    Element(NumberField field, std::size_t m, std::size_t n);

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    const NumberField& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds c*u, dropping the entry if it cancels.
    void add_term(const Monomial& u, const FieldElement& c);
    FieldElement coefficient(const Monomial& u) const;

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    /// Left multiplication by a scalar: c * sum c_u u = sum (c c_u) u.
    Element scaled(const FieldElement& c) const;

    bool operator==(const Element& rhs) const;

    Degree tdeg() const;
    /// True when every term has alpha = 0.
    bool is_d_polynomial() const;

    std::string to_string() const;

   private:
    void check_compatible(const Element& rhs) const;

    NumberField field_;
    std::size_t m_;
    std::size_t n_;
    Terms terms_;
};

/// Row j of a sigma_D matrix holds the coordinates of sigma_i(D_j) in the
/// basis D_1..D_n.
using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// Raw, unvalidated description of A = R[S, D; sigma, 0] of type (m, n).
struct AlgebraPresentation {
    NumberField field = NumberField::rationals();
    std::size_t m = 0;
    std::size_t n = 0;
    /// sigma_i(theta) for each S-generator; empty means all identities.
    std::vector<FieldElement> sigma_theta;
    std::vector<FieldMatrix> sigma_d;
};

/// A validated differential difference algebra with zero derivations.
/// Immutable and cheap to copy.
class DDAlgebra {
   public:
    /// Validates p (see validate()) and caches the inverse maps.
    explicit DDAlgebra(AlgebraPresentation p);

    /// Same as the constructor. Throws ShapeMismatch, InvalidFieldAutomorphism,
    /// NotAnAutomorphism, SingularSigmaMatrix, NonCommutingSigmas.
    static DDAlgebra validate(AlgebraPresentation p) { return DDAlgebra(std::move(p)); }

    std::size_t m() const noexcept;
    std::size_t n() const noexcept;
    std::size_t l() const noexcept { return m() + n(); }
    const NumberField& field() const noexcept;
    const AlgebraPresentation& presentation() const noexcept;

    const FieldAutomorphism& sigma_r(std::size_t i) const;
    const FieldAutomorphism& sigma_r_inv(std::size_t i) const;
    const FieldMatrix& sigma_d(std::size_t i) const;
    const FieldMatrix& sigma_d_inv(std::size_t i) const;

    Element zero() const;
    Element one() const;
    Element constant(const FieldElement& c) const;
    Element monomial(const Monomial& u) const;
    Element term(const FieldElement& c, const Monomial& u) const;
    /// Generators S_i, D_j, 0-based.
    Element s(std::size_t i) const;
    Element d(std::size_t j) const;

    /// Applies sigma_1^{e_1} ... sigma_m^{e_m} (negative powers allowed) to a
    /// polynomial in D only. Throws MixedMonomial if f has an S-part.
    Element sigma_power_on_dpoly(std::span<const long> e, const Element& f) const;

    /// Product in canonical S-before-D normal form. Throws PresentationMismatch.
    Element mul(const Element& f, const Element& g) const;

    /// True when both handles share one validated presentation.
    bool same_as(const DDAlgebra& other) const noexcept { return impl_ == other.impl_; }

    struct Impl;

   private:
    std::shared_ptr<const Impl> impl_;
};

}  // namespace ddgk

#endif
