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

#ifndef DDGK_NUMBER_FIELD_HPP
#define DDGK_NUMBER_FIELD_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ddgk/rational.hpp"

namespace ddgk {

class FieldElement;

/// The coefficient field Q(theta) = Q[x]/(min_poly). Cheap to copy; all
/// copies share one immutable description. Irreducibility of min_poly is
/// not checked here: FieldElement::inverse() reports ReducibleModulus when
/// it finds a proper factor.
class NumberField {
   public:
    /// min_poly: constant term first, monic, degree >= 1.
    explicit NumberField(qpoly::Poly min_poly);

    /// Q itself, presented as Q[x]/(x).
    static NumberField rationals();

    std::size_t degree() const noexcept { return data_->degree; }
    const qpoly::Poly& min_poly() const noexcept { return data_->min_poly; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The generator theta (equals 0 when degree() == 1 and min_poly = x).
    FieldElement theta() const;
    FieldElement constant(const Rational& q) const;
    /// theta^i for i < degree(): the power basis.
    FieldElement basis(std::size_t i) const;

    bool operator==(const NumberField& other) const noexcept;

   private:
    struct Data {
        qpoly::Poly min_poly;
        std::size_t degree;
    };
    std::shared_ptr<const Data> data_;
};

/// An element of Q(theta) in the power basis, always fully reduced.
class FieldElement {
   public:
    /// coeffs may have any length; they are reduced modulo min_poly.
    FieldElement(NumberField field, qpoly::Poly coeffs);

    const NumberField& field() const noexcept { return field_; }
    /// Exactly field().degree() entries.
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

    bool operator==(const FieldElement& rhs) const;

    /// Extended Euclid against min_poly. Throws ZeroInversion, ReducibleModulus.
    FieldElement inverse() const;

    /// The ring-map image of this element under theta -> image.
    FieldElement substitute(const FieldElement& image) const;

    /// "3/2", "1+theta", "-1/2*theta^2", ...
    std::string to_string() const;

   private:
    FieldElement(NumberField field, std::vector<Rational> reduced, int);
    void check_same_field(const FieldElement& rhs) const;

    NumberField field_;
    std::vector<Rational> coeffs_;
};

/// A Q-algebra automorphism of Q(theta), fixed by the image of theta.
class FieldAutomorphism {
   public:
    /// Throws InvalidFieldAutomorphism if min_poly(theta_image) != 0, and
    /// NotAnAutomorphism if no power <= degree returns theta to itself.
    explicit FieldAutomorphism(FieldElement theta_image);

    static FieldAutomorphism identity(const NumberField& field);

    const FieldElement& theta_image() const noexcept { return theta_image_; }
    const FieldElement& inverse_image() const noexcept { return inverse_image_; }
    std::size_t order() const noexcept { return order_; }
    bool is_identity() const noexcept { return order_ == 1; }

    FieldElement apply(const FieldElement& a) const;
    /// sigma^e for any signed e; reduces e modulo order().
    FieldElement apply_power(long e, const FieldElement& a) const;
    /// sigma^{order-1}.
    FieldAutomorphism inverse() const;
    /// (*this) o other.
    FieldAutomorphism compose(const FieldAutomorphism& other) const;

    bool operator==(const FieldAutomorphism& rhs) const { return theta_image_ == rhs.theta_image_; }

   private:
    FieldAutomorphism(FieldElement theta_image, FieldElement inverse_image, std::size_t order);

    FieldElement theta_image_;
    FieldElement inverse_image_;
    std::size_t order_;
};

}  // namespace ddgk

#endif
