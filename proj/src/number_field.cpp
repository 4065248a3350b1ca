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

#include "ddgk/number_field.hpp"

#include <sstream>
#include <utility>

#include "ddgk/error.hpp"

namespace ddgk {

NumberField::NumberField(qpoly::Poly min_poly) {
    qpoly::trim(min_poly);
    const int deg = qpoly::degree(min_poly);
    if (deg < 1) throw InvalidMinimalPolynomial("minimal polynomial must have degree >= 1");
    if (min_poly.back() != 1) throw InvalidMinimalPolynomial("minimal polynomial must be monic");
    data_ = std::make_shared<const Data>(Data{std::move(min_poly), static_cast<std::size_t>(deg)});
}

NumberField NumberField::rationals() { return NumberField({Rational(0), Rational(1)}); }

FieldElement NumberField::zero() const { return FieldElement(*this, {}); }
FieldElement NumberField::one() const { return FieldElement(*this, {Rational(1)}); }
FieldElement NumberField::theta() const { return FieldElement(*this, {Rational(0), Rational(1)}); }
FieldElement NumberField::constant(const Rational& q) const { return FieldElement(*this, {q}); }

FieldElement NumberField::basis(std::size_t i) const {
    qpoly::Poly p(i + 1);
    p[i] = 1;
    return FieldElement(*this, std::move(p));
}

bool NumberField::operator==(const NumberField& other) const noexcept {
    return data_ == other.data_ || data_->min_poly == other.data_->min_poly;
}

// --- FieldElement -----------------------------------------------------------

namespace {

/// Reduces p modulo the monic polynomial mp of degree d into exactly d slots.
std::vector<Rational> reduce_mod(qpoly::Poly p, const qpoly::Poly& mp, std::size_t d) {
    for (std::size_t i = p.size(); i-- > d;) {
        if (p[i] == 0) continue;
        const Rational c = p[i];
        for (std::size_t k = 0; k <= d; ++k) p[i - d + k] -= c * mp[k];
    }
    p.resize(d);
    return p;
}

}  // namespace

FieldElement::FieldElement(NumberField field, qpoly::Poly coeffs)
    : field_(std::move(field)), coeffs_(reduce_mod(std::move(coeffs), field_.min_poly(), field_.degree())) {}

FieldElement::FieldElement(NumberField field, std::vector<Rational> reduced, int)
    : field_(std::move(field)), coeffs_(std::move(reduced)) {}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (!(field_ == rhs.field_)) throw FieldMismatch("field elements belong to different number fields");
}

bool FieldElement::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const noexcept {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

FieldElement FieldElement::operator-() const {
    auto r = coeffs_;
    for (auto& c : r) c = -c;
    return FieldElement(field_, std::move(r), 0);
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    const std::size_t d = coeffs_.size();
    if (d == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    qpoly::Poly prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = reduce_mod(std::move(prod), field_.min_poly(), d);
    return *this;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ZeroInversion("inverse of zero");
    // Invariant: s0 * a == r0 and s1 * a == r1 (mod min_poly).
    qpoly::Poly r0 = field_.min_poly(), r1 = coeffs_;
    qpoly::Poly s0, s1{Rational(1)};
    qpoly::trim(r1);
    while (!qpoly::is_zero(r1)) {
        qpoly::Poly q, r;
        qpoly::divmod(r0, r1, q, r);
        qpoly::Poly s = qpoly::sub(s0, qpoly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (qpoly::degree(r0) > 0)
        throw ReducibleModulus("minimal polynomial has a proper factor of degree " +
                               std::to_string(qpoly::degree(r0)));
    return FieldElement(field_, qpoly::scale(s0, 1 / r0[0]));
}

FieldElement FieldElement::substitute(const FieldElement& image) const {
    check_same_field(image);
    FieldElement acc = field_.constant(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc *= image;
        acc.coeffs_[0] += coeffs_[i];
    }
    return acc;
}

std::string FieldElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? "+" : "-");
        else if (c < 0) out << "-";
        const Rational a = abs(c);
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "theta";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

// --- FieldAutomorphism ------------------------------------------------------

FieldAutomorphism::FieldAutomorphism(FieldElement theta_image, FieldElement inverse_image, std::size_t order)
    : theta_image_(std::move(theta_image)), inverse_image_(std::move(inverse_image)), order_(order) {}

FieldAutomorphism::FieldAutomorphism(FieldElement theta_image)
    : theta_image_(theta_image), inverse_image_(theta_image), order_(0) {
    const NumberField& field = theta_image_.field();
    const auto& mp = field.min_poly();
    FieldElement acc = field.constant(mp.back());
    for (std::size_t i = mp.size() - 1; i-- > 0;) acc = acc * theta_image_ + field.constant(mp[i]);
    if (!acc.is_zero())
        throw InvalidFieldAutomorphism("theta -> " + theta_image_.to_string() +
                                       " does not satisfy the minimal polynomial");

    const FieldElement theta = field.theta();
    FieldElement previous = theta;  // sigma^{k-1}(theta)
    FieldElement current = theta_image_;  // sigma^k(theta)
    for (std::size_t k = 1; k <= field.degree(); ++k) {
        if (current == theta) {
            order_ = k;
            inverse_image_ = previous;
            return;
        }
        previous = current;
        current = current.substitute(theta_image_);
    }
    throw NotAnAutomorphism("theta -> " + theta_image_.to_string() + " has no finite order <= " +
                            std::to_string(field.degree()));
}

FieldAutomorphism FieldAutomorphism::identity(const NumberField& field) {
    return FieldAutomorphism(field.theta(), field.theta(), 1);
}

FieldElement FieldAutomorphism::apply(const FieldElement& a) const {
    if (order_ == 1) return a;
    return a.substitute(theta_image_);
}

FieldElement FieldAutomorphism::apply_power(long e, const FieldElement& a) const {
    if (order_ == 1) return a;
    const long n = static_cast<long>(order_);
    long k = ((e % n) + n) % n;
    FieldElement r = a;
    for (; k > 0; --k) r = r.substitute(theta_image_);
    return r;
}

FieldAutomorphism FieldAutomorphism::inverse() const {
    return FieldAutomorphism(inverse_image_, theta_image_, order_);
}

FieldAutomorphism FieldAutomorphism::compose(const FieldAutomorphism& other) const {
    // (this o other)(theta) = this(other(theta)).
    return FieldAutomorphism(apply(other.theta_image_));
}

}  // namespace ddgk
