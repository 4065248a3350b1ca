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

#ifndef DDGK_DIMENSION_HPP
#define DDGK_DIMENSION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ddgk/algebra.hpp"
#include "ddgk/groebner.hpp"
#include "ddgk/modfree.hpp"
#include "ddgk/rational.hpp"

namespace ddgk {

/// Univariate polynomial over Q, constant term first, trailing zeros trimmed.
class RationalPolynomial {
   public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial x();

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Rational leading_coefficient() const;

    Rational evaluate(const Rational& x) const;
    /// p(x + c).
    RationalPolynomial shifted(const Rational& c) const;
    RationalPolynomial scaled(const Rational& c) const;

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    bool operator==(const RationalPolynomial&) const = default;

    /// e.g. "2*x+1", "1/2*x^2+3/2*x+1".
    std::string to_string(const std::string& var = "x") const;

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct TopShave {
    /// 0-based coordinates with u_i >= p.
    std::vector<std::size_t> top;
    /// u with every exponent capped at p.
    ExponentVector shaved;
};

TopShave top_shave(const ExponentVector& u, Exponent p);

/// binom(x + q, q) as a polynomial in x.
RationalPolynomial binomial_poly(std::size_t q);

/// An element of W_p: an irreducible, p-shaved monomial and its top size.
struct ShavedMonomial {
    ModMonomial mono;
    std::size_t top_size;
};

struct DimensionReport {
    Degree gk_dimension;
    RationalPolynomial hilbert_polynomial;
    std::size_t stability_threshold = 0;
    std::size_t shave_threshold = 0;
    std::size_t field_degree = 1;
    std::size_t rank = 1;
    std::size_t variables = 0;
    std::vector<ShavedMonomial> shaved_irreducibles;
};

/// Throws NonDegreeOrdering unless the basis ordering refines total degree.
DimensionReport hilbert_data(const GroebnerBasis& gb);
DimensionReport hilbert_data(const ModuleGroebnerBasis& gb);

/// d times the number of irreducible monomials of total degree <= t.
Integer hilbert_value(const GroebnerBasis& gb, std::size_t t);
Integer hilbert_value(const ModuleGroebnerBasis& gb, std::size_t t);

/// Exact count assembled from W_p: every irreducible monomial shaves to a
/// unique element of W_p, and the fibre over u has
/// binom(t - tdeg(u) + |top|, |top|) members of degree <= t. Unlike the
/// Hilbert polynomial this is exact below the stability threshold too.
Integer hilbert_formula_value(const DimensionReport& report, std::size_t t);

/// binom(t + l, l) as an integer.
Integer binomial(std::size_t n, std::size_t k);

}  // namespace ddgk

#endif
