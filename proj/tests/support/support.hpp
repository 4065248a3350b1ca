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

#ifndef DDGK_TESTS_SUPPORT_HPP
#define DDGK_TESTS_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ddgk/algebra.hpp"
#include "ddgk/groebner.hpp"
#include "ddgk/modfree.hpp"

namespace ddgk::testing {

// Fixtures.
DDAlgebra quantum_plane(long q = 2);
/// All sigmas the identity.
DDAlgebra commutative(std::size_t m, std::size_t n);
/// Type (1,2), sigma(D_1) = D_2, sigma(D_2) = D_1.
DDAlgebra swap_1_2();
/// R = Q(theta), theta^2 = 2; sigma(theta) = -theta, sigma(D) = theta D.
DDAlgebra sqrt2_twist();
/// Type (2,2) over Q: sigma_1 swaps D_1, D_2 and sigma_2 scales both by 3.
DDAlgebra swap_scale_2_2();
/// Type (2,1) over Q(theta), theta^2 = 2: sigma_1(theta) = -theta, sigma_1(D) = D,
/// sigma_2 = id on R and sigma_2(D) = 2D.
DDAlgebra twisted_2_1();

NumberField sqrt2_field();

/// c * S^alpha D^beta with c rational.
Element term(const DDAlgebra& alg, const Rational& c, ExponentVector alpha, ExponentVector beta);

struct NamedIdeal {
    std::string name;
    DDAlgebra algebra;
    std::vector<Element> generators;
};

/// The ideal corpus shared by property and acceptance tests.
std::vector<NamedIdeal> ideal_corpus();

/// Every presentation fixture.
std::vector<std::pair<std::string, DDAlgebra>> presentation_corpus();

// Seeded generators.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }
    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin() { return below(2) == 1; }

   private:
    std::mt19937_64 gen_;
};

Rational random_rational(Rng& rng);
FieldElement random_field_element(Rng& rng, const NumberField& field, bool nonzero = true);
Monomial random_monomial(Rng& rng, std::size_t m, std::size_t n, std::size_t max_tdeg);
Element random_element(Rng& rng, const DDAlgebra& alg, std::size_t max_terms, std::size_t max_tdeg);
ModElement random_mod_element(Rng& rng, const DDAlgebra& alg, std::size_t rank, std::size_t max_terms,
                              std::size_t max_tdeg);

// Independent oracles.

/// Product built one generator at a time from the defining relations only:
/// S_i r = sigma_i^{-1}(r) S_i, D_j r = r D_j, D_j S_i = S_i sigma_i(D_j).
Element naive_mul(const DDAlgebra& alg, const Element& f, const Element& g);

/// All exponent vectors of length l with total degree <= t (odometer order).
std::vector<ExponentVector> exponents_up_to(std::size_t l, std::size_t t);

/// Count of exponent vectors of tdeg <= t not dominated by any of lms.
std::size_t brute_irreducible_count(const std::vector<ExponentVector>& lms, std::size_t l, std::size_t t);

/// binom(n, k) by Pascal's triangle.
unsigned long long pascal(std::size_t n, std::size_t k);

}  // namespace ddgk::testing

#endif
