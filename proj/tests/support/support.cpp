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

#include "support.hpp"

#include <map>

namespace ddgk::testing {

NumberField sqrt2_field() {
    static const NumberField k({Rational(-2), Rational(0), Rational(1)});
    return k;
}

DDAlgebra quantum_plane(long q) {
    const NumberField Q = NumberField::rationals();
    AlgebraPresentation p;
    p.m = 1;
    p.n = 1;
    p.sigma_d = {{{Q.constant(Rational(q))}}};
    return DDAlgebra(p);
}

DDAlgebra commutative(std::size_t m, std::size_t n) {
    const NumberField Q = NumberField::rationals();
    AlgebraPresentation p;
    p.m = m;
    p.n = n;
    for (std::size_t i = 0; i < m; ++i) {
        FieldMatrix id(n, std::vector<FieldElement>(n, Q.zero()));
        for (std::size_t j = 0; j < n; ++j) id[j][j] = Q.one();
        p.sigma_d.push_back(id);
    }
    return DDAlgebra(p);
}

DDAlgebra swap_1_2() {
    const NumberField Q = NumberField::rationals();
    AlgebraPresentation p;
    p.m = 1;
    p.n = 2;
    p.sigma_d = {{{Q.zero(), Q.one()}, {Q.one(), Q.zero()}}};
    return DDAlgebra(p);
}

DDAlgebra sqrt2_twist() {
    const NumberField K = sqrt2_field();
    AlgebraPresentation p;
    p.field = K;
    p.m = 1;
    p.n = 1;
    p.sigma_theta = {-K.theta()};
    p.sigma_d = {{{K.theta()}}};
    return DDAlgebra(p);
}

DDAlgebra swap_scale_2_2() {
    const NumberField Q = NumberField::rationals();
    AlgebraPresentation p;
    p.m = 2;
    p.n = 2;
    p.sigma_d = {{{Q.zero(), Q.one()}, {Q.one(), Q.zero()}}, {{Q.constant(3), Q.zero()}, {Q.zero(), Q.constant(3)}}};
    return DDAlgebra(p);
}

DDAlgebra twisted_2_1() {
    const NumberField K = sqrt2_field();
    AlgebraPresentation p;
    p.field = K;
    p.m = 2;
    p.n = 1;
    p.sigma_theta = {-K.theta(), K.theta()};
    p.sigma_d = {{{K.one()}}, {{K.constant(2)}}};
    return DDAlgebra(p);
}

Element term(const DDAlgebra& alg, const Rational& c, ExponentVector alpha, ExponentVector beta) {
    return alg.term(alg.field().constant(c), Monomial{std::move(alpha), std::move(beta)});
}

std::vector<NamedIdeal> ideal_corpus() {
    std::vector<NamedIdeal> out;
    {
        const DDAlgebra a = quantum_plane();
        out.push_back({"quantum <SD>", a, {term(a, 1, {1}, {1})}});
        out.push_back({"quantum <SD-S, D^2-D>", a,
                       {term(a, 1, {1}, {1}) - term(a, 1, {1}, {0}), term(a, 1, {0}, {2}) - term(a, 1, {0}, {1})}});
        out.push_back({"quantum <S^2+D, SD^2>", a, {term(a, 1, {2}, {0}) + term(a, 1, {0}, {1}), term(a, 1, {1}, {2})}});
        out.push_back({"quantum zero", a, {}});
    }
    {
        const DDAlgebra a = commutative(2, 0);
        out.push_back({"commutative <S1^2, S1S2>", a, {term(a, 1, {2, 0}, {}), term(a, 1, {1, 1}, {})}});
        out.push_back({"commutative <S1^2-S2, S1S2-1/2>", a,
                       {term(a, 1, {2, 0}, {}) - term(a, 1, {0, 1}, {}), term(a, 1, {1, 1}, {}) - term(a, Rational(1, 2), {0, 0}, {})}});
    }
    {
        const DDAlgebra a = swap_1_2();
        out.push_back({"swap <S1D1 + D2, D1D2>", a,
                       {term(a, 1, {1}, {1, 0}) + term(a, 1, {0}, {0, 1}), term(a, 1, {0}, {1, 1})}});
        out.push_back({"swap <D2S1 - S1>", a, {a.mul(a.d(1), a.s(0)) - a.s(0)}});
        out.push_back({"swap <1 + 3 D1>", a, {a.one() + term(a, 3, {0}, {1, 0})}});
    }
    {
        const DDAlgebra a = sqrt2_twist();
        const FieldElement th = a.field().theta();
        out.push_back({"sqrt2 <SD>", a, {term(a, 1, {1}, {1})}});
        out.push_back({"sqrt2 <theta S + D^2, SD>", a,
                       {a.term(th, Monomial{{1}, {0}}) + term(a, 1, {0}, {2}), term(a, 1, {1}, {1})}});
    }
    {
        const DDAlgebra a = swap_scale_2_2();
        out.push_back({"swap-scale <S1D1 - D2, S2^2 D2>", a,
                       {term(a, 1, {1, 0}, {1, 0}) - term(a, 1, {0, 0}, {0, 1}), term(a, 1, {0, 2}, {0, 1})}});
    }
    {
        const DDAlgebra a = twisted_2_1();
        const FieldElement th = a.field().theta();
        out.push_back({"twisted(2,1) <S1 D + theta, S2^2>", a,
                       {term(a, 1, {1, 0}, {1}) + a.constant(th), term(a, 1, {0, 2}, {0})}});
    }
    return out;
}

std::vector<std::pair<std::string, DDAlgebra>> presentation_corpus() {
    return {{"quantum plane", quantum_plane()},       {"quantum plane q=-3", quantum_plane(-3)},
            {"commutative (2,0)", commutative(2, 0)}, {"commutative (1,2)", commutative(1, 2)},
            {"swap (1,2)", swap_1_2()},               {"sqrt2 twist", sqrt2_twist()},
            {"swap-scale (2,2)", swap_scale_2_2()},   {"twisted (2,1)", twisted_2_1()}};
}

Rational random_rational(Rng& rng) {
    Rational q(rng.range(-9, 9), static_cast<unsigned long>(rng.range(1, 4)));
    q.canonicalize();
    return q;
}

FieldElement random_field_element(Rng& rng, const NumberField& field, bool nonzero) {
    for (;;) {
        qpoly::Poly c;
        for (std::size_t i = 0; i < field.degree(); ++i) c.push_back(rng.coin() ? random_rational(rng) : Rational(0));
        FieldElement e(field, c);
        if (!nonzero || !e.is_zero()) return e;
    }
}

Monomial random_monomial(Rng& rng, std::size_t m, std::size_t n, std::size_t max_tdeg) {
    const std::size_t deg = rng.below(max_tdeg + 1);
    ExponentVector x(m + n, 0);
    for (std::size_t k = 0; k < deg && m + n > 0; ++k) ++x[rng.below(m + n)];
    return Monomial::from_exponents(x, m);
}

Element random_element(Rng& rng, const DDAlgebra& alg, std::size_t max_terms, std::size_t max_tdeg) {
    Element f = alg.zero();
    while (f.is_zero()) {
        const std::size_t k = 1 + rng.below(max_terms);
        for (std::size_t i = 0; i < k; ++i)
            f.add_term(random_monomial(rng, alg.m(), alg.n(), max_tdeg), random_field_element(rng, alg.field()));
    }
    return f;
}

ModElement random_mod_element(Rng& rng, const DDAlgebra& alg, std::size_t rank, std::size_t max_terms,
                              std::size_t max_tdeg) {
    ModElement f(alg.field(), alg.m(), alg.n(), rank);
    while (f.is_zero()) {
        const std::size_t k = 1 + rng.below(max_terms);
        for (std::size_t i = 0; i < k; ++i)
            f.add_term({random_monomial(rng, alg.m(), alg.n(), max_tdeg), 1 + rng.below(rank)},
                       random_field_element(rng, alg.field()));
    }
    return f;
}

namespace {

using DPoly = std::map<ExponentVector, FieldElement>;

void accumulate(DPoly& p, const ExponentVector& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

DPoly dpoly_mul(const DPoly& a, const DPoly& b) {
    DPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExponentVector e = ea;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            accumulate(out, e, ca * cb);
        }
    return out;
}

/// sigma_i^{-k}(c) by k applications of the inverse automorphism.
FieldElement coeff_back(const DDAlgebra& alg, const ExponentVector& alpha, FieldElement c) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (Exponent k = 0; k < alpha[i]; ++k) c = alg.sigma_r_inv(i).apply(c);
    return c;
}

/// Right multiplication of one term by S_i.
Element times_s(const DDAlgebra& alg, const Monomial& u, const FieldElement& c, std::size_t i) {
    const std::size_t n = alg.n();
    DPoly image{{ExponentVector(n, 0), alg.field().one()}};
    const FieldMatrix& a = alg.sigma_d(i);
    for (std::size_t j = 0; j < n; ++j) {
        DPoly lin;
        for (std::size_t l = 0; l < n; ++l) {
            ExponentVector e(n, 0);
            e[l] = 1;
            accumulate(lin, e, a[j][l]);
        }
        for (Exponent k = 0; k < u.beta[j]; ++k) image = dpoly_mul(image, lin);
    }
    ExponentVector alpha = u.alpha;
    ++alpha[i];
    Element out = alg.zero();
    for (const auto& [gamma, r] : image) out.add_term(Monomial{alpha, gamma}, c * coeff_back(alg, alpha, r));
    return out;
}

Element times_d(const DDAlgebra& alg, const Monomial& u, const FieldElement& c, std::size_t j) {
    Monomial v = u;
    ++v.beta[j];
    return alg.term(c, v);
}

Element times_scalar(const DDAlgebra& alg, const Element& f, const FieldElement& r) {
    Element out = alg.zero();
    for (const auto& [u, c] : f.terms()) out.add_term(u, c * coeff_back(alg, u.alpha, r));
    return out;
}

}  // namespace

Element naive_mul(const DDAlgebra& alg, const Element& f, const Element& g) {
    Element out = alg.zero();
    for (const auto& [v, cv] : g.terms()) {
        Element acc = times_scalar(alg, f, cv);
        for (std::size_t i = 0; i < alg.m(); ++i)
            for (Exponent k = 0; k < v.alpha[i]; ++k) {
                Element next = alg.zero();
                for (const auto& [u, c] : acc.terms()) next += times_s(alg, u, c, i);
                acc = next;
            }
        for (std::size_t j = 0; j < alg.n(); ++j)
            for (Exponent k = 0; k < v.beta[j]; ++k) {
                Element next = alg.zero();
                for (const auto& [u, c] : acc.terms()) next += times_d(alg, u, c, j);
                acc = next;
            }
        out += acc;
    }
    return out;
}

std::vector<ExponentVector> exponents_up_to(std::size_t l, std::size_t t) {
    std::vector<ExponentVector> out;
    ExponentVector x(l, 0);
    for (;;) {
        std::size_t sum = 0;
        for (Exponent e : x) sum += e;
        if (sum <= t) out.push_back(x);
        std::size_t k = 0;
        while (k < l && x[k] == t) x[k++] = 0;
        if (k == l) break;
        ++x[k];
    }
    return out;
}

std::size_t brute_irreducible_count(const std::vector<ExponentVector>& lms, std::size_t l, std::size_t t) {
    std::size_t count = 0;
    for (const auto& x : exponents_up_to(l, t)) {
        bool reducible = false;
        for (const auto& e : lms) {
            bool below = true;
            for (std::size_t k = 0; k < l; ++k) below = below && e[k] <= x[k];
            reducible = reducible || below;
        }
        if (!reducible) ++count;
    }
    return count;
}

unsigned long long pascal(std::size_t n, std::size_t k) {
    std::vector<std::vector<unsigned long long>> c(n + 1, std::vector<unsigned long long>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return k > n ? 0 : c[n][k];
}

}  // namespace ddgk::testing
