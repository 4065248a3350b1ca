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

#include <doctest.h>

#include "../tests/support/support.hpp"
#include "ddgk/error.hpp"
#include "ddgk/modfree.hpp"

using namespace ddgk;
using namespace ddgk::testing;

namespace {

const OrderingSpec kTdeg{};
const ModuleOrderingSpec kTop{kTdeg, ModuleExtension::TOP};
const ModuleOrderingSpec kPot{kTdeg, ModuleExtension::POT};

ModMonomial mm(ExponentVector a, ExponentVector b, std::size_t pos) { return {{std::move(a), std::move(b)}, pos}; }

ModElement at(const Element& f, std::size_t pos, std::size_t rank) { return ModElement::embed(f, pos, rank); }

}  // namespace

TEST_CASE("module divisibility") {
    CHECK(mod_divides(mm({1}, {1}, 1), mm({2}, {1}, 1)));
    CHECK_FALSE(mod_divides(mm({1}, {0}, 1), mm({2}, {0}, 2)));
    CHECK(mod_divides(mm({1}, {1}, 2), mm({1}, {1}, 2)));
}

TEST_CASE("module lclm") {
    CHECK(mod_lclm(mm({1}, {2}, 1), mm({2}, {1}, 1)) == mm({2}, {2}, 1));
    CHECK_FALSE(mod_lclm(mm({1}, {2}, 1), mm({2}, {1}, 2)).has_value());
    CHECK(mod_lclm(mm({1}, {2}, 2), mm({1}, {2}, 2)) == mm({1}, {2}, 2));
}

TEST_CASE("S-vectors") {
    const DDAlgebra q = quantum_plane();
    const ModElement f = at(term(q, 1, {1}, {1}), 1, 2);
    const ModElement g = at(term(q, 1, {0}, {2}), 1, 2);
    CHECK(svect(q, f, g, kTop).is_zero());
    CHECK(svect(q, f, f, kTop).is_zero());
    CHECK(svect(q, f, at(q.s(0), 2, 2), kTop).is_zero());
    CHECK_THROWS_AS(svect(q, f, ModElement(q.field(), 1, 1, 2), kTop), ZeroElement);
    CHECK_THROWS_AS(svect(q, f, at(q.s(0), 1, 3), kTop), RankMismatch);
}

TEST_CASE("module remainders") {
    const DDAlgebra q = quantum_plane();
    const std::vector<ModElement> g{at(q.d(0), 1, 2)};
    CHECK(mod_remainder(q, at(term(q, 1, {1}, {3}), 1, 2), g, kTop).is_zero());
    const ModElement f = at(term(q, 1, {2}, {0}), 2, 2);
    CHECK(mod_remainder(q, f, g, kTop) == f);
    CHECK(mod_remainder(q, ModElement(q.field(), 1, 1, 2), g, kTop).is_zero());
}

TEST_CASE("module completion examples") {
    const DDAlgebra q = quantum_plane();
    const std::vector<ModElement> f{at(q.d(0), 1, 2), at(q.s(0), 2, 2)};
    const ModuleGroebnerBasis g = mod_buchberger(q, f, 2, kTop);
    CHECK(g.elements.size() == 2);
    CHECK(satisfies_svect_criterion(g));
    for (const auto& x : f) CHECK(is_member(x, g));

    const ModuleGroebnerBasis unit = mod_buchberger(q, std::vector<ModElement>{at(q.one(), 1, 2)}, 2, kTop);
    REQUIRE(unit.elements.size() == 1);
    CHECK(is_member(at(term(q, 5, {3}, {2}), 1, 2), unit));
    CHECK_FALSE(is_member(at(q.one(), 2, 2), unit));

    const std::vector<ModElement> single{at(term(q, 2, {1}, {1}), 2, 3)};
    const ModuleGroebnerBasis one = mod_buchberger(q, single, 3, kTop);
    REQUIRE(one.elements.size() == 1);
    CHECK(one.elements[0] == at(term(q, 1, {1}, {1}), 2, 3));

    CHECK_THROWS_AS(mod_buchberger(q, single, 2, kTop), RankMismatch);
}

TEST_CASE("module elements render per position") {
    const DDAlgebra q = quantum_plane();
    ModElement f = at(q.s(0), 1, 2) + at(term(q, 2, {0}, {1}), 2, 2);
    CHECK(f.to_string() == "(S1)*e1 + (2*D1)*e2");
    CHECK(ModElement(q.field(), 1, 1, 2).to_string() == "0");
    CHECK_THROWS_AS(f.add_term(mm({0}, {0}, 3), q.field().one()), RankMismatch);
}

TEST_CASE("property: rank-one modules agree with ideals") {
    Rng rng(2718);
    for (const auto& [name, alg, gens] : ideal_corpus()) {
        CAPTURE(name);
        std::vector<ModElement> mgens;
        for (const auto& g : gens) mgens.push_back(at(g, 1, 1));
        const GroebnerBasis gb = buchberger(alg, gens, kTdeg);
        const ModuleGroebnerBasis mgb = mod_buchberger(alg, mgens, 1, kTop);
        REQUIRE(gb.elements.size() == mgb.elements.size());
        for (std::size_t i = 0; i < gb.elements.size(); ++i) CHECK(mgb.elements[i] == at(gb.elements[i], 1, 1));
        CHECK(staircases_of(mgb)[0].minimal == staircase_of(gb).minimal);
        for (int trial = 0; trial < 10; ++trial) {
            const Element f = random_element(rng, alg, 4, 4);
            CHECK(mod_remainder(alg, at(f, 1, 1), mgb.elements, kTop) ==
                  at(remainder(alg, f, gb.elements, kTdeg), 1, 1));
            if (gens.size() >= 2) {
                CHECK(svect(alg, mgens[0], mgens[1], kTop) == at(spoly(alg, gens[0], gens[1], kTdeg), 1, 1));
            }
        }
    }
}

TEST_CASE("property: random submodules certify under TOP and POT") {
    Rng rng(161803);
    for (const auto& [name, alg] : presentation_corpus()) {
        CAPTURE(name);
        for (const auto& ord : {kTop, kPot}) {
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<ModElement> f;
                for (int k = 0; k < 2; ++k) f.push_back(random_mod_element(rng, alg, 2, 2, 2));
                const ModuleGroebnerBasis g = mod_buchberger(alg, f, 2, ord);
                CHECK(satisfies_svect_criterion(g));
                for (const auto& x : f) CHECK(is_member(x, g));
                for (int k = 0; k < 5; ++k) {
                    const ModElement h = random_mod_element(rng, alg, 2, 4, 3);
                    const ModReduction a = mod_reduce(alg, h, g.elements, ord, DivisorChoice::First);
                    const ModReduction b = mod_reduce(alg, h, g.elements, ord, DivisorChoice::Last);
                    CHECK(a.remainder == b.remainder);
                    CHECK(mod_replay(alg, a, g.elements) == h);
                    const ModElement combo = left_mul(alg, random_element(rng, alg, 2, 2), f[0]) +
                                             left_mul(alg, random_element(rng, alg, 2, 2), f[1]);
                    CHECK(is_member(combo, g));
                }
            }
        }
    }
}

TEST_CASE("property: irreducible module monomials stay independent") {
    const DDAlgebra q = quantum_plane();
    const std::vector<ModElement> f{at(q.d(0) - q.s(0), 1, 2), at(term(q, 1, {1}, {1}), 2, 2)};
    const ModuleGroebnerBasis g = mod_buchberger(q, f, 2, kTop);
    const auto st = staircases_of(g);
    std::vector<ModMonomial> irr;
    for (std::size_t pos = 1; pos <= 2; ++pos)
        for (const auto& x : exponents_up_to(2, 5))
            if (st[pos - 1].is_irreducible(x)) irr.push_back({Monomial::from_exponents(x, 1), pos});
    for (std::size_t i = 0; i < irr.size(); ++i)
        for (std::size_t j = i + 1; j < irr.size(); ++j) {
            ModElement d(q.field(), 1, 1, 2);
            d.add_term(irr[i], q.field().one());
            d.add_term(irr[j], -q.field().one());
            CHECK_FALSE(mod_remainder(q, d, g.elements, kTop).is_zero());
        }
}
