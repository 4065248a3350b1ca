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

#include <algorithm>

#include "../tests/support/support.hpp"
#include "ddgk/error.hpp"
#include "ddgk/groebner.hpp"
#include "ddgk/ordering.hpp"

using namespace ddgk;
using namespace ddgk::testing;

namespace {

Monomial mono(ExponentVector a, ExponentVector b) { return {std::move(a), std::move(b)}; }

const OrderingSpec kTdeg{};
const OrderingSpec kBlock{OrderFamily::BlockDD, BlockOrder::Lex, BlockOrder::DegLex};

}  // namespace

TEST_CASE("total degree ordering") {
    CHECK(compare(kTdeg, mono({1}, {0}), mono({0}, {2})) < 0);
    CHECK(compare(kTdeg, mono({1}, {0}), mono({0}, {1})) > 0);
    const Monomial u = mono({2}, {1});
    CHECK(compare(kTdeg, u, u) == 0);
    CHECK_THROWS_AS(compare(kTdeg, mono({1}, {}), mono({1}, {0})), ShapeMismatch);
}

TEST_CASE("block ordering puts every S above every pure D power") {
    for (Exponent k = 0; k < 20; ++k) CHECK(compare(kBlock, mono({1}, {0}), mono({0}, {k})) > 0);
}

TEST_CASE("block orders within a block") {
    const ExponentVector a{1, 0, 2}, b{0, 3, 0}, c{2, 0, 0};
    CHECK(compare_block(BlockOrder::Lex, a, b) > 0);
    CHECK(compare_block(BlockOrder::DegLex, c, a) < 0);
    // x1 x3^2 vs x2^3 under degrevlex: last differing exponent x3, larger loses.
    CHECK(compare_block(BlockOrder::DegRevLex, a, b) < 0);
    CHECK(compare_block(BlockOrder::DegLex, a, b) > 0);
}

TEST_CASE("module extensions") {
    const ModuleOrderingSpec top{kTdeg, ModuleExtension::TOP};
    const ModuleOrderingSpec pot{kTdeg, ModuleExtension::POT};
    const ModMonomial xe2{mono({1}, {0}), 2}, e1{mono({0}, {0}), 1};
    CHECK(compare_module(top, xe2, e1) > 0);
    CHECK(compare_module(pot, e1, xe2) > 0);
    CHECK(compare_module(top, e1, e1) == 0);
    CHECK(compare_module(top, ModMonomial{mono({1}, {0}), 1}, xe2) > 0);
}

TEST_CASE("degree compatibility") {
    CHECK(is_total_degree(kTdeg));
    CHECK_FALSE(is_total_degree(kBlock));
    CHECK(is_total_degree(ModuleOrderingSpec{kTdeg, ModuleExtension::TOP}));
    CHECK_FALSE(is_total_degree(ModuleOrderingSpec{kTdeg, ModuleExtension::POT}));
}

TEST_CASE("ordering names round-trip") {
    for (const char* name : {"tdeg:deglex,deglex", "tdeg:lex,degrevlex", "block:lex,deglex", "block:degrevlex,degrevlex"})
        CHECK(to_string(parse_ordering(name)) == name);
    CHECK_THROWS_AS(parse_ordering("block:lex,lex"), ParseError);
    CHECK_THROWS_AS(parse_ordering("weird"), ParseError);
    CHECK(parse_extension("pot") == ModuleExtension::POT);
    CHECK_THROWS_AS(parse_extension("sideways"), ParseError);
}

TEST_CASE("property: total order, degree compatibility and well-ordering on samples") {
    Rng rng(31337);
    const OrderingSpec specs[] = {kTdeg, parse_ordering("tdeg:degrevlex,degrevlex"), parse_ordering("tdeg:lex,deglex"),
                                  kBlock, parse_ordering("block:deglex,degrevlex")};
    for (const auto& spec : specs) {
        CAPTURE(to_string(spec));
        std::vector<Monomial> sample;
        for (int i = 0; i < 120; ++i) sample.push_back(random_monomial(rng, 2, 2, 6));
        for (const auto& u : sample)
            for (const auto& v : sample) {
                const auto c = compare(spec, u, v);
                CHECK((c == 0) == (u == v));
                CHECK((compare(spec, v, u) < 0) == (c > 0));
                if (is_total_degree(spec) && u.tdeg() > v.tdeg()) CHECK(c > 0);
            }
        std::vector<Monomial> sorted = sample;
        std::sort(sorted.begin(), sorted.end(), MonomialLess{spec});
        for (std::size_t i = 1; i < sorted.size(); ++i) CHECK(compare(spec, sorted[i - 1], sorted[i]) <= 0);
        for (std::size_t i = 0; i + 2 < sample.size(); ++i) {
            const auto &a = sample[i], &b = sample[i + 1], &c = sample[i + 2];
            if (compare(spec, a, b) < 0 && compare(spec, b, c) < 0) CHECK(compare(spec, a, c) < 0);
        }
    }
}

TEST_CASE("property: left admissibility of total degree orderings") {
    Rng rng(4242);
    for (const auto& [name, alg] : presentation_corpus()) {
        CAPTURE(name);
        for (int trial = 0; trial < 60; ++trial) {
            Monomial u = random_monomial(rng, alg.m(), alg.n(), 4);
            Monomial v = random_monomial(rng, alg.m(), alg.n(), 4);
            if (u == v) continue;
            if (compare(kTdeg, u, v) < 0) std::swap(u, v);
            const Element f = random_element(rng, alg, 3, 3);
            CHECK(compare(kTdeg, leading(alg.mul(f, alg.monomial(u)), kTdeg).mono,
                          leading(alg.mul(f, alg.monomial(v)), kTdeg).mono) > 0);
        }
    }
}

TEST_CASE("right admissibility fails in the swap presentation") {
    const DDAlgebra s = swap_1_2();
    // D1 > D2 yet D1 S1 = S1 D2 < S1 D1 = D2 S1.
    CHECK(compare(kTdeg, mono({0}, {1, 0}), mono({0}, {0, 1})) > 0);
    CHECK(compare(kTdeg, leading(s.mul(s.d(0), s.s(0)), kTdeg).mono, leading(s.mul(s.d(1), s.s(0)), kTdeg).mono) < 0);
}
