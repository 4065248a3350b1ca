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

#include "ddgk/ordering.hpp"

#include <numeric>

#include "ddgk/error.hpp"

namespace ddgk {

namespace {

std::size_t block_degree(const ExponentVector& a) { return std::accumulate(a.begin(), a.end(), std::size_t{0}); }

std::strong_ordering lex(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

// Among equal degrees, the monomial with the smaller exponent in the last
// differing variable is larger.
std::strong_ordering revlex(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_block(BlockOrder order, const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw ShapeMismatch("exponent blocks differ in length");
    switch (order) {
        case BlockOrder::Lex:
            return lex(a, b);
        case BlockOrder::DegLex:
            if (auto c = block_degree(a) <=> block_degree(b); c != 0) return c;
            return lex(a, b);
        case BlockOrder::DegRevLex:
            if (auto c = block_degree(a) <=> block_degree(b); c != 0) return c;
            return revlex(a, b);
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const OrderingSpec& spec, const Monomial& u, const Monomial& v) {
    if (u.alpha.size() != v.alpha.size() || u.beta.size() != v.beta.size())
        throw ShapeMismatch("cannot compare " + u.to_string() + " and " + v.to_string() + ": different (m,n)");
    if (spec.family == OrderFamily::TotalDegreeDD)
        if (auto c = u.tdeg() <=> v.tdeg(); c != 0) return c;
    if (auto c = compare_block(spec.s_order, u.alpha, v.alpha); c != 0) return c;
    return compare_block(spec.d_order, u.beta, v.beta);
}

std::strong_ordering compare_module(const ModuleOrderingSpec& spec, const ModMonomial& a, const ModMonomial& b) {
    // Smaller index is the larger position.
    const auto by_pos = b.pos <=> a.pos;
    if (spec.extension == ModuleExtension::POT) {
        if (by_pos != 0) return by_pos;
        return compare(spec.base, a.mono, b.mono);
    }
    if (auto c = compare(spec.base, a.mono, b.mono); c != 0) return c;
    return by_pos;
}

bool is_total_degree(const OrderingSpec& spec) noexcept { return spec.family == OrderFamily::TotalDegreeDD; }

bool is_total_degree(const ModuleOrderingSpec& spec) noexcept {
    return spec.extension == ModuleExtension::TOP && is_total_degree(spec.base);
}

namespace {

BlockOrder parse_block(std::string_view s, bool allow_lex) {
    if (s == "lex" && allow_lex) return BlockOrder::Lex;
    if (s == "deglex") return BlockOrder::DegLex;
    if (s == "degrevlex") return BlockOrder::DegRevLex;
    throw ParseError("unknown block order \"" + std::string(s) + "\"" +
                     (allow_lex ? "" : " (the D-block order must be deglex or degrevlex)"));
}

const char* block_name(BlockOrder o) {
    switch (o) {
        case BlockOrder::Lex: return "lex";
        case BlockOrder::DegLex: return "deglex";
        case BlockOrder::DegRevLex: return "degrevlex";
    }
    return "?";
}

}  // namespace

OrderingSpec parse_ordering(std::string_view text) {
    const auto colon = text.find(':');
    const auto comma = text.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon)
        throw ParseError("ordering must look like \"tdeg:deglex,deglex\", got \"" + std::string(text) + "\"");
    OrderingSpec spec;
    const auto family = text.substr(0, colon);
    if (family == "tdeg") spec.family = OrderFamily::TotalDegreeDD;
    else if (family == "block") spec.family = OrderFamily::BlockDD;
    else throw ParseError("unknown ordering family \"" + std::string(family) + "\" (expected tdeg or block)");
    spec.s_order = parse_block(text.substr(colon + 1, comma - colon - 1), true);
    spec.d_order = parse_block(text.substr(comma + 1), false);
    return spec;
}

ModuleExtension parse_extension(std::string_view text) {
    if (text == "top") return ModuleExtension::TOP;
    if (text == "pot") return ModuleExtension::POT;
    throw ParseError("module extension must be \"top\" or \"pot\", got \"" + std::string(text) + "\"");
}

std::string to_string(const OrderingSpec& spec) {
    return std::string(spec.family == OrderFamily::TotalDegreeDD ? "tdeg:" : "block:") + block_name(spec.s_order) +
           "," + block_name(spec.d_order);
}

std::string to_string(ModuleExtension ext) { return ext == ModuleExtension::TOP ? "top" : "pot"; }

std::string to_string(const ModuleOrderingSpec& spec) { return to_string(spec.base) + "/" + to_string(spec.extension); }

}  // namespace ddgk
