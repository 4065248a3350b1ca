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

#ifndef DDGK_ORDERING_HPP
#define DDGK_ORDERING_HPP

#include <compare>
#include <string>
#include <string_view>

#include "ddgk/algebra.hpp"

namespace ddgk {

enum class OrderFamily {
    /// tdeg first, then the S-block order on alpha, then the D-block order on beta.
    TotalDegreeDD,
    /// S-block order on alpha first, then the D-block order on beta.
    BlockDD,
};

/// Orders within one block of generators; x_1 > x_2 > ... always.
enum class BlockOrder { Lex, DegLex, DegRevLex };

/// A DD-monomial ordering on standard monomials. The D-block order must be
/// degree-compatible (DegLex or DegRevLex); parse_ordering() enforces that.
struct OrderingSpec {
    OrderFamily family = OrderFamily::TotalDegreeDD;
    BlockOrder s_order = BlockOrder::DegLex;
    BlockOrder d_order = BlockOrder::DegLex;

    bool operator==(const OrderingSpec&) const = default;
};

enum class ModuleExtension { TOP, POT };

/// TOP or POT extension of an OrderingSpec to A^p, with e_1 > e_2 > ...
struct ModuleOrderingSpec {
    OrderingSpec base;
    ModuleExtension extension = ModuleExtension::TOP;

    bool operator==(const ModuleOrderingSpec&) const = default;
};

/// Compares two exponent blocks of equal length under a block order.
std::strong_ordering compare_block(BlockOrder order, const ExponentVector& a, const ExponentVector& b);

/// Throws ShapeMismatch when u and v have different (m, n).
std::strong_ordering compare(const OrderingSpec& spec, const Monomial& u, const Monomial& v);
std::strong_ordering compare_module(const ModuleOrderingSpec& spec, const ModMonomial& a, const ModMonomial& b);

bool is_total_degree(const OrderingSpec& spec) noexcept;
bool is_total_degree(const ModuleOrderingSpec& spec) noexcept;

/// "tdeg:deglex,deglex", "block:lex,degrevlex", ... Throws ParseError.
OrderingSpec parse_ordering(std::string_view text);
/// "top" or "pot". Throws ParseError.
ModuleExtension parse_extension(std::string_view text);

std::string to_string(const OrderingSpec& spec);
std::string to_string(ModuleExtension ext);
/// e.g. "tdeg:deglex,deglex/top".
std::string to_string(const ModuleOrderingSpec& spec);

/// Strict-weak-order adaptor: true when a < b.
struct MonomialLess {
    OrderingSpec spec;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(spec, a, b) < 0; }
};

}  // namespace ddgk

#endif
