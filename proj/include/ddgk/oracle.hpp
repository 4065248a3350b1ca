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

#ifndef DDGK_ORACLE_HPP
#define DDGK_ORACLE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "ddgk/dimension.hpp"
#include "ddgk/groebner.hpp"
#include "ddgk/modfree.hpp"
#include "ddgk/rational.hpp"

namespace ddgk {

/// Sparse row-echelon accumulator over Q. Rows are inserted one at a time and
/// reduced against the stored pivots; stored rows have leading entry 1.
class EchelonForm {
   public:
    using Row = std::map<std::size_t, Rational>;

    /// Returns true when the row enlarged the span.
    bool insert(Row row);
    std::size_t rank() const noexcept { return pivots_.size(); }

   private:
    std::map<std::size_t, Row> pivots_;
};

/// The products w * g with tdeg(w) + tdeg(g) <= t, before the scalar sweep.
std::vector<Element> oracle_row_elements(const GroebnerBasis& gb, std::size_t t);
std::vector<ModElement> oracle_row_elements(const ModuleGroebnerBasis& gb, std::size_t t);

/// dim_Q of the degree <= t slice of the quotient, as the corank of the
/// truncated generator rows. Throws NonDegreeOrdering, UncertifiedBasis.
Integer oracle_hf(const GroebnerBasis& gb, std::size_t t);
Integer oracle_hf(const ModuleGroebnerBasis& gb, std::size_t t);

/// min(stability_threshold + 3, 8).
std::size_t default_oracle_bound(const DimensionReport& report);

}  // namespace ddgk

#endif
