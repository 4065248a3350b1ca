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

#include "ddgk/dimension.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "ddgk/error.hpp"

namespace ddgk {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }
RationalPolynomial RationalPolynomial::x() { return RationalPolynomial({Rational(0), Rational(1)}); }

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational RationalPolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& c) const {
    RationalPolynomial acc;
    const RationalPolynomial lin({c, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

RationalPolynomial RationalPolynomial::scaled(const Rational& c) const {
    auto r = coeffs_;
    for (auto& a : r) a *= c;
    return RationalPolynomial(std::move(r));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(r));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? "+" : "-");
        else if (c < 0) out << "-";
        const Rational a = abs(c);
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

TopShave top_shave(const ExponentVector& u, Exponent p) {
    TopShave r{{}, u};
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] >= p) r.top.push_back(i);
        r.shaved[i] = std::min(u[i], p);
    }
    return r;
}

RationalPolynomial binomial_poly(std::size_t q) {
    RationalPolynomial acc = RationalPolynomial::constant(1);
    for (std::size_t k = 1; k <= q; ++k) acc = acc * RationalPolynomial({Rational(1), Rational(1) / static_cast<long>(k)});
    return acc;
}

Integer binomial(std::size_t n, std::size_t k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

struct StaircaseView {
    std::vector<Staircase> per_pos;
    std::size_t m, n, d;
    Exponent p;
};

Exponent shave_threshold_of(const std::vector<Staircase>& per_pos) {
    Exponent p = 0;
    for (const auto& s : per_pos)
        for (const auto& e : s.minimal)
            for (Exponent x : e) p = std::max(p, x);
    return p;
}

StaircaseView view_of(const GroebnerBasis& gb) {
    if (!is_total_degree(gb.ordering))
        throw NonDegreeOrdering("ordering " + to_string(gb.ordering) + " does not refine total degree");
    StaircaseView v{{staircase_of(gb)}, gb.algebra.m(), gb.algebra.n(), gb.algebra.field().degree(), 0};
    v.p = shave_threshold_of(v.per_pos);
    return v;
}

StaircaseView view_of(const ModuleGroebnerBasis& gb) {
    if (!is_total_degree(gb.ordering))
        throw NonDegreeOrdering("module ordering " + to_string(gb.ordering) + " does not refine total degree");
    StaircaseView v{staircases_of(gb), gb.algebra.m(), gb.algebra.n(), gb.algebra.field().degree(), 0};
    v.p = shave_threshold_of(v.per_pos);
    return v;
}

/// Calls f on every exponent vector of length l with entries in [0, bound]
/// and total degree at most max_tdeg, in lexicographic order.
void for_each_exponent(std::size_t l, Exponent bound, std::size_t max_tdeg,
                       const std::function<void(const ExponentVector&)>& f) {
    ExponentVector x(l, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t budget) {
        if (i == l) {
            f(x);
            return;
        }
        const std::size_t top = std::min<std::size_t>(bound, budget);
        for (std::size_t k = 0; k <= top; ++k) {
            x[i] = static_cast<Exponent>(k);
            rec(i + 1, budget - k);
        }
        x[i] = 0;
    };
    rec(0, max_tdeg);
}

DimensionReport report_of(const StaircaseView& v) {
    const std::size_t l = v.m + v.n;
    DimensionReport r;
    r.shave_threshold = v.p;
    r.stability_threshold = l * v.p;
    r.field_degree = v.d;
    r.rank = v.per_pos.size();
    r.variables = l;
    for (std::size_t pos = 1; pos <= v.per_pos.size(); ++pos) {
        for_each_exponent(l, v.p, l * v.p, [&](const ExponentVector& u) {
            if (v.per_pos[pos - 1].dominates(u)) return;
            const std::size_t top = top_shave(u, v.p).top.size();
            ModMonomial mono{Monomial::from_exponents(u, v.m), pos};
            const Rational shift = -Rational(static_cast<long>(mono.tdeg()));
            r.hilbert_polynomial += binomial_poly(top).shifted(shift);
            r.gk_dimension = std::max(r.gk_dimension.value_or(0), top);
            r.shaved_irreducibles.push_back({std::move(mono), top});
        });
    }
    r.hilbert_polynomial = r.hilbert_polynomial.scaled(Rational(static_cast<long>(v.d)));
    return r;
}

Integer count_irreducible(const StaircaseView& v, std::size_t t) {
    const std::size_t l = v.m + v.n;
    Integer count = 0;
    const Exponent bound = static_cast<Exponent>(std::min<std::size_t>(t, UINT32_MAX));
    for (const auto& s : v.per_pos)
        for_each_exponent(l, bound, t, [&](const ExponentVector& u) {
            if (!s.dominates(u)) ++count;
        });
    return count * static_cast<unsigned long>(v.d);
}

}  // namespace

DimensionReport hilbert_data(const GroebnerBasis& gb) { return report_of(view_of(gb)); }
DimensionReport hilbert_data(const ModuleGroebnerBasis& gb) { return report_of(view_of(gb)); }

Integer hilbert_value(const GroebnerBasis& gb, std::size_t t) { return count_irreducible(view_of(gb), t); }
Integer hilbert_value(const ModuleGroebnerBasis& gb, std::size_t t) { return count_irreducible(view_of(gb), t); }

Integer hilbert_formula_value(const DimensionReport& report, std::size_t t) {
    Integer sum = 0;
    for (const auto& w : report.shaved_irreducibles) {
        const std::size_t deg = w.mono.tdeg();
        if (deg > t) continue;
        sum += binomial(t - deg + w.top_size, w.top_size);
    }
    return sum * static_cast<unsigned long>(report.field_degree);
}

}  // namespace ddgk
