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

#include "ddgk/algebra.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "ddgk/error.hpp"

namespace ddgk {

// --- Monomial ---------------------------------------------------------------

std::size_t Monomial::tdeg() const noexcept {
    return std::accumulate(alpha.begin(), alpha.end(), std::size_t{0}) +
           std::accumulate(beta.begin(), beta.end(), std::size_t{0});
}

bool Monomial::is_one() const noexcept { return tdeg() == 0; }

ExponentVector Monomial::exponents() const {
    ExponentVector x(alpha);
    x.insert(x.end(), beta.begin(), beta.end());
    return x;
}

Monomial Monomial::from_exponents(std::span<const Exponent> x, std::size_t m) {
    return {ExponentVector(x.begin(), x.begin() + m), ExponentVector(x.begin() + m, x.end())};
}

std::string Monomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](char name, const ExponentVector& e) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) out << "*";
            out << name << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
            first = false;
        }
    };
    emit('S', alpha);
    emit('D', beta);
    if (first) return "1";
    return out.str();
}

std::string ModMonomial::to_string() const {
    const std::string e = "e" + std::to_string(pos);
    return mono.is_one() ? e : mono.to_string() + "*" + e;
}

// --- Element ----------------------------------------------------------------

Element::Element(NumberField field, std::size_t m, std::size_t n) : field_(std::move(field)), m_(m), n_(n) {}

void Element::add_term(const Monomial& u, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(u);
    if (it == terms_.end()) {
        terms_.emplace(u, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FieldElement Element::coefficient(const Monomial& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Element::check_compatible(const Element& rhs) const {
    if (m_ != rhs.m_ || n_ != rhs.n_ || !(field_ == rhs.field_))
        throw PresentationMismatch("elements belong to different algebras");
}

Element Element::operator-() const {
    Element r(field_, m_, n_);
    for (const auto& [u, c] : terms_) r.terms_.emplace(u, -c);
    return r;
}

Element& Element::operator+=(const Element& rhs) {
    check_compatible(rhs);
    for (const auto& [u, c] : rhs.terms_) add_term(u, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    check_compatible(rhs);
    for (const auto& [u, c] : rhs.terms_) add_term(u, -c);
    return *this;
}

Element Element::scaled(const FieldElement& c) const {
    Element r(field_, m_, n_);
    if (c.is_zero()) return r;
    for (const auto& [u, a] : terms_) r.terms_.emplace(u, c * a);
    return r;
}

bool Element::operator==(const Element& rhs) const {
    return m_ == rhs.m_ && n_ == rhs.n_ && field_ == rhs.field_ && terms_ == rhs.terms_;
}

Degree Element::tdeg() const {
    Degree d;
    for (const auto& [u, c] : terms_) d = std::max(d.value_or(0), u.tdeg());
    return d;
}

bool Element::is_d_polynomial() const {
    for (const auto& [u, c] : terms_)
        for (auto a : u.alpha)
            if (a != 0) return false;
    return true;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest structural key first reads more naturally than ascending.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [u, c] = *it;
        std::string cs = c.to_string();
        const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        if (!first) out << " + ";
        if (u.is_one()) {
            out << (compound ? "(" + cs + ")" : cs);
        } else if (c.is_one()) {
            out << u.to_string();
        } else if ((-c).is_one()) {
            out << "-" << u.to_string();
        } else {
            out << (compound ? "(" + cs + ")" : cs) << "*" << u.to_string();
        }
        first = false;
    }
    return out.str();
}

// --- skew maps --------------------------------------------------------------

namespace {

using DPoly = std::map<ExponentVector, FieldElement>;

void dpoly_add(DPoly& p, const ExponentVector& beta, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = p.find(beta);
    if (it == p.end()) {
        p.emplace(beta, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

FieldMatrix identity_matrix(const NumberField& field, std::size_t n) {
    FieldMatrix a(n, std::vector<FieldElement>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = field.one();
    return a;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b, const NumberField& field) {
    const std::size_t n = a.size();
    FieldMatrix c(n, std::vector<FieldElement>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

/// Gauss-Jordan inverse; std::nullopt when singular.
std::optional<FieldMatrix> matrix_inverse(FieldMatrix a, const NumberField& field) {
    const std::size_t n = a.size();
    FieldMatrix inv = identity_matrix(field, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const FieldElement s = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const FieldElement f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// A ring automorphism of R[D_1..D_n] fixed by theta's image and the
/// images of the D_j (rows of `matrix`).
struct SkewMap {
    FieldAutomorphism coeff;
    FieldMatrix matrix;

    FieldElement on_scalar(const FieldElement& c) const { return coeff.apply(c); }

    FieldMatrix on_matrix(const FieldMatrix& p) const {
        FieldMatrix r = p;
        for (auto& row : r)
            for (auto& x : row) x = coeff.apply(x);
        return r;
    }

    /// (*this) o other: theta -> this(other(theta)), D -> this(P) * T.
    SkewMap compose(const SkewMap& other, const NumberField& field) const {
        return {coeff.compose(other.coeff), matmul(on_matrix(other.matrix), matrix, field)};
    }

    /// Image of a D-polynomial.
    DPoly apply(const DPoly& f, const NumberField& field) const {
        const std::size_t n = matrix.size();
        // powers[j][k] = (sum_s matrix[j][s] D_s)^k, built on demand.
        std::vector<std::vector<DPoly>> powers(n);
        auto power = [&](std::size_t j, std::size_t k) -> const DPoly& {
            auto& pj = powers[j];
            if (pj.empty()) pj.push_back(DPoly{{ExponentVector(n, 0), field.one()}});
            while (pj.size() <= k) {
                DPoly next;
                for (const auto& [gamma, c] : pj.back())
                    for (std::size_t s = 0; s < n; ++s) {
                        if (matrix[j][s].is_zero()) continue;
                        ExponentVector g = gamma;
                        ++g[s];
                        dpoly_add(next, g, c * matrix[j][s]);
                    }
                pj.push_back(std::move(next));
            }
            return pj[k];
        };

        DPoly out;
        for (const auto& [beta, c] : f) {
            DPoly acc{{ExponentVector(n, 0), on_scalar(c)}};
            for (std::size_t j = 0; j < n; ++j) {
                if (beta[j] == 0) continue;
                const DPoly& pw = power(j, beta[j]);
                DPoly next;
                for (const auto& [g1, c1] : acc)
                    for (const auto& [g2, c2] : pw) {
                        ExponentVector g = g1;
                        for (std::size_t s = 0; s < n; ++s) g[s] += g2[s];
                        dpoly_add(next, g, c1 * c2);
                    }
                acc = std::move(next);
            }
            for (const auto& [gamma, c2] : acc) dpoly_add(out, gamma, c2);
        }
        return out;
    }
};

SkewMap skew_identity(const NumberField& field, std::size_t n) {
    return {FieldAutomorphism::identity(field), identity_matrix(field, n)};
}

SkewMap skew_power(const SkewMap& base, std::size_t k, const NumberField& field, std::size_t n) {
    SkewMap result = skew_identity(field, n);
    SkewMap sq = base;
    while (k > 0) {
        if (k & 1) result = result.compose(sq, field);
        k >>= 1;
        if (k > 0) sq = sq.compose(sq, field);
    }
    return result;
}

}  // namespace

// --- DDAlgebra --------------------------------------------------------------

struct DDAlgebra::Impl {
    AlgebraPresentation p;
    std::vector<FieldAutomorphism> sigma_r;
    std::vector<FieldAutomorphism> sigma_r_inv;
    std::vector<FieldMatrix> sigma_d_inv;
    std::vector<SkewMap> forward;
    std::vector<SkewMap> backward;
    bool coefficients_fixed = true;  // every sigma_i|_R is the identity

    /// sigma_1^{e_1} ... sigma_m^{e_m} as one skew map.
    SkewMap power(std::span<const long> e) const {
        SkewMap r = skew_identity(p.field, p.n);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const SkewMap& base = e[i] > 0 ? forward[i] : backward[i];
            r = r.compose(skew_power(base, static_cast<std::size_t>(e[i] > 0 ? e[i] : -e[i]), p.field, p.n),
                          p.field);
        }
        return r;
    }

    /// sigma^{-alpha} restricted to R.
    FieldElement coeff_neg_power(const ExponentVector& alpha, FieldElement c) const {
        if (coefficients_fixed) return c;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] != 0) c = sigma_r[i].apply_power(-static_cast<long>(alpha[i]), c);
        return c;
    }
};

DDAlgebra::DDAlgebra(AlgebraPresentation p) {
    auto impl = std::make_shared<Impl>();
    const NumberField& field = p.field;
    const std::size_t m = p.m, n = p.n;

    if (p.sigma_theta.empty()) p.sigma_theta.assign(m, field.theta());
    if (p.sigma_theta.size() != m)
        throw ShapeMismatch("expected " + std::to_string(m) + " field automorphisms, got " +
                            std::to_string(p.sigma_theta.size()));
    if (p.sigma_d.empty() && n == 0) p.sigma_d.assign(m, FieldMatrix{});
    if (p.sigma_d.size() != m)
        throw ShapeMismatch("expected " + std::to_string(m) + " sigma_D matrices, got " +
                            std::to_string(p.sigma_d.size()));
    for (std::size_t i = 0; i < m; ++i) {
        if (!(p.sigma_theta[i].field() == field))
            throw FieldMismatch("sigma_R[" + std::to_string(i) + "] lives in another field");
        if (p.sigma_d[i].size() != n)
            throw ShapeMismatch("sigma_D[" + std::to_string(i) + "] must be " + std::to_string(n) + "x" +
                                std::to_string(n));
        for (const auto& row : p.sigma_d[i]) {
            if (row.size() != n)
                throw ShapeMismatch("sigma_D[" + std::to_string(i) + "] must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
            for (const auto& x : row)
                if (!(x.field() == field))
                    throw FieldMismatch("sigma_D[" + std::to_string(i) + "] has entries in another field");
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        FieldAutomorphism s(p.sigma_theta[i]);
        if (!s.is_identity()) impl->coefficients_fixed = false;
        auto inv = matrix_inverse(p.sigma_d[i], field);
        if (!inv) throw SingularSigmaMatrix("sigma_D[" + std::to_string(i) + "] is singular");
        // sigma_i(B) * A_i = I  =>  B = sigma_i^{-1}(A_i^{-1}) entrywise.
        const FieldAutomorphism s_inv = s.inverse();
        for (auto& row : *inv)
            for (auto& x : row) x = s_inv.apply(x);
        impl->forward.push_back({s, p.sigma_d[i]});
        impl->backward.push_back({s_inv, *inv});
        impl->sigma_r.push_back(s);
        impl->sigma_r_inv.push_back(s_inv);
        impl->sigma_d_inv.push_back(std::move(*inv));
    }

    // sigma_i o sigma_j = sigma_j o sigma_i on theta and on every D_t.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const SkewMap ij = impl->forward[i].compose(impl->forward[j], field);
            const SkewMap ji = impl->forward[j].compose(impl->forward[i], field);
            if (!(ij.coeff == ji.coeff) || ij.matrix != ji.matrix)
                throw NonCommutingSigmas("sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(j + 1) +
                                         " do not commute");
        }

    impl->p = std::move(p);
    impl_ = std::move(impl);
}

std::size_t DDAlgebra::m() const noexcept { return impl_->p.m; }
std::size_t DDAlgebra::n() const noexcept { return impl_->p.n; }
const NumberField& DDAlgebra::field() const noexcept { return impl_->p.field; }
const AlgebraPresentation& DDAlgebra::presentation() const noexcept { return impl_->p; }
const FieldAutomorphism& DDAlgebra::sigma_r(std::size_t i) const { return impl_->sigma_r.at(i); }
const FieldAutomorphism& DDAlgebra::sigma_r_inv(std::size_t i) const { return impl_->sigma_r_inv.at(i); }
const FieldMatrix& DDAlgebra::sigma_d(std::size_t i) const { return impl_->p.sigma_d.at(i); }
const FieldMatrix& DDAlgebra::sigma_d_inv(std::size_t i) const { return impl_->sigma_d_inv.at(i); }

Element DDAlgebra::zero() const { return Element(field(), m(), n()); }
Element DDAlgebra::one() const { return constant(field().one()); }

Element DDAlgebra::constant(const FieldElement& c) const { return term(c, Monomial::one(m(), n())); }

Element DDAlgebra::monomial(const Monomial& u) const { return term(field().one(), u); }

Element DDAlgebra::term(const FieldElement& c, const Monomial& u) const {
    if (u.alpha.size() != m() || u.beta.size() != n()) throw ShapeMismatch("monomial " + u.to_string() + " has the wrong shape");
    Element e = zero();
    e.add_term(u, c);
    return e;
}

Element DDAlgebra::s(std::size_t i) const {
    Monomial u = Monomial::one(m(), n());
    u.alpha.at(i) = 1;
    return monomial(u);
}

Element DDAlgebra::d(std::size_t j) const {
    Monomial u = Monomial::one(m(), n());
    u.beta.at(j) = 1;
    return monomial(u);
}

Element DDAlgebra::sigma_power_on_dpoly(std::span<const long> e, const Element& f) const {
    if (f.m() != m() || f.n() != n() || !(f.field() == field()))
        throw PresentationMismatch("element does not belong to this algebra");
    if (e.size() != m()) throw ShapeMismatch("sigma exponent must have length " + std::to_string(m()));
    if (!f.is_d_polynomial()) throw MixedMonomial("sigma powers act on D-polynomials only: " + f.to_string());
    DPoly in;
    for (const auto& [u, c] : f.terms()) in.emplace(u.beta, c);
    const DPoly out = impl_->power(e).apply(in, field());
    Element r = zero();
    for (const auto& [beta, c] : out) r.add_term({ExponentVector(m(), 0), beta}, c);
    return r;
}

Element DDAlgebra::mul(const Element& f, const Element& g) const {
    for (const Element* x : {&f, &g})
        if (x->m() != m() || x->n() != n() || !(x->field() == field()))
            throw PresentationMismatch("element does not belong to this algebra");
    const Impl& impl = *impl_;
    const std::size_t mm = m(), nn = n();

    // sigma^{alpha'}(D^beta), keyed by (alpha', beta).
    std::map<ExponentVector, SkewMap> maps;
    std::map<std::pair<ExponentVector, ExponentVector>, DPoly> images;
    auto twisted = [&](const ExponentVector& a2, const ExponentVector& beta) -> const DPoly& {
        auto key = std::make_pair(a2, beta);
        auto it = images.find(key);
        if (it != images.end()) return it->second;
        auto mit = maps.find(a2);
        if (mit == maps.end()) {
            std::vector<long> e(a2.begin(), a2.end());
            mit = maps.emplace(a2, impl.power(e)).first;
        }
        DPoly mono{{beta, field().one()}};
        return images.emplace(std::move(key), mit->second.apply(mono, field())).first->second;
    };

    Element out = zero();
    ExponentVector sum_alpha(mm), gamma_beta(nn);
    for (const auto& [u, c] : f.terms()) {
        for (const auto& [v, c2] : g.terms()) {
            // (c S^a D^b)(c2 S^a2 D^b2) = sum_g c sigma^{-a}(c2) sigma^{-(a+a2)}(r_g) S^{a+a2} D^{g+b2}
            const FieldElement lead = c * impl.coeff_neg_power(u.alpha, c2);
            for (std::size_t i = 0; i < mm; ++i) sum_alpha[i] = u.alpha[i] + v.alpha[i];
            if (nn == 0) {
                out.add_term({sum_alpha, {}}, lead);
                continue;
            }
            for (const auto& [gamma, r] : twisted(v.alpha, u.beta)) {
                for (std::size_t j = 0; j < nn; ++j) gamma_beta[j] = gamma[j] + v.beta[j];
                out.add_term({sum_alpha, gamma_beta}, lead * impl.coeff_neg_power(sum_alpha, r));
            }
        }
    }
    return out;
}

}  // namespace ddgk
