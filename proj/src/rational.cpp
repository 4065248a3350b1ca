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

#include "ddgk/rational.hpp"

#include <cctype>

#include "ddgk/error.hpp"

namespace ddgk {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw ParseError("not a rational number: \"" + std::string(text) + "\"");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    const Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational q(Integer(n), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace qpoly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly r(a);
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    const int db = degree(b);
    r = a;
    trim(r);
    q.clear();
    if (db < 0) return;  // caller contract: b != 0
    const Rational lead_inv = 1 / b[db];
    int dr = degree(r);
    if (dr >= db) q.assign(dr - db + 1, Rational(0));
    while (dr >= db) {
        const Rational c = r[dr] * lead_inv;
        const int shift = dr - db;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
        trim(r);
        dr = degree(r);
    }
    trim(q);
}

}  // namespace qpoly

}  // namespace ddgk
