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

#include "ddgk/task.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ddgk/dimension.hpp"
#include "ddgk/error.hpp"
#include "ddgk/groebner.hpp"
#include "ddgk/oracle.hpp"

namespace ddgk {

namespace {

constexpr std::pair<TaskKind, const char*> kTaskNames[] = {
    {TaskKind::Gb, "gb"},
    {TaskKind::Reduce, "reduce"},
    {TaskKind::Member, "member"},
    {TaskKind::Hilbert, "hilbert"},
    {TaskKind::GkDim, "gkdim"},
    {TaskKind::ModuleGb, "module-gb"},
    {TaskKind::ModuleGkDim, "module-gkdim"},
    {TaskKind::OracleHf, "oracle-hf"},
};

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const Json& require(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    if (!obj.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

const Json& require_array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

std::size_t as_size(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Rational as_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(path, "expected a rational written as a \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

qpoly::Poly as_rational_vector(const Json& j, const std::string& path) {
    require_array(j, path);
    qpoly::Poly out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_rational(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

/// A scalar "p/q" or a coordinate vector in the power basis 1, theta, ...
FieldElement as_field_element(const Json& j, const NumberField& field, const std::string& path) {
    if (!j.is_array()) return field.constant(as_rational(j, path));
    qpoly::Poly v = as_rational_vector(j, path);
    if (v.size() > field.degree())
        fail(path, "coordinate vector of length " + std::to_string(v.size()) + " exceeds field degree " +
                       std::to_string(field.degree()));
    return FieldElement(field, std::move(v));
}

ExponentVector as_exponents(const Json& term, const char* key, std::size_t len, const std::string& path) {
    if (!term.contains(key)) {
        if (len == 0) return {};
        fail(path, std::string("missing field \"") + key + "\"");
    }
    const std::string p = path + "." + key;
    const Json& j = require_array(term.at(key), p);
    if (j.size() != len)
        throw ShapeMismatch(p + ": expected " + std::to_string(len) + " exponents, got " + std::to_string(j.size()));
    ExponentVector out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::size_t e = as_size(j[i], p + "[" + std::to_string(i) + "]");
        if (e > UINT32_MAX) fail(p, "exponent too large");
        out.push_back(static_cast<Exponent>(e));
    }
    return out;
}

Monomial as_monomial(const Json& term, const DDAlgebra& alg, const std::string& path) {
    return {as_exponents(term, "s", alg.m(), path), as_exponents(term, "d", alg.n(), path)};
}

Element as_element(const Json& j, const DDAlgebra& alg, const std::string& path) {
    require_array(j, path);
    Element f = alg.zero();
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const FieldElement c = as_field_element(require(j[i], "c", p), alg.field(), p + ".c");
        f.add_term(as_monomial(j[i], alg, p), c);
    }
    return f;
}

ModElement as_mod_element(const Json& j, const DDAlgebra& alg, std::size_t rank, const std::string& path) {
    require_array(j, path);
    ModElement f(alg.field(), alg.m(), alg.n(), rank);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const FieldElement c = as_field_element(require(j[i], "c", p), alg.field(), p + ".c");
        const std::size_t pos = as_size(require(j[i], "pos", p), p + ".pos");
        if (pos < 1 || pos > rank)
            throw RankMismatch(p + ".pos: position " + std::to_string(pos) + " outside 1.." + std::to_string(rank));
        f.add_term({as_monomial(j[i], alg, p), pos}, c);
    }
    return f;
}

DDAlgebra as_algebra(const Json& pres, const std::string& path) {
    AlgebraPresentation p;
    if (pres.contains("field")) {
        const std::string fp = path + ".field";
        p.field = NumberField(as_rational_vector(require(pres.at("field"), "min_poly", fp), fp + ".min_poly"));
    }
    p.m = as_size(require(pres, "m", path), path + ".m");
    p.n = as_size(require(pres, "n", path), path + ".n");
    if (pres.contains("sigma_R")) {
        const std::string sp = path + ".sigma_R";
        const Json& arr = require_array(pres.at("sigma_R"), sp);
        for (std::size_t i = 0; i < arr.size(); ++i)
            p.sigma_theta.push_back(as_field_element(arr[i], p.field, sp + "[" + std::to_string(i) + "]"));
    }
    if (pres.contains("sigma_D")) {
        const std::string sp = path + ".sigma_D";
        const Json& arr = require_array(pres.at("sigma_D"), sp);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string mp = sp + "[" + std::to_string(i) + "]";
            FieldMatrix mat;
            for (std::size_t r = 0; r < require_array(arr[i], mp).size(); ++r) {
                const std::string rp = mp + "[" + std::to_string(r) + "]";
                std::vector<FieldElement> row;
                for (std::size_t c = 0; c < require_array(arr[i][r], rp).size(); ++c)
                    row.push_back(as_field_element(arr[i][r][c], p.field, rp + "[" + std::to_string(c) + "]"));
                mat.push_back(std::move(row));
            }
            p.sigma_d.push_back(std::move(mat));
        }
    } else {
        for (std::size_t i = 0; i < p.m; ++i) {
            FieldMatrix id(p.n, std::vector<FieldElement>(p.n, p.field.zero()));
            for (std::size_t j = 0; j < p.n; ++j) id[j][j] = p.field.one();
            p.sigma_d.push_back(std::move(id));
        }
    }
    return DDAlgebra(std::move(p));
}

bool is_module_task(TaskKind k) { return k == TaskKind::ModuleGb || k == TaskKind::ModuleGkDim; }

Json coefficient_to_json(const FieldElement& c) {
    if (c.coeffs().size() == 1) return to_string(c.coeffs()[0]);
    Json arr = Json::array();
    for (const auto& q : c.coeffs()) arr.push_back(to_string(q));
    return arr;
}

Json exponents_to_json(const ExponentVector& e) {
    Json arr = Json::array();
    for (Exponent x : e) arr.push_back(x);
    return arr;
}

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json gb_to_json(const GroebnerBasis& gb) {
    Json out;
    out["size"] = gb.elements.size();
    out["certified"] = satisfies_spoly_criterion(gb);
    out["minimalized"] = gb.minimalized;
    Json els = Json::array();
    for (const auto& g : gb.elements) els.push_back({{"text", g.to_string()}, {"terms", element_to_json(g, gb.ordering)}});
    out["elements"] = std::move(els);
    return out;
}

Json gb_to_json(const ModuleGroebnerBasis& gb) {
    Json out;
    out["size"] = gb.elements.size();
    out["certified"] = satisfies_svect_criterion(gb);
    out["minimalized"] = gb.minimalized;
    Json els = Json::array();
    for (const auto& g : gb.elements) els.push_back({{"text", g.to_string()}, {"terms", element_to_json(g, gb.ordering)}});
    out["elements"] = std::move(els);
    return out;
}

Json report_to_json(const DimensionReport& r) {
    Json out;
    if (r.gk_dimension) out["gk_dimension"] = *r.gk_dimension;
    else out["gk_dimension"] = "-inf";
    Json coeffs = Json::array();
    for (const auto& c : r.hilbert_polynomial.coeffs()) coeffs.push_back(to_string(c));
    out["hilbert_polynomial"] = {{"text", r.hilbert_polynomial.to_string()}, {"coefficients", std::move(coeffs)}};
    out["shave_threshold"] = r.shave_threshold;
    out["stability_threshold"] = r.stability_threshold;
    out["field_degree"] = r.field_degree;
    out["rank"] = r.rank;
    return out;
}

template <class Basis>
Json hilbert_table(const Basis& gb, const DimensionReport& r, std::size_t max_t) {
    Json rows = Json::array();
    for (std::size_t t = 0; t <= max_t; ++t) {
        const Rational h = r.hilbert_polynomial.evaluate(Rational(static_cast<unsigned long>(t)));
        rows.push_back({{"t", t},
                        {"hilbert_value", integer_to_json(hilbert_value(gb, t))},
                        {"formula", integer_to_json(hilbert_formula_value(r, t))},
                        {"polynomial", to_string(h)}});
    }
    return rows;
}

template <class Basis>
Json oracle_table(const Basis& gb, std::size_t max_t, bool& all_agree) {
    Json rows = Json::array();
    all_agree = true;
    for (std::size_t t = 0; t <= max_t; ++t) {
        const Integer o = oracle_hf(gb, t);
        const Integer h = hilbert_value(gb, t);
        all_agree = all_agree && o == h;
        rows.push_back({{"t", t}, {"oracle", integer_to_json(o)}, {"hilbert_value", integer_to_json(h)}, {"agree", o == h}});
    }
    return rows;
}

void render(const Json& obj, std::size_t indent, std::ostringstream& out);

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render(const Json& obj, std::size_t indent, std::ostringstream& out) {
    const std::string pad(indent, ' ');
    for (const auto& [key, v] : obj.items()) {
        if (key == "terms") continue;
        if (v.is_object()) {
            out << pad << key << ":\n";
            render(v, indent + 2, out);
        } else if (v.is_array()) {
            const bool scalars = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
            if (scalars) {
                out << pad << key << ": [";
                for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
                out << "]\n";
                continue;
            }
            out << pad << key << ":\n";
            for (const auto& item : v) {
                if (item.is_object() && item.contains("text")) {
                    out << pad << "  " << scalar_text(item["text"]) << "\n";
                    continue;
                }
                out << pad << "  -";
                for (const auto& [k, x] : item.items()) out << " " << k << "=" << scalar_text(x);
                out << "\n";
            }
        } else {
            out << pad << key << ": " << scalar_text(v) << "\n";
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open task file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TaskKind parse_task_kind(const std::string& name) {
    for (const auto& [k, n] : kTaskNames)
        if (name == n) return k;
    throw ParseError("unknown task \"" + name + "\"");
}

std::string to_string(TaskKind kind) {
    for (const auto& [k, n] : kTaskNames)
        if (k == kind) return n;
    return "?";
}

Json element_to_json(const Element& f, const OrderingSpec& ord) {
    std::vector<Monomial> monos;
    for (const auto& [u, c] : f.terms()) monos.push_back(u);
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return compare(ord, a, b) > 0; });
    Json arr = Json::array();
    for (const auto& u : monos)
        arr.push_back({{"c", coefficient_to_json(f.coefficient(u))},
                       {"s", exponents_to_json(u.alpha)},
                       {"d", exponents_to_json(u.beta)}});
    return arr;
}

Json element_to_json(const ModElement& f, const ModuleOrderingSpec& ord) {
    std::vector<ModMonomial> monos;
    for (const auto& [u, c] : f.terms()) monos.push_back(u);
    std::sort(monos.begin(), monos.end(),
              [&](const ModMonomial& a, const ModMonomial& b) { return compare_module(ord, a, b) > 0; });
    Json arr = Json::array();
    for (const auto& u : monos)
        arr.push_back({{"c", coefficient_to_json(f.coefficient(u))},
                       {"s", exponents_to_json(u.mono.alpha)},
                       {"d", exponents_to_json(u.mono.beta)},
                       {"pos", u.pos}});
    return arr;
}

Task parse_task(const std::string& text, const std::optional<std::string>& ordering_override) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("$", "expected a JSON object");

    Task task{as_algebra(require(doc, "presentation", "$"), "presentation"), {}, ModuleExtension::TOP,
              TaskKind::Gb, 0, {}, {}, std::nullopt, std::nullopt};

    const Json& kind = require(doc, "task", "$");
    if (!kind.is_string()) fail("task", "expected a string");
    try {
        task.kind = parse_task_kind(kind.get<std::string>());
    } catch (const ParseError& e) {
        fail("task", e.what());
    }

    std::string ordering = "tdeg:deglex,deglex";
    std::string extension = "top";
    if (doc.contains("ordering")) {
        if (!doc["ordering"].is_string()) fail("ordering", "expected a string");
        ordering = doc["ordering"].get<std::string>();
    }
    if (doc.contains("module_ordering")) {
        if (!doc["module_ordering"].is_string()) fail("module_ordering", "expected a string");
        extension = doc["module_ordering"].get<std::string>();
    }
    std::string source = "ordering";
    if (ordering_override) {
        source = "--ordering";
        ordering = *ordering_override;
        if (auto slash = ordering.find('/'); slash != std::string::npos) {
            extension = ordering.substr(slash + 1);
            ordering.resize(slash);
        }
    }
    try {
        task.ordering = parse_ordering(ordering);
        task.extension = parse_extension(extension);
    } catch (const ParseError& e) {
        fail(source, e.what());
    }

    const bool module = is_module_task(task.kind) || (task.kind == TaskKind::OracleHf && doc.contains("rank"));
    if (module) {
        task.rank = as_size(require(doc, "rank", "$"), "rank");
        if (task.rank == 0) throw RankMismatch("rank: free module rank must be at least 1");
    }

    const Json& gens = require_array(require(doc, "generators", "$"), "generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string p = "generators[" + std::to_string(i) + "]";
        if (module) task.module_generators.push_back(as_mod_element(gens[i], task.algebra, task.rank, p));
        else task.generators.push_back(as_element(gens[i], task.algebra, p));
    }

    if (task.kind == TaskKind::Reduce || task.kind == TaskKind::Member)
        task.f = as_element(require(doc, "f", "$"), task.algebra, "f");
    if (doc.contains("t")) task.t = as_size(doc["t"], "t");
    return task;
}

Json run_task(const Task& task, std::optional<std::size_t> max_t) {
    const std::optional<std::size_t> bound = max_t ? max_t : task.t;
    Json out;
    out["task"] = to_string(task.kind);
    if (task.rank > 0) {
        const ModuleOrderingSpec mord{task.ordering, task.extension};
        out["ordering"] = to_string(mord);
        const ModuleGroebnerBasis gb = mod_buchberger(task.algebra, task.module_generators, task.rank, mord);
        out["basis"] = gb_to_json(gb);
        if (task.kind == TaskKind::ModuleGb) return out;
        const DimensionReport r = hilbert_data(gb);
        out["report"] = report_to_json(r);
        if (task.kind == TaskKind::OracleHf) {
            bool agree = true;
            out["values"] = oracle_table(gb, bound.value_or(default_oracle_bound(r)), agree);
            out["all_agree"] = agree;
        }
        return out;
    }

    out["ordering"] = to_string(task.ordering);
    const GroebnerBasis gb = buchberger(task.algebra, task.generators, task.ordering);
    out["basis"] = gb_to_json(gb);
    switch (task.kind) {
        case TaskKind::Gb:
            break;
        case TaskKind::Reduce: {
            const Reduction red = reduce(task.algebra, *task.f, gb.elements, gb.ordering);
            out["remainder"] = {{"text", red.remainder.to_string()}, {"terms", element_to_json(red.remainder, gb.ordering)}};
            out["steps"] = red.steps.size();
            break;
        }
        case TaskKind::Member: {
            const Element r = remainder(task.algebra, *task.f, gb.elements, gb.ordering);
            out["member"] = r.is_zero();
            out["remainder"] = {{"text", r.to_string()}, {"terms", element_to_json(r, gb.ordering)}};
            break;
        }
        case TaskKind::Hilbert: {
            const DimensionReport r = hilbert_data(gb);
            out["report"] = report_to_json(r);
            out["values"] = hilbert_table(gb, r, bound.value_or(r.stability_threshold + 3));
            break;
        }
        case TaskKind::GkDim:
            out["report"] = report_to_json(hilbert_data(gb));
            break;
        case TaskKind::OracleHf: {
            const DimensionReport r = hilbert_data(gb);
            out["report"] = report_to_json(r);
            bool agree = true;
            out["values"] = oracle_table(gb, bound.value_or(default_oracle_bound(r)), agree);
            out["all_agree"] = agree;
            break;
        }
        case TaskKind::ModuleGb:
        case TaskKind::ModuleGkDim:
            break;
    }
    return out;
}

std::string render_text(const Json& result) {
    std::ostringstream out;
    render(result, 0, out);
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner bases and Gelfand-Kirillov dimensions over differential difference algebras", "ddgk"};
    std::string file;
    bool json = false;
    std::string ordering;
    std::size_t max_t = 0;
    app.add_option("task-file", file, "JSON task file")->required();
    app.add_flag("--json", json, "emit machine-readable JSON");
    auto* ord_opt = app.add_option("--ordering", ordering, "override the ordering, e.g. tdeg:deglex,degrevlex[/pot]");
    auto* t_opt = app.add_option("--max-t", max_t, "largest t for value tables");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ddgk: " << e.what() << "\n";
        return 2;
    }

    auto report_error = [&](const std::string& name, const std::string& what, int code) {
        err << "ddgk: " << name << ": " << what << "\n";
        if (json) out << Json{{"error", name}, {"message", what}}.dump(2) << "\n";
        return code;
    };

    try {
        const std::optional<std::string> ord_override =
            ord_opt->count() ? std::optional<std::string>(ordering) : std::nullopt;
        const Task task = parse_task(read_file(file), ord_override);
        const Json result = run_task(task, t_opt->count() ? std::optional<std::size_t>(max_t) : std::nullopt);
        if (json) out << result.dump(2) << "\n";
        else out << render_text(result);
        return 0;
    } catch (const Error& e) {
        return report_error(e.name(), e.what(), e.kind() == ErrorKind::Validation ? 2 : 3);
    } catch (const Json::exception& e) {
        return report_error("ParseError", e.what(), 2);
    }
}

}  // namespace ddgk
