/*
   Copyright 2026 The poincare-series authors

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

#include "poincare/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace poincare {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string poly_text(const ZPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const mpz_class& c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << (sgn(c) > 0 ? (latex ? "+" : " + ") : (latex ? "-" : " - "));
        else if (sgn(c) < 0) os << "-";
        first = false;
        const mpz_class a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << "z";
            if (i > 1) {
                if (latex && i > 9) os << "^{" << i << "}";
                else os << "^" << i;
            }
        }
    }
    return os.str();
}

int poly_term_count(const ZPoly& p) {
    int t = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++t;
    return t;
}

std::string factor_text(int k, int mult, bool latex) {
    std::ostringstream os;
    os << (latex ? "(1-z" : "(1 - z");
    if (k > 1) {
        if (latex && k > 9) os << "^{" << k << "}";
        else os << "^" << k;
    }
    os << ")";
    if (mult > 1) os << "^" << mult;
    return os.str();
}

std::string fraction_text(const Presentation& pres, bool latex) {
    std::string num = poly_text(pres.numerator, latex);
    std::vector<std::string> pieces;
    if (pres.unfactored_denominator) {
        pieces.push_back("(" + poly_text(*pres.unfactored_denominator, latex) + ")");
    } else {
        for (const auto& [k, m] : pres.denominator_factors)
            pieces.push_back(factor_text(k, m, latex));
    }
    if (pieces.empty()) return num;
    std::string den;
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (i && !latex) den += " ";
        den += pieces[i];
    }
    if (latex) return "\\frac{" + num + "}{" + den + "}";
    if (poly_term_count(pres.numerator) > 1 ||
        (!pres.numerator.is_zero() && sgn(pres.numerator.leading()) < 0))
        num = "(" + num + ")";
    if (pieces.size() > 1) den = "(" + den + ")";
    return num + "/" + den;
}

ordered_json int_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return ordered_json(static_cast<std::int64_t>(v.get_si()));
    return ordered_json(v.get_str());
}

ordered_json poly_to_json(const ZPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(int_to_json(c));
    if (p.is_zero()) arr.push_back(0);
    return arr;
}

mpz_class json_to_int(const ordered_json& v) {
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) {
        mpz_class out;
        if (out.set_str(v.get<std::string>(), 10) != 0)
            throw std::runtime_error("invalid integer literal: " + v.dump());
        return out;
    }
    throw std::runtime_error("expected integer or decimal string, got " + v.dump());
}

ZPoly json_to_poly(const ordered_json& arr) {
    if (!arr.is_array()) throw std::runtime_error("expected coefficient array");
    std::vector<mpz_class> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& v : arr) coeffs.push_back(json_to_int(v));
    return ZPoly(std::move(coeffs));
}

}  // namespace

std::string render(const PoincareResult& result, RenderFormat format) {
    Presentation pres = result.presentation ? *result.presentation
                                            : present(result.value);
    switch (format) {
        case RenderFormat::text:
            return fraction_text(pres, false);
        case RenderFormat::latex:
            return fraction_text(pres, true);
        case RenderFormat::json:
            break;
    }
    ordered_json j;
    j["d1"] = result.pair.d1();
    j["d2"] = result.pair.d2();
    j["kind"] = kind_name(result.kind);
    j["numerator"] = poly_to_json(pres.numerator);
    ordered_json factors = ordered_json::array();
    for (const auto& [k, m] : pres.denominator_factors)
        factors.push_back(ordered_json{{"k", k}, {"mult", m}});
    j["denominator_factors"] = factors;
    j["unfactored_denominator"] =
        pres.unfactored_denominator ? poly_to_json(*pres.unfactored_denominator)
                                    : ordered_json(nullptr);
    if (result.series) {
        ordered_json ser = ordered_json::array();
        for (const auto& c : *result.series) ser.push_back(int_to_json(c));
        j["series"] = ser;
    } else {
        j["series"] = nullptr;
    }
    return j.dump(2);
}

RenderFormat render_format_from_name(std::string_view name) {
    if (name == "text") return RenderFormat::text;
    if (name == "latex") return RenderFormat::latex;
    if (name == "json") return RenderFormat::json;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

namespace {

PoincareResult parse_result_json_impl(std::string_view json_text) {
    ordered_json j = ordered_json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("malformed json");
    for (const char* field :
         {"d1", "d2", "kind", "numerator", "denominator_factors"})
        if (!j.contains(field))
            throw std::runtime_error(std::string("missing field: ") + field);
    const int d1 = j["d1"].get<int>();
    const int d2 = j["d2"].get<int>();
    const std::string kind_str = j["kind"].get<std::string>();
    SeriesKind kind;
    if (kind_str == "invariants") kind = SeriesKind::invariants;
    else if (kind_str == "covariants") kind = SeriesKind::covariants;
    else throw std::runtime_error("unknown kind: " + kind_str);

    Presentation pres;
    pres.numerator = json_to_poly(j["numerator"]);
    for (const auto& f : j["denominator_factors"]) {
        if (!f.contains("k") || !f.contains("mult"))
            throw std::runtime_error("malformed denominator factor");
        const int k = f["k"].get<int>(), mult = f["mult"].get<int>();
        if (k < 1 || mult < 1) throw std::runtime_error("bad denominator factor");
        pres.denominator_factors[k] += mult;
    }
    RatFunc value;
    if (j.contains("unfactored_denominator") && !j["unfactored_denominator"].is_null()) {
        pres.unfactored_denominator = json_to_poly(j["unfactored_denominator"]);
        pres.denominator_factors.clear();
        value = rat_normalize(pres.numerator, *pres.unfactored_denominator);
    } else {
        FactorBag bag;
        bag.numer = pres.numerator;
        for (const auto& [k, m] : pres.denominator_factors) bag.add_factor(k, m);
        value = factored_expand(bag);
    }
    PoincareResult result{FormPair(d1, d2), kind, std::move(value), std::move(pres),
                          std::nullopt};
    if (j.contains("series") && !j["series"].is_null()) {
        std::vector<mpz_class> ser;
        for (const auto& v : j["series"]) ser.push_back(json_to_int(v));
        result.series = std::move(ser);
    }
    return result;
}

}  // namespace

PoincareResult parse_result_json(std::string_view json_text) {
    try {
        return parse_result_json_impl(json_text);
    } catch (const ordered_json::exception& e) {
        throw std::runtime_error(e.what());
    }
}

}  // namespace poincare
