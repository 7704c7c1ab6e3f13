#include "qord/io.hpp"

#include "qord/errors.hpp"

namespace qord {

Json exponent_to_json(const Exponent& e) {
    Json j = Json::array();
    for (int i = 0; i < e.dim(); ++i) j.push_back(e[i]);
    return j;
}

Exponent exponent_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("exponent must be a nonempty integer array");
    std::vector<long long> coords;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError("exponent entries must be integers");
        coords.push_back(v.get<long long>());
    }
    return Exponent(std::move(coords));
}

Json series_terms_to_json(const FracSeries& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) {
        terms.push_back(Json{{"exp", exponent_to_json(e)}, {"coef", rational_to_string(c)}});
    }
    return terms;
}

FracSeries series_from_json(const Json& terms, int dim, long long trunc) {
    if (!terms.is_array()) throw InputError("terms must be an array");
    FracSeries s(dim, trunc);
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw InputError("each term needs \"exp\" and \"coef\"");
        const Exponent e = exponent_from_json(t.at("exp"));
        if (e.dim() != dim) throw InputError("term exponent dimension differs from r");
        if (!t.at("coef").is_string()) throw InputError("coefficients must be strings");
        s.add_term(e, parse_rational(t.at("coef").get<std::string>()));
    }
    return s;
}

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exp", exponent_to_json(e)}, {"coef", rational_to_string(c)}});
    return Json{{"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j, int vars) {
    const Json& terms = j.is_object() && j.contains("terms") ? j.at("terms") : j;
    if (!terms.is_array()) throw InputError("polynomial must be {\"terms\": [...]} or an array");
    Polynomial p(vars);
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw InputError("each polynomial term needs \"exp\" and \"coef\"");
        const Exponent e = exponent_from_json(t.at("exp"));
        if (e.dim() != vars) throw InputError("polynomial exponent length must be r+1");
        if (!t.at("coef").is_string()) throw InputError("coefficients must be strings");
        p.add_term(e, parse_rational(t.at("coef").get<std::string>()));
    }
    return p;
}

Json parameterization_to_json(const Parameterization& p) {
    return Json{{"r", p.r()},
                {"n", p.n()},
                {"trunc", p.trunc()},
                {"terms", series_terms_to_json(p.series())}};
}

ParameterizationInput parameterization_input_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("parameterization must be a JSON object");
    for (const char* key : {"r", "n", "terms"})
        if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    ParameterizationInput in;
    if (!j.at("r").is_number_integer() || !j.at("n").is_number_integer())
        throw InputError("\"r\" and \"n\" must be integers");
    in.r = j.at("r").get<int>();
    in.n = j.at("n").get<long long>();
    if (j.contains("trunc")) {
        if (!j.at("trunc").is_number_integer()) throw InputError("\"trunc\" must be an integer");
        in.trunc = j.at("trunc").get<long long>();
    }
    in.terms = j.at("terms");
    return in;
}

Json semigroup_to_json(const SemigroupData& sg) {
    Json lambdas = Json::array();
    for (const auto& l : sg.lambdas()) lambdas.push_back(exponent_to_json(l));
    Json nus = Json::array();
    for (const auto& nu : sg.nus()) nus.push_back(exponent_to_json(nu));
    return Json{{"r", sg.r()},
                {"n", sg.n()},
                {"g", sg.g()},
                {"lambdas", lambdas},
                {"nus", nus},
                {"indices", sg.indices()}};
}

Json zariski_to_json(const ZariskiResult& z) {
    Json exps = Json::array();
    for (const auto& e : z.exponents) exps.push_back(exponent_to_json(e));
    Json viol = Json::array();
    for (const auto& e : z.violations) viol.push_back(exponent_to_json(e));
    return Json{{"zariski", exps},
                {"empty", z.exponents.empty()},
                {"quasi_short", z.is_quasi_short},
                {"violations", viol}};
}

Json change_to_json(const CoordinateChange& c) {
    Json a = Json::array();
    for (const auto& v : c.a) a.push_back(rational_to_string(v));
    Json ps = Json::array();
    for (const auto& p : c.p) ps.push_back(polynomial_to_json(p));
    return Json{{"a", a}, {"P", ps}, {"alpha", exponent_to_json(c.alpha)}};
}

CoordinateChange change_from_json(const Json& j, int r) {
    if (!j.is_object() || !j.contains("a") || !j.contains("P"))
        throw InputError("change needs \"a\" and \"P\"");
    CoordinateChange c;
    for (const auto& v : j.at("a")) {
        if (!v.is_string()) throw InputError("\"a\" entries must be rational strings");
        c.a.push_back(parse_rational(v.get<std::string>()));
    }
    for (const auto& p : j.at("P")) c.p.push_back(polynomial_from_json(p, r + 1));
    if (static_cast<int>(c.a.size()) != r + 1 || static_cast<int>(c.p.size()) != r + 1)
        throw InputError("change needs r+1 coefficients and polynomials");
    if (j.contains("alpha"))
        c.alpha = exponent_from_json(j.at("alpha"));
    return c;
}

RForm rform_from_json(const Json& j, int r) {
    if (!j.is_object() || !j.contains("components"))
        throw InputError("form needs \"components\"");
    const Json& comps = j.at("components");
    if (!comps.is_array() || static_cast<int>(comps.size()) != r + 1)
        throw InputError("form needs r+1 components");
    RForm form;
    for (const auto& comp : comps) form.components.push_back(polynomial_from_json(comp, r + 1));
    return form;
}

Json normal_form_to_json(const NormalForm& nf) {
    Json params = Json::object();
    for (const auto& [flag, value] : nf.flags) params[std::string(1, flag)] = value;
    for (const auto& [name, value] : nf.indices) params[std::string(1, name)] = value;
    Json out{{"case", case_label_name(nf.label)},
             {"params", params},
             {"normal_form", series_terms_to_json(nf.series)}};
    if (nf.certificate) {
        Json shifts = Json::array();
        for (const auto& s : nf.certificate->shifts) shifts.push_back(exponent_to_json(s));
        Json values = Json::array();
        for (const auto& v : nf.certificate->values) values.push_back(rational_to_string(v));
        out["normalizability_certificate"] = Json{{"shifts", shifts}, {"values", values}};
    }
    return out;
}

Json census_row_to_json(const CensusRow& row) {
    Json j{{"n", row.n}, {"lambda1", exponent_to_json(row.lambda1)}, {"valid", row.valid}};
    if (!row.valid) {
        j["invalid_reason"] = row.invalid_reason;
        return j;
    }
    j["quasi_simple"] = row.quasi_simple;
    j["admits_three"] = row.admits_three;
    if (row.quasi_simple) {
        j["case"] = row.case_name;
    } else {
        j["reason"] = row.reason;
        if (!row.witness.empty()) {
            Json w = Json::array();
            for (const auto& e : row.witness) w.push_back(exponent_to_json(e));
            j["witness"] = w;
        }
    }
    if (!row.audit.empty()) j["audit"] = row.audit;
    return j;
}

}  // namespace qord
