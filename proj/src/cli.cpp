#include "qord/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qord/errors.hpp"
#include "qord/io.hpp"

namespace qord {

namespace {

Json load_json(const std::string& source) {
    std::string text;
    if (!source.empty() && source.front() == '{') {
        text = source;
    } else {
        std::ifstream file(source);
        if (!file) throw InputError("cannot read '" + source + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw InputError(std::string("malformed JSON: ") + err.what());
    }
}

long long default_trunc(long long n, const Exponent& lambda1) {
    return 2 * (n + lambda1.total());
}

std::optional<long long> env_trunc() {
    const char* env = std::getenv("QORD_TRUNC");
    if (!env || !*env) return std::nullopt;
    try {
        return std::stoll(env);
    } catch (...) {
        throw InputError("QORD_TRUNC is not an integer");
    }
}

// Resolution order: --trunc, the file's "trunc", QORD_TRUNC, 2(n+|lambda_1|).
Parameterization load_parameterization(const std::string& source,
                                       std::optional<long long> trunc_flag) {
    const Json j = load_json(source);
    const ParameterizationInput in = parameterization_input_from_json(j);

    long long probe = 1;
    for (const auto& t : in.terms)
        if (t.is_object() && t.contains("exp"))
            probe = std::max(probe, exponent_from_json(t.at("exp")).total());
    const FracSeries provisional = series_from_json(in.terms, in.r, probe);
    const Parameterization first = make_parameterization(in.r, in.n, provisional);

    long long effective = default_trunc(in.n, first.lambda1());
    if (auto env = env_trunc()) effective = *env;
    if (in.trunc) effective = *in.trunc;
    if (trunc_flag) effective = *trunc_flag;
    if (effective < 1) throw InputError("truncation order must be >= 1");
    if (effective == provisional.valid_degree()) return first;
    return make_parameterization(in.r, in.n, series_from_json(in.terms, in.r, effective));
}

void emit(std::ostream& out, const Json& payload, const std::string& format) {
    if (format == "json") {
        out << payload.dump() << "\n";
        return;
    }
    // text: flat key-per-line rendering
    for (const auto& [key, value] : payload.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
    }
}

struct CommonOpts {
    std::string input;
    std::string format = "json";
    std::optional<long long> trunc;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", opts.input, "parameterization file or inline JSON")->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    auto* t = cmd->add_option("--trunc", "truncation order override");
    t->check(CLI::PositiveNumber);
    t->each([&opts](const std::string& v) { opts.trunc = std::stoll(v); });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"invariants and normal forms of quasi-ordinary parameterizations"};
    app.require_subcommand(1);

    CommonOpts validate_opts, semigroup_opts, zariski_opts, reduce_opts, normalize_opts,
        classify_opts, census_opts, psi_opts;

    auto* cmd_validate = app.add_subcommand("validate", "check the quasi-ordinary conditions");
    add_common(cmd_validate, validate_opts);

    auto* cmd_semigroup = app.add_subcommand("semigroup", "value semigroup data");
    add_common(cmd_semigroup, semigroup_opts);

    auto* cmd_zariski = app.add_subcommand("zariski", "generalized Zariski exponents");
    add_common(cmd_zariski, zariski_opts);

    auto* cmd_reduce = app.add_subcommand("reduce", "quasi-short reduction with transcript");
    add_common(cmd_reduce, reduce_opts);

    auto* cmd_normalize = app.add_subcommand("normalize", "normalize coefficients by a homothety");
    add_common(cmd_normalize, normalize_opts);
    std::string targets_arg;
    cmd_normalize->add_option("--targets", targets_arg,
                              "semicolon-separated target exponents, e.g. \"5,8;10,4\"");

    auto* cmd_classify = app.add_subcommand("classify", "quasi-simple verdict and normal form");
    cmd_classify->add_option("input", classify_opts.input, "parameterization file or inline JSON");
    cmd_classify->add_option("--format", classify_opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    auto* ct = cmd_classify->add_option("--trunc", "truncation order override");
    ct->check(CLI::PositiveNumber);
    ct->each([&](const std::string& v) { classify_opts.trunc = std::stoll(v); });
    long long class_n = 0;
    std::string class_lambda;
    cmd_classify->add_option("--n", class_n, "class multiplicity");
    cmd_classify->add_option("--lambda", class_lambda, "class exponent, e.g. 2,1");

    auto* cmd_census = app.add_subcommand("census", "classify every class in a box");
    long long census_n_max = 7, census_box = 12;
    cmd_census->add_option("--n-max", census_n_max, "largest multiplicity");
    cmd_census->add_option("--box", census_box, "largest lambda coordinate");
    cmd_census->add_option("--format", census_opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_psi = app.add_subcommand("psi", "pair a differential 2-form with the surface");
    add_common(cmd_psi, psi_opts);
    std::string form_arg;
    cmd_psi->add_option("--form", form_arg, "form file or inline JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_validate->parsed()) {
            const Json j = load_json(validate_opts.input);
            const ParameterizationInput in = parameterization_input_from_json(j);
            long long probe = 1;
            for (const auto& t : in.terms)
                if (t.is_object() && t.contains("exp"))
                    probe = std::max(probe, exponent_from_json(t.at("exp")).total());
            ValidationResult v = validate(in.r, in.n, series_from_json(in.terms, in.r, probe));
            if (!v.ok()) {
                Json payload{{"valid", false}, {"violations", v.violations}};
                emit(out, payload, validate_opts.format);
                return 1;
            }
            const Parameterization p = load_parameterization(validate_opts.input, validate_opts.trunc);
            const NormalizationCheck norm = is_normalized(p);
            Json payload = semigroup_to_json(p.semigroup());
            payload["valid"] = true;
            payload["normalized"] = norm.normalized;
            payload["normalization_reasons"] = norm.reasons;
            payload["trunc"] = p.trunc();
            emit(out, payload, validate_opts.format);
            return 0;
        }
        if (cmd_semigroup->parsed()) {
            const Json j = load_json(semigroup_opts.input);
            Json payload;
            if (j.contains("lambdas")) {
                std::vector<Exponent> lambdas;
                for (const auto& l : j.at("lambdas")) lambdas.push_back(exponent_from_json(l));
                if (!j.contains("r") || !j.contains("n")) throw InputError("need \"r\" and \"n\"");
                payload = semigroup_to_json(
                    build_semigroup(j.at("r").get<int>(), j.at("n").get<long long>(), lambdas));
            } else {
                const Parameterization p =
                    load_parameterization(semigroup_opts.input, semigroup_opts.trunc);
                payload = semigroup_to_json(p.semigroup());
                payload["trunc"] = p.trunc();
            }
            emit(out, payload, semigroup_opts.format);
            return 0;
        }
        if (cmd_zariski->parsed()) {
            const Parameterization p = load_parameterization(zariski_opts.input, zariski_opts.trunc);
            Json payload = zariski_to_json(zariski_exponents(p));
            payload["trunc"] = p.trunc();
            emit(out, payload, zariski_opts.format);
            return 0;
        }
        if (cmd_reduce->parsed()) {
            const Parameterization p = load_parameterization(reduce_opts.input, reduce_opts.trunc);
            const ReductionResult res = quasi_short_reduce(p);
            Json changes = Json::array();
            for (const auto& c : res.changes) changes.push_back(change_to_json(c));
            Json payload{{"parameterization", parameterization_to_json(res.parameterization)},
                         {"changes", changes},
                         {"trunc", res.parameterization.trunc()}};
            emit(out, payload, reduce_opts.format);
            return 0;
        }
        if (cmd_normalize->parsed()) {
            const Parameterization p =
                load_parameterization(normalize_opts.input, normalize_opts.trunc);
            std::vector<Exponent> targets;
            if (!targets_arg.empty()) {
                std::istringstream ss(targets_arg);
                std::string part;
                while (std::getline(ss, part, ';')) {
                    std::vector<long long> coords;
                    std::istringstream ps(part);
                    std::string num;
                    while (std::getline(ps, num, ',')) coords.push_back(std::stoll(num));
                    targets.push_back(Exponent(std::move(coords)));
                }
            } else {
                const ZariskiResult z = zariski_exponents(p);
                targets = z.exponents;
                if (targets.size() > 2) targets.resize(2);
            }
            const NormalizationOutcome outcome = normalize_coefficients(p, targets);
            Json payload;
            if (std::holds_alternative<Parameterization>(outcome)) {
                const auto& q = std::get<Parameterization>(outcome);
                payload = Json{{"normalized", true},
                               {"parameterization", parameterization_to_json(q)},
                               {"trunc", q.trunc()}};
            } else {
                const auto& cert = std::get<NormalizabilityCertificate>(outcome);
                Json shifts = Json::array();
                for (const auto& s : cert.shifts) shifts.push_back(exponent_to_json(s));
                Json values = Json::array();
                for (const auto& v : cert.values) values.push_back(rational_to_string(v));
                payload = Json{{"normalized", false},
                               {"certificate", Json{{"shifts", shifts}, {"values", values}}},
                               {"trunc", p.trunc()}};
            }
            emit(out, payload, normalize_opts.format);
            return 0;
        }
        if (cmd_classify->parsed()) {
            Json payload;
            if (!classify_opts.input.empty()) {
                const Parameterization p =
                    load_parameterization(classify_opts.input, classify_opts.trunc);
                const NormalFormOutcome outcome = normal_form(p);
                payload = Json{{"n", p.n()}, {"lambda1", exponent_to_json(p.lambda1())}};
                if (std::holds_alternative<NormalForm>(outcome)) {
                    const auto& nf = std::get<NormalForm>(outcome);
                    payload["quasi_simple"] = true;
                    payload.update(normal_form_to_json(nf));
                } else {
                    const auto& v = std::get<QuasiSimpleVerdict>(outcome);
                    payload["quasi_simple"] = false;
                    payload["reason"] = v.reason;
                }
                payload["trunc"] = p.trunc();
            } else {
                if (class_n == 0 || class_lambda.empty())
                    throw InputError("classify needs an input file or --n and --lambda");
                std::vector<long long> coords;
                std::istringstream ps(class_lambda);
                std::string num;
                while (std::getline(ps, num, ',')) coords.push_back(std::stoll(num));
                const TopClass cls = make_top_class(class_n, Exponent(std::move(coords)));
                const QuasiSimpleVerdict v = is_quasi_simple(cls);
                payload = Json{{"n", cls.n},
                               {"lambda1", exponent_to_json(cls.lambda1)},
                               {"quasi_simple", v.quasi_simple}};
                if (v.quasi_simple) {
                    payload["case"] = case_label_name(*v.label);
                } else {
                    payload["reason"] = v.reason;
                    if (v.witness) {
                        Json w = Json::array();
                        for (const auto& e : v.witness->triple) w.push_back(exponent_to_json(e));
                        payload["witness"] = w;
                    }
                }
            }
            emit(out, payload, classify_opts.format);
            return 0;
        }
        if (cmd_census->parsed()) {
            for (const CensusRow& row : census(census_n_max, census_box))
                out << census_row_to_json(row).dump() << "\n";
            return 0;
        }
        if (cmd_psi->parsed()) {
            const Parameterization p = load_parameterization(psi_opts.input, psi_opts.trunc);
            const RForm form = rform_from_json(load_json(form_arg), p.r());
            const FracSeries value = psi(p, form);
            Json payload{{"terms", series_terms_to_json(value)}, {"trunc", value.valid_degree()}};
            emit(out, payload, psi_opts.format);
            return 0;
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotQuasiOrdinaryError& e) {
        err << "rejected: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "unknown command\n";
    return 2;
}

}  // namespace qord
