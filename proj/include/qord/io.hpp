#pragma once

// JSON serialization for every wire type. Term lists are emitted in
// graded-lex ascending order with coefficients in lowest terms, so equal
// values serialize byte-identically.

#include <json.hpp>

#include "qord/branch.hpp"
#include "qord/classify.hpp"
#include "qord/reduce.hpp"
#include "qord/zariski.hpp"

namespace qord {

using Json = nlohmann::json;

Json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const Json& j);

Json series_terms_to_json(const FracSeries& s);
FracSeries series_from_json(const Json& terms, int dim, long long trunc);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int vars);

// {"r":2,"n":5,"trunc":40,"terms":[{"exp":[5,1],"coef":"1"},...]}
Json parameterization_to_json(const Parameterization& p);
struct ParameterizationInput {
    int r;
    long long n;
    std::optional<long long> trunc;  // as given in the file, when present
    Json terms;
};
ParameterizationInput parameterization_input_from_json(const Json& j);

Json semigroup_to_json(const SemigroupData& sg);

Json zariski_to_json(const ZariskiResult& z);

Json change_to_json(const CoordinateChange& c);
CoordinateChange change_from_json(const Json& j, int r);

RForm rform_from_json(const Json& j, int r);

Json normal_form_to_json(const NormalForm& nf);
Json census_row_to_json(const CensusRow& row);

}  // namespace qord
