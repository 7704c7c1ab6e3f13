#pragma once

// Classification of quasi-ordinary surface classes with one
// characteristic exponent: the quasi-simple decision table, normal-form
// templates and extraction, and the census driver.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qord/reduce.hpp"
#include "qord/zariski.hpp"

namespace qord {

struct TopClass {
    long long n = 0;
    Exponent lambda1;
    std::shared_ptr<const SemigroupData> semigroup;
};

// Builds class data and checks the gates: lambda_1 outside nZ^2 with
// index n (so the semigroup is ⟨(n,0),(0,n),lambda_1⟩) and the
// normalized-class conditions. Throws SemigroupError / UnsupportedError.
TopClass make_top_class(long long n, const Exponent& lambda1);

enum class CaseLabel { a, b, c1, c2, c3, d1, d2, d3, d4, e, f };
std::string case_label_name(CaseLabel label);

// One exponent family t^(mult*lambda1 + n*offset) of a normal-form
// template; free_pos marks the offset coordinate that enumerates the
// family (-1 when the member is fixed).
struct TemplateFamily {
    char flag = 'a';
    char index_name = 'i';
    long long mult = 0;
    Exponent offset;  // the free coordinate holds free_min
    int free_pos = -1;
    long long free_min = 0;

    Exponent member(const Exponent& lambda1, long long n, long long index) const;
    // Recognizes e as a member and returns its index (free_min for fixed
    // families).
    std::optional<long long> match(const SemigroupData& sg, const Exponent& e) const;
};

std::vector<TemplateFamily> case_families(long long n, const Exponent& lambda1, CaseLabel label);

struct QuasiSimpleVerdict {
    bool quasi_simple = false;
    std::optional<CaseLabel> label;
    std::string reason;  // rejection reason code, empty when quasi-simple
    std::optional<ThreeExponentWitness> witness;          // from the feasibility predicate
    std::optional<std::array<Exponent, 3>> found_triple;  // from the bounded search
};

// The decision table of the classification, with the three-exponent
// predicate / bounded antichain search / the (5,(5,1)) moduli
// obstruction as rejection reasons.
QuasiSimpleVerdict is_quasi_simple(const TopClass& cls);

struct NormalForm {
    CaseLabel label;
    std::map<char, long long> flags;    // every family flag of the case -> 0/1
    std::map<char, long long> indices;  // index values for the set flags
    FracSeries series;
    std::optional<NormalizabilityCertificate> certificate;  // set when rescaling needs irrational roots
};

using NormalFormOutcome = std::variant<NormalForm, QuasiSimpleVerdict>;

// Reduces a normalized parameterization of a quasi-simple class to its
// template: quasi-short reduction, elimination of every tail term beyond
// the Zariski exponents, template matching, and coefficient
// normalization. Non-quasi-simple inputs yield the obstruction verdict.
NormalFormOutcome normal_form(const Parameterization& p);

struct TemplateInstance {
    std::map<char, long long> flags;
    std::map<char, long long> indices;
};

// All canonical flag/index combinations with indices bounded by
// max_index (canonical = the instantiated exponents form a ⪯-antichain).
std::vector<TemplateInstance> enumerate_template_instances(const TopClass& cls, CaseLabel label,
                                                           long long max_index);

// The template series with unit coefficients. Throws InputError for
// non-canonical combinations.
FracSeries instantiate_template(const TopClass& cls, CaseLabel label,
                                const std::map<char, long long>& flags,
                                const std::map<char, long long>& indices, long long trunc);

struct CensusRow {
    long long n = 0;
    Exponent lambda1;
    bool valid = false;
    std::string invalid_reason;
    bool quasi_simple = false;
    std::string case_name;
    std::string reason;
    std::vector<Exponent> witness;  // empty, or the three-exponent triple
    bool admits_three = false;
    std::string audit;
};

// Enumerates every column-normalized class with n <= n_max and
// lambda-coordinates <= lambda_box, classifies the valid ones and
// cross-checks each verdict against the three-exponent predicate.
std::vector<CensusRow> census(long long n_max, long long lambda_box);

}  // namespace qord
