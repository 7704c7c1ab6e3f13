#include "qord/classify.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <tuple>

#include "qord/errors.hpp"

namespace qord {

namespace {

std::string exp_to_string(const Exponent& e) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < e.dim(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

}  // namespace

TopClass make_top_class(long long n, const Exponent& lambda1) {
    if (lambda1.dim() != 2) throw UnsupportedError("classification handles surfaces (r = 2)");
    if (!lambda1.nonnegative() || lambda1.is_zero())
        throw SemigroupError("lambda_1 must be a nonzero nonnegative vector");
    if (lambda1[0] < lambda1[1])
        throw SemigroupError("class data must be column-normalized: lambda_11 >= lambda_12");
    if (lambda1[1] == 0 && lambda1[0] <= n)
        throw SemigroupError("axis condition: lambda_1 on the first axis requires lambda_11 > n");
    TopClass cls;
    cls.n = n;
    cls.lambda1 = lambda1;
    cls.semigroup = std::make_shared<SemigroupData>(build_semigroup(2, n, {lambda1}));
    return cls;
}

std::string case_label_name(CaseLabel label) {
    switch (label) {
        case CaseLabel::a: return "a";
        case CaseLabel::b: return "b";
        case CaseLabel::c1: return "c1";
        case CaseLabel::c2: return "c2";
        case CaseLabel::c3: return "c3";
        case CaseLabel::d1: return "d1";
        case CaseLabel::d2: return "d2";
        case CaseLabel::d3: return "d3";
        case CaseLabel::d4: return "d4";
        case CaseLabel::e: return "e";
        case CaseLabel::f: return "f";
    }
    return "?";
}

namespace {

std::optional<CaseLabel> theorem_case(long long n, const Exponent& l) {
    const long long l1 = l[0];
    const long long l2 = l[1];
    if (n == 2) return CaseLabel::a;
    if (l1 == 1 && l2 == 1) return CaseLabel::b;
    if (n == 3) {
        if (1 <= l2 && l2 <= l1 && 2 <= l1 && l1 <= 5 && !(l1 == 3 && l2 == 3))
            return CaseLabel::c1;
        if (1 <= l2 && l2 <= 5 && 5 < l1 && l1 <= 8 && !(l1 == 6 && l2 == 3))
            return CaseLabel::c2;
        if (l2 <= 2 && 9 <= l1 && l1 <= 11 && !(l1 == 9 && l2 == 0)) return CaseLabel::c3;
        return std::nullopt;
    }
    if (n == 4) {
        if (l2 == 1 && 2 <= l1 && l1 <= 3) return CaseLabel::d1;
        if (2 <= l2 && l2 <= l1 && l1 <= 3 && !(l1 == 2 && l2 == 2)) return CaseLabel::d2;
        if (1 <= l2 && l2 <= 3 && 4 <= l1 && l1 <= 5 && !(l1 == 4 && l2 == 2))
            return CaseLabel::d3;
        if (l2 <= 1 && 6 <= l1 && l1 <= 7 && !(l1 == 6 && l2 == 0)) return CaseLabel::d4;
        return std::nullopt;
    }
    if (n == 5) {
        if ((l1 == 2 && l2 == 1) || (l1 == 3 && l2 == 1) || (l1 == 2 && l2 == 2))
            return CaseLabel::e;
        return std::nullopt;
    }
    if ((n == 6 || n == 7) && l1 == 2 && l2 == 1) return CaseLabel::f;
    return std::nullopt;
}

}  // namespace

Exponent TemplateFamily::member(const Exponent& lambda1, long long n, long long index) const {
    Exponent off = offset;
    if (free_pos >= 0) off[free_pos] = index;
    return mult * lambda1 + n * off;
}

std::optional<long long> TemplateFamily::match(const SemigroupData& sg, const Exponent& e) const {
    auto rep = standard_representation(sg, e, 1);
    if (!rep) return std::nullopt;
    if ((*rep)[2] != mult) return std::nullopt;
    const Exponent off({(*rep)[0], (*rep)[1]});
    for (int k = 0; k < 2; ++k) {
        if (k == free_pos) {
            if (off[k] < free_min) return std::nullopt;
        } else if (off[k] != offset[k]) {
            return std::nullopt;
        }
    }
    return free_pos >= 0 ? off[free_pos] : free_min;
}

std::vector<TemplateFamily> case_families(long long n, const Exponent& lambda1, CaseLabel label) {
    const long long l2 = lambda1[1];
    auto fixed = [](char flag, long long mult, long long o1, long long o2) {
        return TemplateFamily{flag, 'i', mult, Exponent({o1, o2}), -1, 0};
    };
    auto free_at = [](char flag, char idx, long long mult, long long o1, long long o2, int pos,
                      long long lo) {
        return TemplateFamily{flag, idx, mult, Exponent({o1, o2}), pos, lo};
    };
    switch (label) {
        case CaseLabel::a:
        case CaseLabel::b:
            return {};
        case CaseLabel::c1:
            if (l2 <= 2) return {};
            return {fixed('a', 2, -1, -1)};
        case CaseLabel::c2:
            if (l2 <= 2) return {free_at('a', 'i', 2, -2, 0, 1, 0)};
            return {fixed('a', 2, -1, -1), free_at('b', 'i', 2, -2, -1, 1, -1)};
        case CaseLabel::c3:
            return {free_at('a', 'i', 2, -2, 0, 1, 0), free_at('b', 'j', 2, -3, 0, 1, 0)};
        case CaseLabel::d1:
            return {free_at('a', 'i', 3, -1, 0, 1, 0)};
        case CaseLabel::d2:
            return {fixed('a', 3, -1, -1), free_at('b', 'i', 3, 0, -1, 0, 0),
                    free_at('c', 'j', 3, -1, 0, 1, 0)};
        case CaseLabel::d3:
            if (l2 == 1) return {free_at('a', 'i', 3, -2, 0, 1, 0)};
            return {free_at('a', 'i', 3, -2, -1, 1, -1), free_at('b', 'j', 3, -1, -1, 0, -1)};
        case CaseLabel::d4:
            return {free_at('a', 'i', 3, -2, 0, 1, 0), free_at('b', 'j', 3, -3, 0, 1, 0)};
        case CaseLabel::e:
            if (lambda1 == Exponent({2, 1})) return {free_at('a', 'i', 4, -1, 0, 1, 0)};
            if (lambda1 == Exponent({3, 1}))
                return {free_at('a', 'i', 4, -1, 0, 1, 0), free_at('b', 'j', 3, -1, 0, 1, 0)};
            return {fixed('a', 4, -1, -1), free_at('b', 'i', 4, 0, -1, 0, 0),
                    free_at('c', 'j', 4, -1, 0, 1, 0)};
        case CaseLabel::f:
            return {free_at('a', 'i', n - 1, -1, 0, 1, 0), free_at('b', 'j', n - 2, -1, 0, 1, 0)};
    }
    return {};
}

namespace {

std::optional<std::array<Exponent, 3>> find_three_antichain(const SemigroupData& sg,
                                                            long long box) {
    const std::vector<Exponent> pool = candidate_zariski_search(sg, box);
    const std::size_t m = pool.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (product_comparable(pool[i], pool[j])) continue;
            for (std::size_t k = j + 1; k < m; ++k) {
                if (product_comparable(pool[i], pool[k])) continue;
                if (product_comparable(pool[j], pool[k])) continue;
                return std::array<Exponent, 3>{pool[i], pool[j], pool[k]};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

QuasiSimpleVerdict is_quasi_simple(const TopClass& cls) {
    if (cls.semigroup->g() != 1) throw UnsupportedError("class data must have one exponent");
    QuasiSimpleVerdict verdict;
    if (auto label = theorem_case(cls.n, cls.lambda1)) {
        verdict.quasi_simple = true;
        verdict.label = label;
        return verdict;
    }
    verdict.quasi_simple = false;
    if (cls.n == 5 && cls.lambda1 == Exponent({5, 1})) {
        verdict.reason = "two-exponent-moduli-obstruction";
        return verdict;
    }
    if (auto witness = can_admit_three(*cls.semigroup)) {
        verdict.reason = "three-exponent-witness";
        verdict.witness = witness;
        return verdict;
    }
    const long long box = 2 * (cls.n + cls.lambda1.total());
    if (auto triple = find_three_antichain(*cls.semigroup, box)) {
        verdict.reason = "three-exponent-witness";
        verdict.found_triple = triple;
        return verdict;
    }
    verdict.reason = "outside-theorem-table";
    return verdict;
}

std::vector<TemplateInstance> enumerate_template_instances(const TopClass& cls, CaseLabel label,
                                                           long long max_index) {
    const auto families = case_families(cls.n, cls.lambda1, label);
    std::vector<TemplateInstance> out;

    std::vector<std::vector<long long>> index_choices;  // per family: -1 sentinel for "off"
    for (const auto& fam : families) {
        std::vector<long long> choices{LLONG_MIN};  // off
        if (fam.free_pos < 0) {
            choices.push_back(fam.free_min);
        } else {
            for (long long v = fam.free_min; v <= max_index; ++v) choices.push_back(v);
        }
        index_choices.push_back(std::move(choices));
    }

    std::vector<std::size_t> pick(families.size(), 0);
    while (true) {
        TemplateInstance inst;
        std::vector<Exponent> exps;
        for (std::size_t k = 0; k < families.size(); ++k) {
            const long long choice = index_choices[k][pick[k]];
            if (choice == LLONG_MIN) {
                inst.flags[families[k].flag] = 0;
            } else {
                inst.flags[families[k].flag] = 1;
                if (families[k].free_pos >= 0) inst.indices[families[k].index_name] = choice;
                exps.push_back(families[k].member(cls.lambda1, cls.n, choice));
            }
        }
        if (is_antichain(exps)) out.push_back(std::move(inst));

        std::size_t k = 0;
        while (k < families.size() && ++pick[k] == index_choices[k].size()) {
            pick[k] = 0;
            ++k;
        }
        if (k == families.size()) break;
        if (families.empty()) break;
    }
    if (families.empty()) out.push_back(TemplateInstance{});
    // the all-off instance appears exactly once
    std::sort(out.begin(), out.end(), [](const TemplateInstance& x, const TemplateInstance& y) {
        return std::tie(x.flags, x.indices) < std::tie(y.flags, y.indices);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TemplateInstance& x, const TemplateInstance& y) {
                              return x.flags == y.flags && x.indices == y.indices;
                          }),
              out.end());
    return out;
}

FracSeries instantiate_template(const TopClass& cls, CaseLabel label,
                                const std::map<char, long long>& flags,
                                const std::map<char, long long>& indices, long long trunc) {
    const auto families = case_families(cls.n, cls.lambda1, label);
    std::vector<Exponent> exps;
    for (const auto& fam : families) {
        auto it = flags.find(fam.flag);
        if (it == flags.end() || it->second == 0) continue;
        long long index = fam.free_min;
        if (fam.free_pos >= 0) {
            auto ix = indices.find(fam.index_name);
            if (ix == indices.end()) throw InputError("missing index for a set flag");
            index = ix->second;
            if (index < fam.free_min) throw InputError("index below the family bound");
        }
        const Exponent e = fam.member(cls.lambda1, cls.n, index);
        if (!product_lt(cls.lambda1, e))
            throw InternalConsistencyError("template member does not dominate lambda_1");
        if (eliminable_set_member(*cls.semigroup, e))
            throw InternalConsistencyError("template member " + exp_to_string(e) +
                                           " is eliminable");
        exps.push_back(e);
    }
    if (!is_antichain(exps)) throw InputError("non-canonical flag combination (comparable members)");

    FracSeries s(2, trunc);
    s.add_term(cls.lambda1, Rat(1));
    for (const Exponent& e : exps) {
        if (e.total() > trunc)
            throw InputError("truncation order does not reach a template member");
        s.add_term(e, Rat(1));
    }
    return s;
}

NormalFormOutcome normal_form(const Parameterization& p) {
    const NormalizationCheck norm = is_normalized(p);
    if (!norm.normalized)
        throw NormalizationRequiredError("normal form requires a normalized input: " +
                                         norm.reasons.front());
    if (p.g() != 1) throw UnsupportedError("normal forms cover one characteristic exponent");

    TopClass cls;
    cls.n = p.n();
    cls.lambda1 = p.lambda1();
    cls.semigroup = p.semigroup_ptr();
    QuasiSimpleVerdict verdict = is_quasi_simple(cls);
    if (!verdict.quasi_simple) return verdict;

    Parameterization current = quasi_short_reduce(p).parameterization;
    const SemigroupData& sg = current.semigroup();

    // eliminate every tail term beyond the Zariski exponents
    std::optional<Exponent> last;
    while (true) {
        const std::vector<Exponent> tail = current.tail_support();
        std::vector<Exponent> zariski;
        for (const Exponent& e : tail)
            if (!eliminable_set_member(sg, e)) zariski.push_back(e);
        zariski = minimal_antichain(std::move(zariski));

        std::optional<Exponent> offender;
        for (const Exponent& e : tail) {
            if (std::find(zariski.begin(), zariski.end(), e) != zariski.end()) continue;
            if (!offender || graded_lex_lt(e, *offender)) offender = e;
        }
        if (!offender) break;
        if (last && !graded_lex_lt(*last, *offender))
            throw InternalConsistencyError("normal-form elimination is not making progress");
        last = offender;

        if (eliminable_set_member(sg, *offender)) {
            current = eliminate_term(current, *offender).parameterization;
            continue;
        }
        bool handled = false;
        for (const Exponent& delta : zariski) {
            const Exponent shift = *offender - delta;
            if (shift.is_zero() || !shift.nonnegative()) continue;
            if (!gamma_member(sg, shift)) continue;
            current = eliminate_beyond_zariski(current, *offender, delta, zariski).parameterization;
            handled = true;
            break;
        }
        if (!handled)
            throw InternalConsistencyError("tail exponent " + exp_to_string(*offender) +
                                           " does not match the template structure");
    }

    std::vector<Exponent> zariski = current.tail_support();
    if (!is_antichain(zariski))
        throw InternalConsistencyError("reduced tail is not an antichain");
    if (zariski.size() > 2)
        throw InternalConsistencyError("quasi-simple class produced more than two exponents");

    NormalForm nf{*verdict.label, {}, {}, current.series(), std::nullopt};
    const auto families = case_families(cls.n, cls.lambda1, *verdict.label);
    for (const auto& fam : families) nf.flags[fam.flag] = 0;
    for (const Exponent& e : zariski) {
        bool matched = false;
        for (const auto& fam : families) {
            if (auto index = fam.match(sg, e)) {
                if (nf.flags[fam.flag] != 0)
                    throw InternalConsistencyError("two exponents matched one family");
                nf.flags[fam.flag] = 1;
                if (fam.free_pos >= 0) nf.indices[fam.index_name] = *index;
                matched = true;
                break;
            }
        }
        if (!matched)
            throw InternalConsistencyError("exponent " + exp_to_string(e) +
                                           " does not match any template family");
    }

    NormalizationOutcome rescaled = normalize_coefficients(current, zariski);
    if (std::holds_alternative<Parameterization>(rescaled)) {
        nf.series = std::get<Parameterization>(rescaled).series();
    } else {
        nf.certificate = std::get<NormalizabilityCertificate>(rescaled);
    }
    return nf;
}

std::vector<CensusRow> census(long long n_max, long long lambda_box) {
    std::vector<CensusRow> rows;
    for (long long n = 2; n <= n_max; ++n) {
        for (long long l1 = 1; l1 <= lambda_box; ++l1) {
            for (long long l2 = 0; l2 <= l1; ++l2) {
                CensusRow row;
                row.n = n;
                row.lambda1 = Exponent({l1, l2});
                TopClass cls;
                try {
                    cls = make_top_class(n, row.lambda1);
                    row.valid = true;
                } catch (const Error& err) {
                    row.invalid_reason = err.what();
                    rows.push_back(std::move(row));
                    continue;
                }
                QuasiSimpleVerdict verdict = is_quasi_simple(cls);
                row.quasi_simple = verdict.quasi_simple;
                auto three = can_admit_three(*cls.semigroup);
                row.admits_three = three.has_value();
                if (verdict.quasi_simple) {
                    row.case_name = case_label_name(*verdict.label);
                    if (three)
                        throw InternalConsistencyError(
                            "quasi-simple class admits a three-exponent witness");
                    if (*verdict.label == CaseLabel::f ||
                        (*verdict.label == CaseLabel::e && row.lambda1 == Exponent({3, 1})))
                        row.audit = "two-flag side condition read as: both flags require i<j";
                } else {
                    row.reason = verdict.reason;
                    if (verdict.witness)
                        row.witness.assign(verdict.witness->triple.begin(),
                                           verdict.witness->triple.end());
                    else if (verdict.found_triple)
                        row.witness.assign(verdict.found_triple->begin(),
                                           verdict.found_triple->end());
                    if (verdict.reason == "outside-theorem-table")
                        row.audit = "no obstruction found; class lies outside the enumerated ranges";
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace qord
