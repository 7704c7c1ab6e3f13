#include "qord/rational.hpp"

#include <cctype>

#include "qord/errors.hpp"

namespace qord {

Rat parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw InputError("bad rational literal: '" + text + "'");
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw InputError("bad rational literal: '" + text + "'");
    Int d(den);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rat& value) {
    Rat v = value;
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::optional<Rat> exact_root(const Rat& value, long long q) {
    if (q < 1) throw InputError("root index must be >= 1");
    if (q == 1) return value;
    if (value == 0) return Rat(0);
    if (value < 0 && q % 2 == 0) return std::nullopt;

    Rat v = value;
    v.canonicalize();
    Int num = v.get_num();
    Int den = v.get_den();
    const bool negative = num < 0;
    if (negative) num = -num;

    Int rn, rd;
    const int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(q));
    const int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(q));
    if (!exact_n || !exact_d) return std::nullopt;
    Rat root(negative ? Int(-rn) : rn, rd);
    root.canonicalize();
    return root;
}

Rat rat_pow(const Rat& value, long long e) {
    if (e == 0) return Rat(1);
    if (value == 0 && e < 0) throw FieldError("zero to a negative power");
    Rat v = value;
    v.canonicalize();
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), v.get_num().get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), v.get_den().get_mpz_t(), k);
    Rat r = (e > 0) ? Rat(pn, pd) : Rat(pd, pn);
    r.canonicalize();
    return r;
}

Rat binomial(const Rat& alpha, long long k) {
    if (k < 0) return Rat(0);
    Rat acc(1);
    for (long long i = 0; i < k; ++i) {
        acc *= (alpha - rat_of(i));
        acc /= rat_of(i + 1);
    }
    acc.canonicalize();
    return acc;
}

}  // namespace qord
