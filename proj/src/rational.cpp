#include "lipwb/rational.hpp"

#include "lipwb/errors.hpp"

#include <cctype>

namespace lipwb {

namespace {

bool canonical_int(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    if (s[i] == '0' && s.size() - i > 1) return false;  // leading zero
    if (s[i] == '0' && i == 1) return false;            // "-0"
    return true;
}

}  // namespace

Q parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!canonical_int(s, true)) throw ParseError("not a canonical rational: '" + s + "'");
        return Q(s, 10);
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!canonical_int(num, true) || !canonical_int(den, false))
        throw ParseError("not a canonical rational: '" + s + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 1 || d == 0) throw ParseError("not a canonical rational: '" + s + "'");
    if (gcd(n, d) != 1) throw ParseError("not in lowest terms: '" + s + "'");
    if (n == 0) throw ParseError("not a canonical rational: '" + s + "'");
    return Q(n, d);
}

std::string to_string(const Q& q) { return q.get_str(10); }

Q qpow(const Q& base, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
    Q r(n, d);
    r.canonicalize();
    return r;
}

Q pow2_neg(unsigned long e) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, e);
    return Q(mpz_class(1), d);
}

Q linf(const QVec& a) {
    Q m = 0;
    for (const auto& x : a) m = std::max(m, qabs(x));
    return m;
}

Q l1(const QVec& a) {
    Q s = 0;
    for (const auto& x : a) s += qabs(x);
    return s;
}

Q random_rational(std::mt19937_64& rng, long lo, long hi, unsigned max_den) {
    long den = static_cast<long>(rng() % max_den) + 1;
    unsigned long span = static_cast<unsigned long>((hi - lo) * den + 1);
    long num = lo * den + static_cast<long>(rng() % span);
    Q q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace lipwb
