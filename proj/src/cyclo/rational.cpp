#include "uqrep/core/rational.hpp"

#include <cctype>
#include <numeric>

namespace uqrep {

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(const std::string& s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; }

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw DomainError("malformed rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw DomainError("zero denominator in rational: '" + text + "'");
    Rational r(Integer(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long to_long(const Rational& r) {
    if (!is_integer(r)) throw DomainError("expected an integer, got " + to_string(r));
    if (!r.get_num().fits_slong_p()) throw DomainError("integer out of range: " + to_string(r));
    return r.get_num().get_si();
}

long floor_long(const Rational& r) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f.get_si();
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace uqrep
