#include "jetalg/lattice.hpp"

#include <cctype>

namespace jetalg {

Rational make_rational(long num, long den) {
    if (den == 0)
        throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_literal(const std::string &s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string &text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.find('-') != std::string::npos ||
        den.find('+') != std::string::npos)
        throw Error("malformed rational: '" + text + "'");
    Integer n(num[0] == '+' ? num.substr(1) : num, 10);
    Integer d(den, 10);
    if (d == 0)
        throw Error("zero denominator in rational: '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) { return q.get_str(10); }

std::ostream &operator<<(std::ostream &os, const LatticePoint &p) {
    return os << '(' << p.m1 << ',' << p.m2 << ')';
}

std::ostream &operator<<(std::ostream &os, const MultiIndex &r) {
    return os << '(' << r.r1() << ',' << r.r2() << ')';
}

Integer monomial(LatticePoint m, MultiIndex r) {
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), Integer(static_cast<long>(m.m1)).get_mpz_t(), static_cast<unsigned long>(r.r1()));
    mpz_pow_ui(b.get_mpz_t(), Integer(static_cast<long>(m.m2)).get_mpz_t(), static_cast<unsigned long>(r.r2()));
    return a * b;
}

Integer multi_factorial(MultiIndex r) {
    Integer a, b;
    mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(r.r1()));
    mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(r.r2()));
    return a * b;
}

Integer multi_binomial(MultiIndex n, MultiIndex m) {
    if (m.r1() > n.r1() || m.r2() > n.r2())
        throw Error("multi_binomial requires m <= n componentwise");
    Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n.r1()), static_cast<unsigned long>(m.r1()));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n.r2()), static_cast<unsigned long>(m.r2()));
    return a * b;
}

} // namespace jetalg
