#include "jetalg/qpoly.hpp"

#include <algorithm>

namespace jetalg {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

QPoly QPoly::monic() const {
    if (is_zero())
        return *this;
    std::vector<Rational> c = c_;
    const Rational lc = leading();
    for (auto &q : c)
        q /= lc;
    return QPoly(std::move(c));
}

QPoly QPoly::derivative() const {
    std::vector<Rational> c;
    for (std::size_t k = 1; k < c_.size(); ++k)
        c.push_back(c_[k] * static_cast<long>(k));
    return QPoly(std::move(c));
}

Rational QPoly::operator()(const Rational &x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

QMatrix QPoly::operator()(const QMatrix &x) const {
    if (!x.is_square())
        throw Error("polynomial evaluated at a non-square matrix");
    QMatrix acc = QMatrix::zero(x.rows(), x.cols());
    const QMatrix id = QMatrix::identity(x.rows());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it * id;
    return acc;
}

QPoly operator+(const QPoly &a, const QPoly &b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k)
        c[k] += b.c_[k];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly &a, const QPoly &b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k)
        c[k] -= b.c_[k];
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly &a, const QPoly &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b) {
    if (b.is_zero())
        throw Error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {QPoly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        const Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
        quot[static_cast<std::size_t>(k - db)] = f;
        if (sgn(f) == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly &a, const QPoly &b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Bezout xgcd(const QPoly &a, const QPoly &b) {
    QPoly r0 = a, r1 = b;
    QPoly u0 = QPoly::constant(1), u1;
    QPoly v0, v1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly u2 = u0 - q * u1;
        QPoly v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero())
        return {r0, u0, v0};
    const QPoly scale = QPoly::constant(1 / r0.leading());
    return {r0 * scale, u0 * scale, v0 * scale};
}

QPoly power(const QPoly &a, unsigned k) {
    QPoly out = QPoly::constant(1);
    for (unsigned i = 0; i < k; ++i)
        out = out * a;
    return out;
}

QPoly char_poly(const QMatrix &a) {
    if (!a.is_square())
        throw Error("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMatrix m = QMatrix::zero(n, n);
    const QMatrix id = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + c[n - k + 1] * id;
        c[n - k] = -(a * m).trace() / static_cast<long>(k);
    }
    return QPoly(std::move(c));
}

std::vector<QPoly> squarefree_decomposition(const QPoly &a) {
    std::vector<QPoly> out;
    if (a.degree() <= 0)
        return out;
    const QPoly f = a.monic();
    const QPoly fp = f.derivative();
    QPoly g = gcd(f, fp);
    QPoly b = divmod(f, g).first;
    QPoly d = divmod(fp, g).first - b.derivative();
    while (b.degree() > 0) {
        QPoly s = gcd(b, d);
        out.push_back(s);
        b = divmod(b, s).first;
        d = divmod(d, s).first - b.derivative();
    }
    return out;
}

namespace {

constexpr unsigned long kTrialDivisionLimit = 1'000'000;

// All positive divisors of |n| (n != 0), or nullopt if n has a prime factor beyond the
// trial-division limit that is not itself the last cofactor.
std::optional<std::vector<Integer>> divisors(const Integer &n) {
    Integer rest = abs(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (unsigned long p = 2; p <= kTrialDivisionLimit && Integer(p) * p <= rest; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++e;
        }
        if (e)
            factors.emplace_back(Integer(p), e);
    }
    if (rest > 1) {
        if (Integer(kTrialDivisionLimit) * kTrialDivisionLimit < rest)
            return std::nullopt;
        factors.emplace_back(rest, 1);
    }
    std::vector<Integer> divs{1};
    for (const auto &[p, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

} // namespace

std::optional<Rational> find_rational_root(const QPoly &a) {
    if (a.degree() <= 0)
        return std::nullopt;
    if (sgn(a.coeff(0)) == 0)
        return Rational(0);
    Integer den_lcm = 1;
    for (const auto &q : a.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto &q : a.coeffs())
        z.push_back(Integer(q * den_lcm));
    const auto ps = divisors(z.front());
    const auto qs = divisors(z.back());
    if (!ps || !qs)
        return std::nullopt;
    for (const auto &p : *ps)
        for (const auto &q : *qs)
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                cand.canonicalize();
                if (sgn(a(cand)) == 0)
                    return cand;
            }
    return std::nullopt;
}

std::optional<std::pair<QPoly, QPoly>> coprime_split(const QPoly &a) {
    const auto parts = squarefree_decomposition(a);
    // Two distinct multiplicities give coprime factors at once.
    std::vector<std::size_t> nontrivial;
    for (std::size_t k = 0; k < parts.size(); ++k)
        if (parts[k].degree() > 0)
            nontrivial.push_back(k);
    if (nontrivial.size() >= 2) {
        const std::size_t k = nontrivial.front();
        QPoly q = power(parts[k], static_cast<unsigned>(k + 1));
        QPoly r = divmod(a.monic(), q).first;
        return std::pair{q, r};
    }
    if (nontrivial.empty())
        return std::nullopt;
    const std::size_t k = nontrivial.front();
    const QPoly &s = parts[k];
    if (s.degree() < 2)
        return std::nullopt;
    const auto root = find_rational_root(s);
    if (!root)
        return std::nullopt;
    const QPoly lin = QPoly::x_minus(*root);
    const QPoly rest = divmod(s, lin).first;
    const auto mult = static_cast<unsigned>(k + 1);
    return std::pair{power(lin, mult), power(rest, mult)};
}

} // namespace jetalg
