#include "leontief/rational.hpp"

#include <stdexcept>

namespace leontief {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                  : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    Rational value(n, d);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

bool is_canonical(const Rational& value)
{
    if (sgn(value.get_den()) <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return g == 1;
}

bool is_integer(const Rational& value)
{
    return value.get_den() == 1;
}

Rational ceil(const Rational& value)
{
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return Rational(q);
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
    }
    return sum;
}

RationalVector zeros(std::size_t size)
{
    return RationalVector(size, Rational(0));
}

}  // namespace leontief
