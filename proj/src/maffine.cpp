#include "leontief/maffine.hpp"

#include <cassert>
#include <stdexcept>

namespace leontief {

namespace {

std::strong_ordering cmp_rational(const Rational& a, const Rational& b)
{
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

MAffine::MAffine(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta))
{
    alpha_.canonicalize();
    beta_.canonicalize();
}

MAffine& MAffine::operator+=(const MAffine& other)
{
    alpha_ += other.alpha_;
    beta_ += other.beta_;
    assert(is_canonical(alpha_) && is_canonical(beta_));
    return *this;
}

std::strong_ordering operator<=>(const MAffine& a, const MAffine& b)
{
    if (auto c = cmp_rational(a.alpha_, b.alpha_); c != 0) return c;
    return cmp_rational(a.beta_, b.beta_);
}

MAffine scale(const Rational& g, const MAffine& a)
{
    if (sgn(g) <= 0) {
        throw std::invalid_argument("MAffine scale factor must be positive, got " + to_string(g));
    }
    return MAffine(g * a.alpha(), g * a.beta());
}

std::strong_ordering compare(const MAffine& a, const MAffine& b)
{
    return a <=> b;
}

std::string to_string(const MAffine& value)
{
    if (!value.has_m()) return to_string(value.beta());
    std::string out = value.alpha() == 1 ? "M" : to_string(value.alpha()) + "M";
    if (sgn(value.beta()) > 0) {
        out += "+" + to_string(value.beta());
    } else if (sgn(value.beta()) < 0) {
        out += to_string(value.beta());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MAffine& value)
{
    return os << to_string(value);
}

}  // namespace leontief
