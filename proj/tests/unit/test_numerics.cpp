#include "leontief/maffine.hpp"
#include "leontief/rational.hpp"

#include <doctest.h>

#include <sstream>

using namespace leontief;

TEST_CASE("parse_rational accepts signed integers and fractions")
{
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("+3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(is_canonical(parse_rational("10/4")));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(parse_rational("-0")) == "0");
    CHECK(to_string(parse_rational("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("parse_rational rejects malformed text")
{
    for (const char* bad : {"", "-", "+", "1/", "/2", "1/0", "1/-2", "1.5", "0x10", " 1", "1 ", "1//2", "a", "1/2/3",
                            "--1", "1e3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    }
}

TEST_CASE("ceil, is_integer and dot")
{
    CHECK(ceil(Rational(-1, 2)) == 0);
    CHECK(ceil(Rational(1, 2)) == 1);
    CHECK(ceil(Rational(-3, 2)) == -1);
    CHECK(ceil(Rational(4)) == 4);
    CHECK(is_integer(parse_rational("4/2")));
    CHECK_FALSE(is_integer(Rational(1, 3)));
    const RationalVector a{Rational(1, 2), Rational(2)};
    const RationalVector b{Rational(4), Rational(-1, 4)};
    CHECK(dot(a, b) == Rational(3, 2));
    CHECK(zeros(3) == RationalVector{0, 0, 0});
}

TEST_CASE("MAffine ordering is lexicographic in (alpha, beta)")
{
    const MAffine m = MAffine::big_m();
    const MAffine half_m_minus_3{Rational(1, 2), Rational(-3)};
    CHECK(half_m_minus_3 < m);
    CHECK(MAffine::constant(1000000) < MAffine(Rational(1, 1000000), Rational(-1000000)));
    CHECK(MAffine::constant(-1) < MAffine::constant(0));
    CHECK(MAffine(Rational(1), Rational(-2)) < m);
    CHECK(compare(m, m) == std::strong_ordering::equal);
}

TEST_CASE("MAffine arithmetic")
{
    const MAffine a{Rational(1, 2), Rational(-3)};
    const MAffine b{Rational(1, 3), Rational(1)};
    CHECK(a + b == MAffine(Rational(5, 6), Rational(-2)));
    CHECK(scale(Rational(1, 3), MAffine(Rational(1, 2), Rational(-3))) == MAffine(Rational(1, 6), Rational(-1)));
    CHECK_THROWS_AS(scale(Rational(0), a), std::invalid_argument);
    CHECK_THROWS_AS(scale(Rational(-1), a), std::invalid_argument);
    CHECK(a.evaluate(Rational(6)) == 0);
    CHECK_FALSE(MAffine::constant(5).has_m());
}

TEST_CASE("MAffine text form")
{
    CHECK(to_string(MAffine::big_m()) == "M");
    CHECK(to_string(MAffine::constant(-3)) == "-3");
    CHECK(to_string(MAffine(Rational(1, 2), Rational(-3))) == "1/2M-3");
    CHECK(to_string(MAffine(Rational(1, 3), Rational(1))) == "1/3M+1");
    CHECK(to_string(MAffine(Rational(1, 6), Rational(0))) == "1/6M");
    std::ostringstream os;
    os << MAffine(Rational(1), Rational(-2));
    CHECK(os.str() == "M-2");
}
