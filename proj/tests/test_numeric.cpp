#include "ptcubic/errors.hpp"
#include "ptcubic/numeric.hpp"

#include "doctest.h"

#include <string>

using namespace ptcubic;

TEST_SUITE_BEGIN("numeric");

TEST_CASE("parse_rational accepts fractions, integers, and decimals") {
    CHECK(parse_rational("1/8") == Rat(1, 8));
    CHECK(parse_rational("-3/9") == Rat(-1, 3)); // canonicalized
    CHECK(parse_rational("+3/4") == Rat(3, 4));
    CHECK(parse_rational("6/-4") == Rat(-3, 2)); // sign normalizes out of the denominator
    CHECK(parse_rational("11") == Rat(11));
    CHECK(parse_rational("-930") == Rat(-930));
    CHECK(parse_rational("0.125") == Rat(1, 8));
    CHECK(parse_rational("-2.5e-3") == Rat(-1, 400));
    CHECK(parse_rational("1e3") == Rat(1000));
    CHECK(parse_rational(".5") == Rat(1, 2));
    CHECK(parse_rational("5.") == Rat(5));
    CHECK(parse_rational("  1/2\t") == Rat(1, 2)); // surrounding whitespace
}

TEST_CASE("parse_rational decimals with leading zeros stay decimal") {
    // A naive GMP string construction would read "050263" as octal.
    CHECK(parse_rational("0.50263") == Rat(50263, 100000));
    CHECK(parse_rational("0.50263229852749292") ==
          Rat(parse_integer("50263229852749292"), parse_integer("100000000000000000")));
    CHECK(parse_rational("0.089") == Rat(89, 1000));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("   "), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational("nan"), InputError);
    CHECK_THROWS_AS(parse_rational("inf"), InputError);
    CHECK_THROWS_AS(parse_rational("0x10"), InputError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), InputError);
    CHECK_THROWS_AS(parse_rational("1e99999999999"), InputError); // exponent clamp
    CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
}

TEST_CASE("parse_integer is strictly base 10") {
    CHECK(parse_integer("050263") == Int(50263));
    CHECK(parse_integer("-0930") == Int(-930));
    CHECK(parse_integer("0") == Int(0));
    CHECK(parse_integer("007") == Int(7));
    CHECK_THROWS_AS(parse_integer(""), InputError);
    CHECK_THROWS_AS(parse_integer("-"), InputError);
    CHECK_THROWS_AS(parse_integer("12a"), InputError);
    CHECK_THROWS_AS(parse_integer("0x12"), InputError);
}

TEST_CASE("round_to_places uses round-half-to-even") {
    CHECK(round_to_places(Rat(25, 1000), 2) == Rat(1, 50));   // 0.025 -> 0.02
    CHECK(round_to_places(Rat(35, 1000), 2) == Rat(1, 25));   // 0.035 -> 0.04
    CHECK(round_to_places(Rat(-25, 1000), 2) == Rat(-1, 50)); // symmetric
    CHECK(round_to_places(Rat(3872, 817), 9) == Rat(4739290086, 1000000000));
    CHECK(round_to_places(Rat(7, 2), 0) == Rat(4));
    CHECK(round_to_places(Rat(5, 2), 0) == Rat(2));
}

TEST_CASE("round_to_digits rounds significant digits") {
    CHECK(round_to_digits(Rat(3872, 817), 10) == Rat(4739290086, 1000000000));
    CHECK(round_to_digits(Rat(12345, 1), 2) == Rat(12000));
    CHECK(round_to_digits(Rat(0), 5) == Rat(0));
    CHECK(round_to_digits(Rat(-1, 3), 3) == Rat(-333, 1000));
    CHECK_THROWS_AS(round_to_digits(Rat(1), 0), InputError);
}

TEST_CASE("format_fixed prints exactly the requested places") {
    CHECK(format_fixed(Rat(3872, 817), 9) == "4.739290086");
    CHECK(format_fixed(Rat(11), 9) == "11.000000000");
    CHECK(format_fixed(Rat(-1, 8), 2) == "-0.12"); // -0.125 -> half-even
    CHECK(format_fixed(Rat(-3, 8), 2) == "-0.38");
    CHECK(format_fixed(Rat(5), 0) == "5");
    CHECK(format_fixed(Rat(1, 200), 2) == "0.00"); // 0.005 -> half-even
    CHECK_THROWS_AS(format_fixed(Rat(1), -1), InputError);
}

TEST_CASE("format_significant switches notation sensibly") {
    CHECK(format_significant(Rat(1, 3), 5) == "0.33333");
    CHECK(format_significant(Rat(1, 2), 3) == "0.500"); // trailing zeros kept
    CHECK(format_significant(Rat(-930), 3) == "-930");
    CHECK(format_significant(Rat(1, 1000000), 3) == "1.00e-6");
    CHECK(format_significant(Rat(999999, 1000), 3) == "1.00e+3"); // carry into new digit
    CHECK(format_significant(Rat(0), 7) == "0");
    CHECK(format_significant(Rat(123450000), 4) == "1.234e+8"); // half-even down
    CHECK(format_significant(Rat(123550000), 4) == "1.236e+8"); // half-even up
    CHECK(format_significant(Rat(12345, 10), 4) == "1234");     // 1234.5 -> even
}

TEST_CASE("Real conversions are faithful") {
    const Real third = to_real(Rat(1, 3));
    CHECK(abs(third * 3 - 1) < Real("1e-115"));
    CHECK(to_real(Int(-930)) == Real(-930));
    const std::string printed = format_real(Real("2.5"), 10);
    CHECK(parse_rational(printed) == Rat(5, 2));
}

TEST_SUITE_END();
