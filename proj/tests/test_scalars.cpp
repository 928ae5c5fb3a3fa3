#include <random>

#include "doctest.h"
#include "framelat/contfrac.hpp"
#include "framelat/quad.hpp"

using namespace framelat;

namespace {

// Independent sign oracle: evaluate a + b*sqrt(d) with 256-bit floats
// (~77 decimal digits). Inputs of height <= 10^3 keep |value| far above
// the rounding floor whenever it is nonzero.
int decimalSignOracle(const QuadScalar& x) {
    mpf_class a(x.rationalPart(), 256), b(x.surdPart(), 256), d(x.discriminant(), 256);
    mpf_class root(0, 256);
    mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
    mpf_class v = a + b * root;
    return sgn(v);
}

QuadScalar randomQuad(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 999);
    const long ds[] = {0, 2, 3, 5, 6, 7, 10};
    std::uniform_int_distribution<int> di(0, 6);
    return QuadScalar(makeRational(num(rng), den(rng)), makeRational(num(rng), den(rng)), ds[di(rng)]);
}

} // namespace

TEST_CASE("quad scalar canonical form") {
    CHECK(QuadScalar(makeRational(1), makeRational(0), 5).isRational());
    CHECK(QuadScalar(makeRational(2), makeRational(5), 1) == QuadScalar(7));
    // square factors migrate out of the radicand
    QuadScalar x(makeRational(1), makeRational(3), 12);
    CHECK(x.discriminant() == 3);
    CHECK(x.surdPart() == 6);
    CHECK(QuadScalar(makeRational(2), makeRational(5), 0) == QuadScalar(2));
}

TEST_CASE("quad scalar sign") {
    CHECK(QuadScalar(makeRational(0), makeRational(0), 5).sign() == 0);
    CHECK(QuadScalar(makeRational(1), makeRational(-1, 2), 5).sign() == -1);
    CHECK(QuadScalar(makeRational(3), makeRational(-2), 2).sign() == 1);

    std::mt19937 rng(20240811);
    for (int i = 0; i < 10000; ++i) {
        QuadScalar x = randomQuad(rng);
        CHECK(x.sign() == decimalSignOracle(x));
        CHECK((x * x).sign() >= 0);
    }
}

TEST_CASE("quad scalar arithmetic") {
    QuadScalar one(1);
    QuadScalar r2 = QuadScalar::sqrtOf(2);
    CHECK((one + r2) * (one - r2) == QuadScalar(-1));
    QuadScalar r5 = QuadScalar::sqrtOf(5);
    CHECK(r5 / r5 == one);
    QuadScalar half5(makeRational(1, 2), makeRational(1, 2), 5);
    CHECK(half5 * half5 == QuadScalar(makeRational(3, 2), makeRational(1, 2), 5));

    CHECK_THROWS_AS(one / QuadScalar(0), ValidationError);
    CHECK_THROWS_AS(r2 + QuadScalar::sqrtOf(3), ValidationError);

    // field axioms on random values (same d)
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<long> num(-50, 50);
        std::uniform_int_distribution<long> den(1, 20);
        auto mk = [&] { return QuadScalar(makeRational(num(rng), den(rng)), makeRational(num(rng), den(rng)), 5); };
        QuadScalar x = mk(), y = mk(), z = mk();
        CHECK((x + y) * z == x * z + y * z);
        if (!y.isZero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("rational token round trip") {
    CHECK(parseRationalToken("7") == 7);
    CHECK(parseRationalToken("-5/3") == makeRational(-5, 3));
    CHECK_THROWS_AS(parseRationalToken("2/4"), ParseError);
    CHECK_THROWS_AS(parseRationalToken("3/1"), ParseError);
    CHECK_THROWS_AS(parseRationalToken("03"), ParseError);
    CHECK_THROWS_AS(parseRationalToken("1/-2"), ParseError);
    CHECK(rationalToString(makeRational(-5, 3)) == "-5/3");
    CHECK(rationalToString(makeRational(4)) == "4");
}

TEST_CASE("continued fraction of rationals and surds") {
    ContinuedFraction seven3 = cfExpand(QuadScalar(makeRational(7, 3)));
    CHECK(seven3.integerPart == 2);
    REQUIRE(seven3.preperiod.size() == 1);
    CHECK(seven3.preperiod[0] == 3);
    CHECK(!seven3.isPeriodic());

    ContinuedFraction r2 = cfExpand(QuadScalar::sqrtOf(2));
    CHECK(r2.integerPart == 1);
    CHECK(r2.preperiod.empty());
    REQUIRE(r2.period.size() == 1);
    CHECK(r2.period[0] == 2);

    QuadScalar golden(makeRational(1, 2), makeRational(1, 2), 5);
    ContinuedFraction phi = cfExpand(golden);
    CHECK(phi.integerPart == 1);
    CHECK(phi.preperiod.empty());
    REQUIRE(phi.period.size() == 1);
    CHECK(phi.period[0] == 1);

    // sqrt(2) convergents: 1/1, 3/2, 7/5, 17/12
    ConvergentStream conv(r2);
    auto c0 = conv.next();
    auto c1 = conv.next();
    auto c2 = conv.next();
    auto c3 = conv.next();
    CHECK(c0 == std::make_pair(Int(1), Int(1)));
    CHECK(c1 == std::make_pair(Int(3), Int(2)));
    CHECK(c2 == std::make_pair(Int(7), Int(5)));
    CHECK(c3 == std::make_pair(Int(17), Int(12)));
}

TEST_CASE("convergent recurrence and alternation") {
    const QuadScalar values[] = {
        QuadScalar::sqrtOf(2),
        QuadScalar(makeRational(1, 2), makeRational(1, 2), 5),
        QuadScalar(makeRational(-3, 7), makeRational(2, 3), 6),
    };
    for (const QuadScalar& x : values) {
        ContinuedFraction cf = cfExpand(x);
        ConvergentStream conv(cf);
        std::vector<std::pair<Int, Int>> c;
        for (int m = 0; m < 11; ++m) c.push_back(conv.next());
        for (int m = 1; m < 10; ++m) {
            // q_{m+1} = a_{m+1} q_m + q_{m-1}
            CHECK(c[m + 1].second == cf.quotient(m + 1) * c[m].second + c[m - 1].second);
            // residuals p_m - q_m x alternate in sign
            QuadScalar rm = QuadScalar(Rational(c[m].first)) - QuadScalar(Rational(c[m].second)) * x;
            QuadScalar rn = QuadScalar(Rational(c[m + 1].first)) - QuadScalar(Rational(c[m + 1].second)) * x;
            CHECK((rm * rn).sign() < 0);
        }
        // |x - p/q| < 1/q^2  <=>  |q x - p| * q < 1
        for (int m = 0; m < 11; ++m) {
            QuadScalar resid = QuadScalar(Rational(c[m].second)) * x - QuadScalar(Rational(c[m].first));
            QuadScalar bound = resid.abs() * QuadScalar(Rational(c[m].second));
            CHECK(bound < QuadScalar(1));
        }
    }
}
