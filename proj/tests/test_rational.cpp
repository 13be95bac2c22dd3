#include "lipwb/errors.hpp"
#include "lipwb/rational.hpp"

#include <gtest/gtest.h>

using namespace lipwb;

TEST(Rational, ParsesCanonicalForms) {
    EXPECT_EQ(parse_rational("0"), Q(0));
    EXPECT_EQ(parse_rational("-3"), Q(-3));
    EXPECT_EQ(parse_rational("7/2"), Q(7, 2));
    EXPECT_EQ(parse_rational("-11/18"), Q(-11, 18));
    EXPECT_EQ(parse_rational("123456789012345678901234567890"), Q(mpz_class("123456789012345678901234567890")));
}

TEST(Rational, RejectsNonCanonicalForms) {
    for (const char* s : {"2/4", "3/1", "-0", "+1", "01", " 1", "1 ", "1/0", "0/5", "1/-2", "", "/", "1/", "a", "1.5", "-0/3"})
        EXPECT_THROW(parse_rational(s), ParseError) << s;
}

TEST(Rational, RoundTrip) {
    for (const Q& q : {Q(0), Q(5), Q(-5), Q(1, 54), Q(-1023, 1024)}) EXPECT_EQ(parse_rational(to_string(q)), q);
    EXPECT_EQ(to_string(Q(11, 18)), "11/18");
    EXPECT_EQ(to_string(Q(-4)), "-4");
}

TEST(Rational, Powers) {
    EXPECT_EQ(qpow(Q(2, 3), 3), Q(8, 27));
    EXPECT_EQ(qpow(Q(-1, 2), 0), Q(1));
    EXPECT_EQ(pow2_neg(10), Q(1, 1024));
    EXPECT_EQ(pow2_neg(0), Q(1));
}

TEST(Rational, Norms) {
    QVec a{Q(1), Q(-3, 2), Q(0), Q(1, 2)};
    EXPECT_EQ(linf(a), Q(3, 2));
    EXPECT_EQ(l1(a), Q(3));
    EXPECT_EQ(linf({}), Q(0));
    EXPECT_EQ(qsign(Q(-2)), -1);
    EXPECT_EQ(qabs(Q(-2, 7)), Q(2, 7));
}

TEST(Rational, RandomStreamIsSeededAndInRange) {
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 500; ++i) {
        Q x = random_rational(a, -3, 3, 16);
        EXPECT_EQ(x, random_rational(b, -3, 3, 16));
        EXPECT_GE(x, -3);
        EXPECT_LE(x, 3);
        EXPECT_LE(x.get_den(), 16);
    }
}
