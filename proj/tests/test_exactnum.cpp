#include "aperiodic/exactnum.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include <random>

using aperiodic::DivisionByZero;
using aperiodic::ParseError;
using aperiodic::QPhi;

namespace {

using Big = boost::multiprecision::cpp_dec_float_100;

QPhi q(long a, long b) { return QPhi(mpq_class(a), mpq_class(b)); }

Big big(const mpq_class& r) { return Big(r.get_num().get_str()) / Big(r.get_den().get_str()); }

// value in the real embedding, 100 digits
Big value(const QPhi& x) {
    static const Big ph = (Big(1) + boost::multiprecision::sqrt(Big(5))) / 2;
    return big(x.a()) + big(x.b()) * ph;
}

QPhi random_elem(std::mt19937& g, long range = 50, long den = 30) {
    std::uniform_int_distribution<long> n(-range, range), d(1, den);
    return QPhi(mpq_class(n(g), d(g)), mpq_class(n(g), d(g)));
}

}  // namespace

TEST(ExactNum, Add) {
    EXPECT_EQ(q(0, 1) + q(-1, 1), q(-1, 2));
    EXPECT_EQ(q(0, 0) + q(3, -7), q(3, -7));
    EXPECT_EQ(q(2, -1) + q(-1, 1), q(1, 0));
}

TEST(ExactNum, Mul) {
    EXPECT_EQ(q(0, 1) * q(0, 1), q(1, 1));
    EXPECT_EQ(q(1, 0) * q(5, -2), q(5, -2));
    EXPECT_EQ(q(-1, 1) * q(0, 1), q(1, 0));
}

TEST(ExactNum, Inverse) {
    EXPECT_EQ(q(0, 1).inverse(), q(-1, 1));
    EXPECT_EQ(q(1, 0).inverse(), q(1, 0));
    EXPECT_EQ(q(2, -1).inverse(), q(1, 1));
    EXPECT_THROW(q(0, 0).inverse(), DivisionByZero);
    EXPECT_THROW(q(1, 0) / q(0, 0), DivisionByZero);
}

TEST(ExactNum, Compare) {
    EXPECT_GT(q(2, -1), q(0, 0));
    EXPECT_GT(q(-1, 1), q(2, -1));
    EXPECT_EQ(value(q(-1, 1)) > value(q(2, -1)), true);
    QPhi x = q(7, -3);
    EXPECT_EQ(x <=> x, std::strong_ordering::equal);
    // Fibonacci ratios: 34 - 21 phi ~ 0.021, 55 - 34 phi ~ -0.013
    EXPECT_GT(q(34, -21), q(0, 0));
    EXPECT_LT(q(-34, 21), q(0, 0));
    EXPECT_LT(q(55, -34), q(0, 0));
}

TEST(ExactNum, CanonicalForm) {
    QPhi x(mpq_class(2, 4), mpq_class(-3, -9));
    EXPECT_EQ(x.a(), mpq_class(1, 2));
    EXPECT_EQ(x.b(), mpq_class(1, 3));
    EXPECT_GT(x.a().get_den(), 0);
}

TEST(ExactNum, StrAndParse) {
    EXPECT_EQ(q(1, 2).str(), "1+2*phi");
    EXPECT_EQ(QPhi(mpq_class(1, 2), mpq_class(-3, 4)).str(), "1/2+-3/4*phi");
    for (std::string s : {"1/2+-3/4*phi", "0+0*phi", "-5+1*phi", "7/3+2/9*phi"}) EXPECT_EQ(QPhi::parse(s).str(), s);
    EXPECT_EQ(QPhi::parse("3"), q(3, 0));
    EXPECT_EQ(QPhi::parse("-3/2"), QPhi(mpq_class(-3, 2), 0));
    EXPECT_EQ(QPhi::parse("phi"), q(0, 1));
    EXPECT_EQ(QPhi::parse("-phi"), q(0, -1));
    EXPECT_EQ(QPhi::parse("1-phi"), q(1, -1));
    EXPECT_EQ(QPhi::parse("2 - 1*phi"), q(2, -1));
    EXPECT_EQ(QPhi::parse("1/3*phi"), QPhi(0, mpq_class(1, 3)));
    EXPECT_THROW(QPhi::parse(""), ParseError);
    EXPECT_THROW(QPhi::parse("x+phi"), ParseError);
    EXPECT_THROW(QPhi::parse("phi+1"), ParseError);
    EXPECT_THROW(QPhi::parse("1/0"), ParseError);
}

TEST(ExactNum, FieldAxioms) {
    std::mt19937 g(11);
    for (int i = 0; i < 2000; ++i) {
        QPhi x = random_elem(g), y = random_elem(g), z = random_elem(g);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x - x, QPhi(0));
        if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), QPhi(1));
        EXPECT_EQ(x * x.conjugate(), QPhi(x.norm(), 0));
    }
}

TEST(ExactNum, OrderingAgreesWithHighPrecisionOracle) {
    std::mt19937 g(2024);
    std::vector<QPhi> xs;
    for (int i = 0; i < 10000; ++i) {
        // mix of generic values and values close to zero (Fibonacci-ratio cancellations)
        QPhi x = (i % 4 == 3) ? QPhi(mpq_class(std::uniform_int_distribution<long>(-987, 987)(g)),
                                     mpq_class(std::uniform_int_distribution<long>(-610, 610)(g)))
                              : random_elem(g, 1000, 97);
        Big v = value(x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        ASSERT_EQ(x.sign(), s) << x.str();
        xs.push_back(x);
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        bool lt = xs[i] < xs[i + 1];
        ASSERT_EQ(lt, value(xs[i]) < value(xs[i + 1])) << xs[i].str() << " vs " << xs[i + 1].str();
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) ASSERT_LE(value(xs[i]), value(xs[i + 1]));
}

TEST(ExactNum, FloorAndMod) {
    std::mt19937 g(5);
    QPhi steps[] = {QPhi(1), q(-1, 1)};
    for (int i = 0; i < 1000; ++i) {
        QPhi x = random_elem(g, 100, 13);
        mpz_class f = x.floor();
        Big v = value(x);
        EXPECT_LE(Big(f.get_str()), v);
        EXPECT_GT(Big(f.get_str()) + 1, v);
        for (auto& l : steps) {
            QPhi r = x.mod(l);
            EXPECT_GE(r, QPhi(0));
            EXPECT_LT(r, l);
            EXPECT_EQ(((x - r) / l).is_rational(), true);
            EXPECT_EQ(((x - r) / l).a().get_den(), 1);
        }
    }
    EXPECT_EQ(q(0, 1).floor(), 1);
    EXPECT_EQ(q(0, -1).floor(), -2);
    EXPECT_EQ(QPhi(3).floor(), 3);
}
