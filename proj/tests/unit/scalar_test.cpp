#include <gtest/gtest.h>

#include "calg/scalar.hpp"
#include "gen.hpp"

using namespace calg;

TEST(Scalar, RationalArithmetic)
{
	Field q = Field::rationals();
	EXPECT_EQ(q.parse("1/2") + q.parse("1/3"), q.parse("5/6"));
	EXPECT_EQ((q.parse("-4/6")).str(), "-2/3");
	EXPECT_EQ(q.parse("3/4").inverse(), q.parse("4/3"));
	EXPECT_EQ(q.from_int(2).pow(-3), q.parse("1/8"));
}

TEST(Scalar, PrimeFieldArithmetic)
{
	Field f = Field::prime(7);
	EXPECT_EQ(f.from_int(2) * f.from_int(4), f.one());
	EXPECT_EQ(f.from_int(3).inverse(), f.from_int(5));
	EXPECT_EQ(f.from_int(-1).residue(), 6u);
	// "1/2" is 2^-1 = 4 in F7
	EXPECT_EQ(f.parse("1/2"), f.from_int(4));
}

TEST(Scalar, InverseMatchesBruteForce)
{
	for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 101u})
	{
		Field f = Field::prime(p);
		for (std::uint64_t a = 1; a < p; ++a)
		{
			std::uint64_t expect = 0;
			for (std::uint64_t b = 1; b < p; ++b)
				if (a * b % p == 1)
					expect = b;
			EXPECT_EQ(f.from_int(a).inverse().residue(), expect) << "p=" << p << " a=" << a;
		}
	}
}

TEST(Scalar, RootOfUnityOrder)
{
	Field q = Field::rationals(), f7 = Field::prime(7);
	EXPECT_EQ(root_of_unity_order(q.from_int(-1)), 2u);
	EXPECT_EQ(root_of_unity_order(q.one()), 1u);
	EXPECT_EQ(root_of_unity_order(q.parse("1/2")), std::nullopt);
	EXPECT_EQ(root_of_unity_order(f7.from_int(2)), 3u);
	EXPECT_EQ(root_of_unity_order(f7.from_int(3)), 6u);
	EXPECT_THROW(root_of_unity_order(f7.zero()), ArithmeticError);
}

TEST(Scalar, Errors)
{
	EXPECT_THROW(Field::prime(9), InputError);
	EXPECT_THROW(Field::prime(2), InputError);
	Field f = Field::prime(5);
	EXPECT_THROW(f.zero().inverse(), ArithmeticError);
	EXPECT_THROW((void)(f.one() == Field::rationals().one()), ArithmeticError);
	EXPECT_THROW(Field::rationals().parse("1/0"), Error);
	EXPECT_THROW(Field::rationals().parse("x"), InputError);
}

TEST(ScalarProperty, FieldAxiomsOnRandomTriples)
{
	gen::Rng rng(11);
	for (Field f : {Field::rationals(), Field::prime(5), Field::prime(13)})
		for (int n = 0; n < 300; ++n)
		{
			Scalar a = gen::scalar(rng, f), b = gen::scalar(rng, f), c = gen::scalar(rng, f);
			EXPECT_EQ(a + b, b + a);
			EXPECT_EQ(a * b, b * a);
			EXPECT_EQ((a + b) + c, a + (b + c));
			EXPECT_EQ((a * b) * c, a * (b * c));
			EXPECT_EQ(a * (b + c), a * b + a * c);
			EXPECT_TRUE((a - a).is_zero());
			EXPECT_EQ(a + f.zero(), a);
			EXPECT_EQ(a * f.one(), a);
			if (!a.is_zero())
			{
				EXPECT_TRUE((a * a.inverse()).is_one());
				EXPECT_EQ(b / a * a, b);
			}
			EXPECT_EQ(a.canonical(), a);
			EXPECT_EQ(a.canonical().canonical().str(), a.canonical().str());
			EXPECT_EQ(f.parse(a.str()), a);
		}
}
