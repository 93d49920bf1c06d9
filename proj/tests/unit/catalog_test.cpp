#include <gtest/gtest.h>

#include "calg/catalog.hpp"
#include "calg/operators.hpp"
#include "calg/structure.hpp"

using namespace calg;

TEST(Catalog, CertificationsReverify)
{
	ASSERT_EQ(builtin_ids().size(), 7u);
	for (const auto &id : builtin_ids())
	{
		Fixture f = builtin(id);
		EXPECT_EQ(f.id, id);
		EXPECT_FALSE(f.certified.empty()) << id;
		for (const auto &c : f.certified)
			EXPECT_TRUE(check_structure(f.presentation, c).passed()) << id << " " << c.tag();
	}
	EXPECT_THROW(builtin("F9"), InputError);
}

TEST(Catalog, SampledOperators)
{
	AlgebraPresentation f1 = change_field(builtin("F1-leibniz").presentation, Field::prime(3));
	OperatorQuery rb{OperatorKind::RotaBaxter, slot::bracket, f1.field().zero(), 1'000'000};
	std::vector<LinearMap> s = random_operator_fixtures(0, f1, rb);
	ASSERT_FALSE(s.empty());
	EXPECT_EQ(s.front(), LinearMap::zero(f1.space(), f1.space(), f1.field()));

	AlgebraPresentation f2 = builtin("F2-z3-group").presentation;
	OperatorQuery avg{OperatorKind::Averaging, slot::mul, f2.field().zero(), 1'000'000};
	std::vector<LinearMap> a = random_operator_fixtures(0, f2, avg);
	EXPECT_NE(std::find(a.begin(), a.end(), LinearMap::identity(f2.space(), f2.field())), a.end());
}

TEST(CatalogProperty, SeedDeterminismAndReverification)
{
	AlgebraPresentation f5 = change_field(builtin("F5-upper-triangular").presentation, Field::prime(3));
	for (OperatorKind k : {OperatorKind::RotaBaxter, OperatorKind::Averaging, OperatorKind::Endomorphism})
		for (std::uint64_t seed : {0u, 1u, 42u, 9001u})
		{
			OperatorQuery q{k, slot::mul, f5.field().from_int(-1), 1'000'000};
			std::vector<LinearMap> a = random_operator_fixtures(seed, f5, q, 5);
			EXPECT_EQ(a, random_operator_fixtures(seed, f5, q, 5));
			for (const auto &m : a)
				EXPECT_TRUE(verify_operator(f5, q, m).passed());
		}
}

TEST(Catalog, AuditIsDeterministic)
{
	std::vector<AuditItem> a = run_audit(0), b = run_audit(0);
	ASSERT_EQ(a.size(), b.size());
	for (std::size_t i = 0; i < a.size(); ++i)
	{
		EXPECT_EQ(a[i].name, b[i].name);
		EXPECT_EQ(a[i].status, b[i].status);
		EXPECT_EQ(a[i].report, b[i].report);
		if (a[i].status != "pass")
			EXPECT_FALSE(a[i].report.failures.empty()) << a[i].name;
	}
}
