#include <gtest/gtest.h>

#include "calg/catalog.hpp"
#include "calg/constructions.hpp"
#include "calg/structure.hpp"
#include "gen.hpp"
#include "oracle/naive.hpp"

using namespace calg;

namespace {

AlgebraPresentation fx(const std::string &id)
{
	return builtin(id).presentation;
}

StructureClass cls(ClassKind k)
{
	return StructureClass::of(k);
}

} // namespace

TEST(Structure, LeibnizFixture)
{
	AlgebraPresentation f1 = fx("F1-leibniz");
	EXPECT_TRUE(check_structure(f1, cls(ClassKind::LeibnizColor)).passed());
	AxiomReport lie = check_structure(f1, cls(ClassKind::LieColor));
	ASSERT_FALSE(lie.passed());
	EXPECT_EQ(lie.failures.front().axiom, "eps-skew-symmetry");
	EXPECT_EQ(lie.failures.front().labels, (std::vector<std::string>{"e2", "e2"}));
	EXPECT_EQ(lie.failures.front().lhs, f1.basis(0));
	EXPECT_EQ(lie.failures.front().rhs, -f1.basis(0));
}

TEST(Structure, ZeroFixturePassesEveryClass)
{
	AlgebraPresentation f0 = fx("F0-zero");
	for (const auto &c : all_structure_classes())
		EXPECT_TRUE(check_structure(f0, c).passed()) << c.tag();
}

TEST(Structure, GroupFixtureIsNotEpsCommutative)
{
	AlgebraPresentation f2 = fx("F2-z3-group");
	EXPECT_TRUE(check_structure(f2, cls(ClassKind::Associative)).passed());
	AxiomReport r = check_structure(f2, cls(ClassKind::EpsCommutative));
	ASSERT_FALSE(r.passed());
	EXPECT_EQ(r.failures.front().labels, (std::vector<std::string>{"g1", "g1"}));
}

TEST(Structure, TupleCountsAreExhaustive)
{
	AlgebraPresentation f2 = fx("F2-z3-group");
	AxiomReport r = check_structure(f2, cls(ClassKind::Associative));
	EXPECT_EQ(r.tuples_checked, 27u);
	AlgebraPresentation t = apply_construction("ternary-from-leibniz", {fx("F1-leibniz"), {}, {}, {}, {}}).algebra;
	AxiomReport tl = check_structure(t, cls(ClassKind::TernaryLeibniz));
	EXPECT_EQ(tl.axiom("ternary-nambu")->tuples, 32u);
}

TEST(Structure, FailureCapKeepsVerdict)
{
	AlgebraPresentation f2 = fx("F2-z3-group");
	CheckOptions capped{1, 8};
	AxiomReport r = check_structure(f2, cls(ClassKind::EpsCommutative), capped);
	AxiomReport all = check_structure(f2, cls(ClassKind::EpsCommutative), {unlimited_failures, 8});
	EXPECT_EQ(r.failures.size(), 1u);
	EXPECT_EQ(r.failure_count(), all.failure_count());
	EXPECT_EQ(all.failures.size(), all.failure_count());
}

TEST(Structure, MissingSlotAndDimensionCap)
{
	EXPECT_THROW(check_structure(fx("F1-leibniz"), cls(ClassKind::Associative)), InputError);
	EXPECT_THROW(check_structure(fx("F1-leibniz"), cls(ClassKind::TernaryLeibniz)), InputError);
	AlgebraPresentation t = apply_construction("ternary-from-leibniz", {fx("F1-leibniz"), {}, {}, {}, {}}).algebra;
	EXPECT_THROW(check_structure(t, cls(ClassKind::TernaryLeibniz), {10, 1}), InputError);
}

TEST(Structure, TagsRoundTrip)
{
	for (const auto &c : all_structure_classes())
		if (c.kind != ClassKind::QTridendriform)
			EXPECT_EQ(StructureClass::parse(c.tag()), c);
	EXPECT_EQ(StructureClass::parse("q-tridendriform", -1), StructureClass::q_tridendriform(-1));
	EXPECT_EQ(StructureClass::parse("tridendriform"), StructureClass::q_tridendriform(1));
	EXPECT_EQ(StructureClass::q_tridendriform(-1).tag(), "q-tridendriform(q=-1)");
	EXPECT_THROW(StructureClass::parse("lie-colour"), InputError);
}

TEST(Structure, DialgebraTrivialMiddleAudit)
{
	AxiomReport r = dialgebra_trivial_middle_audit(fx("F4-dialgebra"));
	EXPECT_FALSE(r.passed());
	EXPECT_THROW(dialgebra_trivial_middle_audit(fx("F1-leibniz")), Error);
}

TEST(StructureProperty, WitnessesAreGenuine)
{
	gen::Rng rng(21);
	for (int n = 0; n < 30; ++n)
	{
		AlgebraPresentation a = gen::super_algebra(rng, Field::prime(5), 2 + n % 2);
		a.set_op(slot::mul, gen::op(rng, a, 2));
		a = oracle::saturate(a);
		for (const auto &c : all_structure_classes())
		{
			AxiomReport r = check_structure(a, c, {unlimited_failures, 8});
			EXPECT_EQ(r.failures.size(), r.failure_count());
			for (const auto &f : r.failures)
				EXPECT_NE(f.lhs, f.rhs) << c.tag() << " " << f.axiom;
		}
	}
}

TEST(StructureProperty, AgreesWithNaiveCheckerOnRandomAlgebras)
{
	gen::Rng rng(7);
	for (int n = 0; n < 25; ++n)
	{
		Field f = n % 2 ? Field::prime(5) : Field::rationals();
		AlgebraPresentation a = gen::super_algebra(rng, f, 2 + n % 2);
		a.set_op(slot::mul, gen::op(rng, a, 2, n % 3 ? 0.3 : 0.1));
		a.set_op(slot::ternary, gen::op(rng, a, 3, 0.2));
		a = oracle::saturate(a);
		for (const auto &c : all_structure_classes())
			for (const auto &d : oracle::disagreements(a, c))
				ADD_FAILURE() << "sample " << n << ": " << d;
	}
}

// Lie color implies Leibniz color; associative implies Lie-admissible.
TEST(StructureProperty, ClassImplications)
{
	gen::Rng rng(3);
	std::size_t lie = 0, assoc = 0;
	for (const auto &id : builtin_ids())
	{
		AlgebraPresentation a = oracle::saturate(fx(id));
		if (!validate_bicharacter(a.eps()).passed() || a.dim() > 3)
			continue;
		if (check_structure(a, cls(ClassKind::LieColor)).passed())
		{
			++lie;
			EXPECT_TRUE(check_structure(a, cls(ClassKind::LeibnizColor)).passed()) << id;
		}
		if (check_structure(a, cls(ClassKind::Associative)).passed())
		{
			++assoc;
			EXPECT_TRUE(check_structure(a, cls(ClassKind::LieAdmissible)).passed()) << id;
		}
	}
	for (int n = 0; n < 30; ++n)
	{
		// random products are rarely associative; the ones that are feed the commutator
		AlgebraPresentation a = gen::super_algebra(rng, Field::prime(7), 3);
		a.set_op(slot::mul, gen::op(rng, a, 2, 0.5));
		if (!check_structure(a, cls(ClassKind::Associative)).passed())
			continue;
		++assoc;
		AlgebraPresentation l = apply_construction("commutator-lie", {a, {}, {}, {}, {}}).algebra;
		EXPECT_TRUE(check_structure(l, cls(ClassKind::LieColor)).passed());
		EXPECT_TRUE(check_structure(l, cls(ClassKind::LeibnizColor)).passed());
	}
	EXPECT_GT(lie, 0u);
	EXPECT_GT(assoc, 0u);
}
