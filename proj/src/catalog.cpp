#include "calg/catalog.hpp"

#include <optional>
#include <random>

#include <fmt/format.h>

#include "calg/constructions.hpp"

namespace calg {

namespace {

GradedSpace trivial_space(std::vector<std::string> names)
{
	std::vector<Degree> degs(names.size(), Degree{});
	return GradedSpace(GradingGroup(std::vector<int>{}), std::move(names), std::move(degs));
}

AlgebraPresentation zero_fixture()
{
	Field q = Field::rationals();
	GradedSpace s = trivial_space({"e1", "e2"});
	AlgebraPresentation a(s, Bicharacter::trivial(s.group(), q));
	for (const auto &name : {slot::mul, slot::bracket, slot::left, slot::right, slot::middle})
		a.set_op(name, MultiOp::on(s, 2, q));
	a.set_op(slot::ternary, MultiOp::on(s, 3, q));
	return a;
}

AlgebraPresentation leibniz_fixture()
{
	Field q = Field::rationals();
	GradedSpace s = trivial_space({"e1", "e2"});
	AlgebraPresentation a(s, Bicharacter::trivial(s.group(), q));
	MultiOp b = MultiOp::on(s, 2, q);
	b.add({1, 1}, 0, q.one());
	a.set_op(slot::bracket, std::move(b));
	return a;
}

AlgebraPresentation group_fixture()
{
	Field f = Field::prime(7);
	GradingGroup g({3});
	GradedSpace s(g, {"g0", "g1", "g2"}, {Degree{{0}}, Degree{{1}}, Degree{{2}}});
	AlgebraPresentation a(s, Bicharacter(g, f, {{f.from_int(2)}}));
	MultiOp m = MultiOp::on(s, 2, f);
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
			m.add({i, j}, (i + j) % 3, f.one());
	a.set_op(slot::mul, std::move(m));
	return a;
}

AlgebraPresentation super_fixture()
{
	Field q = Field::rationals();
	GradingGroup g({2});
	GradedSpace s(g, {"e0", "e1"}, {Degree{{0}}, Degree{{1}}});
	AlgebraPresentation a(s, Bicharacter::super_sign(q));
	MultiOp m = MultiOp::on(s, 2, q);
	for (std::size_t i = 0; i < 2; ++i)
		for (std::size_t j = 0; i + j < 2; ++j)
			m.add({i, j}, i + j, q.one());
	a.set_op(slot::mul, std::move(m));
	return a;
}

AlgebraPresentation dialgebra_fixture()
{
	AlgebraPresentation f2 = group_fixture();
	f2.label = "F2-z3-group";
	LinearMap id = LinearMap::identity(f2.space(), f2.field());
	ConstructionOptions opt;
	opt.verify = false;
	return apply_construction("averaging-to-dialgebra", {f2, {}, id, {}, {}}, opt).algebra;
}

// Matrix units E_ij with E_ij E_kl = delta_jk E_il, restricted to `units`.
AlgebraPresentation matrix_units(GradedSpace s, const Bicharacter &eps,
                                 const std::vector<std::pair<int, int>> &units)
{
	AlgebraPresentation a(s, eps);
	Field f = eps.field();
	MultiOp m = MultiOp::on(s, 2, f);
	for (std::size_t p = 0; p < units.size(); ++p)
		for (std::size_t r = 0; r < units.size(); ++r)
			if (units[p].second == units[r].first)
				for (std::size_t o = 0; o < units.size(); ++o)
					if (units[o] == std::pair{units[p].first, units[r].second})
						m.add({p, r}, o, f.one());
	a.set_op(slot::mul, std::move(m));
	return a;
}

AlgebraPresentation upper_triangular_fixture()
{
	Field q = Field::rationals();
	GradedSpace s = trivial_space({"E11", "E12", "E22"});
	return matrix_units(s, Bicharacter::trivial(s.group(), q), {{1, 1}, {1, 2}, {2, 2}});
}

AlgebraPresentation super_matrix_fixture()
{
	Field q = Field::rationals();
	GradingGroup g({2});
	GradedSpace s(g, {"E11", "E12", "E21", "E22"}, {Degree{{0}}, Degree{{1}}, Degree{{1}}, Degree{{0}}});
	return matrix_units(s, Bicharacter::super_sign(q), {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

struct Spec
{
	std::string id;
	std::string description;
	AlgebraPresentation (*make)();
	std::vector<StructureClass> certified;
};

const std::vector<Spec> &specs()
{
	using K = ClassKind;
	static const std::vector<Spec> v = {
	    {"F0-zero", "dim 2 over Q, trivial grading, every operation slot zero", zero_fixture,
	     all_structure_classes()},
	    {"F1-leibniz", "dim 2 over Q, trivial grading, [e2,e2] = e1", leibniz_fixture,
	     {StructureClass::of(K::LeibnizColor)}},
	    {"F2-z3-group", "group algebra F7[Z3], eps(a,b) = 2^(ab)", group_fixture,
	     {StructureClass::of(K::Associative)}},
	    {"F3-super-sign", "dim 2 over Q graded by Z2 with the sign bicharacter, e_i.e_j = e_(i+j)", super_fixture,
	     {StructureClass::of(K::Associative), StructureClass::of(K::EpsCommutative)}},
	    {"F4-dialgebra", "averaging-to-dialgebra of F2-z3-group with alpha = Id", dialgebra_fixture,
	     {StructureClass::of(K::AssociativeDialgebra)}},
	    {"F5-upper-triangular", "upper triangular 2x2 matrices over Q, trivial grading", upper_triangular_fixture,
	     {StructureClass::of(K::Associative)}},
	    {"F6-super-matrix", "the superalgebra M(1|1) over Q", super_matrix_fixture,
	     {StructureClass::of(K::Associative)}},
	};
	return v;
}

} // namespace

const std::vector<std::string> &builtin_ids()
{
	static const std::vector<std::string> ids = [] {
		std::vector<std::string> v;
		for (const auto &s : specs())
			v.push_back(s.id);
		return v;
	}();
	return ids;
}

Fixture builtin(const std::string &id)
{
	for (const auto &s : specs())
	{
		if (s.id != id)
			continue;
		Fixture f{s.id, s.description, s.make(), s.certified};
		f.presentation.label = s.id;
		if (f.certified.size() == 1)
			f.presentation.declared_class = f.certified.front().tag();
		for (const auto &c : f.certified)
		{
			AxiomReport r = check_structure(f.presentation, c);
			if (!r.passed())
				throw Error(fmt::format("fixture {} fails its certificate {}:\n{}", id, c.tag(), r.str()));
		}
		return f;
	}
	throw InputError(fmt::format("unknown fixture \"{}\"", id));
}

std::vector<LinearMap> random_operator_fixtures(std::uint64_t seed, const AlgebraPresentation &base,
                                                const OperatorQuery &query, std::size_t sample)
{
	std::vector<LinearMap> all = search_operators(base, query);
	const LinearMap zero = LinearMap::zero(base.space(), base.space(), base.field());
	const LinearMap id = LinearMap::identity(base.space(), base.field());

	std::vector<LinearMap> out, rest;
	for (const auto &anchor : {zero, id})
		for (const auto &m : all)
			if (m == anchor && (out.empty() || !(out.front() == m)))
				out.push_back(m);
	for (const auto &m : all)
		if (!(m == zero) && !(m == id))
			rest.push_back(m);

	// partial Fisher-Yates on raw engine output so the draw is the same on every platform
	std::mt19937_64 rng(seed);
	std::size_t take = std::min(sample, rest.size());
	for (std::size_t k = 0; k < take; ++k)
	{
		std::size_t pick = k + static_cast<std::size_t>(rng() % (rest.size() - k));
		std::swap(rest[k], rest[pick]);
		out.push_back(rest[k]);
	}
	for (const auto &m : out)
		if (!verify_operator(base, query, m).passed())
			throw Error("sampled operator failed re-verification");
	return out;
}

namespace {

struct Auditor
{
	CheckOptions opt;
	std::vector<AuditItem> items;

	// Runs the construction when `input` satisfies `hypothesis`; the output is
	// returned only when it was built.
	std::optional<AlgebraPresentation> run(const std::string &name, const ConstructionInputs &in,
	                                       const StructureClass &hypothesis)
	{
		AuditItem item{name, in.algebra.label, "", {}, {}};
		AxiomReport hyp = check_structure(in.algebra, hypothesis, opt);
		if (!hyp.passed())
		{
			item.status = "hypothesis-failed";
			item.report = std::move(hyp);
			items.push_back(std::move(item));
			return std::nullopt;
		}
		try
		{
			ConstructionResult r = apply_construction(name, in, {true, opt});
			item.status = r.record.verified ? "pass" : "fail";
			item.report = *r.record.report;
			item.notes = r.record.notes;
			items.push_back(std::move(item));
			return r.algebra;
		}
		catch (const HypothesisError &e)
		{
			item.status = "hypothesis-failed";
			item.report = std::move(hyp);
			item.notes.push_back(e.what());
			items.push_back(std::move(item));
			return std::nullopt;
		}
	}
};

AlgebraPresentation quiet(const std::string &name, const AlgebraPresentation &a)
{
	ConstructionOptions o;
	o.verify = false;
	return apply_construction(name, {a, {}, {}, {}, {}}, o).algebra;
}

} // namespace

std::vector<AuditItem> run_audit(std::uint64_t seed, const CheckOptions &opt)
{
	using K = ClassKind;
	Auditor au{opt, {}};
	const StructureClass assoc = StructureClass::of(K::Associative);
	const StructureClass tri = StructureClass::q_tridendriform(1);

	for (const char *id : {"F2-z3-group", "F5-upper-triangular"})
	{
		AlgebraPresentation a = builtin(id).presentation;
		LinearMap r = LinearMap::identity(a.space(), a.field());
		auto t = au.run("rb-to-tridendriform", {a, {}, r, mpq_class(-1), {}}, assoc);
		if (t)
			au.run("tridendriform-sum", {*t, {}, {}, {}, {}}, tri);
	}

	{
		AlgebraPresentation a = change_field(builtin("F5-upper-triangular").presentation, Field::prime(3));
		a.label = "F5-upper-triangular/F3";
		OperatorQuery q{OperatorKind::RotaBaxter, slot::mul, a.field().zero(), 1'000'000};
		std::vector<LinearMap> ops = random_operator_fixtures(seed, a, q, 1);
		au.run("lie-from-rb-assoc-w0", {a, {}, ops.back(), mpq_class(0), {}}, assoc);
	}

	{
		AlgebraPresentation t = quiet("assoc-to-trialgebra", builtin("F5-upper-triangular").presentation);
		au.run("trialgebra-to-minus1-tridendriform", {t, {}, {}, {}, {}}, StructureClass::of(K::Trialgebra));
	}

	for (const char *id : {"F3-super-sign", "F5-upper-triangular"})
	{
		AlgebraPresentation l = quiet("lnp-from-assoc", builtin(id).presentation);
		au.run("lnp-tensor-leibniz-poisson", {l, {}, {}, {}, {}}, StructureClass::of(K::TernaryLNP));
	}

	{
		// a Lie color bracket with the zero product is post-Lie
		AlgebraPresentation p = quiet("commutator-lie", builtin("F6-super-matrix").presentation);
		p.set_op(slot::mul, MultiOp::on(p.space(), 2, p.field()));
		p.label += "+zero-product";
		LinearMap r = LinearMap::identity(p.space(), p.field());
		au.run("ls-from-rb-post-lie", {p, {}, r, mpq_class(-1), {}}, StructureClass::of(K::PostLie));
	}

	{
		AlgebraPresentation d = builtin("F4-dialgebra").presentation;
		AuditItem item{"dialgebra-trivial-middle-audit", d.label, "", dialgebra_trivial_middle_audit(d, opt), {}};
		item.status = item.report.passed() ? "pass" : "fail";
		au.items.push_back(std::move(item));
	}
	return au.items;
}

} // namespace calg
