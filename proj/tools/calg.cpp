// calg: load, validate and check color algebras stored as JSON structure constants.
//
// Exit codes: 0 pass, 1 mathematical failure (witness printed), 2 input or usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "calg/catalog.hpp"
#include "calg/constructions.hpp"
#include "calg/io.hpp"
#include "calg/operators.hpp"
#include "calg/representations.hpp"
#include "calg/structure.hpp"

using namespace calg;
using io::json;

namespace {

struct Globals
{
	bool json = false;
	std::size_t max_dim = 8;
	std::size_t failure_cap = default_failure_cap;
	std::uint64_t seed = 0;

	CheckOptions check() const { return {failure_cap, max_dim}; }
};

mpq_class parse_rational(const std::string &s)
{
	return Field::rationals().parse(s).rational();
}

void print_report(const Globals &g, const AxiomReport &r)
{
	if (g.json)
		std::cout << io::report_to_json(r).dump(2) << '\n';
	else
		std::cout << r.str();
}

int cmd_validate(const Globals &g, const std::string &path)
{
	AlgebraPresentation a = io::load_algebra(path);
	AxiomReport r = validate_bicharacter(a.eps(), g.failure_cap);
	if (!r.passed())
	{
		std::cerr << path << ": bicharacter axioms fail\n";
		print_report(g, r);
		return 2;
	}
	if (g.json)
	{
		print_report(g, r);
		return 0;
	}
	std::cout << fmt::format("{}: ok ({}, dim {}, {} ops)\n", path, a.field().name(), a.dim(), a.ops().size());
	return 0;
}

int cmd_check(const Globals &g, const std::string &path, const std::string &tag, const std::optional<std::string> &q)
{
	AlgebraPresentation a = io::load_algebra(path);
	StructureClass cls = StructureClass::parse(tag, q ? parse_rational(*q) : mpq_class(1));
	AxiomReport r = check_structure(a, cls, g.check());
	print_report(g, r);
	return r.passed() ? 0 : 1;
}

struct ConstructArgs
{
	std::string name, in, out;
	std::optional<std::string> in2, op, lambda, q;
	bool no_verify = false;
};

int cmd_construct(const Globals &g, const ConstructArgs &c)
{
	ConstructionInputs in{io::load_algebra(c.in), {}, {}, {}, {}};
	if (c.in2)
		in.second = io::load_algebra(*c.in2);
	if (c.op)
		in.op = io::load_matrix(*c.op, in.algebra);
	if (c.lambda)
		in.lambda = parse_rational(*c.lambda);
	if (c.q)
		in.q = parse_rational(*c.q);
	ConstructionOptions opt{!c.no_verify, g.check()};
	ConstructionResult r = apply_construction(c.name, in, opt);
	io::save_algebra(c.out, r.algebra, r.record);
	if (g.json)
		std::cout << io::record_to_json(r.record).dump(2) << '\n';
	else
	{
		std::cout << fmt::format("wrote {} ({}, dim {})\n", c.out, r.record.claimed_class.tag(), r.algebra.dim());
		for (const auto &n : r.record.notes)
			std::cout << "note: " << n << '\n';
		if (r.record.report)
			std::cout << r.record.report->str();
	}
	if (c.no_verify)
		return 0;
	return r.record.verified ? 0 : 1;
}

struct SearchArgs
{
	std::string kind, op = slot::mul, in;
	std::optional<std::string> weight;
	std::size_t budget = 1'000'000;
	std::optional<std::size_t> sample;
};

int cmd_search(const Globals &g, const SearchArgs &s)
{
	AlgebraPresentation a = io::load_algebra(s.in);
	OperatorQuery q{parse_operator_kind(s.kind), s.op, a.field().zero(), s.budget};
	if (s.weight)
		q.weight = a.field().parse(*s.weight);
	std::vector<LinearMap> found =
	    s.sample ? random_operator_fixtures(g.seed, a, q, *s.sample) : search_operators(a, q);
	json out = json::array();
	for (const auto &m : found)
		out.push_back(io::matrix_to_json(m));
	std::cout << out.dump(g.json ? 2 : -1) << '\n';
	return 0;
}

int cmd_catalog(const Globals &g)
{
	json out = json::array();
	for (const auto &id : builtin_ids())
	{
		Fixture f = builtin(id);
		json classes = json::array();
		for (const auto &c : f.certified)
			classes.push_back(c.tag());
		if (g.json)
			out.push_back(json{{"id", id},
			                   {"dim", f.presentation.dim()},
			                   {"field", f.presentation.field().name()},
			                   {"classes", classes},
			                   {"description", f.description}});
		else
		{
			std::string cs;
			for (const auto &c : classes)
				cs += (cs.empty() ? "" : ", ") + c.get<std::string>();
			std::cout << fmt::format("{:<22} dim {}  {:<4} {}\n{:<22} {}\n", id, f.presentation.dim(),
			                         f.presentation.field().name(), f.description, "", cs);
		}
	}
	if (g.json)
		std::cout << out.dump(2) << '\n';
	return 0;
}

int cmd_list_constructions(const Globals &g)
{
	json out = json::array();
	for (const auto &c : list_constructions())
	{
		if (g.json)
			out.push_back(json{{"name", c.name},
			                   {"hypotheses", c.hypotheses},
			                   {"produces", c.produces.tag()},
			                   {"operator", c.operator_kind},
			                   {"needs_second", c.needs_second},
			                   {"anchor", c.anchor}});
		else
		{
			std::string hyp;
			for (const auto &h : c.hypotheses)
				hyp += (hyp.empty() ? "" : ", ") + h;
			std::cout << fmt::format("{:<36} {} -> {}{}\n", c.name, hyp, c.produces.tag(),
			                         c.operator_kind.empty() ? "" : " [" + c.operator_kind + "]");
		}
	}
	if (g.json)
		std::cout << out.dump(2) << '\n';
	return 0;
}

int cmd_fixture(const std::string &id, const std::optional<std::string> &out)
{
	Fixture f = builtin(id);
	if (out)
		io::save_algebra(*out, f.presentation);
	else
		std::cout << io::algebra_to_json(f.presentation).dump(2) << '\n';
	return 0;
}

int cmd_audit(const Globals &g, const std::optional<std::string> &out)
{
	json j = io::audit_to_json(run_audit(g.seed, g.check()), g.seed);
	if (out)
		io::write_json(*out, j);
	else
		std::cout << j.dump(2) << '\n';
	return 0;
}

int cmd_check_module(const Globals &g, const std::string &path)
{
	ModulePresentation m = io::load_module(path);
	ModuleCheckOptions opt;
	opt.failure_cap = g.failure_cap;
	opt.max_dim = g.max_dim;
	AxiomReport r = check_module(m, opt);
	print_report(g, r);
	return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact checker for color algebra structure constants"};
	app.require_subcommand(1);
	app.fallthrough();
	Globals g;
	app.add_flag("--json", g.json, "Machine-readable output");
	app.add_option("--max-dim", g.max_dim, "Dimension cap for sweeps with four or more variables")
	    ->check(CLI::PositiveNumber);
	app.add_option("--failure-cap", g.failure_cap, "Witnesses kept per report (0 keeps all)");
	app.add_option("--seed", g.seed, "Seed for sampled fixtures");

	std::string path, tag, id;
	std::optional<std::string> q, out;

	auto *validate = app.add_subcommand("validate", "Parse a file and check the bicharacter");
	validate->add_option("file", path)->required();

	auto *check = app.add_subcommand("check", "Sweep the axioms of a structure class");
	check->add_option("file", path)->required();
	check->add_option("--class", tag)->required();
	check->add_option("--q", q, "Parameter of q-tridendriform");

	ConstructArgs ca;
	auto *construct = app.add_subcommand("construct", "Apply a registry construction");
	construct->add_option("--name", ca.name)->required();
	construct->add_option("--in", ca.in)->required();
	construct->add_option("--out", ca.out)->required();
	construct->add_option("--in2", ca.in2, "Second input (direct sums)");
	construct->add_option("--operator", ca.op, "Matrix file for R, alpha or theta");
	construct->add_option("--lambda", ca.lambda);
	construct->add_option("--q", ca.q);
	construct->add_flag("--no-verify", ca.no_verify);

	SearchArgs sa;
	auto *search = app.add_subcommand("search-operator", "Enumerate even operators over F_p");
	search->add_option("--kind", sa.kind)->required();
	search->add_option("--op", sa.op);
	search->add_option("--in", sa.in)->required();
	search->add_option("--weight", sa.weight);
	search->add_option("--budget", sa.budget);
	search->add_option("--sample", sa.sample, "Print anchors plus this many solutions drawn with --seed");

	auto *catalog = app.add_subcommand("catalog", "List builtin fixtures");
	auto *list = app.add_subcommand("list-constructions", "List registry constructions");

	auto *fixture = app.add_subcommand("fixture", "Write a builtin fixture as JSON");
	fixture->add_option("id", id)->required();
	fixture->add_option("--out", out);

	auto *audit = app.add_subcommand("audit", "Record verdicts of the audited constructions");
	audit->add_option("--out", out);

	auto *check_mod = app.add_subcommand("check-module", "Sweep the axioms of a module file");
	check_mod->add_option("file", path)->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		return app.exit(e) == 0 ? 0 : 2;
	}

	try
	{
		if (*validate)
			return cmd_validate(g, path);
		if (*check)
			return cmd_check(g, path, tag, q);
		if (*construct)
			return cmd_construct(g, ca);
		if (*search)
			return cmd_search(g, sa);
		if (*catalog)
			return cmd_catalog(g);
		if (*list)
			return cmd_list_constructions(g);
		if (*fixture)
			return cmd_fixture(id, out);
		if (*audit)
			return cmd_audit(g, out);
		if (*check_mod)
			return cmd_check_module(g, path);
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
	return 2;
}
