#include "calg/operators.hpp"

#include <fmt/format.h>

#include "context.hpp"

namespace calg {

namespace {

using detail::Context;
using Tuple = std::span<const std::size_t>;

void check_endomorphism(const AlgebraPresentation &a, const LinearMap &m, const char *what)
{
	if (!(m.domain() == a.space()) || !(m.codomain() == a.space()))
		throw InputError(fmt::format("{} must be an endomorphism of the algebra's space", what));
	if (!(m.field() == a.field()))
		throw InputError(fmt::format("{} is over a different field", what));
}

// Rational weights are accepted for F_p algebras and reduced.
Scalar in_field(const Field &f, const Scalar &s)
{
	if (s.field() == f)
		return s;
	if (s.field().is_prime())
		throw InputError("weight is over a different prime field");
	return f.from_fraction(s.rational());
}

const MultiOp &binary(const AlgebraPresentation &a, const std::string &name)
{
	const MultiOp &op = a.op(name);
	if (op.arity() != 2)
		throw InputError(fmt::format("operation \"{}\" has arity {}, expected 2", name, op.arity()));
	return op;
}

std::vector<Identity> rota_baxter_ids(const Context &c, const MultiOp &m, const LinearMap &r, const Scalar &w)
{
	return {{"rota-baxter", {0, 0}, [&c, &m, &r, w](Tuple t) {
		         const Vector &x = c.e[t[0]], &y = c.e[t[1]];
		         const Vector &rx = r.image(t[0]), &ry = r.image(t[1]);
		         Vector inner = m(rx, y) + m(x, ry);
		         inner.add_scaled(w, m(x, y));
		         return Sides{m(rx, ry), r(inner)};
	         }}};
}

std::vector<Identity> averaging_ids(const Context &c, const MultiOp &m, const LinearMap &al)
{
	return {{"averaging-left", {0, 0}, [&c, &m, &al](Tuple t) {
		         const Vector &ax = al.image(t[0]), &ay = al.image(t[1]);
		         return Sides{al(m(ax, c.e[t[1]])), m(ax, ay)};
	         }},
	        {"averaging-right", {0, 0}, [&c, &m, &al](Tuple t) {
		         const Vector &ax = al.image(t[0]), &ay = al.image(t[1]);
		         return Sides{al(m(c.e[t[0]], ay)), m(ax, ay)};
	         }}};
}

std::vector<Identity> theta_ids(const Context &c, const MultiOp &m, const LinearMap &th)
{
	return {{"involution", {0}, [&c, &th](Tuple t) { return Sides{th(th.image(t[0])), c.e[t[0]]}; }},
	        {"anti-morphism", {0, 0}, [&c, &m, &th](Tuple t) {
		         const Vector &x = c.e[t[0]], &y = c.e[t[1]];
		         return Sides{th(m(x, y)), c.eps(c.deg(t[0]), c.deg(t[1])) * m(th.image(t[1]), th.image(t[0]))};
	         }}};
}

std::vector<Identity> morphism_ids(const AlgebraPresentation &a, const AlgebraPresentation &b, const LinearMap &f)
{
	std::vector<Identity> ids;
	for (const auto &[name, opa] : a.ops())
	{
		if (!b.has_op(name))
			throw InputError(fmt::format("target algebra has no operation \"{}\"", name));
		const MultiOp &opb = b.op(name);
		if (opb.arity() != opa.arity())
			throw InputError(fmt::format("operation \"{}\" has arity {} in the source and {} in the target", name,
			                             opa.arity(), opb.arity()));
		ids.push_back({"morphism-" + name, std::vector<std::size_t>(opa.arity(), 0),
		               [&opa, &opb, &f](Tuple t) {
			               std::vector<const Vector *> images;
			               for (std::size_t i : t)
				               images.push_back(&f.image(i));
			               return Sides{f(opa.eval(t)), opb.apply(images)};
		               }});
	}
	return ids;
}

std::vector<Identity> query_ids(const Context &c, const OperatorQuery &q, const LinearMap &map)
{
	switch (q.kind)
	{
	case OperatorKind::RotaBaxter:
		return rota_baxter_ids(c, binary(c.a, q.op), map, in_field(c.a.field(), q.weight));
	case OperatorKind::Averaging:
		return averaging_ids(c, binary(c.a, q.op), map);
	case OperatorKind::ThetaInvolution:
		return theta_ids(c, binary(c.a, "mul"), map);
	case OperatorKind::Endomorphism:
		return morphism_ids(c.a, c.a, map);
	}
	throw Error("unknown operator kind");
}

} // namespace

AxiomReport is_rota_baxter(const AlgebraPresentation &a, const std::string &op, const LinearMap &r,
                           const Scalar &weight, std::size_t failure_cap)
{
	check_endomorphism(a, r, "Rota-Baxter operator");
	Scalar w = in_field(a.field(), weight);
	Context c(a);
	return run_sweep("rota-baxter(weight=" + w.str() + ")", {a.space().names()}, rota_baxter_ids(c, binary(a, op), r, w),
	                 failure_cap);
}

AxiomReport is_averaging(const AlgebraPresentation &a, const std::string &op, const LinearMap &alpha,
                         std::size_t failure_cap)
{
	check_endomorphism(a, alpha, "averaging operator");
	Context c(a);
	return run_sweep("averaging", {a.space().names()}, averaging_ids(c, binary(a, op), alpha), failure_cap);
}

AxiomReport is_theta_involution(const AlgebraPresentation &a, const LinearMap &theta, std::size_t failure_cap)
{
	check_endomorphism(a, theta, "involution");
	Context c(a);
	return run_sweep("theta-involution", {a.space().names()}, theta_ids(c, binary(a, "mul"), theta), failure_cap);
}

AxiomReport is_morphism(const LinearMap &f, const AlgebraPresentation &a, const AlgebraPresentation &b,
                        std::size_t failure_cap)
{
	if (!(f.domain() == a.space()) || !(f.codomain() == b.space()))
		throw InputError("morphism must map the source space to the target space");
	if (!(a.field() == b.field()) || !(a.eps() == b.eps()))
		throw InputError("morphism requires a shared field and bicharacter");
	return run_sweep("morphism", {a.space().names()}, morphism_ids(a, b, f), failure_cap);
}

std::string operator_kind_tag(OperatorKind k)
{
	switch (k)
	{
	case OperatorKind::RotaBaxter:
		return "rota-baxter";
	case OperatorKind::Averaging:
		return "averaging";
	case OperatorKind::ThetaInvolution:
		return "theta-involution";
	case OperatorKind::Endomorphism:
		return "endomorphism";
	}
	return "?";
}

OperatorKind parse_operator_kind(const std::string &tag)
{
	for (auto k : {OperatorKind::RotaBaxter, OperatorKind::Averaging, OperatorKind::ThetaInvolution,
	               OperatorKind::Endomorphism})
		if (operator_kind_tag(k) == tag)
			return k;
	throw InputError(fmt::format("unknown operator kind \"{}\"", tag));
}

AxiomReport verify_operator(const AlgebraPresentation &a, const OperatorQuery &q, const LinearMap &map,
                            std::size_t failure_cap)
{
	switch (q.kind)
	{
	case OperatorKind::RotaBaxter:
		return is_rota_baxter(a, q.op, map, q.weight, failure_cap);
	case OperatorKind::Averaging:
		return is_averaging(a, q.op, map, failure_cap);
	case OperatorKind::ThetaInvolution:
		return is_theta_involution(a, map, failure_cap);
	case OperatorKind::Endomorphism:
		return is_morphism(map, a, a, failure_cap);
	}
	throw Error("unknown operator kind");
}

std::vector<LinearMap> search_operators(const AlgebraPresentation &a, const OperatorQuery &q)
{
	const Field &field = a.field();
	if (!field.is_prime())
		throw InputError("operator search needs a prime field");
	const std::size_t d = a.dim();

	// evenness pre-filter: only entries linking equal degrees are free
	std::vector<std::pair<std::size_t, std::size_t>> free;
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
			if (a.space().degree_index(i) == a.space().degree_index(j))
				free.emplace_back(i, j);
	const std::uint64_t p = field.modulus();
	std::uint64_t count = 1;
	for (std::size_t k = 0; k < free.size(); ++k)
	{
		if (count > q.budget / p)
			throw BudgetError(fmt::format("search space {}^{} exceeds the budget of {} candidates", p, free.size(),
			                              q.budget));
		count *= p;
	}

	std::vector<Scalar> residues;
	for (std::uint64_t r = 0; r < p; ++r)
		residues.push_back(field.from_int(static_cast<std::int64_t>(r)));

	Context c(a);
	std::vector<LinearMap> found;
	std::vector<std::uint64_t> digits(free.size(), 0);
	for (std::uint64_t n = 0; n < count; ++n)
	{
		std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d, field.zero()));
		for (std::size_t k = 0; k < free.size(); ++k)
			m[free[k].first][free[k].second] = residues[digits[k]];
		LinearMap map(a.space(), a.space(), field, std::move(m));
		if (identities_hold({d}, query_ids(c, q, map)))
			found.push_back(std::move(map));
		// last free entry fastest, so matrices come out in lexicographic order
		for (std::size_t k = free.size(); k > 0; --k)
		{
			if (++digits[k - 1] < p)
				break;
			digits[k - 1] = 0;
		}
	}
	return found;
}

} // namespace calg
