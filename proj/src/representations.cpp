#include "calg/representations.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "calg/constructions.hpp"
#include "calg/operators.hpp"

namespace calg {

namespace {

using Tuple = std::span<const std::size_t>;

// A/M slot pattern of a signature, e.g. "AMA->M" -> "AMA"
std::string pattern(const std::string &sig)
{
	if (sig.size() < 4 || sig.substr(sig.size() - 3) != "->M")
		throw InputError(fmt::format("malformed action signature \"{}\"", sig));
	return sig.substr(0, sig.size() - 3);
}

struct ModContext
{
	explicit ModContext(const ModulePresentation &m)
	    : mod(m), a(m.algebra()), group(a.space().group()), eps(a.eps())
	{
		for (std::size_t i = 0; i < a.dim(); ++i)
			ea.push_back(a.basis(i));
		for (std::size_t i = 0; i < m.carrier().dim(); ++i)
			em.push_back(Vector::basis(a.field(), m.carrier().dim(), i));
	}

	std::size_t ga(std::size_t i) const { return a.space().degree_index(i); }
	std::size_t gm(std::size_t i) const { return mod.carrier().degree_index(i); }
	std::size_t sum(std::size_t g, std::size_t h) const { return group.add_index(g, h); }
	const Scalar &e(std::size_t g, std::size_t h) const { return eps.by_index(g, h); }

	const ModulePresentation &mod;
	const AlgebraPresentation &a;
	const GradingGroup &group;
	const Bicharacter &eps;
	std::vector<Vector> ea, em;
};

constexpr std::size_t A = 0, M = 1;

void bimodule_ids(std::vector<Identity> &ids, const ModContext &c, const MultiOp &mul, const MultiOp &l,
                  const MultiOp &r)
{
	// l: x > m (AM), r: m < x (MA)
	ids.push_back({"mha3", {A, A, M}, [&c, &mul, &l](Tuple t) {
		               const Vector &x = c.ea[t[0]], &y = c.ea[t[1]], &m = c.em[t[2]];
		               return Sides{l(x, l(y, m)), l(mul(x, y), m)};
	               }});
	ids.push_back({"mha4", {M, A, A}, [&c, &mul, &r](Tuple t) {
		               const Vector &m = c.em[t[0]], &x = c.ea[t[1]], &y = c.ea[t[2]];
		               return Sides{r(r(m, x), y), r(m, mul(x, y))};
	               }});
	ids.push_back({"mha5", {A, M, A}, [&c, &l, &r](Tuple t) {
		               const Vector &x = c.ea[t[0]], &m = c.em[t[1]], &y = c.ea[t[2]];
		               return Sides{l(x, r(m, y)), r(l(x, m), y)};
	               }});
}

void leibniz_module_ids(std::vector<Identity> &ids, const ModContext &c, const MultiOp &br, const MultiOp &l,
                        const MultiOp &r)
{
	// l: x * m (AM), r: m *' x (MA)
	ids.push_back({"lm11", {A, A, M}, [&c, &br, &l, &r](Tuple t) {
		               const Vector &x = c.ea[t[0]], &y = c.ea[t[1]], &m = c.em[t[2]];
		               Vector rhs = l(x, l(y, m));
		               rhs.add_scaled(c.e(c.ga(t[1]), c.gm(t[2])), r(l(x, m), y));
		               return Sides{l(br(x, y), m), std::move(rhs)};
	               }});
	ids.push_back({"lm22", {M, A, A}, [&c, &br, &r](Tuple t) {
		               const Vector &m = c.em[t[0]], &x = c.ea[t[1]], &y = c.ea[t[2]];
		               Vector rhs = r(m, br(x, y));
		               rhs.add_scaled(c.e(c.ga(t[1]), c.ga(t[2])), r(r(m, y), x));
		               return Sides{r(r(m, x), y), std::move(rhs)};
	               }});
	ids.push_back({"lm33", {A, M, A}, [&c, &br, &l, &r](Tuple t) {
		               const Vector &x = c.ea[t[0]], &m = c.em[t[1]], &y = c.ea[t[2]];
		               Vector rhs = l(x, r(m, y));
		               rhs.add_scaled(c.e(c.gm(t[1]), c.ga(t[2])), l(br(x, y), m));
		               return Sides{r(l(x, m), y), std::move(rhs)};
	               }});
}

void ternary_module_ids(std::vector<Identity> &ids, const ModContext &c, const MultiOp &T, const MultiOp &maa,
                        const MultiOp &ama, const MultiOp &aam)
{
	ids.push_back({"lpc3a1", {M, A, A, A, A}, [&](Tuple t) {
		               const Vector &m = c.em[t[0]], &x = c.ea[t[1]], &y = c.ea[t[2]], &z = c.ea[t[3]], &s = c.ea[t[4]];
		               std::size_t gx = c.ga(t[1]), gy = c.ga(t[2]), gzt = c.sum(c.ga(t[3]), c.ga(t[4]));
		               Vector rhs = maa(m, x, T(y, z, s));
		               rhs.add_scaled(c.e(gy, gzt), maa(m, T(x, z, s), y));
		               rhs.add_scaled(c.e(c.sum(gx, gy), gzt), maa(maa(m, z, s), x, y));
		               return Sides{maa(maa(m, x, y), z, s), std::move(rhs)};
	               }});
	ids.push_back({"lpc3a2", {A, M, A, A, A}, [&](Tuple t) {
		               const Vector &x = c.ea[t[0]], &m = c.em[t[1]], &y = c.ea[t[2]], &z = c.ea[t[3]], &s = c.ea[t[4]];
		               std::size_t gm = c.gm(t[1]), gy = c.ga(t[2]), gzt = c.sum(c.ga(t[3]), c.ga(t[4]));
		               Vector rhs = ama(x, m, T(y, z, s));
		               rhs.add_scaled(c.e(gy, gzt), ama(x, maa(m, z, s), y));
		               rhs.add_scaled(c.e(c.sum(gm, gy), gzt), ama(T(x, z, s), m, y));
		               return Sides{maa(ama(x, m, y), z, s), std::move(rhs)};
	               }});
	ids.push_back({"lpc3a3", {A, A, M, A, A}, [&](Tuple t) {
		               const Vector &x = c.ea[t[0]], &y = c.ea[t[1]], &m = c.em[t[2]], &z = c.ea[t[3]], &s = c.ea[t[4]];
		               std::size_t gy = c.ga(t[1]), gm = c.gm(t[2]), gzt = c.sum(c.ga(t[3]), c.ga(t[4]));
		               Vector rhs = aam(x, y, maa(m, z, s));
		               rhs.add_scaled(c.e(gm, gzt), aam(x, T(y, z, s), m));
		               rhs.add_scaled(c.e(c.sum(gy, gm), gzt), aam(T(x, z, s), y, m));
		               return Sides{maa(aam(x, y, m), z, s), std::move(rhs)};
	               }});
	ids.push_back({"lpc3a4", {A, A, A, M, A}, [&](Tuple t) {
		               const Vector &x = c.ea[t[0]], &y = c.ea[t[1]], &z = c.ea[t[2]], &m = c.em[t[3]], &s = c.ea[t[4]];
		               std::size_t gy = c.ga(t[1]), gz = c.ga(t[2]), gmt = c.sum(c.gm(t[3]), c.ga(t[4]));
		               Vector rhs = aam(x, y, ama(z, m, s));
		               rhs.add_scaled(c.e(gz, gmt), ama(x, ama(y, m, s), z));
		               rhs.add_scaled(c.e(c.sum(gy, gz), gmt), maa(ama(x, m, s), y, z));
		               return Sides{ama(T(x, y, z), m, s), std::move(rhs)};
	               }});
	ids.push_back({"lpc3a5", {A, A, A, A, M}, [&](Tuple t) {
		               const Vector &x = c.ea[t[0]], &y = c.ea[t[1]], &z = c.ea[t[2]], &s = c.ea[t[3]], &m = c.em[t[4]];
		               std::size_t gy = c.ga(t[1]), gz = c.ga(t[2]), gtm = c.sum(c.ga(t[3]), c.gm(t[4]));
		               Vector rhs = aam(x, y, aam(z, s, m));
		               rhs.add_scaled(c.e(gz, gtm), ama(x, aam(y, s, m), z));
		               rhs.add_scaled(c.e(c.sum(gy, gz), gtm), maa(aam(x, s, m), y, z));
		               return Sides{aam(T(x, y, z), s, m), std::move(rhs)};
	               }});
}

void lnp_compat_ids(std::vector<Identity> &ids, const ModContext &c, const MultiOp &mul, const MultiOp &T,
                    const MultiOp &am, const MultiOp &ma, const MultiOp &maa, const MultiOp &ama, const MultiOp &aam)
{
	ids.push_back({"lnp-compat-1", {M, A, A, A}, [&](Tuple t) {
		               const Vector &m = c.em[t[0]], &x = c.ea[t[1]], &y = c.ea[t[2]], &z = c.ea[t[3]];
		               Vector rhs = ma(m, T(x, y, z));
		               rhs.add_scaled(c.e(c.ga(t[1]), c.sum(c.ga(t[2]), c.ga(t[3]))), ma(maa(m, y, z), x));
		               return Sides{maa(ma(m, x), y, z), std::move(rhs)};
	               }});
	ids.push_back({"lnp-compat-2", {A, M, A, A}, [&](Tuple t) {
		               const Vector &x = c.ea[t[0]], &m = c.em[t[1]], &y = c.ea[t[2]], &z = c.ea[t[3]];
		               Vector rhs = am(x, maa(m, y, z));
		               rhs.add_scaled(c.e(c.gm(t[1]), c.sum(c.ga(t[2]), c.ga(t[3]))), am(T(x, y, z), m));
		               return Sides{maa(am(x, m), y, z), std::move(rhs)};
	               }});
	ids.push_back({"lnp-compat-3", {A, A, M, A}, [&](Tuple t) {
		               const Vector &x = c.ea[t[0]], &y = c.ea[t[1]], &m = c.em[t[2]], &z = c.ea[t[3]];
		               Vector rhs = am(x, ama(y, m, z));
		               rhs.add_scaled(c.e(c.ga(t[1]), c.sum(c.gm(t[2]), c.ga(t[3]))), ma(ama(x, m, z), y));
		               return Sides{ama(mul(x, y), m, z), std::move(rhs)};
	               }});
	ids.push_back({"lnp-compat-4", {A, A, A, M}, [&](Tuple t) {
		               const Vector &x = c.ea[t[0]], &y = c.ea[t[1]], &z = c.ea[t[2]], &m = c.em[t[3]];
		               Vector rhs = am(x, aam(y, z, m));
		               rhs.add_scaled(c.e(c.ga(t[1]), c.sum(c.ga(t[2]), c.gm(t[3]))), ma(aam(x, z, m), y));
		               return Sides{aam(mul(x, y), z, m), std::move(rhs)};
	               }});
}

std::size_t max_variables(ModuleKind k)
{
	return (k == ModuleKind::AssocBimodule || k == ModuleKind::LeibnizModule) ? 3 : 5;
}

} // namespace

std::string module_kind_tag(ModuleKind k)
{
	switch (k)
	{
	case ModuleKind::AssocBimodule:
		return "assoc-bimodule";
	case ModuleKind::LeibnizModule:
		return "leibniz-module";
	case ModuleKind::TernaryLeibnizModule:
		return "ternary-leibniz-module";
	case ModuleKind::TernaryLNPModule:
		return "ternary-lnp-module";
	}
	return "?";
}

ModuleKind parse_module_kind(const std::string &tag)
{
	for (auto k : {ModuleKind::AssocBimodule, ModuleKind::LeibnizModule, ModuleKind::TernaryLeibnizModule,
	               ModuleKind::TernaryLNPModule})
		if (module_kind_tag(k) == tag)
			return k;
	throw InputError(fmt::format("unknown module kind \"{}\"", tag));
}

std::vector<std::string> module_signatures(ModuleKind k)
{
	switch (k)
	{
	case ModuleKind::AssocBimodule:
	case ModuleKind::LeibnizModule:
		return {action::am, action::ma};
	case ModuleKind::TernaryLeibnizModule:
		return {action::maa, action::ama, action::aam};
	case ModuleKind::TernaryLNPModule:
		return {action::am, action::ma, action::maa, action::ama, action::aam};
	}
	return {};
}

StructureClass module_algebra_class(ModuleKind k)
{
	switch (k)
	{
	case ModuleKind::AssocBimodule:
		return StructureClass::of(ClassKind::Associative);
	case ModuleKind::LeibnizModule:
		return StructureClass::of(ClassKind::LeibnizColor);
	case ModuleKind::TernaryLeibnizModule:
		return StructureClass::of(ClassKind::TernaryLeibniz);
	case ModuleKind::TernaryLNPModule:
		return StructureClass::of(ClassKind::TernaryLNP);
	}
	throw Error("unknown module kind");
}

ModulePresentation::ModulePresentation(AlgebraPresentation algebra, GradedSpace carrier, ModuleKind kind)
    : algebra_(std::move(algebra)), carrier_(std::move(carrier)), kind_(kind)
{
	if (!(carrier_.group() == algebra_.space().group()))
		throw InputError("module carrier and algebra use different grading groups");
}

void ModulePresentation::set_action(const std::string &signature, MultiOp op)
{
	auto sigs = module_signatures(kind_);
	if (std::find(sigs.begin(), sigs.end(), signature) == sigs.end())
		throw InputError(fmt::format("action \"{}\" is not part of a {}", signature, module_kind_tag(kind_)));
	std::string p = pattern(signature);
	if (op.arity() != p.size())
		throw InputError(fmt::format("action \"{}\" needs arity {}, found {}", signature, p.size(), op.arity()));
	for (std::size_t k = 0; k < p.size(); ++k)
	{
		const GradedSpace &want = p[k] == 'A' ? algebra_.space() : carrier_;
		if (!(op.inputs()[k] == want))
			throw InputError(fmt::format("action \"{}\": slot {} is not the {} space", signature, k + 1,
			                             p[k] == 'A' ? "algebra" : "module"));
	}
	if (!(op.output() == carrier_))
		throw InputError(fmt::format("action \"{}\" must land in the module", signature));
	if (!(op.field() == algebra_.field()))
		throw InputError(fmt::format("action \"{}\" is over a different field", signature));
	actions_.insert_or_assign(signature, std::move(op));
}

const MultiOp &ModulePresentation::action(const std::string &signature) const
{
	auto it = actions_.find(signature);
	if (it == actions_.end())
		throw InputError(fmt::format("module has no action \"{}\"", signature));
	return it->second;
}

ModulePresentation zero_module(const AlgebraPresentation &a, const GradedSpace &carrier, ModuleKind kind)
{
	ModulePresentation m(a, carrier, kind);
	for (const auto &sig : module_signatures(kind))
	{
		std::vector<GradedSpace> slots;
		for (char ch : pattern(sig))
			slots.push_back(ch == 'A' ? a.space() : carrier);
		m.set_action(sig, MultiOp(slots, carrier, a.field()));
	}
	return m;
}

namespace {

ModulePresentation self_module(const AlgebraPresentation &a, const std::string &op, ModuleKind kind)
{
	const MultiOp &m = a.op(op);
	ModulePresentation out(a, a.space(), kind);
	out.set_action(action::am, m);
	out.set_action(action::ma, m);
	out.label = fmt::format("{}({})", kind == ModuleKind::AssocBimodule ? "regular" : "adjoint", a.label);
	return out;
}

} // namespace

ModulePresentation regular_bimodule(const AlgebraPresentation &a)
{
	return self_module(a, slot::mul, ModuleKind::AssocBimodule);
}

ModulePresentation adjoint_leibniz_module(const AlgebraPresentation &l)
{
	return self_module(l, slot::bracket, ModuleKind::LeibnizModule);
}

AxiomReport check_module(const ModulePresentation &m, const ModuleCheckOptions &opt)
{
	const AlgebraPresentation &a = m.algebra();
	StructureClass cls = module_algebra_class(m.kind());
	if (opt.check_algebra)
	{
		AxiomReport ar = check_structure(a, cls, {opt.failure_cap, opt.max_dim});
		if (!ar.passed())
			throw HypothesisError(fmt::format("underlying algebra is not {}:\n{}", cls.tag(), ar.str()));
	}
	for (const auto &sig : module_signatures(m.kind()))
		m.action(sig);
	if (max_variables(m.kind()) >= 4 && std::max(a.dim(), m.carrier().dim()) > opt.max_dim)
		throw InputError(fmt::format("dimension exceeds the cap {} for {} sweeps", opt.max_dim, module_kind_tag(m.kind())));

	ModContext c(m);
	std::vector<Identity> ids;
	switch (m.kind())
	{
	case ModuleKind::AssocBimodule:
		bimodule_ids(ids, c, a.op(slot::mul), m.action(action::am), m.action(action::ma));
		break;
	case ModuleKind::LeibnizModule:
		leibniz_module_ids(ids, c, a.op(slot::bracket), m.action(action::am), m.action(action::ma));
		break;
	case ModuleKind::TernaryLeibnizModule:
		ternary_module_ids(ids, c, a.op(slot::ternary), m.action(action::maa), m.action(action::ama),
		                   m.action(action::aam));
		break;
	case ModuleKind::TernaryLNPModule:
		bimodule_ids(ids, c, a.op(slot::mul), m.action(action::am), m.action(action::ma));
		ternary_module_ids(ids, c, a.op(slot::ternary), m.action(action::maa), m.action(action::ama),
		                   m.action(action::aam));
		lnp_compat_ids(ids, c, a.op(slot::mul), a.op(slot::ternary), m.action(action::am), m.action(action::ma),
		               m.action(action::maa), m.action(action::ama), m.action(action::aam));
		break;
	}
	return run_sweep(module_kind_tag(m.kind()), {a.space().names(), m.carrier().names()}, ids, opt.failure_cap);
}

ModuleResult leibniz_module_to_ternary(const ModulePresentation &m, const ModuleCheckOptions &opt)
{
	if (m.kind() != ModuleKind::LeibnizModule)
		throw InputError("leibniz_module_to_ternary needs a Leibniz module");
	AxiomReport pre = check_module(m, opt);
	if (!pre.passed())
		throw HypothesisError("input is not a Leibniz module:\n" + pre.str());

	const AlgebraPresentation &l = m.algebra();
	ConstructionOptions copt;
	copt.verify = false;
	AlgebraPresentation t = apply_construction("ternary-from-leibniz", {l, {}, {}, {}, {}}, copt).algebra;

	const MultiOp &br = l.op(slot::bracket), &am = m.action(action::am), &ma = m.action(action::ma);
	const GradedSpace &A = l.space(), &M = m.carrier();
	const Field &f = l.field();
	auto ea = [&](std::size_t i) { return l.basis(i); };
	auto em = [&](std::size_t i) { return Vector::basis(f, M.dim(), i); };

	ModulePresentation out(t, M, ModuleKind::TernaryLeibnizModule);
	out.set_action(action::aam, MultiOp::tabulate({A, A, M}, M, f, [&](Tuple x) {
		               return am(ea(x[0]), am.eval({x[1], x[2]}));
	               }));
	out.set_action(action::ama, MultiOp::tabulate({A, M, A}, M, f, [&](Tuple x) {
		               return am(ea(x[0]), ma.eval({x[1], x[2]}));
	               }));
	out.set_action(action::maa, MultiOp::tabulate({M, A, A}, M, f, [&](Tuple x) {
		               return ma(em(x[0]), br.eval({x[1], x[2]}));
	               }));
	out.label = fmt::format("ternary({})", m.label);
	AxiomReport report = check_module(out, opt);
	return {std::move(out), std::move(report)};
}

ModuleResult module_via_morphism(const LinearMap &f, const AlgebraPresentation &l, const AlgebraPresentation &l2,
                                 const ModuleCheckOptions &opt)
{
	StructureClass lnp = StructureClass::of(ClassKind::TernaryLNP);
	CheckOptions copt{opt.failure_cap, opt.max_dim};
	for (const auto *alg : {&l, &l2})
	{
		AxiomReport r = check_structure(*alg, lnp, copt);
		if (!r.passed())
			throw HypothesisError("input algebra is not ternary LNP:\n" + r.str());
	}
	AxiomReport mr = is_morphism(f, l, l2, opt.failure_cap);
	if (!mr.passed())
		throw HypothesisError("map is not a morphism:\n" + mr.str());

	const MultiOp &mul = l2.op(slot::mul), &T = l2.op(slot::ternary);
	const GradedSpace &A = l.space(), &M = l2.space();
	const Field &field = l.field();
	auto em = [&](std::size_t i) { return l2.basis(i); };

	ModulePresentation out(l, M, ModuleKind::TernaryLNPModule);
	out.set_action(action::am, MultiOp::tabulate({A, M}, M, field, [&](Tuple x) { return mul(f.image(x[0]), em(x[1])); }));
	out.set_action(action::ma, MultiOp::tabulate({M, A}, M, field, [&](Tuple x) { return mul(em(x[0]), f.image(x[1])); }));
	out.set_action(action::maa, MultiOp::tabulate({M, A, A}, M, field, [&](Tuple x) {
		               return T(em(x[0]), f.image(x[1]), f.image(x[2]));
	               }));
	out.set_action(action::ama, MultiOp::tabulate({A, M, A}, M, field, [&](Tuple x) {
		               return T(f.image(x[0]), em(x[1]), f.image(x[2]));
	               }));
	out.set_action(action::aam, MultiOp::tabulate({A, A, M}, M, field, [&](Tuple x) {
		               return T(f.image(x[0]), f.image(x[1]), em(x[2]));
	               }));
	out.label = fmt::format("via-morphism({}, {})", l.label, l2.label);
	ModuleCheckOptions vopt = opt;
	vopt.check_algebra = false;
	AxiomReport report = check_module(out, vopt);
	return {std::move(out), std::move(report)};
}

} // namespace calg
