#include "calg/constructions.hpp"

#include <functional>

#include <fmt/format.h>

#include "calg/operators.hpp"
#include "context.hpp"

namespace calg {

namespace {

using detail::Context;
using Tuple = std::span<const std::size_t>;

struct Env
{
	Env(const ConstructionInputs &in, const Field &f)
	    : a(in.algebra), c(in.algebra), r(in.op ? &*in.op : nullptr),
	      lambda(f.from_fraction(in.lambda.value_or(0))), q(f.from_fraction(in.q.value_or(1))),
	      b(in.second ? &*in.second : nullptr)
	{
	}

	const Vector &x(std::size_t i) const { return c.e[i]; }
	const Vector &R(std::size_t i) const { return r->image(i); }
	Vector R(const Vector &v) const { return (*r)(v); }
	const MultiOp &op(const std::string &name) const { return a.op(name); }
	/// eps(x_i, x_j)
	const Scalar &e(std::size_t i, std::size_t j) const { return c.eps(c.deg(i), c.deg(j)); }
	/// eps(x_i, x_j + x_k)
	const Scalar &e(std::size_t i, std::size_t j, std::size_t k) const
	{
		return c.eps(c.deg(i), c.sum(c.deg(j), c.deg(k)));
	}

	const AlgebraPresentation &a;
	Context c;
	const LinearMap *r;
	Scalar lambda;
	Scalar q;
	const AlgebraPresentation *b;
};

using Bin = std::function<Vector(std::size_t, std::size_t)>;
using Tern = std::function<Vector(std::size_t, std::size_t, std::size_t)>;

MultiOp bin(const Env &env, const Bin &f)
{
	return tabulate_op(env.a, 2, [&f](Tuple t) { return f(t[0], t[1]); });
}

MultiOp tern(const Env &env, const Tern &f)
{
	return tabulate_op(env.a, 3, [&f](Tuple t) { return f(t[0], t[1], t[2]); });
}

AlgebraPresentation bare(const Env &env) { return AlgebraPresentation(env.a.space(), env.a.eps()); }

AlgebraPresentation with_ops(const Env &env, std::vector<std::pair<std::string, MultiOp>> ops)
{
	AlgebraPresentation out = bare(env);
	for (auto &[name, op] : ops)
		out.set_op(name, std::move(op));
	return out;
}

// x.y - eps(x,y) y.x for a binary op
MultiOp eps_commutator(const Env &env, const MultiOp &m)
{
	return bin(env, [&](std::size_t i, std::size_t j) {
		Vector v = m.eval({i, j});
		v.add_scaled(-env.e(i, j), m.eval({j, i}));
		return v;
	});
}

// [x, [y, z]]
MultiOp nested(const Env &env, const MultiOp &b)
{
	return tern(env, [&](std::size_t i, std::size_t j, std::size_t k) { return b(env.x(i), b.eval({j, k})); });
}

// a (x) b in the tensor square, index i*d + j
Vector tensor(const Vector &u, const Vector &v)
{
	const std::size_t d = u.size();
	Vector out(u.field(), d * d);
	for (std::size_t i : u.support())
		for (std::size_t j : v.support())
			out[i * d + j] = u[i] * v[j];
	return out;
}

AlgebraPresentation tensor_algebra(const Env &env, const MultiOp &m, const std::function<Vector(std::size_t, std::size_t,
                                                                                                std::size_t, std::size_t)> &br)
{
	const std::size_t d = env.a.dim();
	GradedSpace sq = tensor_square_space(env.a.space());
	AlgebraPresentation out(sq, env.a.eps());
	MultiOp prod = MultiOp::tabulate({sq, sq}, sq, env.a.field(), [&](Tuple t) {
		std::size_t x = t[0] / d, y = t[0] % d, x2 = t[1] / d, y2 = t[1] % d;
		return env.e(y, x2) * tensor(m.eval({x, x2}), m.eval({y, y2}));
	});
	MultiOp bracket = MultiOp::tabulate({sq, sq}, sq, env.a.field(), [&](Tuple t) {
		return br(t[0] / d, t[0] % d, t[1] / d, t[1] % d);
	});
	out.set_op(slot::mul, std::move(prod));
	out.set_op(slot::bracket, std::move(bracket));
	return out;
}

struct OperatorNeed
{
	std::string kind; // "" when no operator is used
	std::vector<std::string> ops;
	std::optional<int> fixed_weight; // Rota-Baxter only; nullopt = the lambda input
};

struct Entry
{
	ConstructionInfo info;
	std::vector<StructureClass> classes;
	OperatorNeed need;
	bool needs_half = false;
	bool trivial_grading = false;
	bool q_hypothesis = false; // input must be QTridendriform(q)
	std::function<AlgebraPresentation(const Env &)> build;
	std::function<void(const Env &, const AlgebraPresentation &, ConstructionRecord &)> annotate;
};

StructureClass cls(ClassKind k) { return StructureClass::of(k); }

std::vector<std::string> describe(const Entry &e)
{
	std::vector<std::string> out;
	for (const auto &c : e.classes)
		out.push_back(c.tag());
	if (e.q_hypothesis)
		out.push_back("q-tridendriform(q)");
	if (!e.need.kind.empty())
	{
		std::string ops;
		for (const auto &o : e.need.ops)
			ops += (ops.empty() ? "" : ",") + o;
		std::string w;
		if (e.need.kind == "rota-baxter")
			w = e.need.fixed_weight ? fmt::format(", weight {}", *e.need.fixed_weight) : ", weight lambda";
		out.push_back(fmt::format("{}({}{})", e.need.kind, ops, w));
	}
	if (e.needs_half)
		out.push_back("2 invertible");
	if (e.trivial_grading)
		out.push_back("trivial grading");
	if (e.info.needs_second)
		out.push_back("second input of the same class");
	return out;
}

const std::vector<Entry> &registry()
{
	using K = ClassKind;
	static const std::vector<Entry> entries = [] {
		std::vector<Entry> v;
		auto add = [&v](std::string name, std::string anchor, std::vector<StructureClass> hyp, StructureClass target,
		                OperatorNeed need, std::function<AlgebraPresentation(const Env &)> build) {
			Entry e;
			e.info.name = std::move(name);
			e.info.anchor = std::move(anchor);
			e.info.produces = std::move(target);
			e.info.operator_kind = need.kind;
			e.classes = std::move(hyp);
			e.need = std::move(need);
			e.build = std::move(build);
			v.push_back(std::move(e));
			return &v.back();
		};
		const OperatorNeed none;
		auto rb = [](std::vector<std::string> ops, std::optional<int> w) {
			return OperatorNeed{"rota-baxter", std::move(ops), w};
		};

		add("commutator-lie", "eps-commutator of an associative color algebra is Lie color", {cls(K::Associative)},
		    cls(K::LieColor), none, [](const Env &env) {
			    return with_ops(env, {{slot::bracket, eps_commutator(env, env.op(slot::mul))}});
		    });
		add("leibniz-poisson-from-assoc", "associative product with its eps-commutator is non-commutative Leibniz-Poisson",
		    {cls(K::Associative)}, cls(K::LeibnizPoisson), none, [](const Env &env) {
			    return with_ops(env, {{slot::mul, env.op(slot::mul)},
			                          {slot::bracket, eps_commutator(env, env.op(slot::mul))}});
		    });
		add("commutator-from-left-symmetric", "eps-commutator of a left-symmetric color algebra is Lie color",
		    {cls(K::LeftSymmetric)}, cls(K::LieColor), none, [](const Env &env) {
			    return with_ops(env, {{slot::bracket, eps_commutator(env, env.op(slot::mul))}});
		    });
		add("averaging-lie-bracket", "bracket [alpha(x), y] from an averaging operator on a Lie color algebra",
		    {cls(K::LieColor)}, cls(K::LieColor), {"averaging", {slot::bracket}, {}}, [](const Env &env) {
			    const MultiOp &b = env.op(slot::bracket);
			    return with_ops(env, {{slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           return b(env.R(i), env.x(j));
			                           })}});
		    });
		add("averaging-leibniz-bracket",
		    "bracket x.alpha(y) - eps(x,y) alpha(y).x from an averaging operator on an associative color algebra",
		    {cls(K::Associative)}, cls(K::LeibnizColor), {"averaging", {slot::mul}, {}}, [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = m(env.x(i), env.R(j));
				                           v.add_scaled(-env.e(i, j), m(env.R(j), env.x(i)));
				                           return v;
			                           })}});
		    });
		add("averaging-to-dialgebra", "x -| y = x.alpha(y), x |- y = alpha(x).y give an associative color dialgebra",
		    {cls(K::Associative)}, cls(K::AssociativeDialgebra), {"averaging", {slot::mul}, {}}, [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(
			        env, {{slot::left, bin(env, [&](std::size_t i, std::size_t j) { return m(env.x(i), env.R(j)); })},
			              {slot::right, bin(env, [&](std::size_t i, std::size_t j) { return m(env.R(i), env.x(j)); })}});
		    });
		add("rb-lambda-bracket", "bracket [R(x),y] + [x,R(y)] + lambda[x,y] on a Rota-Baxter Leibniz color algebra",
		    {cls(K::LeibnizColor)}, cls(K::LeibnizColor), rb({slot::bracket}, {}), [](const Env &env) {
			    const MultiOp &b = env.op(slot::bracket);
			    return with_ops(env, {{slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = b(env.R(i), env.x(j)) + b(env.x(i), env.R(j));
				                           v.add_scaled(env.lambda, b.eval({i, j}));
				                           return v;
			                           })}});
		    });
		add("left-symmetric-from-rb-lie", "x.y = [R(x), y] on a weight-0 Rota-Baxter Lie color algebra",
		    {cls(K::LieColor)}, cls(K::LeftSymmetric), rb({slot::bracket}, 0), [](const Env &env) {
			    const MultiOp &b = env.op(slot::bracket);
			    return with_ops(env, {{slot::mul, bin(env, [&](std::size_t i, std::size_t j) {
				                           return b(env.R(i), env.x(j));
			                           })}});
		    });
		add("lie-from-rb-lie", "bracket [R(x),y] - eps(x,y)[R(y),x] on a weight-0 Rota-Baxter Lie color algebra",
		    {cls(K::LieColor)}, cls(K::LieColor), rb({slot::bracket}, 0), [](const Env &env) {
			    const MultiOp &b = env.op(slot::bracket);
			    return with_ops(env, {{slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = b(env.R(i), env.x(j));
				                           v.add_scaled(-env.e(i, j), b(env.R(j), env.x(i)));
				                           return v;
			                           })}});
		    });
		auto rx_y_twisted = [](const Env &env, const MultiOp &m, std::size_t i, std::size_t j) {
			Vector v = m(env.R(i), env.x(j));
			v.add_scaled(-env.e(i, j), m(env.x(j), env.R(i)));
			return v;
		};
		add("ls-from-rb-ls", "x*y = R(x).y - eps(x,y) y.R(x) on a weight-0 Rota-Baxter left-symmetric color algebra",
		    {cls(K::LeftSymmetric)}, cls(K::LeftSymmetric), rb({slot::mul}, 0), [rx_y_twisted](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::mul, bin(env, [&](std::size_t i, std::size_t j) {
				                           return rx_y_twisted(env, m, i, j);
			                           })}});
		    });
		add("lie-from-rb-ls", "expanded eps-commutator of the Rota-Baxter left-symmetric product",
		    {cls(K::LeftSymmetric)}, cls(K::LieColor), rb({slot::mul}, 0), [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = m(env.R(i), env.x(j)) + m(env.x(i), env.R(j));
				                           v.add_scaled(-env.e(i, j), m(env.R(j), env.x(i)) + m(env.x(j), env.R(i)));
				                           return v;
			                           })}});
		    });
		add("ls-from-rb-assoc-wm1",
		    "x*y = R(x).y - eps(x,y) y.R(x) - x.y on a weight -1 Rota-Baxter associative color algebra",
		    {cls(K::Associative)}, cls(K::LeftSymmetric), rb({slot::mul}, -1), [rx_y_twisted](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::mul, bin(env, [&](std::size_t i, std::size_t j) {
				                           return rx_y_twisted(env, m, i, j) - m.eval({i, j});
			                           })}});
		    });
		add("lie-from-rb-assoc-wm1", "expanded bracket on a weight -1 Rota-Baxter associative color algebra",
		    {cls(K::Associative)}, cls(K::LieColor), rb({slot::mul}, -1), [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = m(env.R(i), env.x(j)) + m(env.x(i), env.R(j)) - m.eval({i, j});
				                           Vector w = m(env.R(j), env.x(i)) + m(env.x(j), env.R(i)) - m.eval({j, i});
				                           v.add_scaled(-env.e(i, j), w);
				                           return v;
			                           })}});
		    });
		add("ls-from-rb-lie-admissible",
		    "x*y = R(x).y - eps(x,y) y.R(x) on a weight-0 Rota-Baxter Lie-admissible color algebra",
		    {cls(K::LieAdmissible)}, cls(K::LeftSymmetric), rb({slot::mul}, 0), [rx_y_twisted](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::mul, bin(env, [&](std::size_t i, std::size_t j) {
				                           return rx_y_twisted(env, m, i, j);
			                           })}});
		    });
		add("lie-from-rb-assoc-w0",
		    "bracket with the trailing y.x term on a weight-0 Rota-Baxter associative color algebra",
		    {cls(K::Associative)}, cls(K::LieColor), rb({slot::mul}, 0), [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = m(env.R(i), env.x(j)) + m(env.x(i), env.R(j));
				                           Vector w = m(env.R(j), env.x(i)) + m(env.x(j), env.R(i)) + m.eval({j, i});
				                           v.add_scaled(-env.e(i, j), w);
				                           return v;
			                           })}});
		    });
		add("post-lie-to-lie-admissible", "x*y = x.y + 1/2[x,y] on a post-Lie color algebra is Lie-admissible",
		    {cls(K::PostLie)}, cls(K::LieAdmissible), none, [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul), &b = env.op(slot::bracket);
			    Scalar half = env.a.field().from_fraction(mpq_class(1, 2));
			    return with_ops(env, {{slot::mul, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = m.eval({i, j});
				                           v.add_scaled(half, b.eval({i, j}));
				                           return v;
			                           })}});
		    })->needs_half = true;

		// x o y = R(x)*y - eps(x,y) y*R(x) with * = . + 1/2[,]
		auto post_lie_star = [](const Env &env) {
			const MultiOp &m = env.op(slot::mul), &b = env.op(slot::bracket);
			Scalar half = env.a.field().from_fraction(mpq_class(1, 2));
			auto star = [&](const Vector &u, const Vector &w) {
				Vector v = m(u, w);
				v.add_scaled(half, b(u, w));
				return v;
			};
			return bin(env, [&](std::size_t i, std::size_t j) {
				Vector v = star(env.R(i), env.x(j));
				v.add_scaled(-env.e(i, j), star(env.x(j), env.R(i)));
				return v;
			});
		};
		Entry *rbads = add("ls-from-rb-post-lie",
		                   "x o y = R(x)*y - eps(x,y) y*R(x) on a Rota-Baxter post-Lie color algebra, * = . + 1/2[,]",
		                   {cls(K::PostLie)}, cls(K::LeftSymmetric), rb({slot::mul, slot::bracket}, {}),
		                   [post_lie_star](const Env &env) { return with_ops(env, {{slot::mul, post_lie_star(env)}}); });
		rbads->needs_half = true;
		rbads->annotate = [](const Env &env, const AlgebraPresentation &out, ConstructionRecord &rec) {
			// compare with the shorthand [R(x),y] + {R(x),y}, {a,b} = a.b - eps(a,b) b.a
			const MultiOp &m = env.op(slot::mul), &b = env.op(slot::bracket);
			MultiOp shorthand = bin(env, [&](std::size_t i, std::size_t j) {
				Vector v = b(env.R(i), env.x(j)) + m(env.R(i), env.x(j));
				v.add_scaled(-env.e(i, j), m(env.x(j), env.R(i)));
				return v;
			});
			bool same = op_equal(out.op(slot::mul), shorthand);
			rec.notes.push_back(fmt::format("shorthand [R(x),y] + {{R(x),y}} {} the product on this input",
			                                same ? "agrees with" : "differs from"));
		};
		add("lie-from-rb-post-lie", "expanded bracket on a Rota-Baxter post-Lie color algebra", {cls(K::PostLie)},
		    cls(K::LieColor), rb({slot::mul, slot::bracket}, {}), [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul), &b = env.op(slot::bracket);
			    auto part = [&](std::size_t i, std::size_t j) {
				    return b(env.R(i), env.x(j)) + m(env.R(i), env.x(j)) + m(env.x(i), env.R(j));
			    };
			    return with_ops(env, {{slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = part(i, j);
				                           v.add_scaled(-env.e(i, j), part(j, i));
				                           return v;
			                           })}});
		    });

		auto dialgebra_bracket = [](const Env &env) {
			const MultiOp &l = env.op(slot::left), &r = env.op(slot::right);
			return bin(env, [&](std::size_t i, std::size_t j) {
				Vector v = l.eval({i, j});
				v.add_scaled(-env.e(i, j), r.eval({j, i}));
				return v;
			});
		};
		add("leibniz-from-ls-dialgebra", "x -| y - eps(x,y) y |- x on a left-symmetric color dialgebra is Leibniz",
		    {cls(K::LeftSymmetricDialgebra)}, cls(K::LeibnizColor), none, [dialgebra_bracket](const Env &env) {
			    return with_ops(env, {{slot::bracket, dialgebra_bracket(env)}});
		    });
		add("leibniz-from-assoc-dialgebra",
		    "x -| y - eps(x,y) y |- x on an associative color dialgebra is Leibniz", {cls(K::AssociativeDialgebra)},
		    cls(K::LeibnizColor), none, [dialgebra_bracket](const Env &env) {
			    return with_ops(env, {{slot::bracket, dialgebra_bracket(env)}});
		    });
		add("leibniz-poisson-from-dialgebra",
		    "left product with the dialgebra bracket is non-commutative Leibniz-Poisson",
		    {cls(K::AssociativeDialgebra)}, cls(K::LeibnizPoisson), none, [dialgebra_bracket](const Env &env) {
			    return with_ops(env, {{slot::mul, env.op(slot::left)}, {slot::bracket, dialgebra_bracket(env)}});
		    });
		add("ternary-from-leibniz", "[x,y,z] = [x,[y,z]] on a Leibniz color algebra is ternary Leibniz",
		    {cls(K::LeibnizColor)}, cls(K::TernaryLeibniz), none,
		    [](const Env &env) { return with_ops(env, {{slot::ternary, nested(env, env.op(slot::bracket))}}); });
		add("trialgebra-to-leibniz-poisson", "x.y = x _|_ y and [x,y] = x -| y - eps(x,y) x |- y on a color trialgebra",
		    {cls(K::Trialgebra)}, cls(K::LeibnizPoisson), none, [](const Env &env) {
			    const MultiOp &l = env.op(slot::left), &r = env.op(slot::right);
			    return with_ops(env, {{slot::mul, env.op(slot::middle)},
			                          {slot::bracket, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = l.eval({i, j});
				                           v.add_scaled(-env.e(i, j), r.eval({i, j}));
				                           return v;
			                           })}});
		    });

		// x L (y M z - eps(y,z) z M y) - eps(x,y+z) (y M z - eps(y,z) z M y) R x
		auto ternary_from_three = [](const Env &env, const MultiOp &l, const MultiOp &mid, const MultiOp &r) {
			return tern(env, [&](std::size_t i, std::size_t j, std::size_t k) {
				Vector inner = mid.eval({j, k});
				inner.add_scaled(-env.e(j, k), mid.eval({k, j}));
				Vector v = l(env.x(i), inner);
				v.add_scaled(-env.e(i, j, k), r(inner, env.x(i)));
				return v;
			});
		};
		add("trialgebra-ternary-bracket", "ternary bracket from the three products of a color trialgebra",
		    {cls(K::Trialgebra)}, cls(K::TernaryLeibniz), none, [ternary_from_three](const Env &env) {
			    return with_ops(env, {{slot::ternary, ternary_from_three(env, env.op(slot::left), env.op(slot::middle),
			                                                             env.op(slot::right))}});
		    });
		add("assoc-ternary-corollary", "[x,y,z] = x.(y.z - eps(y,z) z.y) - eps(x,y+z)(y.z - eps(y,z) z.y).x",
		    {cls(K::Associative)}, cls(K::TernaryLeibniz), none, [ternary_from_three](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::ternary, ternary_from_three(env, m, m, m)}});
		    });
		add("rb-to-tridendriform",
		    "x -| y = x.R(y), x |- y = eps(x,y) R(x).y, x * y = lambda eps(x,y) x.y on a Rota-Baxter associative "
		    "color algebra",
		    {cls(K::Associative)}, StructureClass::q_tridendriform(1), rb({slot::mul}, {}), [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(
			        env,
			        {{slot::left, bin(env, [&](std::size_t i, std::size_t j) { return m(env.x(i), env.R(j)); })},
			         {slot::right,
			          bin(env, [&](std::size_t i, std::size_t j) { return env.e(i, j) * m(env.R(i), env.x(j)); })},
			         {slot::mul,
			          bin(env, [&](std::size_t i, std::size_t j) { return (env.lambda * env.e(i, j)) * m.eval({i, j}); })}});
		    });
		add("rb-to-dendriform",
		    "x -| y = x.R(y) + lambda x.y, x |- y = eps(x,y) R(x).y on a Rota-Baxter associative color algebra",
		    {cls(K::Associative)}, cls(K::Dendriform), rb({slot::mul}, {}), [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::left, bin(env, [&](std::size_t i, std::size_t j) {
				                           Vector v = m(env.x(i), env.R(j));
				                           v.add_scaled(env.lambda, m.eval({i, j}));
				                           return v;
			                           })},
			                          {slot::right, bin(env, [&](std::size_t i, std::size_t j) {
				                           return env.e(i, j) * m(env.R(i), env.x(j));
			                           })}});
		    });

		// x |- y + eps(x,y) x -| y + x.y
		auto tridendriform_star = [](const Env &env) {
			const MultiOp &l = env.op(slot::left), &r = env.op(slot::right), &m = env.op(slot::mul);
			return bin(env, [&](std::size_t i, std::size_t j) {
				Vector v = r.eval({i, j}) + m.eval({i, j});
				v.add_scaled(env.e(i, j), l.eval({i, j}));
				return v;
			});
		};
		add("tridendriform-sum", "x*y = x |- y + eps(x,y) x -| y + x.y on a tridendriform color algebra",
		    {StructureClass::q_tridendriform(1)}, cls(K::Associative), none,
		    [tridendriform_star](const Env &env) { return with_ops(env, {{slot::mul, tridendriform_star(env)}}); });
		add("tridendriform-leibniz-poisson",
		    "tridendriform sum product with its eps-commutator is non-commutative Leibniz-Poisson",
		    {StructureClass::q_tridendriform(1)}, cls(K::LeibnizPoisson), none, [tridendriform_star](const Env &env) {
			    MultiOp star = tridendriform_star(env);
			    MultiOp br = eps_commutator(env, star);
			    return with_ops(env, {{slot::mul, std::move(star)}, {slot::bracket, std::move(br)}});
		    });
		add("rb-assoc-leibniz-poisson",
		    "x*y = eps(x,y)(R(x).y + x.R(y) + lambda x.y) with its eps-commutator on a Rota-Baxter associative color "
		    "algebra",
		    {cls(K::Associative)}, cls(K::LeibnizPoisson), rb({slot::mul}, {}), [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    MultiOp star = bin(env, [&](std::size_t i, std::size_t j) {
				    Vector v = m(env.R(i), env.x(j)) + m(env.x(i), env.R(j));
				    v.add_scaled(env.lambda, m.eval({i, j}));
				    return env.e(i, j) * v;
			    });
			    MultiOp br = eps_commutator(env, star);
			    return with_ops(env, {{slot::mul, std::move(star)}, {slot::bracket, std::move(br)}});
		    });
		add("trialgebra-to-minus1-tridendriform",
		    "(-|, |-, _|_) of a trivially graded trialgebra read as a -1-tridendriform algebra", {cls(K::Trialgebra)},
		    StructureClass::q_tridendriform(-1), none, [](const Env &env) {
			    return with_ops(env, {{slot::left, env.op(slot::left)},
			                          {slot::right, env.op(slot::right)},
			                          {slot::mul, env.op(slot::middle)}});
		    })->trivial_grading = true;

		// x -| y + x |- y - x _|_ y
		auto trialgebra_star = [](const Env &env) {
			const MultiOp &l = env.op(slot::left), &r = env.op(slot::right), &p = env.op(slot::middle);
			return bin(env, [&](std::size_t i, std::size_t j) { return l.eval({i, j}) + r.eval({i, j}) - p.eval({i, j}); });
		};
		add("trialgebra-sum", "x*y = x -| y + x |- y - x _|_ y on a trialgebra is associative", {cls(K::Trialgebra)},
		    cls(K::Associative), none,
		    [trialgebra_star](const Env &env) { return with_ops(env, {{slot::mul, trialgebra_star(env)}}); });
		add("trialgebra-sum-leibniz-poisson", "trialgebra sum with the plain commutator x*y - y*x",
		    {cls(K::Trialgebra)}, cls(K::LeibnizPoisson), none, [trialgebra_star](const Env &env) {
			    MultiOp star = trialgebra_star(env);
			    MultiOp br = bin(env, [&](std::size_t i, std::size_t j) { return star.eval({i, j}) - star.eval({j, i}); });
			    return with_ops(env, {{slot::mul, std::move(star)}, {slot::bracket, std::move(br)}});
		    });
		auto rb_trialgebra = [trialgebra_star](const Env &env, bool minus_star) {
			MultiOp star = trialgebra_star(env);
			return bin(env, [&](std::size_t i, std::size_t j) {
				Vector v = star(env.R(i), env.x(j)) - star(env.x(j), env.R(i));
				if (minus_star)
					v -= star.eval({i, j});
				return v;
			});
		};
		const std::vector<std::string> three = {slot::left, slot::middle, slot::right};
		add("rb-trialgebra-ls", "x o y = R(x)*y - y*R(x) on a weight-0 Rota-Baxter trialgebra", {cls(K::Trialgebra)},
		    cls(K::LeftSymmetric), rb(three, 0),
		    [rb_trialgebra](const Env &env) { return with_ops(env, {{slot::mul, rb_trialgebra(env, false)}}); });
		add("rb-trialgebra-assoc", "x o y = R(x)*y - y*R(x) - x*y on a weight -1 Rota-Baxter trialgebra",
		    {cls(K::Trialgebra)}, cls(K::Associative), rb(three, -1),
		    [rb_trialgebra](const Env &env) { return with_ops(env, {{slot::mul, rb_trialgebra(env, true)}}); });
		add("assoc-to-trialgebra", "an associative color algebra with -| = _|_ = |- = .", {cls(K::Associative)},
		    cls(K::Trialgebra), none, [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::left, m}, {slot::middle, m}, {slot::right, m}});
		    });
		add("trialgebra-opposite", "x -|' y = y |- x, x _|_' y = y _|_ x, x |-' y = y -| x on a color trialgebra",
		    {cls(K::Trialgebra)}, cls(K::Trialgebra), none, [](const Env &env) {
			    auto flip = [&](const MultiOp &m) {
				    return bin(env, [&](std::size_t i, std::size_t j) { return m.eval({j, i}); });
			    };
			    return with_ops(env, {{slot::left, flip(env.op(slot::right))},
			                          {slot::middle, flip(env.op(slot::middle))},
			                          {slot::right, flip(env.op(slot::left))}});
		    });
		add("dialgebra-to-trialgebra", "an associative color dialgebra with trivial middle product",
		    {cls(K::AssociativeDialgebra)}, cls(K::Trialgebra), none, [](const Env &env) {
			    return with_ops(env, {{slot::left, env.op(slot::left)},
			                          {slot::middle, MultiOp::on(env.a.space(), 2, env.a.field())},
			                          {slot::right, env.op(slot::right)}});
		    });
		add("q-tridendriform-rescale", "(-|, |-, q^-1 .) of a q-tridendriform color algebra is tridendriform", {},
		    StructureClass::q_tridendriform(1), none, [](const Env &env) {
			    if (env.q.is_zero())
				    throw InputError("q-tridendriform-rescale needs q != 0");
			    Scalar inv = env.q.inverse();
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::left, env.op(slot::left)},
			                          {slot::right, env.op(slot::right)},
			                          {slot::mul, bin(env, [&](std::size_t i, std::size_t j) { return inv * m.eval({i, j}); })}});
		    })->q_hypothesis = true;
		add("lie-triple-from-lie", "[x,y,z] = [x,[y,z]] on a Lie color algebra is a color Lie triple system",
		    {cls(K::LieColor)}, cls(K::LieTriple), none,
		    [](const Env &env) { return with_ops(env, {{slot::ternary, nested(env, env.op(slot::bracket))}}); });
		add("lie-triple-from-assoc", "four-term triple bracket on an associative color algebra", {cls(K::Associative)},
		    cls(K::LieTriple), none, [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::ternary, tern(env, [&](std::size_t i, std::size_t j, std::size_t k) {
				                           Vector yz = m.eval({j, k}), zy = m.eval({k, j});
				                           const Scalar &eyz = env.e(j, k), &ex = env.e(i, j, k);
				                           Vector v = m(env.x(i), yz);
				                           v.add_scaled(-eyz, m(env.x(i), zy));
				                           v.add_scaled(-ex, m(yz, env.x(i)));
				                           v.add_scaled(ex * eyz, m(zy, env.x(i)));
				                           return v;
			                           })}});
		    });
		auto jordan = [](const Env &env, bool with_theta) {
			const MultiOp &m = env.op(slot::mul);
			return tern(env, [&env, &m, with_theta](std::size_t i, std::size_t j, std::size_t k) {
				const Vector &y = with_theta ? env.R(j) : env.x(j);
				Scalar s = env.e(i, j) * env.e(i, k) * env.e(j, k);
				Vector v = m(m(env.x(i), y), env.x(k));
				v.add_scaled(s, m(m(env.x(k), y), env.x(i)));
				return v;
			});
		};
		add("jordan-from-assoc", "x.y.z + eps(x,y)eps(x,z)eps(y,z) z.y.x on an associative color algebra",
		    {cls(K::Associative)}, cls(K::JordanTriple), none,
		    [jordan](const Env &env) { return with_ops(env, {{slot::ternary, jordan(env, false)}}); });
		add("jordan-from-involution", "x.theta(y).z + eps(x,y)eps(x,z)eps(y,z) z.theta(y).x with an involution theta",
		    {cls(K::Associative)}, cls(K::JordanTriple), {"theta-involution", {slot::mul}, {}},
		    [jordan](const Env &env) { return with_ops(env, {{slot::ternary, jordan(env, true)}}); });
		add("lie-triple-from-jordan", "{x,y,z} = [x,y,z] - eps(y,z)[x,z,y] on a color Jordan triple system",
		    {cls(K::JordanTriple)}, cls(K::LieTriple), none, [](const Env &env) {
			    const MultiOp &t = env.op(slot::ternary);
			    return with_ops(env, {{slot::ternary, tern(env, [&](std::size_t i, std::size_t j, std::size_t k) {
				                           Vector v = t.eval({i, j, k});
				                           v.add_scaled(-env.e(j, k), t.eval({i, k, j}));
				                           return v;
			                           })}});
		    });
		add("lnp-opposite", "x .op y = eps(x,y) y.x keeping the ternary bracket", {cls(K::TernaryLNP)},
		    cls(K::TernaryLNP), none, [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul);
			    return with_ops(env, {{slot::mul, bin(env, [&](std::size_t i, std::size_t j) {
				                           return env.e(i, j) * m.eval({j, i});
			                           })},
			                          {slot::ternary, env.op(slot::ternary)}});
		    });
		add("lnp-direct-sum", "componentwise operations on the direct sum", {cls(K::TernaryLNP)}, cls(K::TernaryLNP),
		    none, [](const Env &env) {
			    AlgebraPresentation out = direct_sum(env.a, *env.b);
			    out.provenance.clear();
			    return out;
		    })->info.needs_second = true;
		add("lnp-tensor-leibniz-poisson", "Leibniz-Poisson structure on the tensor square of a ternary LNP color algebra",
		    {cls(K::TernaryLNP)}, cls(K::LeibnizPoisson), none, [](const Env &env) {
			    const MultiOp &t = env.op(slot::ternary);
			    return tensor_algebra(env, env.op(slot::mul), [&](std::size_t x, std::size_t y, std::size_t x2,
			                                                      std::size_t y2) {
				    Vector v = tensor(env.x(x), t.eval({y, x2, y2}));
				    v.add_scaled(env.e(y, x2, y2), tensor(t.eval({x, x2, y2}), env.x(y)));
				    return v;
			    });
		    });
		add("lnp-from-leibniz-poisson", "product kept, [x,y,z] = [x,[y,z]] on a Leibniz-Poisson color algebra",
		    {cls(K::LeibnizPoisson)}, cls(K::TernaryLNP), none, [](const Env &env) {
			    return with_ops(env, {{slot::mul, env.op(slot::mul)}, {slot::ternary, nested(env, env.op(slot::bracket))}});
		    });
		add("lnp-from-assoc", "product with [x,[y,z]] for the eps-commutator of an associative color algebra",
		    {cls(K::Associative)}, cls(K::TernaryLNP), none, [](const Env &env) {
			    MultiOp br = eps_commutator(env, env.op(slot::mul));
			    return with_ops(env, {{slot::mul, env.op(slot::mul)}, {slot::ternary, nested(env, br)}});
		    });
		add("lnp-bracket-product", "{x,y,z} = [x, y.z] on a Leibniz-Poisson color algebra", {cls(K::LeibnizPoisson)},
		    cls(K::TernaryLNP), none, [](const Env &env) {
			    const MultiOp &m = env.op(slot::mul), &b = env.op(slot::bracket);
			    return with_ops(env, {{slot::mul, m}, {slot::ternary, tern(env, [&](std::size_t i, std::size_t j, std::size_t k) {
				                                               return b(env.x(i), m.eval({j, k}));
			                                               })}});
		    });
		add("leibniz-poisson-tensor-corollary",
		    "Leibniz-Poisson structure on the tensor square via the nested bracket [x,[y,z]]", {cls(K::LeibnizPoisson)},
		    cls(K::LeibnizPoisson), none, [](const Env &env) {
			    const MultiOp &b = env.op(slot::bracket);
			    auto t = [&](std::size_t i, std::size_t j, std::size_t k) { return b(env.x(i), b.eval({j, k})); };
			    return tensor_algebra(env, env.op(slot::mul), [&](std::size_t x, std::size_t y, std::size_t x2,
			                                                      std::size_t y2) {
				    Vector v = tensor(env.x(x), t(y, x2, y2));
				    v.add_scaled(env.e(y, x2, y2), tensor(t(x, x2, y2), env.x(y)));
				    return v;
			    });
		    });

		for (auto &e : v)
			e.info.hypotheses = describe(e);
		return v;
	}();
	return entries;
}

const Entry &entry(const std::string &name)
{
	for (const auto &e : registry())
		if (e.info.name == name)
			return e;
	throw InputError(fmt::format("unknown construction \"{}\"", name));
}

void require(const AxiomReport &r, const std::string &what)
{
	if (!r.passed())
		throw HypothesisError(fmt::format("hypothesis {} fails:\n{}", what, r.str()));
}

void check_hypotheses(const Entry &e, const ConstructionInputs &in, const ConstructionOptions &opt)
{
	const AlgebraPresentation &a = in.algebra;
	std::vector<StructureClass> classes = e.classes;
	if (e.q_hypothesis)
		classes.push_back(StructureClass::q_tridendriform(in.q.value_or(1)));
	for (const auto &c : classes)
	{
		if (opt.check_hypotheses)
			require(check_structure(a, c, opt.check), c.tag());
		if (e.info.needs_second)
		{
			if (!in.second)
				throw InputError(fmt::format("construction {} needs a second algebra", e.info.name));
			if (opt.check_hypotheses)
				require(check_structure(*in.second, c, opt.check), c.tag() + " (second input)");
		}
	}
	if (e.needs_half && a.field().is_prime() && a.field().modulus() == 2)
		throw HypothesisError("2 is not invertible");
	if (e.trivial_grading)
		for (std::size_t i = 0; i < a.dim(); ++i)
			if (a.space().degree_index(i) != 0)
				throw HypothesisError(
				    fmt::format("construction {} needs a trivial grading; {} has a nonzero degree", e.info.name,
				                a.space().names()[i]));

	const OperatorNeed &need = e.need;
	if (need.kind.empty())
		return;
	if (!in.op)
		throw InputError(fmt::format("construction {} needs an operator ({})", e.info.name, need.kind));
	if (need.kind == "rota-baxter")
	{
		mpq_class w = need.fixed_weight ? mpq_class(*need.fixed_weight) : in.lambda.value_or(0);
		if (need.fixed_weight && in.lambda && *in.lambda != w)
			throw InputError(fmt::format("construction {} has fixed weight {}", e.info.name, *need.fixed_weight));
		if (!opt.check_hypotheses)
			return;
		for (const auto &op : need.ops)
			require(is_rota_baxter(a, op, *in.op, a.field().from_fraction(w), opt.check.failure_cap),
			        fmt::format("rota-baxter({}, weight {})", op, w.get_str()));
	}
	else if (!opt.check_hypotheses)
		return;
	else if (need.kind == "averaging")
		require(is_averaging(a, need.ops.at(0), *in.op, opt.check.failure_cap), "averaging");
	else if (need.kind == "theta-involution")
		require(is_theta_involution(a, *in.op, opt.check.failure_cap), "theta-involution");
}

} // namespace

const std::vector<ConstructionInfo> &list_constructions()
{
	static const std::vector<ConstructionInfo> infos = [] {
		std::vector<ConstructionInfo> v;
		for (const auto &e : registry())
			v.push_back(e.info);
		return v;
	}();
	return infos;
}

const ConstructionInfo &construction_info(const std::string &name) { return entry(name).info; }

ConstructionResult apply_construction(const std::string &name, const ConstructionInputs &in,
                                      const ConstructionOptions &opt)
{
	const Entry &e = entry(name);
	check_hypotheses(e, in, opt);

	const Field &field = in.algebra.field();
	Env env(in, field);
	if (e.need.kind == "rota-baxter" && e.need.fixed_weight)
		env.lambda = field.from_int(*e.need.fixed_weight);

	ConstructionRecord rec;
	rec.name = name;
	rec.inputs.push_back(in.algebra.label);
	if (in.second)
		rec.inputs.push_back(in.second->label);
	if (!e.need.kind.empty())
	{
		rec.operator_matrix = in.op->str_matrix();
		rec.inputs.push_back(e.need.kind + " operator");
	}
	if (e.need.kind == "rota-baxter")
		rec.scalars["lambda"] = env.lambda.str();
	if (e.q_hypothesis)
		rec.scalars["q"] = env.q.str();
	rec.claimed_class = e.info.produces;
	if (!opt.check_hypotheses)
		rec.notes.push_back("hypotheses not checked");

	AlgebraPresentation out = e.build(env);
	if (e.annotate)
		e.annotate(env, out, rec);
	if (opt.verify)
	{
		rec.report = check_structure(out, rec.claimed_class, opt.check);
		rec.verified = rec.report->passed();
	}

	std::string args = in.algebra.label;
	if (in.second)
		args += ", " + in.second->label;
	out.label = fmt::format("{}({})", name, args);
	out.declared_class = rec.claimed_class.tag();
	out.provenance = in.algebra.provenance;
	out.provenance.push_back({name, rec.inputs, rec.scalars, rec.operator_matrix, rec.claimed_class.tag(), rec.verified});
	return {std::move(out), std::move(rec)};
}

} // namespace calg
