#include "naive.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

using calg::ClassKind;
using calg::Field;
using calg::Scalar;
using Vec = std::vector<Scalar>;

struct Dense
{
	std::size_t d = 0;
	Field f = Field::rationals();
	std::vector<int> orders;
	std::vector<std::vector<Scalar>> gen;
	std::vector<std::vector<int>> deg;
	std::map<std::string, std::vector<Scalar>> t2, t3;

	std::vector<int> add(const std::vector<int> &a, const std::vector<int> &b) const
	{
		std::vector<int> c(orders.size());
		for (std::size_t i = 0; i < orders.size(); ++i)
			c[i] = (a[i] + b[i]) % orders[i];
		return c;
	}

	Scalar eps(const std::vector<int> &a, const std::vector<int> &b) const
	{
		Scalar s = f.one();
		for (std::size_t i = 0; i < orders.size(); ++i)
			for (std::size_t j = 0; j < orders.size(); ++j)
				s = s * gen[i][j].pow(static_cast<std::int64_t>(a[i]) * b[j]);
		return s;
	}

	Vec zero() const { return Vec(d, f.zero()); }
	Vec e(std::size_t i) const
	{
		Vec v = zero();
		v[i] = f.one();
		return v;
	}

	Vec bin(const std::string &op, const Vec &u, const Vec &v) const
	{
		const auto &c = t2.at(op);
		Vec out = zero();
		for (std::size_t i = 0; i < d; ++i)
			for (std::size_t j = 0; j < d; ++j)
			{
				if (u[i].is_zero() || v[j].is_zero())
					continue;
				Scalar s = u[i] * v[j];
				for (std::size_t k = 0; k < d; ++k)
					out[k] = out[k] + s * c[(i * d + j) * d + k];
			}
		return out;
	}

	Vec ter(const std::string &op, const Vec &u, const Vec &v, const Vec &w) const
	{
		const auto &c = t3.at(op);
		Vec out = zero();
		for (std::size_t i = 0; i < d; ++i)
			for (std::size_t j = 0; j < d; ++j)
				for (std::size_t l = 0; l < d; ++l)
				{
					if (u[i].is_zero() || v[j].is_zero() || w[l].is_zero())
						continue;
					Scalar s = u[i] * v[j] * w[l];
					for (std::size_t k = 0; k < d; ++k)
						out[k] = out[k] + s * c[((i * d + j) * d + l) * d + k];
				}
		return out;
	}
};

Vec operator+(Vec a, const Vec &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] = a[i] + b[i];
	return a;
}

Vec operator-(Vec a, const Vec &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] = a[i] - b[i];
	return a;
}

Vec operator*(const Scalar &s, Vec a)
{
	for (auto &x : a)
		x = s * x;
	return a;
}

struct Axiom
{
	std::string id;
	std::size_t vars;
	// lhs - rhs on the basis tuple
	std::function<Vec(const Tuple &)> defect;
};

Dense densify(const calg::AlgebraPresentation &a)
{
	Dense D;
	D.d = a.dim();
	D.f = a.field();
	D.orders = a.space().group().cyclic_orders();
	D.gen = a.eps().generator_matrix();
	for (const auto &deg : a.space().degrees())
		D.deg.push_back(deg.components);
	for (const auto &[name, op] : a.ops())
	{
		std::size_t n = 1;
		for (std::size_t k = 0; k <= op.arity(); ++k)
			n *= D.d;
		std::vector<Scalar> t(n, D.f.zero());
		for (const auto &e : op.entries())
		{
			std::size_t idx = 0;
			for (auto i : e.args)
				idx = idx * D.d + i;
			idx = idx * D.d + e.out;
			t[idx] = t[idx] + e.coefficient;
		}
		if (op.arity() == 2)
			D.t2[name] = std::move(t);
		else if (op.arity() == 3)
			D.t3[name] = std::move(t);
	}
	return D;
}

std::vector<Axiom> axioms(const Dense &D, const calg::StructureClass &cls)
{
	std::vector<Axiom> ax;
	const Dense *P = &D;
	auto g = [P](std::size_t i) { return P->deg[i]; };
	auto E = [P](const std::vector<int> &a, const std::vector<int> &b) { return P->eps(a, b); };
	auto sum = [P](const std::vector<int> &a, const std::vector<int> &b) { return P->add(a, b); };

	auto assoc = [&](const std::string &op, const std::string &id) {
		ax.push_back({id, 3, [P, op](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return P->bin(op, P->bin(op, x, y), z) - P->bin(op, x, P->bin(op, y, z));
		              }});
	};
	auto skew = [&](const std::string &op) {
		ax.push_back({"eps-skew-symmetry", 2, [P, op, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]);
			              return P->bin(op, x, y) + E(g(t[0]), g(t[1])) * P->bin(op, y, x);
		              }});
	};
	// eps(z,x)[x,[y,z]] + eps(x,y)[y,[z,x]] + eps(y,z)[z,[x,y]]
	auto jacobi = [&](std::function<Vec(const Vec &, const std::vector<int> &, const Vec &, const std::vector<int> &)> br) {
		ax.push_back({"eps-jacobi", 3, [P, br, g, E, sum](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              auto gx = g(t[0]), gy = g(t[1]), gz = g(t[2]);
			              return E(gz, gx) * br(x, gx, br(y, gy, z, gz), sum(gy, gz)) +
			                     E(gx, gy) * br(y, gy, br(z, gz, x, gx), sum(gz, gx)) +
			                     E(gy, gz) * br(z, gz, br(x, gx, y, gy), sum(gx, gy));
		              }});
	};
	auto plain_bracket = [P](const std::string &op) {
		return [P, op](const Vec &u, const std::vector<int> &, const Vec &v, const std::vector<int> &) {
			return P->bin(op, u, v);
		};
	};
	auto leibniz = [&](const std::string &op) {
		ax.push_back({"leibniz-identity", 3, [P, op, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return P->bin(op, P->bin(op, x, y), z) - P->bin(op, x, P->bin(op, y, z)) -
			                     E(g(t[1]), g(t[2])) * P->bin(op, P->bin(op, x, z), y);
		              }});
	};
	auto nambu = [&](const std::string &op) {
		ax.push_back({"ternary-nambu", 5, [P, op, g, E, sum](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]), s = P->e(t[3]), u = P->e(t[4]);
			              auto gtu = sum(g(t[3]), g(t[4]));
			              auto T = [&](const Vec &a, const Vec &b, const Vec &c) { return P->ter(op, a, b, c); };
			              return T(T(x, y, z), s, u) - T(x, y, T(z, s, u)) - E(g(t[2]), gtu) * T(x, T(y, s, u), z) -
			                     E(sum(g(t[1]), g(t[2])), gtu) * T(T(x, s, u), y, z);
		              }});
	};
	auto tern = [P](const std::string &op) {
		return [P, op](const Vec &a, const Vec &b, const Vec &c) { return P->ter(op, a, b, c); };
	};

	const std::string mul = calg::slot::mul, br = calg::slot::bracket, T3 = calg::slot::ternary;
	const std::string L = calg::slot::left, R = calg::slot::right, M = calg::slot::middle;

	switch (cls.kind)
	{
	case ClassKind::Associative:
		assoc(mul, "associativity");
		break;
	case ClassKind::LieColor:
		skew(br);
		jacobi(plain_bracket(br));
		break;
	case ClassKind::LeibnizColor:
		leibniz(br);
		break;
	case ClassKind::TernaryLeibniz:
		nambu(T3);
		break;
	case ClassKind::TernaryLieColor: {
		auto T = tern(T3);
		ax.push_back({"eps-skew-12", 3, [P, T, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return T(x, y, z) + E(g(t[0]), g(t[1])) * T(y, x, z);
		              }});
		ax.push_back({"eps-skew-23", 3, [P, T, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return T(x, y, z) + E(g(t[1]), g(t[2])) * T(x, z, y);
		              }});
		// composite of the three adjacent swaps 12, 23, 12
		ax.push_back({"eps-skew-13", 3, [P, T, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              Scalar s = E(g(t[0]), g(t[1])) * E(g(t[0]), g(t[2])) * E(g(t[1]), g(t[2]));
			              return T(x, y, z) + s * T(z, y, x);
		              }});
		nambu(T3);
		break;
	}
	case ClassKind::LieTriple: {
		auto T = tern(T3);
		ax.push_back({"right-eps-skew-symmetry", 3, [P, T, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return T(x, y, z) + E(g(t[1]), g(t[2])) * T(x, z, y);
		              }});
		ax.push_back({"ternary-eps-jacobi", 3, [P, T, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              auto gx = g(t[0]), gy = g(t[1]), gz = g(t[2]);
			              return E(gz, gx) * T(x, y, z) + E(gx, gy) * T(y, z, x) + E(gy, gz) * T(z, x, y);
		              }});
		nambu(T3);
		break;
	}
	case ClassKind::JordanTriple: {
		auto T = tern(T3);
		ax.push_back({"outer-eps-symmetry", 3, [P, T, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              Scalar s = E(g(t[0]), g(t[1])) * E(g(t[0]), g(t[2])) * E(g(t[1]), g(t[2]));
			              return T(x, y, z) - s * T(z, y, x);
		              }});
		ax.push_back({"color-jordan-triple", 5, [P, T, g, E, sum](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]), s = P->e(t[3]), u = P->e(t[4]);
			              auto gtu = sum(g(t[3]), g(t[4]));
			              return T(T(x, y, z), s, u) - T(x, y, T(z, s, u)) +
			                     (E(g(t[2]), gtu) * E(g(t[3]), g(t[4]))) * T(x, T(y, u, s), z) -
			                     E(sum(g(t[1]), g(t[2])), gtu) * T(T(x, s, u), y, z);
		              }});
		break;
	}
	case ClassKind::LeftSymmetric:
		ax.push_back({"left-symmetry", 3, [P, mul, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              auto m = [&](const Vec &a, const Vec &b) { return P->bin(mul, a, b); };
			              return m(m(x, y), z) - m(x, m(y, z)) - E(g(t[0]), g(t[1])) * (m(m(y, x), z) - m(y, m(x, z)));
		              }});
		break;
	case ClassKind::LieAdmissible:
		jacobi([P, mul, E](const Vec &u, const std::vector<int> &gu, const Vec &v,
		                   const std::vector<int> &gv) { return P->bin(mul, u, v) - E(gu, gv) * P->bin(mul, v, u); });
		break;
	case ClassKind::PostLie:
		skew(br);
		jacobi(plain_bracket(br));
		ax.push_back({"post-lie-derivation", 3, [P, mul, br, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              auto m = [&](const Vec &a, const Vec &b) { return P->bin(mul, a, b); };
			              auto b = [&](const Vec &a, const Vec &c) { return P->bin(br, a, c); };
			              return m(z, b(x, y)) - b(m(z, x), y) - E(g(t[2]), g(t[0])) * b(x, m(z, y));
		              }});
		ax.push_back({"post-lie-associator", 3, [P, mul, br, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              auto m = [&](const Vec &a, const Vec &b) { return P->bin(mul, a, b); };
			              auto b = [&](const Vec &a, const Vec &c) { return P->bin(br, a, c); };
			              Scalar s = E(g(t[2]), g(t[1]));
			              return m(z, m(y, x)) - s * m(y, m(z, x)) + s * m(m(y, z), x) - m(m(z, y), x) +
			                     s * m(b(y, z), x);
		              }});
		break;
	case ClassKind::LeftSymmetricDialgebra: {
		auto l = [P, L](const Vec &a, const Vec &b) { return P->bin(L, a, b); };
		auto r = [P, R](const Vec &a, const Vec &b) { return P->bin(R, a, b); };
		ax.push_back({"ls-dialgebra-1", 3, [P, l, r](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return l(x, l(y, z)) - l(x, r(y, z));
		              }});
		ax.push_back({"ls-dialgebra-2", 3, [P, l, r](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return r(r(x, y), z) - r(l(x, y), z);
		              }});
		ax.push_back({"ls-dialgebra-3", 3, [P, l, r, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return l(x, l(y, z)) - l(l(x, y), z) - E(g(t[0]), g(t[1])) * (r(y, l(x, z)) - l(r(y, x), z));
		              }});
		ax.push_back({"ls-dialgebra-4", 3, [P, r, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return r(x, r(y, z)) - r(r(x, y), z) - E(g(t[0]), g(t[1])) * (r(y, r(x, z)) - r(r(y, x), z));
		              }});
		break;
	}
	case ClassKind::AssociativeDialgebra:
	case ClassKind::Trialgebra: {
		// (outer, inner, inner-on-left) identities p(q(x,y),z) = r(x, s(y,z))
		struct Rule
		{
			const char *id;
			std::string lo, li;
			bool left_nested;
			std::string ro, ri;
			bool right_left_nested;
		};
		std::vector<Rule> rules;
		if (cls.kind == ClassKind::AssociativeDialgebra)
			rules = {{"dialgebra-1", L, R, true, R, L, false},  {"dialgebra-2", L, L, false, L, L, true},
			         {"dialgebra-3", L, L, true, L, R, false},  {"dialgebra-4", R, R, true, R, R, false},
			         {"dialgebra-5", R, R, false, R, L, true}};
		else
			rules = {{"assoc-left", L, L, true, L, L, false},     {"assoc-middle", M, M, true, M, M, false},
			         {"assoc-right", R, R, true, R, R, false},    {"trialgebra-1a", L, L, true, L, R, false},
			         {"trialgebra-1b", L, R, false, L, M, false}, {"trialgebra-2", L, R, true, R, L, false},
			         {"trialgebra-3a", R, L, true, R, R, false},  {"trialgebra-3b", R, R, false, R, M, true},
			         {"trialgebra-4", L, M, true, M, L, false},   {"trialgebra-5", M, L, true, M, R, false},
			         {"trialgebra-6", M, R, true, R, M, false}};
		for (const auto &rule : rules)
			ax.push_back({rule.id, 3, [P, rule](const Tuple &t) {
				              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
				              auto side = [&](const std::string &o, const std::string &i, bool left_nested) {
					              return left_nested ? P->bin(o, P->bin(i, x, y), z) : P->bin(o, x, P->bin(i, y, z));
				              };
				              return side(rule.lo, rule.li, rule.left_nested) - side(rule.ro, rule.ri, rule.right_left_nested);
			              }});
		break;
	}
	case ClassKind::Dendriform:
	case ClassKind::QTridendriform: {
		const bool tri = cls.kind == ClassKind::QTridendriform;
		const std::string pre = tri ? "q-tridendriform" : "dendriform";
		Scalar q = D.f.from_fraction(cls.q);
		auto l = [P, L](const Vec &a, const Vec &b) { return P->bin(L, a, b); };
		auto r = [P, R](const Vec &a, const Vec &b) { return P->bin(R, a, b); };
		auto dt = [P, mul, tri](const Vec &a, const Vec &b) { return tri ? P->bin(mul, a, b) : P->zero(); };
		ax.push_back({pre + "-1", 3, [P, l, r, dt, q, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              Scalar s = E(g(t[2]), g(t[1]));
			              return l(l(x, y), z) - l(x, l(y, z) + s * r(y, z) + (q * s) * dt(y, z));
		              }});
		ax.push_back({pre + "-2", 3, [P, l, r, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return l(r(x, y), z) - E(g(t[2]), g(t[0])) * r(x, l(y, z));
		              }});
		ax.push_back({pre + "-3", 3, [P, l, r, dt, q, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return r(x, r(y, z)) - r(E(g(t[0]), g(t[1])) * l(x, y) + r(x, y) + q * dt(x, y), z);
		              }});
		if (!tri)
			break;
		ax.push_back({pre + "-4", 3, [P, l, r, dt, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return dt(l(x, y), z) - E(g(t[1]), g(t[0])) * dt(x, r(y, z));
		              }});
		ax.push_back({pre + "-5", 3, [P, r, dt](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return dt(r(x, y), z) - r(x, dt(y, z));
		              }});
		ax.push_back({pre + "-6", 3, [P, l, dt, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              return l(dt(x, y), z) - E(g(t[2]), g(t[0])) * dt(x, l(y, z));
		              }});
		assoc(mul, pre + "-7");
		break;
	}
	case ClassKind::LeibnizPoisson:
		assoc(mul, "associativity");
		leibniz(br);
		ax.push_back({"right-leibniz", 3, [P, mul, br, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]);
			              auto m = [&](const Vec &a, const Vec &b) { return P->bin(mul, a, b); };
			              auto b = [&](const Vec &a, const Vec &c) { return P->bin(br, a, c); };
			              return b(m(x, y), z) - m(x, b(y, z)) - E(g(t[1]), g(t[2])) * m(b(x, z), y);
		              }});
		break;
	case ClassKind::TernaryLNP: {
		assoc(mul, "associativity");
		nambu(T3);
		auto T = tern(T3);
		ax.push_back({"right-ternary-leibniz", 4, [P, mul, T, g, E, sum](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]), z = P->e(t[2]), s = P->e(t[3]);
			              auto m = [&](const Vec &a, const Vec &b) { return P->bin(mul, a, b); };
			              return T(m(x, y), z, s) - m(x, T(y, z, s)) - E(g(t[1]), sum(g(t[2]), g(t[3]))) * m(T(x, z, s), y);
		              }});
		break;
	}
	case ClassKind::EpsCommutative:
		ax.push_back({"eps-commutativity", 2, [P, mul, g, E](const Tuple &t) {
			              Vec x = P->e(t[0]), y = P->e(t[1]);
			              return P->bin(mul, x, y) - E(g(t[0]), g(t[1])) * P->bin(mul, y, x);
		              }});
		break;
	}
	return ax;
}

bool needs(const Dense &D, ClassKind k)
{
	auto two = [&](std::initializer_list<const char *> ops) {
		for (const char *o : ops)
			if (!D.t2.count(o))
				return false;
		return true;
	};
	switch (k)
	{
	case ClassKind::Associative:
	case ClassKind::LeftSymmetric:
	case ClassKind::LieAdmissible:
	case ClassKind::EpsCommutative:
		return two({"mul"});
	case ClassKind::LieColor:
	case ClassKind::LeibnizColor:
		return two({"bracket"});
	case ClassKind::TernaryLeibniz:
	case ClassKind::TernaryLieColor:
	case ClassKind::LieTriple:
	case ClassKind::JordanTriple:
		return D.t3.count("ternary") != 0;
	case ClassKind::PostLie:
	case ClassKind::LeibnizPoisson:
		return two({"mul", "bracket"});
	case ClassKind::LeftSymmetricDialgebra:
	case ClassKind::AssociativeDialgebra:
	case ClassKind::Dendriform:
		return two({"left", "right"});
	case ClassKind::Trialgebra:
		return two({"left", "middle", "right"});
	case ClassKind::QTridendriform:
		return two({"left", "right", "mul"});
	case ClassKind::TernaryLNP:
		return two({"mul"}) && D.t3.count("ternary") != 0;
	}
	return false;
}

} // namespace

calg::AlgebraPresentation saturate(const calg::AlgebraPresentation &a)
{
	using namespace calg;
	const MultiOp *b = nullptr;
	for (const auto &name : {slot::mul, slot::bracket, slot::left, slot::right, slot::middle})
		if (a.has_op(name) && a.op(name).arity() == 2)
		{
			b = &a.op(name);
			break;
		}
	if (!b)
		return a;
	AlgebraPresentation out = a;
	auto fill = [&](const std::string &name, std::size_t arity, auto f) {
		if (!out.has_op(name))
			out.set_op(name, tabulate_op(a, arity, f));
	};
	fill(slot::mul, 2, [&](std::span<const std::size_t> t) { return b->eval({t[0], t[1]}); });
	fill(slot::bracket, 2, [&](std::span<const std::size_t> t) { return b->eval({t[0], t[1]}) - b->eval({t[1], t[0]}); });
	fill(slot::left, 2, [&](std::span<const std::size_t> t) { return b->eval({t[0], t[1]}); });
	fill(slot::right, 2, [&](std::span<const std::size_t> t) { return b->eval({t[1], t[0]}); });
	fill(slot::middle, 2, [&](std::span<const std::size_t> t) { return b->eval({t[0], t[1]}) + b->eval({t[1], t[0]}); });
	fill(slot::ternary, 3, [&](std::span<const std::size_t> t) { return (*b)(b->eval({t[0], t[1]}), a.basis(t[2])); });
	out.label = a.label + "+saturated";
	return out;
}

std::optional<Verdicts> check(const calg::AlgebraPresentation &a, const calg::StructureClass &cls)
{
	Dense D = densify(a);
	if (!needs(D, cls.kind))
		return std::nullopt;
	Verdicts out;
	for (const auto &ax : axioms(D, cls))
	{
		AxiomOutcome o;
		Tuple t(ax.vars, 0);
		for (;;)
		{
			++o.tuples;
			Vec dv = ax.defect(t);
			for (const auto &c : dv)
				if (!c.is_zero())
				{
					o.failing.insert(t);
					break;
				}
			std::size_t k = ax.vars;
			while (k > 0 && ++t[k - 1] == D.d)
				t[--k] = 0;
			if (k == 0)
				break;
		}
		out.emplace_back(ax.id, std::move(o));
	}
	return out;
}

std::vector<std::string> disagreements(const calg::AlgebraPresentation &a, const calg::StructureClass &cls)
{
	std::vector<std::string> out;
	auto where = [&](const std::string &what) { return a.label + " / " + cls.tag() + ": " + what; };
	std::optional<Verdicts> ref = check(a, cls);
	std::optional<calg::AxiomReport> lib;
	calg::CheckOptions opt;
	opt.failure_cap = calg::unlimited_failures;
	try
	{
		lib = calg::check_structure(a, cls, opt);
	}
	catch (const calg::InputError &)
	{
	}
	if (ref.has_value() != lib.has_value())
	{
		out.push_back(where(ref ? "library refused a checkable input" : "library checked an input missing a slot"));
		return out;
	}
	if (!ref)
		return out;
	if (ref->size() != lib->axioms.size())
	{
		out.push_back(where("axiom lists differ in length"));
		return out;
	}
	for (std::size_t k = 0; k < ref->size(); ++k)
	{
		const auto &[id, o] = (*ref)[k];
		const calg::AxiomSummary &s = lib->axioms[k];
		if (s.id != id)
			out.push_back(where("axiom " + s.id + " where the oracle has " + id));
		if (s.tuples != o.tuples)
			out.push_back(where(id + " tuple count"));
		std::set<Tuple> got;
		for (const auto &f : lib->failures)
			if (f.axiom == id)
				got.insert(f.witness);
		if (got != o.failing || s.failures != o.failing.size())
			out.push_back(where(id + " witness set"));
	}
	if (lib->passed() != std::all_of(ref->begin(), ref->end(), [](const auto &p) { return p.second.failing.empty(); }))
		out.push_back(where("verdict"));
	return out;
}

} // namespace oracle
