#include "calg/structure.hpp"

#include <array>

#include <fmt/format.h>

#include "context.hpp"

namespace calg {

namespace {

using detail::Context;
using Tuple = std::span<const std::size_t>;

struct ClassInfo
{
	ClassKind kind;
	const char *tag;
	std::vector<std::pair<std::string, std::size_t>> ops;
	std::size_t max_vars;
};

const std::vector<ClassInfo> &class_table()
{
	static const std::vector<ClassInfo> table = {
	    {ClassKind::Associative, "associative", {{slot::mul, 2}}, 3},
	    {ClassKind::LieColor, "lie-color", {{slot::bracket, 2}}, 3},
	    {ClassKind::LeibnizColor, "leibniz-color", {{slot::bracket, 2}}, 3},
	    {ClassKind::TernaryLeibniz, "ternary-leibniz", {{slot::ternary, 3}}, 5},
	    {ClassKind::TernaryLieColor, "ternary-lie-color", {{slot::ternary, 3}}, 5},
	    {ClassKind::LieTriple, "lie-triple", {{slot::ternary, 3}}, 5},
	    {ClassKind::JordanTriple, "jordan-triple", {{slot::ternary, 3}}, 5},
	    {ClassKind::LeftSymmetric, "left-symmetric", {{slot::mul, 2}}, 3},
	    {ClassKind::LieAdmissible, "lie-admissible", {{slot::mul, 2}}, 3},
	    {ClassKind::PostLie, "post-lie", {{slot::bracket, 2}, {slot::mul, 2}}, 3},
	    {ClassKind::LeftSymmetricDialgebra, "left-symmetric-dialgebra", {{slot::left, 2}, {slot::right, 2}}, 3},
	    {ClassKind::AssociativeDialgebra, "associative-dialgebra", {{slot::left, 2}, {slot::right, 2}}, 3},
	    {ClassKind::Trialgebra, "trialgebra", {{slot::left, 2}, {slot::middle, 2}, {slot::right, 2}}, 3},
	    {ClassKind::Dendriform, "dendriform", {{slot::left, 2}, {slot::right, 2}}, 3},
	    {ClassKind::QTridendriform, "q-tridendriform", {{slot::left, 2}, {slot::right, 2}, {slot::mul, 2}}, 3},
	    {ClassKind::LeibnizPoisson, "leibniz-poisson", {{slot::mul, 2}, {slot::bracket, 2}}, 3},
	    {ClassKind::TernaryLNP, "ternary-lnp", {{slot::mul, 2}, {slot::ternary, 3}}, 5},
	    {ClassKind::EpsCommutative, "eps-commutative", {{slot::mul, 2}}, 2},
	};
	return table;
}

const ClassInfo &info(ClassKind k)
{
	for (const auto &i : class_table())
		if (i.kind == k)
			return i;
	throw Error("unknown structure class");
}

// ---------------------------------------------------------------- axiom families

void associativity(std::vector<Identity> &ids, const Context &c, const MultiOp &m, std::string id)
{
	ids.push_back({std::move(id), {0, 0, 0}, [&c, &m](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{m(m(x, y), z), m(x, m(y, z))};
	               }});
}

void eps_skew(std::vector<Identity> &ids, const Context &c, const MultiOp &b)
{
	ids.push_back({"eps-skew-symmetry", {0, 0}, [&c, &b](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]];
		               return Sides{b(x, y), -c.eps(c.deg(t[0]), c.deg(t[1])) * b(y, x)};
	               }});
}

// eps(z,x)[x,[y,z]] + eps(x,y)[y,[z,x]] + eps(y,z)[z,[x,y]] = 0 for a bracket
// given as a function of (u, deg u, v, deg v).
template <class Br> Sides jacobi_sides(const Context &c, Tuple t, const Br &br)
{
	const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
	std::size_t gx = c.deg(t[0]), gy = c.deg(t[1]), gz = c.deg(t[2]);
	Vector lhs = c.eps(gz, gx) * br(x, gx, br(y, gy, z, gz), c.sum(gy, gz));
	lhs.add_scaled(c.eps(gx, gy), br(y, gy, br(z, gz, x, gx), c.sum(gz, gx)));
	lhs.add_scaled(c.eps(gy, gz), br(z, gz, br(x, gx, y, gy), c.sum(gx, gy)));
	return Sides{std::move(lhs), c.zero()};
}

void eps_jacobi(std::vector<Identity> &ids, const Context &c, const MultiOp &b)
{
	ids.push_back({"eps-jacobi", {0, 0, 0}, [&c, &b](Tuple t) {
		               return jacobi_sides(c, t, [&b](const Vector &u, std::size_t, const Vector &v, std::size_t) {
			               return b(u, v);
		               });
	               }});
}

void leibniz(std::vector<Identity> &ids, const Context &c, const MultiOp &b)
{
	ids.push_back({"leibniz-identity", {0, 0, 0}, [&c, &b](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               Vector rhs = b(x, b(y, z));
		               rhs.add_scaled(c.eps(c.deg(t[1]), c.deg(t[2])), b(b(x, z), y));
		               return Sides{b(b(x, y), z), std::move(rhs)};
	               }});
}

void ternary_nambu(std::vector<Identity> &ids, const Context &c, const MultiOp &T)
{
	ids.push_back({"ternary-nambu", {0, 0, 0, 0, 0}, [&c, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]], &s = c.e[t[3]], &u = c.e[t[4]];
		               std::size_t gy = c.deg(t[1]), gz = c.deg(t[2]);
		               std::size_t gtu = c.sum(c.deg(t[3]), c.deg(t[4]));
		               Vector rhs = T(x, y, T(z, s, u));
		               rhs.add_scaled(c.eps(gz, gtu), T(x, T(y, s, u), z));
		               rhs.add_scaled(c.eps(c.sum(gy, gz), gtu), T(T(x, s, u), y, z));
		               return Sides{T(T(x, y, z), s, u), std::move(rhs)};
	               }});
}

void ternary_skew(std::vector<Identity> &ids, const Context &c, const MultiOp &T)
{
	ids.push_back({"eps-skew-12", {0, 0, 0}, [&c, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{T(x, y, z), -c.eps(c.deg(t[0]), c.deg(t[1])) * T(y, x, z)};
	               }});
	ids.push_back({"eps-skew-23", {0, 0, 0}, [&c, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{T(x, y, z), -c.eps(c.deg(t[1]), c.deg(t[2])) * T(x, z, y)};
	               }});
	ids.push_back({"eps-skew-13", {0, 0, 0}, [&c, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               std::size_t gx = c.deg(t[0]), gy = c.deg(t[1]), gz = c.deg(t[2]);
		               Scalar s = c.eps(gx, gy) * c.eps(gx, gz) * c.eps(gy, gz);
		               return Sides{T(x, y, z), -s * T(z, y, x)};
	               }});
}

void right_skew(std::vector<Identity> &ids, const Context &c, const MultiOp &T)
{
	ids.push_back({"right-eps-skew-symmetry", {0, 0, 0}, [&c, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{T(x, y, z), -c.eps(c.deg(t[1]), c.deg(t[2])) * T(x, z, y)};
	               }});
}

void ternary_jacobi(std::vector<Identity> &ids, const Context &c, const MultiOp &T)
{
	ids.push_back({"ternary-eps-jacobi", {0, 0, 0}, [&c, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               std::size_t gx = c.deg(t[0]), gy = c.deg(t[1]), gz = c.deg(t[2]);
		               Vector lhs = c.eps(gz, gx) * T(x, y, z);
		               lhs.add_scaled(c.eps(gx, gy), T(y, z, x));
		               lhs.add_scaled(c.eps(gy, gz), T(z, x, y));
		               return Sides{std::move(lhs), c.zero()};
	               }});
}

void jordan(std::vector<Identity> &ids, const Context &c, const MultiOp &T)
{
	ids.push_back({"outer-eps-symmetry", {0, 0, 0}, [&c, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               std::size_t gx = c.deg(t[0]), gy = c.deg(t[1]), gz = c.deg(t[2]);
		               Scalar s = c.eps(gx, gy) * c.eps(gx, gz) * c.eps(gy, gz);
		               return Sides{T(x, y, z), s * T(z, y, x)};
	               }});
	ids.push_back({"color-jordan-triple", {0, 0, 0, 0, 0}, [&c, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]], &s = c.e[t[3]], &u = c.e[t[4]];
		               std::size_t gy = c.deg(t[1]), gz = c.deg(t[2]), gt = c.deg(t[3]), gu = c.deg(t[4]);
		               std::size_t gtu = c.sum(gt, gu);
		               Vector rhs = T(x, y, T(z, s, u));
		               rhs.add_scaled(-(c.eps(gz, gtu) * c.eps(gt, gu)), T(x, T(y, u, s), z));
		               rhs.add_scaled(c.eps(c.sum(gy, gz), gtu), T(T(x, s, u), y, z));
		               return Sides{T(T(x, y, z), s, u), std::move(rhs)};
	               }});
}

void left_symmetry(std::vector<Identity> &ids, const Context &c, const MultiOp &m)
{
	ids.push_back({"left-symmetry", {0, 0, 0}, [&c, &m](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               Vector lhs = m(m(x, y), z) - m(x, m(y, z));
		               Vector rhs = c.eps(c.deg(t[0]), c.deg(t[1])) * (m(m(y, x), z) - m(y, m(x, z)));
		               return Sides{std::move(lhs), std::move(rhs)};
	               }});
}

void lie_admissible(std::vector<Identity> &ids, const Context &c, const MultiOp &m)
{
	ids.push_back({"eps-jacobi", {0, 0, 0}, [&c, &m](Tuple t) {
		               return jacobi_sides(c, t, [&c, &m](const Vector &u, std::size_t gu, const Vector &v, std::size_t gv) {
			               Vector r = m(u, v);
			               r.add_scaled(-c.eps(gu, gv), m(v, u));
			               return r;
		               });
	               }});
}

void post_lie(std::vector<Identity> &ids, const Context &c, const MultiOp &b, const MultiOp &m)
{
	ids.push_back({"post-lie-derivation", {0, 0, 0}, [&c, &b, &m](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               Vector lhs = m(z, b(x, y)) - b(m(z, x), y);
		               lhs.add_scaled(-c.eps(c.deg(t[2]), c.deg(t[0])), b(x, m(z, y)));
		               return Sides{std::move(lhs), c.zero()};
	               }});
	ids.push_back({"post-lie-associator", {0, 0, 0}, [&c, &b, &m](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               const Scalar &ezy = c.eps(c.deg(t[2]), c.deg(t[1]));
		               Vector lhs = m(z, m(y, x));
		               lhs.add_scaled(-ezy, m(y, m(z, x)));
		               lhs.add_scaled(ezy, m(m(y, z), x));
		               lhs -= m(m(z, y), x);
		               lhs.add_scaled(ezy, m(b(y, z), x));
		               return Sides{std::move(lhs), c.zero()};
	               }});
}

void ls_dialgebra(std::vector<Identity> &ids, const Context &c, const MultiOp &L, const MultiOp &R)
{
	ids.push_back({"ls-dialgebra-1", {0, 0, 0}, [&c, &L, &R](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{L(x, L(y, z)), L(x, R(y, z))};
	               }});
	ids.push_back({"ls-dialgebra-2", {0, 0, 0}, [&c, &L, &R](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{R(R(x, y), z), R(L(x, y), z)};
	               }});
	ids.push_back({"ls-dialgebra-3", {0, 0, 0}, [&c, &L, &R](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               Vector rhs = c.eps(c.deg(t[0]), c.deg(t[1])) * (R(y, L(x, z)) - L(R(y, x), z));
		               return Sides{L(x, L(y, z)) - L(L(x, y), z), std::move(rhs)};
	               }});
	ids.push_back({"ls-dialgebra-4", {0, 0, 0}, [&c, &R](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               Vector rhs = c.eps(c.deg(t[0]), c.deg(t[1])) * (R(y, R(x, z)) - R(R(y, x), z));
		               return Sides{R(x, R(y, z)) - R(R(x, y), z), std::move(rhs)};
	               }});
}

// Identities of the form f(x, y, z) = g(x, y, z) built from two binary ops.
using Trilinear = std::function<Vector(const Vector &, const Vector &, const Vector &)>;

void plain(std::vector<Identity> &ids, const Context &c, std::string id, Trilinear lhs, Trilinear rhs)
{
	ids.push_back({std::move(id), {0, 0, 0}, [&c, lhs = std::move(lhs), rhs = std::move(rhs)](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{lhs(x, y, z), rhs(x, y, z)};
	               }});
}

void assoc_dialgebra(std::vector<Identity> &ids, const Context &c, const MultiOp &L, const MultiOp &R)
{
	using V = const Vector &;
	plain(ids, c, "dialgebra-1", [&](V x, V y, V z) { return L(R(x, y), z); }, [&](V x, V y, V z) { return R(x, L(y, z)); });
	plain(ids, c, "dialgebra-2", [&](V x, V y, V z) { return L(x, L(y, z)); }, [&](V x, V y, V z) { return L(L(x, y), z); });
	plain(ids, c, "dialgebra-3", [&](V x, V y, V z) { return L(L(x, y), z); }, [&](V x, V y, V z) { return L(x, R(y, z)); });
	plain(ids, c, "dialgebra-4", [&](V x, V y, V z) { return R(R(x, y), z); }, [&](V x, V y, V z) { return R(x, R(y, z)); });
	plain(ids, c, "dialgebra-5", [&](V x, V y, V z) { return R(x, R(y, z)); }, [&](V x, V y, V z) { return R(L(x, y), z); });
}

void trialgebra(std::vector<Identity> &ids, const Context &c, const MultiOp &L, const MultiOp &P, const MultiOp &R)
{
	using V = const Vector &;
	associativity(ids, c, L, "assoc-left");
	associativity(ids, c, P, "assoc-middle");
	associativity(ids, c, R, "assoc-right");
	plain(ids, c, "trialgebra-1a", [&](V x, V y, V z) { return L(L(x, y), z); }, [&](V x, V y, V z) { return L(x, R(y, z)); });
	plain(ids, c, "trialgebra-1b", [&](V x, V y, V z) { return L(x, R(y, z)); }, [&](V x, V y, V z) { return L(x, P(y, z)); });
	plain(ids, c, "trialgebra-2", [&](V x, V y, V z) { return L(R(x, y), z); }, [&](V x, V y, V z) { return R(x, L(y, z)); });
	plain(ids, c, "trialgebra-3a", [&](V x, V y, V z) { return R(L(x, y), z); }, [&](V x, V y, V z) { return R(x, R(y, z)); });
	plain(ids, c, "trialgebra-3b", [&](V x, V y, V z) { return R(x, R(y, z)); }, [&](V x, V y, V z) { return R(P(x, y), z); });
	plain(ids, c, "trialgebra-4", [&](V x, V y, V z) { return L(P(x, y), z); }, [&](V x, V y, V z) { return P(x, L(y, z)); });
	plain(ids, c, "trialgebra-5", [&](V x, V y, V z) { return P(L(x, y), z); }, [&](V x, V y, V z) { return P(x, R(y, z)); });
	plain(ids, c, "trialgebra-6", [&](V x, V y, V z) { return P(R(x, y), z); }, [&](V x, V y, V z) { return R(x, P(y, z)); });
}

// The q-tridendriform axioms; `dot` == nullptr gives the dendriform subset.
void tridendriform(std::vector<Identity> &ids, const Context &c, const MultiOp &L, const MultiOp &R, const MultiOp *dot,
                   const Scalar &q, const std::string &prefix)
{
	ids.push_back({prefix + "-1", {0, 0, 0}, [&c, &L, &R, dot, q](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               const Scalar &ezy = c.eps(c.deg(t[2]), c.deg(t[1]));
		               Vector inner = L(y, z);
		               inner.add_scaled(ezy, R(y, z));
		               if (dot)
			               inner.add_scaled(q * ezy, (*dot)(y, z));
		               return Sides{L(L(x, y), z), L(x, inner)};
	               }});
	ids.push_back({prefix + "-2", {0, 0, 0}, [&c, &L, &R](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{L(R(x, y), z), c.eps(c.deg(t[2]), c.deg(t[0])) * R(x, L(y, z))};
	               }});
	ids.push_back({prefix + "-3", {0, 0, 0}, [&c, &L, &R, dot, q](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               Vector inner = c.eps(c.deg(t[0]), c.deg(t[1])) * L(x, y);
		               inner += R(x, y);
		               if (dot)
			               inner.add_scaled(q, (*dot)(x, y));
		               return Sides{R(x, R(y, z)), R(inner, z)};
	               }});
	if (!dot)
		return;
	const MultiOp &D = *dot;
	ids.push_back({prefix + "-4", {0, 0, 0}, [&c, &L, &R, &D](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{D(L(x, y), z), c.eps(c.deg(t[1]), c.deg(t[0])) * D(x, R(y, z))};
	               }});
	ids.push_back({prefix + "-5", {0, 0, 0}, [&c, &R, &D](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{D(R(x, y), z), R(x, D(y, z))};
	               }});
	ids.push_back({prefix + "-6", {0, 0, 0}, [&c, &L, &D](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               return Sides{L(D(x, y), z), c.eps(c.deg(t[2]), c.deg(t[0])) * D(x, L(y, z))};
	               }});
	associativity(ids, c, D, prefix + "-7");
}

void right_leibniz(std::vector<Identity> &ids, const Context &c, const MultiOp &m, const MultiOp &b)
{
	ids.push_back({"right-leibniz", {0, 0, 0}, [&c, &m, &b](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
		               Vector rhs = m(x, b(y, z));
		               rhs.add_scaled(c.eps(c.deg(t[1]), c.deg(t[2])), m(b(x, z), y));
		               return Sides{b(m(x, y), z), std::move(rhs)};
	               }});
}

void right_ternary_leibniz(std::vector<Identity> &ids, const Context &c, const MultiOp &m, const MultiOp &T)
{
	ids.push_back({"right-ternary-leibniz", {0, 0, 0, 0}, [&c, &m, &T](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]], &s = c.e[t[3]];
		               Vector rhs = m(x, T(y, z, s));
		               rhs.add_scaled(c.eps(c.deg(t[1]), c.sum(c.deg(t[2]), c.deg(t[3]))), m(T(x, z, s), y));
		               return Sides{T(m(x, y), z, s), std::move(rhs)};
	               }});
}

void eps_commutative(std::vector<Identity> &ids, const Context &c, const MultiOp &m)
{
	ids.push_back({"eps-commutativity", {0, 0}, [&c, &m](Tuple t) {
		               const Vector &x = c.e[t[0]], &y = c.e[t[1]];
		               return Sides{m(x, y), c.eps(c.deg(t[0]), c.deg(t[1])) * m(y, x)};
	               }});
}

std::vector<Identity> identities(const Context &c, const StructureClass &cls, const Scalar &q)
{
	const AlgebraPresentation &a = c.a;
	std::vector<Identity> ids;
	switch (cls.kind)
	{
	case ClassKind::Associative:
		associativity(ids, c, a.op(slot::mul), "associativity");
		break;
	case ClassKind::LieColor:
		eps_skew(ids, c, a.op(slot::bracket));
		eps_jacobi(ids, c, a.op(slot::bracket));
		break;
	case ClassKind::LeibnizColor:
		leibniz(ids, c, a.op(slot::bracket));
		break;
	case ClassKind::TernaryLeibniz:
		ternary_nambu(ids, c, a.op(slot::ternary));
		break;
	case ClassKind::TernaryLieColor:
		ternary_skew(ids, c, a.op(slot::ternary));
		ternary_nambu(ids, c, a.op(slot::ternary));
		break;
	case ClassKind::LieTriple:
		right_skew(ids, c, a.op(slot::ternary));
		ternary_jacobi(ids, c, a.op(slot::ternary));
		ternary_nambu(ids, c, a.op(slot::ternary));
		break;
	case ClassKind::JordanTriple:
		jordan(ids, c, a.op(slot::ternary));
		break;
	case ClassKind::LeftSymmetric:
		left_symmetry(ids, c, a.op(slot::mul));
		break;
	case ClassKind::LieAdmissible:
		lie_admissible(ids, c, a.op(slot::mul));
		break;
	case ClassKind::PostLie:
		eps_skew(ids, c, a.op(slot::bracket));
		eps_jacobi(ids, c, a.op(slot::bracket));
		post_lie(ids, c, a.op(slot::bracket), a.op(slot::mul));
		break;
	case ClassKind::LeftSymmetricDialgebra:
		ls_dialgebra(ids, c, a.op(slot::left), a.op(slot::right));
		break;
	case ClassKind::AssociativeDialgebra:
		assoc_dialgebra(ids, c, a.op(slot::left), a.op(slot::right));
		break;
	case ClassKind::Trialgebra:
		trialgebra(ids, c, a.op(slot::left), a.op(slot::middle), a.op(slot::right));
		break;
	case ClassKind::Dendriform:
		tridendriform(ids, c, a.op(slot::left), a.op(slot::right), nullptr, q, "dendriform");
		break;
	case ClassKind::QTridendriform:
		tridendriform(ids, c, a.op(slot::left), a.op(slot::right), &a.op(slot::mul), q, "q-tridendriform");
		break;
	case ClassKind::LeibnizPoisson:
		associativity(ids, c, a.op(slot::mul), "associativity");
		leibniz(ids, c, a.op(slot::bracket));
		right_leibniz(ids, c, a.op(slot::mul), a.op(slot::bracket));
		break;
	case ClassKind::TernaryLNP:
		associativity(ids, c, a.op(slot::mul), "associativity");
		ternary_nambu(ids, c, a.op(slot::ternary));
		right_ternary_leibniz(ids, c, a.op(slot::mul), a.op(slot::ternary));
		break;
	case ClassKind::EpsCommutative:
		eps_commutative(ids, c, a.op(slot::mul));
		break;
	}
	return ids;
}

} // namespace

std::string StructureClass::tag() const
{
	if (kind == ClassKind::QTridendriform)
		return fmt::format("q-tridendriform(q={})", q.get_str());
	return info(kind).tag;
}

StructureClass StructureClass::parse(std::string_view tag, const mpq_class &q)
{
	if (tag == "tridendriform")
		return q_tridendriform(1);
	for (const auto &i : class_table())
		if (tag == i.tag)
			return {i.kind, i.kind == ClassKind::QTridendriform ? q : mpq_class(1)};
	throw InputError(fmt::format("unknown structure class \"{}\"", tag));
}

std::vector<std::pair<std::string, std::size_t>> StructureClass::required_ops() const { return info(kind).ops; }

std::size_t StructureClass::max_variables() const { return info(kind).max_vars; }

std::vector<StructureClass> all_structure_classes()
{
	std::vector<StructureClass> out;
	for (const auto &i : class_table())
		out.push_back(StructureClass::of(i.kind));
	return out;
}

AxiomReport check_structure(const AlgebraPresentation &a, const StructureClass &cls, const CheckOptions &opt)
{
	for (const auto &[name, arity] : cls.required_ops())
	{
		const MultiOp &op = a.op(name);
		if (op.arity() != arity)
			throw InputError(fmt::format("class {} needs \"{}\" of arity {}, found arity {}", cls.tag(), name, arity,
			                             op.arity()));
	}
	if (cls.max_variables() >= 4 && a.dim() > opt.max_dim)
		throw InputError(fmt::format("dimension {} exceeds the cap {} for {} sweeps (raise --max-dim)", a.dim(),
		                             opt.max_dim, cls.tag()));
	Context c(a);
	Scalar q = a.field().from_fraction(cls.q);
	return run_sweep(cls.tag(), {a.space().names()}, identities(c, cls, q), opt.failure_cap);
}

AxiomReport dialgebra_trivial_middle_audit(const AlgebraPresentation &d, const CheckOptions &opt)
{
	AxiomReport pre = check_structure(d, StructureClass::of(ClassKind::AssociativeDialgebra), opt);
	if (!pre.passed())
		throw HypothesisError("input is not an associative dialgebra:\n" + pre.str());
	AlgebraPresentation t = d;
	t.set_op(slot::middle, MultiOp::on(d.space(), 2, d.field()));
	AxiomReport r = check_structure(t, StructureClass::of(ClassKind::Trialgebra), opt);
	r.subject = "dialgebra-trivial-middle-audit";
	return r;
}

} // namespace calg
