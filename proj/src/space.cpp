#include "calg/space.hpp"

#include <set>

#include <fmt/format.h>

namespace calg {

GradedSpace::GradedSpace(GradingGroup group, std::vector<std::string> names, std::vector<Degree> degrees)
    : group_(std::move(group)), names_(std::move(names)), degrees_(std::move(degrees))
{
	if (names_.size() != degrees_.size())
		throw InputError(fmt::format("{} basis names but {} degrees", names_.size(), degrees_.size()));
	std::set<std::string> seen;
	for (std::size_t i = 0; i < names_.size(); ++i)
	{
		if (names_[i].empty())
			throw InputError(fmt::format("basis vector {} has an empty name", i));
		if (!seen.insert(names_[i]).second)
			throw InputError(fmt::format("duplicate basis name \"{}\"", names_[i]));
		if (!group_.contains(degrees_[i]))
			throw InputError(fmt::format("degree {} of \"{}\" is not a reduced element of the grading group",
			                             degrees_[i].str(), names_[i]));
		degree_idx_.push_back(group_.index(degrees_[i]));
	}
}

std::optional<std::size_t> GradedSpace::find(const std::string &name) const
{
	for (std::size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == name)
			return i;
	return std::nullopt;
}

GradedSpace tensor_square_space(const GradedSpace &space)
{
	std::vector<std::string> names;
	std::vector<Degree> degrees;
	for (std::size_t i = 0; i < space.dim(); ++i)
		for (std::size_t j = 0; j < space.dim(); ++j)
		{
			names.push_back(space.names()[i] + "⊗" + space.names()[j]);
			degrees.push_back(space.group().add(space.degree(i), space.degree(j)));
		}
	return GradedSpace(space.group(), std::move(names), std::move(degrees));
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(GradedSpace domain, GradedSpace codomain, Field field, std::vector<std::vector<Scalar>> matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), field_(field), matrix_(std::move(matrix))
{
	if (!(domain_.group() == codomain_.group()))
		throw InputError("linear map between spaces graded by different groups");
	if (matrix_.size() != codomain_.dim())
		throw InputError(fmt::format("matrix has {} rows, codomain has dimension {}", matrix_.size(), codomain_.dim()));
	for (std::size_t i = 0; i < matrix_.size(); ++i)
	{
		if (matrix_[i].size() != domain_.dim())
			throw InputError(
			    fmt::format("matrix row {} has {} entries, domain has dimension {}", i, matrix_[i].size(), domain_.dim()));
		for (std::size_t j = 0; j < domain_.dim(); ++j)
		{
			if (!(matrix_[i][j].field() == field_))
				throw InputError(fmt::format("matrix entry ({},{}) is not in {}", i, j, field_.name()));
			if (!matrix_[i][j].is_zero() && !(codomain_.degree(i) == domain_.degree(j)))
				throw InputError(fmt::format("map is not even: entry ({},{}) links degree {} to degree {}", i, j,
				                             domain_.degree(j).str(), codomain_.degree(i).str()));
		}
	}
	for (std::size_t j = 0; j < domain_.dim(); ++j)
	{
		Vector col(field_, codomain_.dim());
		for (std::size_t i = 0; i < codomain_.dim(); ++i)
			col[i] = matrix_[i][j];
		columns_.push_back(std::move(col));
	}
}

LinearMap LinearMap::identity(const GradedSpace &space, Field field)
{
	std::vector<std::vector<Scalar>> m(space.dim(), std::vector<Scalar>(space.dim(), field.zero()));
	for (std::size_t i = 0; i < space.dim(); ++i)
		m[i][i] = field.one();
	return LinearMap(space, space, field, std::move(m));
}

LinearMap LinearMap::zero(const GradedSpace &domain, const GradedSpace &codomain, Field field)
{
	return LinearMap(domain, codomain, field,
	                 std::vector<std::vector<Scalar>>(codomain.dim(), std::vector<Scalar>(domain.dim(), field.zero())));
}

Vector LinearMap::operator()(const Vector &v) const
{
	if (v.size() != domain_.dim())
		throw InputError(fmt::format("vector of dimension {} passed to a map on dimension {}", v.size(), domain_.dim()));
	Vector out(field_, codomain_.dim());
	for (std::size_t j = 0; j < v.size(); ++j)
		if (!v[j].is_zero())
			out.add_scaled(v[j], columns_[j]);
	return out;
}

LinearMap LinearMap::compose(const LinearMap &g) const
{
	if (!(g.codomain_ == domain_))
		throw InputError("cannot compose: codomain and domain differ");
	std::vector<std::vector<Scalar>> m(codomain_.dim(), std::vector<Scalar>(g.domain_.dim(), field_.zero()));
	for (std::size_t j = 0; j < g.domain_.dim(); ++j)
	{
		Vector col = (*this)(g.columns_[j]);
		for (std::size_t i = 0; i < codomain_.dim(); ++i)
			m[i][j] = col[i];
	}
	return LinearMap(g.domain_, codomain_, field_, std::move(m));
}

bool LinearMap::operator==(const LinearMap &other) const
{
	if (!(domain_ == other.domain_) || !(codomain_ == other.codomain_) || !(field_ == other.field_))
		return false;
	for (std::size_t i = 0; i < matrix_.size(); ++i)
		for (std::size_t j = 0; j < matrix_[i].size(); ++j)
			if (matrix_[i][j] != other.matrix_[i][j])
				return false;
	return true;
}

std::vector<std::vector<std::string>> LinearMap::str_matrix() const
{
	std::vector<std::vector<std::string>> out;
	for (const auto &row : matrix_)
	{
		out.emplace_back();
		for (const auto &x : row)
			out.back().push_back(x.str());
	}
	return out;
}

// ---------------------------------------------------------------- MultiOp

MultiOp::MultiOp(std::vector<GradedSpace> inputs, GradedSpace output, Field field)
    : inputs_(std::move(inputs)), output_(std::move(output)), field_(field)
{
	if (inputs_.empty())
		throw InputError("operation must have arity at least 1");
	for (const auto &s : inputs_)
		if (!(s.group() == output_.group()))
			throw InputError("operation slots are graded by different groups");
	strides_.assign(inputs_.size(), 1);
	std::size_t total = 1;
	for (std::size_t k = inputs_.size(); k-- > 0;)
	{
		strides_[k] = total;
		total *= inputs_[k].dim();
	}
	table_.resize(total);
}

MultiOp MultiOp::on(const GradedSpace &space, std::size_t arity, Field field)
{
	return MultiOp(std::vector<GradedSpace>(arity, space), space, field);
}

MultiOp MultiOp::tabulate(std::vector<GradedSpace> inputs, GradedSpace output, Field field,
                          const std::function<Vector(std::span<const std::size_t>)> &f)
{
	MultiOp op(std::move(inputs), std::move(output), field);
	const std::size_t n = op.arity();
	std::vector<std::size_t> t(n, 0);
	for (std::size_t flat = 0; flat < op.table_.size(); ++flat)
	{
		std::size_t rest = flat;
		for (std::size_t k = 0; k < n; ++k)
		{
			t[k] = rest / op.strides_[k];
			rest %= op.strides_[k];
		}
		Vector v = f(t);
		if (v.size() != op.output_.dim())
			throw InputError("tabulated value has the wrong dimension");
		for (std::size_t k : v.support())
			op.add(t, k, v[k]);
	}
	return op;
}

void MultiOp::check_args(std::span<const std::size_t> args) const
{
	if (args.size() != inputs_.size())
		throw InputError(fmt::format("operation of arity {} called with {} arguments", inputs_.size(), args.size()));
	for (std::size_t k = 0; k < args.size(); ++k)
		if (args[k] >= inputs_[k].dim())
			throw InputError(fmt::format("argument {} index {} out of range (dimension {})", k, args[k], inputs_[k].dim()));
}

std::size_t MultiOp::flat(std::span<const std::size_t> args) const
{
	std::size_t f = 0;
	for (std::size_t k = 0; k < args.size(); ++k)
		f += args[k] * strides_[k];
	return f;
}

void MultiOp::add(std::span<const std::size_t> args, std::size_t out, const Scalar &c)
{
	check_args(args);
	if (out >= output_.dim())
		throw InputError(fmt::format("output index {} out of range (dimension {})", out, output_.dim()));
	if (!(c.field() == field_))
		throw InputError(fmt::format("structure constant {} is not in {}", c.str(), field_.name()));
	if (c.is_zero())
		return;
	const GradingGroup &g = output_.group();
	std::size_t deg = g.index(g.zero());
	for (std::size_t k = 0; k < args.size(); ++k)
		deg = g.add_index(deg, inputs_[k].degree_index(args[k]));
	if (deg != output_.degree_index(out))
	{
		std::string tuple;
		for (std::size_t k = 0; k < args.size(); ++k)
			tuple += (k ? ", " : "") + inputs_[k].names()[args[k]];
		throw InputError(fmt::format("constant ({}) -> {} violates evenness: inputs have total degree {}, output "
		                             "has degree {}",
		                             tuple, output_.names()[out], g.element(deg).str(), output_.degree(out).str()));
	}
	auto &row = table_[flat(args)];
	for (auto it = row.begin(); it != row.end(); ++it)
	{
		if (it->first == out)
		{
			it->second += c;
			if (it->second.is_zero())
				row.erase(it);
			return;
		}
		if (it->first > out)
		{
			row.insert(it, {out, c});
			return;
		}
	}
	row.emplace_back(out, c);
}

Scalar MultiOp::coefficient(std::span<const std::size_t> args, std::size_t out) const
{
	check_args(args);
	for (const auto &[k, c] : table_[flat(args)])
		if (k == out)
			return c;
	return field_.zero();
}

Vector MultiOp::eval(std::span<const std::size_t> args) const
{
	check_args(args);
	Vector v(field_, output_.dim());
	for (const auto &[k, c] : table_[flat(args)])
		v[k] = c;
	return v;
}

Vector MultiOp::apply(std::span<const Vector *const> args) const
{
	if (args.size() != inputs_.size())
		throw InputError(fmt::format("operation of arity {} applied to {} vectors", inputs_.size(), args.size()));
	const std::size_t n = args.size();
	std::vector<std::vector<std::size_t>> supports(n);
	for (std::size_t k = 0; k < n; ++k)
	{
		if (args[k]->size() != inputs_[k].dim())
			throw InputError(fmt::format("argument {} has dimension {}, slot has dimension {}", k, args[k]->size(),
			                             inputs_[k].dim()));
		supports[k] = args[k]->support();
	}
	Vector out(field_, output_.dim());
	for (const auto &s : supports)
		if (s.empty())
			return out;
	std::vector<std::size_t> pos(n, 0);
	while (true)
	{
		std::size_t f = 0;
		for (std::size_t k = 0; k < n; ++k)
			f += supports[k][pos[k]] * strides_[k];
		const auto &row = table_[f];
		if (!row.empty())
		{
			Scalar coeff = (*args[0])[supports[0][pos[0]]];
			for (std::size_t k = 1; k < n; ++k)
				coeff *= (*args[k])[supports[k][pos[k]]];
			for (const auto &[i, c] : row)
				out[i] += coeff * c;
		}
		std::size_t k = n;
		while (k > 0)
		{
			--k;
			if (++pos[k] < supports[k].size())
				break;
			pos[k] = 0;
			if (k == 0)
				return out;
		}
	}
}

Vector MultiOp::operator()(const Vector &a) const
{
	const Vector *args[] = {&a};
	return apply(args);
}

Vector MultiOp::operator()(const Vector &a, const Vector &b) const
{
	const Vector *args[] = {&a, &b};
	return apply(args);
}

Vector MultiOp::operator()(const Vector &a, const Vector &b, const Vector &c) const
{
	const Vector *args[] = {&a, &b, &c};
	return apply(args);
}

std::vector<MultiOp::Entry> MultiOp::entries() const
{
	std::vector<Entry> out;
	const std::size_t n = arity();
	for (std::size_t flat = 0; flat < table_.size(); ++flat)
	{
		if (table_[flat].empty())
			continue;
		std::vector<std::size_t> args(n);
		std::size_t rest = flat;
		for (std::size_t k = 0; k < n; ++k)
		{
			args[k] = rest / strides_[k];
			rest %= strides_[k];
		}
		for (const auto &[k, c] : table_[flat])
			out.push_back({args, k, c});
	}
	return out;
}

bool MultiOp::is_zero() const
{
	for (const auto &row : table_)
		if (!row.empty())
			return false;
	return true;
}

bool op_equal(const MultiOp &a, const MultiOp &b)
{
	if (a.arity() != b.arity())
		throw InputError(fmt::format("cannot compare operations of arity {} and {}", a.arity(), b.arity()));
	if (!(a.inputs() == b.inputs()) || !(a.output() == b.output()))
		throw InputError("cannot compare operations on different spaces");
	if (!(a.field() == b.field()))
		throw InputError("cannot compare operations over different fields");
	auto ea = a.entries();
	auto eb = b.entries();
	if (ea.size() != eb.size())
		return false;
	for (std::size_t i = 0; i < ea.size(); ++i)
		if (ea[i].args != eb[i].args || ea[i].out != eb[i].out || ea[i].coefficient != eb[i].coefficient)
			return false;
	return true;
}

// ---------------------------------------------------------------- AlgebraPresentation

AlgebraPresentation::AlgebraPresentation(GradedSpace space, Bicharacter eps)
    : space_(std::move(space)), eps_(std::move(eps))
{
	if (!(space_.group() == eps_.group()))
		throw InputError("space and bicharacter are graded by different groups");
}

void AlgebraPresentation::set_op(const std::string &name, MultiOp op)
{
	for (const auto &s : op.inputs())
		if (!(s == space_))
			throw InputError(fmt::format("operation \"{}\" has a slot outside the algebra's space", name));
	if (!(op.output() == space_))
		throw InputError(fmt::format("operation \"{}\" does not land in the algebra's space", name));
	if (!(op.field() == field()))
		throw InputError(fmt::format("operation \"{}\" is over {}, algebra is over {}", name, op.field().name(),
		                             field().name()));
	ops_.insert_or_assign(name, std::move(op));
}

const MultiOp &AlgebraPresentation::op(const std::string &name) const
{
	auto it = ops_.find(name);
	if (it == ops_.end())
		throw InputError(fmt::format("algebra has no operation slot \"{}\"", name));
	return it->second;
}

MultiOp tabulate_op(const AlgebraPresentation &a, std::size_t arity,
                    const std::function<Vector(std::span<const std::size_t>)> &f)
{
	return MultiOp::tabulate(std::vector<GradedSpace>(arity, a.space()), a.space(), a.field(), f);
}

AlgebraPresentation direct_sum(const AlgebraPresentation &a, const AlgebraPresentation &b)
{
	if (!(a.field() == b.field()))
		throw InputError("direct sum of algebras over different fields");
	if (!(a.eps() == b.eps()))
		throw InputError("direct sum of algebras with different bicharacters");
	std::vector<std::string> names = a.space().names();
	std::vector<Degree> degrees = a.space().degrees();
	std::set<std::string> used(names.begin(), names.end());
	for (std::size_t j = 0; j < b.dim(); ++j)
	{
		std::string n = b.space().names()[j];
		while (used.count(n))
			n += "'";
		used.insert(n);
		names.push_back(n);
		degrees.push_back(b.space().degree(j));
	}
	GradedSpace space(a.space().group(), std::move(names), std::move(degrees));
	AlgebraPresentation sum(space, a.eps());
	std::set<std::string> op_names;
	for (const auto &[n, _] : a.ops())
		op_names.insert(n);
	for (const auto &[n, _] : b.ops())
		op_names.insert(n);
	const std::size_t offset = a.dim();
	for (const auto &name : op_names)
	{
		const MultiOp *oa = a.has_op(name) ? &a.op(name) : nullptr;
		const MultiOp *ob = b.has_op(name) ? &b.op(name) : nullptr;
		std::size_t arity = oa ? oa->arity() : ob->arity();
		if (oa && ob && oa->arity() != ob->arity())
			throw InputError(fmt::format("operation \"{}\" has arity {} and {} in the summands", name, oa->arity(),
			                             ob->arity()));
		MultiOp op = MultiOp::on(space, arity, a.field());
		if (oa)
			for (const auto &e : oa->entries())
				op.add(e.args, e.out, e.coefficient);
		if (ob)
			for (const auto &e : ob->entries())
			{
				std::vector<std::size_t> args = e.args;
				for (auto &i : args)
					i += offset;
				op.add(args, e.out + offset, e.coefficient);
			}
		sum.set_op(name, std::move(op));
	}
	return sum;
}

AlgebraPresentation change_field(const AlgebraPresentation &a, Field target)
{
	if (a.field() == target)
		return a;
	if (!target.is_prime() || a.field().is_prime())
		throw InputError(fmt::format("cannot map scalars from {} to {}", a.field().name(), target.name()));
	auto map = [&](const Scalar &s) { return target.from_fraction(s.rational()); };
	std::vector<std::vector<Scalar>> m;
	for (const auto &row : a.eps().generator_matrix())
	{
		m.emplace_back();
		for (const auto &x : row)
			m.back().push_back(map(x));
	}
	AlgebraPresentation out(a.space(), Bicharacter(a.eps().group(), target, std::move(m)));
	for (const auto &[name, op] : a.ops())
	{
		MultiOp r(op.inputs(), op.output(), target);
		for (const auto &e : op.entries())
			r.add(e.args, e.out, map(e.coefficient));
		out.set_op(name, std::move(r));
	}
	out.label = a.label.empty() ? std::string() : a.label + "/" + target.name();
	out.declared_class = a.declared_class;
	out.provenance = a.provenance;
	return out;
}

} // namespace calg
