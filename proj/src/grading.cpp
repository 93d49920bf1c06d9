#include "calg/grading.hpp"

#include <fmt/format.h>

namespace calg {

std::string Degree::str() const
{
	if (components.size() == 1)
		return std::to_string(components[0]);
	std::string out = "(";
	for (std::size_t i = 0; i < components.size(); ++i)
		out += (i ? "," : "") + std::to_string(components[i]);
	return out + ")";
}

GradingGroup::GradingGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders))
{
	std::size_t n = 1;
	for (int o : orders_)
	{
		if (o < 1)
			throw InputError(fmt::format("cyclic order {} must be at least 1", o));
		n *= static_cast<std::size_t>(o);
		if (n > max_order)
			throw InputError(fmt::format("grading group has more than {} elements", max_order));
	}
}

std::size_t GradingGroup::order() const
{
	std::size_t n = 1;
	for (int o : orders_)
		n *= static_cast<std::size_t>(o);
	return n;
}

Degree GradingGroup::reduce(const std::vector<int> &components) const
{
	if (components.size() != orders_.size())
		throw InputError(fmt::format("degree has {} components, group has rank {}", components.size(), orders_.size()));
	Degree d{components};
	for (std::size_t i = 0; i < orders_.size(); ++i)
	{
		d.components[i] %= orders_[i];
		if (d.components[i] < 0)
			d.components[i] += orders_[i];
	}
	return d;
}

bool GradingGroup::contains(const Degree &a) const
{
	if (a.components.size() != orders_.size())
		return false;
	for (std::size_t i = 0; i < orders_.size(); ++i)
		if (a.components[i] < 0 || a.components[i] >= orders_[i])
			return false;
	return true;
}

Degree GradingGroup::add(const Degree &a, const Degree &b) const
{
	if (!contains(a) || !contains(b))
		throw InputError("degree does not belong to the grading group");
	Degree s = a;
	for (std::size_t i = 0; i < orders_.size(); ++i)
		s.components[i] = (s.components[i] + b.components[i]) % orders_[i];
	return s;
}

std::size_t GradingGroup::index(const Degree &a) const
{
	if (!contains(a))
		throw InputError(fmt::format("degree {} does not belong to the grading group", a.str()));
	std::size_t idx = 0;
	for (std::size_t i = 0; i < orders_.size(); ++i)
		idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(a.components[i]);
	return idx;
}

Degree GradingGroup::element(std::size_t index) const
{
	Degree d = zero();
	for (std::size_t i = orders_.size(); i-- > 0;)
	{
		d.components[i] = static_cast<int>(index % static_cast<std::size_t>(orders_[i]));
		index /= static_cast<std::size_t>(orders_[i]);
	}
	return d;
}

std::size_t GradingGroup::add_index(std::size_t a, std::size_t b) const
{
	std::size_t idx = 0, stride = 1;
	for (std::size_t i = orders_.size(); i-- > 0;)
	{
		auto n = static_cast<std::size_t>(orders_[i]);
		idx += ((a % n + b % n) % n) * stride;
		a /= n;
		b /= n;
		stride *= n;
	}
	return idx;
}

std::vector<std::string> GradingGroup::element_labels() const
{
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < order(); ++i)
		labels.push_back(element(i).str());
	return labels;
}

Bicharacter::Bicharacter(GradingGroup group, Field field, std::vector<std::vector<Scalar>> generator_matrix)
    : group_(std::move(group)), field_(field), matrix_(std::move(generator_matrix))
{
	const std::size_t k = group_.rank();
	if (matrix_.size() != k)
		throw InputError(fmt::format("bicharacter matrix has {} rows, group has rank {}", matrix_.size(), k));
	for (std::size_t i = 0; i < k; ++i)
	{
		if (matrix_[i].size() != k)
			throw InputError(fmt::format("bicharacter row {} has {} entries, expected {}", i, matrix_[i].size(), k));
		for (std::size_t j = 0; j < k; ++j)
		{
			if (!(matrix_[i][j].field() == field_))
				throw InputError(fmt::format("bicharacter entry ({},{}) is not in {}", i, j, field_.name()));
			if (matrix_[i][j].is_zero())
				throw InputError(fmt::format("bicharacter entry ({},{}) is zero", i, j));
		}
	}
	order_ = group_.order();
	auto table = std::make_shared<std::vector<Scalar>>();
	table->reserve(order_ * order_);
	for (std::size_t a = 0; a < order_; ++a)
	{
		Degree da = group_.element(a);
		for (std::size_t b = 0; b < order_; ++b)
		{
			Degree db = group_.element(b);
			Scalar v = field_.one();
			for (std::size_t i = 0; i < k; ++i)
				for (std::size_t j = 0; j < k; ++j)
				{
					int e = da.components[i] * db.components[j];
					if (e != 0)
						v *= matrix_[i][j].pow(e);
				}
			table->push_back(v);
		}
	}
	table_ = std::move(table);
}

Bicharacter Bicharacter::trivial(GradingGroup group, Field field)
{
	const std::size_t k = group.rank();
	return Bicharacter(std::move(group), field, std::vector<std::vector<Scalar>>(k, std::vector<Scalar>(k, field.one())));
}

Bicharacter Bicharacter::super_sign(Field field)
{
	return Bicharacter(GradingGroup({2}), field, {{-field.one()}});
}

Scalar Bicharacter::operator()(const Degree &a, const Degree &b) const
{
	if (!group_.contains(a) || !group_.contains(b))
		throw InputError(fmt::format("degrees {} and {} do not belong to the grading group", a.str(), b.str()));
	return by_index(group_.index(a), group_.index(b));
}

bool Bicharacter::operator==(const Bicharacter &other) const
{
	if (!(group_ == other.group_) || !(field_ == other.field_))
		return false;
	return *table_ == *other.table_;
}

AxiomReport validate_bicharacter(const Bicharacter &b, std::size_t failure_cap)
{
	const GradingGroup &g = b.group();
	const Field f = b.field();
	auto scalar = [&](const Scalar &s) {
		Vector v(f, 1);
		v[0] = s;
		return v;
	};
	std::vector<std::string> generators;
	for (std::size_t i = 0; i < g.rank(); ++i)
		generators.push_back(fmt::format("g{}", i + 1));

	std::vector<Identity> ids;
	ids.push_back({"well-defined", {1, 1}, [&](std::span<const std::size_t> t) {
		               const Scalar &m = b.generator_matrix()[t[0]][t[1]];
		               Vector lhs(f, 2), rhs(f, 2);
		               lhs[0] = m.pow(g.cyclic_orders()[t[0]]);
		               lhs[1] = m.pow(g.cyclic_orders()[t[1]]);
		               rhs[0] = rhs[1] = f.one();
		               return Sides{lhs, rhs};
	               }});
	ids.push_back({"skew-symmetry", {0, 0}, [&](std::span<const std::size_t> t) {
		               return Sides{scalar(b.by_index(t[0], t[1]) * b.by_index(t[1], t[0])), scalar(f.one())};
	               }});
	ids.push_back({"additive-right", {0, 0, 0}, [&](std::span<const std::size_t> t) {
		               return Sides{scalar(b.by_index(t[0], g.add_index(t[1], t[2]))),
		                            scalar(b.by_index(t[0], t[1]) * b.by_index(t[0], t[2]))};
	               }});
	ids.push_back({"additive-left", {0, 0, 0}, [&](std::span<const std::size_t> t) {
		               return Sides{scalar(b.by_index(g.add_index(t[0], t[1]), t[2])),
		                            scalar(b.by_index(t[0], t[2]) * b.by_index(t[1], t[2]))};
	               }});
	return run_sweep("bicharacter", {g.element_labels(), generators}, ids, failure_cap);
}

} // namespace calg
