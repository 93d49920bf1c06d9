#include "calg/vector.hpp"

#include <fmt/format.h>

namespace calg {

void Vector::check_shape(const Vector &b) const
{
	if (b.c_.size() != c_.size())
		throw InputError(fmt::format("vector dimension mismatch ({} vs {})", c_.size(), b.c_.size()));
	if (!(b.field_ == field_))
		throw ArithmeticError("vectors over different fields");
}

bool Vector::is_zero() const
{
	for (const auto &x : c_)
		if (!x.is_zero())
			return false;
	return true;
}

std::vector<std::size_t> Vector::support() const
{
	std::vector<std::size_t> s;
	for (std::size_t i = 0; i < c_.size(); ++i)
		if (!c_[i].is_zero())
			s.push_back(i);
	return s;
}

Vector &Vector::operator+=(const Vector &b)
{
	check_shape(b);
	for (std::size_t i = 0; i < c_.size(); ++i)
		if (!b.c_[i].is_zero())
			c_[i] += b.c_[i];
	return *this;
}

Vector &Vector::operator-=(const Vector &b)
{
	check_shape(b);
	for (std::size_t i = 0; i < c_.size(); ++i)
		if (!b.c_[i].is_zero())
			c_[i] -= b.c_[i];
	return *this;
}

Vector &Vector::operator*=(const Scalar &s)
{
	for (auto &x : c_)
		if (!x.is_zero())
			x *= s;
	return *this;
}

Vector &Vector::add_scaled(const Scalar &s, const Vector &b)
{
	check_shape(b);
	if (s.is_zero())
		return *this;
	for (std::size_t i = 0; i < c_.size(); ++i)
		if (!b.c_[i].is_zero())
			c_[i] += s * b.c_[i];
	return *this;
}

bool Vector::operator==(const Vector &b) const
{
	check_shape(b);
	for (std::size_t i = 0; i < c_.size(); ++i)
		if (c_[i] != b.c_[i])
			return false;
	return true;
}

std::string Vector::str(const std::vector<std::string> &labels) const
{
	std::string out;
	for (std::size_t i = 0; i < c_.size(); ++i)
	{
		if (c_[i].is_zero())
			continue;
		out += out.empty() ? "{" : ", ";
		out += fmt::format("{}: {}", i < labels.size() ? labels[i] : std::to_string(i), c_[i].str());
	}
	return out.empty() ? "0" : out + "}";
}

} // namespace calg
