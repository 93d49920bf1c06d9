#ifndef CALG_VECTOR_HPP
#define CALG_VECTOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "calg/scalar.hpp"

namespace calg {

/// Dense coefficient vector with respect to a fixed basis.
class Vector
{
public:
	Vector(Field field, std::size_t dim) : field_(field), c_(dim, field.zero()) {}
	static Vector basis(Field field, std::size_t dim, std::size_t i)
	{
		Vector v(field, dim);
		v.c_.at(i) = field.one();
		return v;
	}

	const Field &field() const { return field_; }
	std::size_t size() const { return c_.size(); }
	const Scalar &operator[](std::size_t i) const { return c_[i]; }
	Scalar &operator[](std::size_t i) { return c_[i]; }
	const std::vector<Scalar> &coefficients() const { return c_; }

	bool is_zero() const;
	/// Indices of nonzero coefficients, ascending.
	std::vector<std::size_t> support() const;

	Vector &operator+=(const Vector &b);
	Vector &operator-=(const Vector &b);
	Vector &operator*=(const Scalar &s);
	/// this += s * b
	Vector &add_scaled(const Scalar &s, const Vector &b);

	friend Vector operator+(Vector a, const Vector &b) { return a += b; }
	friend Vector operator-(Vector a, const Vector &b) { return a -= b; }
	friend Vector operator-(Vector a)
	{
		for (auto &x : a.c_)
			x = -x;
		return a;
	}
	friend Vector operator*(const Scalar &s, Vector a) { return a *= s; }
	friend Vector operator*(Vector a, const Scalar &s) { return a *= s; }

	bool operator==(const Vector &b) const;
	bool operator!=(const Vector &b) const { return !(*this == b); }

	/// "{e1: 2, e3: -1/2}" using the supplied basis labels, "0" when zero.
	std::string str(const std::vector<std::string> &labels) const;

private:
	void check_shape(const Vector &b) const;

	Field field_;
	std::vector<Scalar> c_;
};

} // namespace calg

#endif
