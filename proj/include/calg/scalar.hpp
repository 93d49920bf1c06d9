#ifndef CALG_SCALAR_HPP
#define CALG_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "calg/error.hpp"

namespace calg {

class Scalar;

/// The coefficient field: either the rationals or a prime field F_p with p odd.
class Field
{
public:
	enum class Kind { Rationals, PrimeField };

	static Field rationals() { return Field(Kind::Rationals, 0); }
	/// Throws InputError unless p is an odd prime below 2^32.
	static Field prime(std::uint64_t p);

	Kind kind() const { return kind_; }
	bool is_prime() const { return kind_ == Kind::PrimeField; }
	std::uint64_t modulus() const { return p_; }
	/// 0 for the rationals.
	std::uint64_t characteristic() const { return p_; }

	Scalar zero() const;
	Scalar one() const;
	Scalar from_int(std::int64_t n) const;
	Scalar from_fraction(const mpq_class &q) const;
	/// Accepts "n", "-n", "n/d"; in F_p a fraction is reduced by division.
	Scalar parse(std::string_view text) const;

	std::string name() const;

	bool operator==(const Field &other) const = default;

private:
	friend class Scalar;
	Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
	Kind kind_;
	std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues live in [0, p).
class Scalar
{
public:
	/// Rational zero. Prefer Field::zero() when the field matters.
	Scalar() : value_(mpq_class(0)) {}

	Field field() const;
	bool is_zero() const;
	bool is_one() const;

	Scalar operator-() const;
	Scalar &operator+=(const Scalar &b);
	Scalar &operator-=(const Scalar &b);
	Scalar &operator*=(const Scalar &b);
	Scalar &operator/=(const Scalar &b);
	Scalar inverse() const;
	Scalar pow(std::int64_t e) const;

	friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
	friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
	friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

	/// Exact equality; throws on mixed fields.
	bool operator==(const Scalar &b) const;
	bool operator!=(const Scalar &b) const { return !(*this == b); }

	/// "num/den", "num", or the decimal residue.
	std::string str() const;

	/// Rational value; only valid over Q.
	const mpq_class &rational() const;
	/// Residue; only valid over F_p.
	std::uint64_t residue() const;

	/// Re-normalizes the stored value. Idempotent.
	Scalar canonical() const;

private:
	friend class Field;
	struct Residue
	{
		std::uint64_t r;
		std::uint64_t p;
	};
	explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
	explicit Scalar(Residue r) : value_(r) {}
	void check_same_field(const Scalar &b) const;

	std::variant<mpq_class, Residue> value_;
};

/// Smallest k >= 1 with a^k = 1; nullopt when no such k exists (over Q with
/// a != +-1). Throws ArithmeticError on zero.
std::optional<std::uint64_t> root_of_unity_order(const Scalar &a);

} // namespace calg

#endif
