#include "calg/scalar.hpp"

#include <vector>

#include <fmt/format.h>

namespace calg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
	return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
	std::uint64_t r = 1 % p;
	a %= p;
	while (e)
	{
		if (e & 1)
			r = mulmod(r, a, p);
		a = mulmod(a, a, p);
		e >>= 1;
	}
	return r;
}

std::uint64_t reduce_mpz(const mpz_class &z, std::uint64_t p)
{
	mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
	if (m < 0)
		m += static_cast<unsigned long>(p);
	return m.get_ui();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
	std::vector<std::uint64_t> out;
	for (std::uint64_t q = 2; q * q <= n; ++q)
	{
		if (n % q == 0)
		{
			out.push_back(q);
			while (n % q == 0)
				n /= q;
		}
	}
	if (n > 1)
		out.push_back(n);
	return out;
}

} // namespace

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t q = 2; q * q <= n; ++q)
		if (n % q == 0)
			return false;
	return true;
}

Field Field::prime(std::uint64_t p)
{
	if (p >= (std::uint64_t(1) << 32))
		throw InputError(fmt::format("modulus {} is too large (must be below 2^32)", p));
	if (!calg::is_prime(p))
		throw InputError(fmt::format("modulus {} is not prime", p));
	if (p == 2)
		throw InputError("characteristic 2 is not supported");
	return Field(Kind::PrimeField, p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const
{
	if (kind_ == Kind::Rationals)
		return Scalar(mpq_class(static_cast<long>(n)));
	std::int64_t m = n % static_cast<std::int64_t>(p_);
	if (m < 0)
		m += static_cast<std::int64_t>(p_);
	return Scalar(Scalar::Residue{static_cast<std::uint64_t>(m), p_});
}

Scalar Field::from_fraction(const mpq_class &q) const
{
	if (kind_ == Kind::Rationals)
		return Scalar(q);
	std::uint64_t den = reduce_mpz(q.get_den(), p_);
	if (den == 0)
		throw ArithmeticError(fmt::format("denominator of {} vanishes modulo {}", q.get_str(), p_));
	std::uint64_t num = reduce_mpz(q.get_num(), p_);
	return Scalar(Scalar::Residue{mulmod(num, powmod(den, p_ - 2, p_), p_), p_});
}

Scalar Field::parse(std::string_view text) const
{
	std::string s(text);
	auto bad = [&] { return InputError(fmt::format("malformed scalar \"{}\"", s)); };
	if (s.empty())
		throw bad();
	auto slash = s.find('/');
	auto valid_int = [](const std::string &t) {
		std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
		if (i == t.size())
			return false;
		for (; i < t.size(); ++i)
			if (t[i] < '0' || t[i] > '9')
				return false;
		return true;
	};
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	if (!valid_int(num) || !valid_int(den))
		throw bad();
	if (num[0] == '+')
		num.erase(0, 1);
	if (den[0] == '+')
		den.erase(0, 1);
	mpz_class n(num), d(den);
	if (d == 0)
		throw ArithmeticError(fmt::format("zero denominator in \"{}\"", s));
	return from_fraction(mpq_class(n, d));
}

std::string Field::name() const
{
	return kind_ == Kind::Rationals ? std::string("Q") : fmt::format("F{}", p_);
}

Field Scalar::field() const
{
	if (auto r = std::get_if<Residue>(&value_))
		return Field(Field::Kind::PrimeField, r->p);
	return Field::rationals();
}

void Scalar::check_same_field(const Scalar &b) const
{
	const auto *ra = std::get_if<Residue>(&value_);
	const auto *rb = std::get_if<Residue>(&b.value_);
	if ((ra == nullptr) != (rb == nullptr) || (ra && ra->p != rb->p))
		throw ArithmeticError("operands belong to different fields");
}

bool Scalar::is_zero() const
{
	if (auto r = std::get_if<Residue>(&value_))
		return r->r == 0;
	return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const
{
	if (auto r = std::get_if<Residue>(&value_))
		return r->r == 1;
	return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const
{
	if (auto r = std::get_if<Residue>(&value_))
		return Scalar(Residue{r->r == 0 ? 0 : r->p - r->r, r->p});
	return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar &Scalar::operator+=(const Scalar &b)
{
	check_same_field(b);
	if (auto r = std::get_if<Residue>(&value_))
	{
		r->r += std::get<Residue>(b.value_).r;
		if (r->r >= r->p)
			r->r -= r->p;
	}
	else
		std::get<mpq_class>(value_) += std::get<mpq_class>(b.value_);
	return *this;
}

Scalar &Scalar::operator-=(const Scalar &b)
{
	check_same_field(b);
	if (auto r = std::get_if<Residue>(&value_))
	{
		std::uint64_t s = std::get<Residue>(b.value_).r;
		r->r = r->r >= s ? r->r - s : r->r + r->p - s;
	}
	else
		std::get<mpq_class>(value_) -= std::get<mpq_class>(b.value_);
	return *this;
}

Scalar &Scalar::operator*=(const Scalar &b)
{
	check_same_field(b);
	if (auto r = std::get_if<Residue>(&value_))
		r->r = mulmod(r->r, std::get<Residue>(b.value_).r, r->p);
	else
		std::get<mpq_class>(value_) *= std::get<mpq_class>(b.value_);
	return *this;
}

Scalar &Scalar::operator/=(const Scalar &b)
{
	check_same_field(b);
	return *this *= b.inverse();
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		throw ArithmeticError("division by zero");
	if (auto r = std::get_if<Residue>(&value_))
		return Scalar(Residue{powmod(r->r, r->p - 2, r->p), r->p});
	mpq_class inv = 1 / std::get<mpq_class>(value_);
	return Scalar(inv);
}

Scalar Scalar::pow(std::int64_t e) const
{
	if (e < 0)
		return inverse().pow(-e);
	if (auto r = std::get_if<Residue>(&value_))
		return Scalar(Residue{powmod(r->r, static_cast<std::uint64_t>(e), r->p), r->p});
	const mpq_class &q = std::get<mpq_class>(value_);
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
	mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
	return Scalar(mpq_class(n, d));
}

bool Scalar::operator==(const Scalar &b) const
{
	check_same_field(b);
	if (auto r = std::get_if<Residue>(&value_))
		return r->r == std::get<Residue>(b.value_).r;
	return std::get<mpq_class>(value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::str() const
{
	if (auto r = std::get_if<Residue>(&value_))
		return std::to_string(r->r);
	return std::get<mpq_class>(value_).get_str();
}

const mpq_class &Scalar::rational() const
{
	if (auto q = std::get_if<mpq_class>(&value_))
		return *q;
	throw ArithmeticError("rational() called on a prime-field element");
}

std::uint64_t Scalar::residue() const
{
	if (auto r = std::get_if<Residue>(&value_))
		return r->r;
	throw ArithmeticError("residue() called on a rational");
}

Scalar Scalar::canonical() const
{
	if (auto r = std::get_if<Residue>(&value_))
		return Scalar(Residue{r->r % r->p, r->p});
	return Scalar(std::get<mpq_class>(value_));
}

std::optional<std::uint64_t> root_of_unity_order(const Scalar &a)
{
	if (a.is_zero())
		throw ArithmeticError("zero is not a root of unity");
	Field f = a.field();
	if (!f.is_prime())
	{
		if (a.is_one())
			return 1;
		if ((-a).is_one())
			return 2;
		return std::nullopt;
	}
	// The order divides p - 1; strip prime factors while a^(order/q) stays 1.
	std::uint64_t p = f.modulus();
	std::uint64_t order = p - 1;
	for (std::uint64_t q : prime_factors(p - 1))
		while (order % q == 0 && powmod(a.residue(), order / q, p) == 1)
			order /= q;
	return order;
}

} // namespace calg
