#ifndef CALG_GRADING_HPP
#define CALG_GRADING_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "calg/report.hpp"
#include "calg/scalar.hpp"

namespace calg {

/// Element of a finite abelian group Z_{n1} x ... x Z_{nk}, components reduced.
struct Degree
{
	std::vector<int> components;
	bool operator==(const Degree &) const = default;
	std::string str() const;
};

/// G = Z_{n1} x ... x Z_{nk}; the empty list is the trivial group.
class GradingGroup
{
public:
	GradingGroup() = default;
	/// Throws InputError on an order < 1 or a group with more than max_order elements.
	explicit GradingGroup(std::vector<int> cyclic_orders);

	static constexpr std::size_t max_order = 256;

	const std::vector<int> &cyclic_orders() const { return orders_; }
	std::size_t rank() const { return orders_.size(); }
	std::size_t order() const;

	/// Reduces each component modulo its cyclic order. Throws on rank mismatch.
	Degree reduce(const std::vector<int> &components) const;
	Degree zero() const { return Degree{std::vector<int>(orders_.size(), 0)}; }
	Degree add(const Degree &a, const Degree &b) const;
	bool contains(const Degree &a) const;

	/// Elements are indexed in lexicographic order of their components.
	std::size_t index(const Degree &a) const;
	Degree element(std::size_t index) const;
	std::size_t add_index(std::size_t a, std::size_t b) const;
	std::vector<std::string> element_labels() const;

	bool operator==(const GradingGroup &) const = default;

private:
	std::vector<int> orders_;
};

/// Map eps: G x G -> K* presented by its values M[i][j] = eps(g_i, g_j) on the
/// cyclic generators and extended by eps(a, b) = prod M[i][j]^(a_i b_j).
/// Construction checks shape only; use validate_bicharacter for the axioms.
class Bicharacter
{
public:
	/// Throws InputError on shape mismatch, a zero entry, or a foreign field.
	Bicharacter(GradingGroup group, Field field, std::vector<std::vector<Scalar>> generator_matrix);

	/// eps identically 1.
	static Bicharacter trivial(GradingGroup group, Field field);
	/// The sign rule (-1)^(ab) on Z_2.
	static Bicharacter super_sign(Field field);

	const GradingGroup &group() const { return group_; }
	const Field &field() const { return field_; }
	const std::vector<std::vector<Scalar>> &generator_matrix() const { return matrix_; }

	Scalar operator()(const Degree &a, const Degree &b) const;
	const Scalar &by_index(std::size_t a, std::size_t b) const { return (*table_)[a * order_ + b]; }

	bool operator==(const Bicharacter &other) const;

private:
	GradingGroup group_;
	Field field_;
	std::vector<std::vector<Scalar>> matrix_;
	std::size_t order_ = 1;
	std::shared_ptr<const std::vector<Scalar>> table_;
};

/// Exhaustively checks eps(a,b)eps(b,a) = 1, biadditivity in each slot and
/// M[i][j]^(n_i) = M[i][j]^(n_j) = 1 on every generator pair.
AxiomReport validate_bicharacter(const Bicharacter &b, std::size_t failure_cap = default_failure_cap);

} // namespace calg

#endif
