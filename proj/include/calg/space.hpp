#ifndef CALG_SPACE_HPP
#define CALG_SPACE_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "calg/grading.hpp"
#include "calg/vector.hpp"

namespace calg {

/// Vector space with a homogeneous basis.
class GradedSpace
{
public:
	GradedSpace() = default;
	/// Throws InputError on duplicate names, a length mismatch, or a degree
	/// outside the group.
	GradedSpace(GradingGroup group, std::vector<std::string> names, std::vector<Degree> degrees);

	const GradingGroup &group() const { return group_; }
	std::size_t dim() const { return names_.size(); }
	const std::vector<std::string> &names() const { return names_; }
	const std::vector<Degree> &degrees() const { return degrees_; }
	const Degree &degree(std::size_t i) const { return degrees_.at(i); }
	/// Group-element index of the degree of basis vector i.
	std::size_t degree_index(std::size_t i) const { return degree_idx_.at(i); }
	std::optional<std::size_t> find(const std::string &name) const;

	bool operator==(const GradedSpace &other) const
	{
		return group_ == other.group_ && names_ == other.names_ && degrees_ == other.degrees_;
	}

private:
	GradingGroup group_;
	std::vector<std::string> names_;
	std::vector<Degree> degrees_;
	std::vector<std::size_t> degree_idx_;
};

/// Basis e_i (x) e_j with degree deg(e_i) + deg(e_j), ordered with j fastest.
GradedSpace tensor_square_space(const GradedSpace &space);

/// Even (degree-preserving) linear map; column j is the image of basis j.
class LinearMap
{
public:
	/// Throws InputError on a shape mismatch or an entry linking different degrees.
	LinearMap(GradedSpace domain, GradedSpace codomain, Field field, std::vector<std::vector<Scalar>> matrix);

	static LinearMap identity(const GradedSpace &space, Field field);
	static LinearMap zero(const GradedSpace &domain, const GradedSpace &codomain, Field field);

	const GradedSpace &domain() const { return domain_; }
	const GradedSpace &codomain() const { return codomain_; }
	const Field &field() const { return field_; }
	const std::vector<std::vector<Scalar>> &matrix() const { return matrix_; }
	const Scalar &entry(std::size_t row, std::size_t col) const { return matrix_.at(row).at(col); }

	Vector operator()(const Vector &v) const;
	/// Image of basis vector j.
	const Vector &image(std::size_t j) const { return columns_.at(j); }
	/// this o g
	LinearMap compose(const LinearMap &g) const;

	bool operator==(const LinearMap &other) const;

	/// Row-major string rendering of the matrix, for provenance records.
	std::vector<std::vector<std::string>> str_matrix() const;

private:
	GradedSpace domain_;
	GradedSpace codomain_;
	Field field_;
	std::vector<std::vector<Scalar>> matrix_;
	std::vector<Vector> columns_;
};

/// Even multilinear operation of arity n stored by structure constants:
/// op(e_{i1}, ..., e_{in}) = sum_k c(i1, ..., in, k) e_k. Slots may live on
/// different spaces (module actions); every slot shares one grading group.
class MultiOp
{
public:
	struct Entry
	{
		std::vector<std::size_t> args;
		std::size_t out;
		Scalar coefficient;
	};

	/// The zero operation.
	MultiOp(std::vector<GradedSpace> inputs, GradedSpace output, Field field);
	/// Zero operation with every slot on `space`.
	static MultiOp on(const GradedSpace &space, std::size_t arity, Field field);
	/// Structure constants computed by `f` on every basis tuple.
	static MultiOp tabulate(std::vector<GradedSpace> inputs, GradedSpace output, Field field,
	                        const std::function<Vector(std::span<const std::size_t>)> &f);

	std::size_t arity() const { return inputs_.size(); }
	const std::vector<GradedSpace> &inputs() const { return inputs_; }
	const GradedSpace &output() const { return output_; }
	const Field &field() const { return field_; }

	/// Adds c to the constant at (args, out). Throws InputError on a range or
	/// evenness violation (only nonzero results are checked).
	void add(std::span<const std::size_t> args, std::size_t out, const Scalar &c);
	void add(std::initializer_list<std::size_t> args, std::size_t out, const Scalar &c)
	{
		add(std::span<const std::size_t>(args.begin(), args.size()), out, c);
	}
	Scalar coefficient(std::span<const std::size_t> args, std::size_t out) const;

	/// Value on a basis tuple.
	Vector eval(std::span<const std::size_t> args) const;
	Vector eval(std::initializer_list<std::size_t> args) const
	{
		return eval(std::span<const std::size_t>(args.begin(), args.size()));
	}
	/// Multilinear extension to arbitrary vectors.
	Vector apply(std::span<const Vector *const> args) const;
	Vector operator()(const Vector &a) const;
	Vector operator()(const Vector &a, const Vector &b) const;
	Vector operator()(const Vector &a, const Vector &b, const Vector &c) const;

	/// Nonzero constants in lexicographic (args, out) order.
	std::vector<Entry> entries() const;
	bool is_zero() const;

private:
	std::size_t flat(std::span<const std::size_t> args) const;
	void check_args(std::span<const std::size_t> args) const;

	std::vector<GradedSpace> inputs_;
	GradedSpace output_;
	Field field_;
	std::vector<std::size_t> strides_;
	// flattened input tuple -> sparse output (index, coefficient)
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

/// True iff every structure constant agrees. Throws InputError when the
/// arities or slot spaces differ.
bool op_equal(const MultiOp &a, const MultiOp &b);

/// One step of a derivation chain, embedded in algebra files.
struct ProvenanceEntry
{
	std::string construction;
	std::vector<std::string> inputs;
	std::map<std::string, std::string> scalars;
	std::vector<std::vector<std::string>> operator_matrix;
	std::string claimed_class;
	bool verified = false;
};

/// Graded space with a bicharacter and named operations on it.
class AlgebraPresentation
{
public:
	/// Throws InputError when the space and bicharacter use different groups.
	AlgebraPresentation(GradedSpace space, Bicharacter eps);

	const GradedSpace &space() const { return space_; }
	const Bicharacter &eps() const { return eps_; }
	const Field &field() const { return eps_.field(); }
	std::size_t dim() const { return space_.dim(); }

	/// Every slot of `op` must be this algebra's space.
	void set_op(const std::string &name, MultiOp op);
	bool has_op(const std::string &name) const { return ops_.count(name) != 0; }
	/// Throws InputError naming the missing slot.
	const MultiOp &op(const std::string &name) const;
	const std::map<std::string, MultiOp> &ops() const { return ops_; }
	void remove_op(const std::string &name) { ops_.erase(name); }

	Vector basis(std::size_t i) const { return Vector::basis(field(), dim(), i); }
	Vector zero() const { return Vector(field(), dim()); }

	std::string label;
	std::optional<std::string> declared_class;
	std::vector<ProvenanceEntry> provenance;

private:
	GradedSpace space_;
	Bicharacter eps_;
	std::map<std::string, MultiOp> ops_;
};

/// Binary, ternary or unary op on the algebra's own space computed from `f`.
MultiOp tabulate_op(const AlgebraPresentation &a, std::size_t arity,
                    const std::function<Vector(std::span<const std::size_t>)> &f);

/// Componentwise sum A (+) B; an op present in only one summand acts as zero
/// on the other. Throws InputError unless group, field and bicharacter agree.
AlgebraPresentation direct_sum(const AlgebraPresentation &a, const AlgebraPresentation &b);

/// Same basis and constants with every scalar mapped into `target`
/// (rationals reduce modulo p). Throws ArithmeticError when a denominator
/// vanishes and InputError when target is Q but the source is F_p.
AlgebraPresentation change_field(const AlgebraPresentation &a, Field target);

} // namespace calg

#endif
