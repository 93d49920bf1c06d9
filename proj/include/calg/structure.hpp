#ifndef CALG_STRUCTURE_HPP
#define CALG_STRUCTURE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "calg/report.hpp"
#include "calg/space.hpp"

namespace calg {

/// Canonical operation slot names.
namespace slot {
inline const std::string mul = "mul";         // associative-style product
inline const std::string bracket = "bracket"; // binary bracket
inline const std::string ternary = "ternary"; // trilinear bracket / triple product
inline const std::string left = "left";       // x -| y
inline const std::string right = "right";     // x |- y
inline const std::string middle = "middle";   // x _|_ y
} // namespace slot

enum class ClassKind {
	Associative,
	LieColor,
	LeibnizColor,
	TernaryLeibniz,
	TernaryLieColor,
	LieTriple,
	JordanTriple,
	LeftSymmetric,
	LieAdmissible,
	PostLie,
	LeftSymmetricDialgebra,
	AssociativeDialgebra,
	Trialgebra,
	Dendriform,
	QTridendriform,
	LeibnizPoisson,
	TernaryLNP,
	EpsCommutative,
};

/// A structure class tag; QTridendriform carries its parameter q.
struct StructureClass
{
	ClassKind kind;
	mpq_class q = 1;

	static StructureClass of(ClassKind k) { return {k, 1}; }
	static StructureClass q_tridendriform(mpq_class q) { return {ClassKind::QTridendriform, std::move(q)}; }

	/// Kebab-case tag, e.g. "leibniz-color"; QTridendriform renders as
	/// "q-tridendriform(q=-1)".
	std::string tag() const;
	/// Accepts the kebab-case tags; "tridendriform" means q = 1. Throws
	/// InputError on an unknown tag.
	static StructureClass parse(std::string_view tag, const mpq_class &q = 1);
	/// Operation slots the axiom schema reads, with their arities.
	std::vector<std::pair<std::string, std::size_t>> required_ops() const;
	/// Largest number of variables in one axiom.
	std::size_t max_variables() const;

	bool operator==(const StructureClass &o) const { return kind == o.kind && q == o.q; }
};

/// Every class tag (QTridendriform with q = 1).
std::vector<StructureClass> all_structure_classes();

struct CheckOptions
{
	std::size_t failure_cap = default_failure_cap;
	/// Dimension cap for sweeps with four or more variables.
	std::size_t max_dim = 8;
};

/// Evaluates every axiom of `cls` on every homogeneous basis tuple of `a`.
/// Throws InputError on a missing slot, an arity mismatch, or a dimension
/// above the cap.
AxiomReport check_structure(const AlgebraPresentation &a, const StructureClass &cls, const CheckOptions &opt = {});

/// Adds a zero middle product to a validated associative dialgebra and runs
/// the trialgebra sweep. Throws HypothesisError when `d` is not a dialgebra.
AxiomReport dialgebra_trivial_middle_audit(const AlgebraPresentation &d, const CheckOptions &opt = {});

} // namespace calg

#endif
