#ifndef CALG_OPERATORS_HPP
#define CALG_OPERATORS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "calg/error.hpp"
#include "calg/report.hpp"
#include "calg/space.hpp"

namespace calg {

/// R(x)R(y) = R(R(x)y + xR(y) + weight xy) on every basis pair of the binary
/// op `op`. Throws InputError on an arity mismatch or a map of the wrong shape.
AxiomReport is_rota_baxter(const AlgebraPresentation &a, const std::string &op, const LinearMap &r,
                           const Scalar &weight, std::size_t failure_cap = default_failure_cap);

/// a(a(x)y) = a(x)a(y) = a(xa(y)) on every basis pair.
AxiomReport is_averaging(const AlgebraPresentation &a, const std::string &op, const LinearMap &alpha,
                         std::size_t failure_cap = default_failure_cap);

/// theta^2 = Id and theta(xy) = eps(x,y) theta(y)theta(x) for the product "mul".
AxiomReport is_theta_involution(const AlgebraPresentation &a, const LinearMap &theta,
                                std::size_t failure_cap = default_failure_cap);

/// f(op_A(...)) = op_B(f(...)) for every op of A. Throws InputError when B
/// lacks one of A's ops or the map does not go from A to B.
AxiomReport is_morphism(const LinearMap &f, const AlgebraPresentation &a, const AlgebraPresentation &b,
                        std::size_t failure_cap = default_failure_cap);

enum class OperatorKind { RotaBaxter, Averaging, ThetaInvolution, Endomorphism };

std::string operator_kind_tag(OperatorKind k);
/// "rota-baxter", "averaging", "theta-involution", "endomorphism".
OperatorKind parse_operator_kind(const std::string &tag);

struct OperatorQuery
{
	OperatorKind kind = OperatorKind::RotaBaxter;
	std::string op = "mul"; // ignored by ThetaInvolution and Endomorphism
	Scalar weight;          // RotaBaxter only
	std::size_t budget = 1'000'000;
};

/// Verifier matching the query kind.
AxiomReport verify_operator(const AlgebraPresentation &a, const OperatorQuery &q, const LinearMap &map,
                            std::size_t failure_cap = default_failure_cap);

/// Thrown when an exhaustive search would exceed its candidate budget.
class BudgetError : public InputError
{
public:
	using InputError::InputError;
};

/// Every even endomorphism over F_p satisfying the query, in lexicographic
/// (row-major, residue) order. Throws InputError over Q and BudgetError when
/// p^(free entries) exceeds the budget.
std::vector<LinearMap> search_operators(const AlgebraPresentation &a, const OperatorQuery &q);

} // namespace calg

#endif
