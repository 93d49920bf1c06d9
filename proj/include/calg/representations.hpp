#ifndef CALG_REPRESENTATIONS_HPP
#define CALG_REPRESENTATIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "calg/report.hpp"
#include "calg/space.hpp"
#include "calg/structure.hpp"

namespace calg {

/// Action slot signatures over the algebra A and the carrier M.
namespace action {
inline const std::string am = "AM->M";
inline const std::string ma = "MA->M";
inline const std::string maa = "MAA->M";
inline const std::string ama = "AMA->M";
inline const std::string aam = "AAM->M";
} // namespace action

enum class ModuleKind {
	AssocBimodule,        // AM (x > m), MA (m < x) over "mul"
	LeibnizModule,        // AM (x * m), MA (m *' x) over "bracket"
	TernaryLeibnizModule, // MAA, AMA, AAM over "ternary"
	TernaryLNPModule,     // all five over "mul" and "ternary"
};

std::string module_kind_tag(ModuleKind k);
ModuleKind parse_module_kind(const std::string &tag);
/// Action signatures the kind requires.
std::vector<std::string> module_signatures(ModuleKind k);
/// Class the underlying algebra must satisfy.
StructureClass module_algebra_class(ModuleKind k);

class ModulePresentation
{
public:
	/// Throws InputError when the carrier uses a different grading group.
	ModulePresentation(AlgebraPresentation algebra, GradedSpace carrier, ModuleKind kind);

	const AlgebraPresentation &algebra() const { return algebra_; }
	const GradedSpace &carrier() const { return carrier_; }
	ModuleKind kind() const { return kind_; }

	/// Throws InputError when the signature is unknown, not used by the kind,
	/// or the slot spaces do not match it.
	void set_action(const std::string &signature, MultiOp op);
	bool has_action(const std::string &signature) const { return actions_.count(signature) != 0; }
	const MultiOp &action(const std::string &signature) const;
	const std::map<std::string, MultiOp> &actions() const { return actions_; }

	std::string label;

private:
	AlgebraPresentation algebra_;
	GradedSpace carrier_;
	ModuleKind kind_;
	std::map<std::string, MultiOp> actions_;
};

/// Every required action set to zero.
ModulePresentation zero_module(const AlgebraPresentation &a, const GradedSpace &carrier, ModuleKind kind);
/// M = A with x > m = x.m and m < x = m.x.
ModulePresentation regular_bimodule(const AlgebraPresentation &a);
/// M = L with x * m = [x,m] and m *' x = [m,x].
ModulePresentation adjoint_leibniz_module(const AlgebraPresentation &l);

struct ModuleCheckOptions
{
	std::size_t failure_cap = default_failure_cap;
	/// Cap on max(dim A, dim M) for sweeps with four or more variables.
	std::size_t max_dim = 8;
	/// Run the algebra's own class checker first (HypothesisError on failure).
	bool check_algebra = true;
};

/// Sweeps every mixed axiom of the module kind over basis tuples.
AxiomReport check_module(const ModulePresentation &m, const ModuleCheckOptions &opt = {});

struct ModuleResult
{
	ModulePresentation module;
	/// check_module on the output
	AxiomReport report;
};

/// [x,y,m] = x*(y*m), [x,m,y] = x*(m*'y), [m,x,y] = m*'[x,y] over the ternary
/// algebra [x,[y,z]]. Throws HypothesisError unless `m` is a valid Leibniz module.
ModuleResult leibniz_module_to_ternary(const ModulePresentation &m, const ModuleCheckOptions &opt = {});

/// Module of L on the carrier of L' through a morphism f: x*m = f(x).'m,
/// m*x = m.'f(x) and the three ternary actions with f on the algebra slots.
/// Throws HypothesisError unless f is a morphism and both are ternary LNP.
ModuleResult module_via_morphism(const LinearMap &f, const AlgebraPresentation &l, const AlgebraPresentation &l2,
                                 const ModuleCheckOptions &opt = {});

} // namespace calg

#endif
