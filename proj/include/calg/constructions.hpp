#ifndef CALG_CONSTRUCTIONS_HPP
#define CALG_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "calg/report.hpp"
#include "calg/space.hpp"
#include "calg/structure.hpp"

namespace calg {

struct ConstructionInputs
{
	AlgebraPresentation algebra;
	/// Second summand for `lnp-direct-sum`.
	std::optional<AlgebraPresentation> second;
	/// R, alpha or theta, depending on the construction.
	std::optional<LinearMap> op;
	/// Rota-Baxter weight; defaults to 0 where the weight is free.
	std::optional<mpq_class> lambda;
	std::optional<mpq_class> q;
};

struct ConstructionOptions
{
	bool verify = true;
	CheckOptions check;
	/// When false the class and operator hypotheses are not swept; the
	/// record carries a note saying so. Missing inputs still throw.
	bool check_hypotheses = true;
};

struct ConstructionRecord
{
	std::string name;
	std::vector<std::string> inputs;
	std::map<std::string, std::string> scalars;
	std::vector<std::vector<std::string>> operator_matrix;
	StructureClass claimed_class = StructureClass::of(ClassKind::Associative);
	/// True iff verification ran and passed.
	bool verified = false;
	std::optional<AxiomReport> report;
	std::vector<std::string> notes;
};

struct ConstructionResult
{
	AlgebraPresentation algebra;
	ConstructionRecord record;
};

struct ConstructionInfo
{
	std::string name;
	std::vector<std::string> hypotheses;
	StructureClass produces = StructureClass::of(ClassKind::Associative);
	std::string anchor;
	/// "", "rota-baxter", "averaging" or "theta-involution".
	std::string operator_kind;
	bool needs_second = false;
};

/// Registry entries in a fixed order.
const std::vector<ConstructionInfo> &list_constructions();
const ConstructionInfo &construction_info(const std::string &name);

/// Checks the hypotheses (HypothesisError on failure), builds the new
/// operations from the registry formula and, when `opt.verify` is set, runs
/// the target class checker. A failing verdict is recorded, not thrown.
/// Throws InputError on an unknown name or a missing input.
ConstructionResult apply_construction(const std::string &name, const ConstructionInputs &in,
                                      const ConstructionOptions &opt = {});

} // namespace calg

#endif
