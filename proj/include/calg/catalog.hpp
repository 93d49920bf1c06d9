#ifndef CALG_CATALOG_HPP
#define CALG_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "calg/operators.hpp"
#include "calg/space.hpp"
#include "calg/structure.hpp"

namespace calg {

struct Fixture
{
	std::string id;
	std::string description;
	AlgebraPresentation presentation;
	std::vector<StructureClass> certified;
};

/// Known ids in catalog order.
const std::vector<std::string> &builtin_ids();

/// Builds the fixture and re-runs every certification; throws Error if one
/// fails and InputError on an unknown id.
Fixture builtin(const std::string &id);

/// The zero and identity maps when they solve the query, followed by up to
/// `sample` further solutions drawn by `seed`. Every returned map re-verifies.
std::vector<LinearMap> random_operator_fixtures(std::uint64_t seed, const AlgebraPresentation &base,
                                                const OperatorQuery &query, std::size_t sample = 4);

/// One audited construction. `status` is "pass", "fail" or
/// "hypothesis-failed"; in the last case `report` is the failing hypothesis check.
struct AuditItem
{
	std::string name;
	std::string input;
	std::string status;
	AxiomReport report;
	std::vector<std::string> notes;
};

/// Fixed list of constructions whose verdict is recorded rather than
/// presumed. `seed` picks the sampled Rota-Baxter operators.
std::vector<AuditItem> run_audit(std::uint64_t seed = 0, const CheckOptions &opt = {});

} // namespace calg

#endif
