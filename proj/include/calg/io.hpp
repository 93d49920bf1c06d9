#ifndef CALG_IO_HPP
#define CALG_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "calg/catalog.hpp"
#include "calg/constructions.hpp"
#include "calg/report.hpp"
#include "calg/representations.hpp"
#include "calg/space.hpp"

namespace calg::io {

using json = nlohmann::ordered_json;

/// Errors carry the JSON pointer of the offending node, e.g.
/// "at /ops/mul/entries/3: ...".
json field_to_json(const Field &f);
Field field_from_json(const json &j, const std::string &where = "");

json algebra_to_json(const AlgebraPresentation &a);
/// Builds and shape-checks the presentation. Evenness of every structure
/// constant is enforced while loading.
AlgebraPresentation algebra_from_json(const json &j);

json space_to_json(const GradedSpace &s);
GradedSpace space_from_json(const json &j, const GradingGroup &g, const std::string &where = "");

json op_to_json(const MultiOp &op);
MultiOp op_from_json(const json &j, std::vector<GradedSpace> inputs, const GradedSpace &output, const Field &f,
                     const std::string &where = "");

json matrix_to_json(const LinearMap &m);
/// Square matrix of scalar strings, row-major, as an even map of `space`.
LinearMap matrix_from_json(const json &j, const GradedSpace &space, const Field &f);

json report_to_json(const AxiomReport &r);
AxiomReport report_from_json(const json &j);

json record_to_json(const ConstructionRecord &r);

/// Verdict file of run_audit.
json audit_to_json(const std::vector<AuditItem> &items, std::uint64_t seed);

/// Module file: {"algebra": <path relative to the module file or inline
/// algebra>, "kind", "carrier": {"basis"}, "actions": {signature: {entries}}}.
ModulePresentation module_from_json(const json &j, const std::filesystem::path &base_dir);
json module_to_json(const ModulePresentation &m);

/// Parses a file; syntax errors report line and column.
json read_json(const std::filesystem::path &path);
void write_json(const std::filesystem::path &path, const json &j);

AlgebraPresentation load_algebra(const std::filesystem::path &path);
/// Writes the algebra, embedding `record` under "construction" when given.
void save_algebra(const std::filesystem::path &path, const AlgebraPresentation &a,
                  const std::optional<ConstructionRecord> &record = std::nullopt);
ModulePresentation load_module(const std::filesystem::path &path);
LinearMap load_matrix(const std::filesystem::path &path, const AlgebraPresentation &a);

} // namespace calg::io

#endif
