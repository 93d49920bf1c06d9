#ifndef CALG_REPORT_HPP
#define CALG_REPORT_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "calg/vector.hpp"

namespace calg {

/// One failing axiom instance: the basis tuple and both evaluated sides.
struct Failure
{
	std::string axiom;
	std::vector<std::size_t> witness;
	std::vector<std::string> labels;
	Vector lhs;
	Vector rhs;

	bool operator==(const Failure &) const = default;
};

struct AxiomSummary
{
	std::string id;
	std::size_t tuples = 0;
	std::size_t failures = 0;
	bool passed() const { return failures == 0; }
	bool operator==(const AxiomSummary &) const = default;
};

/// Outcome of an exhaustive identity sweep. The verdict is pass iff no axiom
/// instance failed; `failures` keeps at most `failure_cap` witnesses.
struct AxiomReport
{
	std::string subject;
	std::vector<AxiomSummary> axioms;
	std::vector<Failure> failures;
	std::size_t tuples_checked = 0;
	std::size_t failure_cap = 10;

	bool passed() const;
	std::size_t failure_count() const;
	const AxiomSummary *axiom(const std::string &id) const;
	/// Human-readable multi-line rendering.
	std::string str() const;
	bool operator==(const AxiomReport &) const = default;
};

inline constexpr std::size_t default_failure_cap = 10;
/// Pass as failure cap to keep every witness.
inline constexpr std::size_t unlimited_failures = 0;

/// LHS and RHS of one axiom instance.
struct Sides
{
	Vector lhs;
	Vector rhs;
};

/// A multilinear identity over basis tuples. Variable k ranges over the basis
/// of carrier `sorts[k]`.
struct Identity
{
	std::string id;
	std::vector<std::size_t> sorts;
	std::function<Sides(std::span<const std::size_t>)> sides;
};

/// Evaluates every identity on every basis tuple in lexicographic order.
/// `carriers[s]` lists the basis labels of carrier s.
AxiomReport run_sweep(std::string subject, const std::vector<std::vector<std::string>> &carriers,
                      const std::vector<Identity> &identities, std::size_t failure_cap = default_failure_cap);

/// True iff every identity holds on every tuple; stops at the first failure.
/// `dims[s]` is the dimension of carrier s.
bool identities_hold(const std::vector<std::size_t> &dims, const std::vector<Identity> &identities);

/// Appends the axioms and failures of `other` to `into` (respecting the cap).
void merge_report(AxiomReport &into, const AxiomReport &other);

} // namespace calg

#endif
