#include "calg/report.hpp"

#include <fmt/format.h>

namespace calg {

bool AxiomReport::passed() const { return failure_count() == 0; }

std::size_t AxiomReport::failure_count() const
{
	std::size_t n = 0;
	for (const auto &a : axioms)
		n += a.failures;
	return n;
}

const AxiomSummary *AxiomReport::axiom(const std::string &id) const
{
	for (const auto &a : axioms)
		if (a.id == id)
			return &a;
	return nullptr;
}

std::string AxiomReport::str() const
{
	std::string out = fmt::format("{}: {} ({} tuples checked)\n", subject, passed() ? "PASS" : "FAIL", tuples_checked);
	for (const auto &a : axioms)
		out += fmt::format("  {:<32} {} tuples, {} failures\n", a.id, a.tuples, a.failures);
	for (const auto &f : failures)
	{
		std::string tuple;
		for (std::size_t i = 0; i < f.labels.size(); ++i)
			tuple += (i ? ", " : "") + f.labels[i];
		out += fmt::format("  witness {} ({}): lhs = {}, rhs = {}\n", f.axiom, tuple, f.lhs.str({}), f.rhs.str({}));
	}
	if (failures.size() < failure_count())
		out += fmt::format("  ... {} further failures not listed\n", failure_count() - failures.size());
	return out;
}

namespace {

bool keep_more(const AxiomReport &r)
{
	return r.failure_cap == unlimited_failures || r.failures.size() < r.failure_cap;
}

} // namespace

AxiomReport run_sweep(std::string subject, const std::vector<std::vector<std::string>> &carriers,
                      const std::vector<Identity> &identities, std::size_t failure_cap)
{
	AxiomReport report;
	report.subject = std::move(subject);
	report.failure_cap = failure_cap;
	for (const auto &identity : identities)
	{
		AxiomSummary summary{identity.id};
		const std::size_t n = identity.sorts.size();
		std::vector<std::size_t> dims(n);
		bool empty = false;
		for (std::size_t k = 0; k < n; ++k)
		{
			dims[k] = carriers.at(identity.sorts[k]).size();
			empty = empty || dims[k] == 0;
		}
		std::vector<std::size_t> tuple(n, 0);
		while (!empty)
		{
			Sides s = identity.sides(tuple);
			++summary.tuples;
			if (s.lhs != s.rhs)
			{
				++summary.failures;
				if (keep_more(report))
				{
					std::vector<std::string> labels;
					for (std::size_t k = 0; k < n; ++k)
						labels.push_back(carriers[identity.sorts[k]][tuple[k]]);
					report.failures.push_back({identity.id, tuple, std::move(labels), std::move(s.lhs), std::move(s.rhs)});
				}
			}
			// odometer, last variable fastest
			std::size_t k = n;
			while (k > 0)
			{
				--k;
				if (++tuple[k] < dims[k])
					break;
				tuple[k] = 0;
				if (k == 0)
					empty = true;
			}
			if (n == 0)
				empty = true;
		}
		report.tuples_checked += summary.tuples;
		report.axioms.push_back(std::move(summary));
	}
	return report;
}

bool identities_hold(const std::vector<std::size_t> &dims, const std::vector<Identity> &identities)
{
	for (const auto &identity : identities)
	{
		const std::size_t n = identity.sorts.size();
		std::vector<std::size_t> size(n), tuple(n, 0);
		bool done = false;
		for (std::size_t k = 0; k < n; ++k)
		{
			size[k] = dims.at(identity.sorts[k]);
			done = done || size[k] == 0;
		}
		while (!done)
		{
			Sides s = identity.sides(tuple);
			if (s.lhs != s.rhs)
				return false;
			std::size_t k = n;
			done = true;
			while (k > 0)
			{
				--k;
				if (++tuple[k] < size[k])
				{
					done = false;
					break;
				}
				tuple[k] = 0;
			}
		}
	}
	return true;
}

void merge_report(AxiomReport &into, const AxiomReport &other)
{
	for (const auto &a : other.axioms)
		into.axioms.push_back(a);
	for (const auto &f : other.failures)
		if (keep_more(into))
			into.failures.push_back(f);
	into.tuples_checked += other.tuples_checked;
}

} // namespace calg
