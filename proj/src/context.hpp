#ifndef CALG_SRC_CONTEXT_HPP
#define CALG_SRC_CONTEXT_HPP

#include <vector>

#include "calg/space.hpp"

namespace calg::detail {

// Basis vectors and degree arithmetic of one algebra, shared by the sweeps.
// Degrees are group-element indices.
struct Context
{
	explicit Context(const AlgebraPresentation &alg) : a(alg), group(alg.space().group())
	{
		for (std::size_t i = 0; i < a.dim(); ++i)
			e.push_back(a.basis(i));
	}

	std::size_t deg(std::size_t basis) const { return a.space().degree_index(basis); }
	const Scalar &eps(std::size_t ga, std::size_t gb) const { return a.eps().by_index(ga, gb); }
	std::size_t sum(std::size_t ga, std::size_t gb) const { return group.add_index(ga, gb); }
	std::size_t sum(std::size_t ga, std::size_t gb, std::size_t gc) const { return sum(sum(ga, gb), gc); }
	Vector zero() const { return a.zero(); }

	const AlgebraPresentation &a;
	const GradingGroup &group;
	std::vector<Vector> e;
};

} // namespace calg::detail

#endif
