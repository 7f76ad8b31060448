#pragma once

#include "elastica/geodesic.hpp"

namespace elastica
{
	struct ShapeDistanceResult
	{
		double distance = 0.0;
		/// Optimal φ found by the lattice search, piecewise linear through its nodes.
		Reparam phi;
		/// Surrogate cost |Δorigin|² + ‖q̃0 - √φ' q̃1∘φ‖² at the optimum.
		double surrogate = 0.0;
		ConvergenceReport report;
	};

	/// Surrogate SRV mismatch of c0 against c1∘φ after raising both SRVs to
	/// T_{c0(0)}M (along each curve to its origin, then from c1(0) to c0(0)).
	double reparam_surrogate(const DiscreteCurve &c0, const DiscreteCurve &c1, const Reparam &phi);

	/// Dynamic-programming search for φ on an m × m lattice of (t, φ(t)) nodes.
	/// Edges move 1..max_step nodes in each direction (the reachable slopes b/a
	/// bound how well a smooth φ can be followed); their cost is the exact
	/// integral of the raised SRV mismatch along the linear piece.
	Reparam optimal_reparam(const DiscreteCurve &c0, const DiscreteCurve &c1, int m, int max_step = 10);

	/// distance(c0, c1∘φ) at the lattice optimum (or at the identity when that is
	/// shorter).
	ShapeDistanceResult shape_distance(const DiscreteCurve &c0, const DiscreteCurve &c1, const ShootingConfig &cfg,
									   int m);
} // namespace elastica
