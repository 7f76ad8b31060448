#pragma once

// Independent reference computations for tests and `elastica validate`.
// Nothing here calls the transports, SRV transform or metric code it checks;
// curves are synthesized with the manifold's exp/log only.

#include "elastica/geodesic.hpp"

#include <json.hpp>

#include <random>
#include <string>
#include <vector>

namespace elastica::oracles
{
	struct Grid
	{
		Eigen::Index n = 0;
		Eigen::Index S = 0;
		double epsilon = 0.0;
	};

	struct OracleReport
	{
		std::string name;
		double measured = 0.0;
		double reference = 0.0;
		double tolerance = 0.0;
		/// Relative checks compare |measured - reference| / |reference|.
		bool relative = false;
		bool pass = false;
		Grid grid;

		static OracleReport check(std::string name, double measured, double reference, double tolerance,
								  bool relative = false, Grid grid = {});
	};

	nlohmann::json to_json(const OracleReport &report);

	/// sqrt(|c1(0) - c0(0)|² + Σ dt_k |q1_k - q0_k|²) on a shared grid, SRVs from
	/// plain difference quotients. Throws WrongManifold off Euclidean space.
	double flat_closed_form_distance(const DiscreteCurve &c0, const DiscreteCurve &c1);

	/// (R(c + εh) - R(c - εh)) / 2ε per cell, Euclidean only.
	Matrix fd_srv_differential(const DiscreteCurve &c, const TangentField &h, double eps_fd);

	/// Transport of u from sample k_from to k_to by RK4 integration of the
	/// extrinsic transport equation along each geodesic segment, re-projecting
	/// onto the tangent space after every substep.
	Vector transport_ode_oracle(const DiscreteCurve &c, Eigen::Index k_from, Eigen::Index k_to, const ConstVectorRef &u,
								int substeps = 200);

	/// (P_loop - I) / a² on T_pM for the geodesic square with corners
	/// p, exp(p, a y), exp(p, a(x + y)), exp(p, a x). To leading order this is
	/// the map u ↦ R(x, y)u.
	Matrix holonomy_probe(const Manifold &m, const ConstVectorRef &p, const ConstVectorRef &x, const ConstVectorRef &y,
						  double a, int substeps = 200);

	/// Central difference of the finite-difference path energy along a variation
	/// that keeps the end slices fixed, divided by the energy. Near zero for a
	/// geodesic, up to discretization error.
	double first_variation(const CurvePath &path, const ConstVectorRef &direction, int profile, double delta = 1e-4);

	/// Largest |first_variation| over a fixed family of directions and profiles.
	double max_first_variation(const CurvePath &path);

	// Smooth random test data.
	DiscreteCurve random_flat_curve(std::mt19937_64 &rng, int dim, Eigen::Index n);
	DiscreteCurve random_sphere_curve(std::mt19937_64 &rng, Eigen::Index n, double size = 0.8);
	TangentField random_field(std::mt19937_64 &rng, const DiscreteCurve &c);
	/// Field with l(0) = 0.
	TangentField random_vertical_field(std::mt19937_64 &rng, const DiscreteCurve &c);
	/// Smooth increasing φ sampled at the grid times.
	Reparam random_reparam(std::mt19937_64 &rng, const Vector &times, double strength = 0.3);

	struct SuiteOptions
	{
		/// Runs only checks whose name contains this text; empty runs all.
		std::string filter;
		double source_sign = -1.0;
		std::uint64_t seed = 7;
	};

	/// Names of the checks in the validation suite, in run order.
	std::vector<std::string> suite_names();

	std::vector<OracleReport> run_suite(const SuiteOptions &options);
} // namespace elastica::oracles
