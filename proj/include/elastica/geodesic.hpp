#pragma once

#include "elastica/elastic_metric.hpp"

#include <vector>

namespace elastica
{
	/// How exp_step advances (c, c_s) by one step in s.
	enum class StepScheme
	{
		/// Moves the origin and the SRV cells (q, ∇_s q) with the geodesic
		/// accelerations, then rebuilds the curve and c_s from them. Affine in
		/// flat space, so flat geodesics are reproduced exactly.
		srv,
		/// Moves every sample by exp(p_k, ε c_s) and c_s by ε ∇_s c_s obtained
		/// from the propagation recurrence in t.
		curve,
	};

	struct ShootingConfig
	{
		double epsilon = 1.0 / 32.0;
		int max_iter = 200;
		double tol_endpoint = 1e-6;
		double damping = 0.5;
		StepScheme scheme = StepScheme::srv;
		/// Sign in front of the tail integral defining r. Only flipped to check
		/// that the diagnostics detect a wrong sign.
		double source_sign = -1.0;

		/// Number of steps S with epsilon * S == 1; throws if epsilon does not divide 1.
		int steps() const;
	};

	/// c(s, ·), c_s(s, ·) and the quantities derived from them at the current s.
	class GeodesicState
	{
	public:
		GeodesicState(DiscreteCurve curve, TangentField cs);

		const DiscreteCurve &curve() const { return curve_; }
		const TangentField &cs() const { return cs_; }
		const Matrix &ct() const { return ct_; }
		const Matrix &q() const { return q_; }
		/// ∇_t c_s per cell.
		const Matrix &dt_cs() const { return dt_cs_; }
		/// ∇_s q per cell.
		const Matrix &ds_q() const { return ds_q_; }

	private:
		DiscreteCurve curve_;
		TangentField cs_;
		Matrix ct_;
		Matrix q_;
		Matrix dt_cs_;
		Matrix ds_q_;
	};

	/// r(s, t_k) = -Σ_{ℓ≥k} dt_ℓ P_{ℓ→k} R(q_ℓ, ∇_s q_ℓ) c̄_ℓ, with r(s, t_n) = 0, where
	/// c̄_ℓ is c_s(t_{ℓ+1}) transported back to t_ℓ. Returns n + 1 columns.
	TangentField source_r(const GeodesicState &state, double sign = -1.0);

	struct Accelerations
	{
		/// ∇_s c_s(s, 0)
		Vector origin;
		/// ∇_s ∇_s q per cell
		Matrix q;
	};

	/// ∇_s c_s(s, 0) = r(s, 0) and ∇_s∇_s q = |q| (r + r^∥).
	Accelerations geodesic_accelerations(const GeodesicState &state, const TangentField &r);

	/// ∇_s∇_s c_t per cell from ∇_s∇_s q, ∇_t c_s and c_t.
	Matrix second_derivative_ct(const GeodesicState &state, const Matrix &q_acc);

	/// ∇_s c_s(s, t_k) by the forward recurrence
	/// a_{k+1} = P_{k→k+1}[a_k + dt_k (∇_s∇_s c_t + R(c_t, c_s) c_s)], a_0 = origin_acc.
	TangentField propagate_cs_acc(const GeodesicState &state, const ConstVectorRef &origin_acc,
								  const Matrix &ct_acc);

	/// One step of length eps. Throws StepCollapse if the new slice is not an immersion.
	GeodesicState exp_step(const GeodesicState &state, double eps, const ShootingConfig &cfg = {});

	/// Geodesic from c0 with initial velocity u; the returned path carries c_s per slice.
	CurvePath exponential_map(const DiscreteCurve &c0, const TangentField &u, const ShootingConfig &cfg = {});

	/// G(c_s, c_s) at every slice of a path that carries velocities.
	Vector energy_profile(const CurvePath &path);

	struct EquationResiduals
	{
		/// sup over interior slices of |second difference of c(·, 0) - r(s, 0)|
		double origin = 0.0;
		/// sup over interior slices and cells of |second difference of q - |q|(r + r^∥)|
		double srv = 0.0;
	};

	/// Residuals of the geodesic equations measured from slice positions only
	/// (central second differences in s, transports along the s-fibres).
	EquationResiduals equation_residuals(const CurvePath &path, double source_sign = -1.0);

	struct ConvergenceReport
	{
		int iterations = 0;
		double mismatch = 0.0;
		bool converged = false;
		std::vector<double> mismatch_history;
		Vector per_slice_energy;
	};

	struct BvpResult
	{
		CurvePath path;
		ConvergenceReport report;
	};

	/// Initial velocity of the straight line from (c0(0), R(c0)) to (c1(0), R(c1)) in
	/// origin/SRV coordinates, SRV cells of c1 transported pointwise onto c0.
	TangentField srv_initial_velocity(const DiscreteCurve &c0, const DiscreteCurve &c1);

	/// Shooting: corrects the initial velocity with the endpoint mismatch (origin
	/// log and SRV difference) transported back along the s-fibres. Returns the
	/// best path found; report.converged tells whether the mismatch energy
	/// dropped below cfg.tol_endpoint.
	BvpResult geodesic_bvp(const DiscreteCurve &c0, const DiscreteCurve &c1, const ShootingConfig &cfg = {});

	/// Length of the shooting geodesic; throws NoConvergence if shooting fails.
	double distance(const DiscreteCurve &c0, const DiscreteCurve &c1, const ShootingConfig &cfg = {});

	/// Both curves resampled on the union of their time grids.
	std::pair<DiscreteCurve, DiscreteCurve> merge_grids(const DiscreteCurve &c0, const DiscreteCurve &c1);
} // namespace elastica
