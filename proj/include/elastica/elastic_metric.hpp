#pragma once

#include "elastica/dcurve.hpp"

#include <vector>

namespace elastica
{
	/// A path of curves s ↦ c(s, ·) sampled at s_0 = 0 < ... < s_S = 1. All slices
	/// share one manifold and one t-grid. Paths produced by the geodesic engine
	/// also carry c_s(s_i, ·) per slice; raw paths get c_s from finite differences.
	class CurvePath
	{
	public:
		CurvePath(Vector s_grid, std::vector<DiscreteCurve> slices, std::vector<TangentField> velocities = {});

		const Vector &s_grid() const { return s_grid_; }
		const std::vector<DiscreteCurve> &slices() const { return slices_; }
		const DiscreteCurve &slice(Eigen::Index i) const { return slices_[static_cast<size_t>(i)]; }
		const DiscreteCurve &front() const { return slices_.front(); }
		const DiscreteCurve &back() const { return slices_.back(); }
		const Manifold &manifold() const { return slices_.front().manifold(); }

		Eigen::Index steps() const { return s_grid_.size() - 1; }
		double ds(Eigen::Index i) const { return s_grid_[i + 1] - s_grid_[i]; }

		bool has_velocities() const { return !velocities_.empty(); }
		const std::vector<TangentField> &velocities() const { return velocities_; }

		/// c_s at slice i: the stored field if present, otherwise per-sample
		/// log(c(s_i, t_k), c(s_{i+1}, t_k)) / ds (i < S).
		TangentField cs(Eigen::Index i) const;

	private:
		Vector s_grid_;
		std::vector<DiscreteCurve> slices_;
		std::vector<TangentField> velocities_;
	};

	/// Element of T_hTℳ through its horizontal projection at t = 0 and its
	/// vertical projection per cell.
	struct BundleVector
	{
		Vector origin_h;
		Matrix vertical;
	};

	/// Vertical part of T_cR(h), one vector per cell:
	/// |c'|^{1/2} ((∇_ℓ h)^⊥ + ½ <∇_ℓ h, v> v).
	Matrix srv_differential(const DiscreteCurve &c, const TangentField &h);

	/// Inverse of h ↦ (h(0), srv_differential(c, h)).
	TangentField lift_srv_velocity(const DiscreteCurve &c, const ConstVectorRef &origin_velocity,
								   const Matrix &srv_velocity);

	/// <h(0), k(0)> + ∫ <∇_ℓ h^⊥, ∇_ℓ k^⊥> + ¼ <∇_ℓ h^∥, ∇_ℓ k^∥> dℓ, left Riemann sum over cells.
	double metric_G(const DiscreteCurve &c, const TangentField &h, const TangentField &k);

	double tilde_G(const DiscreteCurve &c, const BundleVector &xi, const BundleVector &eta);

	/// ∇_s q at slice i per cell, from ∇_t c_s via ∇_s c_t = ∇_t c_s.
	Matrix nabla_s_q(const CurvePath &path, Eigen::Index i);

	/// |c_s(s_i, 0)|² + Σ_k dt_k |∇_s q(s_i, t_k)|².
	double slice_energy(const CurvePath &path, Eigen::Index i);

	double path_energy(const CurvePath &path);
	double path_length(const CurvePath &path);

	/// q̃(s_i, t_k) = P_{c(·,0)}^{s_i,0} ∘ P_{c(s_i,·)}^{t_k,0} q(s_i, t_k), all based at c(0, 0).
	/// One matrix (ambient × n) per slice.
	std::vector<Matrix> raise_q(const CurvePath &path);

	/// Curvature term Ω(s_i, t_k) for every cell k of slice i, raised to c(0, 0).
	Matrix omega(const CurvePath &path, Eigen::Index i);

	Vector omega(const CurvePath &path, Eigen::Index i, Eigen::Index k);

	/// Length through the raised field: integrand |c_s(s,0)|² + ∫ |q̃_s + Ω|² dt.
	double path_length_raised(const CurvePath &path);

	/// Same as path_length_raised with Ω dropped (tangent-space distance).
	double zhang_path_length(const CurvePath &path);
} // namespace elastica
