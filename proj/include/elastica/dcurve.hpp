#pragma once

#include "elastica/manifold.hpp"

#include <optional>

namespace elastica
{
	/// Samples p_0..p_n of an immersed curve at times 0 = t_0 < ... < t_n = 1.
	class DiscreteCurve
	{
	public:
		/// Throws InvalidCurve unless the grid is strictly increasing from 0 to 1,
		/// every sample lies on the manifold and consecutive samples are separated
		/// by at least tol::immersion * (t_{k+1} - t_k).
		DiscreteCurve(Manifold manifold, Vector times, Matrix points);

		static DiscreteCurve uniform(Manifold manifold, Matrix points);

		/// First sample index violating the immersion proxy, if any.
		static std::optional<Eigen::Index> immersion_violation(const Manifold &manifold, const Vector &times,
															   const Matrix &points);

		const Manifold &manifold() const { return manifold_; }
		const Vector &times() const { return times_; }
		const Matrix &points() const { return points_; }

		Eigen::Index samples() const { return points_.cols(); }
		Eigen::Index cells() const { return points_.cols() - 1; }
		double dt(Eigen::Index k) const { return times_[k + 1] - times_[k]; }
		auto point(Eigen::Index k) const { return points_.col(k); }
		auto origin() const { return points_.col(0); }

		bool same_grid(const DiscreteCurve &other) const;

	private:
		Manifold manifold_;
		Vector times_;
		Matrix points_;
	};

	/// Increasing endpoint-fixing reparameterization, piecewise linear through
	/// (times[k], values[k]).
	class Reparam
	{
	public:
		Reparam(Vector times, Vector values);

		static Reparam identity(const Vector &times);

		const Vector &times() const { return times_; }
		const Vector &values() const { return values_; }

		double operator()(double t) const;
		Reparam inverse() const { return Reparam(values_, times_); }

	private:
		Vector times_;
		Vector values_;
	};

	/// Square root velocity representation: q[k] = c_t[k] / sqrt|c_t[k]| per cell,
	/// based at p_k.
	struct SrvCurve
	{
		Matrix q;
	};

	/// Forward-difference velocity per cell (n columns).
	Matrix cell_velocity(const DiscreteCurve &c);

	/// Velocity field with n + 1 columns; the last cell's value is transported to p_n.
	TangentField velocity(const DiscreteCurve &c);

	SrvCurve srvf(const DiscreteCurve &c);

	/// Rebuilds the samples from an origin and SRV cells: p_{k+1} = exp(p_k, dt |q_k| q_k).
	DiscreteCurve srv_inverse(const Manifold &manifold, const Vector &times, const ConstVectorRef &origin,
							  const Matrix &q);

	/// Forward-difference covariant derivative of w along c, per cell:
	/// (P_{k+1 -> k} w_{k+1} - w_k) / dt_k.
	Matrix cell_covariant_derivative(const DiscreteCurve &c, const TangentField &w);

	TangentField covariant_derivative(const DiscreteCurve &c, const TangentField &w);

	/// Transport along the polygon of geodesic segments between samples, either direction.
	Vector transport_along(const DiscreteCurve &c, Eigen::Index from, Eigen::Index to, const ConstVectorRef &u);

	/// Field obtained by transporting u ∈ T_{p_0}M along the whole curve.
	TangentField parallel_field(const DiscreteCurve &c, const ConstVectorRef &u);

	/// Point c(t) on the piecewise-geodesic interpolant of the samples.
	Vector evaluate(const DiscreteCurve &c, double t);

	/// Samples of c∘φ on the grid of c.
	DiscreteCurve reparameterize(const DiscreteCurve &c, const Reparam &phi);

	/// Samples of c on a new grid.
	DiscreteCurve resample(const DiscreteCurve &c, const Vector &times);

	/// h∘φ for a field h along c, sampled on the grid of c (linear blend of the
	/// neighbouring samples, transported to the interpolated point).
	TangentField reparameterize_field(const DiscreteCurve &c, const TangentField &h, const Reparam &phi);
} // namespace elastica
