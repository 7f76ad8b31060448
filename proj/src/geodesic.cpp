#include "elastica/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace elastica
{
	namespace
	{
		Matrix srv_variation(const Matrix &ct, const Matrix &dt_cs)
		{
			Matrix out(ct.rows(), ct.cols());
			for (Eigen::Index k = 0; k < ct.cols(); ++k)
			{
				const double speed = ct.col(k).norm();
				if (!(speed > tol::immersion))
					throw Error(ErrorCode::degenerate_speed, "vanishing speed in cell " + std::to_string(k));
				const auto w = dt_cs.col(k);
				out.col(k) = w / std::sqrt(speed) - 0.5 * w.dot(ct.col(k)) / std::pow(speed, 2.5) * ct.col(k);
			}
			return out;
		}

		[[noreturn]] void collapse(const Vector &times, Eigen::Index k)
		{
			std::ostringstream msg;
			msg << "slice is no longer an immersion between t = " << times[k] << " and t = " << times[k + 1]
				<< " (cells " << k << ", " << k + 1 << ")";
			throw Error(ErrorCode::step_collapse, msg.str());
		}

		// Endpoint mismatch of a shot path against the target, in origin/SRV form.
		struct Mismatch
		{
			Vector origin;
			Matrix srv;
			double energy = 0.0;
		};

		Mismatch endpoint_mismatch(const DiscreteCurve &reached, const DiscreteCurve &target, const Matrix &target_q)
		{
			const auto &m = reached.manifold();
			const Matrix q = srvf(reached).q;
			Mismatch out;
			out.origin = m.log(reached.origin(), target.origin());
			out.srv.resize(q.rows(), q.cols());
			out.energy = out.origin.squaredNorm();
			for (Eigen::Index k = 0; k < q.cols(); ++k)
			{
				out.srv.col(k) = m.transport(target.point(k), reached.point(k), target_q.col(k)) - q.col(k);
				out.energy += reached.dt(k) * out.srv.col(k).squaredNorm();
			}
			return out;
		}
	} // namespace

	int ShootingConfig::steps() const
	{
		if (!(epsilon > 0.0) || epsilon > 1.0)
			throw Error(ErrorCode::degenerate_input, "epsilon must lie in (0, 1]");
		const double s = 1.0 / epsilon;
		const double rounded = std::round(s);
		if (std::abs(s - rounded) > 1e-9 * s)
			throw Error(ErrorCode::degenerate_input, "epsilon * S must equal 1");
		return static_cast<int>(rounded);
	}

	GeodesicState::GeodesicState(DiscreteCurve curve, TangentField cs) : curve_(std::move(curve)), cs_(std::move(cs))
	{
		if (cs_.cols() != curve_.samples() || cs_.rows() != curve_.manifold().ambient_dim())
			throw Error(ErrorCode::base_mismatch, "c_s is not aligned with the curve");
		ct_ = cell_velocity(curve_);
		q_ = srvf(curve_).q;
		dt_cs_ = cell_covariant_derivative(curve_, cs_);
		ds_q_ = srv_variation(ct_, dt_cs_);
	}

	TangentField source_r(const GeodesicState &state, double sign)
	{
		const DiscreteCurve &c = state.curve();
		const auto &m = c.manifold();
		const Eigen::Index n = c.cells();
		TangentField r = TangentField::Zero(m.ambient_dim(), n + 1);
		if (m.is_flat())
			return r;
		for (Eigen::Index k = n - 1; k >= 0; --k)
		{
			const Vector cs_far = m.transport(c.point(k + 1), c.point(k), state.cs().col(k + 1));
			const Vector integrand = m.curvature(c.point(k), state.q().col(k), state.ds_q().col(k), cs_far);
			r.col(k) = m.transport(c.point(k + 1), c.point(k), r.col(k + 1)) + sign * c.dt(k) * integrand;
		}
		return r;
	}

	Accelerations geodesic_accelerations(const GeodesicState &state, const TangentField &r)
	{
		const Matrix &ct = state.ct();
		Accelerations acc;
		acc.origin = r.col(0);
		acc.q.resize(ct.rows(), ct.cols());
		for (Eigen::Index k = 0; k < ct.cols(); ++k)
		{
			const double speed = ct.col(k).norm();
			if (!(speed > tol::immersion))
				throw Error(ErrorCode::degenerate_speed, "vanishing speed in cell " + std::to_string(k));
			const Vector v = ct.col(k) / speed;
			acc.q.col(k) = std::sqrt(speed) * (r.col(k) + r.col(k).dot(v) * v);
		}
		return acc;
	}

	Matrix second_derivative_ct(const GeodesicState &state, const Matrix &q_acc)
	{
		const Matrix &ct = state.ct();
		const Matrix &a = state.dt_cs();
		Matrix out(ct.rows(), ct.cols());
		for (Eigen::Index k = 0; k < ct.cols(); ++k)
		{
			const double speed = ct.col(k).norm();
			if (!(speed > tol::immersion))
				throw Error(ErrorCode::degenerate_speed, "vanishing speed in cell " + std::to_string(k));
			const double sq = speed * speed;
			const double a_ct = a.col(k).dot(ct.col(k));
			const double coeff = q_acc.col(k).dot(ct.col(k)) / std::pow(speed, 1.5) - 1.5 * a_ct * a_ct / (sq * sq) +
								 a.col(k).squaredNorm() / sq;
			out.col(k) = std::sqrt(speed) * q_acc.col(k) + (a_ct / sq) * a.col(k) + coeff * ct.col(k);
		}
		return out;
	}

	TangentField propagate_cs_acc(const GeodesicState &state, const ConstVectorRef &origin_acc, const Matrix &ct_acc)
	{
		const DiscreteCurve &c = state.curve();
		const auto &m = c.manifold();
		TangentField acc(m.ambient_dim(), c.samples());
		acc.col(0) = origin_acc;
		for (Eigen::Index k = 0; k < c.cells(); ++k)
		{
			const auto cs = state.cs().col(k);
			const Vector source = ct_acc.col(k) + m.curvature(c.point(k), state.ct().col(k), cs, cs);
			acc.col(k + 1) = m.transport(c.point(k), c.point(k + 1), acc.col(k) + c.dt(k) * source);
		}
		return acc;
	}

	GeodesicState exp_step(const GeodesicState &state, double eps, const ShootingConfig &cfg)
	{
		if (eps == 0.0)
			return state;
		const DiscreteCurve &c = state.curve();
		const auto &m = c.manifold();
		const Eigen::Index n = c.cells();
		const TangentField r = source_r(state, cfg.source_sign);
		const Accelerations acc = geodesic_accelerations(state, r);

		Matrix points(m.ambient_dim(), n + 1);
		if (cfg.scheme == StepScheme::curve)
		{
			const Matrix ct_acc = second_derivative_ct(state, acc.q);
			const TangentField cs_acc = propagate_cs_acc(state, acc.origin, ct_acc);
			TangentField cs(m.ambient_dim(), n + 1);
			for (Eigen::Index k = 0; k <= n; ++k)
			{
				points.col(k) = m.exp(c.point(k), eps * state.cs().col(k));
				cs.col(k) = m.transport(c.point(k), points.col(k), state.cs().col(k) + eps * cs_acc.col(k));
			}
			if (auto bad = DiscreteCurve::immersion_violation(m, c.times(), points))
				collapse(c.times(), *bad);
			return GeodesicState(DiscreteCurve(m, c.times(), std::move(points)), std::move(cs));
		}

		Matrix q(m.ambient_dim(), n);
		Matrix qs(m.ambient_dim(), n);
		points.col(0) = m.exp(c.origin(), eps * state.cs().col(0));
		const Vector origin_velocity =
			m.transport(c.origin(), points.col(0), state.cs().col(0) + eps * acc.origin);
		for (Eigen::Index k = 0; k < n; ++k)
		{
			const Matrix transport = m.transport_matrix(c.point(k), points.col(k));
			q.col(k) = transport * (state.q().col(k) + eps * state.ds_q().col(k));
			qs.col(k) = transport * (state.ds_q().col(k) + eps * acc.q.col(k));
			points.col(k + 1) = m.exp(points.col(k), c.dt(k) * q.col(k).norm() * q.col(k));
		}
		if (auto bad = DiscreteCurve::immersion_violation(m, c.times(), points))
			collapse(c.times(), *bad);
		DiscreteCurve next(m, c.times(), std::move(points));
		TangentField cs = lift_srv_velocity(next, origin_velocity, qs);
		return GeodesicState(std::move(next), std::move(cs));
	}

	CurvePath exponential_map(const DiscreteCurve &c0, const TangentField &u, const ShootingConfig &cfg)
	{
		const int S = cfg.steps();
		std::vector<DiscreteCurve> slices;
		std::vector<TangentField> velocities;
		slices.reserve(static_cast<size_t>(S) + 1);
		velocities.reserve(static_cast<size_t>(S) + 1);
		GeodesicState state(c0, u);
		slices.push_back(state.curve());
		velocities.push_back(state.cs());
		for (int i = 0; i < S; ++i)
		{
			try
			{
				state = exp_step(state, cfg.epsilon, cfg);
			}
			catch (const Error &e)
			{
				if (e.code() != ErrorCode::step_collapse)
					throw;
				std::ostringstream msg;
				msg << "at s = " << static_cast<double>(i + 1) / S << ": " << e.what();
				throw Error(ErrorCode::step_collapse, msg.str());
			}
			slices.push_back(state.curve());
			velocities.push_back(state.cs());
		}
		Vector s_grid = Vector::LinSpaced(S + 1, 0.0, 1.0);
		s_grid[S] = 1.0;
		return CurvePath(std::move(s_grid), std::move(slices), std::move(velocities));
	}

	Vector energy_profile(const CurvePath &path)
	{
		if (!path.has_velocities())
			throw Error(ErrorCode::degenerate_input, "energy profile needs a path with velocities");
		Vector e(path.steps() + 1);
		for (Eigen::Index i = 0; i <= path.steps(); ++i)
			e[i] = slice_energy(path, i);
		return e;
	}

	EquationResiduals equation_residuals(const CurvePath &path, double source_sign)
	{
		if (!path.has_velocities())
			throw Error(ErrorCode::degenerate_input, "equation residuals need a path with velocities");
		const auto &m = path.manifold();
		EquationResiduals res;
		std::vector<Matrix> q;
		q.reserve(path.slices().size());
		for (const auto &slice : path.slices())
			q.push_back(srvf(slice).q);
		for (Eigen::Index i = 1; i < path.steps(); ++i)
		{
			const double h0 = path.ds(i - 1);
			const double h1 = path.ds(i);
			const double w = 2.0 / (h0 + h1);
			const DiscreteCurve &prev = path.slice(i - 1);
			const DiscreteCurve &here = path.slice(i);
			const DiscreteCurve &next = path.slice(i + 1);
			const GeodesicState state(here, path.velocities()[static_cast<size_t>(i)]);
			const Accelerations acc = geodesic_accelerations(state, source_r(state, source_sign));

			const Vector origin_dd =
				w * (m.log(here.origin(), next.origin()) / h1 + m.log(here.origin(), prev.origin()) / h0);
			res.origin = std::max(res.origin, (origin_dd - acc.origin).norm());
			for (Eigen::Index k = 0; k < here.cells(); ++k)
			{
				const Vector fwd = m.transport(next.point(k), here.point(k), q[i + 1].col(k)) - q[i].col(k);
				const Vector bwd = m.transport(prev.point(k), here.point(k), q[i - 1].col(k)) - q[i].col(k);
				const Vector q_dd = w * (fwd / h1 + bwd / h0);
				res.srv = std::max(res.srv, (q_dd - acc.q.col(k)).norm());
			}
		}
		return res;
	}

	TangentField srv_initial_velocity(const DiscreteCurve &c0, const DiscreteCurve &c1)
	{
		if (!c0.same_grid(c1))
			throw Error(ErrorCode::invalid_curve, "curves must share one manifold and t-grid");
		const auto &m = c0.manifold();
		const Matrix q0 = srvf(c0).q;
		const Matrix q1 = srvf(c1).q;
		Matrix dq(q0.rows(), q0.cols());
		for (Eigen::Index k = 0; k < q0.cols(); ++k)
			dq.col(k) = m.transport(c1.point(k), c0.point(k), q1.col(k)) - q0.col(k);
		return lift_srv_velocity(c0, m.log(c0.origin(), c1.origin()), dq);
	}

	BvpResult geodesic_bvp(const DiscreteCurve &c0, const DiscreteCurve &c1, const ShootingConfig &cfg)
	{
		if (!c0.same_grid(c1))
			throw Error(ErrorCode::invalid_curve, "curves must share one manifold and t-grid; resample first");
		if (!(cfg.damping > 0.0 && cfg.damping <= 1.0))
			throw Error(ErrorCode::degenerate_input, "damping must lie in (0, 1]");
		const auto &m = c0.manifold();
		const Matrix q1 = srvf(c1).q;

		TangentField u = srv_initial_velocity(c0, c1);
		TangentField best_u = u;
		TangentField correction;
		double lambda = cfg.damping;
		std::optional<CurvePath> best;
		ConvergenceReport report;
		report.mismatch = std::numeric_limits<double>::infinity();

		// Anderson-accelerated fixed-point iteration u <- u + λ g(u), with g the
		// lifted endpoint mismatch. A trial that does not lower the mismatch is
		// retried from the best velocity with a plain step of half the size.
		constexpr int depth = 5;
		std::vector<Vector> du_hist;
		std::vector<Vector> dg_hist;
		Vector prev_u;
		Vector prev_g;

		for (int iter = 0;; ++iter)
		{
			std::optional<CurvePath> path;
			Mismatch mis;
			try
			{
				path = exponential_map(c0, u, cfg);
				mis = endpoint_mismatch(path->back(), c1, q1);
			}
			catch (const Error &e)
			{
				if (!best || (e.code() != ErrorCode::step_collapse && e.code() != ErrorCode::cut_locus &&
							  e.code() != ErrorCode::degenerate_speed))
					throw;
				path.reset();
			}
			const bool improved = path && mis.energy < report.mismatch;
			report.mismatch_history.push_back(path ? mis.energy : std::numeric_limits<double>::infinity());
			if (improved)
			{
				report.mismatch = mis.energy;
				report.iterations = iter;
				best = std::move(path);
				best_u = u;
			}
			if (report.mismatch < cfg.tol_endpoint)
			{
				report.converged = true;
				break;
			}
			if (iter >= cfg.max_iter)
				break;

			if (!improved)
			{
				du_hist.clear();
				dg_hist.clear();
				prev_u.resize(0);
				lambda *= 0.5;
				if (lambda < 1e-8)
					break;
				u = best_u + lambda * correction;
				continue;
			}

			// Carry the mismatch back to the base slice along each s-fibre.
			Vector origin = mis.origin;
			Matrix srv = mis.srv;
			for (Eigen::Index i = best->steps(); i > 0; --i)
			{
				const DiscreteCurve &from = best->slice(i);
				const DiscreteCurve &to = best->slice(i - 1);
				origin = m.transport(from.origin(), to.origin(), origin);
				for (Eigen::Index k = 0; k < srv.cols(); ++k)
					srv.col(k) = m.transport(from.point(k), to.point(k), srv.col(k));
			}
			correction = lift_srv_velocity(c0, origin, srv);
			if (iter > 0)
				lambda = std::min(cfg.damping, 1.5 * lambda);

			const Vector g = correction.reshaped();
			const Vector uk = u.reshaped();
			if (prev_u.size() > 0)
			{
				du_hist.push_back(uk - prev_u);
				dg_hist.push_back(g - prev_g);
				if (static_cast<int>(du_hist.size()) > depth)
				{
					du_hist.erase(du_hist.begin());
					dg_hist.erase(dg_hist.begin());
				}
			}
			prev_u = uk;
			prev_g = g;

			Vector next = uk + lambda * g;
			if (!du_hist.empty())
			{
				const auto h = static_cast<Eigen::Index>(du_hist.size());
				Matrix dG(g.size(), h);
				Matrix dU(g.size(), h);
				for (Eigen::Index j = 0; j < h; ++j)
				{
					dG.col(j) = dg_hist[static_cast<size_t>(j)];
					dU.col(j) = du_hist[static_cast<size_t>(j)];
				}
				const Vector gamma = dG.completeOrthogonalDecomposition().solve(g);
				next -= (dU + lambda * dG) * gamma;
			}
			u = next.reshaped(u.rows(), u.cols());
		}

		report.per_slice_energy = energy_profile(*best);
		return {std::move(*best), std::move(report)};
	}

	double distance(const DiscreteCurve &c0, const DiscreteCurve &c1, const ShootingConfig &cfg)
	{
		const BvpResult result = geodesic_bvp(c0, c1, cfg);
		if (!result.report.converged)
		{
			std::ostringstream msg;
			msg << "shooting stopped after " << result.report.iterations << " iterations with mismatch "
				<< result.report.mismatch;
			throw Error(ErrorCode::no_convergence, msg.str());
		}
		return path_length(result.path);
	}

	std::pair<DiscreteCurve, DiscreteCurve> merge_grids(const DiscreteCurve &c0, const DiscreteCurve &c1)
	{
		if (!(c0.manifold() == c1.manifold()))
			throw Error(ErrorCode::wrong_manifold, "curves live on different manifolds");
		if (c0.same_grid(c1))
			return {c0, c1};
		std::vector<double> t(c0.times().data(), c0.times().data() + c0.times().size());
		t.insert(t.end(), c1.times().data(), c1.times().data() + c1.times().size());
		std::sort(t.begin(), t.end());
		std::vector<double> merged;
		for (double x : t)
			if (merged.empty() || x - merged.back() > 1e-12)
				merged.push_back(x);
		merged.back() = 1.0;
		const Vector times = Eigen::Map<const Vector>(merged.data(), static_cast<Eigen::Index>(merged.size()));
		return {resample(c0, times), resample(c1, times)};
	}
} // namespace elastica
