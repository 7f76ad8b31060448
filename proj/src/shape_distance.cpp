#include "elastica/shape_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace elastica
{
	namespace
	{
		Eigen::Index cell_of(const Vector &times, double t)
		{
			const auto *begin = times.data();
			const auto *end = begin + times.size();
			const Eigen::Index j = static_cast<Eigen::Index>(std::upper_bound(begin, end, t) - begin) - 1;
			return std::clamp<Eigen::Index>(j, 0, times.size() - 2);
		}

		// SRV cells of c transported to `target` ∈ M: along c to its origin, then
		// along the geodesic c(0) → target.
		Matrix raised_srv(const DiscreteCurve &c, const ConstVectorRef &target)
		{
			const auto &m = c.manifold();
			const Matrix q = srvf(c).q;
			Matrix to_origin = Matrix::Identity(m.ambient_dim(), m.ambient_dim());
			const Matrix hop = m.transport_matrix(c.origin(), target);
			Matrix out(q.rows(), q.cols());
			for (Eigen::Index k = 0; k < q.cols(); ++k)
			{
				if (k > 0)
					to_origin = to_origin * m.transport_matrix(c.point(k), c.point(k - 1));
				out.col(k) = hop * (to_origin * q.col(k));
			}
			return out;
		}

		// Piecewise-constant functions on the cells of a time grid.
		struct CellFunction
		{
			Vector times;
			Matrix values;
			Vector cumulative_sq; // ∫_0^{t_k} |f|²

			CellFunction(Vector t, Matrix v) : times(std::move(t)), values(std::move(v))
			{
				cumulative_sq.resize(times.size());
				cumulative_sq[0] = 0.0;
				for (Eigen::Index k = 0; k < values.cols(); ++k)
					cumulative_sq[k + 1] = cumulative_sq[k] + (times[k + 1] - times[k]) * values.col(k).squaredNorm();
			}

			double integral_sq(double t) const
			{
				const Eigen::Index j = cell_of(times, t);
				return cumulative_sq[j] + (t - times[j]) * values.col(j).squaredNorm();
			}
		};

		// ∫_{t0}^{t1} |f(t) - √σ g(u0 + σ(t - t0))|² dt with σ = (u1 - u0)/(t1 - t0).
		double piece_cost(const CellFunction &f, const CellFunction &g, double t0, double t1, double u0, double u1)
		{
			const double sigma = (u1 - u0) / (t1 - t0);
			double cross = 0.0;
			Eigen::Index i = cell_of(f.times, t0);
			Eigen::Index j = cell_of(g.times, u0);
			double cur = t0;
			while (cur < t1)
			{
				const double next_f = f.times[i + 1];
				const double next_g = t0 + (g.times[j + 1] - u0) / sigma;
				const double next = std::min({next_f, next_g, t1});
				if (next > cur)
					cross += (next - cur) * f.values.col(i).dot(g.values.col(j));
				cur = next;
				bool advanced = false;
				if (next >= next_f && i + 2 < f.times.size())
				{
					++i;
					advanced = true;
				}
				if (next >= next_g && j + 2 < g.times.size())
				{
					++j;
					advanced = true;
				}
				if (next >= t1)
					break;
				if (!advanced)
				{
					// rounding at the end of the last cell
					cross += (t1 - cur) * f.values.col(i).dot(g.values.col(j));
					break;
				}
			}
			const double ff = f.integral_sq(t1) - f.integral_sq(t0);
			const double gg = g.integral_sq(u1) - g.integral_sq(u0);
			return ff + gg - 2.0 * std::sqrt(sigma) * cross;
		}

		std::pair<CellFunction, CellFunction> raised_pair(const DiscreteCurve &c0, const DiscreteCurve &c1)
		{
			if (!(c0.manifold() == c1.manifold()))
				throw Error(ErrorCode::wrong_manifold, "curves live on different manifolds");
			return {CellFunction(c0.times(), raised_srv(c0, c0.origin())),
					CellFunction(c1.times(), raised_srv(c1, c0.origin()))};
		}
	} // namespace

	double reparam_surrogate(const DiscreteCurve &c0, const DiscreteCurve &c1, const Reparam &phi)
	{
		const auto [f, g] = raised_pair(c0, c1);
		double cost = c0.manifold().log(c0.origin(), c1.origin()).squaredNorm();
		const Vector &t = phi.times();
		const Vector &u = phi.values();
		for (Eigen::Index a = 0; a + 1 < t.size(); ++a)
			cost += piece_cost(f, g, t[a], t[a + 1], u[a], u[a + 1]);
		return cost;
	}

	Reparam optimal_reparam(const DiscreteCurve &c0, const DiscreteCurve &c1, int m, int max_step)
	{
		if (m < 2 || max_step < 1)
			throw Error(ErrorCode::degenerate_input, "lattice needs m >= 2 and max_step >= 1");
		const auto [f, g] = raised_pair(c0, c1);
		Vector nodes = Vector::LinSpaced(m, 0.0, 1.0);
		nodes[0] = 0.0;
		nodes[m - 1] = 1.0;

		const double inf = std::numeric_limits<double>::infinity();
		Matrix cost = Matrix::Constant(m, m, inf);
		Eigen::MatrixXi from_a = Eigen::MatrixXi::Constant(m, m, -1);
		Eigen::MatrixXi from_b = Eigen::MatrixXi::Constant(m, m, -1);
		cost(0, 0) = 0.0;
		for (int a1 = 1; a1 < m; ++a1)
		{
			for (int b1 = 1; b1 < m; ++b1)
			{
				double best = inf;
				for (int a0 = std::max(0, a1 - max_step); a0 < a1; ++a0)
				{
					for (int b0 = std::max(0, b1 - max_step); b0 < b1; ++b0)
					{
						if (cost(a0, b0) == inf)
							continue;
						const double c = cost(a0, b0) + piece_cost(f, g, nodes[a0], nodes[a1], nodes[b0], nodes[b1]);
						if (c < best)
						{
							best = c;
							from_a(a1, b1) = a0;
							from_b(a1, b1) = b0;
						}
					}
				}
				cost(a1, b1) = best;
			}
		}

		std::vector<double> t_path{1.0};
		std::vector<double> u_path{1.0};
		int a = m - 1;
		int b = m - 1;
		while (a > 0)
		{
			const int pa = from_a(a, b);
			const int pb = from_b(a, b);
			a = pa;
			b = pb;
			t_path.push_back(nodes[a]);
			u_path.push_back(nodes[b]);
		}
		std::reverse(t_path.begin(), t_path.end());
		std::reverse(u_path.begin(), u_path.end());
		const auto size = static_cast<Eigen::Index>(t_path.size());
		return Reparam(Eigen::Map<Vector>(t_path.data(), size), Eigen::Map<Vector>(u_path.data(), size));
	}

	ShapeDistanceResult shape_distance(const DiscreteCurve &c0, const DiscreteCurve &c1, const ShootingConfig &cfg,
									   int m)
	{
		Reparam phi = optimal_reparam(c0, c1, m);
		const double surrogate = reparam_surrogate(c0, c1, phi);

		auto solve = [&](const DiscreteCurve &target) {
			BvpResult bvp = geodesic_bvp(c0, target, cfg);
			if (!bvp.report.converged)
			{
				std::ostringstream msg;
				msg << "shooting stopped after " << bvp.report.iterations << " iterations with mismatch "
					<< bvp.report.mismatch;
				throw Error(ErrorCode::no_convergence, msg.str());
			}
			const double d = path_length(bvp.path);
			return std::make_pair(d, std::move(bvp.report));
		};

		auto [d, report] = solve(reparameterize(c1, phi));
		const Reparam identity = Reparam::identity(c0.times());
		bool is_identity = (phi.times() - phi.values()).lpNorm<Eigen::Infinity>() == 0.0;
		if (!is_identity)
		{
			auto [d_id, report_id] = solve(c1);
			if (d_id <= d)
				return {d_id, identity, reparam_surrogate(c0, c1, identity), std::move(report_id)};
		}
		return {d, std::move(phi), surrogate, std::move(report)};
	}
} // namespace elastica
