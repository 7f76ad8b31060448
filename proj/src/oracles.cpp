#include "elastica/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace elastica::oracles
{
	namespace
	{
		// Difference-quotient SRV of a Euclidean sample matrix.
		Matrix flat_srv(const Vector &times, const Matrix &points)
		{
			Matrix q(points.rows(), points.cols() - 1);
			for (Eigen::Index k = 0; k < q.cols(); ++k)
			{
				const Vector v = (points.col(k + 1) - points.col(k)) / (times[k + 1] - times[k]);
				const double speed = v.norm();
				if (!(speed > tol::immersion))
					throw Error(ErrorCode::degenerate_speed, "vanishing speed in cell " + std::to_string(k));
				q.col(k) = v / std::sqrt(speed);
			}
			return q;
		}

		// One RK4 substep of V' = -<V, γ'> γ along γ(τ) = cos(τθ) p + sin(τθ) e.
		Vector rk4_step(const Vector &p, const Vector &e, double theta, double tau, double h, const Vector &v)
		{
			auto gamma = [&](double s) { return Vector(std::cos(s * theta) * p + std::sin(s * theta) * e); };
			auto dgamma = [&](double s) {
				return Vector(theta * (-std::sin(s * theta) * p + std::cos(s * theta) * e));
			};
			auto f = [&](double s, const Vector &w) { return Vector(-w.dot(dgamma(s)) * gamma(s)); };
			const Vector k1 = f(tau, v);
			const Vector k2 = f(tau + 0.5 * h, v + 0.5 * h * k1);
			const Vector k3 = f(tau + 0.5 * h, v + 0.5 * h * k2);
			const Vector k4 = f(tau + h, v + h * k3);
			return v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
		}

		// Transport along the sphere geodesic a -> b by integration.
		Vector ode_segment(const Manifold &m, const Vector &a, const Vector &b, Vector v, int substeps)
		{
			const Vector w = m.log(a, b);
			const double theta = w.norm();
			if (theta == 0.0)
				return v;
			const Vector e = w / theta;
			const double h = 1.0 / substeps;
			for (int j = 0; j < substeps; ++j)
			{
				v = rk4_step(a, e, theta, j * h, h, v);
				const Vector g = std::cos((j + 1) * h * theta) * a + std::sin((j + 1) * h * theta) * e;
				v -= v.dot(g) * g;
			}
			return v;
		}

		Vector smooth_profile(const Matrix &coeffs, double t)
		{
			Vector out = Vector::Zero(coeffs.rows());
			for (Eigen::Index j = 0; j < coeffs.cols(); ++j)
				out += coeffs.col(j) * std::cos(std::numbers::pi * static_cast<double>(j) * t);
			return out;
		}

		Matrix gaussian(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols)
		{
			std::normal_distribution<double> normal;
			Matrix out(rows, cols);
			for (Eigen::Index j = 0; j < cols; ++j)
				for (Eigen::Index i = 0; i < rows; ++i)
					out(i, j) = normal(rng);
			return out;
		}

		// Planar curve t ↦ t·d + small sinusoids; speed stays above 1/2.
		Matrix wiggly_plane_curve(std::mt19937_64 &rng, int dim, Eigen::Index n, double size)
		{
			const Matrix amp = gaussian(rng, dim, 3);
			Vector d = gaussian(rng, dim, 1).col(0);
			d.normalize();
			double budget = 0.0;
			for (Eigen::Index j = 0; j < 3; ++j)
				budget += amp.col(j).norm() * std::numbers::pi * static_cast<double>(j + 1);
			const double scale = budget > 0.0 ? 0.4 / budget : 0.0;
			Matrix pts(dim, n + 1);
			for (Eigen::Index k = 0; k <= n; ++k)
			{
				const double t = static_cast<double>(k) / static_cast<double>(n);
				Vector x = t * d;
				for (Eigen::Index j = 0; j < 3; ++j)
					x += scale * amp.col(j) * std::sin(std::numbers::pi * static_cast<double>(j + 1) * t);
				pts.col(k) = size * x;
			}
			return pts;
		}

		Grid grid_of(const CurvePath &path, double eps)
		{
			return {path.front().cells(), path.steps(), eps};
		}

		Matrix meridian(Eigen::Index n, double longitude, double colat0, double length)
		{
			Matrix pts(3, n + 1);
			for (Eigen::Index k = 0; k <= n; ++k)
			{
				const double th = colat0 + length * static_cast<double>(k) / static_cast<double>(n);
				pts.col(k) << std::sin(th) * std::cos(longitude), std::sin(th) * std::sin(longitude), std::cos(th);
			}
			return pts;
		}
	} // namespace

	OracleReport OracleReport::check(std::string name, double measured, double reference, double tolerance,
									 bool relative, Grid grid)
	{
		OracleReport r;
		r.name = std::move(name);
		r.measured = measured;
		r.reference = reference;
		r.tolerance = tolerance;
		r.relative = relative;
		r.grid = grid;
		double err = std::abs(measured - reference);
		if (relative)
			err /= std::abs(reference);
		r.pass = std::isfinite(measured) && err <= tolerance;
		return r;
	}

	nlohmann::json to_json(const OracleReport &report)
	{
		return {{"name", report.name},
				{"measured", report.measured},
				{"reference", report.reference},
				{"tolerance", report.tolerance},
				{"mode", report.relative ? "relative" : "absolute"},
				{"pass", report.pass},
				{"grid", {{"n", report.grid.n}, {"S", report.grid.S}, {"epsilon", report.grid.epsilon}}}};
	}

	double flat_closed_form_distance(const DiscreteCurve &c0, const DiscreteCurve &c1)
	{
		if (!c0.manifold().is_flat() || !(c0.manifold() == c1.manifold()))
			throw Error(ErrorCode::wrong_manifold, "closed form needs two curves in one Euclidean space");
		if (!c0.same_grid(c1))
			throw Error(ErrorCode::invalid_curve, "closed form needs a shared grid");
		const Matrix dq = flat_srv(c1.times(), c1.points()) - flat_srv(c0.times(), c0.points());
		double sum = (c1.origin() - c0.origin()).squaredNorm();
		for (Eigen::Index k = 0; k < dq.cols(); ++k)
			sum += c0.dt(k) * dq.col(k).squaredNorm();
		return std::sqrt(sum);
	}

	Matrix fd_srv_differential(const DiscreteCurve &c, const TangentField &h, double eps_fd)
	{
		if (!c.manifold().is_flat())
			throw Error(ErrorCode::wrong_manifold, "finite-difference differential needs Euclidean space");
		const Matrix plus = flat_srv(c.times(), c.points() + eps_fd * h);
		const Matrix minus = flat_srv(c.times(), c.points() - eps_fd * h);
		return (plus - minus) / (2.0 * eps_fd);
	}

	Vector transport_ode_oracle(const DiscreteCurve &c, Eigen::Index k_from, Eigen::Index k_to, const ConstVectorRef &u,
								int substeps)
	{
		const auto &m = c.manifold();
		Vector v = u;
		if (m.is_flat() || k_from == k_to)
			return v;
		const Eigen::Index step = k_to > k_from ? 1 : -1;
		for (Eigen::Index k = k_from; k != k_to; k += step)
			v = ode_segment(m, c.point(k), c.point(k + step), std::move(v), substeps);
		return v;
	}

	Matrix holonomy_probe(const Manifold &m, const ConstVectorRef &p, const ConstVectorRef &x, const ConstVectorRef &y,
						  double a, int substeps)
	{
		const int d = m.ambient_dim();
		if (m.is_flat())
			return Matrix::Zero(d, d);
		const std::vector<Vector> corners{Vector(p), m.exp(p, a * y), m.exp(p, a * (x + y)), m.exp(p, a * x),
										  Vector(p)};
		// Tangent-space projector at p; the probe acts on T_pM only.
		const Matrix proj = Matrix::Identity(d, d) - p * p.transpose();
		Matrix out(d, d);
		for (int j = 0; j < d; ++j)
		{
			const Vector u = proj.col(j);
			Vector v = u;
			for (size_t c = 0; c + 1 < corners.size(); ++c)
				v = ode_segment(m, corners[c], corners[c + 1], std::move(v), substeps);
			out.col(j) = (v - u) / (a * a);
		}
		return out;
	}

	double first_variation(const CurvePath &path, const ConstVectorRef &direction, int profile, double delta)
	{
		const auto &m = path.manifold();
		auto energy = [&](double amount) {
			std::vector<DiscreteCurve> slices;
			slices.reserve(path.slices().size());
			for (Eigen::Index i = 0; i <= path.steps(); ++i)
			{
				const DiscreteCurve &c = path.slice(i);
				const double bump = std::sin(std::numbers::pi * path.s_grid()[i]);
				Matrix pts = c.points();
				for (Eigen::Index k = 0; k < c.samples(); ++k)
				{
					const double t = c.times()[k];
					const double w = profile == 0 ? 1.0 : (profile == 1 ? std::cos(std::numbers::pi * t) : t * t);
					pts.col(k) = m.exp(pts.col(k), amount * bump * w * m.project_tangent(pts.col(k), direction));
				}
				slices.emplace_back(m, c.times(), std::move(pts));
			}
			return path_energy(CurvePath(path.s_grid(), std::move(slices)));
		};
		const double e0 = energy(0.0);
		return (energy(delta) - energy(-delta)) / (2.0 * delta * e0);
	}

	double max_first_variation(const CurvePath &path)
	{
		double worst = 0.0;
		const int d = path.manifold().ambient_dim();
		for (int profile = 0; profile < 3; ++profile)
			for (int j = 0; j < d; ++j)
				worst = std::max(worst, std::abs(first_variation(path, Vector::Unit(d, j), profile)));
		return worst;
	}

	DiscreteCurve random_flat_curve(std::mt19937_64 &rng, int dim, Eigen::Index n)
	{
		const Vector origin = 0.5 * gaussian(rng, dim, 1).col(0);
		Matrix pts = wiggly_plane_curve(rng, dim, n, 1.0);
		pts.colwise() += origin;
		return DiscreteCurve::uniform(Manifold::euclidean(dim), std::move(pts));
	}

	DiscreteCurve random_sphere_curve(std::mt19937_64 &rng, Eigen::Index n, double size)
	{
		const Manifold m = Manifold::sphere(2);
		const Vector base = m.project(gaussian(rng, 3, 1).col(0));
		Eigen::Matrix3d frame = gaussian(rng, 3, 3);
		frame.col(0) = base;
		const Eigen::HouseholderQR<Eigen::Matrix3d> qr(frame);
		const Eigen::Matrix3d Q = qr.householderQ();
		const Matrix plane = wiggly_plane_curve(rng, 2, n, size);
		Matrix pts(3, n + 1);
		for (Eigen::Index k = 0; k <= n; ++k)
			pts.col(k) = m.exp(base, plane(0, k) * Q.col(1) + plane(1, k) * Q.col(2));
		return DiscreteCurve::uniform(m, std::move(pts));
	}

	TangentField random_field(std::mt19937_64 &rng, const DiscreteCurve &c)
	{
		const auto &m = c.manifold();
		const Matrix coeffs = 0.5 * gaussian(rng, m.ambient_dim(), 3);
		TangentField h(m.ambient_dim(), c.samples());
		for (Eigen::Index k = 0; k < c.samples(); ++k)
			h.col(k) = m.project_tangent(c.point(k), smooth_profile(coeffs, c.times()[k]));
		return h;
	}

	TangentField random_vertical_field(std::mt19937_64 &rng, const DiscreteCurve &c)
	{
		const auto &m = c.manifold();
		const Matrix coeffs = 0.5 * gaussian(rng, m.ambient_dim(), 3);
		TangentField h(m.ambient_dim(), c.samples());
		for (Eigen::Index k = 0; k < c.samples(); ++k)
		{
			const double t = c.times()[k];
			h.col(k) = m.project_tangent(c.point(k), std::sin(0.5 * std::numbers::pi * t) *
														 smooth_profile(coeffs, t));
		}
		return h;
	}

	Reparam random_reparam(std::mt19937_64 &rng, const Vector &times, double strength)
	{
		std::uniform_real_distribution<double> unit(-1.0, 1.0);
		const double a1 = unit(rng);
		const double a2 = unit(rng);
		const double norm = std::abs(a1) * std::numbers::pi + std::abs(a2) * 2.0 * std::numbers::pi;
		const double scale = norm > 0.0 ? strength / norm : 0.0;
		Vector values(times.size());
		for (Eigen::Index k = 0; k < times.size(); ++k)
		{
			const double t = times[k];
			values[k] = t + scale * (a1 * std::sin(std::numbers::pi * t) + a2 * std::sin(2.0 * std::numbers::pi * t));
		}
		values[0] = 0.0;
		values[times.size() - 1] = 1.0;
		return Reparam(times, std::move(values));
	}

	namespace
	{
		using Check = std::function<OracleReport(const SuiteOptions &)>;

		OracleReport check_flat_closed_form(const SuiteOptions &o)
		{
			std::mt19937_64 rng(o.seed);
			const DiscreteCurve c0 = random_flat_curve(rng, 2, 50);
			const DiscreteCurve c1 = random_flat_curve(rng, 2, 50);
			ShootingConfig cfg;
			cfg.source_sign = o.source_sign;
			return OracleReport::check("flat_closed_form", distance(c0, c1, cfg), flat_closed_form_distance(c0, c1),
									   1e-3, true, {50, cfg.steps(), cfg.epsilon});
		}

		OracleReport check_flat_translation(const SuiteOptions &o)
		{
			std::mt19937_64 rng(o.seed);
			const DiscreteCurve c0 = random_flat_curve(rng, 2, 40);
			Matrix moved = c0.points();
			moved.row(1).array() += 1.0;
			const DiscreteCurve c1(c0.manifold(), c0.times(), moved);
			ShootingConfig cfg;
			cfg.source_sign = o.source_sign;
			return OracleReport::check("flat_translation", distance(c0, c1, cfg), 1.0, 1e-6, false,
									   {40, cfg.steps(), cfg.epsilon});
		}

		OracleReport check_srv_differential(const SuiteOptions &o)
		{
			std::mt19937_64 rng(o.seed);
			double worst = 0.0;
			for (int trial = 0; trial < 5; ++trial)
			{
				const DiscreteCurve c = random_flat_curve(rng, 2, 50);
				const TangentField h = random_field(rng, c);
				worst = std::max(worst,
								 (srv_differential(c, h) - fd_srv_differential(c, h, 1e-5)).lpNorm<Eigen::Infinity>());
			}
			return OracleReport::check("srv_differential_fd", worst, 0.0, 1e-6, false, {50, 0, 0.0});
		}

		OracleReport check_transport_ode(const SuiteOptions &)
		{
			const Manifold m = Manifold::sphere(2);
			Matrix pts(3, 2);
			pts << 1, 0, 0, 1, 0, 0;
			const DiscreteCurve c = DiscreteCurve::uniform(m, pts);
			const Vector u = Eigen::Vector3d(0.3, 1.0, -0.7);
			const Vector t = m.project_tangent(c.point(0), u);
			const double err = (transport_along(c, 0, 1, t) - transport_ode_oracle(c, 0, 1, t, 400)).norm();
			return OracleReport::check("transport_ode", err, 0.0, 1e-8, false, {1, 0, 0.0});
		}

		OracleReport check_holonomy(const SuiteOptions &)
		{
			const Manifold m = Manifold::sphere(2);
			const Vector p = m.project(Eigen::Vector3d(0.2, -0.4, 0.9));
			const Vector x = m.project_tangent(p, Eigen::Vector3d(1.0, 0.3, 0.0)).normalized();
			const Vector y = m.project_tangent(p, Eigen::Vector3d(-0.2, 1.0, 0.4)).normalized();
			const Matrix probe = holonomy_probe(m, p, x, y, 1e-2);
			const Matrix proj = Matrix::Identity(3, 3) - p * p.transpose();
			const Matrix exact = m.curvature_matrix(p, x, y) * proj;
			return OracleReport::check("holonomy", (probe - exact).norm() / exact.norm(), 0.0, 0.05);
		}

		OracleReport check_pullback_identity(const SuiteOptions &o)
		{
			std::mt19937_64 rng(o.seed);
			const DiscreteCurve c = random_sphere_curve(rng, 60);
			const TangentField h = random_field(rng, c);
			const TangentField k = random_field(rng, c);
			const double g = metric_G(c, h, k);
			const double tg = tilde_G(c, {h.col(0), srv_differential(c, h)}, {k.col(0), srv_differential(c, k)});
			return OracleReport::check("pullback_identity", g, tg, 1e-10, false, {60, 0, 0.0});
		}

		OracleReport check_horizontality(const SuiteOptions &o)
		{
			std::mt19937_64 rng(o.seed);
			const DiscreteCurve c = random_sphere_curve(rng, 60);
			const TangentField h0 = parallel_field(c, random_field(rng, c).col(0));
			double worst = 0.0;
			for (int trial = 0; trial < 10; ++trial)
				worst = std::max(worst, std::abs(metric_G(c, h0, random_vertical_field(rng, c))));
			return OracleReport::check("horizontality", worst, 0.0, 1e-9, false, {60, 0, 0.0});
		}

		// Sup error of the discrete SRV equivariance check at resolution n.
		double equivariance_error(std::uint64_t seed, Eigen::Index n)
		{
			std::mt19937_64 rng(seed);
			const DiscreteCurve fine = random_sphere_curve(rng, 4096);
			const Vector times = Vector::LinSpaced(n + 1, 0.0, 1.0);
			const DiscreteCurve c = resample(fine, times);
			const Reparam phi = random_reparam(rng, times);
			const DiscreteCurve cphi = reparameterize(c, phi);
			const Matrix q = srvf(c).q;
			const Matrix qphi = srvf(cphi).q;
			const auto &m = c.manifold();
			double worst = 0.0;
			for (Eigen::Index k = 0; k < n; ++k)
			{
				// q of c at the cell holding φ(t_k), moved to c(φ(t_k)).
				const double u = phi.values()[k];
				Eigen::Index j = std::min<Eigen::Index>(static_cast<Eigen::Index>(u * static_cast<double>(n)), n - 1);
				const Vector at = evaluate(c, u);
				const Vector qj = m.transport(c.point(j), at, q.col(j));
				const double slope = (phi.values()[k + 1] - phi.values()[k]) / (times[k + 1] - times[k]);
				const Vector expected = m.transport(at, cphi.point(k), std::sqrt(slope) * qj);
				worst = std::max(worst, (qphi.col(k) - expected).norm());
			}
			return worst;
		}

		OracleReport check_equivariance(const SuiteOptions &o)
		{
			const double coarse = equivariance_error(o.seed, 100);
			const double fine = equivariance_error(o.seed, 200);
			return OracleReport::check("equivariance_order", coarse / fine, 2.0, 0.5, false, {200, 0, 0.0});
		}

		// Relative defect of G under φ: quadratic terms against themselves, the
		// cross term against sqrt(G(h,h) G(k,k)) since it can cancel to zero.
		double invariance_defect(std::uint64_t seed, Eigen::Index n)
		{
			std::mt19937_64 rng(seed);
			const DiscreteCurve fine = random_sphere_curve(rng, 4096);
			const Vector times = Vector::LinSpaced(n + 1, 0.0, 1.0);
			const DiscreteCurve c = resample(fine, times);
			const Matrix hc = 0.5 * gaussian(rng, 3, 3);
			const Matrix kc = 0.5 * gaussian(rng, 3, 3);
			const Reparam phi = random_reparam(rng, times);
			auto field = [&](const DiscreteCurve &curve, const Matrix &coeffs, const Reparam *map) {
				TangentField f(3, curve.samples());
				for (Eigen::Index k = 0; k < curve.samples(); ++k)
				{
					const double t = map ? (*map)(curve.times()[k]) : curve.times()[k];
					f.col(k) = curve.manifold().project_tangent(curve.point(k), smooth_profile(coeffs, t));
				}
				return f;
			};
			const DiscreteCurve cphi = reparameterize(c, phi);
			const TangentField h = field(c, hc, nullptr), k = field(c, kc, nullptr);
			const TangentField hp = field(cphi, hc, &phi), kp = field(cphi, kc, &phi);
			const double ghh = metric_G(c, h, h);
			const double gkk = metric_G(c, k, k);
			return std::max({std::abs(metric_G(cphi, hp, hp) - ghh) / ghh, std::abs(metric_G(cphi, kp, kp) - gkk) / gkk,
							 std::abs(metric_G(cphi, hp, kp) - metric_G(c, h, k)) / std::sqrt(ghh * gkk)});
		}

		OracleReport check_reparam_invariance(const SuiteOptions &o)
		{
			return OracleReport::check("reparam_invariance", invariance_defect(o.seed, 200), 0.0, 0.01, false,
									   {200, 0, 0.0});
		}

		CurvePath meridian_sweep(Eigen::Index n, Eigen::Index S)
		{
			const Manifold m = Manifold::sphere(2);
			std::vector<DiscreteCurve> slices;
			for (Eigen::Index i = 0; i <= S; ++i)
			{
				const double s = static_cast<double>(i) / static_cast<double>(S);
				slices.push_back(DiscreteCurve::uniform(m, meridian(n, 0.6 * s, 0.3 + 0.2 * s, 1.0)));
			}
			Vector grid = Vector::LinSpaced(S + 1, 0.0, 1.0);
			grid[S] = 1.0;
			return CurvePath(grid, std::move(slices));
		}

		OracleReport check_expression_equivalence(const SuiteOptions &)
		{
			const CurvePath path = meridian_sweep(64, 64);
			const double len = path_length(path);
			return OracleReport::check("expression_equivalence", path_length_raised(path), len, 0.02, true,
									   grid_of(path, 1.0 / 64));
		}

		CurvePath sphere_shot(const SuiteOptions &o, Eigen::Index n, double eps)
		{
			const Manifold m = Manifold::sphere(2);
			const DiscreteCurve c0 = DiscreteCurve::uniform(m, meridian(n, 0.0, 0.3, 1.0));
			const DiscreteCurve c1 = DiscreteCurve::uniform(m, meridian(n, 0.5, 0.3, 1.0));
			ShootingConfig cfg;
			cfg.epsilon = eps;
			cfg.source_sign = o.source_sign;
			return exponential_map(c0, 1.5 * srv_initial_velocity(c0, c1), cfg);
		}

		double drift(const CurvePath &path)
		{
			const Vector e = energy_profile(path);
			return (e.maxCoeff() - e.minCoeff()) / e[0];
		}

		OracleReport check_energy_constancy(const SuiteOptions &o)
		{
			const double coarse = drift(sphere_shot(o, 32, 1.0 / 16));
			const double fine = drift(sphere_shot(o, 32, 1.0 / 32));
			return OracleReport::check("energy_constancy_order", coarse / fine, 2.0, 0.5, false, {32, 32, 1.0 / 32});
		}

		OracleReport check_stationarity(const SuiteOptions &o)
		{
			const CurvePath path = sphere_shot(o, 32, 1.0 / 32);
			// The first variation of a discrete geodesic is O(ε + Δt); a wrong
			// geodesic equation leaves an O(1) remainder.
			return OracleReport::check("geodesic_stationarity", max_first_variation(path), 0.0, 0.15, false,
									   grid_of(path, 1.0 / 32));
		}

		OracleReport check_bvp_sphere(const SuiteOptions &o)
		{
			const Manifold m = Manifold::sphere(2);
			const double lon = std::numbers::pi / 6.0;
			const DiscreteCurve c0 = DiscreteCurve::uniform(m, meridian(32, 0.0, 0.0, 1.0));
			const DiscreteCurve c1 = DiscreteCurve::uniform(m, meridian(32, lon, 0.0, 1.0));
			ShootingConfig cfg;
			cfg.source_sign = o.source_sign;
			const BvpResult result = geodesic_bvp(c0, c1, cfg);
			return OracleReport::check("bvp_sphere", result.report.mismatch, 0.0, cfg.tol_endpoint, false,
									   grid_of(result.path, cfg.epsilon));
		}

		const std::vector<std::pair<std::string, Check>> &suite()
		{
			static const std::vector<std::pair<std::string, Check>> checks{
				{"flat_closed_form", check_flat_closed_form},
				{"flat_translation", check_flat_translation},
				{"srv_differential_fd", check_srv_differential},
				{"transport_ode", check_transport_ode},
				{"holonomy", check_holonomy},
				{"pullback_identity", check_pullback_identity},
				{"horizontality", check_horizontality},
				{"equivariance_order", check_equivariance},
				{"reparam_invariance", check_reparam_invariance},
				{"expression_equivalence", check_expression_equivalence},
				{"energy_constancy_order", check_energy_constancy},
				{"geodesic_stationarity", check_stationarity},
				{"bvp_sphere", check_bvp_sphere},
			};
			return checks;
		}
	} // namespace

	std::vector<std::string> suite_names()
	{
		std::vector<std::string> names;
		for (const auto &[name, fn] : suite())
			names.push_back(name);
		return names;
	}

	std::vector<OracleReport> run_suite(const SuiteOptions &options)
	{
		std::vector<OracleReport> out;
		for (const auto &[name, fn] : suite())
		{
			if (!options.filter.empty() && name.find(options.filter) == std::string::npos)
				continue;
			try
			{
				out.push_back(fn(options));
			}
			catch (const Error &e)
			{
				// A check that cannot run counts as a failure.
				OracleReport r = OracleReport::check(name, std::nan(""), 0.0, 0.0);
				r.pass = false;
				out.push_back(r);
			}
		}
		return out;
	}
} // namespace elastica::oracles
