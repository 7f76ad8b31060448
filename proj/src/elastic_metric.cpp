#include "elastica/elastic_metric.hpp"

#include "elastica/parallel.hpp"

#include <cmath>

namespace elastica
{
	namespace
	{
		Eigen::Index checked_slice(const CurvePath &path, Eigen::Index i)
		{
			if (i < 0 || i > path.steps() || (i == path.steps() && !path.has_velocities()))
				throw Error(ErrorCode::degenerate_input, "slice index out of range");
			return i;
		}

		// Transport matrices from c(s_i, 0) back to c(0, 0) along the origin curve.
		std::vector<Matrix> origin_transports(const CurvePath &path)
		{
			const auto &m = path.manifold();
			std::vector<Matrix> a(static_cast<size_t>(path.steps()) + 1);
			a[0] = Matrix::Identity(m.ambient_dim(), m.ambient_dim());
			for (Eigen::Index i = 1; i <= path.steps(); ++i)
				a[i] = a[i - 1] * m.transport_matrix(path.slice(i).origin(), path.slice(i - 1).origin());
			return a;
		}

		// Transport matrices from p_k back to p_0 along c.
		std::vector<Matrix> backward_chain(const DiscreteCurve &c)
		{
			const auto &m = c.manifold();
			std::vector<Matrix> n(static_cast<size_t>(c.samples()));
			n[0] = Matrix::Identity(m.ambient_dim(), m.ambient_dim());
			for (Eigen::Index k = 1; k < c.samples(); ++k)
				n[k] = n[k - 1] * m.transport_matrix(c.point(k), c.point(k - 1));
			return n;
		}

		double raised_length(const CurvePath &path, bool with_omega)
		{
			const auto raised = raise_q(path);
			const auto &times = path.front().times();
			const Eigen::Index S = path.steps();
			Vector integrand(S);
			parallel_for<Eigen::Index>(0, S, [&](Eigen::Index i) {
				const double ds = path.ds(i);
				const Matrix qs = (raised[i + 1] - raised[i]) / ds;
				const Matrix total = with_omega ? Matrix(qs + omega(path, i)) : qs;
				double e = path.cs(i).col(0).squaredNorm();
				for (Eigen::Index k = 0; k < total.cols(); ++k)
					e += (times[k + 1] - times[k]) * total.col(k).squaredNorm();
				integrand[i] = e;
			});
			double length = 0.0;
			for (Eigen::Index i = 0; i < S; ++i)
				length += path.ds(i) * std::sqrt(integrand[i]);
			return length;
		}
	} // namespace

	CurvePath::CurvePath(Vector s_grid, std::vector<DiscreteCurve> slices, std::vector<TangentField> velocities)
		: s_grid_(std::move(s_grid)), slices_(std::move(slices)), velocities_(std::move(velocities))
	{
		if (s_grid_.size() < 2 || static_cast<size_t>(s_grid_.size()) != slices_.size())
			throw Error(ErrorCode::invalid_curve, "path needs one slice per s value and at least two slices");
		if (s_grid_[0] != 0.0 || s_grid_[s_grid_.size() - 1] != 1.0)
			throw Error(ErrorCode::invalid_curve, "s grid must start at 0 and end at 1");
		for (Eigen::Index i = 0; i + 1 < s_grid_.size(); ++i)
			if (!(s_grid_[i + 1] > s_grid_[i]))
				throw Error(ErrorCode::invalid_curve, "s grid not strictly increasing");
		for (const auto &slice : slices_)
			if (!slice.same_grid(slices_.front()))
				throw Error(ErrorCode::invalid_curve, "path slices do not share one manifold and t-grid");
		if (!velocities_.empty())
		{
			if (velocities_.size() != slices_.size())
				throw Error(ErrorCode::invalid_curve, "path needs one velocity field per slice");
			for (const auto &v : velocities_)
				if (v.cols() != slices_.front().samples() || v.rows() != manifold().ambient_dim())
					throw Error(ErrorCode::base_mismatch, "path velocity field not aligned with its slice");
		}
	}

	TangentField CurvePath::cs(Eigen::Index i) const
	{
		if (has_velocities())
			return velocities_[static_cast<size_t>(i)];
		if (i < 0 || i >= steps())
			throw Error(ErrorCode::degenerate_input, "finite-difference c_s needs a following slice");
		const auto &m = manifold();
		const auto &a = slice(i);
		const auto &b = slice(i + 1);
		TangentField v(m.ambient_dim(), a.samples());
		for (Eigen::Index k = 0; k < a.samples(); ++k)
			v.col(k) = m.log(a.point(k), b.point(k)) / ds(i);
		return v;
	}

	Matrix srv_differential(const DiscreteCurve &c, const TangentField &h)
	{
		const Matrix ct = cell_velocity(c);
		const Matrix dh = cell_covariant_derivative(c, h);
		Matrix out(ct.rows(), ct.cols());
		for (Eigen::Index k = 0; k < ct.cols(); ++k)
		{
			const double speed = ct.col(k).norm();
			if (!(speed > tol::immersion))
				throw Error(ErrorCode::degenerate_speed, "vanishing speed in cell " + std::to_string(k));
			const Vector v = ct.col(k) / speed;
			// |c'|^{1/2}(a^⊥ + ½a^∥) with a = ∇_t h / |c'|
			const Vector a = dh.col(k) / speed;
			const double along = a.dot(v);
			out.col(k) = std::sqrt(speed) * (a - 0.5 * along * v);
		}
		return out;
	}

	TangentField lift_srv_velocity(const DiscreteCurve &c, const ConstVectorRef &origin_velocity,
								   const Matrix &srv_velocity)
	{
		const auto &m = c.manifold();
		const Matrix ct = cell_velocity(c);
		if (srv_velocity.cols() != c.cells())
			throw Error(ErrorCode::base_mismatch, "SRV velocity needs one vector per cell");
		TangentField u(m.ambient_dim(), c.samples());
		u.col(0) = origin_velocity;
		for (Eigen::Index k = 0; k < c.cells(); ++k)
		{
			const double speed = ct.col(k).norm();
			if (!(speed > tol::immersion))
				throw Error(ErrorCode::degenerate_speed, "vanishing speed in cell " + std::to_string(k));
			const Vector v = ct.col(k) / speed;
			const auto w = srv_velocity.col(k);
			const Vector dt_u = std::sqrt(speed) * (w + w.dot(v) * v);
			u.col(k + 1) = m.transport(c.point(k), c.point(k + 1), u.col(k) + c.dt(k) * dt_u);
		}
		return u;
	}

	double metric_G(const DiscreteCurve &c, const TangentField &h, const TangentField &k)
	{
		const Matrix ct = cell_velocity(c);
		const Matrix dh = cell_covariant_derivative(c, h);
		const Matrix dk = cell_covariant_derivative(c, k);
		double g = h.col(0).dot(k.col(0));
		for (Eigen::Index j = 0; j < ct.cols(); ++j)
		{
			const double speed = ct.col(j).norm();
			if (!(speed > tol::immersion))
				throw Error(ErrorCode::degenerate_speed, "vanishing speed in cell " + std::to_string(j));
			const Vector v = ct.col(j) / speed;
			const Vector a = dh.col(j) / speed;
			const Vector b = dk.col(j) / speed;
			const Vector a_par = a.dot(v) * v;
			const Vector b_par = b.dot(v) * v;
			const double integrand = (a - a_par).dot(b - b_par) + 0.25 * a_par.dot(b_par);
			g += integrand * speed * c.dt(j);
		}
		return g;
	}

	double tilde_G(const DiscreteCurve &c, const BundleVector &xi, const BundleVector &eta)
	{
		const Eigen::Index n = c.cells();
		auto aligned = [&](const BundleVector &b) {
			return b.origin_h.size() == c.manifold().ambient_dim() && b.vertical.rows() == c.manifold().ambient_dim() &&
				   (b.vertical.cols() == n || b.vertical.cols() == n + 1);
		};
		if (!aligned(xi) || !aligned(eta))
			throw Error(ErrorCode::base_mismatch, "bundle vectors are not based on this curve");
		double g = xi.origin_h.dot(eta.origin_h);
		for (Eigen::Index k = 0; k < n; ++k)
			g += c.dt(k) * xi.vertical.col(k).dot(eta.vertical.col(k));
		return g;
	}

	Matrix nabla_s_q(const CurvePath &path, Eigen::Index i)
	{
		checked_slice(path, i);
		return srv_differential(path.slice(i), path.cs(i));
	}

	double slice_energy(const CurvePath &path, Eigen::Index i)
	{
		const TangentField cs = path.cs(checked_slice(path, i));
		const DiscreteCurve &c = path.slice(i);
		const Matrix dq = srv_differential(c, cs);
		double e = cs.col(0).squaredNorm();
		for (Eigen::Index k = 0; k < dq.cols(); ++k)
			e += c.dt(k) * dq.col(k).squaredNorm();
		return e;
	}

	namespace
	{
		Vector slice_energies(const CurvePath &path)
		{
			const Eigen::Index S = path.steps();
			Vector e(S);
			parallel_for<Eigen::Index>(0, S, [&](Eigen::Index i) { e[i] = slice_energy(path, i); });
			return e;
		}
	} // namespace

	double path_energy(const CurvePath &path)
	{
		const Vector e = slice_energies(path);
		double total = 0.0;
		for (Eigen::Index i = 0; i < e.size(); ++i)
			total += path.ds(i) * e[i];
		return total;
	}

	double path_length(const CurvePath &path)
	{
		const Vector e = slice_energies(path);
		double total = 0.0;
		for (Eigen::Index i = 0; i < e.size(); ++i)
			total += path.ds(i) * std::sqrt(e[i]);
		return total;
	}

	std::vector<Matrix> raise_q(const CurvePath &path)
	{
		const auto origin = origin_transports(path);
		std::vector<Matrix> raised(path.slices().size());
		parallel_for<Eigen::Index>(0, path.steps() + 1, [&](Eigen::Index i) {
			const DiscreteCurve &c = path.slice(i);
			const Matrix q = srvf(c).q;
			const auto chain = backward_chain(c);
			Matrix out(q.rows(), q.cols());
			for (Eigen::Index k = 0; k < q.cols(); ++k)
				out.col(k) = origin[i] * (chain[k] * q.col(k));
			raised[i] = std::move(out);
		});
		return raised;
	}

	Matrix omega(const CurvePath &path, Eigen::Index i)
	{
		const DiscreteCurve &c = path.slice(checked_slice(path, i));
		const auto &m = c.manifold();
		const Eigen::Index n = c.cells();
		const int d = m.ambient_dim();
		if (m.is_flat())
			return Matrix::Zero(d, n);

		const Matrix q = srvf(c).q;
		const Matrix ct = cell_velocity(c);
		const TangentField cs = path.cs(i);
		const auto back = backward_chain(c);

		// Ω(s_i, t_k) = A_i Σ_{j<k} dt_j N_j R(c_t, c_s)|_j N_j^{-1} (N_k q_k), where N_j
		// transports p_j → p_0 and A_i transports c(s_i, 0) → c(0, 0).
		Matrix forward = Matrix::Identity(d, d); // p_0 → p_j
		Matrix accumulated = Matrix::Zero(d, d);
		Matrix out(d, n);
		Matrix origin = Matrix::Identity(d, d);
		for (Eigen::Index a = 1; a <= i; ++a)
			origin = origin * m.transport_matrix(path.slice(a).origin(), path.slice(a - 1).origin());
		for (Eigen::Index k = 0; k < n; ++k)
		{
			out.col(k) = origin * (accumulated * (back[k] * q.col(k)));
			accumulated += c.dt(k) * back[k] * m.curvature_matrix(c.point(k), ct.col(k), cs.col(k)) * forward;
			forward = m.transport_matrix(c.point(k), c.point(k + 1)) * forward;
		}
		return out;
	}

	Vector omega(const CurvePath &path, Eigen::Index i, Eigen::Index k)
	{
		const Matrix all = omega(path, i);
		if (k < 0 || k >= all.cols())
			throw Error(ErrorCode::degenerate_input, "t index must name a cell");
		return all.col(k);
	}

	double path_length_raised(const CurvePath &path) { return raised_length(path, true); }

	double zhang_path_length(const CurvePath &path) { return raised_length(path, false); }
} // namespace elastica
