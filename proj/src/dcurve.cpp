#include "elastica/dcurve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace elastica
{
	namespace
	{
		void check_grid(const Vector &times, const char *what)
		{
			if (times.size() < 2)
				throw Error(ErrorCode::invalid_curve, std::string(what) + " needs at least two samples");
			if (times[0] != 0.0 || times[times.size() - 1] != 1.0)
				throw Error(ErrorCode::invalid_curve, std::string(what) + " must start at 0 and end at 1");
			for (Eigen::Index k = 0; k + 1 < times.size(); ++k)
			{
				if (!(times[k + 1] > times[k]))
				{
					std::ostringstream msg;
					msg << what << " not strictly increasing at index " << k + 1;
					throw Error(ErrorCode::invalid_curve, msg.str());
				}
			}
		}

		// Index j of the cell [t_j, t_{j+1}] containing t, clamped to the last cell.
		Eigen::Index locate(const Vector &times, double t)
		{
			const auto *begin = times.data();
			const auto *end = begin + times.size();
			auto it = std::upper_bound(begin, end, t);
			Eigen::Index j = static_cast<Eigen::Index>(it - begin) - 1;
			return std::clamp<Eigen::Index>(j, 0, times.size() - 2);
		}
	} // namespace

	DiscreteCurve::DiscreteCurve(Manifold manifold, Vector times, Matrix points)
		: manifold_(std::move(manifold)), times_(std::move(times)), points_(std::move(points))
	{
		check_grid(times_, "time grid");
		if (points_.cols() != times_.size())
			throw Error(ErrorCode::invalid_curve, "number of points differs from number of times");
		if (points_.rows() != manifold_.ambient_dim())
			throw Error(ErrorCode::invalid_curve, "point dimension differs from the manifold's ambient dimension");
		for (Eigen::Index k = 0; k < points_.cols(); ++k)
		{
			if (!manifold_.contains(points_.col(k)))
			{
				std::ostringstream msg;
				msg << "point " << k << " is not on the " << manifold_.name();
				throw Error(ErrorCode::invalid_curve, msg.str());
			}
		}
		if (auto bad = immersion_violation(manifold_, times_, points_))
		{
			std::ostringstream msg;
			msg << "samples " << *bad << " and " << *bad + 1 << " coincide (not an immersion)";
			throw Error(ErrorCode::invalid_curve, msg.str());
		}
	}

	DiscreteCurve DiscreteCurve::uniform(Manifold manifold, Matrix points)
	{
		Vector times = Vector::LinSpaced(points.cols(), 0.0, 1.0);
		times[0] = 0.0;
		times[times.size() - 1] = 1.0;
		return DiscreteCurve(std::move(manifold), std::move(times), std::move(points));
	}

	std::optional<Eigen::Index> DiscreteCurve::immersion_violation(const Manifold &manifold, const Vector &times,
																   const Matrix &points)
	{
		for (Eigen::Index k = 0; k + 1 < points.cols(); ++k)
		{
			const double d = manifold.distance(points.col(k), points.col(k + 1));
			if (!(d >= tol::immersion * (times[k + 1] - times[k])))
				return k;
		}
		return std::nullopt;
	}

	bool DiscreteCurve::same_grid(const DiscreteCurve &other) const
	{
		return manifold_ == other.manifold_ && times_.size() == other.times_.size() &&
			   (times_ - other.times_).lpNorm<Eigen::Infinity>() <= 1e-14;
	}

	Reparam::Reparam(Vector times, Vector values) : times_(std::move(times)), values_(std::move(values))
	{
		check_grid(times_, "reparameterization grid");
		if (values_.size() != times_.size())
			throw Error(ErrorCode::invalid_curve, "reparameterization needs one value per grid time");
		check_grid(values_, "reparameterization values");
	}

	Reparam Reparam::identity(const Vector &times) { return Reparam(times, times); }

	double Reparam::operator()(double t) const
	{
		if (t <= 0.0)
			return 0.0;
		if (t >= 1.0)
			return 1.0;
		const Eigen::Index j = locate(times_, t);
		const double lambda = (t - times_[j]) / (times_[j + 1] - times_[j]);
		return (1.0 - lambda) * values_[j] + lambda * values_[j + 1];
	}

	Matrix cell_velocity(const DiscreteCurve &c)
	{
		const auto &m = c.manifold();
		Matrix ct(m.ambient_dim(), c.cells());
		for (Eigen::Index k = 0; k < c.cells(); ++k)
			ct.col(k) = m.log(c.point(k), c.point(k + 1)) / c.dt(k);
		return ct;
	}

	TangentField velocity(const DiscreteCurve &c)
	{
		const auto &m = c.manifold();
		const Eigen::Index n = c.cells();
		TangentField v(m.ambient_dim(), n + 1);
		v.leftCols(n) = cell_velocity(c);
		v.col(n) = m.transport(c.point(n - 1), c.point(n), v.col(n - 1));
		return v;
	}

	SrvCurve srvf(const DiscreteCurve &c)
	{
		Matrix q = cell_velocity(c);
		for (Eigen::Index k = 0; k < q.cols(); ++k)
		{
			const double speed = q.col(k).norm();
			if (!(speed > tol::immersion))
				throw Error(ErrorCode::degenerate_speed, "vanishing speed in cell " + std::to_string(k));
			q.col(k) /= std::sqrt(speed);
		}
		return {std::move(q)};
	}

	DiscreteCurve srv_inverse(const Manifold &manifold, const Vector &times, const ConstVectorRef &origin,
							  const Matrix &q)
	{
		Matrix points(manifold.ambient_dim(), q.cols() + 1);
		points.col(0) = origin;
		for (Eigen::Index k = 0; k < q.cols(); ++k)
		{
			const double dt = times[k + 1] - times[k];
			points.col(k + 1) = manifold.exp(points.col(k), dt * q.col(k).norm() * q.col(k));
		}
		return DiscreteCurve(manifold, times, std::move(points));
	}

	Matrix cell_covariant_derivative(const DiscreteCurve &c, const TangentField &w)
	{
		const auto &m = c.manifold();
		if (w.cols() != c.samples() || w.rows() != m.ambient_dim())
			throw Error(ErrorCode::base_mismatch, "field is not aligned with the curve");
		Matrix d(m.ambient_dim(), c.cells());
		for (Eigen::Index k = 0; k < c.cells(); ++k)
			d.col(k) = (m.transport(c.point(k + 1), c.point(k), w.col(k + 1)) - w.col(k)) / c.dt(k);
		return d;
	}

	TangentField covariant_derivative(const DiscreteCurve &c, const TangentField &w)
	{
		const auto &m = c.manifold();
		const Eigen::Index n = c.cells();
		TangentField d(m.ambient_dim(), n + 1);
		d.leftCols(n) = cell_covariant_derivative(c, w);
		d.col(n) = m.transport(c.point(n - 1), c.point(n), d.col(n - 1));
		return d;
	}

	Vector transport_along(const DiscreteCurve &c, Eigen::Index from, Eigen::Index to, const ConstVectorRef &u)
	{
		if (from < 0 || to < 0 || from >= c.samples() || to >= c.samples())
			throw Error(ErrorCode::degenerate_input, "transport index out of range");
		const auto &m = c.manifold();
		Vector v = u;
		const Eigen::Index step = to > from ? 1 : -1;
		for (Eigen::Index k = from; k != to; k += step)
			v = m.transport(c.point(k), c.point(k + step), v);
		return v;
	}

	TangentField parallel_field(const DiscreteCurve &c, const ConstVectorRef &u)
	{
		const auto &m = c.manifold();
		TangentField h(m.ambient_dim(), c.samples());
		h.col(0) = u;
		for (Eigen::Index k = 0; k < c.cells(); ++k)
			h.col(k + 1) = m.transport(c.point(k), c.point(k + 1), h.col(k));
		return h;
	}

	Vector evaluate(const DiscreteCurve &c, double t)
	{
		const auto &times = c.times();
		const Eigen::Index j = locate(times, t);
		const double lambda = std::clamp((t - times[j]) / c.dt(j), 0.0, 1.0);
		if (lambda == 0.0)
			return c.point(j);
		if (lambda == 1.0)
			return c.point(j + 1);
		const auto &m = c.manifold();
		return m.exp(c.point(j), lambda * m.log(c.point(j), c.point(j + 1)));
	}

	DiscreteCurve resample(const DiscreteCurve &c, const Vector &times)
	{
		Matrix points(c.manifold().ambient_dim(), times.size());
		for (Eigen::Index k = 0; k < times.size(); ++k)
			points.col(k) = evaluate(c, times[k]);
		return DiscreteCurve(c.manifold(), times, std::move(points));
	}

	DiscreteCurve reparameterize(const DiscreteCurve &c, const Reparam &phi)
	{
		Matrix points(c.manifold().ambient_dim(), c.samples());
		for (Eigen::Index k = 0; k < c.samples(); ++k)
			points.col(k) = evaluate(c, phi(c.times()[k]));
		return DiscreteCurve(c.manifold(), c.times(), std::move(points));
	}

	TangentField reparameterize_field(const DiscreteCurve &c, const TangentField &h, const Reparam &phi)
	{
		const auto &m = c.manifold();
		const auto &times = c.times();
		TangentField out(m.ambient_dim(), c.samples());
		for (Eigen::Index k = 0; k < c.samples(); ++k)
		{
			const double t = phi(times[k]);
			const Eigen::Index j = locate(times, t);
			const double lambda = std::clamp((t - times[j]) / c.dt(j), 0.0, 1.0);
			const Vector x = evaluate(c, t);
			out.col(k) = (1.0 - lambda) * m.transport(c.point(j), x, h.col(j)) +
						 lambda * m.transport(c.point(j + 1), x, h.col(j + 1));
		}
		return out;
	}
} // namespace elastica
