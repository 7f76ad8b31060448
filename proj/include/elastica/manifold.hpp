#pragma once

#include "elastica/types.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace elastica
{
	enum class ManifoldKind
	{
		euclidean,
		sphere,
	};

	template <typename Scalar>
	struct BasicTangent
	{
		Eigen::Matrix<Scalar, Eigen::Dynamic, 1> base;
		Eigen::Matrix<Scalar, Eigen::Dynamic, 1> vec;
	};

	/// Geometry kernel of the base manifold M. Points and tangent vectors live in
	/// ambient coordinates: R^d for Euclidean(d), R^{d+1} for the unit sphere S^d.
	///
	/// The curvature tensor follows R(X,Y)Z = ∇_X∇_Y Z - ∇_Y∇_X Z - ∇_[X,Y] Z,
	/// so on the unit sphere R(x,y)z = <y,z>x - <x,z>y.
	template <typename Scalar>
	class BasicManifold
	{
	public:
		using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
		using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
		using ConstRef = Eigen::Ref<const Vec>;
		using Tangent = BasicTangent<Scalar>;

		static BasicManifold euclidean(int dim)
		{
			if (dim < 1)
				throw Error(ErrorCode::degenerate_input, "Euclidean dimension must be >= 1");
			return BasicManifold(ManifoldKind::euclidean, dim, dim);
		}

		static BasicManifold sphere(int dim)
		{
			if (dim < 1)
				throw Error(ErrorCode::degenerate_input, "sphere dimension must be >= 1");
			return BasicManifold(ManifoldKind::sphere, dim, dim + 1);
		}

		static BasicManifold from_ambient(ManifoldKind kind, int ambient_dim)
		{
			return kind == ManifoldKind::euclidean ? euclidean(ambient_dim) : sphere(ambient_dim - 1);
		}

		ManifoldKind kind() const { return kind_; }
		int dim() const { return dim_; }
		int ambient_dim() const { return ambient_dim_; }
		bool is_flat() const { return kind_ == ManifoldKind::euclidean; }

		std::string name() const
		{
			return kind_ == ManifoldKind::euclidean ? "euclidean" : "sphere";
		}

		bool operator==(const BasicManifold &other) const
		{
			return kind_ == other.kind_ && ambient_dim_ == other.ambient_dim_;
		}

		bool contains(const ConstRef &p, Scalar eps = Scalar(tol::point)) const
		{
			if (p.size() != ambient_dim_ || !p.allFinite())
				return false;
			return is_flat() || std::abs(p.norm() - Scalar(1)) <= eps;
		}

		bool is_tangent(const ConstRef &p, const ConstRef &v, Scalar eps = Scalar(tol::tangent)) const
		{
			if (v.size() != ambient_dim_ || !v.allFinite())
				return false;
			return is_flat() || std::abs(p.dot(v)) <= eps * std::max(Scalar(1), v.norm());
		}

		Scalar inner(const ConstRef &u, const ConstRef &v) const { return u.dot(v); }

		Scalar inner(const Tangent &u, const Tangent &v) const
		{
			if ((u.base - v.base).template lpNorm<Eigen::Infinity>() > Scalar(tol::point))
				throw Error(ErrorCode::base_mismatch, "tangent vectors have different foot points");
			return u.vec.dot(v.vec);
		}

		Vec exp(const ConstRef &p, const ConstRef &u) const
		{
			if (is_flat())
				return p + u;
			const Scalar theta = u.norm();
			if (theta < Scalar(tol::small_angle))
				return (p + u).normalized();
			Vec x = std::cos(theta) * p + (std::sin(theta) / theta) * u;
			return x.normalized();
		}

		Vec log(const ConstRef &p, const ConstRef &x) const
		{
			if (is_flat())
				return x - p;
			const Scalar c = p.dot(x);
			Vec w = x - c * p;
			const Scalar s = w.norm();
			const Scalar theta = std::atan2(s, c);
			if (theta > std::numbers::pi_v<Scalar> - Scalar(tol::cut))
				throw Error(ErrorCode::cut_locus, "points are (nearly) antipodal; sampling too coarse");
			if (s < Scalar(tol::small_angle))
				return w;
			return (theta / s) * w;
		}

		Scalar distance(const ConstRef &p, const ConstRef &x) const
		{
			if (is_flat())
				return (x - p).norm();
			return std::atan2((x - p.dot(x) * p).norm(), p.dot(x));
		}

		/// Parallel transport of u ∈ T_pM to T_xM along the minimizing geodesic.
		Vec transport(const ConstRef &p, const ConstRef &x, const ConstRef &u) const
		{
			if (is_flat())
				return u;
			const Scalar denom = Scalar(1) + p.dot(x);
			check_not_antipodal(p, x, denom);
			return u - (x.dot(u) / denom) * (p + x);
		}

		/// Ambient matrix of transport(p, x, ·), valid on T_pM.
		Mat transport_matrix(const ConstRef &p, const ConstRef &x) const
		{
			Mat id = Mat::Identity(ambient_dim_, ambient_dim_);
			if (is_flat())
				return id;
			const Scalar denom = Scalar(1) + p.dot(x);
			check_not_antipodal(p, x, denom);
			return id - ((p + x) * x.transpose()) / denom;
		}

		Vec curvature(const ConstRef & /*p*/, const ConstRef &x, const ConstRef &y, const ConstRef &z) const
		{
			if (is_flat())
				return Vec::Zero(ambient_dim_);
			return y.dot(z) * x - x.dot(z) * y;
		}

		/// Matrix of z ↦ R(x, y)z.
		Mat curvature_matrix(const ConstRef & /*p*/, const ConstRef &x, const ConstRef &y) const
		{
			if (is_flat())
				return Mat::Zero(ambient_dim_, ambient_dim_);
			return x * y.transpose() - y * x.transpose();
		}

		Vec curvature(const Tangent &x, const Tangent &y, const Tangent &z) const
		{
			const Scalar eps = Scalar(tol::point);
			if ((x.base - y.base).template lpNorm<Eigen::Infinity>() > eps ||
				(x.base - z.base).template lpNorm<Eigen::Infinity>() > eps)
				throw Error(ErrorCode::base_mismatch, "curvature arguments have different foot points");
			return curvature(x.base, x.vec, y.vec, z.vec);
		}

		Vec project(const ConstRef &raw) const
		{
			if (is_flat())
				return raw;
			const Scalar n = raw.norm();
			if (!(n > Scalar(0)))
				throw Error(ErrorCode::degenerate_input, "cannot project the zero vector onto the sphere");
			return raw / n;
		}

		Vec project_tangent(const ConstRef &p, const ConstRef &v) const
		{
			if (is_flat())
				return v;
			return v - p.dot(v) * p;
		}

	private:
		BasicManifold(ManifoldKind kind, int dim, int ambient_dim)
			: kind_(kind), dim_(dim), ambient_dim_(ambient_dim)
		{
		}

		static void check_not_antipodal(const ConstRef &, const ConstRef &, Scalar denom)
		{
			// 1 + cos(theta) ~ (pi - theta)^2 / 2
			const Scalar cut = Scalar(tol::cut);
			if (denom < cut * cut / Scalar(2))
				throw Error(ErrorCode::cut_locus, "transport between (nearly) antipodal points");
		}

		ManifoldKind kind_;
		int dim_;
		int ambient_dim_;
	};

	using Manifold = BasicManifold<double>;
	using Tangent = BasicTangent<double>;
} // namespace elastica
