#include "elastica/manifold.hpp"
#include "elastica/oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace elastica;

namespace
{
	const double pi = std::numbers::pi;

	Vector v3(double x, double y, double z) { return Eigen::Vector3d(x, y, z); }
	Vector v2(double x, double y) { return Eigen::Vector2d(x, y); }

	Vector random_unit(std::mt19937_64 &rng)
	{
		std::normal_distribution<double> normal;
		return v3(normal(rng), normal(rng), normal(rng)).normalized();
	}
} // namespace

TEST(Manifold, Descriptors)
{
	EXPECT_EQ(Manifold::euclidean(2).ambient_dim(), 2);
	EXPECT_EQ(Manifold::sphere(2).ambient_dim(), 3);
	EXPECT_EQ(Manifold::sphere(2).dim(), 2);
	EXPECT_TRUE(Manifold::euclidean(3).is_flat());
	EXPECT_FALSE(Manifold::sphere(2).is_flat());
	EXPECT_THROW(Manifold::euclidean(0), Error);
	EXPECT_EQ(Manifold::from_ambient(ManifoldKind::sphere, 3), Manifold::sphere(2));
}

TEST(Manifold, Inner)
{
	const Manifold e = Manifold::euclidean(2);
	EXPECT_DOUBLE_EQ(e.inner(Tangent{v2(0, 0), v2(3, 4)}, Tangent{v2(0, 0), v2(3, 4)}), 25.0);

	const Manifold s = Manifold::sphere(2);
	EXPECT_DOUBLE_EQ(s.inner(Tangent{v3(1, 0, 0), v3(0, 1, 0)}, Tangent{v3(1, 0, 0), v3(0, 0, 1)}), 0.0);
	EXPECT_NEAR(s.inner(Tangent{v3(0, 0, 1), v3(0.6, -0.8, 0)}, Tangent{v3(0, 0, 1), v3(0.6, -0.8, 0)}), 1.0, 1e-15);
}

TEST(Manifold, InnerRejectsDifferentBases)
{
	const Manifold s = Manifold::sphere(2);
	try
	{
		s.inner(Tangent{v3(1, 0, 0), v3(0, 1, 0)}, Tangent{v3(0, 1, 0), v3(1, 0, 0)});
		FAIL();
	}
	catch (const Error &e)
	{
		EXPECT_EQ(e.code(), ErrorCode::base_mismatch);
	}
}

TEST(Manifold, Exp)
{
	EXPECT_TRUE(Manifold::euclidean(2).exp(v2(0, 0), v2(1, 2)).isApprox(v2(1, 2)));
	const Manifold s = Manifold::sphere(2);
	EXPECT_LT((s.exp(v3(1, 0, 0), v3(0, pi / 2, 0)) - v3(0, 1, 0)).norm(), 1e-15);
	EXPECT_EQ(s.exp(v3(0, 0, 1), v3(0, 0, 0)), v3(0, 0, 1));
	// below the small-angle threshold the result still lies on the sphere
	const Vector tiny = s.exp(v3(0, 0, 1), v3(1e-9, 0, 0));
	EXPECT_NEAR(tiny.norm(), 1.0, 1e-15);
	EXPECT_NEAR(tiny[0], 1e-9, 1e-20);
}

TEST(Manifold, Log)
{
	EXPECT_TRUE(Manifold::euclidean(3).log(v3(1, 1, 1), v3(2, 0, 1)).isApprox(v3(1, -1, 0)));
	const Manifold s = Manifold::sphere(2);
	EXPECT_LT((s.log(v3(1, 0, 0), v3(0, 1, 0)) - v3(0, pi / 2, 0)).norm(), 1e-15);
	EXPECT_EQ(s.log(v3(0, 0, 1), v3(0, 0, 1)), v3(0, 0, 0));
}

TEST(Manifold, LogAtCutLocus)
{
	const Manifold s = Manifold::sphere(2);
	try
	{
		s.log(v3(1, 0, 0), s.project(v3(-1, 1e-9, 0)));
		FAIL();
	}
	catch (const Error &e)
	{
		EXPECT_EQ(e.code(), ErrorCode::cut_locus);
	}
	// just inside the tolerance still works
	const double theta = pi - 1e-5;
	EXPECT_NO_THROW(s.log(v3(1, 0, 0), v3(std::cos(theta), std::sin(theta), 0)));
}

TEST(Manifold, ExpLogRoundTrip)
{
	const Manifold s = Manifold::sphere(2);
	std::mt19937_64 rng(1);
	std::uniform_real_distribution<double> len(0.0, pi / 2);
	for (int i = 0; i < 200; ++i)
	{
		const Vector p = random_unit(rng);
		const Vector u = s.project_tangent(p, random_unit(rng)).normalized() * len(rng);
		EXPECT_LT((s.log(p, s.exp(p, u)) - u).norm(), 1e-8);
		const Vector x = random_unit(rng);
		if (p.dot(x) > -0.99)
		{
			EXPECT_LT((s.exp(p, s.log(p, x)) - x).norm(), 1e-9);
			EXPECT_NEAR(s.log(p, x).norm(), s.distance(p, x), 1e-12);
		}
	}
}

TEST(Manifold, TransportExamples)
{
	const Manifold s = Manifold::sphere(2);
	const Vector u = v3(0, 0.3, -0.2);
	EXPECT_EQ(s.transport(v3(1, 0, 0), v3(1, 0, 0), u), u);
	EXPECT_LT((s.transport(v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)) - v3(0, 0, 1)).norm(), 1e-15);
	EXPECT_LT((s.transport(v3(1, 0, 0), v3(0, 1, 0), v3(0, 1, 0)) - v3(-1, 0, 0)).norm(), 1e-15);
	EXPECT_EQ(Manifold::euclidean(2).transport(v2(0, 0), v2(5, 1), v2(1, 2)), v2(1, 2));
}

TEST(Manifold, TransportMatchesOdeOracle)
{
	const Manifold s = Manifold::sphere(2);
	Matrix pts(3, 2);
	pts << 1, 0, 0, 1, 0, 0;
	const DiscreteCurve quarter = DiscreteCurve::uniform(s, pts);
	const Vector u = v3(0, 1, 0);
	const Vector ode = oracles::transport_ode_oracle(quarter, 0, 1, u, 400);
	EXPECT_LT((s.transport(quarter.point(0), quarter.point(1), u) - ode).norm(), 1e-8);
	EXPECT_LT((ode - v3(-1, 0, 0)).norm(), 1e-8);
}

TEST(Manifold, TransportIsIsometry)
{
	const Manifold s = Manifold::sphere(2);
	std::mt19937_64 rng(2);
	for (int i = 0; i < 200; ++i)
	{
		const Vector p = random_unit(rng);
		const Vector x = random_unit(rng);
		if (p.dot(x) < -0.99)
			continue;
		const Vector a = s.project_tangent(p, random_unit(rng));
		const Vector b = s.project_tangent(p, random_unit(rng));
		const Vector ta = s.transport(p, x, a);
		const Vector tb = s.transport(p, x, b);
		EXPECT_NEAR(ta.dot(tb), a.dot(b), 1e-10);
		EXPECT_NEAR(ta.dot(x), 0.0, 1e-12);
		EXPECT_LT((s.transport_matrix(p, x) * a - ta).norm(), 1e-14);
	}
}

TEST(Manifold, TransportNearAntipodeThrows)
{
	const Manifold s = Manifold::sphere(2);
	EXPECT_THROW(s.transport(v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0)), Error);
}

TEST(Manifold, Curvature)
{
	const Manifold e = Manifold::euclidean(3);
	EXPECT_EQ(e.curvature(v3(0, 0, 0), v3(1, 2, 3), v3(0, 1, 0), v3(4, 0, 1)), v3(0, 0, 0));

	const Manifold s = Manifold::sphere(2);
	const Vector p = v3(0, 0, 1);
	EXPECT_EQ(s.curvature(p, v3(1, 0, 0), v3(0, 1, 0), v3(0, 1, 0)), v3(1, 0, 0));
	EXPECT_EQ(s.curvature(p, v3(1, 0.5, 0), v3(1, 0.5, 0), v3(0, 1, 0)), v3(0, 0, 0));
	EXPECT_THROW(s.curvature(Tangent{p, v3(1, 0, 0)}, Tangent{v3(1, 0, 0), v3(0, 1, 0)}, Tangent{p, v3(0, 1, 0)}),
				 Error);
}

TEST(Manifold, CurvatureSymmetries)
{
	const Manifold s = Manifold::sphere(2);
	std::mt19937_64 rng(3);
	for (int i = 0; i < 50; ++i)
	{
		const Vector p = random_unit(rng);
		auto t = [&] { return Vector(s.project_tangent(p, random_unit(rng))); };
		const Vector x = t(), y = t(), z = t(), w = t();
		EXPECT_LT((s.curvature(p, x, y, z) + s.curvature(p, y, x, z)).norm(), 1e-15);
		EXPECT_NEAR(s.curvature(p, x, y, z).dot(w), -s.curvature(p, x, y, w).dot(z), 1e-15);
		EXPECT_LT((s.curvature_matrix(p, x, y) * z - s.curvature(p, x, y, z)).norm(), 1e-15);
	}
}

TEST(Manifold, HolonomyFixesCurvatureSign)
{
	const Manifold s = Manifold::sphere(2);
	const Vector p = v3(0, 0, 1);
	const Vector x = v3(1, 0, 0);
	const Vector y = v3(0, 1, 0);
	const Matrix probe = oracles::holonomy_probe(s, p, x, y, 1e-2);
	const Matrix exact = s.curvature_matrix(p, x, y);
	for (const Vector &u : {x, y, Vector(v3(0.6, 0.8, 0))})
	{
		const Vector expected = exact * u;
		EXPECT_LT((probe * u - expected).norm(), 0.05 * expected.norm());
	}
}

TEST(Manifold, HolonomyScalesQuadratically)
{
	const Manifold s = Manifold::sphere(2);
	const Vector p = v3(0, 0, 1);
	const Matrix big = oracles::holonomy_probe(s, p, v3(1, 0, 0), v3(0, 1, 0), 2e-2);
	const Matrix small = oracles::holonomy_probe(s, p, v3(1, 0, 0), v3(0, 1, 0), 1e-2);
	// probes are already divided by a², so the raw deviation quarters when these agree
	const double raw_ratio = (big * 4e-4).norm() / (small * 1e-4).norm();
	EXPECT_NEAR(raw_ratio, 4.0, 0.05);
	EXPECT_TRUE(oracles::holonomy_probe(Manifold::euclidean(2), v2(0, 0), v2(1, 0), v2(0, 1), 1e-2).isZero());
}

TEST(Manifold, Projections)
{
	const Manifold s = Manifold::sphere(2);
	EXPECT_EQ(s.project(v3(2, 0, 0)), v3(1, 0, 0));
	EXPECT_EQ(s.project_tangent(v3(1, 0, 0), v3(5, 1, 0)), v3(0, 1, 0));
	EXPECT_EQ(s.project(s.project(v3(1, 2, 3))), s.project(v3(1, 2, 3)));
	EXPECT_THROW(s.project(v3(0, 0, 0)), Error);
	const Manifold e = Manifold::euclidean(2);
	EXPECT_EQ(e.project(v2(3, -1)), v2(3, -1));
	EXPECT_EQ(e.project_tangent(v2(3, -1), v2(2, 2)), v2(2, 2));
}

TEST(Manifold, ValidityChecks)
{
	const Manifold s = Manifold::sphere(2);
	EXPECT_TRUE(s.contains(v3(0, 0, 1)));
	EXPECT_FALSE(s.contains(v3(0, 0, 1.001)));
	EXPECT_FALSE(s.contains(v2(1, 0)));
	EXPECT_TRUE(s.is_tangent(v3(0, 0, 1), v3(1, 2, 0)));
	EXPECT_FALSE(s.is_tangent(v3(0, 0, 1), v3(1, 2, 0.1)));
}

TEST(Manifold, LongDoubleKernel)
{
	using Ld = BasicManifold<long double>;
	using V = Ld::Vec;
	const Ld s = Ld::sphere(2);
	V p(3), x(3);
	p << 1, 0, 0;
	x << 0, 1, 0;
	const V u = s.log(p, x);
	EXPECT_NEAR(static_cast<double>(u[1]), pi / 2, 1e-15);
	EXPECT_LT(static_cast<double>((s.exp(p, u) - x).norm()), 1e-17);
	V z(3);
	z << 0, 1, 0;
	EXPECT_LT(static_cast<double>((s.transport(p, x, z) + p).norm()), 1e-17);

	using Fl = BasicManifold<float>;
	const Fl sf = Fl::sphere(2);
	Fl::Vec pf(3), xf(3);
	pf << 1, 0, 0;
	xf << 0, 0, 1;
	EXPECT_NEAR(sf.distance(pf, xf), static_cast<float>(pi / 2), 1e-6f);
}
