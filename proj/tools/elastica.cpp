// Command-line front end: distances, geodesics, exponential map, validation.

#include "elastica/io.hpp"
#include "elastica/oracles.hpp"
#include "elastica/shape_distance.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace
{
	using namespace elastica;
	using io::json;

	enum Exit
	{
		ok = 0,
		bad_input = 2,
		numerical = 3,
		validation_failed = 4,
	};

	struct Common
	{
		std::string manifold;
		std::string output;
		std::string format = "json";
		std::string scheme = "srv";
		ShootingConfig cfg;
		int resample = 0;
		bool no_header = false;
	};

	void add_common(CLI::App &app, Common &c, bool shooting)
	{
		app.add_option("--manifold", c.manifold, "Override the curves' manifold, e.g. sphere:3 or euclidean:2");
		app.add_option("-o,--output", c.output, "Write the result here instead of stdout");
		app.add_flag("--no-header", c.no_header, "Omit the header (timestamp, version) for byte-exact comparison");
		if (!shooting)
			return;
		app.add_option("--eps", c.cfg.epsilon, "Step in s; 1/eps must be an integer")->capture_default_str();
		app.add_option("--max-iter", c.cfg.max_iter, "Shooting iterations")->capture_default_str();
		app.add_option("--tol", c.cfg.tol_endpoint, "Endpoint mismatch energy tolerance")->capture_default_str();
		app.add_option("--damping", c.cfg.damping, "Shooting step λ in (0, 1]")->capture_default_str();
		app.add_option("--scheme", c.scheme, "Exponential map update: srv or curve")
			->check(CLI::IsMember({"srv", "curve"}))
			->capture_default_str();
		app.add_option("--resample", c.resample, "Resample inputs to n uniform cells");
	}

	std::optional<Manifold> override_of(const Common &c)
	{
		if (c.manifold.empty())
			return std::nullopt;
		return io::manifold_from_spec(c.manifold);
	}

	ShootingConfig config_of(const Common &c)
	{
		ShootingConfig cfg = c.cfg;
		cfg.scheme = c.scheme == "curve" ? StepScheme::curve : StepScheme::srv;
		cfg.steps();
		return cfg;
	}

	json header()
	{
		const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
		std::ostringstream stamp;
		stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
		return {{"tool", "elastica"}, {"version", "0.1.0"}, {"timestamp", stamp.str()}};
	}

	void emit(const Common &c, const std::string &text)
	{
		if (c.output.empty())
		{
			std::cout << text;
			return;
		}
		std::ofstream out(c.output, std::ios::binary);
		if (!out)
			throw Error(ErrorCode::parse_error, "cannot write '" + c.output + "'");
		out << text;
	}

	void emit_json(const Common &c, json doc)
	{
		if (!c.no_header)
			doc["header"] = header();
		emit(c, doc.dump(2) + "\n");
	}

	std::pair<DiscreteCurve, DiscreteCurve> load_pair(const Common &c, const std::string &a, const std::string &b)
	{
		const auto manifold = override_of(c);
		DiscreteCurve c0 = io::read_curve(a, manifold);
		DiscreteCurve c1 = io::read_curve(b, manifold);
		if (!(c0.manifold() == c1.manifold()))
			throw Error(ErrorCode::wrong_manifold, "'" + a + "' and '" + b + "' live on different manifolds");
		if (c.resample > 0)
		{
			Vector t = Vector::LinSpaced(c.resample + 1, 0.0, 1.0);
			t[c.resample] = 1.0;
			return {resample(c0, t), resample(c1, t)};
		}
		return merge_grids(c0, c1);
	}

	json report_json(const ConvergenceReport &r)
	{
		return {{"iterations", r.iterations},
				{"mismatch", r.mismatch},
				{"converged", r.converged},
				{"mismatch_history", r.mismatch_history},
				{"per_slice_energy", io::vector_to_json(r.per_slice_energy)}};
	}

	int cmd_dist(const Common &c, const std::string &a, const std::string &b)
	{
		const auto [c0, c1] = load_pair(c, a, b);
		const BvpResult result = geodesic_bvp(c0, c1, config_of(c));
		json doc = report_json(result.report);
		doc["distance"] = path_length(result.path);
		emit_json(c, doc);
		if (!result.report.converged)
		{
			std::cerr << "elastica: NoConvergence: mismatch " << result.report.mismatch << " after "
					  << result.report.iterations << " iterations\n";
			return numerical;
		}
		return ok;
	}

	int cmd_geodesic(const Common &c, const std::string &a, const std::string &b)
	{
		const auto [c0, c1] = load_pair(c, a, b);
		const BvpResult result = geodesic_bvp(c0, c1, config_of(c));
		if (c.format == "csv")
			emit(c, io::path_to_csv(result.path));
		else
		{
			json doc = report_json(result.report);
			doc["distance"] = path_length(result.path);
			doc["path"] = io::path_to_json(result.path);
			emit_json(c, doc);
		}
		if (!result.report.converged)
		{
			std::cerr << "elastica: NoConvergence: mismatch " << result.report.mismatch << "\n";
			return numerical;
		}
		return ok;
	}

	int cmd_shape_dist(const Common &c, const std::string &a, const std::string &b, int grid)
	{
		const auto [c0, c1] = load_pair(c, a, b);
		const ShapeDistanceResult r = shape_distance(c0, c1, config_of(c), grid);
		json doc = report_json(r.report);
		doc["distance"] = r.distance;
		doc["surrogate"] = r.surrogate;
		doc["phi"] = {{"times", io::vector_to_json(r.phi.times())}, {"values", io::vector_to_json(r.phi.values())}};
		emit_json(c, doc);
		return ok;
	}

	int cmd_exp(const Common &c, const std::string &curve_path, const std::string &field_path)
	{
		DiscreteCurve curve = io::read_curve(curve_path, override_of(c));
		const TangentField u = io::read_field(field_path, curve);
		const ShootingConfig cfg = config_of(c);
		const CurvePath path = exponential_map(curve, u, cfg);
		if (c.format == "csv")
		{
			emit(c, io::path_to_csv(path));
			return ok;
		}
		json doc;
		doc["path"] = io::path_to_json(path);
		doc["per_slice_energy"] = io::vector_to_json(energy_profile(path));
		doc["length"] = path_length(path);
		if (path.steps() >= 2)
		{
			const EquationResiduals res = equation_residuals(path, cfg.source_sign);
			doc["residuals"] = {{"origin", res.origin}, {"srv", res.srv}};
		}
		emit_json(c, doc);
		return ok;
	}

	int cmd_validate(const Common &c, const std::string &filter, bool flip, std::uint64_t seed)
	{
		oracles::SuiteOptions options;
		options.filter = filter;
		options.source_sign = flip ? 1.0 : -1.0;
		options.seed = seed;
		std::string out;
		bool all = true;
		for (const auto &r : oracles::run_suite(options))
		{
			out += oracles::to_json(r).dump() + "\n";
			all = all && r.pass;
		}
		emit(c, out);
		return all ? ok : validation_failed;
	}

	int exit_for(ErrorCode code)
	{
		switch (code)
		{
		case ErrorCode::no_convergence:
		case ErrorCode::step_collapse:
		case ErrorCode::cut_locus:
		case ErrorCode::degenerate_speed: return numerical;
		default: return bad_input;
		}
	}
} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Reparameterization-invariant distances and geodesics between curves on manifolds"};
	app.require_subcommand(1);

	Common common;
	std::string a, b;
	int grid = 100;
	std::string filter;
	bool flip = false;
	std::uint64_t seed = 7;

	auto *dist = app.add_subcommand("dist", "Geodesic distance between two curves");
	dist->add_option("A", a, "First curve (.json or .csv)")->required();
	dist->add_option("B", b, "Second curve")->required();
	add_common(*dist, common, true);

	auto *shape = app.add_subcommand("shape-dist", "Distance minimized over reparameterizations of B");
	shape->add_option("A", a)->required();
	shape->add_option("B", b)->required();
	shape->add_option("--grid", grid, "Lattice size m of the reparameterization search")
		->check(CLI::Range(2, 2000))
		->capture_default_str();
	add_common(*shape, common, true);

	auto *exp = app.add_subcommand("exp", "Exponential map: geodesic from curve C with initial velocity U");
	exp->add_option("C", a, "Curve")->required();
	exp->add_option("U", b, "Initial velocity field {\"vectors\": [...]}")->required();
	exp->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
	add_common(*exp, common, true);

	auto *geo = app.add_subcommand("geodesic", "Geodesic path between two curves");
	geo->add_option("A", a)->required();
	geo->add_option("B", b)->required();
	geo->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
	add_common(*geo, common, true);

	auto *validate = app.add_subcommand("validate", "Run the oracle suite, one JSON line per check");
	validate->add_option("--filter", filter, "Run only checks whose name contains this text");
	validate->add_flag("--flip-r-sign", flip, "Debug: flip the sign of the curvature source r");
	validate->add_option("--seed", seed, "Seed for the random test data")->capture_default_str();
	validate->add_flag("--list", [](std::int64_t) {
		for (const auto &name : elastica::oracles::suite_names())
			std::cout << name << "\n";
		std::exit(0);
	}, "List check names and exit");
	add_common(*validate, common, false);

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e);
		return bad_input;
	}

	try
	{
		if (*dist)
			return cmd_dist(common, a, b);
		if (*shape)
			return cmd_shape_dist(common, a, b, grid);
		if (*exp)
			return cmd_exp(common, a, b);
		if (*geo)
			return cmd_geodesic(common, a, b);
		return cmd_validate(common, filter, flip, seed);
	}
	catch (const Error &e)
	{
		std::cerr << "elastica: " << e.what() << "\n";
		return exit_for(e.code());
	}
}
