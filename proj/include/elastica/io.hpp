#pragma once

#include "elastica/elastic_metric.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace elastica::io
{
	using json = nlohmann::json;

	/// Curve documents: {"manifold": {"kind": "euclidean"|"sphere", "ambient_dim": d},
	/// "times": [...], "points": [[...], ...]}. "times" may be omitted for a uniform grid.
	/// Sphere samples within 1e-6 of unit norm are normalized on load.
	DiscreteCurve curve_from_json(const json &doc, const std::optional<Manifold> &manifold_override = std::nullopt);
	json curve_to_json(const DiscreteCurve &c);

	/// CSV: one row per sample, time first, then the ambient coordinates. A
	/// non-numeric first line is taken as a header. The manifold must be given.
	DiscreteCurve curve_from_csv(const std::string &text, const Manifold &manifold);

	/// Reads a curve from a .json or .csv file.
	DiscreteCurve read_curve(const std::string &path, const std::optional<Manifold> &manifold_override);

	/// Field documents: {"vectors": [[...], ...]}, one vector per sample of c.
	/// Sphere vectors are projected onto the tangent space when their normal
	/// component is below 1e-6.
	TangentField field_from_json(const json &doc, const DiscreteCurve &c);
	TangentField read_field(const std::string &path, const DiscreteCurve &c);
	json field_to_json(const TangentField &field);

	json manifold_to_json(const Manifold &m);
	Manifold manifold_from_json(const json &doc);
	/// "euclidean:<d>" / "sphere:<ambient d+1>" style spec from the command line,
	/// e.g. "sphere:3" for S^2 in R^3.
	Manifold manifold_from_spec(const std::string &spec);

	json path_to_json(const CurvePath &path);
	/// One row per (s, t) sample: s, t, coordinates.
	std::string path_to_csv(const CurvePath &path);

	json vector_to_json(const ConstVectorRef &v);

	std::string read_text(const std::string &path);
} // namespace elastica::io
