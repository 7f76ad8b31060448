#include "elastica/io.hpp"

#include <cmath>
#include <fstream>
#include <locale>
#include <sstream>

namespace elastica::io
{
	namespace
	{
		[[noreturn]] void parse_fail(const std::string &what) { throw Error(ErrorCode::parse_error, what); }

		double number_at(const json &v, const std::string &where)
		{
			if (!v.is_number())
				parse_fail(where + ": expected a number");
			return v.get<double>();
		}

		Vector vector_from(const json &row, Eigen::Index expected, const std::string &where)
		{
			if (!row.is_array())
				parse_fail(where + ": expected an array");
			if (static_cast<Eigen::Index>(row.size()) != expected)
				parse_fail(where + ": expected " + std::to_string(expected) + " coordinates, got " +
						   std::to_string(row.size()));
			Vector v(expected);
			for (Eigen::Index j = 0; j < expected; ++j)
				v[j] = number_at(row[static_cast<size_t>(j)], where + "[" + std::to_string(j) + "]");
			return v;
		}

		Vector snap_point(const Manifold &m, Vector p, const std::string &where)
		{
			if (m.is_flat())
				return p;
			if (std::abs(p.norm() - 1.0) > 1e-6)
				parse_fail(where + ": point is not on the unit sphere (|p| = " + std::to_string(p.norm()) + ")");
			return p.normalized();
		}

		DiscreteCurve build(const Manifold &m, Vector times, Matrix points)
		{
			try
			{
				return DiscreteCurve(m, std::move(times), std::move(points));
			}
			catch (const Error &e)
			{
				parse_fail(std::string("invalid curve: ") + e.what());
			}
		}

		std::string format_number(double x)
		{
			std::ostringstream out;
			out.imbue(std::locale::classic());
			out.precision(17);
			out << x;
			return out.str();
		}
	} // namespace

	json manifold_to_json(const Manifold &m) { return {{"kind", m.name()}, {"ambient_dim", m.ambient_dim()}}; }

	Manifold manifold_from_json(const json &doc)
	{
		if (!doc.is_object() || !doc.contains("kind") || !doc.contains("ambient_dim"))
			parse_fail("manifold: expected {\"kind\", \"ambient_dim\"}");
		if (!doc["kind"].is_string() || !doc["ambient_dim"].is_number_integer())
			parse_fail("manifold: kind must be a string and ambient_dim an integer");
		const std::string kind = doc["kind"].get<std::string>();
		const int dim = doc["ambient_dim"].get<int>();
		try
		{
			if (kind == "euclidean")
				return Manifold::euclidean(dim);
			if (kind == "sphere")
				return Manifold::sphere(dim - 1);
		}
		catch (const Error &e)
		{
			parse_fail(std::string("manifold: ") + e.what());
		}
		parse_fail("manifold.kind: unknown manifold '" + kind + "'");
	}

	Manifold manifold_from_spec(const std::string &spec)
	{
		const auto colon = spec.find(':');
		if (colon == std::string::npos)
			parse_fail("manifold spec '" + spec + "' must look like euclidean:<d> or sphere:<ambient>");
		int dim = 0;
		try
		{
			dim = std::stoi(spec.substr(colon + 1));
		}
		catch (const std::exception &)
		{
			parse_fail("manifold spec '" + spec + "': bad dimension");
		}
		return manifold_from_json({{"kind", spec.substr(0, colon)}, {"ambient_dim", dim}});
	}

	DiscreteCurve curve_from_json(const json &doc, const std::optional<Manifold> &manifold_override)
	{
		if (!doc.is_object())
			parse_fail("curve: expected a JSON object");
		Manifold m = manifold_override ? *manifold_override
									   : (doc.contains("manifold") ? manifold_from_json(doc["manifold"])
																   : (parse_fail("curve: missing field 'manifold'"),
																	  Manifold::euclidean(1)));
		if (!doc.contains("points") || !doc["points"].is_array())
			parse_fail("curve: missing array field 'points'");
		const json &pts = doc["points"];
		const auto count = static_cast<Eigen::Index>(pts.size());
		Matrix points(m.ambient_dim(), count);
		for (Eigen::Index k = 0; k < count; ++k)
		{
			const std::string where = "points[" + std::to_string(k) + "]";
			points.col(k) = snap_point(m, vector_from(pts[static_cast<size_t>(k)], m.ambient_dim(), where), where);
		}
		Vector times;
		if (doc.contains("times"))
		{
			const json &t = doc["times"];
			if (!t.is_array() || static_cast<Eigen::Index>(t.size()) != count)
				parse_fail("times: expected an array with one entry per point");
			times.resize(count);
			for (Eigen::Index k = 0; k < count; ++k)
				times[k] = number_at(t[static_cast<size_t>(k)], "times[" + std::to_string(k) + "]");
		}
		else
		{
			times = Vector::LinSpaced(count, 0.0, 1.0);
			if (count > 1)
				times[count - 1] = 1.0;
		}
		return build(m, std::move(times), std::move(points));
	}

	json vector_to_json(const ConstVectorRef &v)
	{
		json out = json::array();
		for (Eigen::Index j = 0; j < v.size(); ++j)
			out.push_back(v[j]);
		return out;
	}

	json curve_to_json(const DiscreteCurve &c)
	{
		json points = json::array();
		for (Eigen::Index k = 0; k < c.samples(); ++k)
			points.push_back(vector_to_json(c.point(k)));
		return {{"manifold", manifold_to_json(c.manifold())}, {"times", vector_to_json(c.times())}, {"points", points}};
	}

	DiscreteCurve curve_from_csv(const std::string &text, const Manifold &m)
	{
		std::istringstream in(text);
		in.imbue(std::locale::classic());
		std::string line;
		std::vector<double> times;
		std::vector<Vector> rows;
		int line_no = 0;
		while (std::getline(in, line))
		{
			++line_no;
			if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
				continue;
			std::vector<double> values;
			std::istringstream cells(line);
			cells.imbue(std::locale::classic());
			std::string cell;
			bool numeric = true;
			while (std::getline(cells, cell, ','))
			{
				std::istringstream num(cell);
				num.imbue(std::locale::classic());
				double x = 0.0;
				num >> x;
				if (num.fail())
				{
					numeric = false;
					break;
				}
				values.push_back(x);
			}
			if (!numeric)
			{
				if (rows.empty() && times.empty())
					continue; // header
				parse_fail("line " + std::to_string(line_no) + ": non-numeric cell");
			}
			if (static_cast<int>(values.size()) != m.ambient_dim() + 1)
				parse_fail("line " + std::to_string(line_no) + ": expected time plus " +
						   std::to_string(m.ambient_dim()) + " coordinates");
			times.push_back(values[0]);
			Vector p = Eigen::Map<Vector>(values.data() + 1, m.ambient_dim());
			rows.push_back(snap_point(m, std::move(p), "line " + std::to_string(line_no)));
		}
		Matrix points(m.ambient_dim(), static_cast<Eigen::Index>(rows.size()));
		for (size_t k = 0; k < rows.size(); ++k)
			points.col(static_cast<Eigen::Index>(k)) = rows[k];
		return build(m, Eigen::Map<Vector>(times.data(), static_cast<Eigen::Index>(times.size())), std::move(points));
	}

	std::string read_text(const std::string &path)
	{
		std::ifstream in(path, std::ios::binary);
		if (!in)
			parse_fail("cannot open '" + path + "'");
		std::ostringstream buf;
		buf << in.rdbuf();
		return buf.str();
	}

	namespace
	{
		json parse_json_file(const std::string &path)
		{
			try
			{
				return json::parse(read_text(path));
			}
			catch (const json::parse_error &e)
			{
				parse_fail(path + ": " + e.what());
			}
		}

		bool ends_with(const std::string &s, const std::string &suffix)
		{
			return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
		}
	} // namespace

	DiscreteCurve read_curve(const std::string &path, const std::optional<Manifold> &manifold_override)
	{
		if (ends_with(path, ".csv"))
		{
			if (!manifold_override)
				parse_fail(path + ": CSV curves need --manifold");
			return curve_from_csv(read_text(path), *manifold_override);
		}
		return curve_from_json(parse_json_file(path), manifold_override);
	}

	TangentField field_from_json(const json &doc, const DiscreteCurve &c)
	{
		if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array())
			parse_fail("field: missing array field 'vectors'");
		const json &vs = doc["vectors"];
		if (static_cast<Eigen::Index>(vs.size()) != c.samples())
			parse_fail("field: expected " + std::to_string(c.samples()) + " vectors, got " + std::to_string(vs.size()));
		const auto &m = c.manifold();
		TangentField out(m.ambient_dim(), c.samples());
		for (Eigen::Index k = 0; k < c.samples(); ++k)
		{
			const std::string where = "vectors[" + std::to_string(k) + "]";
			Vector v = vector_from(vs[static_cast<size_t>(k)], m.ambient_dim(), where);
			if (!m.is_tangent(c.point(k), v, 1e-6))
				parse_fail(where + ": vector is not tangent to the manifold at its sample");
			out.col(k) = m.project_tangent(c.point(k), v);
		}
		return out;
	}

	TangentField read_field(const std::string &path, const DiscreteCurve &c)
	{
		return field_from_json(parse_json_file(path), c);
	}

	json field_to_json(const TangentField &field)
	{
		json vectors = json::array();
		for (Eigen::Index k = 0; k < field.cols(); ++k)
			vectors.push_back(vector_to_json(field.col(k)));
		return {{"vectors", vectors}};
	}

	json path_to_json(const CurvePath &path)
	{
		json slices = json::array();
		for (const auto &slice : path.slices())
		{
			json pts = json::array();
			for (Eigen::Index k = 0; k < slice.samples(); ++k)
				pts.push_back(vector_to_json(slice.point(k)));
			slices.push_back(pts);
		}
		json doc = {{"manifold", manifold_to_json(path.manifold())},
					{"s_grid", vector_to_json(path.s_grid())},
					{"times", vector_to_json(path.front().times())},
					{"slices", slices}};
		if (path.has_velocities())
		{
			json vel = json::array();
			for (const auto &v : path.velocities())
				vel.push_back(field_to_json(v)["vectors"]);
			doc["velocities"] = vel;
		}
		return doc;
	}

	std::string path_to_csv(const CurvePath &path)
	{
		std::ostringstream out;
		out << "s,t";
		for (int j = 0; j < path.manifold().ambient_dim(); ++j)
			out << ",x" << j;
		out << '\n';
		const Vector &times = path.front().times();
		for (Eigen::Index i = 0; i <= path.steps(); ++i)
		{
			for (Eigen::Index k = 0; k < times.size(); ++k)
			{
				out << format_number(path.s_grid()[i]) << ',' << format_number(times[k]);
				for (Eigen::Index j = 0; j < path.manifold().ambient_dim(); ++j)
					out << ',' << format_number(path.slice(i).point(k)[j]);
				out << '\n';
			}
		}
		return out.str();
	}
} // namespace elastica::io
