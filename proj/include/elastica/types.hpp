#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace elastica
{
	using Vector = Eigen::VectorXd;
	using Matrix = Eigen::MatrixXd;
	using VectorRef = Eigen::Ref<Vector>;
	using ConstVectorRef = Eigen::Ref<const Vector>;
	using ConstMatrixRef = Eigen::Ref<const Matrix>;

	// A tangent field along a discrete curve is stored column-wise: column k is
	// based at sample k. Cell quantities (forward differences) have n columns,
	// sample quantities have n + 1.
	using TangentField = Matrix;

	namespace tol
	{
		inline constexpr double point = 1e-10;
		inline constexpr double tangent = 1e-10;
		inline constexpr double cut = 1e-6;
		inline constexpr double small_angle = 1e-8;
		inline constexpr double immersion = 1e-9;
	} // namespace tol

	enum class ErrorCode
	{
		base_mismatch,
		cut_locus,
		degenerate_input,
		degenerate_speed,
		invalid_curve,
		step_collapse,
		no_convergence,
		wrong_manifold,
		parse_error,
	};

	inline const char *to_string(ErrorCode code)
	{
		switch (code)
		{
		case ErrorCode::base_mismatch: return "BaseMismatch";
		case ErrorCode::cut_locus: return "CutLocus";
		case ErrorCode::degenerate_input: return "DegenerateInput";
		case ErrorCode::degenerate_speed: return "DegenerateSpeed";
		case ErrorCode::invalid_curve: return "InvalidCurve";
		case ErrorCode::step_collapse: return "StepCollapse";
		case ErrorCode::no_convergence: return "NoConvergence";
		case ErrorCode::wrong_manifold: return "WrongManifold";
		case ErrorCode::parse_error: return "ParseError";
		}
		return "Unknown";
	}

	class Error : public std::runtime_error
	{
	public:
		Error(ErrorCode code, const std::string &what)
			: std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
		{
		}

		ErrorCode code() const noexcept { return code_; }

	private:
		ErrorCode code_;
	};
} // namespace elastica
