#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "rkm/ball_geometry.hpp"
#include "rkm/curvature.hpp"
#include "rkm/embedder.hpp"
#include "rkm/packing.hpp"

namespace rkm {

using Json = nlohmann::json;

void to_json(Json& j, const DiskPoint& p);
void from_json(const Json& j, DiskPoint& p);
void to_json(Json& j, const BallPoint& p);
void from_json(const Json& j, BallPoint& p);

void to_json(Json& j, const PackingCertificate& c);
void from_json(const Json& j, PackingCertificate& c);
void to_json(Json& j, const ThresholdSweep& s);
void from_json(const Json& j, ThresholdSweep& s);

void to_json(Json& j, const EmbeddingSettings& s);
void from_json(const Json& j, EmbeddingSettings& s);
void to_json(Json& j, const EmbeddingProblem& p);
void from_json(const Json& j, EmbeddingProblem& p);
void to_json(Json& j, const RestartSummary& r);
void from_json(const Json& j, RestartSummary& r);
void to_json(Json& j, const EmbeddingResult& r);
void from_json(const Json& j, EmbeddingResult& r);

void to_json(Json& j, const CurvatureSample& s);
void from_json(const Json& j, CurvatureSample& s);
void to_json(Json& j, const MonteCarloEstimate& e);
void from_json(const Json& j, MonteCarloEstimate& e);

/// Wraps a payload with tool name, version and schema version:
/// {"tool": "rkm", "version": ..., "schema_version": ..., "kind": kind, "config": config, "data": payload}.
Json make_artifact(std::string_view kind, Json config, Json payload);

/// Serializes with every floating-point number written as %.17g, locale-independent.
/// Non-finite numbers are written as null.
void write_json(std::ostream& os, const Json& j, int indent = 2);
std::string dump_json(const Json& j, int indent = 2);

/// %.17g, independent of the global locale.
std::string format_double(double v);

/// CSV table: z_re, z_im, alpha_sq, kappa, step, est_error, kernel, normalization, valid.
void write_curvature_csv(std::ostream& os, std::span<const CurvatureSample> samples);

/// CSV of rho(p_i, p_j) - d_ij for every pair: i, j, target, realized, residual.
void write_residual_csv(std::ostream& os, const EmbeddingProblem& problem, const EmbeddingResult& result);

}  // namespace rkm
