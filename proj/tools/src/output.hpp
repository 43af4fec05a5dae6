#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>

#include "transkit/ball.hpp"
#include "transkit/poly.hpp"

namespace transkit::cli {

using nlohmann::ordered_json;

/// {"mid": "...", "rad": "..."}: the printed radius also covers the error of
/// printing the midpoint.
ordered_json ball_json(const BallReal& x);
ordered_json ball_json(const BallComplex& z);
ordered_json float_json(const Float& x);
ordered_json poly_json(const IntPolynomial& p);

enum class Format { json, csv };

/// One JSON document per line, or CSV with dotted column names. Array results
/// become one CSV row per element.
void emit(std::ostream& out, const ordered_json& record, Format format);

}  // namespace transkit::cli
