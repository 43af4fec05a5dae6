#pragma once

#include <string_view>

#include "transkit/mahler.hpp"
#include "transkit/poly.hpp"
#include "transkit/series_u.hpp"

namespace transkit::cli {

/// Complex literal: "a", "a+bi", "a-bi", "bi", "i", "-i", where a and b are
/// integers, p/q rationals or exact decimals such as 0.25 or 1e-3.
GaussianRational parse_complex(std::string_view text);

/// A complex literal, or "alpha:k" for the enumerated number alpha_k.
UPoint parse_point(std::string_view text);

/// rat:p/q | alg:<coeffs>:<root_index> | pi | e | liouville. The coefficient
/// list is constant-first, comma separated or a JSON array.
Xi parse_xi(std::string_view text);

}  // namespace transkit::cli
