#pragma once

#include "slelab/flow/complex_ops.hpp"

#include <string>
#include <string_view>

namespace slelab::io {

/// %.17g; "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double x);

/// Strict parse of a whole string as a double (accepts "inf").
double parse_double(std::string_view text);

/// "a+bi", "a-bi", "bi", "a", "i", "-i". Throws std::invalid_argument.
flow::CPoint parse_complex(std::string_view text);
std::string format_complex(flow::CPoint z);

}  // namespace slelab::io
