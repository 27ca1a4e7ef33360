#include "slelab/io/format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace slelab::io {

std::string format_double(double x) {
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  if (std::isnan(x)) {
    return "nan";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(std::string_view text) {
  if (text == "inf" || text == "+inf") {
    return INFINITY;
  }
  if (text == "-inf") {
    return -INFINITY;
  }
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') {
    body.remove_prefix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

flow::CPoint parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s.push_back(ch);
    }
  }
  if (s.empty()) {
    throw std::invalid_argument("empty complex number");
  }
  try {
    if (s.back() != 'i') {
      return {parse_double(s), 0.0};
    }
    s.pop_back();
    // split at the last sign that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+" || im == "-") {
      im += "1";
    }
    return {re.empty() ? 0.0 : parse_double(re), parse_double(im)};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed complex number '" + std::string(text) + "' (expected a+bi)");
  }
}

std::string format_complex(flow::CPoint z) {
  const std::string im = format_double(z.imag());
  return format_double(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

}  // namespace slelab::io
