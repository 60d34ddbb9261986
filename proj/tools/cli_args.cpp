#include "cli_args.hpp"

#include "manta/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace manta::cli {
namespace {

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string body = text;
  double factor = 1.0;
  for (const std::string suffix : {"pi", "PI", "π"}) {
    if (body.size() >= suffix.size() && body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0) {
      body.erase(body.size() - suffix.size());
      factor = kPi;
      break;
    }
  }
  if (factor == 1.0 && body.empty()) throw std::invalid_argument("empty angle");
  if (body.empty() || body == "*") return factor;
  if (body.back() == '*') body.pop_back();
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const double den = parse_number(body.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return parse_number(body.substr(0, slash)) / den * factor;
  }
  return parse_number(body) * factor;
}

std::optional<double> parse_optional_angle(const std::string& text) {
  if (text == "auto") return std::nullopt;
  return parse_angle(text);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto as_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad range '" + text + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = as_int(text);
    return {v, v};
  }
  const int lo = as_int(text.substr(0, dots));
  const int hi = as_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

}  // namespace manta::cli
