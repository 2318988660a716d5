#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pipefit::cli {

/// A length with a free-form unit label, e.g. "6ft" -> {6, "ft"}.
struct Quantity {
  double value = 0;
  std::string unit;
};

/// Accepts "<number><label>" with an optional space; the number must be
/// finite and positive. Returns nullopt otherwise.
std::optional<Quantity> parse_quantity(std::string_view text);

/// Inches per unit for the handful of labels we know how to relate.
std::optional<double> inches_per(std::string_view unit);

/// Converts `value` from unit `from` to unit `to`. Equal labels (or an empty
/// `from`) pass through untouched; unknown labels give nullopt.
std::optional<double> convert_length(double value, std::string_view from, std::string_view to);

}  // namespace pipefit::cli
