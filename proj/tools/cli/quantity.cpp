#include "cli/quantity.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

namespace pipefit::cli {

std::optional<Quantity> parse_quantity(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || !std::isfinite(value) || !(value > 0.0)) return std::nullopt;

  std::string_view rest(ptr, static_cast<std::size_t>(text.data() + text.size() - ptr));
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
  for (char c : rest)
    if (!std::isalpha(static_cast<unsigned char>(c))) return std::nullopt;
  return Quantity{value, std::string(rest)};
}

std::optional<double> inches_per(std::string_view unit) {
  static constexpr std::array<std::pair<std::string_view, double>, 6> table = {{
      {"in", 1.0},
      {"ft", 12.0},
      {"yd", 36.0},
      {"mm", 1.0 / 25.4},
      {"cm", 1.0 / 2.54},
      {"m", 1.0 / 0.0254},
  }};
  for (const auto& [label, factor] : table)
    if (label == unit) return factor;
  return std::nullopt;
}

std::optional<double> convert_length(double value, std::string_view from, std::string_view to) {
  if (from.empty() || from == to) return value;
  const auto a = inches_per(from);
  const auto b = inches_per(to);
  if (!a || !b) return std::nullopt;
  return value * *a / *b;
}

}  // namespace pipefit::cli
