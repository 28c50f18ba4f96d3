#include "graphonlab/budget.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "graphonlab/error.hpp"

namespace graphonlab {

namespace {

std::uint64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InputError("GRAPHONLAB_BUDGET: not a number: '" + text + "'");
  }
  if (used != text.size() || !(value >= 1.0) || value > 1.8e19) {
    throw InputError("GRAPHONLAB_BUDGET: bad count: '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

Budget Budget::from_environment() {
  Budget budget;
  const char* raw = std::getenv("GRAPHONLAB_BUDGET");
  if (raw == nullptr || *raw == '\0') return budget;
  const std::string text(raw);
  if (text.find('=') == std::string::npos) {
    const auto count = parse_count(text);
    budget.enumeration_maps = count;
    budget.contraction_cells = count;
    return budget;
  }
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("GRAPHONLAB_BUDGET: expected key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "maps") {
      budget.enumeration_maps = parse_count(value);
    } else if (key == "cells") {
      budget.contraction_cells = parse_count(value);
    } else if (key == "exact_n") {
      budget.exact_local_density_blocks = static_cast<int>(parse_count(value));
    } else if (key == "grid") {
      budget.grid_points = parse_count(value);
    } else {
      throw InputError("GRAPHONLAB_BUDGET: unknown key '" + key + "'");
    }
  }
  return budget;
}

const Budget& default_budget() {
  static const Budget budget = Budget::from_environment();
  return budget;
}

}  // namespace graphonlab
