#pragma once

#include <string>
#include <utility>
#include <vector>

namespace graphonlab::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Simple line chart with labeled axes and a legend. Output depends only on
/// the inputs (fixed-precision coordinates).
std::string line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series);

}  // namespace graphonlab::svg
