#include "floer/wcomplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace floer {

std::string to_string(GradingMode mode) {
  return mode == GradingMode::absolute ? "absolute" : "relative";
}

OneVarComplex::OneVarComplex(std::vector<std::string> names, std::vector<int> grades, char var)
    : labels(std::move(names)),
      gradings(std::move(grades)),
      differential(static_cast<int>(labels.size()), static_cast<int>(labels.size())),
      variable(var) {
  if (labels.size() != gradings.size()) throw std::invalid_argument("OneVarComplex: size mismatch");
}

void OneVarComplex::add_term(int source, int target, const WPoly& coeff) {
  differential.add(target, source, truncation > 0 ? coeff.truncated(truncation) : coeff);
}

std::string OneVarComplex::boundary_string(int i) const {
  std::string out;
  for (const auto& [row, coeff] : differential.column(i)) {
    if (!out.empty()) out += " + ";
    if (coeff.is_one()) {
      out += labels[static_cast<std::size_t>(row)];
    } else if (coeff.is_monomial()) {
      out += coeff.to_string(variable) + "*" + labels[static_cast<std::size_t>(row)];
    } else {
      out += "(" + coeff.to_string(variable) + ")*" + labels[static_cast<std::size_t>(row)];
    }
  }
  return out.empty() ? "0" : out;
}

int OneVarComplex::grading_span() const {
  if (gradings.empty()) return 0;
  auto [lo, hi] = std::minmax_element(gradings.begin(), gradings.end());
  return *hi - *lo;
}

OneVarComplex OneVarComplex::truncated_to(int n) const {
  OneVarComplex out = *this;
  out.truncation = n;
  out.differential = differential.map_entries([n](const WPoly& p) { return p.truncated(n); });
  return out;
}

OneVarValidation validate_one_var(const OneVarComplex& c) {
  OneVarValidation report;
  for (int x = 0; x < c.size(); ++x) {
    for (const auto& [y, coeff] : c.differential.column(x)) {
      if (!coeff.is_monomial()) {
        report.homogeneous = false;
        report.problems.push_back("entry " + coeff.to_string(c.variable) + " is not a monomial");
        continue;
      }
      const int k = coeff.valuation();
      if (c.gradings[static_cast<std::size_t>(y)] - 2 * k != c.gradings[static_cast<std::size_t>(x)] - 1) {
        report.homogeneous = false;
        report.problems.push_back("entry " + c.labels[static_cast<std::size_t>(x)] + " -> " +
                                  c.labels[static_cast<std::size_t>(y)] + " has the wrong degree");
      }
    }
  }
  auto d2 = c.differential * c.differential;
  if (c.truncation > 0) d2 = d2.map_entries([&](const WPoly& p) { return p.truncated(c.truncation); });
  if (!d2.is_zero()) {
    report.square_zero = false;
    report.problems.push_back("d^2 != 0");
  }
  return report;
}

}  // namespace floer
