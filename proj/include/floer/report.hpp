#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floer/complex.hpp"
#include "floer/h1.hpp"
#include "floer/knots.hpp"
#include "floer/module.hpp"
#include "floer/one_one.hpp"

namespace floer {

struct InvariantsReport {
  std::map<std::pair<int, int>, int> hfk_hat;  ///< (m, s) -> dimension
  DvrModule hfk_minus;
  int genus = 0;
  bool fibered = false;
  LaurentPoly alexander;

  bool operator==(const InvariantsReport&) const = default;
};

struct ClassReport {
  int spin_c = 0;
  DvrModule module;
  bool l_space = false;
  int hat_dimension = 0;
  int truncation = 0;
  bool truncation_stable = false;
  std::optional<bool> window_stable;  ///< only for cone runs

  bool operator==(const ClassReport&) const = default;
};

struct SurgeryReport {
  int n = 0;
  std::string method;  ///< "large" or "cone"
  std::vector<ClassReport> classes;
  bool l_space = false;
  AbelianGroup h1;
  bool class_count_matches = false;
  int hat_total = 0;
  bool dimension_check = false;
  std::optional<bool> verified;  ///< cone and large surgery agree

  bool operator==(const SurgeryReport&) const = default;
};

struct GeneratorReport {
  std::string label;
  int gr_u = 0;
  int gr_v = 0;
  std::string boundary;

  bool operator==(const GeneratorReport&) const = default;
};

struct BigonReport {
  std::string from;
  std::string to;
  int n_w = 0;
  int n_z = 0;

  bool operator==(const BigonReport&) const = default;
};

struct DiagramReport {
  int generator_count = 0;
  std::vector<BigonReport> bigons;
  std::vector<GeneratorReport> complex;

  bool operator==(const DiagramReport&) const = default;
};

struct H1Report {
  IntMatrix matrix;
  AbelianGroup group;
  long long determinant = 0;

  bool operator==(const H1Report&) const = default;
};

struct ResultDocument {
  std::optional<InvariantsReport> invariants;
  std::optional<SurgeryReport> surgery;
  std::optional<DiagramReport> diagram;
  std::optional<H1Report> h1;

  bool operator==(const ResultDocument&) const = default;
};

struct RunOptions {
  int truncation = 0;
  int window_slack = 0;
  bool verify = false;
};

/// Validates the complex (InternalError on failure) and collects the knot invariants.
InvariantsReport knot_invariants(const BigradedComplex& c);

std::vector<GeneratorReport> describe_complex(const BigradedComplex& c);

/// Large surgery when n >= max(1, 2g - 1), the mapping cone otherwise. With
/// `verify`, the other method also runs where it applies and must agree
/// (InternalError otherwise).
SurgeryReport surgery_report(const BigradedComplex& c, int n, const RunOptions& options = {});

DiagramReport diagram_report(const OneOneDiagram& d);
H1Report h1_report(const IntMatrix& m);

std::string to_table(const ResultDocument& doc);

}  // namespace floer
