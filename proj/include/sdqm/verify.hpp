#pragma once

#include <cstdint>

#include "sdqm/models.hpp"
#include "sdqm/report.hpp"

namespace sdqm {

struct SuiteOptions {
  int nmax = 8;
  int trials = 20;
  std::uint64_t seed = 1;
  double tol = 1e-10;
};

/// Suites: shape | closure | dual | heisenberg | ladder | crum |
/// rodrigues | unified | all. Lattice-only suites report a skip note
/// on non-rdQM models instead of failing.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& s);
RunReport run_suite(const Model& m, const std::string& suite, const SuiteOptions& opt);

struct SpectrumRow {
  int n;
  double e_formula, e_computed, residual;
};
/// rdQM: eigenvalues of the assembled tridiagonal H; oQM/pdQM: the
/// diagonal of the upper-triangular polynomial representation.
std::vector<SpectrumRow> spectrum_rows(const Model& m, int n_max);

std::string model_descriptor(const Model& m);

}  // namespace sdqm
