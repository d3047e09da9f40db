#pragma once

#include <string>
#include <vector>

#include "arith.hpp"

namespace mgc {

struct SolveDiagnostics {
  int unknowns = 0;
  int rows = 0;
  int rank = 0;
  // Row used as pivot for each unknown, in elimination order.
  std::vector<int> pivot_rows;
  // A x - b for every row, after solving.
  std::vector<Rat> residuals;
};

// Solves the leading u x u block (u = column count) exactly and checks the
// remaining rows. Throws SingularSystem naming the dependent rows, or
// ResidualNonzero naming the tags of violated rows.
std::vector<Rat> solve_leading(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                               const std::vector<std::string>& tags, SolveDiagnostics* diag = nullptr);

}  // namespace mgc
