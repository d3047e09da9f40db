#include "linsolve.hpp"

#include "error.hpp"

namespace mgc {

std::vector<Rat> solve_leading(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                               const std::vector<std::string>& tags, SolveDiagnostics* diag) {
  size_t rows = a.size();
  size_t u = rows ? a[0].size() : 0;
  if (b.size() != rows || tags.size() != rows) fail(Err::InvalidArgument, "row count mismatch");
  if (rows < u) fail(Err::SingularSystem, std::to_string(rows) + " rows for " + std::to_string(u) + " unknowns");
  std::vector<std::vector<Rat>> m(u);
  std::vector<int> origin(u);
  for (size_t r = 0; r < u; ++r) {
    m[r] = a[r];
    m[r].push_back(b[r]);
    origin[r] = static_cast<int>(r);
  }
  SolveDiagnostics d;
  d.unknowns = static_cast<int>(u);
  d.rows = static_cast<int>(rows);
  for (size_t c = 0; c < u; ++c) {
    size_t p = c;
    while (p < u && m[p][c] == 0) ++p;
    if (p == u) {
      std::string dep;
      for (size_t r = c; r < u; ++r) dep += (dep.empty() ? "" : ",") + tags[origin[r]];
      fail(Err::SingularSystem, "leading block has rank " + std::to_string(c) + "; dependent rows: " + dep);
    }
    std::swap(m[p], m[c]);
    std::swap(origin[p], origin[c]);
    d.pivot_rows.push_back(origin[c]);
    Rat inv = 1 / m[c][c];
    for (auto& v : m[c]) v *= inv;
    for (size_t r = 0; r < u; ++r)
      if (r != c && m[r][c] != 0) {
        Rat f = m[r][c];
        for (size_t k = c; k <= u; ++k) m[r][k] -= f * m[c][k];
      }
    ++d.rank;
  }
  std::vector<Rat> x(u);
  for (size_t r = 0; r < u; ++r) x[r] = m[r][u];
  std::string bad;
  for (size_t r = 0; r < rows; ++r) {
    Rat s = -b[r];
    for (size_t c = 0; c < u; ++c) s += a[r][c] * x[c];
    d.residuals.push_back(s);
    if (s != 0) bad += (bad.empty() ? "" : ",") + tags[r];
  }
  if (diag) *diag = d;
  if (!bad.empty()) fail(Err::ResidualNonzero, "relations not satisfied: " + bad);
  return x;
}

}  // namespace mgc
