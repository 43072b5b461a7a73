#include "fgstar/intlinear.hpp"

#include <cstdlib>
#include <numeric>

namespace fgstar {

namespace {

// Fraction-free (Bareiss) elimination; returns (rank, det-if-square).
std::pair<int, long long> bareiss(IntMatrix m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  long long prev = 1;
  long long sign = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      sign = -sign;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  // In Bareiss form the last pivot of a full-rank square matrix is det.
  long long det = (rows == cols && r == rows && rows > 0)
                      ? sign * m[rows - 1][rows - 1]
                      : (rows == 0 ? 1 : 0);
  return {static_cast<int>(r), det};
}

}  // namespace

long long determinant(const IntMatrix& m) {
  if (m.empty()) return 1;
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("matrix not square");
  return bareiss(m).second;
}

int matrix_rank(IntMatrix m) { return bareiss(std::move(m)).first; }

std::optional<IntVector> solve_integer_linear(const IntMatrix& m, const IntVector& v) {
  long long det = determinant(m);
  if (det == 0) throw SingularMatrixError();
  size_t n = m.size();
  if (v.size() != n) throw std::invalid_argument("dimension mismatch");
  IntVector out(n);
  for (size_t col = 0; col < n; ++col) {
    IntMatrix mc = m;
    for (size_t row = 0; row < n; ++row) mc[row][col] = v[row];
    long long dc = determinant(mc);
    if (dc % det != 0) return std::nullopt;  // Cramer: s_col = det(M_col)/det(M)
    out[col] = dc / det;
  }
  return out;
}

}  // namespace fgstar
