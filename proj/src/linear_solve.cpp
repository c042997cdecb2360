#include "semidet/linear_solve.hpp"

#include <cstddef>
#include <utility>

namespace semidet {

  std::optional<std::vector<mpq_class>>
  solve_linear_system(std::vector<std::vector<mpq_class>> A,
                      std::vector<mpq_class>              b) {
    std::size_t const rows = A.size();
    std::size_t const cols = rows == 0 ? 0 : A[0].size();

    std::vector<std::size_t> pivot_col;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && A[p][c] == 0) {
        ++p;
      }
      if (p == rows) {
        continue;
      }
      std::swap(A[p], A[r]);
      std::swap(b[p], b[r]);
      mpq_class inv = 1 / A[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        A[r][j] *= inv;
      }
      b[r] *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || A[i][c] == 0) {
          continue;
        }
        mpq_class f = A[i][c];
        for (std::size_t j = c; j < cols; ++j) {
          A[i][j] -= f * A[r][j];
        }
        b[i] -= f * b[r];
      }
      pivot_col.push_back(c);
      ++r;
    }
    // Rows below the rank must have a zero right-hand side.
    for (std::size_t i = r; i < rows; ++i) {
      if (b[i] != 0) {
        return std::nullopt;
      }
    }
    std::vector<mpq_class> x(cols, mpq_class(0));
    for (std::size_t i = 0; i < r; ++i) {
      x[pivot_col[i]] = b[i];
    }
    return x;
  }

}  // namespace semidet
