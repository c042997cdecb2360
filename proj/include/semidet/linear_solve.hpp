// Exact Gauss-Jordan elimination over the rationals.

#ifndef SEMIDET_LINEAR_SOLVE_HPP_
#define SEMIDET_LINEAR_SOLVE_HPP_

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace semidet {

  // Solves A x = b where A is rows x cols (possibly overdetermined). Returns
  // std::nullopt if the system is inconsistent. Free variables, if any, are
  // set to zero.
  std::optional<std::vector<mpq_class>>
  solve_linear_system(std::vector<std::vector<mpq_class>> A,
                      std::vector<mpq_class>              b);

}  // namespace semidet

#endif  // SEMIDET_LINEAR_SOLVE_HPP_
