// Semigroup text format, classification reports and their JSON form.
//
// Format:
//
//   elements: y z u t
//   y: . . . y
//   z: . . z .
//   u: y . u .
//   t: . z z t
//
// One row per element, entries are element names or '.', which stands for
// an adjoined zero named "0". Blank lines and lines starting with '#' are
// ignored. Names match [A-Za-z0-9_]+ and "0" is reserved.

#ifndef SEMIDET_IO_HPP_
#define SEMIDET_IO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semidet/factorization.hpp"
#include "semidet/polynomial.hpp"
#include "semidet/semigroup.hpp"

namespace semidet {

  FiniteSemigroup parse_semigroup(std::string const& text);

  // Reads and parses a file; ParseError(0, 0, ...) if it cannot be read.
  FiniteSemigroup load_semigroup(std::string const& path);

  // Inverse of parse_semigroup: an adjoined zero named "0" in last position
  // is printed as '.', anything else is printed in full.
  std::string print_semigroup(FiniteSemigroup const& S);

  struct FactorBlockReport {
    std::string              idempotent;
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::string              det;
    std::string              det_substituted;
  };

  struct FactorizationReport {
    std::vector<FactorBlockReport> blocks;
    int                            sign     = 0;
    bool                           verified = false;
    std::string                    product;
  };

  struct ClassificationReport {
    std::string                                       name;
    std::size_t                                       order = 0;
    std::vector<std::string>                          elements;
    bool                                              has_zero = false;
    bool                                              unital   = false;
    std::optional<std::vector<std::pair<std::string, std::string>>> identity;
    bool                                              singleton_rich = false;
    bool                                              ll_transitive  = false;
    std::optional<bool>                               smooth;
    std::optional<bool>                               imposed_condition;
    std::string                                       determinant;
    std::optional<std::string>                        contracted_determinant;
    bool                                              nonzero = false;
    std::optional<FactorizationReport>                factorization;
    std::vector<std::string>                          witnesses;
    std::string                                       table;
  };

  ClassificationReport classify(FiniteSemigroup const& S,
                                std::string const&     name,
                                std::size_t            max_dim = default_max_dim);

  // Single line of JSON when indent < 0.
  std::string emit_report(ClassificationReport const& report, int indent = -1);

  FactorizationReport report_factorization(FiniteSemigroup const&     S,
                                           FactorizationResult const& F);

}  // namespace semidet

#endif  // SEMIDET_IO_HPP_
