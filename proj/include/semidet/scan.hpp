// Exhaustive enumeration of small semigroups.
//
// Tables are filled row by row with every associativity triple checked as
// soon as its four products are known. Reduction up to isomorphism keeps a
// table only if it is the lexicographically least of its relabelings (and,
// with anti-isomorphism, of the relabelings of its transpose).

#ifndef SEMIDET_SCAN_HPP_
#define SEMIDET_SCAN_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semidet/io.hpp"
#include "semidet/polynomial.hpp"
#include "semidet/semigroup.hpp"

namespace semidet {

  inline constexpr std::size_t default_max_order = 6;

  struct ScanTask {
    std::size_t              order      = 1;
    bool                     up_to_iso  = false;
    bool                     anti       = true;  // with up_to_iso
    std::vector<std::string> filters;            // report flags that must hold
    std::string              output;             // empty for stdout
    std::size_t              max_order  = default_max_order;
    std::size_t              max_dim    = default_max_dim;
    std::size_t              threads    = 0;     // 0: scan_threads()
  };

  // SEMIDET_THREADS if set and positive, else the hardware concurrency.
  std::size_t scan_threads();

  // Row-major, one character per entry ('0' + value).
  std::string encode(Table const& table);

  // Lexicographically least relabeling (of the table or its transpose).
  Table canonical_form(Table const& table, bool anti);
  bool  is_canonical(Table const& table, bool anti);

  // All associative tables on {0, ..., n-1}, or one per class, sorted by
  // encoding. Throws OrderCap above max_order.
  std::vector<Table> enumerate_tables(std::size_t n,
                                      bool        up_to_iso,
                                      bool        anti,
                                      std::size_t threads   = 0,
                                      std::size_t max_order = default_max_order);

  // Number of associative tables without storing them.
  std::uint64_t count_tables(std::size_t n,
                             bool        up_to_iso,
                             bool        anti,
                             std::size_t threads   = 0,
                             std::size_t max_order = default_max_order);

  // Elements named a, b, c, ...; a zero is detected, not declared.
  FiniteSemigroup semigroup_from_table(Table const& table);

  // Flags usable as filters: singleton_rich, ll_transitive, unital, has_zero,
  // smooth, imposed_condition, verified, nonzero.
  bool report_flag(ClassificationReport const& r, std::string const& flag);

  struct ScanSummary {
    std::uint64_t tables          = 0;
    std::uint64_t emitted         = 0;
    std::uint64_t singleton_rich  = 0;
    std::uint64_t ll_transitive   = 0;
    std::uint64_t hypotheses      = 0;  // singleton-rich, transitive, unital
    std::uint64_t smooth          = 0;
    std::uint64_t imposed         = 0;
    std::uint64_t verified        = 0;
    std::uint64_t claim_failures  = 0;  // hypotheses hold but a check fails
  };

  // Classifies every enumerated table and passes the JSON line of each one
  // that satisfies all filters to `sink`, in encoding order.
  ScanSummary scan(ScanTask const&                               task,
                   std::function<void(std::string const&)> const& sink);

}  // namespace semidet

#endif  // SEMIDET_SCAN_HPP_
