// Property suite: the structural identities of the orders, the sequences and
// the star algebra, checked exhaustively over all element tuples of one
// semigroup.
//
// Checks whose hypotheses fail (<< not transitive, S not smooth) are
// reported as skipped. "Nonzero" in the star algebra means nonzero after the
// zero element, if any, is identified with 0.

#ifndef SEMIDET_VERIFY_HPP_
#define SEMIDET_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "semidet/semigroup.hpp"

namespace semidet {

  struct PropertyResult {
    std::string              name;
    bool                     applicable = true;
    bool                     holds      = true;
    std::size_t              checked    = 0;
    std::vector<std::string> witnesses;  // at most 10
    std::string              note;       // reason when not applicable
  };

  struct VerifyOptions {
    std::size_t   random_vectors = 50;
    std::uint64_t seed           = 20240601;
  };

  struct VerifyReport {
    std::string                 name;
    bool                        singleton_rich = false;
    bool                        ll_transitive  = false;
    bool                        smooth         = false;
    std::vector<std::string>    non_transitive_chains;
    std::vector<PropertyResult> results;

    // Every applicable property holds.
    bool ok() const;

    PropertyResult const* find(std::string const& name) const;
  };

  VerifyReport verify_semigroup(FiniteSemigroup const& S,
                                std::string const&     name,
                                VerifyOptions const&   opts = {});

  std::string format_verify(VerifyReport const& report);

}  // namespace semidet

#endif  // SEMIDET_VERIFY_HPP_
