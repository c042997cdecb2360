// Exception types raised by the semidet library.
//
// Every error derives from semidet::Error so callers that only care about
// "input was rejected" can catch one type; the concrete classes carry the
// offending data for diagnostics.

#ifndef SEMIDET_ERRORS_HPP_
#define SEMIDET_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace semidet {

  using ElementId = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class NotAssociative : public Error {
   public:
    // Messages use names[id] when names are given.
    NotAssociative(ElementId                       a,
                   ElementId                       b,
                   ElementId                       c,
                   std::vector<std::string> const& names = {});
    ElementId a, b, c;
  };

  class BadZero : public Error {
   public:
    BadZero(ElementId                       zero,
            ElementId                       witness,
            std::vector<std::string> const& names = {});
    ElementId zero, witness;
  };

  class BadTable : public Error {
   public:
    using Error::Error;
  };

  class NotIdempotent : public Error {
   public:
    explicit NotIdempotent(ElementId e);
    ElementId element;
  };

  enum class Side { star, plus };

  // Some s has no idempotent right (star) or left (plus) identity, so the
  // semigroup algebra cannot be unital.
  class EmptyPhiSet : public Error {
   public:
    EmptyPhiSet(ElementId s, Side side);
    ElementId element;
    Side      side;
  };

  class NotSingletonRich : public Error {
   public:
    explicit NotSingletonRich(ElementId s);
    ElementId element;
  };

  class AntisymmetryViolation : public Error {
   public:
    AntisymmetryViolation(ElementId a, ElementId b);
    ElementId a, b;
  };

  class IterationCapExceeded : public Error {
   public:
    IterationCapExceeded(std::string const& what, std::size_t cap);
  };

  class NotTransitive : public Error {
   public:
    NotTransitive();
  };

  class DimensionCap : public Error {
   public:
    DimensionCap(std::size_t dim, std::size_t cap);
  };

  class NoZeroElement : public Error {
   public:
    NoZeroElement();
  };

  class NotTauTerminate : public Error {
   public:
    explicit NotTauTerminate(std::string const& what);
  };

  class PreconditionFailed : public Error {
   public:
    explicit PreconditionFailed(std::string flag);
    std::string flag;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t col, std::string const& msg);
    std::size_t line, col;
  };

  class OrderCap : public Error {
   public:
    OrderCap(std::size_t order, std::size_t cap);
  };

}  // namespace semidet

#endif  // SEMIDET_ERRORS_HPP_
