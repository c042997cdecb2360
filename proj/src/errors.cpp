#include "semidet/errors.hpp"

#include <utility>

namespace semidet {

  namespace {
    std::string str(std::size_t x) {
      return std::to_string(x);
    }

    std::string label(ElementId x, std::vector<std::string> const& names) {
      return x < names.size() ? names[x] : str(x);
    }
  }  // namespace

  NotAssociative::NotAssociative(ElementId                       a_,
                                 ElementId                       b_,
                                 ElementId                       c_,
                                 std::vector<std::string> const& names)
      : Error("table is not associative at (" + label(a_, names) + ", "
              + label(b_, names) + ", " + label(c_, names) + ")"),
        a(a_),
        b(b_),
        c(c_) {}

  BadZero::BadZero(ElementId                       z,
                   ElementId                       w,
                   std::vector<std::string> const& names)
      : Error("declared zero " + label(z, names)
              + " is not absorbing against element " + label(w, names)),
        zero(z),
        witness(w) {}

  NotIdempotent::NotIdempotent(ElementId e)
      : Error("element " + str(e) + " is not idempotent"), element(e) {}

  EmptyPhiSet::EmptyPhiSet(ElementId s, Side sd)
      : Error("element " + str(s) + " has no idempotent "
              + (sd == Side::star ? std::string("right") : std::string("left"))
              + " identity"),
        element(s),
        side(sd) {}

  NotSingletonRich::NotSingletonRich(ElementId s)
      : Error("semigroup is not singleton-rich (witness element " + str(s)
              + ")"),
        element(s) {}

  AntisymmetryViolation::AntisymmetryViolation(ElementId a_, ElementId b_)
      : Error("the closure of << is not antisymmetric at (" + str(a_) + ", "
              + str(b_) + ")"),
        a(a_),
        b(b_) {}

  IterationCapExceeded::IterationCapExceeded(std::string const& what,
                                             std::size_t        cap)
      : Error(what + " did not stabilise within " + str(cap) + " iterations") {}

  NotTransitive::NotTransitive() : Error("the relation << is not transitive") {}

  DimensionCap::DimensionCap(std::size_t dim, std::size_t cap)
      : Error("matrix dimension " + str(dim) + " exceeds the cap " + str(cap)) {}

  NoZeroElement::NoZeroElement()
      : Error("the semigroup has no zero element") {}

  NotTauTerminate::NotTauTerminate(std::string const& what)
      : Error("matrix is not tau-terminate: " + what) {}

  PreconditionFailed::PreconditionFailed(std::string f)
      : Error("precondition failed: " + f), flag(std::move(f)) {}

  ParseError::ParseError(std::size_t l, std::size_t c, std::string const& msg)
      : Error("parse error at line " + str(l) + ", column " + str(c) + ": "
              + msg),
        line(l),
        col(c) {}

  OrderCap::OrderCap(std::size_t order, std::size_t cap)
      : Error("order " + str(order) + " exceeds the scanner cap " + str(cap)) {}

}  // namespace semidet
