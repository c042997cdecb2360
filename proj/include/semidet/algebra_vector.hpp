// Elements of the semigroup algebra QS, stored densely in the basis S.

#ifndef SEMIDET_ALGEBRA_VECTOR_HPP_
#define SEMIDET_ALGEBRA_VECTOR_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "semidet/errors.hpp"

namespace semidet {

  using Rational = mpq_class;

  class AlgebraVector {
   public:
    AlgebraVector() = default;
    explicit AlgebraVector(std::size_t n) : _coeffs(n, Rational(0)) {}
    explicit AlgebraVector(std::vector<Rational> coeffs)
        : _coeffs(std::move(coeffs)) {}

    static AlgebraVector basis(std::size_t n, ElementId s) {
      AlgebraVector v(n);
      v._coeffs[s] = 1;
      return v;
    }

    std::size_t size() const noexcept {
      return _coeffs.size();
    }

    Rational const& operator[](ElementId s) const {
      return _coeffs[s];
    }

    Rational& operator[](ElementId s) {
      return _coeffs[s];
    }

    bool is_zero() const;

    // Support in ascending element order.
    std::vector<ElementId> support() const;

    AlgebraVector& operator+=(AlgebraVector const& other);
    AlgebraVector& operator-=(AlgebraVector const& other);
    AlgebraVector& add_scaled(Rational const& k, AlgebraVector const& other);

    friend AlgebraVector operator+(AlgebraVector a, AlgebraVector const& b) {
      return a += b;
    }
    friend AlgebraVector operator-(AlgebraVector a, AlgebraVector const& b) {
      return a -= b;
    }
    friend AlgebraVector operator*(Rational const& k, AlgebraVector a) {
      for (auto& c : a._coeffs) {
        c *= k;
      }
      return a;
    }

    friend bool operator==(AlgebraVector const& a, AlgebraVector const& b) {
      return a._coeffs == b._coeffs;
    }

    std::vector<Rational> const& coefficients() const noexcept {
      return _coeffs;
    }

    // Human readable form such as "y + z - u", using the given names.
    std::string to_string(std::vector<std::string> const& names) const;

   private:
    std::vector<Rational> _coeffs;
  };

}  // namespace semidet

#endif  // SEMIDET_ALGEBRA_VECTOR_HPP_
