#include "semidet/algebra_vector.hpp"

#include <cassert>

namespace semidet {

  bool AlgebraVector::is_zero() const {
    for (auto const& c : _coeffs) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<ElementId> AlgebraVector::support() const {
    std::vector<ElementId> out;
    for (ElementId s = 0; s < _coeffs.size(); ++s) {
      if (_coeffs[s] != 0) {
        out.push_back(s);
      }
    }
    return out;
  }

  AlgebraVector& AlgebraVector::operator+=(AlgebraVector const& other) {
    assert(other.size() == size());
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      _coeffs[i] += other._coeffs[i];
    }
    return *this;
  }

  AlgebraVector& AlgebraVector::operator-=(AlgebraVector const& other) {
    assert(other.size() == size());
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      _coeffs[i] -= other._coeffs[i];
    }
    return *this;
  }

  AlgebraVector& AlgebraVector::add_scaled(Rational const&      k,
                                           AlgebraVector const& other) {
    assert(other.size() == size());
    if (k == 0) {
      return *this;
    }
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      if (other._coeffs[i] != 0) {
        _coeffs[i] += k * other._coeffs[i];
      }
    }
    return *this;
  }

  std::string AlgebraVector::to_string(
      std::vector<std::string> const& names) const {
    std::string out;
    for (ElementId s = 0; s < _coeffs.size(); ++s) {
      Rational c = _coeffs[s];
      if (c == 0) {
        continue;
      }
      bool neg = c < 0;
      if (neg) {
        c = -c;
      }
      if (out.empty()) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      if (c != 1) {
        out += c.get_str() + "*";
      }
      out += names[s];
    }
    return out.empty() ? "0" : out;
  }

}  // namespace semidet
