// Sparse multivariate polynomials with arbitrary precision integer
// coefficients, symbolic matrices over them, and a division-free determinant.
//
// Variables are indexed by ElementId: x_s for the element s.

#ifndef SEMIDET_POLYNOMIAL_HPP_
#define SEMIDET_POLYNOMIAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "semidet/errors.hpp"

namespace semidet {

  using VarId   = std::uint32_t;
  using Integer = mpz_class;

  class Monomial {
   public:
    using Factor = std::pair<VarId, std::uint32_t>;  // (variable, exponent)

    Monomial() = default;

    static Monomial var(VarId v, std::uint32_t exponent = 1);

    // Sorted by variable; no zero exponents.
    std::vector<Factor> const& factors() const noexcept {
      return _factors;
    }

    std::uint32_t degree() const noexcept;

    std::uint32_t exponent(VarId v) const noexcept;

    friend Monomial operator*(Monomial const& a, Monomial const& b);

    friend auto operator<=>(Monomial const&, Monomial const&) = default;
    friend bool operator==(Monomial const&, Monomial const&)  = default;

   private:
    std::vector<Factor> _factors;
  };

  // Canonical: no zero coefficients are ever stored, so equality is
  // structural.
  class MultiPoly {
   public:
    using Terms = std::map<Monomial, Integer>;

    MultiPoly() = default;
    MultiPoly(long c);  // NOLINT(runtime/explicit)
    explicit MultiPoly(Integer const& c);

    static MultiPoly var(VarId v);
    static MultiPoly term(Integer const& c, Monomial m);

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    // Total degree; 0 for the zero polynomial.
    std::uint32_t degree() const noexcept;

    // Sorted list of variables that occur.
    std::vector<VarId> variables() const;

    MultiPoly& operator+=(MultiPoly const& q);
    MultiPoly& operator-=(MultiPoly const& q);
    MultiPoly& operator*=(MultiPoly const& q);

    // this += c * m * q
    MultiPoly& add_product(Integer const& c, Monomial const& m, MultiPoly const& q);

    friend MultiPoly operator+(MultiPoly p, MultiPoly const& q) {
      return p += q;
    }
    friend MultiPoly operator-(MultiPoly p, MultiPoly const& q) {
      return p -= q;
    }
    friend MultiPoly operator*(MultiPoly const& p, MultiPoly const& q);
    friend MultiPoly operator-(MultiPoly p);

    friend bool operator==(MultiPoly const&, MultiPoly const&) = default;

   private:
    void add_term(Monomial const& m, Integer const& c);

    Terms _terms;
  };

  MultiPoly add(MultiPoly const& p, MultiPoly const& q);
  MultiPoly mul(MultiPoly const& p, MultiPoly const& q);
  MultiPoly neg(MultiPoly const& p);
  MultiPoly scale(MultiPoly const& p, Integer const& k);
  bool      is_zero(MultiPoly const& p);
  bool      equal(MultiPoly const& p, MultiPoly const& q);

  // Ring homomorphism x_v -> map[v]. Variables missing from the map are left
  // unchanged.
  MultiPoly substitute_linear(MultiPoly const&                  p,
                              std::map<VarId, MultiPoly> const& map);

  // Deterministic rendering: terms by total degree descending, then by
  // exponent vector descending with variables compared in `ordering` (by
  // default ascending VarId). Variables print as names[v], coefficient 1 is
  // suppressed, powers as x^k, factors joined by '*', terms by " + " / " - ".
  std::string render(MultiPoly const&                p,
                     std::vector<std::string> const& names,
                     std::vector<VarId> const&       ordering = {});

  class SymbolicMatrix {
   public:
    SymbolicMatrix() = default;
    SymbolicMatrix(std::vector<VarId> rows, std::vector<VarId> cols);

    std::size_t rows() const noexcept {
      return _rows.size();
    }

    std::size_t cols() const noexcept {
      return _cols.size();
    }

    std::vector<VarId> const& row_labels() const noexcept {
      return _rows;
    }

    std::vector<VarId> const& col_labels() const noexcept {
      return _cols;
    }

    MultiPoly const& at(std::size_t i, std::size_t j) const {
      return _entries[i * _cols.size() + j];
    }

    MultiPoly& at(std::size_t i, std::size_t j) {
      return _entries[i * _cols.size() + j];
    }

    // Entry addressed by labels.
    MultiPoly const& entry(VarId row, VarId col) const;

    std::size_t row_index(VarId label) const;
    std::size_t col_index(VarId label) const;

    // New matrix with rows and columns in the given label orders.
    SymbolicMatrix permuted(std::vector<VarId> const& rows,
                            std::vector<VarId> const& cols) const;

    SymbolicMatrix submatrix(std::vector<VarId> const& rows,
                             std::vector<VarId> const& cols) const;

    friend bool operator==(SymbolicMatrix const&, SymbolicMatrix const&)
        = default;

   private:
    std::vector<VarId>     _rows;
    std::vector<VarId>     _cols;
    std::vector<MultiPoly> _entries;
  };

  inline constexpr std::size_t default_max_dim = 16;

  // Exact determinant by minor expansion memoised on column subsets; throws
  // DimensionCap above max_dim and BadTable for non-square input.
  MultiPoly determinant(SymbolicMatrix const& A,
                        std::size_t           max_dim = default_max_dim);

  // Sign (+1 / -1) of the permutation taking `from` to `to`, both
  // arrangements of the same labels.
  int permutation_sign(std::vector<VarId> const& from,
                       std::vector<VarId> const& to);

}  // namespace semidet

#endif  // SEMIDET_POLYNOMIAL_HPP_
