#include "semidet/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace semidet {

  ////////////////////////////////////////////////////////////////////////
  // Monomial
  ////////////////////////////////////////////////////////////////////////

  Monomial Monomial::var(VarId v, std::uint32_t exponent) {
    Monomial m;
    if (exponent != 0) {
      m._factors.emplace_back(v, exponent);
    }
    return m;
  }

  std::uint32_t Monomial::degree() const noexcept {
    std::uint32_t d = 0;
    for (auto const& f : _factors) {
      d += f.second;
    }
    return d;
  }

  std::uint32_t Monomial::exponent(VarId v) const noexcept {
    for (auto const& f : _factors) {
      if (f.first == v) {
        return f.second;
      }
    }
    return 0;
  }

  Monomial operator*(Monomial const& a, Monomial const& b) {
    Monomial out;
    out._factors.reserve(a._factors.size() + b._factors.size());
    auto i = a._factors.begin();
    auto j = b._factors.begin();
    while (i != a._factors.end() && j != b._factors.end()) {
      if (i->first < j->first) {
        out._factors.push_back(*i++);
      } else if (j->first < i->first) {
        out._factors.push_back(*j++);
      } else {
        out._factors.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    out._factors.insert(out._factors.end(), i, a._factors.end());
    out._factors.insert(out._factors.end(), j, b._factors.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // MultiPoly
  ////////////////////////////////////////////////////////////////////////

  MultiPoly::MultiPoly(long c) : MultiPoly(Integer(c)) {}

  MultiPoly::MultiPoly(Integer const& c) {
    if (c != 0) {
      _terms.emplace(Monomial(), c);
    }
  }

  MultiPoly MultiPoly::var(VarId v) {
    return term(1, Monomial::var(v));
  }

  MultiPoly MultiPoly::term(Integer const& c, Monomial m) {
    MultiPoly p;
    if (c != 0) {
      p._terms.emplace(std::move(m), c);
    }
    return p;
  }

  std::uint32_t MultiPoly::degree() const noexcept {
    std::uint32_t d = 0;
    for (auto const& [m, c] : _terms) {
      d = std::max(d, m.degree());
    }
    return d;
  }

  std::vector<VarId> MultiPoly::variables() const {
    std::vector<VarId> out;
    for (auto const& [m, c] : _terms) {
      for (auto const& f : m.factors()) {
        out.push_back(f.first);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void MultiPoly::add_term(Monomial const& m, Integer const& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        _terms.erase(it);
      }
    }
  }

  MultiPoly& MultiPoly::operator+=(MultiPoly const& q) {
    for (auto const& [m, c] : q._terms) {
      add_term(m, c);
    }
    return *this;
  }

  MultiPoly& MultiPoly::operator-=(MultiPoly const& q) {
    for (auto const& [m, c] : q._terms) {
      add_term(m, -c);
    }
    return *this;
  }

  MultiPoly& MultiPoly::add_product(Integer const&   c,
                                    Monomial const&  m,
                                    MultiPoly const& q) {
    for (auto const& [qm, qc] : q._terms) {
      add_term(m * qm, c * qc);
    }
    return *this;
  }

  MultiPoly operator*(MultiPoly const& p, MultiPoly const& q) {
    MultiPoly out;
    for (auto const& [m, c] : p._terms) {
      out.add_product(c, m, q);
    }
    return out;
  }

  MultiPoly& MultiPoly::operator*=(MultiPoly const& q) {
    return *this = *this * q;
  }

  MultiPoly operator-(MultiPoly p) {
    for (auto& [m, c] : p._terms) {
      c = -c;
    }
    return p;
  }

  MultiPoly add(MultiPoly const& p, MultiPoly const& q) {
    return p + q;
  }

  MultiPoly mul(MultiPoly const& p, MultiPoly const& q) {
    return p * q;
  }

  MultiPoly neg(MultiPoly const& p) {
    return -p;
  }

  MultiPoly scale(MultiPoly const& p, Integer const& k) {
    return p * MultiPoly(k);
  }

  bool is_zero(MultiPoly const& p) {
    return p.is_zero();
  }

  bool equal(MultiPoly const& p, MultiPoly const& q) {
    return p == q;
  }

  MultiPoly substitute_linear(MultiPoly const&                  p,
                              std::map<VarId, MultiPoly> const& map) {
    // Powers of each image are cached: pow[v][k] = map[v]^k.
    std::map<VarId, std::vector<MultiPoly>> pow;
    auto power = [&](VarId v, std::uint32_t k) -> MultiPoly const& {
      auto& ps = pow[v];
      if (ps.empty()) {
        ps.emplace_back(1);
        auto it = map.find(v);
        ps.push_back(it == map.end() ? MultiPoly::var(v) : it->second);
      }
      while (ps.size() <= k) {
        ps.push_back(ps.back() * ps[1]);
      }
      return ps[k];
    };
    MultiPoly out;
    for (auto const& [m, c] : p.terms()) {
      MultiPoly t(c);
      for (auto const& [v, k] : m.factors()) {
        t *= power(v, k);
      }
      out += t;
    }
    return out;
  }

  std::string render(MultiPoly const&                p,
                     std::vector<std::string> const& names,
                     std::vector<VarId> const&       ordering) {
    if (p.is_zero()) {
      return "0";
    }
    std::vector<VarId> order = ordering;
    if (order.empty()) {
      for (VarId v = 0; v < names.size(); ++v) {
        order.push_back(v);
      }
    }
    for (VarId v : p.variables()) {
      if (std::find(order.begin(), order.end(), v) == order.end()) {
        order.push_back(v);
      }
    }
    auto name_of = [&names](VarId v) {
      return v < names.size() ? names[v] : "x" + std::to_string(v);
    };

    using Entry = std::pair<std::vector<std::uint32_t>, MultiPoly::Terms::const_iterator>;
    std::vector<Entry> entries;
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
      std::vector<std::uint32_t> key;
      key.reserve(order.size() + 1);
      key.push_back(it->first.degree());
      for (VarId v : order) {
        key.push_back(it->first.exponent(v));
      }
      entries.emplace_back(std::move(key), it);
    }
    std::sort(entries.begin(), entries.end(), [](Entry const& a, Entry const& b) {
      return a.first > b.first;
    });

    std::string out;
    for (auto const& [key, it] : entries) {
      Integer c   = it->second;
      bool    neg = c < 0;
      if (neg) {
        c = -c;
      }
      if (out.empty()) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      for (std::size_t i = 0; i < order.size(); ++i) {
        std::uint32_t e = key[i + 1];
        if (e == 0) {
          continue;
        }
        if (!mono.empty()) {
          mono += "*";
        }
        mono += name_of(order[i]);
        if (e > 1) {
          mono += "^" + std::to_string(e);
        }
      }
      if (mono.empty()) {
        out += c.get_str();
      } else if (c == 1) {
        out += mono;
      } else {
        out += c.get_str() + "*" + mono;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SymbolicMatrix
  ////////////////////////////////////////////////////////////////////////

  SymbolicMatrix::SymbolicMatrix(std::vector<VarId> rows, std::vector<VarId> cols)
      : _rows(std::move(rows)),
        _cols(std::move(cols)),
        _entries(_rows.size() * _cols.size()) {}

  std::size_t SymbolicMatrix::row_index(VarId label) const {
    auto it = std::find(_rows.begin(), _rows.end(), label);
    if (it == _rows.end()) {
      throw std::out_of_range("unknown row label " + std::to_string(label));
    }
    return it - _rows.begin();
  }

  std::size_t SymbolicMatrix::col_index(VarId label) const {
    auto it = std::find(_cols.begin(), _cols.end(), label);
    if (it == _cols.end()) {
      throw std::out_of_range("unknown column label " + std::to_string(label));
    }
    return it - _cols.begin();
  }

  MultiPoly const& SymbolicMatrix::entry(VarId row, VarId col) const {
    return at(row_index(row), col_index(col));
  }

  SymbolicMatrix SymbolicMatrix::submatrix(std::vector<VarId> const& rows,
                                           std::vector<VarId> const& cols) const {
    SymbolicMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t ri = row_index(rows[i]);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        out.at(i, j) = at(ri, col_index(cols[j]));
      }
    }
    return out;
  }

  SymbolicMatrix SymbolicMatrix::permuted(std::vector<VarId> const& rows,
                                          std::vector<VarId> const& cols) const {
    if (rows.size() != _rows.size() || cols.size() != _cols.size()) {
      throw std::invalid_argument("permuted: label count mismatch");
    }
    return submatrix(rows, cols);
  }

  MultiPoly determinant(SymbolicMatrix const& A, std::size_t max_dim) {
    std::size_t const n = A.rows();
    if (A.cols() != n) {
      throw BadTable("determinant of a non-square matrix");
    }
    if (n > max_dim) {
      throw DimensionCap(n, max_dim);
    }
    if (n == 0) {
      return MultiPoly(1);
    }
    // minor[S] = det(rows n-|S| .. n-1, columns S), expanded along its first
    // row. Every proper subset of S is numerically smaller than S.
    std::vector<MultiPoly> minor(std::size_t(1) << n);
    minor[0] = MultiPoly(1);
    for (std::size_t S = 1; S < minor.size(); ++S) {
      std::size_t const k   = static_cast<std::size_t>(__builtin_popcountll(S));
      std::size_t const row = n - k;
      MultiPoly         acc;
      int               sign = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(S & (std::size_t(1) << j))) {
          continue;
        }
        MultiPoly const& a    = A.at(row, j);
        MultiPoly const& rest = minor[S & ~(std::size_t(1) << j)];
        if (!a.is_zero() && !rest.is_zero()) {
          if (sign > 0) {
            acc += a * rest;
          } else {
            acc -= a * rest;
          }
        }
        sign = -sign;
      }
      minor[S] = std::move(acc);
    }
    return minor.back();
  }

  int permutation_sign(std::vector<VarId> const& from,
                       std::vector<VarId> const& to) {
    if (from.size() != to.size()) {
      throw std::invalid_argument("permutation_sign: size mismatch");
    }
    std::vector<std::size_t> perm(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
      auto it = std::find(to.begin(), to.end(), from[i]);
      if (it == to.end()) {
        throw std::invalid_argument("permutation_sign: label sets differ");
      }
      perm[i] = it - to.begin();
    }
    int                sign = 1;
    std::vector<char>  seen(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = perm[j]) {
        seen[j] = 1;
        ++len;
      }
      if (len % 2 == 0) {
        sign = -sign;
      }
    }
    return sign;
  }

}  // namespace semidet
