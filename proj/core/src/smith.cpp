#include "gecliff/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gecliff/error.hpp"

namespace gecliff {

Integer AbelianInvariants::order() const {
  if (rank > 0) return 0;
  Integer o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string to_string(const AbelianInvariants& inv) {
  std::vector<std::string> parts;
  if (inv.rank == 1) parts.push_back("Z");
  if (inv.rank > 1) parts.push_back("Z^" + std::to_string(inv.rank));
  for (const auto& t : inv.torsion) parts.push_back("C" + t.get_str());
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += " x " + parts[k];
  return out;
}

namespace {

void check_shape(const IntMatrix& m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionMismatch("ragged integer matrix");
}

}  // namespace

namespace {

// Quotient rounded to nearest, so the remainder satisfies |r| <= |d| / 2.
Integer nearest_quotient(const Integer& a, const Integer& d) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  if (2 * abs(r) > abs(d)) ++q;
  return q;
}

}  // namespace

std::vector<Integer> smith_diagonal(IntMatrix m, std::size_t cols) {
  check_shape(m, cols);
  const std::size_t rows = m.size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < best)) {
            best = abs(m[i][j]);
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      if (pc != t)
        for (auto& row : m) std::swap(row[t], row[pc]);

      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const Integer q = nearest_quotient(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        clear = clear && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const Integer q = nearest_quotient(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        clear = clear && m[t][j] == 0;
      }
      if (!clear) continue;

      // Divisibility: the pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t k = t; k < cols; ++k) m[t][k] += m[bad][k];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

AbelianInvariants abelian_invariants(const IntMatrix& relations, std::size_t generators) {
  const auto diag = smith_diagonal(relations, generators);
  AbelianInvariants inv;
  for (const auto& d : diag)
    if (d != 1) inv.torsion.push_back(d);
  inv.rank = generators - diag.size();
  return inv;
}

std::size_t IntLattice::leading(const IntVector& v) const {
  for (std::size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) return j;
  return dim_;
}

void IntLattice::reduce_above(std::size_t row) {
  const std::size_t p = leading(rows_[row]);
  for (std::size_t i = 0; i < row; ++i) {
    if (rows_[i][p] == 0) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), rows_[i][p].get_mpz_t(), rows_[row][p].get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = p; j < dim_; ++j) rows_[i][j] -= q * rows_[row][j];
  }
}

void IntLattice::insert(IntVector v) {
  if (v.size() != dim_) throw DimensionMismatch("lattice vector has wrong length");
  std::size_t r = 0;
  while (true) {
    const std::size_t p = leading(v);
    if (p == dim_) break;
    while (r < rows_.size() && leading(rows_[r]) < p) ++r;
    if (r == rows_.size() || leading(rows_[r]) > p) {
      if (v[p] < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(r), std::move(v));
      reduce_above(r);
      for (std::size_t k = r + 1; k < rows_.size(); ++k) reduce_above(k);
      return;
    }
    // Same pivot: replace the row by the gcd combination, keep eliminating v.
    IntVector& row = rows_[r];
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[p].get_mpz_t(), v[p].get_mpz_t());
    const Integer a = row[p] / g;
    const Integer b = v[p] / g;
    IntVector combined(dim_), rest(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      combined[j] = s * row[j] + t * v[j];
      rest[j] = a * v[j] - b * row[j];
    }
    if (combined[p] < 0)
      for (auto& x : combined) x = -x;
    row = std::move(combined);
    reduce_above(r);
    for (std::size_t k = r + 1; k < rows_.size(); ++k) reduce_above(k);
    v = std::move(rest);
  }
}

bool IntLattice::contains(IntVector v) const {
  if (v.size() != dim_) throw DimensionMismatch("lattice vector has wrong length");
  for (const auto& row : rows_) {
    const std::size_t p = leading(row);
    for (std::size_t j = 0; j < p; ++j)
      if (v[j] != 0) return false;
    if (v[p] % row[p] != 0) return false;
    const Integer q = v[p] / row[p];
    for (std::size_t j = p; j < dim_; ++j) v[j] -= q * row[j];
  }
  return leading(v) == dim_;
}

AbelianInvariants IntLattice::quotient_invariants() const { return abelian_invariants(rows_, dim_); }

}  // namespace gecliff
