#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gecliff/rational.hpp"

namespace gecliff {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

// Invariants of a finitely generated abelian group Z^rank x Z/t1 x ... x Z/tk
// with 1 < t1 | t2 | ... | tk.
struct AbelianInvariants {
  std::vector<Integer> torsion;
  std::size_t rank = 0;

  // Order of the torsion part times (rank == 0 ? 1 : infinity); returns 0 for infinite groups.
  Integer order() const;
  bool operator==(const AbelianInvariants&) const = default;
};

std::string to_string(const AbelianInvariants& inv);

// Nonzero diagonal d1 | d2 | ... | dr (all > 0) of the Smith normal form of
// `m`, where every row has `cols` entries. r is the rank of `m`.
std::vector<Integer> smith_diagonal(IntMatrix m, std::size_t cols);

// Z^generators / (row span of relations).
AbelianInvariants abelian_invariants(const IntMatrix& relations, std::size_t generators);

// Row lattice in Z^dim kept in reduced echelon (Hermite) form. Rows can be
// streamed in one at a time, which keeps memory bounded by dim x dim.
class IntLattice {
 public:
  explicit IntLattice(std::size_t dim) : dim_(dim) {}

  void insert(IntVector v);
  bool contains(IntVector v) const;

  std::size_t dimension() const { return dim_; }
  const IntMatrix& basis() const { return rows_; }
  AbelianInvariants quotient_invariants() const;

 private:
  std::size_t leading(const IntVector& v) const;
  void reduce_above(std::size_t row);

  std::size_t dim_;
  IntMatrix rows_;  // sorted by pivot column, pivots positive
};

}  // namespace gecliff
