#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "gecliff/error.hpp"
#include "gecliff/smith.hpp"

namespace gecliff {

// Structural summary of a finite group.
struct UnitGroupFingerprint {
  std::size_t order = 0;
  std::size_t exponent = 0;
  std::size_t center_order = 0;
  std::vector<Integer> abelianization;  // invariant factors, each dividing the next
};

// A finite group given by generators inside some ambient monoid. Elements are
// enumerated by breadth-first closure, so index 0 is the identity and each
// element carries the exponent vector of its spanning-tree word. Abelian data
// comes from the Reidemeister-Schreier relation lattice of that tree.
//
// T needs operator< and operator==; Mul is a callable T(const T&, const T&).
template <typename T, typename Mul>
class FiniteGroup {
 public:
  FiniteGroup(T identity, std::vector<T> generators, Mul mul, std::size_t max_order)
      : generators_(std::move(generators)), mul_(std::move(mul)) {
    const std::size_t s = generators_.size();
    add(identity, IntVector(s, 0));
    for (std::size_t g = 0; g < elements_.size(); ++g) {
      cayley_.emplace_back(s);
      for (std::size_t k = 0; k < s; ++k) {
        T prod = mul_(elements_[g], generators_[k]);
        auto it = index_.find(prod);
        std::size_t target;
        if (it == index_.end()) {
          if (elements_.size() >= max_order)
            throw InvalidArgument("finite group closure exceeded the order bound");
          IntVector ev = words_[g];
          ev[k] += 1;
          target = add(std::move(prod), std::move(ev));
        } else {
          target = it->second;
        }
        cayley_[g][k] = target;
      }
    }
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<T>& elements() const { return elements_; }
  const std::vector<T>& generators() const { return generators_; }

  std::size_t index_of(const T& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw InvalidArgument("element is not in the group");
    return it->second;
  }
  bool contains(const T& x) const { return index_.count(x) != 0; }

  std::size_t element_order(std::size_t g) const {
    const T& x = elements_[g];
    T p = x;
    std::size_t k = 1;
    while (!(p == elements_[0])) {
      p = mul_(p, x);
      ++k;
    }
    return k;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (std::size_t g = 0; g < elements_.size(); ++g) e = std::lcm(e, element_order(g));
    return e;
  }

  std::size_t center_order() const {
    std::size_t c = 0;
    for (const auto& x : elements_) {
      bool central = true;
      for (const auto& s : generators_)
        if (!(mul_(x, s) == mul_(s, x))) {
          central = false;
          break;
        }
      if (central) ++c;
    }
    return c;
  }

  // Relation lattice L in Z^{#generators}: G^ab = Z^S / L.
  const IntLattice& relation_lattice() const {
    if (!lattice_) {
      lattice_.emplace(generators_.size());
      for (std::size_t g = 0; g < elements_.size(); ++g)
        for (std::size_t k = 0; k < generators_.size(); ++k) {
          IntVector row = words_[g];
          row[k] += 1;
          const IntVector& target = words_[cayley_[g][k]];
          for (std::size_t j = 0; j < row.size(); ++j) row[j] -= target[j];
          lattice_->insert(std::move(row));
        }
    }
    return *lattice_;
  }

  AbelianInvariants abelianization() const { return relation_lattice().quotient_invariants(); }

  // True iff x lies in the commutator subgroup, i.e. has trivial image in G^ab.
  bool in_commutator_subgroup(const T& x) const {
    return relation_lattice().contains(words_[index_of(x)]);
  }

  UnitGroupFingerprint fingerprint() const {
    UnitGroupFingerprint fp;
    fp.order = order();
    fp.exponent = exponent();
    fp.center_order = center_order();
    fp.abelianization = abelianization().torsion;
    return fp;
  }

 private:
  std::size_t add(T x, IntVector ev) {
    const std::size_t id = elements_.size();
    index_.emplace(x, id);
    elements_.push_back(std::move(x));
    words_.push_back(std::move(ev));
    return id;
  }

  std::vector<T> generators_;
  Mul mul_;
  std::vector<T> elements_;
  std::vector<IntVector> words_;
  std::vector<std::vector<std::size_t>> cayley_;
  std::map<T, std::size_t> index_;
  mutable std::optional<IntLattice> lattice_;
};

}  // namespace gecliff
