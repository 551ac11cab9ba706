#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gecliff/matrix2.hpp"
#include "gecliff/relations.hpp"
#include "gecliff/smith.hpp"

namespace gecliff {

struct Letter {
  std::string gen;
  int exp = 1;  // nonzero
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Relator = std::vector<Letter>;

template <typename T>
using MatrixModel = std::map<std::string, Matrix2<T>>;

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Relator> relators;
  std::optional<MatrixModel<CliffordElement>> model;

  std::size_t generator_index(const std::string& g) const;  // throws InvalidArgument
  // Throws InvalidArgument on undeclared generators, duplicate names or zero exponents.
  void validate() const;
};

// Merges adjacent letters on the same generator and drops zero exponents.
// Relators are not cyclically reduced.
Relator free_reduce(const Relator& r);
std::string to_string(const Relator& r);  // "a a j^-1"

// Builtin kinds: lemma53, lemma54 (n >= 1), sl2z-classic (n ignored).
const std::vector<std::string>& builtin_kinds();
Presentation builtin_presentation(const std::string& kind, int n);

// Matrix images of the lemma53 and lemma54 generators with i_h replaced by
// units[h-1]; units.size() == n - 1.
template <typename T>
MatrixModel<T> lemma_model(const std::string& kind, const T& one, const std::vector<T>& units) {
  const T z = zero_like(one);
  const Matrix2<T> J = -mat_identity(one);
  const Matrix2<T> A = elementary(z, one);
  const Matrix2<T> T1{one, one, z, one};
  MatrixModel<T> m;
  if (kind == "lemma53") {
    m.emplace("J", J);
    m.emplace("A", A);
    m.emplace("T1", T1);
  } else {
    m.emplace("j", J);
    m.emplace("a", A);
    m.emplace("c", T1 * A);
  }
  for (std::size_t h = 0; h < units.size(); ++h) {
    const std::string idx = "i" + std::to_string(h + 1);
    const Matrix2<T> Th{one, units[h], z, one};
    const Matrix2<T> Lh = diagonal(units[h], -units[h]);
    if (kind == "lemma53") {
      m.emplace("T_" + idx, Th);
      m.emplace("L_" + idx, Lh);
    } else {
      m.emplace("b_" + idx, A * Lh);
      m.emplace("d_" + idx, Th * Lh * A);
    }
  }
  return m;
}

template <typename T>
Matrix2<T> eval_relator(const Relator& r, const MatrixModel<T>& model, const T& one) {
  Matrix2<T> acc = mat_identity(one);
  for (const auto& l : r) {
    auto it = model.find(l.gen);
    if (it == model.end()) throw MissingModel("no image for generator '" + l.gen + "'");
    const Matrix2<T> g = l.exp > 0 ? it->second : mat_inverse(it->second);
    for (int k = 0; k < (l.exp > 0 ? l.exp : -l.exp); ++k) acc = acc * g;
  }
  return acc;
}

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;  // offending relators
  bool pass() const { return failures.empty(); }
};

// Checks every relator against the attached model; throws MissingModel without one.
VerifyReport verify_presentation(const Presentation& p);

template <typename T>
VerifyReport verify_with_model(const Presentation& p, const MatrixModel<T>& model, const T& one) {
  VerifyReport r;
  for (const auto& g : p.generators)
    if (!model.count(g)) throw MissingModel("no image for generator '" + g + "'");
  for (const auto& rel : p.relators) {
    ++r.checked;
    if (!is_identity(eval_relator(rel, model, one), one)) r.failures.push_back(to_string(rel));
  }
  return r;
}

// Rows are relators, columns generators.
IntMatrix exponent_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);
// Class of a word in Z^gens modulo the relator lattice is zero.
bool abelian_image_is_zero(const Presentation& p, const Relator& word);

struct Partition {
  std::set<std::string> a, b, c;
};

struct AmalgamSplit {
  Presentation factor_ac, factor_bc, amalgamated_c;
  Partition partition;  // normalized: A and B with C removed
};

// A and B may list C's generators as well; they are removed before the
// disjointness check. Throws PartitionNotDisjoint or RelatorCrossesFactors.
AmalgamSplit amalgam_split(const Presentation& p, Partition partition);
// The partition used in the amalgam decomposition of lemma54 at n.
Partition builtin_partition(int n);
// Presentation the amalgamated factor of lemma54 at n should match:
// lemma54 at n - 1, or <j | j^2> for n = 1.
Presentation expected_amalgamated(int n);
// Same generator list and same multiset of freely reduced relators.
bool structurally_equal(const Presentation& x, const Presentation& y);

Presentation restrict_model(Presentation p);  // drops model entries outside p.generators

// "gens: a b" followed by one "rel: ..." line per relator. Exponents are
// written x^k; an empty relator list is allowed and "#" starts a comment.
std::string to_text(const Presentation& p);
Presentation parse_presentation(std::string_view text);  // throws ParseError

struct HomResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;  // first relator whose image is not the identity
};

template <typename T>
HomResult check_hom(const Presentation& p, const MatrixModel<T>& images, const T& one) {
  HomResult r;
  for (const auto& g : p.generators)
    if (!images.count(g)) throw MissingModel("no image for generator '" + g + "'");
  for (const auto& rel : p.relators) {
    ++r.checked;
    if (!is_identity(eval_relator(rel, images, one), one)) {
      r.ok = false;
      r.witness = to_string(rel);
      break;
    }
  }
  return r;
}

// Relation instances over the source ring pushed through an additive map f on
// the entries of every E and Diag token; checks lhs = rhs in the target.
template <typename S, typename T, typename F>
HomResult check_hom_instances(const std::vector<RelationInstance<S>>& instances, const T& target_one, F&& f) {
  HomResult r;
  for (const auto& inst : instances) {
    ++r.checked;
    const auto lhs = transport(inst.lhs, target_one, f);
    const auto rhs = transport(inst.rhs, target_one, f);
    if (!(eval_word(lhs) == eval_word(rhs))) {
      r.ok = false;
      r.witness = inst.label;
      break;
    }
  }
  return r;
}

}  // namespace gecliff
