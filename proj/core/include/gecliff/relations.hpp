#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gecliff/words.hpp"

namespace gecliff {

// lhs = rhs as a matrix identity.
template <typename T>
struct RelationInstance {
  std::string family;
  std::string label;
  GenWord<T> lhs, rhs;
};

struct FamilyReport {
  std::string family;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string counterexample;  // label of the first failure

  bool pass() const { return failed == 0; }
};

struct RelationOptions {
  std::size_t budget = 4000;  // cap on instances of the enumerated families
  std::uint64_t seed = 0;
  // Over orders, write DE2 as D(mu)^2 = D(-1) and (D(mu)D(nu))^2 = D(-1) for
  // units mu, nu != +-1 instead of D(mu)D(nu) = [mu nu, mu^-1 nu^-1]. Over
  // Gamma_n(Z) this is always the form used.
  bool de2_generator_form = false;
};

// R1 R2 R3 R3p R4 R5 alpha eq29 DE2
const std::vector<std::string>& relation_family_names();

// Instances over Gamma_n(Z). Box families range over vectors with coordinates
// in {-1, 0, 1}; alpha covers every a in V^n(Z) with norm 2 or 3. When a box
// family has more instances than the budget, a seeded sample is taken.
std::vector<RelationInstance<CliffordElement>> relation_instances(int n, const std::string& family,
                                                                  const RelationOptions& opts = {});
// The same over an order; unit sets are all units of the order.
std::vector<RelationInstance<OrderElement>> relation_instances(const OrderPtr& ctx, const std::string& family,
                                                               const RelationOptions& opts = {});

template <typename T>
FamilyReport verify_instances(const std::string& family, const std::vector<RelationInstance<T>>& instances) {
  FamilyReport r;
  r.family = family;
  for (const auto& inst : instances) {
    ++r.checked;
    if (!(eval_word(inst.lhs) == eval_word(inst.rhs))) {
      if (r.failed == 0) r.counterexample = inst.label;
      ++r.failed;
    }
  }
  return r;
}

std::vector<FamilyReport> verify_relation_families(int n, const std::vector<std::string>& families,
                                                   const RelationOptions& opts = {});
std::vector<FamilyReport> verify_relation_families(const OrderPtr& ctx, const std::vector<std::string>& families,
                                                   const RelationOptions& opts = {});

}  // namespace gecliff
