#pragma once

#include <cassert>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgtower/common.hpp"

namespace pgt {

// Finite group on element codes 0..order-1 with a materialized Cayley table.
// Identity is code 0. Immutable after construction; all queries are pure.
class FiniteGroup {
 public:
  // Fills the table from mulfn and derives inverses. Checks the identity law
  // and existence of two-sided inverses (a broken builder is a bug, not an
  // input error). Associativity is the job of verify_axioms.
  FiniteGroup(std::uint32_t order, const std::function<Elt(Elt, Elt)>& mulfn,
              std::vector<Elt> generators, std::string label, std::string provenance);

  // Adopts a raw table without any checking. Used by fault-injection tests.
  static std::shared_ptr<const FiniteGroup> from_raw_table(std::uint32_t order,
                                                           std::vector<Elt> table,
                                                           std::vector<Elt> generators,
                                                           std::string label);

  std::uint32_t order() const { return order_; }
  Elt mul(Elt a, Elt b) const { return table_[std::size_t(a) * order_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt x, Elt g) const { return mul(mul(inv(g), x), g); }  // x^g
  Elt comm(Elt a, Elt b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elt pow(Elt x, long e) const;
  std::uint32_t element_order(Elt x) const;

  std::span<const Elt> generators() const { return generators_; }
  const std::string& label() const { return label_; }
  const std::string& provenance() const { return provenance_; }

 private:
  FiniteGroup() = default;
  std::uint32_t order_ = 0;
  std::vector<Elt> table_;
  std::vector<Elt> inv_;
  std::vector<Elt> generators_;
  std::string label_;
  std::string provenance_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<Elt> members;  // sorted, contains 0
  bool is_normal = false;

  std::uint32_t order() const { return std::uint32_t(members.size()); }
  bool contains(Elt x) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

// Total map between finite groups; multiplicativity is checked by verify_hom,
// builders are expected to call it.
struct GroupHom {
  GroupPtr domain, codomain;
  std::vector<Elt> map;

  Elt operator()(Elt x) const { return map[x]; }
};

struct HomCheck {
  bool multiplicative = false;
  bool surjective = false;
  bool exhaustive = false;    // all |dom|^2 pairs vs sampled
  std::uint64_t pairs_checked = 0;
  std::uint32_t image_size = 0;
  std::uint32_t kernel_size = 0;
  std::optional<std::pair<Elt, Elt>> witness;  // pair violating multiplicativity
};

// Exhaustive when |dom| <= exhaustive_limit, otherwise `samples` random pairs.
HomCheck verify_hom(const GroupHom& h, std::uint32_t exhaustive_limit = 1024,
                    std::uint64_t samples = 100000, std::uint64_t seed = 0x5eed);

struct AxiomViolation {
  enum What { Associativity, Identity, Inverse, GeneratorClosure } what;
  Elt a = 0, b = 0, c = 0;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;

  bool ok() const { return violations.empty(); }
};

// Associativity exhaustive for order <= exhaustive_limit, sampled above;
// identity, inverse and generator-closure checks are always exhaustive.
AxiomReport verify_axioms(const FiniteGroup& g, std::uint32_t exhaustive_limit = 512,
                          std::uint64_t samples = 100000, std::uint64_t seed = 0x5eed);

}  // namespace pgt
