#pragma once

#include "pgtower/central_power.hpp"

namespace pgt {

// Regular wreath product H wr C_c on pairs (tuple in H^c, shift exponent).
// Conjugation by the shift generator alpha moves coordinate i to i+1 (mod c).
struct WreathGroup {
  GroupPtr base;
  std::uint32_t c = 1;
  GroupPtr W;
  Subgroup B;  // base group H^c
  Subgroup Z;  // Z(H)^c
  std::uint64_t base_order = 0;  // |H|^c
  Elt alpha = 0;                 // (identity tuple, 1); identity when c = 1

  std::vector<Elt> decode_tuple(Elt w) const;  // base part
  std::uint32_t shift_of(Elt w) const;
  Elt encode(const std::vector<Elt>& tuple, std::uint32_t shift) const;
};

// Errors: OrderCapExceeded.
WreathGroup regular_wreath(const GroupPtr& h, std::uint32_t c, const Caps& caps = {});

// Smallest b in B with [b,w] not in Z, if one exists.
std::optional<Elt> wreath_lemma_witness(const WreathGroup& w, Elt outside);

struct WreathLemmaReport {
  bool holds = false;                 // every w outside B has a witness
  std::uint32_t outside_count = 0;
  std::vector<Elt> failures;          // w without witness (empty iff holds)
  std::vector<std::pair<Elt, Elt>> sample_witnesses;  // a few (w, b) pairs
};

// For every w in W \ B, find b in B with [b,w] outside Z. Exhaustive.
WreathLemmaReport check_wreath_lemma(const WreathGroup& w);

// Wreath-central product of E with C_{p^n}: the semidirect product
// J = K rtimes <alpha> of the central power K of p^n copies of E by the
// coordinate shift. Z(J) = L, so J is monolithic when E is.
struct WreathCentralGroup {
  GroupPtr base;
  std::uint32_t p = 2, n = 0;
  std::uint32_t shifts = 1;  // p^n
  CentralPowerGroup K;
  GroupPtr J;
  Subgroup L;                     // L inside J (shift 0 block)
  Elt alpha = 0;
  std::vector<std::vector<Elt>> sigma;  // sigma[s]: K perm for conjugation by alpha^-s
  bool shift_preserves_F = false;       // asserted during construction

  Elt k_part(Elt j) const;
  std::uint32_t shift_of(Elt j) const;
  Elt encode(Elt k, std::uint32_t shift) const;
};

// Errors: AbelianBase, CenterNotCyclic, NotAPGroup, OrderCapExceeded. n = 0
// gives J = E on the nose (one copy, trivial shift).
WreathCentralGroup wreath_central(const GroupPtr& e, std::uint32_t p, std::uint32_t n,
                                  const Caps& caps = {});

// Bounded search for a UnitSemidirect spec building a non-abelian group of
// class <= class_cap with cyclic centre of order exactly q = p^k.
// Errors: SearchExhausted.
GroupSpec seed_search(std::uint32_t p, std::uint32_t q, std::uint32_t class_cap = 2,
                      const Caps& caps = {}, std::uint32_t a_max = 6, std::uint32_t b_max = 4);

}  // namespace pgt
