#pragma once

#include "pgtower/structure.hpp"

namespace pgt {

// Least representative of each coset of Z(E) in E, and the central cofactor:
// e = rep[e] * zeta[e] with zeta[e] in Z(E).
struct Transversal {
  std::vector<Elt> rep;        // e -> least element of e Z(E)
  std::vector<Elt> zeta;       // e -> rep[e]^{-1} e
  std::vector<Elt> reps;       // sorted list of distinct representatives
  std::vector<std::uint32_t> rep_pos;  // e -> index in reps (only valid on reps)
};

Transversal make_transversal(const GroupPtr& e, const Subgroup& z);

// Central power of n copies of E: the quotient of E^n by
// F = { central tuples with product 1 }, realized on canonical coset forms
// (components 2..n are transversal representatives, component 1 absorbs the
// central part). |K| = |E|^n / q^(n-1) with q = |Z(E)|.
struct CentralPowerGroup {
  GroupPtr base;
  std::uint32_t copies = 1;
  Subgroup base_center;        // Z(E) in E
  Transversal trans;
  GroupPtr K;
  Subgroup L;                  // image of Z(E)^n in K; cyclic of order q
  std::vector<std::vector<Elt>> F;  // the glued central tuples, |F| = q^(n-1)
  std::uint64_t ambient_order = 0;  // |E|^n
  GroupPtr ambient;            // E^n, materialized only when it fits the cap

  std::vector<Elt> decode(Elt k) const;               // K code -> canonical tuple
  Elt encode(const std::vector<Elt>& canonical) const;
  std::vector<Elt> canonicalize(std::vector<Elt> tuple) const;
  Elt encode_tuple(const std::vector<Elt>& tuple) const;  // canonicalize + encode
  bool in_F(const std::vector<Elt>& tuple) const;
};

// Errors: CenterNotCyclic, NotAPGroup, OrderCapExceeded.
CentralPowerGroup central_power(const GroupPtr& e, std::uint32_t n, const Caps& caps = {});

struct CentralQuotientIso {
  GroupPtr k_mod_l;      // K/L
  GroupHom projection;   // K -> K/L
  GroupPtr power;        // (E/Z(E))^n
  GroupHom iso;          // K/L -> (E/Z(E))^n, verified bijective homomorphism
};

// The reduction-mod-centre isomorphism K/L -> (E/Z(E))^n, checked exhaustively.
CentralQuotientIso natural_central_quotient_iso(const CentralPowerGroup& cp,
                                                const Caps& caps = {});

}  // namespace pgt
