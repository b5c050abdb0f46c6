#pragma once

#include <map>
#include <optional>
#include <utility>

#include "pgtower/group.hpp"

namespace pgt {

Subgroup center(const GroupPtr& g);

bool is_abelian(const FiniteGroup& g);

// Cyclic iff some member's order equals the subgroup order. Members must form
// a subgroup.
bool is_cyclic(const FiniteGroup& g, const std::vector<Elt>& members);
bool is_cyclic(const GroupPtr& g);

// Smallest subgroup (normal subgroup if normal=true) containing seeds.
Subgroup closure(const GroupPtr& g, const std::vector<Elt>& seeds, bool normal);

bool check_normal(const FiniteGroup& g, const std::vector<Elt>& sorted_members);

// Length of the lower central series; throws NotNilpotent if it stabilizes
// above the trivial subgroup.
std::uint32_t nilpotency_class(const GroupPtr& g);

// log_p [G : Phi(G)] where Phi(G) is generated by p-th powers and commutators.
// Throws NotAPGroup unless |G| is a power of p.
std::uint32_t frattini_quotient_dim(const GroupPtr& g, std::uint32_t p);

// All minimal elements of {normal closure of x : x != 1} under inclusion.
// For p-groups the result is cross-checked against the order-p subgroups of
// the centre; disagreement is an internal error.
std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g, std::uint32_t enum_cap = 2048);

// The unique minimal normal subgroup, if any. For p-groups also asserts the
// equivalence with cyclic centre.
std::optional<Subgroup> monolith(const GroupPtr& g, std::uint32_t enum_cap = 2048);

// Cyclic-centre criterion; valid for p-groups of any order, no enumeration.
bool is_monolithic_pgroup(const GroupPtr& g);

struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
  std::vector<Elt> coset_rep;  // element -> least element of its coset
};

// Coset group with least-element canonical representatives. Throws NotNormal.
QuotientResult quotient_by(const GroupPtr& g, const Subgroup& n);

// order -> multiplicity over all elements.
std::map<std::uint32_t, std::uint32_t> order_profile(const FiniteGroup& g);

std::optional<std::uint32_t> p_group_prime(const FiniteGroup& g);

}  // namespace pgt
