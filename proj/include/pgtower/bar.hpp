#pragma once

#include "json.hpp"
#include "pgtower/fp_matrix.hpp"
#include "pgtower/group.hpp"

namespace pgt {

// Normalized bar complex with trivial F_p coefficients: q-cochains are
// functions on q-tuples of non-identity elements, (|G|-1)^q coordinates,
// mixed-radix indexed (coordinate 1 least significant, digit = code - 1).

std::uint64_t cochain_dim(const FiniteGroup& g, std::uint32_t q);

// Matrix of d^q : C^q -> C^(q+1) (rows = (q+1)-tuples, cols = q-tuples).
// Throws WorkCapExceeded when (|G|-1)^(q+1) > work_cap; q <= 3.
FpMatrix coboundary_matrix(const FiniteGroup& g, std::uint32_t p, std::uint32_t q,
                           std::uint64_t work_cap = 20'000'000);

// Matrix of the chain boundary d_q : C_q -> C_(q-1) on normalized chains
// (rows = (q-1)-tuples, cols = q-tuples), assembled from the simplicial
// boundary formula, independent of coboundary_matrix.
FpMatrix boundary_matrix(const FiniteGroup& g, std::uint32_t p, std::uint32_t q,
                         std::uint64_t work_cap = 20'000'000);

struct CohomologyResult {
  std::string group;
  std::uint32_t p = 2;
  std::uint32_t qmax = 0;
  std::vector<std::uint32_t> dims;           // degree q -> dim H^q(G, F_p)
  std::vector<std::uint32_t> homology_dims;  // degree q -> dim H_q(G, F_p); empty until computed
  bool p_group = false;
  std::string method = "normalized_bar";
  std::uint64_t work_cap = 0;

  nlohmann::json to_json() const;
};

// dims[q] = nullity(d^q) - rank(d^(q-1)). For p-groups, dims[1] is
// cross-checked against the Frattini quotient dimension (mismatch is an
// internal error). qmax <= 3.
CohomologyResult cohomology_dims(const GroupPtr& g, std::uint32_t p, std::uint32_t qmax,
                                 const Caps& caps = {});

// Fills homology_dims from the boundary matrices (independent code path).
void homology_dims(const GroupPtr& g, CohomologyResult& out, const Caps& caps = {});

CohomologyResult full_cohomology(const GroupPtr& g, std::uint32_t p, std::uint32_t qmax,
                                 const Caps& caps = {});

}  // namespace pgt
