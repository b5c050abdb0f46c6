#pragma once

#include "pgtower/bar.hpp"
#include "pgtower/tower.hpp"

namespace pgt {

// Cocycle-level basis of H^q(G, F_p): representative cocycles extending an
// echelon basis of the coboundary space, deterministic column order.
struct CohomologyBasis {
  GroupPtr g;
  std::uint32_t p = 2, q = 0;
  std::uint32_t dim = 0;
  std::vector<SparseVec> reps;   // one cocycle per class
  Echelon solver;                // coboundaries (untagged) + reps (tagged)

  CohomologyBasis() : solver(0, 2) {}

  // Coordinates of a cocycle's class in this basis.
  SparseVec coordinates(const SparseVec& cocycle) const;
};

CohomologyBasis cohomology_basis(const GroupPtr& g, std::uint32_t p, std::uint32_t q,
                                 const Caps& caps = {});

struct InflationData {
  std::string from, to;   // quotient label, group label
  std::uint32_t q = 0;
  std::uint32_t dim_from = 0, dim_to = 0;
  FpMatrix matrix;        // classes of pulled-back basis cocycles, one column each
  std::uint32_t rank = 0;
  bool zero_map = false;
  bool injective = false;

  nlohmann::json to_json() const;
};

// Inflation H^q(Q) -> H^q(G) along a surjection proj : G ->> Q, computed by
// pulling back representative cocycles and solving the coboundary system.
// Errors: NotSurjective, WorkCapExceeded.
InflationData inflation_on_cohomology(const GroupHom& proj, std::uint32_t p, std::uint32_t q,
                                      const Caps& caps = {});

struct TraceStage {
  std::uint32_t n = 0;
  bool skipped = false;          // work cap
  std::uint32_t dim = 0;         // dim H^q(stage)
  bool has_link = false;         // inflation along the link up from stage n-1
  InflationData link_inflation;  // valid when has_link
};

struct TowerTrace {
  std::uint32_t q = 0;
  std::vector<TraceStage> stages;
  // For q=1 on wreath-central towers: dims equal d(E)+1 from level 1 on and
  // every link inflation has that full rank.
  std::optional<bool> q1_stabilized;
};

// Per-stage dims and inflation ranks across the links; partial output when
// stages exceed the work cap.
TowerTrace tower_comparison_trace(const Tower& t, std::uint32_t q, const Caps& caps = {});

}  // namespace pgt
