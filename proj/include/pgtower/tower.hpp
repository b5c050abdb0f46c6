#pragma once

#include "pgtower/build.hpp"
#include "pgtower/wreath.hpp"

namespace pgt {

enum class TupleRule { DropLast, ResidueProduct };

// Map between raw tuple powers of E. DropLast : E^n -> E^(n-1) forgets the
// last coordinate. ResidueProduct : E^(p^n) -> E^(p^(n-1)) sends output
// coordinate i to the product of the input coordinates at positions congruent
// to i mod p^(n-1), factors in increasing index order. DropLast is a
// homomorphism; ResidueProduct is not for non-abelian E, but preserves
// congruence mod the centre powers.
struct TupleMap {
  GroupPtr base;
  TupleRule rule;
  std::uint32_t p = 0, n = 0;       // ResidueProduct parameters
  std::uint32_t domain_len = 0, codomain_len = 0;

  std::vector<Elt> apply(const std::vector<Elt>& x) const;
};

TupleMap phi_drop_last(const GroupPtr& e, std::uint32_t n);                    // n >= 2
TupleMap phi_residue_product(const GroupPtr& e, std::uint32_t p, std::uint32_t n);  // n >= 1

// Pair of domain tuples with phi(xy) != phi(x)phi(y); exhaustive when the
// domain is small, deterministic construction + sampling otherwise. nullopt
// means none found (phi is multiplicative as far as checked).
std::optional<std::pair<std::vector<Elt>, std::vector<Elt>>> phi_multiplicativity_witness(
    const TupleMap& phi, std::uint64_t samples = 20000, std::uint64_t seed = 0x5eed);

struct InducedPsi {
  GroupPtr quotient;   // Q = E/Z(E)
  GroupHom hom;        // Q^dlen -> Q^clen, verified
  HomCheck check;
};

// The map induced by phi on central quotients, evaluated coordinatewise in
// Q = E/Z(E). For ResidueProduct this requires class(E) <= 2 (so that Q is
// abelian); otherwise throws ClassTooHigh carrying a counterexample pair.
InducedPsi induced_psi(const TupleMap& phi, const Caps& caps = {});

struct ExtendedPsi {
  WreathGroup stage_from, stage_to;  // Q wr C_{p^n}, Q wr C_{p^(n-1)}
  GroupHom hom;
  HomCheck check;
  bool alpha_to_alpha = false;       // hom(alpha_n) == alpha_{n-1}
  bool equivariant = false;          // psi . shift == shift . psi on all base tuples
};

// Extends psi to the wreath stages by alpha_n -> alpha_{n-1}. Throws
// EquivarianceFailure if the shift compatibility check fails (a construction
// bug; the extension rule is only sound with it).
ExtendedPsi extend_psi_to_wreath(const InducedPsi& psi, std::uint32_t p, std::uint32_t n,
                                 const Caps& caps = {});

enum class TowerKind { CentralPower, WreathCentral, Cyclic };

const char* tower_kind_name(TowerKind k);
TowerKind tower_kind_from_name(const std::string& s);  // throws ConfigError

struct StageAudit {
  std::uint32_t n = 0;
  bool skipped = false;
  std::string skip_reason;
  std::uint64_t order = 0;          // stage order
  std::uint32_t center_order = 0;   // stage centre
  std::uint32_t d = 0;              // minimal generator count of the stage
  bool monolithic = false;          // of the un-quotiented product K_n / J_n
  std::string monolith_method;      // "closures" or "cyclic-center"
  bool link_surjective = false;     // link from this stage down (false at the base)
  bool link_checked = false;
  bool stage_iso = false;           // product/L isomorphic to the stage, verified
  std::uint64_t product_order = 0;
  std::uint32_t product_center_order = 0;
  double wall_ms = 0.0;
};

// Finite truncation of the projective systems: stages are the central
// quotients realized in small form ((E/Z)^n for the central-power kind,
// (E/Z) wr C_{p^n} for the wreath-central kind, C_{p^n} for the cyclic kind),
// links are the connecting epimorphisms, verified per stage.
struct Tower {
  TowerKind kind = TowerKind::WreathCentral;
  std::uint32_t p = 2;
  SpecPtr seed;
  GroupPtr E;     // null for cyclic kind
  GroupPtr Q;     // E/Z(E); null for cyclic kind
  std::vector<std::uint32_t> levels;    // audit n per stage, ascending
  std::vector<GroupPtr> stages;
  std::vector<Elt> alphas;              // shift generator per stage (wreath kind)
  std::vector<GroupHom> links;          // links[i] : stages[i+1] -> stages[i]
  std::vector<StageAudit> audits;       // one per requested level (may be skipped)
  std::uint32_t deepest_level = 0;
};

// Stages up to level N; levels start at 0 for wreath-central and at 1
// otherwise. Stages beyond the caps are recorded as skipped, not fatal.
Tower build_tower(const GroupSpec& seed, TowerKind kind, std::uint32_t p, std::uint32_t N,
                  const Caps& caps = {});

// Compatible sequence from a top-stage element: (x_N, link(x_N), ...).
std::vector<Elt> thread_element(const Tower& t, Elt top);

}  // namespace pgt
