#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pgtower/common.hpp"

namespace pgt {

// Constructor AST for finite groups. This is the external config language;
// parse_spec accepts the documented JSON forms and rejects everything else.
struct GroupSpec;
using SpecPtr = std::shared_ptr<const GroupSpec>;

struct CyclicSpec {
  std::uint32_t m;
};

// C_{p^a} rtimes C_{p^b}, the generator of the top acting as x -> x^t.
struct UnitSemidirectSpec {
  std::uint32_t p, a, b;
  std::uint64_t t;
};

struct DirectProductSpec {
  std::vector<SpecPtr> parts;
};

struct CentralPowerSpec {
  SpecPtr base;
  std::uint32_t copies;
};

struct WreathSpec {
  SpecPtr base;
  std::uint32_t cyclic_order;
};

struct WreathCentralSpec {
  SpecPtr base;
  std::uint32_t p, n;
};

// Quotient by the normal closure of the given generator words.
// A word is a sequence of signed 1-based generator indices: k means the k-th
// generator of the base, -k its inverse.
struct QuotientSpec {
  SpecPtr base;
  std::vector<std::vector<int>> normal_generators;
};

struct GroupSpec {
  std::variant<CyclicSpec, UnitSemidirectSpec, DirectProductSpec, CentralPowerSpec,
               WreathSpec, WreathCentralSpec, QuotientSpec>
      node;
};

GroupSpec parse_spec(const nlohmann::json& j);          // throws MalformedSpec
GroupSpec parse_spec_file(const std::string& path);     // throws ConfigError / MalformedSpec
nlohmann::json spec_to_json(const GroupSpec& s);
std::string spec_label(const GroupSpec& s);

inline SpecPtr make_spec(GroupSpec s) { return std::make_shared<const GroupSpec>(std::move(s)); }

// Canned specs used across tests and the verification corpus.
GroupSpec spec_cyclic(std::uint32_t m);
GroupSpec spec_d8();             // C4:C2 with t=3
GroupSpec spec_q8();             // (C4:C4 with t=3) / <x^2 y^2>
GroupSpec spec_modular16();      // C8:C2 with t=5
GroupSpec spec_modular27();      // C9:C3 with t=4
GroupSpec spec_direct_cyclic(const std::vector<std::uint32_t>& ms);

}  // namespace pgt
