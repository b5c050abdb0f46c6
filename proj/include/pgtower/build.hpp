#pragma once

#include "pgtower/group.hpp"
#include "pgtower/group_spec.hpp"

namespace pgt {

// Builds the group described by a spec tree. Errors: InvalidUnit,
// OrderCapExceeded, MalformedSpec (and whatever nested constructions raise).
GroupPtr build_group(const GroupSpec& spec, const Caps& caps = {});

// Direct power helper shared by the tower stages.
GroupPtr direct_power(const GroupPtr& g, std::uint32_t n, const Caps& caps);

}  // namespace pgt
