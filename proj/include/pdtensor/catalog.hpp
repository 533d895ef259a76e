#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdtensor/module.hpp"
#include "pdtensor/oracle.hpp"

namespace pdtensor {

/// Fixed test rings over QQ:
///   R1 = QQ[x,y]/(xy)             R2 = QQ[x,y]/(x^2,xy)
///   R3 = QQ[x,y,z,w]/(xy)         R4 = QQ[x,y,z]/(x^2)
///   R5 = QQ[x,y,z,w]/(x^2,xy,y^2) R6 = QQ[x,y,z]/(xy-z^2)
/// Repeated lookups return the same shared ring, so ring caches are reused.
RingPtr catalog_ring(std::string_view id);
std::vector<std::string> catalog_ids();
std::string catalog_description(std::string_view id);

/// R/(gens) with generators parsed in the ring's variables.
PresentedModule cyclic_from_strings(const RingPtr& ring, const std::vector<std::string>& gens);

/// The same presentation in the oracle's dense representation.
oracle::Module to_oracle(const PresentedModule& m);

}  // namespace pdtensor
