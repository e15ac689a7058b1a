#pragma once

#include <memory>

#include "hss/chevalley.hpp"
#include "hss/hermitian.hpp"

namespace hss::testing {

inline std::shared_ptr<const StructureConstants> algebra(Family f, int rank) {
  return std::make_shared<const StructureConstants>(StructureConstants::build(RootSystem::build(f, rank)));
}

inline std::shared_ptr<const HermitianSpace> space(Family f, int rank, int node) {
  return std::make_shared<const HermitianSpace>(HermitianSpace::build(algebra(f, rank), node));
}

}  // namespace hss::testing
