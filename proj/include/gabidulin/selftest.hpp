// Seeded property-check battery shared by `gabidulin selftest` and tests.
#pragma once

#include <cstdint>
#include <ostream>

namespace gabidulin::selftest {

// Runs every suite, printing one line per suite; returns true when all pass.
bool run_all(std::ostream& os, std::uint64_t seed = 0x67616269u);

}  // namespace gabidulin::selftest
