#pragma once

#include <ostream>
#include <vector>

#include "tnet/driver.hpp"

namespace tnet {

// Columns: t, T, F11..F33 (row-major), sig11, sig22, sig33, sig12, sig13,
// sig23, gamma0_net1..gamma0_netM, newton_iters. Values use 17 significant
// digits so they read back bit-exactly.
void write_csv(std::ostream& out, const std::vector<Record>& records);

}  // namespace tnet
