#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/dynamic_bitset.hpp>

namespace hollowlat {

/// Selects between the OpenMP kernels and their serial reference versions.
/// Both produce identical results; the serial path exists for testing.
enum class Execution { serial, parallel };

using Bitset = boost::dynamic_bitset<std::uint64_t>;

}  // namespace hollowlat
