#pragma once

#include <cstdint>
#include <random>

namespace dronecell {

using Rng = std::mt19937_64;

/// Independent generator for one (seed, entity, stream) triple. Users get
/// their own traffic and mobility streams, so schemes compared on the same
/// seed see the same reading-time draws and the same walks.
[[nodiscard]] Rng make_stream(std::uint64_t seed, std::uint64_t entity, std::uint64_t stream);

/// Uniform double in [0, 1).
[[nodiscard]] double uniform01(Rng& rng);

}  // namespace dronecell
