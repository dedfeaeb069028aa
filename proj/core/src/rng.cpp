#include "dronecell/rng.hpp"

namespace dronecell {

Rng make_stream(std::uint64_t seed, std::uint64_t entity, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(entity), static_cast<std::uint32_t>(entity >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

double uniform01(Rng& rng) {
  // 53 random mantissa bits; identical across standard libraries.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace dronecell
