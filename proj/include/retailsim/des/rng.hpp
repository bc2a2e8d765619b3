#pragma once

#include <cstdint>

namespace retailsim::des {

/// Agent populations that own random streams.
enum class Population : std::uint8_t { shop = 0, customer = 1, staff = 2 };

/// Decision categories. Each (population, category) pair gets its own stream
/// so that adding a category never shifts the draws of another one.
enum class Category : std::uint8_t {
  interarrival = 0,
  attributes = 1,
  browse_delay = 2,
  help_decision = 3,
  expert_decision = 4,
  purchase_decision = 5,
  after_help_decision = 6,
  service_time = 7,
};

/// Packs (population, category, member index) into a stream id. Member index
/// lets every customer carry private streams, so a customer's draws do not
/// depend on how events interleave with other customers.
constexpr std::uint64_t stream_id(Population population, Category category,
                                  std::uint64_t member = 0) {
  return (static_cast<std::uint64_t>(population) << 56) |
         (static_cast<std::uint64_t>(category) << 48) | (member & 0xFFFF'FFFF'FFFFull);
}

/// SplitMix64 finalizer; bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seed for replication `index` of a run seeded with `base_seed`.
constexpr std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t index) {
  return mix64(base_seed ^ mix64(index + 0x632BE59BD9B4E019ull));
}

/// Reproducible stream of uniform draws. Identical (seed, stream id) gives an
/// identical sequence on every platform: the generator is SplitMix64 and all
/// transforms are written out here instead of relying on std:: distributions,
/// whose algorithms are implementation-defined.
class RngStream {
public:
  RngStream() = default;
  RngStream(std::uint64_t seed, std::uint64_t id)
      : seed_(seed), id_(id), state_(mix64(seed ^ mix64(id ^ 0x9E3779B97F4A7C15ull))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t id() const { return id_; }

private:
  std::uint64_t seed_ = 0;
  std::uint64_t id_ = 0;
  std::uint64_t state_ = 0;
};

/// True with probability p. p outside [0,1] is rejected during config
/// validation, so here it is clamped by construction of the comparison.
inline bool bernoulli(double p, RngStream& stream) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return stream.uniform() < p;
}

}  // namespace retailsim::des
