#ifndef GRAPHEVO_RNG_HPP
#define GRAPHEVO_RNG_HPP

#include <cstdint>
#include <string>

namespace graphevo {

/// Deterministic PRNG used everywhere randomness is needed (VM instructions,
/// mutations, dataset samplers, weight initialization).
///
/// The generator is splitmix64: a 64-bit counter advanced by the golden-ratio
/// increment and passed through a fixed avalanche mix. The whole state is one
/// word, so streams are cheap to store, serialize, and derive. Independent
/// streams are obtained by hashing (seed, a, b) tuples through the same mix,
/// which is how per-individual evaluation streams stay reproducible no matter
/// how work is scheduled across threads.
class Rng {
 public:
  Rng() : state_(0) {}
  explicit Rng(uint64_t seed) : state_(seed) {}

  /// Stream derivation: a pure function of (seed, a, b). Distinct tuples give
  /// decorrelated streams.
  static Rng derive(uint64_t seed, uint64_t a, uint64_t b = 0);

  uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double();

  /// Uniform integer in [0, bound). Requires bound > 0.
  int64_t next_below(int64_t bound);

  /// true with probability p.
  bool next_bool(double p);

  /// Gaussian via Box-Muller (two fresh uniforms per call; no cached spare,
  /// so the state stays a single word).
  double next_gaussian(double sigma);

  uint64_t state() const { return state_; }
  void set_state(uint64_t s) { state_ = s; }

  std::string state_hex() const;
  static Rng from_state_hex(const std::string& hex);

  bool operator==(const Rng& other) const = default;

 private:
  uint64_t state_;
};

/// splitmix64 avalanche mix, exposed for hashing small key tuples.
uint64_t mix64(uint64_t x);

}  // namespace graphevo

#endif
