#include "graphevo/rng.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace graphevo {

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

Rng Rng::derive(uint64_t seed, uint64_t a, uint64_t b) {
  uint64_t s = mix64(seed + 0x9E3779B97F4A7C15ULL);
  s = mix64(s ^ (a + 0xD1B54A32D192ED03ULL));
  s = mix64(s ^ (b + 0x8CB92BA72F3D8DD7ULL));
  return Rng(s);
}

uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int64_t Rng::next_below(int64_t bound) {
  return static_cast<int64_t>(next_u64() % static_cast<uint64_t>(bound));
}

bool Rng::next_bool(double p) { return next_double() < p; }

double Rng::next_gaussian(double sigma) {
  // Box-Muller; u1 is kept away from 0 so the log is finite.
  double u1 = next_double();
  double u2 = next_double();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return sigma * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::string Rng::state_hex() const {
  char buf[17] = {};
  auto res = std::to_chars(buf, buf + 16, state_, 16);
  return std::string(buf, res.ptr);
}

Rng Rng::from_state_hex(const std::string& hex) {
  uint64_t s = 0;
  auto res = std::from_chars(hex.data(), hex.data() + hex.size(), s, 16);
  if (res.ec != std::errc() || res.ptr != hex.data() + hex.size()) {
    throw std::invalid_argument("bad rng state: " + hex);
  }
  return Rng(s);
}

}  // namespace graphevo
