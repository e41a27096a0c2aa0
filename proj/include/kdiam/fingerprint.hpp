#ifndef KDIAM_FINGERPRINT_HPP
#define KDIAM_FINGERPRINT_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace kdiam {

/// 128-bit XOR-combinable set fingerprint; the empty set hashes to zero.
struct Fingerprint {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  Fingerprint& operator^=(const Fingerprint& o) {
    lo ^= o.lo;
    hi ^= o.hi;
    return *this;
  }
  friend Fingerprint operator^(Fingerprint a, const Fingerprint& b) { return a ^= b; }
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  bool is_zero() const { return lo == 0 && hi == 0; }
};

/// One independent random fingerprint per element id.
inline std::vector<Fingerprint> random_fingerprints(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Fingerprint> out(count);
  for (auto& f : out) {
    f.lo = rng();
    f.hi = rng();
  }
  return out;
}

}  // namespace kdiam

#endif  // KDIAM_FINGERPRINT_HPP
