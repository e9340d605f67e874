#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>

namespace framecert {

// ============================================================================
// Lazy cache cell
// ============================================================================

/// Thread-safe single-fill cache. Copying or moving an owner drops the cache;
/// the value is recomputed on demand. Once filled the value is never replaced,
/// so returned references stay valid for the owner's lifetime.
template <typename T>
class Lazy {
 public:
  Lazy() = default;
  Lazy(const Lazy&) {}
  Lazy(Lazy&&) noexcept {}
  Lazy& operator=(const Lazy&) { return *this; }
  Lazy& operator=(Lazy&&) noexcept { return *this; }

  template <typename F>
  const T& get(F&& make) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!value_) value_.emplace(make());
    return *value_;
  }

 private:
  mutable std::mutex mutex_;
  mutable std::optional<T> value_;
};

// ============================================================================
// Deterministic randomness
// ============================================================================

/// splitmix64 step; used to derive independent per-task seeds from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for subtask `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

// ============================================================================
// Content digest
// ============================================================================

/// FNV-1a 64-bit digest of a byte string; stable across platforms.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Digest rendered as "fnv1a64:<16 hex digits>".
std::string digest_string(const std::string& bytes);

// ============================================================================
// Index-space parallelism
// ============================================================================

/// Runs fn(0..count-1), splitting indices over `threads` workers. Results must
/// be written to per-index slots by the caller; the schedule never affects
/// outputs, so any thread count yields identical results.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace framecert
