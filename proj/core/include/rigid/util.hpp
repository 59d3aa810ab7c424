#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rigid {

// Thrown on violated preconditions and malformed inputs.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

// Thread cap used by all parallel loops. Reads RIGIDSET_THREADS once.
unsigned thread_cap();

// Index-space parallel for. Deterministic results require that distinct
// indices write to disjoint locations.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// SplitMix64, used to derive per-trial RNG streams from (seed, counter).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace rigid
