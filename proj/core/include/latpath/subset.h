#ifndef LATPATH_SUBSET_H_
#define LATPATH_SUBSET_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace latpath {

// Subsets of a small ground set {0, ..., n-1}, one bit per element.
using Mask = std::uint32_t;

constexpr int kMaxMaskBits = 32;

constexpr Mask Bit(int i) { return Mask{1} << i; }

constexpr Mask FullMask(int n) {
  return n >= kMaxMaskBits ? ~Mask{0} : Bit(n) - 1;
}

constexpr int PopCount(Mask m) { return std::popcount(m); }

constexpr bool Contains(Mask m, int i) { return (m >> i) & 1U; }

constexpr bool IsSubset(Mask a, Mask b) { return (a & ~b) == 0; }

// Lowest element of a nonempty mask.
constexpr int LowestElement(Mask m) { return std::countr_zero(m); }

// 0-based element indices in increasing order.
std::vector<int> MaskElements(Mask m);

Mask MaskFromElements(std::span<const int> elements);

// Circuit/flat listing order: by cardinality, then lexicographically on the
// increasing element sequences.
bool SizeThenLexLess(Mask a, Mask b);

// "{1,2,3}" using 1-based element numbers.
std::string FormatMask(Mask m);

}  // namespace latpath

#endif  // LATPATH_SUBSET_H_
