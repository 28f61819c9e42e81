#include "latpath/subset.h"

#include <algorithm>

namespace latpath {

std::vector<int> MaskElements(Mask m) {
  std::vector<int> out;
  out.reserve(PopCount(m));
  while (m != 0) {
    out.push_back(LowestElement(m));
    m &= m - 1;
  }
  return out;
}

Mask MaskFromElements(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) m |= Bit(e);
  return m;
}

bool SizeThenLexLess(Mask a, Mask b) {
  const int pa = PopCount(a);
  const int pb = PopCount(b);
  if (pa != pb) return pa < pb;
  // Same size: the first differing element decides. The set holding the
  // smaller element of the symmetric difference comes first.
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return Contains(a, LowestElement(diff));
}

std::string FormatMask(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int e : MaskElements(m)) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace latpath
