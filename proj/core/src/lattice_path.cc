#include "latpath/lattice_path.h"

#include <algorithm>

#include "latpath/errors.h"

namespace latpath {

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  north_prefix_.reserve(steps_.size() + 1);
  for (Step s : steps_) {
    north_prefix_.push_back(north_prefix_.back() + (s == Step::kN ? 1 : 0));
  }
}

LatticePath LatticePath::Parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (c != 'E' && c != 'N') {
      const int position = static_cast<int>(i) + 1;
      throw ParseError("invalid step '" + std::string(1, c) +
                           "' at position " + std::to_string(position),
                       position);
    }
    steps.push_back(static_cast<Step>(c));
  }
  return LatticePath(std::move(steps));
}

LatticePath LatticePath::Repeat(Step s, int count) {
  return LatticePath(std::vector<Step>(std::max(count, 0), s));
}

bool LatticePath::HasNECornerAt(int h) const {
  return h >= 1 && h < size() && step(h) == Step::kN &&
         step(h + 1) == Step::kE;
}

bool LatticePath::HasENCornerAt(int h) const {
  return h >= 1 && h < size() && step(h) == Step::kE &&
         step(h + 1) == Step::kN;
}

int LatticePath::NthNorth(int i) const {
  if (i < 1 || i > north_count()) return 0;
  // north_prefix_ is nondecreasing; the first t with prefix i is the step.
  const auto it =
      std::lower_bound(north_prefix_.begin(), north_prefix_.end(), i);
  return static_cast<int>(it - north_prefix_.begin());
}

LatticePath LatticePath::Swapped() const {
  std::vector<Step> out(steps_);
  for (Step& s : out) s = (s == Step::kE) ? Step::kN : Step::kE;
  return LatticePath(std::move(out));
}

LatticePath LatticePath::Reversed() const {
  return LatticePath(std::vector<Step>(steps_.rbegin(), steps_.rend()));
}

LatticePath LatticePath::Concat(const LatticePath& other) const {
  std::vector<Step> out(steps_);
  out.insert(out.end(), other.steps_.begin(), other.steps_.end());
  return LatticePath(std::move(out));
}

LatticePath LatticePath::Slice(int first, int count) const {
  return LatticePath(std::vector<Step>(steps_.begin() + (first - 1),
                                       steps_.begin() + (first - 1 + count)));
}

LatticePath LatticePath::Without(int position) const {
  std::vector<Step> out(steps_);
  out.erase(out.begin() + (position - 1));
  return LatticePath(std::move(out));
}

std::string LatticePath::ToString() const {
  return std::string(reinterpret_cast<const char*>(steps_.data()),
                     steps_.size());
}

BoundingPair::BoundingPair(LatticePath lower, LatticePath upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw DomainError("bounding paths must have the same length");
  }
  if (lower_.north_count() != upper_.north_count()) {
    throw DomainError("bounding paths must end at the same point");
  }
  for (int t = 1; t <= lower_.size(); ++t) {
    if (lower_.NorthPrefix(t) > upper_.NorthPrefix(t)) {
      throw DomainError("lower path goes above the upper path after step " +
                        std::to_string(t));
    }
  }
}

BoundingPair BoundingPair::Parse(std::string_view lower,
                                 std::string_view upper) {
  return BoundingPair(LatticePath::Parse(lower), LatticePath::Parse(upper));
}

}  // namespace latpath
