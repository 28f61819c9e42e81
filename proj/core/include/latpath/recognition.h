#ifndef LATPATH_RECOGNITION_H_
#define LATPATH_RECOGNITION_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latpath/lattice_path.h"
#include "latpath/lpm.h"
#include "latpath/set_system.h"

namespace latpath {

// Elements (0-based) sharing one incidence image n(x) in a presentation.
struct IncidenceClass {
  std::vector<int> members;
  std::vector<int> image;  // set indices, increasing

  friend bool operator==(const IncidenceClass&, const IncidenceClass&) =
      default;
};

// Classes of the non-loop elements, ordered by least member.
std::vector<IncidenceClass> IncidenceClasses(const SetSystem& maximal);

// A permutation of class indices.
using ClassOrdering = std::vector<int>;

bool SatisfiesPropertyP(std::span<const IncidenceClass> classes,
                        std::span<const int> ordering);

// Calls `visit` on each ordering satisfying (P), found by backtracking over
// prefixes; stops early when `visit` returns false.
void ForEachClassOrdering(
    std::span<const IncidenceClass> classes,
    const std::function<bool(const ClassOrdering&)>& visit);

// All orderings satisfying (P), in lexicographic order.
std::vector<ClassOrdering> OrderClasses(std::span<const IncidenceClass> classes);

// Same result by testing every permutation. Throws ResourceError for more
// than 10 classes.
std::vector<ClassOrdering> OrderClassesExhaustive(
    std::span<const IncidenceClass> classes);

struct CharintResult {
  bool ok = false;
  // 0 when ok, otherwise the first violated condition (1 to 4).
  int condition = 0;
  // Positions in `sorted` (0-based) of the offending interval(s); the second
  // is -1 for condition 3, both are -1 for condition 4.
  int first = -1;
  int second = -1;
  std::string detail;
  // The input sorted by (lo, hi).
  IntervalPresentation sorted;
};

// Tests whether the intervals form the maximal presentation of an
// isthmus-free lattice path matroid on [ground_size]: the order by left and
// right ends is weak, no difference of two intervals has exactly one
// element, each interval exceeds its shared-end counts by two, and (4) the
// standard presentation left by stripping shared ends has these intervals as
// its maximal presentation. The first three alone are not sufficient.
CharintResult CheckCharint(const IntervalPresentation& intervals);

// Strips each interval of its shared left ends and shared right ends and
// reads the bounding paths off the resulting standard presentation.
// Requires CheckCharint to pass; throws DomainError otherwise.
BoundingPair RecoverPaths(const IntervalPresentation& maximal, int ground_size);

// Positions of the sets of `system` under the element order `order`
// (order[p] is the element at position p+1).
struct OrderedSets {
  IntervalPresentation intervals;  // valid when bad_set < 0
  int bad_set = -1;                // a set that is not an interval
};

OrderedSets IntervalsUnderOrder(const SetSystem& system,
                                std::span<const int> order);

struct RecognizedComponent {
  // Elements of the input system (0-based) in lattice path order.
  std::vector<int> ordering;
  BoundingPair pair;
};

struct Rejection {
  // Index among the components of the isthmus-free system, ordered by least
  // element.
  int component = 0;
  int step = 0;       // pipeline step, 1..6
  std::string reason;
  std::vector<int> elements;  // the rejected component
};

struct RecognitionOutcome {
  bool accepted = false;
  // Summands in canonical form, loops as (E, E) and isthmuses as (N, N),
  // sorted by pair.
  std::vector<RecognizedComponent> components;
  std::optional<Rejection> rejection;

  // Direct sum of the summands and the matching element order; only on
  // acceptance.
  BoundingPair Pair() const;
  std::vector<int> Ordering() const;
};

RecognitionOutcome Recognize(const SetSystem& system);

}  // namespace latpath

#endif  // LATPATH_RECOGNITION_H_
