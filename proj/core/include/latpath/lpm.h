#ifndef LATPATH_LPM_H_
#define LATPATH_LPM_H_

#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latpath/lattice_path.h"
#include "latpath/rank_table.h"
#include "latpath/set_system.h"

namespace latpath {

using BigInt = boost::multiprecision::cpp_int;

// Increasing 1-based element numbers of the ground set [m+r].
using ElementSet = std::vector<int>;

// The closed interval [lo, hi]; empty when lo > hi.
struct Interval {
  int lo = 1;
  int hi = 0;

  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool Contains(int x) const { return lo <= x && x <= hi; }
  ElementSet Elements() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

using IntervalPresentation = std::vector<Interval>;

// N_i = [l_i, g_i], with l_i the position of the i-th N of the upper path
// and g_i that of the lower path.
IntervalPresentation StandardPresentation(const BoundingPair& pair);

// The set system on `ground_size` elements (0-based) with one set per
// interval.
SetSystem ToSetSystem(const IntervalPresentation& intervals, int ground_size);
SetSystem ToSetSystem(const BoundingPair& pair);

// Indices i (1-based) with x in N_i, as an interval of indices.
Interval Incidence(const IntervalPresentation& intervals, int x);

bool IsLoop(const BoundingPair& pair, int x);
bool IsIsthmus(const BoundingPair& pair, int x);

// Lattice paths weakly between the bounding paths.
BigInt CountBases(const BoundingPair& pair);

// Throws DomainError for elements outside [m+r].
bool IsBasis(const BoundingPair& pair, const ElementSet& b);

enum class MinorKind { kDelete, kContract };

// Single-element deletion or contraction by path surgery. Throws
// DomainError for x outside [m+r].
BoundingPair PathMinor(const BoundingPair& pair, int x, MinorKind kind);

BoundingPair Dual(const BoundingPair& pair);

// Concatenation of the lower paths and of the upper paths.
BoundingPair DirectSum(std::span<const BoundingPair> pairs);

// A connected piece of a pair; its elements are offset+1 .. offset+size.
struct PairComponent {
  BoundingPair pair;
  int offset = 0;

  friend bool operator==(const PairComponent&, const PairComponent&) = default;
};

// Splits both paths at every shared lattice point. The empty pair has no
// components.
std::vector<PairComponent> LpmComponents(const BoundingPair& pair);
bool IsConnected(const BoundingPair& pair);

// A spanning circuit, optionally through x. Throws DomainError for
// disconnected input or fewer than two elements, and NoSpanningCircuitError
// when x lies in exactly one N_i with 1 < i < r.
ElementSet SpanningCircuit(const BoundingPair& pair,
                           std::optional<int> through = std::nullopt);

bool IsCircuit(const BoundingPair& pair, const ElementSet& c);

// Circuits in size-then-lexicographic order, produced one size at a time.
class CircuitStream {
 public:
  explicit CircuitStream(const BoundingPair& pair);

  std::optional<ElementSet> Next();

 private:
  void FillNextSize();

  BoundingPair pair_;
  IntervalPresentation intervals_;
  int next_size_ = 1;
  std::vector<ElementSet> buffer_;
  size_t cursor_ = 0;
};

std::vector<ElementSet> Circuits(const BoundingPair& pair);

// An initial or final segment flat.
struct SegmentFlat {
  Interval segment;
  int rank = 0;
  int nullity = 0;

  friend bool operator==(const SegmentFlat&, const SegmentFlat&) = default;
};

// Both chains listed from the smallest flat to the largest: initial
// segments [1, i] from the EN corners of the upper path, final segments
// [j, m+r] from the NE corners (at j-1) of the lower path.
struct FundamentalFlats {
  std::vector<SegmentFlat> initial_chain;
  std::vector<SegmentFlat> final_chain;

  // Both chains, sorted by size then lexicographically.
  std::vector<SegmentFlat> All() const;
};

// Throws DomainError on disconnected input.
FundamentalFlats ComputeFundamentalFlats(const BoundingPair& pair);

struct IntervalFlat {
  Interval flat;
  int rank = 0;

  friend bool operator==(const IntervalFlat&, const IntervalFlat&) = default;
};

// Proper nontrivial connected flats, sorted by size then lexicographically.
// Throws DomainError on disconnected input.
std::vector<IntervalFlat> ConnectedFlats(const BoundingPair& pair);

struct Separation {
  // A fundamental flat when the matroid is connected and not uniform.
  ElementSet side;
  ElementSet complement;

  friend bool operator==(const Separation&, const Separation&) = default;
};

struct ConnectivityResult {
  int k = kInfiniteConnectivity;
  std::optional<Separation> witness;
};

// Tutte connectivity of U(r, n).
int UniformConnectivity(int r, int n);

// Connectivity from the corners of the paths. Disconnected input gives k = 1
// with the first component split off as the witness.
ConnectivityResult Connectivity(const BoundingPair& pair);

enum class IsthmusPolicy { kThrow, kStrip };

// Standard intervals widened by the isthmuses of each deletion. With
// kStrip, isthmuses are deleted first and the result lives on the smaller
// ground set; with kThrow they raise DomainError.
IntervalPresentation LpmMaximalPresentation(
    const BoundingPair& pair, IsthmusPolicy policy = IsthmusPolicy::kThrow);

// The pair presenting the restriction to the segment [a, b] on elements
// renumbered 1 .. b-a+1. When the designated start point lies to the right
// of the end point the restriction is free and (N^s, N^s) is returned.
// Throws DomainError unless 1 <= a <= b+1 and b <= m+r.
BoundingPair RestrictInterval(const BoundingPair& pair, int a, int b);

// The 180 degree rotation (Q reversed, P reversed); reverses the element
// order.
BoundingPair Rotate(const BoundingPair& pair);

// The smaller of the pair and its rotation, comparing lower paths first.
BoundingPair CanonicalForm(const BoundingPair& pair);

// Permutations of the ground set mapping the fundamental flats onto
// themselves rank-preservingly. Throws DomainError on disconnected input.
BigInt AutomorphismCount(const BoundingPair& pair);

// Throws ResourceError above the brute-force cap.
RankTable ToRankTable(const BoundingPair& pair);

}  // namespace latpath

#endif  // LATPATH_LPM_H_
