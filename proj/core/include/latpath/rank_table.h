#ifndef LATPATH_RANK_TABLE_H_
#define LATPATH_RANK_TABLE_H_

#include <climits>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "latpath/set_system.h"
#include "latpath/subset.h"

namespace latpath {

constexpr int kDefaultBruteCap = 16;
constexpr int kHardBruteCap = 24;

// Tutte connectivity of a matroid with no separation at all.
constexpr int kInfiniteConnectivity = INT_MAX;

// Process-wide ground-set cap for every routine that touches all subsets.
int BruteCap();
// Throws DomainError unless 0 <= cap <= kHardBruteCap.
void SetBruteCap(int cap);
// Throws ResourceError when n exceeds the cap.
void CheckBruteCap(int n, const char* what);

// Explicit rank function of a matroid on {0, ..., n-1}: one entry per
// subset, indexed by mask. Labels are for display only and do not take part
// in comparisons.
class RankTable {
 public:
  RankTable() : ranks_(1, 0) {}
  // Throws ResourceError when labels exceed the cap and DomainError when
  // ranks has the wrong length. Matroid axioms are not checked here; see
  // IsMatroid.
  RankTable(std::vector<std::string> labels, std::vector<std::uint8_t> ranks);
  RankTable(int n, std::vector<std::uint8_t> ranks);

  // Tabulates `rank` on all subsets of an n-element ground set.
  static RankTable FromFunction(int n, const std::function<int(Mask)>& rank);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask ground() const { return FullMask(size()); }
  int rank() const { return ranks_.back(); }
  int Rank(Mask x) const { return ranks_[x]; }
  int Nullity(Mask x) const { return PopCount(x) - ranks_[x]; }
  bool IsIndependent(Mask x) const { return ranks_[x] == PopCount(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint8_t>& ranks() const { return ranks_; }

  friend bool operator==(const RankTable& a, const RankTable& b) {
    return a.ranks_ == b.ranks_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> ranks_;
};

// Checks normalization, unit increase and (local) submodularity.
bool IsMatroid(const RankTable& table);

// Rank of every subset under the matching rank of `system`, by Hall's
// condition over the subset lattice.
RankTable RankTableFromSystem(const SetSystem& system);

// Delete `deleted`, contract `contracted`; the remaining elements keep their
// relative order. Throws DomainError if the two sets meet or leave the
// ground set.
RankTable Minor(const RankTable& table, Mask deleted, Mask contracted);
RankTable Restrict(const RankTable& table, Mask kept);

RankTable Dual(const RankTable& table);

// Concatenates ground sets, `a` first. Labels are kept unless they clash,
// in which case the sum is labeled 1..n.
RankTable DirectSum(const RankTable& a, const RankTable& b);

RankTable Truncate(const RankTable& table, int rank);

// Adds a new last element in general position.
RankTable FreeExtension(const RankTable& table);

// Adds a new last element parallel to x.
RankTable ParallelExtension(const RankTable& table, int x);

// Element i of the result is element order[i] of `table`; `order` must be
// a permutation.
RankTable Relabel(const RankTable& table, std::span<const int> order);

// True iff H is a circuit-hyperplane: |H| = r, r(H) = r - 1 and H closed.
bool IsCircuitHyperplane(const RankTable& table, Mask h);

// Declares the circuit-hyperplane H a basis. Throws InvalidRelaxationError
// otherwise.
RankTable RelaxCircuitHyperplane(const RankTable& table, Mask h);

Mask Closure(const RankTable& table, Mask x);
bool IsFlat(const RankTable& table, Mask x);

// Number of bases, by scanning all subsets.
std::uint64_t BruteBasisCount(const RankTable& table);

}  // namespace latpath

#endif  // LATPATH_RANK_TABLE_H_
