#ifndef LATPATH_SET_SYSTEM_H_
#define LATPATH_SET_SYSTEM_H_

#include <span>
#include <string>
#include <vector>

namespace latpath {

// An indexed multiset of subsets of a ground set {0, ..., n-1}; a
// presentation of a transversal matroid. Elements carry display labels,
// defaulting to "1".."n". Duplicate sets are allowed; each set is stored
// sorted and without repeats.
class SetSystem {
 public:
  SetSystem() = default;

  // Throws DomainError if a member is outside the ground set or a set
  // repeats an element.
  SetSystem(int ground_size, std::vector<std::vector<int>> sets);
  SetSystem(std::vector<std::string> labels,
            std::vector<std::vector<int>> sets);

  int ground_size() const { return static_cast<int>(labels_.size()); }
  int num_sets() const { return static_cast<int>(sets_.size()); }
  const std::vector<int>& set(int j) const { return sets_[j]; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }

  // Indices of the sets containing x, increasing.
  const std::vector<int>& incidence(int x) const { return incidence_[x]; }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  void Validate();

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::vector<int>> incidence_;
};

// Size of a maximum matching between `elements` and the sets of `system`
// (augmenting paths). This is the rank of `elements` in the transversal
// matroid. Throws DomainError for an element outside the ground set.
int MatchingRank(const SetSystem& system, std::span<const int> elements);
int MatchingRank(const SetSystem& system);

// For each element of `elements`, the index of the set it is matched to in
// one maximum matching, or -1.
std::vector<int> MaximumMatching(const SetSystem& system,
                                 std::span<const int> elements);

struct SpecialElements {
  std::vector<int> loops;
  std::vector<int> isthmuses;
};

// Loops lie in no set; isthmuses are the elements whose removal drops the
// matching rank of the ground set.
SpecialElements FindSpecialElements(const SetSystem& system);

// Keeps only the sets met by one maximum matching of the ground set, in
// their original order. The result presents the same matroid and has
// exactly rank-many sets.
SetSystem ReduceToBasisSets(const SetSystem& system);

// Bondy's construction: replaces each A_j by A_j together with the
// isthmuses of the deletion of A_j. Requires exactly rank-many sets (see
// ReduceToBasisSets); otherwise throws MalformedPresentationError.
SetSystem MaximalPresentation(const SetSystem& system);

// Deletes `removed` from the ground set and from every set. Labels and the
// relative order of the remaining elements are kept.
SetSystem DeleteElements(const SetSystem& system, std::span<const int> removed);

// The subsystem on `elements` using the sets listed in `set_indices`,
// restricted to `elements` and renumbered in the given orders.
SetSystem Subsystem(const SetSystem& system, std::span<const int> elements,
                    std::span<const int> set_indices);

// Connected components of the bipartite incidence graph, as sorted element
// lists ordered by least element. Elements in no set are singletons. When
// the system has no isthmuses these are the components of the matroid.
std::vector<std::vector<int>> Components(const SetSystem& system);

}  // namespace latpath

#endif  // LATPATH_SET_SYSTEM_H_
