#include "latpath/set_system.h"

#include <algorithm>
#include <numeric>

#include "latpath/errors.h"

namespace latpath {
namespace {

std::vector<std::string> DefaultLabels(int n) {
  if (n < 0) throw DomainError("negative ground set size");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

// Kuhn's augmenting-path matching restricted to `active` elements.
class Matcher {
 public:
  Matcher(const SetSystem& system, std::span<const int> elements)
      : system_(system),
        set_owner_(system.num_sets(), -1),
        element_set_(system.ground_size(), -1),
        visited_(system.num_sets(), 0) {
    for (int x : elements) {
      if (x < 0 || x >= system.ground_size()) {
        throw DomainError("element " + std::to_string(x + 1) +
                          " is not in the ground set");
      }
    }
    std::vector<char> seen(system.ground_size(), 0);
    for (int x : elements) {
      if (seen[x]) continue;
      seen[x] = 1;
      ++stamp_;
      if (Augment(x)) ++size_;
    }
  }

  int size() const { return size_; }
  const std::vector<int>& element_set() const { return element_set_; }

 private:
  bool Augment(int x) {
    for (int j : system_.incidence(x)) {
      if (visited_[j] == stamp_) continue;
      visited_[j] = stamp_;
      if (set_owner_[j] < 0 || Augment(set_owner_[j])) {
        set_owner_[j] = x;
        element_set_[x] = j;
        return true;
      }
    }
    return false;
  }

  const SetSystem& system_;
  std::vector<int> set_owner_;
  std::vector<int> element_set_;
  std::vector<int> visited_;
  int stamp_ = 0;
  int size_ = 0;
};

std::vector<int> AllElements(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::vector<int> AllExcept(int n, const std::vector<char>& excluded) {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (!excluded[x]) out.push_back(x);
  }
  return out;
}

}  // namespace

SetSystem::SetSystem(int ground_size, std::vector<std::vector<int>> sets)
    : labels_(DefaultLabels(ground_size)), sets_(std::move(sets)) {
  Validate();
}

SetSystem::SetSystem(std::vector<std::string> labels,
                     std::vector<std::vector<int>> sets)
    : labels_(std::move(labels)), sets_(std::move(sets)) {
  Validate();
}

void SetSystem::Validate() {
  const int n = ground_size();
  incidence_.assign(n, {});
  for (int j = 0; j < num_sets(); ++j) {
    auto& s = sets_[j];
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= n) {
        throw DomainError("set " + std::to_string(j + 1) +
                          " has a member outside the ground set");
      }
      if (i > 0 && s[i] == s[i - 1]) {
        throw DomainError("set " + std::to_string(j + 1) +
                          " repeats element " + labels_[s[i]]);
      }
      incidence_[s[i]].push_back(j);
    }
  }
}

int MatchingRank(const SetSystem& system, std::span<const int> elements) {
  return Matcher(system, elements).size();
}

int MatchingRank(const SetSystem& system) {
  const auto all = AllElements(system.ground_size());
  return MatchingRank(system, all);
}

std::vector<int> MaximumMatching(const SetSystem& system,
                                 std::span<const int> elements) {
  Matcher matcher(system, elements);
  std::vector<int> out;
  out.reserve(elements.size());
  for (int x : elements) out.push_back(matcher.element_set()[x]);
  return out;
}

SpecialElements FindSpecialElements(const SetSystem& system) {
  const int n = system.ground_size();
  SpecialElements out;
  const int full = MatchingRank(system);
  std::vector<char> excluded(n, 0);
  for (int x = 0; x < n; ++x) {
    if (system.incidence(x).empty()) {
      out.loops.push_back(x);
      continue;
    }
    excluded[x] = 1;
    if (MatchingRank(system, AllExcept(n, excluded)) == full - 1) {
      out.isthmuses.push_back(x);
    }
    excluded[x] = 0;
  }
  return out;
}

SetSystem ReduceToBasisSets(const SetSystem& system) {
  const auto all = AllElements(system.ground_size());
  const auto matched = MaximumMatching(system, all);
  std::vector<char> used(system.num_sets(), 0);
  for (int j : matched) {
    if (j >= 0) used[j] = 1;
  }
  std::vector<std::vector<int>> sets;
  for (int j = 0; j < system.num_sets(); ++j) {
    if (used[j]) sets.push_back(system.set(j));
  }
  return SetSystem(system.labels(), std::move(sets));
}

SetSystem MaximalPresentation(const SetSystem& system) {
  const int n = system.ground_size();
  const int rank = MatchingRank(system);
  if (rank != system.num_sets()) {
    throw MalformedPresentationError(
        "presentation has " + std::to_string(system.num_sets()) +
        " sets but rank " + std::to_string(rank) +
        "; reduce to rank-many sets first");
  }
  std::vector<std::vector<int>> sets = system.sets();
  for (int j = 0; j < system.num_sets(); ++j) {
    std::vector<char> excluded(n, 0);
    for (int x : system.set(j)) excluded[x] = 1;
    const auto rest = AllExcept(n, excluded);
    const int rest_rank = MatchingRank(system, rest);
    for (int y : rest) {
      excluded[y] = 1;
      if (MatchingRank(system, AllExcept(n, excluded)) == rest_rank - 1) {
        sets[j].push_back(y);
      }
      excluded[y] = 0;
    }
  }
  return SetSystem(system.labels(), std::move(sets));
}

SetSystem DeleteElements(const SetSystem& system,
                         std::span<const int> removed) {
  const int n = system.ground_size();
  std::vector<char> gone(n, 0);
  for (int x : removed) {
    if (x < 0 || x >= n) throw DomainError("element not in the ground set");
    gone[x] = 1;
  }
  std::vector<int> kept;
  for (int x = 0; x < n; ++x) {
    if (!gone[x]) kept.push_back(x);
  }
  std::vector<int> set_indices(system.num_sets());
  std::iota(set_indices.begin(), set_indices.end(), 0);
  return Subsystem(system, kept, set_indices);
}

SetSystem Subsystem(const SetSystem& system, std::span<const int> elements,
                    std::span<const int> set_indices) {
  std::vector<int> new_index(system.ground_size(), -1);
  std::vector<std::string> labels;
  for (int x : elements) {
    if (x < 0 || x >= system.ground_size()) {
      throw DomainError("element not in the ground set");
    }
    new_index[x] = static_cast<int>(labels.size());
    labels.push_back(system.label(x));
  }
  std::vector<std::vector<int>> sets;
  for (int j : set_indices) {
    std::vector<int> s;
    for (int x : system.set(j)) {
      if (new_index[x] >= 0) s.push_back(new_index[x]);
    }
    sets.push_back(std::move(s));
  }
  return SetSystem(std::move(labels), std::move(sets));
}

std::vector<std::vector<int>> Components(const SetSystem& system) {
  const int n = system.ground_size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : system.sets()) {
    for (size_t i = 1; i < s.size(); ++i) {
      const int a = find(s[0]);
      const int b = find(s[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> groups(n);
  for (int x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace latpath
