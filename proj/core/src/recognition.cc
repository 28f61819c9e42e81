#include "latpath/recognition.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include <boost/dynamic_bitset.hpp>

#include "latpath/errors.h"

namespace latpath {
namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> ImageBits(std::span<const IncidenceClass> classes) {
  int width = 0;
  for (const auto& c : classes) {
    if (!c.image.empty()) width = std::max(width, c.image.back() + 1);
  }
  std::vector<Bits> out;
  out.reserve(classes.size());
  for (const auto& c : classes) {
    Bits b(width);
    for (int j : c.image) b.set(j);
    out.push_back(std::move(b));
  }
  return out;
}

// (P)(a) and (P)(b) for the triple X_{i-1}, X_i, X_j.
bool TripleOk(const Bits& prev, const Bits& cur, const Bits& later) {
  const Bits prev_later = prev & later;
  if (!prev_later.is_subset_of(prev & cur)) return false;
  if (prev_later.any()) {
    const Bits grown = cur - prev;
    if (!grown.is_subset_of(later - prev)) return false;
  }
  return true;
}

// Checks every condition whose largest index is the last placed position.
bool LastPlacementOk(const std::vector<Bits>& images,
                     const std::vector<int>& prefix) {
  const int j = static_cast<int>(prefix.size()) - 1;
  const Bits& later = images[prefix[j]];
  for (int i = 1; i < j; ++i) {
    if (!TripleOk(images[prefix[i - 1]], images[prefix[i]], later)) {
      return false;
    }
  }
  return true;
}

// Every unplaced class lands after the last two placed ones, so each must
// already be compatible with that pair.
bool LaterClassesOk(const std::vector<Bits>& images,
                    const std::vector<int>& prefix,
                    const std::vector<char>& used) {
  const int j = static_cast<int>(prefix.size()) - 1;
  if (j < 1) return true;
  const Bits& prev = images[prefix[j - 1]];
  const Bits& cur = images[prefix[j]];
  for (size_t u = 0; u < images.size(); ++u) {
    if (!used[u] && !TripleOk(prev, cur, images[u])) return false;
  }
  return true;
}

std::string Labels(const SetSystem& system, std::span<const int> elements) {
  std::string out = "{";
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ",";
    out += system.label(elements[i]);
  }
  return out + "}";
}

std::string IntervalText(const Interval& t) {
  return "[" + std::to_string(t.lo) + "," + std::to_string(t.hi) + "]";
}

}  // namespace

std::vector<IncidenceClass> IncidenceClasses(const SetSystem& maximal) {
  std::map<std::vector<int>, std::vector<int>> by_image;
  for (int x = 0; x < maximal.ground_size(); ++x) {
    if (maximal.incidence(x).empty()) continue;
    by_image[maximal.incidence(x)].push_back(x);
  }
  std::vector<IncidenceClass> out;
  out.reserve(by_image.size());
  for (auto& [image, members] : by_image) {
    out.push_back({std::move(members), image});
  }
  std::sort(out.begin(), out.end(),
            [](const IncidenceClass& a, const IncidenceClass& b) {
              return a.members.front() < b.members.front();
            });
  return out;
}

bool SatisfiesPropertyP(std::span<const IncidenceClass> classes,
                        std::span<const int> ordering) {
  const auto images = ImageBits(classes);
  const int k = static_cast<int>(ordering.size());
  for (int j = 2; j < k; ++j) {
    for (int i = 1; i < j; ++i) {
      if (!TripleOk(images[ordering[i - 1]], images[ordering[i]],
                    images[ordering[j]])) {
        return false;
      }
    }
  }
  return true;
}

void ForEachClassOrdering(
    std::span<const IncidenceClass> classes,
    const std::function<bool(const ClassOrdering&)>& visit) {
  const int k = static_cast<int>(classes.size());
  if (k == 0) return;
  const auto images = ImageBits(classes);
  std::vector<int> prefix;
  std::vector<char> used(k, 0);
  bool stop = false;
  std::function<void()> extend = [&] {
    if (static_cast<int>(prefix.size()) == k) {
      stop = !visit(prefix);
      return;
    }
    for (int c = 0; c < k && !stop; ++c) {
      if (used[c]) continue;
      prefix.push_back(c);
      used[c] = 1;
      if (LastPlacementOk(images, prefix) && LaterClassesOk(images, prefix, used)) {
        extend();
      }
      used[c] = 0;
      prefix.pop_back();
    }
  };
  extend();
}

std::vector<ClassOrdering> OrderClasses(
    std::span<const IncidenceClass> classes) {
  std::vector<ClassOrdering> out;
  ForEachClassOrdering(classes, [&](const ClassOrdering& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

std::vector<ClassOrdering> OrderClassesExhaustive(
    std::span<const IncidenceClass> classes) {
  const int k = static_cast<int>(classes.size());
  if (k > 10) {
    throw ResourceError("exhaustive class ordering limited to 10 classes, got " +
                        std::to_string(k));
  }
  std::vector<ClassOrdering> out;
  if (k == 0) return out;
  ClassOrdering perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (SatisfiesPropertyP(classes, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// `t` sorted; the standard presentation left after removing shared ends.
BoundingPair StripSharedEnds(const IntervalPresentation& t, int ground_size) {
  const int r = static_cast<int>(t.size());
  std::vector<Step> upper(ground_size, Step::kE);
  std::vector<Step> lower(ground_size, Step::kE);
  for (int h = 0; h < r; ++h) {
    int d = 0;
    int d_prime = 0;
    for (int i = 0; i < h; ++i) d += (t[i].lo == t[h].lo);
    for (int j = h + 1; j < r; ++j) d_prime += (t[j].hi == t[h].hi);
    const int lo = t[h].lo + d;
    const int hi = t[h].hi - d_prime;
    if (lo < 1 || hi > ground_size) {
      throw DomainError("interval outside the ground set");
    }
    upper[lo - 1] = Step::kN;
    lower[hi - 1] = Step::kN;
  }
  return BoundingPair(LatticePath(std::move(lower)),
                      LatticePath(std::move(upper)));
}

}  // namespace

CharintResult CheckCharint(const IntervalPresentation& intervals) {
  CharintResult result;
  result.sorted = intervals;
  std::stable_sort(result.sorted.begin(), result.sorted.end());
  const auto& t = result.sorted;
  const int r = static_cast<int>(t.size());
  auto fail = [&](int condition, int first, int second, std::string detail) {
    result.ok = false;
    result.condition = condition;
    result.first = first;
    result.second = second;
    result.detail = std::move(detail);
    return result;
  };

  for (int i = 0; i < r; ++i) {
    if (t[i].size() == 0) return fail(1, i, -1, "empty interval");
  }
  // With sorted left ends, the order fails to be weak exactly when one
  // interval sits strictly inside another at both ends.
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      if (t[i].lo < t[j].lo && t[j].hi < t[i].hi) {
        return fail(1, i, j,
                    IntervalText(t[j]) + " lies strictly inside " +
                        IntervalText(t[i]));
      }
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const int common =
          std::max(0, std::min(t[i].hi, t[j].hi) - std::max(t[i].lo, t[j].lo) +
                          1);
      if (t[i].size() - common == 1) {
        return fail(2, std::min(i, j), std::max(i, j),
                    IntervalText(t[i]) + " minus " + IntervalText(t[j]) +
                        " has one element");
      }
    }
  }
  for (int h = 0; h < r; ++h) {
    int d = 0;
    int d_prime = 0;
    for (int i = 0; i < h; ++i) d += (t[i].lo == t[h].lo);
    for (int j = h + 1; j < r; ++j) d_prime += (t[j].hi == t[h].hi);
    if (d + d_prime + 2 > t[h].size()) {
      return fail(3, h, -1,
                  IntervalText(t[h]) + " has d=" + std::to_string(d) +
                      " and d'=" + std::to_string(d_prime));
    }
  }
  // (i)-(iii) alone admit [1,2],[1,4],[3,4]: stripped it is the standard
  // presentation of U_{3,4}, whose maximal presentation is three copies of
  // [1,4]. So the stripped pair must give the intervals back.
  int n = 0;
  for (const Interval& i : t) n = std::max(n, i.hi);
  std::optional<BoundingPair> stripped;
  try {
    stripped = StripSharedEnds(t, n);
  } catch (const DomainError&) {
  }
  IntervalPresentation back;
  if (stripped) {
    back = LpmMaximalPresentation(*stripped, IsthmusPolicy::kStrip);
    std::sort(back.begin(), back.end());
  }
  if (back != t) {
    return fail(4, -1, -1,
                "the stripped standard presentation has a different "
                "maximal presentation");
  }
  result.ok = true;
  return result;
}

BoundingPair RecoverPaths(const IntervalPresentation& maximal,
                          int ground_size) {
  const CharintResult check = CheckCharint(maximal);
  if (!check.ok) {
    throw DomainError("not the maximal presentation of a lattice path "
                      "matroid: " +
                      check.detail);
  }
  return StripSharedEnds(check.sorted, ground_size);
}

OrderedSets IntervalsUnderOrder(const SetSystem& system,
                                std::span<const int> order) {
  std::vector<int> position(system.ground_size(), 0);
  for (size_t p = 0; p < order.size(); ++p) {
    position[order[p]] = static_cast<int>(p) + 1;
  }
  OrderedSets out;
  for (int j = 0; j < system.num_sets(); ++j) {
    const auto& s = system.set(j);
    int lo = static_cast<int>(order.size()) + 1;
    int hi = 0;
    for (int x : s) {
      lo = std::min(lo, position[x]);
      hi = std::max(hi, position[x]);
    }
    if (s.empty() || hi - lo + 1 != static_cast<int>(s.size())) {
      out.bad_set = j;
      out.intervals.clear();
      return out;
    }
    out.intervals.push_back({lo, hi});
  }
  return out;
}

BoundingPair RecognitionOutcome::Pair() const {
  std::vector<BoundingPair> pairs;
  for (const auto& c : components) pairs.push_back(c.pair);
  return DirectSum(pairs);
}

std::vector<int> RecognitionOutcome::Ordering() const {
  std::vector<int> out;
  for (const auto& c : components) {
    out.insert(out.end(), c.ordering.begin(), c.ordering.end());
  }
  return out;
}

RecognitionOutcome Recognize(const SetSystem& system) {
  RecognitionOutcome outcome;
  const int n = system.ground_size();

  // (1) isthmuses.
  const SpecialElements special = FindSpecialElements(system);
  std::vector<char> is_isthmus(n, 0);
  for (int x : special.isthmuses) {
    is_isthmus[x] = 1;
    outcome.components.push_back(
        {{x}, BoundingPair::Parse("N", "N")});
  }
  std::vector<int> kept;  // reduced index -> input index
  for (int x = 0; x < n; ++x) {
    if (!is_isthmus[x]) kept.push_back(x);
  }
  const SetSystem reduced =
      ReduceToBasisSets(DeleteElements(system, special.isthmuses));

  // (2) components.
  const auto components = Components(reduced);
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    const auto& elements = components[c];
    if (reduced.incidence(elements.front()).empty()) {
      outcome.components.push_back(
          {{kept[elements.front()]}, BoundingPair::Parse("E", "E")});
      continue;
    }
    std::vector<int> input_elements;
    for (int x : elements) input_elements.push_back(kept[x]);
    auto reject = [&](int step, std::string reason) {
      outcome.accepted = false;
      outcome.components.clear();
      outcome.rejection =
          Rejection{c, step, std::move(reason), input_elements};
      return outcome;
    };

    // (3) maximal presentation.
    std::vector<int> set_indices;
    for (int j = 0; j < reduced.num_sets(); ++j) {
      if (std::binary_search(elements.begin(), elements.end(),
                             reduced.set(j).front())) {
        set_indices.push_back(j);
      }
    }
    const SetSystem maximal =
        MaximalPresentation(Subsystem(reduced, elements, set_indices));

    // (4) incidence classes.
    const auto classes = IncidenceClasses(maximal);

    // (5) and (6): try each ordering satisfying (P) until one passes.
    bool any_ordering = false;
    std::optional<std::pair<int, std::string>> first_failure;
    std::optional<RecognizedComponent> found;
    ForEachClassOrdering(classes, [&](const ClassOrdering& ordering) {
      any_ordering = true;
      std::vector<int> order;
      for (int ci : ordering) {
        order.insert(order.end(), classes[ci].members.begin(),
                     classes[ci].members.end());
      }
      const OrderedSets placed = IntervalsUnderOrder(maximal, order);
      if (placed.bad_set >= 0) {
        if (!first_failure) {
          std::vector<int> members;
          for (int x : maximal.set(placed.bad_set)) {
            members.push_back(input_elements[x]);
          }
          first_failure = {6, "set " + Labels(system, members) +
                                  " is not an interval under the class order"};
        }
        return true;
      }
      const CharintResult check = CheckCharint(placed.intervals);
      if (!check.ok) {
        if (!first_failure) {
          first_failure = {6, "maximal presentation fails condition (" +
                                  std::string(check.condition == 1   ? "i"
                                              : check.condition == 2 ? "ii"
                                              : check.condition == 3 ? "iii"
                                                                     : "iv") +
                                  "): " + check.detail};
        }
        return true;
      }
      BoundingPair pair =
          RecoverPaths(placed.intervals, static_cast<int>(order.size()));
      const BoundingPair rotated = Rotate(pair);
      if (rotated < pair) {
        pair = rotated;
        std::reverse(order.begin(), order.end());
      }
      RecognizedComponent rc;
      rc.pair = std::move(pair);
      for (int x : order) rc.ordering.push_back(input_elements[x]);
      found = std::move(rc);
      return false;
    });
    if (!any_ordering) {
      return reject(5, "no ordering of the " + std::to_string(classes.size()) +
                           " incidence classes satisfies property (P)");
    }
    if (!found) return reject(first_failure->first, first_failure->second);
    outcome.components.push_back(std::move(*found));
  }

  std::sort(outcome.components.begin(), outcome.components.end(),
            [](const RecognizedComponent& a, const RecognizedComponent& b) {
              if (a.pair != b.pair) return a.pair < b.pair;
              return a.ordering.front() < b.ordering.front();
            });
  outcome.accepted = true;
  return outcome;
}

}  // namespace latpath
