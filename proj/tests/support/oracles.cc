#include "support/oracles.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "latpath/brute.h"
#include "latpath/lpm.h"
#include "support/generators.h"

namespace latpath::testing {
namespace {

// Greedy basis scanning positions in order (or reversed).
std::vector<char> GreedyBasis(const RankTable& t, bool from_back) {
  const int n = t.size();
  std::vector<char> in(n, 0);
  Mask b = 0;
  for (int k = 0; k < n; ++k) {
    const int p = from_back ? n - 1 - k : k;
    if (t.IsIndependent(b | Bit(p))) {
      b |= Bit(p);
      in[p] = 1;
    }
  }
  return in;
}

LatticePath FromIndicator(const std::vector<char>& north) {
  std::vector<Step> steps;
  for (char c : north) steps.push_back(c ? Step::kN : Step::kE);
  return LatticePath(std::move(steps));
}

}  // namespace

SetSystem Permuted(const SetSystem& system, std::span<const int> perm) {
  std::vector<std::string> labels(system.ground_size());
  for (int x = 0; x < system.ground_size(); ++x) {
    labels[perm[x]] = system.label(x);
  }
  std::vector<std::vector<int>> sets;
  for (const auto& s : system.sets()) {
    std::vector<int> image;
    for (int x : s) image.push_back(perm[x]);
    std::sort(image.begin(), image.end());
    sets.push_back(std::move(image));
  }
  return SetSystem(std::move(labels), std::move(sets));
}

bool LpmUnderSomeOrdering(const RankTable& table) {
  const int n = table.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::map<BoundingPair, RankTable> cache;
  do {
    const RankTable t = Relabel(table, order);
    const BoundingPair pair(FromIndicator(GreedyBasis(t, true)),
                            FromIndicator(GreedyBasis(t, false)));
    auto it = cache.find(pair);
    if (it == cache.end()) it = cache.emplace(pair, ToRankTable(pair)).first;
    if (it->second == t) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

LpmCatalog::LpmCatalog(int max_size) {
  for (int n = 0; n <= max_size; ++n) {
    std::set<BoundingPair> seen;
    for (const BoundingPair& p : AllPairs(n)) {
      if (!seen.insert(CanonicalForm(p)).second) continue;
      RankTable t = ToRankTable(p);
      const std::uint64_t bases = BruteBasisCount(t);
      entries_[{n, p.rank()}].push_back({p, std::move(t), bases});
    }
  }
}

bool LpmCatalog::ContainsIsomorphic(const RankTable& table) const {
  const auto it = entries_.find({table.size(), table.rank()});
  if (it == entries_.end()) return false;
  const std::uint64_t bases = BruteBasisCount(table);
  for (const Entry& e : it->second) {
    if (e.bases == bases && IsIsomorphic(e.table, table)) return true;
  }
  return false;
}

}  // namespace latpath::testing
