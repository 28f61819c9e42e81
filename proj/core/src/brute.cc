#include "latpath/brute.h"

#include <algorithm>
#include <numeric>

#include "latpath/errors.h"

namespace latpath {
namespace {

void SortSizeThenLex(std::vector<Mask>& sets) {
  std::sort(sets.begin(), sets.end(), SizeThenLexLess);
}

void SortSizeThenLex(std::vector<Flat>& flats) {
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    return SizeThenLexLess(a.flat, b.flat);
  });
}

bool IsCircuit(const RankTable& table, Mask x) {
  if (table.IsIndependent(x)) return false;
  for (Mask rest = x; rest != 0; rest &= rest - 1) {
    if (!table.IsIndependent(x & ~Bit(LowestElement(rest)))) return false;
  }
  return true;
}

// Isomorphism invariants: the global ones fixed by design plus a per-element
// signature that restricts candidate images.
struct Profile {
  int size = 0;
  int rank = 0;
  std::vector<int> circuits_by_size;
  std::vector<int> flats_by_rank;
  std::vector<std::vector<int>> element_signature;

  bool GloballyMatches(const Profile& o) const {
    return size == o.size && rank == o.rank &&
           circuits_by_size == o.circuits_by_size &&
           flats_by_rank == o.flats_by_rank;
  }
};

Profile MakeProfile(const RankTable& table) {
  Profile p;
  p.size = table.size();
  p.rank = table.rank();
  const int n = p.size;
  p.circuits_by_size.assign(n + 1, 0);
  p.flats_by_rank.assign(p.rank + 1, 0);
  // Signature layout: circuits through x by size, then flats through x by
  // rank.
  p.element_signature.assign(n, std::vector<int>(n + 1 + p.rank + 1, 0));
  for (Mask x = 0; x <= table.ground(); ++x) {
    if (x != 0 && IsCircuit(table, x)) {
      const int s = PopCount(x);
      ++p.circuits_by_size[s];
      for (int e : MaskElements(x)) ++p.element_signature[e][s];
    }
    if (IsFlat(table, x)) {
      const int r = table.Rank(x);
      ++p.flats_by_rank[r];
      for (int e : MaskElements(x)) ++p.element_signature[e][n + 1 + r];
    }
    if (x == table.ground()) break;
  }
  return p;
}

// Backtracking over bijections a -> b, extending one element of `a` at a
// time and checking every subset that contains the newly placed element.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const RankTable& a, const Profile& pa, const RankTable& b,
                    const Profile& pb, bool count_all)
      : a_(a),
        b_(b),
        pa_(pa),
        pb_(pb),
        count_all_(count_all),
        phi_(a.size(), -1),
        image_(std::size_t{1} << a.size(), 0) {}

  void Run() { Extend(0, 0); }

  std::uint64_t count() const { return count_; }
  const std::vector<int>& found() const { return found_; }

 private:
  bool Extend(int k, Mask used) {
    const int n = a_.size();
    if (k == n) {
      ++count_;
      if (found_.empty()) found_ = phi_;
      return !count_all_;
    }
    for (int y = 0; y < n; ++y) {
      if (Contains(used, y)) continue;
      if (pa_.element_signature[k] != pb_.element_signature[y]) continue;
      if (!Consistent(k, y)) continue;
      phi_[k] = y;
      if (Extend(k + 1, used | Bit(y))) return true;
    }
    phi_[k] = -1;
    return false;
  }

  bool Consistent(int k, int y) {
    const Mask prefix_size = Bit(k);
    for (Mask s = 0; s < prefix_size; ++s) {
      const Mask img = image_[s] | Bit(y);
      if (a_.Rank(s | Bit(k)) != b_.Rank(img)) return false;
    }
    for (Mask s = 0; s < prefix_size; ++s) {
      image_[s | Bit(k)] = image_[s] | Bit(y);
    }
    return true;
  }

  const RankTable& a_;
  const RankTable& b_;
  const Profile& pa_;
  const Profile& pb_;
  bool count_all_;
  std::vector<int> phi_;
  std::vector<Mask> image_;
  std::vector<int> found_;
  std::uint64_t count_ = 0;
};

std::optional<std::vector<int>> FindIsomorphismWith(const RankTable& a,
                                                    const Profile& pa,
                                                    const RankTable& b,
                                                    const Profile& pb) {
  if (!pa.GloballyMatches(pb)) return std::nullopt;
  IsomorphismSearch search(a, pa, b, pb, /*count_all=*/false);
  search.Run();
  if (search.count() == 0) return std::nullopt;
  return search.found();
}

// Calls visit(mask) for every subset of `pool` with exactly k elements.
template <class F>
void ForEachSubsetOfSize(Mask pool, int k, F&& visit) {
  const std::vector<int> items = MaskElements(pool);
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Bit(items[i]);
    if (visit(m)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Mask> BruteCircuits(const RankTable& table) {
  CheckBruteCap(table.size(), "circuit enumeration");
  std::vector<Mask> out;
  for (Mask x = 1; x <= table.ground() && table.size() > 0; ++x) {
    if (IsCircuit(table, x)) out.push_back(x);
    if (x == table.ground()) break;
  }
  SortSizeThenLex(out);
  return out;
}

std::vector<Mask> BruteFlats(const RankTable& table) {
  CheckBruteCap(table.size(), "flat enumeration");
  std::vector<Mask> out;
  for (Mask x = 0; x <= table.ground(); ++x) {
    if (IsFlat(table, x)) out.push_back(x);
    if (x == table.ground()) break;
  }
  SortSizeThenLex(out);
  return out;
}

std::vector<Mask> BruteSpanningCircuits(const RankTable& table) {
  std::vector<Mask> out;
  for (Mask c : BruteCircuits(table)) {
    if (table.Rank(c) == table.rank()) out.push_back(c);
  }
  return out;
}

bool IsConnectedSet(const RankTable& table, Mask x) {
  if (PopCount(x) <= 1) return true;
  const int low = LowestElement(x);
  const Mask rest = x & ~Bit(low);
  const int rx = table.Rank(x);
  // Y always contains the lowest element, so each bipartition is seen once.
  for (Mask t = rest;; t = (t - 1) & rest) {
    const Mask y = t | Bit(low);
    if (y != x && table.Rank(y) + table.Rank(x & ~y) == rx) return false;
    if (t == 0) break;
  }
  return true;
}

std::vector<Flat> BruteConnectedFlats(const RankTable& table) {
  std::vector<Flat> out;
  for (Mask f : BruteFlats(table)) {
    if (table.IsIndependent(f)) continue;
    if (IsConnectedSet(table, f)) out.push_back({f, table.Rank(f)});
  }
  SortSizeThenLex(out);
  return out;
}

std::vector<Flat> BruteFundamentalFlats(const RankTable& table) {
  if (!IsConnected(table)) {
    throw DomainError("fundamental flats need a connected matroid");
  }
  const std::vector<Mask> spanning = BruteSpanningCircuits(table);
  std::vector<Flat> out;
  for (const Flat& f : BruteConnectedFlats(table)) {
    if (PopCount(f.flat) <= 1 || f.rank >= table.rank()) continue;
    for (Mask c : spanning) {
      const Mask meet = f.flat & c;
      if (PopCount(meet) == f.rank && table.IsIndependent(meet)) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

std::vector<Mask> BruteComponents(const RankTable& table) {
  const int n = table.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask c : BruteCircuits(table)) {
    const int a = find(LowestElement(c));
    for (int e : MaskElements(c)) {
      const int b = find(e);
      if (a != b) parent[b] = a;
    }
  }
  std::vector<Mask> by_root(n, 0);
  for (int x = 0; x < n; ++x) by_root[find(x)] |= Bit(x);
  std::vector<Mask> out;
  for (Mask m : by_root) {
    if (m != 0) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return LowestElement(a) < LowestElement(b);
  });
  return out;
}

bool IsConnected(const RankTable& table) {
  return BruteComponents(table).size() <= 1;
}

int ConnectivityFunction(const RankTable& table, Mask x) {
  return table.Rank(x) + table.Rank(table.ground() & ~x) - table.rank();
}

int BruteConnectivity(const RankTable& table) {
  CheckBruteCap(table.size(), "connectivity");
  const int n = table.size();
  int best = kInfiniteConnectivity;
  if (n < 2) return best;
  // Fix element 0 on the X side so each bipartition appears once.
  const Mask others = table.ground() & ~Bit(0);
  for (Mask t = others;; t = (t - 1) & others) {
    const Mask x = t | Bit(0);
    if (x != table.ground()) {
      const int k = ConnectivityFunction(table, x) + 1;
      const int smaller = std::min(PopCount(x), n - PopCount(x));
      if (k <= smaller) best = std::min(best, k);
    }
    if (t == 0) break;
  }
  return best;
}

bool IsExactSeparation(const RankTable& table, Mask x, int k) {
  if (!IsSubset(x, table.ground())) return false;
  const int n = table.size();
  return PopCount(x) >= k && n - PopCount(x) >= k &&
         ConnectivityFunction(table, x) == k - 1;
}

std::optional<std::vector<int>> FindIsomorphism(const RankTable& a,
                                                const RankTable& b) {
  CheckBruteCap(a.size(), "isomorphism");
  CheckBruteCap(b.size(), "isomorphism");
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  return FindIsomorphismWith(a, MakeProfile(a), b, MakeProfile(b));
}

std::uint64_t BruteAutomorphismCount(const RankTable& table) {
  CheckBruteCap(table.size(), "automorphism count");
  const Profile p = MakeProfile(table);
  IsomorphismSearch search(table, p, table, p, /*count_all=*/true);
  search.Run();
  return search.count();
}

bool HasMinor(const RankTable& host, const RankTable& pattern) {
  CheckBruteCap(host.size(), "minor search");
  const int n = host.size();
  const int r = host.rank();
  const int pn = pattern.size();
  const int pr = pattern.rank();
  if (pn > n || pr > r || pn - pr > n - r) return false;
  const Profile pattern_profile = MakeProfile(pattern);
  const int contract_size = r - pr;
  const int delete_size = n - pn - contract_size;
  bool found = false;
  // Every minor is M/I\J with I independent and J coindependent, so the
  // contracted set can be taken independent of size r(M) - r(N).
  ForEachSubsetOfSize(host.ground(), contract_size, [&](Mask contracted) {
    if (!host.IsIndependent(contracted)) return false;
    const Mask rest = host.ground() & ~contracted;
    ForEachSubsetOfSize(rest, delete_size, [&](Mask deleted) {
      if (host.Rank(host.ground() & ~deleted) != r) return false;
      const RankTable minor = Minor(host, deleted, contracted);
      const Profile mp = MakeProfile(minor);
      if (FindIsomorphismWith(minor, mp, pattern, pattern_profile)) {
        found = true;
      }
      return found;
    });
    return found;
  });
  return found;
}

}  // namespace latpath

namespace latpath {

std::vector<Mask> BruteCyclicFlats(const RankTable& table) {
  const auto circuits = BruteCircuits(table);
  std::vector<Mask> out;
  for (Mask f : BruteFlats(table)) {
    Mask covered = 0;
    for (Mask c : circuits) {
      if (IsSubset(c, f)) covered |= c;
    }
    if (covered == f) out.push_back(f);
  }
  return out;
}

std::optional<SetSystem> FindTransversalPresentation(const RankTable& table) {
  const int r = table.rank();
  if (r == 0) return SetSystem(table.labels(), {});
  std::vector<Mask> candidates;
  for (Mask z : BruteCyclicFlats(table)) {
    if (table.Rank(z) < r) candidates.push_back(table.ground() & ~z);
  }
  const auto circuits = BruteCircuits(table);
  const int m = static_cast<int>(candidates.size());

  auto to_system = [&](const std::vector<int>& chosen) {
    std::vector<std::vector<int>> sets;
    for (int c : chosen) sets.push_back(MaskElements(candidates[c]));
    return SetSystem(table.labels(), std::move(sets));
  };
  // Adding sets only raises matching ranks, so a circuit that is already
  // independent in a partial system rules out every extension.
  auto circuits_dependent = [&](const SetSystem& partial) {
    for (Mask c : circuits) {
      if (MatchingRank(partial, MaskElements(c)) >= PopCount(c)) return false;
    }
    return true;
  };

  std::vector<int> chosen;
  std::optional<SetSystem> found;
  auto search = [&](auto&& self, int start) -> void {
    if (found) return;
    if (static_cast<int>(chosen.size()) == r) {
      SetSystem system = to_system(chosen);
      if (RankTableFromSystem(system) == table) found = std::move(system);
      return;
    }
    for (int c = start; c < m && !found; ++c) {
      chosen.push_back(c);
      if (circuits_dependent(to_system(chosen))) self(self, c);
      chosen.pop_back();
    }
  };
  search(search, 0);
  return found;
}

}  // namespace latpath
