#include "latpath/rank_table.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

#include "latpath/errors.h"

namespace latpath {
namespace {

std::atomic<int> brute_cap{kDefaultBruteCap};

std::vector<std::string> DefaultLabels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

// Labels of the elements of `kept`, in increasing order.
std::vector<std::string> KeptLabels(const RankTable& table, Mask kept) {
  std::vector<std::string> out;
  for (int x : MaskElements(kept)) out.push_back(table.labels()[x]);
  return out;
}

// Spreads the low bits of `compact` over the positions listed in `slots`.
Mask Expand(Mask compact, std::span<const int> slots) {
  Mask out = 0;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (Contains(compact, static_cast<int>(i))) out |= Bit(slots[i]);
  }
  return out;
}

}  // namespace

int BruteCap() { return brute_cap.load(); }

void SetBruteCap(int cap) {
  if (cap < 0 || cap > kHardBruteCap) {
    throw DomainError("brute-force cap must lie in [0, " +
                      std::to_string(kHardBruteCap) + "]");
  }
  brute_cap.store(cap);
}

void CheckBruteCap(int n, const char* what) {
  if (n > BruteCap()) {
    throw ResourceError(std::string(what) + ": ground set of size " +
                        std::to_string(n) + " exceeds the brute-force cap " +
                        std::to_string(BruteCap()));
  }
}

RankTable::RankTable(std::vector<std::string> labels,
                     std::vector<std::uint8_t> ranks)
    : labels_(std::move(labels)), ranks_(std::move(ranks)) {
  CheckBruteCap(size(), "rank table");
  if (ranks_.size() != (std::size_t{1} << size())) {
    throw DomainError("rank table must list one rank per subset");
  }
}

RankTable::RankTable(int n, std::vector<std::uint8_t> ranks)
    : RankTable(DefaultLabels(n), std::move(ranks)) {}

RankTable RankTable::FromFunction(int n,
                                  const std::function<int(Mask)>& rank) {
  CheckBruteCap(n, "rank table");
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  for (Mask x = 0; x < ranks.size(); ++x) {
    ranks[x] = static_cast<std::uint8_t>(rank(x));
  }
  return RankTable(n, std::move(ranks));
}

bool IsMatroid(const RankTable& table) {
  const int n = table.size();
  if (table.Rank(0) != 0) return false;
  for (Mask x = 0; x <= table.ground(); ++x) {
    for (int a = 0; a < n; ++a) {
      if (Contains(x, a)) continue;
      const int ra = table.Rank(x | Bit(a));
      if (ra < table.Rank(x) || ra > table.Rank(x) + 1) return false;
      for (int b = a + 1; b < n; ++b) {
        if (Contains(x, b)) continue;
        if (ra + table.Rank(x | Bit(b)) <
            table.Rank(x | Bit(a) | Bit(b)) + table.Rank(x)) {
          return false;
        }
      }
    }
    if (x == table.ground()) break;
  }
  return true;
}

RankTable RankTableFromSystem(const SetSystem& system) {
  const int n = system.ground_size();
  CheckBruteCap(n, "rank table");
  // The sets met by one maximum matching present the same matroid, which
  // keeps the incidence masks within 32 bits.
  const SetSystem reduced = ReduceToBasisSets(system);
  std::vector<Mask> incidence(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int j : reduced.incidence(x)) incidence[x] |= Bit(j);
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<Mask> image(count, 0);
  std::vector<char> independent(count, 0);
  std::vector<std::uint8_t> ranks(count, 0);
  independent[0] = 1;
  for (Mask x = 1; x < count; ++x) {
    const int low = LowestElement(x);
    image[x] = image[x & (x - 1)] | incidence[low];
    bool all_minus = true;
    int best = 0;
    for (Mask rest = x; rest != 0; rest &= rest - 1) {
      const Mask minus = x & ~Bit(LowestElement(rest));
      all_minus = all_minus && independent[minus];
      best = std::max<int>(best, ranks[minus]);
    }
    if (all_minus && PopCount(image[x]) >= PopCount(x)) {
      independent[x] = 1;
      ranks[x] = static_cast<std::uint8_t>(PopCount(x));
    } else {
      ranks[x] = static_cast<std::uint8_t>(best);
    }
  }
  return RankTable(system.labels(), std::move(ranks));
}

RankTable Minor(const RankTable& table, Mask deleted, Mask contracted) {
  if ((deleted & contracted) != 0) {
    throw DomainError("deleted and contracted sets must be disjoint");
  }
  if (!IsSubset(deleted | contracted, table.ground())) {
    throw DomainError("minor sets must lie in the ground set");
  }
  const Mask kept = table.ground() & ~deleted & ~contracted;
  const std::vector<int> slots = MaskElements(kept);
  const int base = table.Rank(contracted);
  const int n = static_cast<int>(slots.size());
  std::vector<std::uint8_t> ranks(std::size_t{1} << n);
  for (Mask x = 0; x < ranks.size(); ++x) {
    ranks[x] = static_cast<std::uint8_t>(
        table.Rank(Expand(x, slots) | contracted) - base);
  }
  return RankTable(KeptLabels(table, kept), std::move(ranks));
}

RankTable Restrict(const RankTable& table, Mask kept) {
  return Minor(table, table.ground() & ~kept, 0);
}

RankTable Dual(const RankTable& table) {
  const Mask e = table.ground();
  const int r = table.rank();
  std::vector<std::uint8_t> ranks(table.ranks().size());
  for (Mask x = 0; x < ranks.size(); ++x) {
    ranks[x] =
        static_cast<std::uint8_t>(PopCount(x) + table.Rank(e & ~x) - r);
  }
  return RankTable(table.labels(), std::move(ranks));
}

RankTable DirectSum(const RankTable& a, const RankTable& b) {
  const int na = a.size();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  CheckBruteCap(static_cast<int>(labels.size()), "direct sum");
  // Clashing labels fall back to 1..n.
  if (std::set<std::string>(labels.begin(), labels.end()).size() <
      labels.size()) {
    labels = DefaultLabels(static_cast<int>(labels.size()));
  }
  std::vector<std::uint8_t> ranks(std::size_t{1} << labels.size());
  for (Mask x = 0; x < ranks.size(); ++x) {
    ranks[x] = static_cast<std::uint8_t>(a.Rank(x & a.ground()) +
                                         b.Rank(x >> na));
  }
  return RankTable(std::move(labels), std::move(ranks));
}

RankTable Truncate(const RankTable& table, int rank) {
  if (rank < 0) throw DomainError("truncation rank must be non-negative");
  std::vector<std::uint8_t> ranks = table.ranks();
  for (auto& v : ranks) v = static_cast<std::uint8_t>(std::min<int>(v, rank));
  return RankTable(table.labels(), std::move(ranks));
}

RankTable FreeExtension(const RankTable& table) {
  const int n = table.size();
  const int r = table.rank();
  std::vector<std::string> labels = table.labels();
  labels.push_back(std::to_string(n + 1));
  CheckBruteCap(n + 1, "free extension");
  std::vector<std::uint8_t> ranks(std::size_t{1} << (n + 1));
  for (Mask x = 0; x < ranks.size(); ++x) {
    const int base = table.Rank(x & table.ground());
    ranks[x] = static_cast<std::uint8_t>(
        std::min(base + (Contains(x, n) ? 1 : 0), r));
  }
  return RankTable(std::move(labels), std::move(ranks));
}

RankTable ParallelExtension(const RankTable& table, int x) {
  const int n = table.size();
  if (x < 0 || x >= n) throw DomainError("parallel element not in ground");
  std::vector<std::string> labels = table.labels();
  labels.push_back(std::to_string(n + 1));
  CheckBruteCap(n + 1, "parallel extension");
  std::vector<std::uint8_t> ranks(std::size_t{1} << (n + 1));
  for (Mask y = 0; y < ranks.size(); ++y) {
    Mask base = y & table.ground();
    if (Contains(y, n)) base |= Bit(x);
    ranks[y] = static_cast<std::uint8_t>(table.Rank(base));
  }
  return RankTable(std::move(labels), std::move(ranks));
}

RankTable Relabel(const RankTable& table, std::span<const int> order) {
  const int n = table.size();
  if (static_cast<int>(order.size()) != n) {
    throw DomainError("relabeling must list every element once");
  }
  std::vector<char> seen(n, 0);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || seen[order[i]]) {
      throw DomainError("relabeling must be a permutation");
    }
    seen[order[i]] = 1;
    labels[i] = table.labels()[order[i]];
  }
  std::vector<std::uint8_t> ranks(table.ranks().size());
  for (Mask x = 0; x < ranks.size(); ++x) {
    ranks[x] = static_cast<std::uint8_t>(table.Rank(Expand(x, order)));
  }
  return RankTable(std::move(labels), std::move(ranks));
}

Mask Closure(const RankTable& table, Mask x) {
  const int rx = table.Rank(x);
  Mask out = x;
  for (int y = 0; y < table.size(); ++y) {
    if (!Contains(x, y) && table.Rank(x | Bit(y)) == rx) out |= Bit(y);
  }
  return out;
}

bool IsFlat(const RankTable& table, Mask x) { return Closure(table, x) == x; }

bool IsCircuitHyperplane(const RankTable& table, Mask h) {
  const int r = table.rank();
  if (!IsSubset(h, table.ground())) return false;
  if (PopCount(h) != r || table.Rank(h) != r - 1) return false;
  for (int x : MaskElements(h)) {
    if (!table.IsIndependent(h & ~Bit(x))) return false;
  }
  return IsFlat(table, h);
}

RankTable RelaxCircuitHyperplane(const RankTable& table, Mask h) {
  if (!IsCircuitHyperplane(table, h)) {
    throw InvalidRelaxationError(FormatMask(h) +
                                 " is not a circuit-hyperplane");
  }
  std::vector<std::uint8_t> ranks = table.ranks();
  ranks[h] = static_cast<std::uint8_t>(table.rank());
  return RankTable(table.labels(), std::move(ranks));
}

std::uint64_t BruteBasisCount(const RankTable& table) {
  const int r = table.rank();
  std::uint64_t count = 0;
  for (Mask x = 0; x < table.ranks().size(); ++x) {
    if (PopCount(x) == r && table.Rank(x) == r) ++count;
  }
  return count;
}

}  // namespace latpath
