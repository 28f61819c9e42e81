#ifndef LATPATH_BRUTE_H_
#define LATPATH_BRUTE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "latpath/rank_table.h"
#include "latpath/set_system.h"
#include "latpath/subset.h"

namespace latpath {

// Exhaustive oracles over explicit rank tables. Every routine here throws
// ResourceError above the brute-force cap; results are listed in
// size-then-lexicographic order.

struct Flat {
  Mask flat;
  int rank;

  friend bool operator==(const Flat&, const Flat&) = default;
};

std::vector<Mask> BruteCircuits(const RankTable& table);
std::vector<Mask> BruteFlats(const RankTable& table);

// Circuits whose rank equals the rank of the matroid.
std::vector<Mask> BruteSpanningCircuits(const RankTable& table);

// True iff no nonempty proper Y of X has r(Y) + r(X - Y) = r(X).
bool IsConnectedSet(const RankTable& table, Mask x);

// Dependent flats whose restriction is connected, including the whole
// ground set when it qualifies.
std::vector<Flat> BruteConnectedFlats(const RankTable& table);

// Connected flats X with |X| > 1 and r(X) < r(M) such that some spanning
// circuit C has X ∩ C a basis of X. Throws DomainError when the matroid is
// disconnected.
std::vector<Flat> BruteFundamentalFlats(const RankTable& table);

// Connected components, ordered by least element. Loops and isthmuses are
// singletons.
std::vector<Mask> BruteComponents(const RankTable& table);
bool IsConnected(const RankTable& table);

// Least k admitting a k-separation, or kInfiniteConnectivity.
int BruteConnectivity(const RankTable& table);

// r(X) + r(E - X) - r(M).
int ConnectivityFunction(const RankTable& table, Mask x);

// True iff (X, E - X) is a k-separation with r(X) + r(E - X) - r(M) = k - 1.
bool IsExactSeparation(const RankTable& table, Mask x, int k);

// A bijection phi with phi[i] the image in `b` of element i of `a`,
// preserving rank on every subset; nullopt if none exists.
std::optional<std::vector<int>> FindIsomorphism(const RankTable& a,
                                                const RankTable& b);
inline bool IsIsomorphic(const RankTable& a, const RankTable& b) {
  return FindIsomorphism(a, b).has_value();
}

// Number of rank-preserving permutations of the ground set.
std::uint64_t BruteAutomorphismCount(const RankTable& table);

// True iff some minor of `host` is isomorphic to `pattern`.
bool HasMinor(const RankTable& host, const RankTable& pattern);

// Flats that are unions of circuits, including the closure of the empty set.
std::vector<Mask> BruteCyclicFlats(const RankTable& table);

// A presentation whose sets are rank-many complements of proper cyclic
// flats, searched exhaustively; nullopt exactly when the matroid is not
// transversal, since the maximal presentation has this form.
std::optional<SetSystem> FindTransversalPresentation(const RankTable& table);

}  // namespace latpath

#endif  // LATPATH_BRUTE_H_
