#ifndef LATPATH_CLASSES_H_
#define LATPATH_CLASSES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latpath/construct.h"
#include "latpath/lattice_path.h"
#include "latpath/rank_table.h"
#include "latpath/subset.h"

namespace latpath {

enum class CatalogName {
  kMn,
  kPn,
  kW3,
  kWhirl3,
  kAn,
  kBnk,
  kCnk,
  kDn,
  kEn,
  kFn,
  kGn,
  kHn,
  kPrismDualPair,
  kSum3U12,
  kTruncSumU12,
  kOtherEx1,
  kOtherEx2,
};

struct CatalogEntry {
  CatalogName name;
  std::vector<int> params;
  // Set for lattice path matroids, in canonical form.
  std::optional<BoundingPair> pair;
  // Set for the entries defined by a construction.
  ExprPtr construction;
  // Display labels; empty for the default 1..n.
  std::vector<std::string> labels;
  bool placeholder = false;

  // e.g. "Bnk(3,2)".
  std::string Title() const;
  // Throws DomainError for placeholders.
  RankTable Table() const;
};

std::string_view CatalogNameText(CatalogName name);
// Throws DomainError for an unknown name.
CatalogName ParseCatalogName(std::string_view text);
std::vector<CatalogName> AllCatalogNames();

// Parameters: Mn(n>=1), Pn(n>=2), An(n>=3), Bnk(n,k) and Cnk(n+k,k) with
// 2<=k<=n, Dn/En(n>=3), Fn(n>=4), Gn(n>=2), Hn(n>=3), PrismDualPair(1|2)
// for U_{4,6} and the prism; the rest take none. Throws DomainError
// otherwise.
CatalogEntry Catalog(CatalogName name, const std::vector<int>& params = {});

// Up to isomorphism of the presented matroid: some arrangement of the
// components, each possibly rotated, has lower path E^m N^r once loops and
// isthmuses are dropped.
bool IsGeneralizedCatalan(const BoundingPair& pair);

// As above with lower path E^m N^r or E^(m-1) N E N^(r-1).
bool IsNotch(const BoundingPair& pair);

// The nontrivial connected flats form a chain; the test of membership in
// the generalized Catalan class for connected tables.
bool ChainCondition(const RankTable& table);

// Throws InvalidRelaxationError unless H is a circuit-hyperplane.
RankTable Relax(const RankTable& table, Mask h);

struct LpmcharResult {
  bool ok = false;
  int condition = 0;  // first violated condition, 1..4
  std::string detail;
  std::vector<Mask> witness;
  // The two chains of fundamental flats, smallest first, when (i) holds.
  std::vector<Mask> chain_f;
  std::vector<Mask> chain_g;
};

// The four structural conditions on fundamental and connected flats that
// characterize connected lattice path matroids. Throws DomainError on
// disconnected input and ResourceError above the cap.
LpmcharResult LpmcharCheck(const RankTable& table);

// A lattice path presentation read off the fundamental flats of each
// component, with components in order of least element; nullopt when some
// component fails LpmcharCheck. The pair presents a matroid isomorphic to
// the table.
std::optional<BoundingPair> PairFromTable(const RankTable& table);

struct NotLpmCertificate {
  Mask x;
  Mask x_prime;
  int y;
};

// Two intersecting nontrivial connected flats spanning together, whose
// union misses y. Absence does not imply membership.
std::optional<NotLpmCertificate> NotlpmCertificate(const RankTable& table);

enum class MatroidClass {
  kLatticePath,
  kNotch,
  kGeneralizedCatalan,
};

// Membership of a table, up to isomorphism, through PairFromTable.
bool InClass(const RankTable& table, MatroidClass cls);

enum class TargetClass {
  kNotch,
  // Outside the lattice path matroids; proper minors notch.
  kLpmAndNotch,
  kGeneralizedCatalan,
};

struct ExcludedMinorReport {
  bool outside = false;       // the entry is not in the class
  bool minors_inside = false;  // every single-element minor is
  std::string outside_reason;
  std::vector<std::string> failures;

  bool passed() const { return outside && minors_inside; }
};

// Throws ResourceError above the cap and DomainError for placeholders.
ExcludedMinorReport VerifyExcludedMinor(const CatalogEntry& entry,
                                        TargetClass target);

// True iff some P_n with 2 <= n <= max_n is a minor.
bool PnMinorTest(const RankTable& table, int max_n);

}  // namespace latpath

#endif  // LATPATH_CLASSES_H_
