#include "latpath/classes.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "latpath/brute.h"
#include "latpath/errors.h"
#include "latpath/lpm.h"

namespace latpath {
namespace {

constexpr std::array<std::pair<CatalogName, std::string_view>, 17> kNames = {{
    {CatalogName::kMn, "Mn"},
    {CatalogName::kPn, "Pn"},
    {CatalogName::kW3, "W3"},
    {CatalogName::kWhirl3, "Whirl3"},
    {CatalogName::kAn, "An"},
    {CatalogName::kBnk, "Bnk"},
    {CatalogName::kCnk, "Cnk"},
    {CatalogName::kDn, "Dn"},
    {CatalogName::kEn, "En"},
    {CatalogName::kFn, "Fn"},
    {CatalogName::kGn, "Gn"},
    {CatalogName::kHn, "Hn"},
    {CatalogName::kPrismDualPair, "PrismDualPair"},
    {CatalogName::kSum3U12, "Sum3U12"},
    {CatalogName::kTruncSumU12, "TruncSumU12"},
    {CatalogName::kOtherEx1, "OtherEx1"},
    {CatalogName::kOtherEx2, "OtherEx2"},
}};

// Concatenated runs, e.g. Word({{'E', 2}, {'N', 1}}) is "EEN".
std::string Word(std::initializer_list<std::pair<char, int>> runs) {
  std::string out;
  for (const auto& [c, k] : runs) out.append(std::max(k, 0), c);
  return out;
}

BoundingPair Canonical(const std::string& lower, const std::string& upper) {
  return CanonicalForm(BoundingPair::Parse(lower, upper));
}

ExprPtr TwoCircuitTruncation(int a_rank, int a_size, int b_rank, int b_size,
                             int rank) {
  return TruncateTo(Sum(Uniform(a_rank, a_size), Uniform(b_rank, b_size)),
                    rank);
}

ExprPtr DExpr(int n) {
  return FreeExt(
      Sum(TwoCircuitTruncation(n - 2, n - 1, n - 2, n - 1, n - 1),
          Uniform(1, 1)));
}

ExprPtr WheelExpr() {
  // Triangles abd, bce, acf, def over a..f.
  return Paving(3, 6,
                {Bit(0) | Bit(1) | Bit(3), Bit(1) | Bit(2) | Bit(4),
                 Bit(0) | Bit(2) | Bit(5), Bit(3) | Bit(4) | Bit(5)});
}

void RequireParams(CatalogName name, const std::vector<int>& params,
                   size_t count) {
  if (params.size() != count) {
    throw DomainError(std::string(CatalogNameText(name)) + " takes " +
                      std::to_string(count) + " parameter(s), got " +
                      std::to_string(params.size()));
  }
}

void RequireAtLeast(CatalogName name, int value, int least) {
  if (value < least) {
    throw DomainError(std::string(CatalogNameText(name)) + " requires n >= " +
                      std::to_string(least) + ", got " + std::to_string(value));
  }
}

bool LowerIsCatalan(const LatticePath& lower) {
  const int m = lower.east_count();
  for (int t = 1; t <= lower.size(); ++t) {
    if (lower.step(t) != (t <= m ? Step::kE : Step::kN)) return false;
  }
  return true;
}

bool LowerIsNotched(const LatticePath& lower) {
  const int m = lower.east_count();
  const int r = lower.north_count();
  if (m < 1 || r < 1) return false;
  for (int t = 1; t <= lower.size(); ++t) {
    const bool north = (t == m) || (t > m + 1);
    if (lower.step(t) != (north ? Step::kN : Step::kE)) return false;
  }
  return true;
}

// Tries every order and orientation of the nontrivial components.
bool SomeArrangement(const BoundingPair& pair, bool allow_notch) {
  std::vector<BoundingPair> parts;
  for (const auto& c : LpmComponents(pair)) {
    if (c.pair.size() > 1) parts.push_back(c.pair);
  }
  if (parts.empty()) return true;
  // Three nontrivial components already contain U_{1,2}+U_{1,2}+U_{1,2},
  // which is outside both classes; larger counts need no search.
  if (parts.size() > 3) return false;
  const int k = static_cast<int>(parts.size());
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  do {
    for (int flips = 0; flips < (1 << k); ++flips) {
      std::vector<BoundingPair> arranged;
      for (int i = 0; i < k; ++i) {
        const BoundingPair& p = parts[order[i]];
        arranged.push_back((flips >> i) & 1 ? Rotate(p) : p);
      }
      const LatticePath lower = DirectSum(arranged).lower();
      if (LowerIsCatalan(lower)) return true;
      if (allow_notch && LowerIsNotched(lower)) return true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

int Nullity(const RankTable& t, Mask x) { return PopCount(x) - t.Rank(x); }

std::string FlatText(const RankTable& t, Mask x) {
  std::string out = "{";
  bool first = true;
  for (int e : MaskElements(x)) {
    if (!first) out += ",";
    out += t.labels()[e];
    first = false;
  }
  return out + "}";
}

// Path from corner points visited in increasing order: `north_first` gives
// N^dy E^dx per segment (EN corners), otherwise E^dx N^dy (NE corners).
LatticePath PathThroughCorners(std::vector<std::pair<int, int>> corners,
                               int m, int r, bool north_first) {
  std::sort(corners.begin(), corners.end());
  corners.emplace_back(m, r);
  std::vector<Step> steps;
  int x = 0;
  int y = 0;
  for (const auto& [cx, cy] : corners) {
    const std::vector<Step> e(cx - x, Step::kE);
    const std::vector<Step> n(cy - y, Step::kN);
    if (north_first) {
      steps.insert(steps.end(), n.begin(), n.end());
      steps.insert(steps.end(), e.begin(), e.end());
    } else {
      steps.insert(steps.end(), e.begin(), e.end());
      steps.insert(steps.end(), n.begin(), n.end());
    }
    x = cx;
    y = cy;
  }
  return LatticePath(std::move(steps));
}

std::optional<BoundingPair> ConnectedPair(const RankTable& t) {
  const LpmcharResult check = LpmcharCheck(t);
  if (!check.ok) return std::nullopt;
  const int r = t.rank();
  const int m = t.size() - r;
  std::vector<std::pair<int, int>> q_corners;
  for (Mask f : check.chain_f) q_corners.emplace_back(Nullity(t, f), t.Rank(f));
  std::vector<std::pair<int, int>> p_corners;
  for (Mask g : check.chain_g) {
    p_corners.emplace_back(m - Nullity(t, g), r - t.Rank(g));
  }
  return BoundingPair(PathThroughCorners(p_corners, m, r, false),
                      PathThroughCorners(q_corners, m, r, true));
}

RankTable PnTable(int n) {
  return Construct(TwoCircuitTruncation(n - 1, n, n - 1, n, n));
}

}  // namespace

std::string_view CatalogNameText(CatalogName name) {
  for (const auto& [n, text] : kNames) {
    if (n == name) return text;
  }
  return "?";
}

CatalogName ParseCatalogName(std::string_view text) {
  for (const auto& [n, t] : kNames) {
    if (t == text) return n;
  }
  throw DomainError("unknown catalog name '" + std::string(text) + "'");
}

std::vector<CatalogName> AllCatalogNames() {
  std::vector<CatalogName> out;
  for (const auto& [n, text] : kNames) out.push_back(n);
  return out;
}

std::string CatalogEntry::Title() const {
  std::string out(CatalogNameText(name));
  if (params.empty()) return out;
  out += "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

RankTable CatalogEntry::Table() const {
  if (placeholder) throw DomainError(Title() + " has no realization");
  RankTable t = construction ? Construct(construction) : ToRankTable(*pair);
  if (labels.empty()) return t;
  return RankTable(labels, t.ranks());
}

CatalogEntry Catalog(CatalogName name, const std::vector<int>& params) {
  CatalogEntry e{name, params, std::nullopt, nullptr, {}, false};
  switch (name) {
    case CatalogName::kMn: {
      RequireParams(name, params, 1);
      const int n = params[0];
      RequireAtLeast(name, n, 1);
      std::string upper;
      for (int i = 0; i < n; ++i) upper += "EN";
      e.pair = Canonical(Word({{'E', n}, {'N', n}}), upper);
      break;
    }
    case CatalogName::kPn: {
      RequireParams(name, params, 1);
      const int n = params[0];
      RequireAtLeast(name, n, 2);
      e.construction = TwoCircuitTruncation(n - 1, n, n - 1, n, n);
      e.pair = Canonical(Word({{'E', n - 1}, {'N', 1}, {'E', 1}, {'N', n - 1}}),
                         Word({{'N', n - 1}, {'E', 1}, {'N', 1}, {'E', n - 1}}));
      break;
    }
    case CatalogName::kW3:
      RequireParams(name, params, 0);
      e.construction = WheelExpr();
      e.labels = {"a", "b", "c", "d", "e", "f"};
      break;
    case CatalogName::kWhirl3:
      RequireParams(name, params, 0);
      e.construction = Relax(WheelExpr(), Bit(3) | Bit(4) | Bit(5));
      e.labels = {"a", "b", "c", "d", "e", "f"};
      break;
    case CatalogName::kAn: {
      RequireParams(name, params, 1);
      const int n = params[0];
      RequireAtLeast(name, n, 3);
      // x, a_2..a_n, b_2..b_n, y.
      Mask a = Bit(0);
      Mask b = Bit(0);
      e.labels = {"x"};
      for (int i = 2; i <= n; ++i) {
        a |= Bit(i - 1);
        e.labels.push_back("a" + std::to_string(i));
      }
      for (int i = 2; i <= n; ++i) {
        b |= Bit(n + i - 2);
        e.labels.push_back("b" + std::to_string(i));
      }
      e.labels.push_back("y");
      e.construction = Paving(n, 2 * n, {a, b});
      break;
    }
    case CatalogName::kBnk:
    case CatalogName::kCnk: {
      RequireParams(name, params, 2);
      const int k = params[1];
      const int n = name == CatalogName::kBnk ? params[0] : params[0] - k;
      if (k < 2 || k > n) {
        throw DomainError(name == CatalogName::kBnk
                              ? "Bnk requires 2 <= k <= n"
                              : "Cnk(N,k) requires 2 <= k <= N-k");
      }
      ExprPtr b = TruncateTo(
          Sum({Uniform(n - 1, n), Uniform(n - 1, n), Uniform(k - 1, k)}), n);
      e.construction = name == CatalogName::kBnk ? b : DualOf(b);
      break;
    }
    case CatalogName::kDn:
    case CatalogName::kEn: {
      RequireParams(name, params, 1);
      const int n = params[0];
      RequireAtLeast(name, n, 3);
      e.construction =
          name == CatalogName::kDn ? DExpr(n) : DualOf(DExpr(n));
      if (n == 3) {
        e.pair = name == CatalogName::kDn ? Canonical("EENNEN", "NENNEE")
                                          : Canonical("ENEENN", "NNEENE");
      }
      break;
    }
    case CatalogName::kFn: {
      RequireParams(name, params, 1);
      const int n = params[0];
      RequireAtLeast(name, n, 4);
      e.construction = TwoCircuitTruncation(n - 2, n - 1, n - 2, n - 1, n);
      e.pair = Canonical(Word({{'E', n - 3}, {'N', 2}, {'E', 1}, {'N', n - 2}}),
                         Word({{'N', n - 2}, {'E', 1}, {'N', 2}, {'E', n - 3}}));
      break;
    }
    case CatalogName::kGn: {
      RequireParams(name, params, 1);
      const int n = params[0];
      RequireAtLeast(name, n, 2);
      e.construction = TwoCircuitTruncation(n - 1, n + 1, n - 1, n + 1, n);
      e.pair = Canonical(
          Word({{'E', n}, {'N', 1}, {'E', 2}, {'N', n - 1}}),
          Word({{'N', n - 1}, {'E', 2}, {'N', 1}, {'E', n}}));
      break;
    }
    case CatalogName::kHn: {
      RequireParams(name, params, 1);
      const int n = params[0];
      RequireAtLeast(name, n, 3);
      e.construction = TwoCircuitTruncation(n - 2, n - 1, n - 1, n + 1, n);
      e.pair = Canonical(
          Word({{'E', n - 2}, {'N', 1}, {'E', 2}, {'N', n - 1}}),
          Word({{'N', n - 2}, {'E', 1}, {'N', 2}, {'E', n - 1}}));
      break;
    }
    case CatalogName::kPrismDualPair:
      RequireParams(name, params, 1);
      if (params[0] == 1) {
        e.construction = Uniform(4, 6);
        e.pair = Canonical("EENNNN", "NNNNEE");
      } else if (params[0] == 2) {
        e.construction = DualOf(TruncateTo(
            Sum({Uniform(1, 2), Uniform(1, 2), Uniform(1, 2)}), 2));
      } else {
        throw DomainError("PrismDualPair member must be 1 (U_{4,6}) or 2 "
                          "(prism)");
      }
      break;
    case CatalogName::kSum3U12:
      RequireParams(name, params, 0);
      e.construction = Sum({Uniform(1, 2), Uniform(1, 2), Uniform(1, 2)});
      e.pair = Canonical("ENENEN", "NENENE");
      break;
    case CatalogName::kTruncSumU12:
      RequireParams(name, params, 0);
      e.construction = Sum(
          TruncateTo(Sum({Uniform(1, 2), Uniform(1, 1), Uniform(1, 1)}), 2),
          Uniform(1, 2));
      e.pair = Canonical("EENNEN", "NENENE");
      break;
    case CatalogName::kOtherEx1:
    case CatalogName::kOtherEx2:
      RequireParams(name, params, 0);
      e.placeholder = true;
      break;
  }
  return e;
}

bool IsGeneralizedCatalan(const BoundingPair& pair) {
  return SomeArrangement(pair, false);
}

bool IsNotch(const BoundingPair& pair) { return SomeArrangement(pair, true); }

bool ChainCondition(const RankTable& table) {
  const auto flats = BruteConnectedFlats(table);
  for (size_t i = 0; i < flats.size(); ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      const Mask a = flats[i].flat;
      const Mask b = flats[j].flat;
      if (!IsSubset(a, b) && !IsSubset(b, a)) return false;
    }
  }
  return true;
}

RankTable Relax(const RankTable& table, Mask h) {
  return RelaxCircuitHyperplane(table, h);
}

LpmcharResult LpmcharCheck(const RankTable& table) {
  if (!IsConnected(table)) {
    throw DomainError("structural characterization needs a connected matroid");
  }
  LpmcharResult result;
  auto fail = [&](int condition, std::string detail,
                  std::vector<Mask> witness) {
    result.ok = false;
    result.condition = condition;
    result.detail = std::move(detail);
    result.witness = std::move(witness);
    return result;
  };
  const Mask ground = table.ground();
  const int r = table.rank();
  const int m = table.size() - r;

  std::vector<Mask> fundamental;
  for (const Flat& f : BruteFundamentalFlats(table)) {
    fundamental.push_back(f.flat);
  }
  // (i): comparability splits the fundamental flats into at most two
  // classes, each totally ordered.
  const int count = static_cast<int>(fundamental.size());
  std::vector<int> group(count, -1);
  int groups = 0;
  for (int i = 0; i < count; ++i) {
    if (group[i] >= 0) continue;
    std::vector<int> stack = {i};
    group[i] = groups;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < count; ++b) {
        if (group[b] >= 0) continue;
        if (IsSubset(fundamental[a], fundamental[b]) ||
            IsSubset(fundamental[b], fundamental[a])) {
          group[b] = groups;
          stack.push_back(b);
        }
      }
    }
    ++groups;
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (group[i] != group[j]) continue;
      if (!IsSubset(fundamental[i], fundamental[j]) &&
          !IsSubset(fundamental[j], fundamental[i])) {
        return fail(1,
                    "fundamental flats " + FlatText(table, fundamental[i]) +
                        " and " + FlatText(table, fundamental[j]) +
                        " are incomparable within one chain",
                    {fundamental[i], fundamental[j]});
      }
    }
  }
  if (groups > 2) {
    std::vector<Mask> witness;
    for (int g = 0; g < 3; ++g) {
      for (int i = 0; i < count; ++i) {
        if (group[i] == g) {
          witness.push_back(fundamental[i]);
          break;
        }
      }
    }
    return fail(1,
                "fundamental flats form " + std::to_string(groups) +
                    " chains",
                witness);
  }
  for (int i = 0; i < count; ++i) {
    (group[i] == 0 ? result.chain_f : result.chain_g).push_back(fundamental[i]);
  }
  auto by_size = [](Mask a, Mask b) { return SizeThenLexLess(a, b); };
  std::sort(result.chain_f.begin(), result.chain_f.end(), by_size);
  std::sort(result.chain_g.begin(), result.chain_g.end(), by_size);

  // (ii)
  for (Mask f : result.chain_f) {
    for (Mask g : result.chain_g) {
      if ((f & g) != 0 && (f | g) != ground) {
        return fail(2,
                    FlatText(table, f) + " and " + FlatText(table, g) +
                        " meet but do not cover the ground set",
                    {f, g});
      }
    }
  }
  // (iii) and (iv)
  std::set<Mask> expected(result.chain_f.begin(), result.chain_f.end());
  expected.insert(result.chain_g.begin(), result.chain_g.end());
  std::vector<std::pair<Mask, int>> meets;
  for (Mask f : result.chain_f) {
    for (Mask g : result.chain_g) {
      if (m < Nullity(table, f) + Nullity(table, g)) {
        expected.insert(f & g);
        meets.emplace_back(f & g, table.Rank(f) + table.Rank(g) - r);
      }
    }
  }
  std::set<Mask> actual;
  for (const Flat& f : BruteConnectedFlats(table)) {
    if (f.flat != ground) actual.insert(f.flat);
  }
  for (Mask x : actual) {
    if (!expected.count(x)) {
      return fail(3,
                  "connected flat " + FlatText(table, x) +
                      " is neither fundamental nor a qualifying intersection",
                  {x});
    }
  }
  for (Mask x : expected) {
    if (!actual.count(x)) {
      return fail(3,
                  FlatText(table, x) +
                      " should be a connected flat but is not",
                  {x});
    }
  }
  for (const auto& [x, rank] : meets) {
    if (table.Rank(x) != rank) {
      return fail(4,
                  FlatText(table, x) + " has rank " +
                      std::to_string(table.Rank(x)) + ", expected " +
                      std::to_string(rank),
                  {x});
    }
  }
  result.ok = true;
  return result;
}

std::optional<BoundingPair> PairFromTable(const RankTable& table) {
  std::vector<BoundingPair> parts;
  for (Mask component : BruteComponents(table)) {
    if (PopCount(component) == 1) {
      parts.push_back(table.Rank(component) == 0
                          ? BoundingPair::Parse("E", "E")
                          : BoundingPair::Parse("N", "N"));
      continue;
    }
    auto part = ConnectedPair(Restrict(table, component));
    if (!part) return std::nullopt;
    parts.push_back(std::move(*part));
  }
  return DirectSum(parts);
}

std::optional<NotLpmCertificate> NotlpmCertificate(const RankTable& table) {
  const Mask ground = table.ground();
  std::vector<Mask> flats;
  for (const Flat& f : BruteConnectedFlats(table)) {
    if (f.flat != ground) flats.push_back(f.flat);
  }
  for (size_t i = 0; i < flats.size(); ++i) {
    for (size_t j = i + 1; j < flats.size(); ++j) {
      const Mask x = flats[i];
      const Mask xp = flats[j];
      const Mask both = x | xp;
      if ((x & xp) == 0 || both == ground) continue;
      if (table.Rank(both) != table.rank()) continue;
      return NotLpmCertificate{x, xp, LowestElement(ground & ~both)};
    }
  }
  return std::nullopt;
}

bool InClass(const RankTable& table, MatroidClass cls) {
  const auto pair = PairFromTable(table);
  if (!pair) return false;
  switch (cls) {
    case MatroidClass::kLatticePath:
      return true;
    case MatroidClass::kNotch:
      return IsNotch(*pair);
    case MatroidClass::kGeneralizedCatalan:
      return IsGeneralizedCatalan(*pair);
  }
  return false;
}

ExcludedMinorReport VerifyExcludedMinor(const CatalogEntry& entry,
                                        TargetClass target) {
  const RankTable table = entry.Table();
  CheckBruteCap(table.size(), "excluded-minor verification");
  const MatroidClass inside = target == TargetClass::kGeneralizedCatalan
                                  ? MatroidClass::kGeneralizedCatalan
                                  : MatroidClass::kNotch;
  ExcludedMinorReport report;

  const auto pair = PairFromTable(table);
  if (!pair) {
    report.outside = true;
    report.outside_reason = "not a lattice path matroid";
  } else if (target == TargetClass::kLpmAndNotch) {
    report.outside = false;
    report.outside_reason = "is the lattice path matroid " + pair->ToString();
  } else {
    report.outside = !InClass(table, inside);
    report.outside_reason =
        "lattice path matroid " + pair->ToString() +
        (report.outside ? " has no presentation of the defining shape"
                        : " is in the class");
  }

  report.minors_inside = true;
  for (int x = 0; x < table.size(); ++x) {
    const std::string& label = table.labels()[x];
    if (!InClass(Minor(table, Bit(x), 0), inside)) {
      report.minors_inside = false;
      report.failures.push_back("deletion of " + label + " is outside");
    }
    if (!InClass(Minor(table, 0, Bit(x)), inside)) {
      report.minors_inside = false;
      report.failures.push_back("contraction of " + label + " is outside");
    }
  }
  if (!report.outside) {
    report.failures.insert(report.failures.begin(), report.outside_reason);
  }
  return report;
}

bool PnMinorTest(const RankTable& table, int max_n) {
  CheckBruteCap(table.size(), "P_n minor test");
  const int r = table.rank();
  const int m = table.size() - r;
  for (int n = 2; n <= max_n; ++n) {
    if (n > r || n > m) break;
    if (HasMinor(table, PnTable(n))) return true;
  }
  return false;
}

}  // namespace latpath
