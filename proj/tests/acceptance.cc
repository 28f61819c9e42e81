// Acceptance suite: one PASS/FAIL line per criterion. Extra arguments are
// test binaries whose property suites make up the last criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latpath/brute.h"
#include "latpath/classes.h"
#include "latpath/construct.h"
#include "latpath/lpm.h"
#include "latpath/recognition.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace latpath {
namespace {

using testing::M;
using testing::Rng;

struct Verdict {
  bool ok = true;
  std::string detail;
  int failures = 0;
  std::string first_failure;

  void Check(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    if (failures++ == 0) first_failure = what;
  }
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

BigInt Binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Verdict CatalanCounts() {
  Verdict v;
  const auto start = Clock::now();
  for (int n = 1; n <= 12; ++n) {
    const BoundingPair p = *Catalog(CatalogName::kMn, {n}).pair;
    const BigInt expected = Binomial(2 * n, n) / (n + 1);
    v.Check(CountBases(p) == expected, "n=" + std::to_string(n));
  }
  const double t = Seconds(start);
  v.Check(t < 1.0, "runtime " + std::to_string(t) + " s");
  v.detail = "C_1..C_12 exact, C_12=" +
             CountBases(*Catalog(CatalogName::kMn, {12}).pair).str();
  return v;
}

std::vector<BoundingPair> ComponentForms(const BoundingPair& p) {
  std::vector<BoundingPair> out;
  for (const auto& c : LpmComponents(p)) out.push_back(CanonicalForm(c.pair));
  std::sort(out.begin(), out.end());
  return out;
}

Verdict RecognitionRoundTrip() {
  Verdict v;
  const auto start = Clock::now();
  Rng rng(20240501);
  const int cases = 600;
  for (int trial = 0; trial < cases; ++trial) {
    const BoundingPair p = testing::RandomPair(rng, 1, 12);
    const SetSystem s = testing::Permuted(
        ToSetSystem(p), testing::RandomPermutation(rng, p.size()));
    const RecognitionOutcome o = Recognize(s);
    if (!o.accepted) {
      v.Check(false, "rejected " + p.ToString());
      continue;
    }
    std::vector<BoundingPair> forms;
    for (const auto& c : o.components) forms.push_back(c.pair);
    v.Check(forms == ComponentForms(p), "forms differ " + p.ToString());
  }
  const double t = Seconds(start);
  v.Check(t < 30.0, "runtime " + std::to_string(t) + " s");
  v.detail = std::to_string(cases) + " shuffled pairs, <= 12 elements";
  return v;
}

// Every set an interval in the given order.
bool IntervalsInNaturalOrder(const SetSystem& s) {
  for (const auto& set : s.sets()) {
    if (!set.empty() && set.back() - set.front() + 1 !=
                            static_cast<int>(set.size())) {
      return false;
    }
  }
  return true;
}

Verdict RecognitionCompleteness() {
  Verdict v;
  Rng rng(8128);
  const testing::LpmCatalog catalog(8);
  int cases = 0;
  int accepted = 0;
  int literal = 0;
  while (cases < 2400) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int sets = 3 + static_cast<int>(rng() % 2);
    const double density = 0.45 + 0.05 * static_cast<double>(rng() % 3);
    const SetSystem s = testing::RandomSystem(rng, n, sets, density);
    if (IntervalsInNaturalOrder(s)) continue;
    ++cases;
    const RankTable t = RankTableFromSystem(s);
    bool expected;
    if (n <= 7) {
      expected = testing::LpmUnderSomeOrdering(t);
      ++literal;
    } else {
      expected = catalog.ContainsIsomorphic(t);
    }
    const bool got = Recognize(s).accepted;
    accepted += got;
    v.Check(got == expected, "case " + std::to_string(cases));
  }
  v.detail = std::to_string(cases) + " systems on 4..8 elements (" +
             std::to_string(accepted) + " accepted, " +
             std::to_string(cases - accepted) + " rejected; " +
             std::to_string(literal) +
             " against all orderings, the rest against the LPM catalog)";
  return v;
}

Verdict CircuitIntervals() {
  Verdict v;
  Rng rng(1001);
  for (int trial = 0; trial < 200; ++trial) {
    const BoundingPair p = testing::RandomPair(rng, 1, 12);
    std::vector<Mask> circuits;
    for (const ElementSet& c : Circuits(p)) circuits.push_back(M(c));
    v.Check(circuits == BruteCircuits(ToRankTable(p)), p.ToString());
  }
  v.detail = "200 random pairs, <= 12 elements";
  return v;
}

Verdict FlatIntervals() {
  Verdict v;
  Rng rng(1002);
  for (int trial = 0; trial < 200; ++trial) {
    const BoundingPair p = testing::RandomConnectedPair(rng, 2, 12);
    const RankTable t = ToRankTable(p);
    std::vector<Flat> fundamental;
    for (const SegmentFlat& f : ComputeFundamentalFlats(p).All()) {
      fundamental.push_back({M(f.segment.Elements()), f.rank});
    }
    std::sort(fundamental.begin(), fundamental.end(),
              [](const Flat& a, const Flat& b) {
                return SizeThenLexLess(a.flat, b.flat);
              });
    v.Check(fundamental == BruteFundamentalFlats(t),
            "fundamental " + p.ToString());
    std::vector<Flat> connected;
    for (const IntervalFlat& f : ConnectedFlats(p)) {
      connected.push_back({M(f.flat.Elements()), f.rank});
    }
    std::vector<Flat> brute;
    for (const Flat& f : BruteConnectedFlats(t)) {
      if (f.flat != t.ground()) brute.push_back(f);
    }
    v.Check(connected == brute, "connected " + p.ToString());
  }
  v.detail = "200 random connected pairs, <= 12 elements";
  return v;
}

bool IsUniformPair(const BoundingPair& p) {
  const int m = p.nullity();
  const int r = p.rank();
  return p.lower().ToString() == std::string(m, 'E') + std::string(r, 'N') &&
         p.upper().ToString() == std::string(r, 'N') + std::string(m, 'E');
}

Verdict ConnectivityWitness() {
  Verdict v;
  Rng rng(1003);
  int checked = 0;
  while (checked < 300) {
    const BoundingPair p = testing::RandomConnectedPair(rng, 2, 10);
    if (IsUniformPair(p)) continue;
    ++checked;
    const RankTable t = ToRankTable(p);
    const ConnectivityResult k = Connectivity(p);
    v.Check(k.k == BruteConnectivity(t), "k " + p.ToString());
    if (!k.witness) {
      v.Check(false, "no witness " + p.ToString());
      continue;
    }
    const Mask side = M(k.witness->side);
    v.Check(IsExactSeparation(t, side, k.k), "separation " + p.ToString());
    bool fundamental = false;
    for (const Flat& f : BruteFundamentalFlats(t)) {
      fundamental = fundamental || f.flat == side ||
                    f.flat == (t.ground() & ~side);
    }
    v.Check(fundamental, "side not fundamental " + p.ToString());
  }
  int uniform = 0;
  for (int n = 1; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) {
      ++uniform;
      v.Check(UniformConnectivity(r, n) ==
                  BruteConnectivity(Construct(Uniform(r, n))),
              "U(" + std::to_string(r) + "," + std::to_string(n) + ")");
    }
  }
  v.detail = std::to_string(checked) +
             " non-uniform connected pairs, <= 10 elements; " +
             std::to_string(uniform) + " uniform matroids";
  return v;
}

Verdict DualitySuite() {
  Verdict v;
  long pairs = 0;
  for (int n = 0; n <= 10; ++n) {
    for (const BoundingPair& p : testing::AllPairs(n)) {
      ++pairs;
      const BoundingPair d = Dual(p);
      v.Check(Dual(d) == p, "involution " + p.ToString());
      v.Check(CountBases(d) == CountBases(p), "bases " + p.ToString());
      v.Check(Connectivity(d).k == Connectivity(p).k, "k " + p.ToString());
      for (int x = 1; x <= n; ++x) {
        v.Check(PathMinor(d, x, MinorKind::kContract) ==
                    Dual(PathMinor(p, x, MinorKind::kDelete)),
                "minor " + p.ToString());
        v.Check(PathMinor(d, x, MinorKind::kDelete) ==
                    Dual(PathMinor(p, x, MinorKind::kContract)),
                "minor " + p.ToString());
      }
      if (n <= 8) {
        v.Check(ToRankTable(d) == Dual(ToRankTable(p)),
                "table " + p.ToString());
      }
      if (n < 2 || !IsConnected(p)) continue;
      std::set<ElementSet> complements;
      for (const SegmentFlat& f : ComputeFundamentalFlats(p).All()) {
        ElementSet c;
        for (int x = 1; x <= n; ++x) {
          if (!f.segment.Contains(x)) c.push_back(x);
        }
        complements.insert(c);
      }
      std::set<ElementSet> dual_flats;
      for (const SegmentFlat& f : ComputeFundamentalFlats(d).All()) {
        dual_flats.insert(f.segment.Elements());
      }
      v.Check(dual_flats == complements, "fundamental " + p.ToString());
    }
  }
  v.detail = "all " + std::to_string(pairs) +
             " pairs on <= 10 elements (rank tables compared up to 8)";
  return v;
}

Verdict MaximalPresentations() {
  Verdict v;
  Rng rng(1008);
  int checked = 0;
  while (checked < 200) {
    const BoundingPair p = testing::RandomPair(rng, 1, 12);
    bool isthmus = false;
    for (int x = 1; x <= p.size(); ++x) isthmus = isthmus || IsIsthmus(p, x);
    if (isthmus || p.rank() == 0) continue;
    ++checked;
    const IntervalPresentation maximal = LpmMaximalPresentation(p);
    const SetSystem bondy = MaximalPresentation(ToSetSystem(p));
    v.Check(ToSetSystem(maximal, p.size()).sets() == bondy.sets(),
            "bondy " + p.ToString());
    v.Check(CheckCharint(maximal).ok, "charint rejects " + p.ToString());
  }
  // Exactly these: random interval families against the exhaustive set of
  // maximal presentations on [n], n the largest right end.
  std::map<int, std::set<IntervalPresentation>> known;
  for (int n = 1; n <= 8; ++n) {
    for (const BoundingPair& p : testing::AllPairs(n)) {
      bool isthmus = false;
      for (int x = 1; x <= n; ++x) isthmus = isthmus || IsIsthmus(p, x);
      if (isthmus || p.rank() == 0) continue;
      IntervalPresentation m = LpmMaximalPresentation(p);
      std::sort(m.begin(), m.end());
      known[n].insert(m);
    }
  }
  int families = 0;
  int positive = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int r = 1 + static_cast<int>(rng() % (n - 1));
    IntervalPresentation t;
    for (int i = 0; i < r; ++i) {
      int a = 1 + static_cast<int>(rng() % n);
      int b = 1 + static_cast<int>(rng() % n);
      if (a > b) std::swap(a, b);
      t.push_back({a, b});
    }
    std::sort(t.begin(), t.end());
    int hi = 0;
    for (const Interval& i : t) hi = std::max(hi, i.hi);
    ++families;
    const bool expected = known[hi].count(t) > 0;
    positive += expected;
    v.Check(CheckCharint(t).ok == expected, "family on [" +
                                                std::to_string(hi) + "]");
  }
  for (const auto& [n, set] : known) {
    for (const IntervalPresentation& t : set) {
      ++families;
      ++positive;
      v.Check(CheckCharint(t).ok, "known family rejected");
    }
  }
  v.detail = "200 isthmus-free pairs; charint exact on " +
             std::to_string(families) + " interval families (" +
             std::to_string(positive) + " maximal)";
  return v;
}

struct ExcludedMinorCase {
  CatalogEntry entry;
  TargetClass target;
};

Verdict ExcludedMinorCatalog() {
  Verdict v;
  const auto start = Clock::now();
  auto c = [](CatalogName name, std::vector<int> params = {}) {
    return Catalog(name, std::move(params));
  };
  std::vector<ExcludedMinorCase> cases;
  for (int n = 2; n <= 4; ++n) {
    cases.push_back({c(CatalogName::kPn, {n}), TargetClass::kGeneralizedCatalan});
  }
  for (const CatalogEntry& e :
       {c(CatalogName::kAn, {3}), c(CatalogName::kAn, {4}),
        c(CatalogName::kBnk, {2, 2}), c(CatalogName::kBnk, {3, 2}),
        c(CatalogName::kCnk, {4, 2}), c(CatalogName::kCnk, {5, 2}),
        c(CatalogName::kDn, {3}), c(CatalogName::kDn, {4}),
        c(CatalogName::kEn, {3}), c(CatalogName::kEn, {4}),
        c(CatalogName::kFn, {4}), c(CatalogName::kFn, {5}),
        c(CatalogName::kGn, {2}), c(CatalogName::kGn, {3}),
        c(CatalogName::kHn, {3}), c(CatalogName::kHn, {4}),
        c(CatalogName::kW3), c(CatalogName::kWhirl3),
        c(CatalogName::kSum3U12), c(CatalogName::kTruncSumU12)}) {
    cases.push_back({e, TargetClass::kNotch});
  }
  for (const ExcludedMinorCase& k : cases) {
    const ExcludedMinorReport r = VerifyExcludedMinor(k.entry, k.target);
    v.Check(r.passed(), k.entry.Title() + ": " +
                            (r.failures.empty() ? r.outside_reason
                                                : r.failures.front()));
  }
  // The lattice path members are recognized from some presentation.
  int recognized = 0;
  for (const CatalogEntry& e :
       {c(CatalogName::kDn, {3}), c(CatalogName::kEn, {3}),
        c(CatalogName::kSum3U12), c(CatalogName::kTruncSumU12),
        c(CatalogName::kFn, {4}), c(CatalogName::kFn, {5}),
        c(CatalogName::kGn, {2}), c(CatalogName::kGn, {3}),
        c(CatalogName::kHn, {3}), c(CatalogName::kHn, {4})}) {
    const RankTable t = e.Table();
    const auto presentation = FindTransversalPresentation(t);
    if (!presentation) {
      v.Check(false, e.Title() + " has no presentation");
      continue;
    }
    const RecognitionOutcome o = Recognize(*presentation);
    const bool ok = o.accepted && IsIsomorphic(ToRankTable(o.Pair()), t);
    v.Check(ok, e.Title() + " not recognized");
    recognized += ok;
  }
  const double t = Seconds(start);
  v.Check(t < 300.0, "runtime " + std::to_string(t) + " s");
  v.detail = std::to_string(cases.size()) +
             " entries verified (P_2..P_4 against the generalized Catalan "
             "class, the rest against notch); " +
             std::to_string(recognized) + "/10 LPM members recognized";
  return v;
}

Verdict Relaxation() {
  Verdict v;
  int relaxed = 0;
  for (int n = 2; n <= 5; ++n) {
    const RankTable t = Catalog(CatalogName::kPn, {n}).Table();
    int found = 0;
    for (Mask h : BruteCircuits(t)) {
      if (!IsCircuitHyperplane(t, h)) continue;
      ++found;
      ++relaxed;
      v.Check(ChainCondition(Relax(t, h)), "P_" + std::to_string(n));
    }
    v.Check(found == 2, "P_" + std::to_string(n) + " circuit-hyperplanes");
  }
  Rng rng(1010);
  int cases = 0;
  int with_minor = 0;
  while (cases < 200) {
    RankTable t;
    if (cases % 2 == 0) {
      t = ToRankTable(testing::RandomConnectedPair(rng, 4, 9));
    } else {
      t = RankTableFromSystem(
          testing::RandomSystem(rng, 5 + cases % 5, 2 + cases % 3, 0.5));
    }
    if (t.size() < 2 || !IsConnected(t)) continue;
    ++cases;
    const bool minor = PnMinorTest(t, t.size() / 2);
    with_minor += minor;
    v.Check(minor != ChainCondition(t), "case " + std::to_string(cases));
  }
  v.detail = std::to_string(relaxed) + " relaxations of P_2..P_5; " +
             std::to_string(cases) + " connected tables <= 9 elements (" +
             std::to_string(with_minor) + " with a P_n minor)";
  return v;
}

Verdict PropertySuites(const std::vector<std::string>& binaries) {
  Verdict v;
  const auto start = Clock::now();
  if (binaries.empty()) {
    v.Check(false, "no test binaries given");
    return v;
  }
  for (const std::string& b : binaries) {
    const std::string cmd =
        "\"" + b + "\" --gtest_filter='*Properties*' --gtest_brief=1 "
        "> /dev/null 2>&1";
    v.Check(std::system(cmd.c_str()) == 0, b);
  }
  const double t = Seconds(start);
  v.Check(t < 600.0, "runtime " + std::to_string(t) + " s");
  std::ostringstream detail;
  detail.precision(1);
  detail << std::fixed << binaries.size() << " property suites in " << t
         << " s";
  v.detail = detail.str();
  return v;
}

}  // namespace
}  // namespace latpath

int main(int argc, char** argv) {
  using namespace latpath;
  const std::vector<std::string> binaries(argv + 1, argv + argc);
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Catalan counts", CatalanCounts},
      {"Recognition round-trip", RecognitionRoundTrip},
      {"Recognition completeness", RecognitionCompleteness},
      {"Circuits", CircuitIntervals},
      {"Flats", FlatIntervals},
      {"Connectivity", ConnectivityWitness},
      {"Duality suite", DualitySuite},
      {"Maximal presentations", MaximalPresentations},
      {"Excluded-minor catalog", ExcludedMinorCatalog},
      {"Relaxation", Relaxation},
      {"Invariant suites", [&] { return PropertySuites(binaries); }},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v.Check(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %2zu %-26s %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, v.detail.c_str(), Seconds(start));
    if (!v.ok) {
      std::printf("       %d failure(s), first: %s\n", v.failures,
                  v.first_failure.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
