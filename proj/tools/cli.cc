#include "cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latpath/brute.h"
#include "latpath/classes.h"
#include "latpath/errors.h"
#include "latpath/lpm.h"
#include "latpath/rank_table.h"
#include "latpath/recognition.h"

namespace latpath::cli {
namespace {

using json = nlohmann::json;

std::string LabelOf(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw DomainError("ground entries and set members must be strings or "
                    "integers, got " + v.dump());
}

std::string ReadAll(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// FILE or "-" for standard input.
std::string ReadSource(const std::string& path, std::istream& in) {
  if (path == "-") return ReadAll(in);
  std::ifstream file(path);
  if (!file) throw DomainError("cannot open '" + path + "'");
  return ReadAll(file);
}

int ParseInt(const std::string& text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DomainError(std::string("invalid ") + what + " '" + text + "'");
  }
  return value;
}

// A set of input elements (0-based), printed through labels.
using Elements = std::vector<int>;

struct Info {
  bool lpm = true;
  int size = 0;
  int rank = 0;
  Elements loops;
  Elements isthmuses;
  int components = 0;
  int connectivity = 0;
  std::vector<Elements> fundamental;
  std::vector<Elements> connected;
  BigInt bases;
};

void Normalize(std::vector<Elements>& sets) {
  for (Elements& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end(), [](const Elements& a, const Elements& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

// `order[p-1]` is the input element at position p of the pair.
Info InfoFromPair(const BoundingPair& pair, const std::vector<int>& order) {
  auto map = [&](int position) { return order[position - 1]; };
  auto span = [&](int lo, int hi) {
    Elements out;
    for (int p = lo; p <= hi; ++p) out.push_back(map(p));
    return out;
  };
  Info info;
  info.size = pair.size();
  info.rank = pair.rank();
  for (int p = 1; p <= pair.size(); ++p) {
    if (IsLoop(pair, p)) info.loops.push_back(map(p));
    if (IsIsthmus(pair, p)) info.isthmuses.push_back(map(p));
  }
  std::sort(info.loops.begin(), info.loops.end());
  std::sort(info.isthmuses.begin(), info.isthmuses.end());
  const auto parts = LpmComponents(pair);
  info.components = static_cast<int>(parts.size());
  info.connectivity = Connectivity(pair).k;
  for (const PairComponent& c : parts) {
    if (c.pair.size() < 2) continue;
    for (const SegmentFlat& f : ComputeFundamentalFlats(c.pair).All()) {
      info.fundamental.push_back(
          span(c.offset + f.segment.lo, c.offset + f.segment.hi));
    }
    for (const IntervalFlat& f : ConnectedFlats(c.pair)) {
      info.connected.push_back(span(c.offset + f.flat.lo, c.offset + f.flat.hi));
    }
    if (parts.size() > 1) {
      info.connected.push_back(span(c.offset + 1, c.offset + c.pair.size()));
    }
  }
  Normalize(info.fundamental);
  Normalize(info.connected);
  info.bases = CountBases(pair);
  return info;
}

Elements Unmask(Mask m, const std::vector<int>& index) {
  Elements out;
  for (int e : MaskElements(m)) out.push_back(index[e]);
  return out;
}

// Brute-force fallback for systems that are not lattice path matroids.
Info InfoFromTable(const RankTable& table) {
  Info info;
  info.lpm = false;
  info.size = table.size();
  info.rank = table.rank();
  Mask loops = 0;
  for (int x = 0; x < table.size(); ++x) {
    if (table.Rank(Bit(x)) == 0) {
      loops |= Bit(x);
      info.loops.push_back(x);
    } else if (table.Rank(table.ground() & ~Bit(x)) < table.rank()) {
      info.isthmuses.push_back(x);
    }
  }
  info.components = static_cast<int>(BruteComponents(table).size());
  info.connectivity = BruteConnectivity(table);
  const Mask kept = table.ground() & ~loops;
  const std::vector<int> index = MaskElements(kept);
  const RankTable loopless = Restrict(table, kept);
  for (const Flat& f : BruteConnectedFlats(loopless)) {
    if (PopCount(f.flat) >= 2 && f.flat != loopless.ground()) {
      info.connected.push_back(Unmask(f.flat, index));
    }
  }
  for (Mask c : BruteComponents(loopless)) {
    if (PopCount(c) < 2) continue;
    const std::vector<int> inner = MaskElements(c);
    for (const Flat& f : BruteFundamentalFlats(Restrict(loopless, c))) {
      Elements s;
      for (int e : MaskElements(f.flat)) s.push_back(index[inner[e]]);
      info.fundamental.push_back(std::move(s));
    }
  }
  Normalize(info.fundamental);
  Normalize(info.connected);
  info.bases = BruteBasisCount(table);
  return info;
}

std::string SetText(const Elements& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += labels[s[i]];
  }
  return out + "}";
}

std::string SetsText(const std::vector<Elements>& sets,
                     const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += " ";
    out += SetText(sets[i], labels);
  }
  return out;
}

std::string ListText(const std::vector<int>& elements,
                     const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ",";
    out += labels[elements[i]];
  }
  return out;
}

void PrintInfo(const Info& info, const std::vector<std::string>& labels,
               std::ostream& out) {
  out << "lpm=" << (info.lpm ? "true" : "false") << "\n";
  out << "size=" << info.size << "\n";
  out << "rank=" << info.rank << "\n";
  out << "nullity=" << info.size - info.rank << "\n";
  out << "loops=" << SetText(info.loops, labels) << "\n";
  out << "isthmuses=" << SetText(info.isthmuses, labels) << "\n";
  out << "components=" << info.components << "\n";
  out << "connectivity=";
  if (info.connectivity == kInfiniteConnectivity) {
    out << "inf\n";
  } else {
    out << info.connectivity << "\n";
  }
  out << "fundamental_flats=" << SetsText(info.fundamental, labels) << "\n";
  out << "connected_flats=" << SetsText(info.connected, labels) << "\n";
  out << "bases=" << info.bases.str() << "\n";
}

std::vector<std::string> DefaultLabels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<int> Identity(int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// One of --pair or --system, shared by the subcommands.
struct Input {
  std::vector<std::string> pair;
  std::string pair_from;
  std::string system;

  void Register(CLI::App* app, bool system_allowed) {
    app->add_option("--pair", pair,
                    "bounding paths as two words over {E,N}, lower first")
        ->expected(2)
        ->allow_extra_args(false);
    app->add_option("--pair-from", pair_from,
                    "read the two words from FILE, or '-' for standard input");
    if (system_allowed) {
      app->add_option("--system", system,
                      "set system document (JSON), or '-' for standard input");
    }
  }

  bool has_pair() const { return !pair.empty() || !pair_from.empty(); }
  bool has_system() const { return !system.empty(); }
  bool uses_stdin() const { return pair_from == "-" || system == "-"; }

  BoundingPair Pair(std::istream& in) const {
    if (!pair.empty() && !pair_from.empty()) {
      throw DomainError("give only one of --pair, --pair-from");
    }
    if (!pair_from.empty()) return ParsePairText(ReadSource(pair_from, in));
    return BoundingPair::Parse(pair[0], pair[1]);
  }

  SetSystem System(std::istream& in) const {
    return ParseSystemDoc(ReadSource(system, in));
  }
};

void RequireOne(const Input& input, bool allow_catalog = false,
                bool has_catalog = false) {
  const int given = input.has_pair() + input.has_system() + has_catalog;
  if (given != 1) {
    throw DomainError(allow_catalog
                          ? "give exactly one of --pair, --system, --catalog"
                          : "give exactly one of --pair, --system");
  }
}

void CmdInfo(const Input& input, std::istream& in, std::ostream& out) {
  RequireOne(input);
  if (input.has_pair()) {
    const BoundingPair pair = input.Pair(in);
    PrintInfo(InfoFromPair(pair, Identity(pair.size())),
              DefaultLabels(pair.size()), out);
    return;
  }
  const SetSystem system = input.System(in);
  const RecognitionOutcome outcome = Recognize(system);
  if (outcome.accepted) {
    PrintInfo(InfoFromPair(outcome.Pair(), outcome.Ordering()),
              system.labels(), out);
  } else {
    PrintInfo(InfoFromTable(RankTableFromSystem(system)), system.labels(),
              out);
  }
}

void PrintPair(const BoundingPair& pair, std::ostream& out) {
  out << pair.lower().ToString() << " " << pair.upper().ToString() << "\n";
}

int CmdRecognize(const Input& input, std::istream& in, std::ostream& out) {
  if (input.has_pair() || !input.has_system()) {
    throw DomainError("recognize needs --system");
  }
  const SetSystem system = input.System(in);
  const RecognitionOutcome outcome = Recognize(system);
  const auto& labels = system.labels();
  if (!outcome.accepted) {
    const Rejection& r = *outcome.rejection;
    out << "result=rejected\n";
    out << "step=" << r.step << "\n";
    out << "component=" << r.component + 1 << "\n";
    out << "elements=" << ListText(r.elements, labels) << "\n";
    out << "reason=" << r.reason << "\n";
    return kRejected;
  }
  out << "result=accepted\n";
  out << "components=" << outcome.components.size() << "\n";
  for (size_t i = 0; i < outcome.components.size(); ++i) {
    const RecognizedComponent& c = outcome.components[i];
    out << "component." << i + 1 << ".ordering="
        << ListText(c.ordering, labels) << "\n";
    out << "component." << i + 1 << ".pair=" << c.pair.lower().ToString()
        << " " << c.pair.upper().ToString() << "\n";
  }
  const BoundingPair pair = outcome.Pair();
  out << "ordering=" << ListText(outcome.Ordering(), labels) << "\n";
  out << "pair=" << pair.lower().ToString() << " " << pair.upper().ToString()
      << "\n";
  return kOk;
}

int ElementArg(const std::vector<std::string>& args, size_t i,
               const std::string& op) {
  if (i >= args.size()) throw DomainError(op + " needs an element");
  return ParseInt(args[i], "element");
}

void CmdTransform(const Input& input, const std::string& op,
                  const std::vector<std::string>& args, std::istream& in,
                  std::ostream& out) {
  if (!input.has_pair()) {
    throw DomainError("transform needs --pair or --pair-from");
  }
  const BoundingPair pair = input.Pair(in);
  auto arity = [&](size_t n) {
    if (args.size() != n) {
      throw DomainError(op + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  if (op == "dual") {
    arity(0);
    PrintPair(Dual(pair), out);
  } else if (op == "delete" || op == "contract") {
    arity(1);
    const int x = ElementArg(args, 0, op);
    PrintPair(PathMinor(pair, x,
                        op == "delete" ? MinorKind::kDelete
                                       : MinorKind::kContract),
              out);
  } else if (op == "sum") {
    arity(1);
    if (args[0] == "-" && input.uses_stdin()) {
      throw DomainError("standard input cannot supply both pairs");
    }
    const BoundingPair other = ParsePairText(ReadSource(args[0], in));
    PrintPair(DirectSum(std::vector{pair, other}), out);
  } else if (op == "restrict") {
    arity(2);
    PrintPair(RestrictInterval(pair, ElementArg(args, 0, op),
                               ElementArg(args, 1, op)),
              out);
  } else if (op == "canonical") {
    arity(0);
    PrintPair(CanonicalForm(pair), out);
  } else if (op == "rotate") {
    arity(0);
    PrintPair(Rotate(pair), out);
  } else if (op == "presentation") {
    arity(0);
    out << SystemDocJson(ToSetSystem(pair)) << "\n";
  } else {
    throw DomainError("unknown transform '" + op + "'");
  }
}

std::string_view Bool(bool b) { return b ? "true" : "false"; }

TargetClass ParseTarget(const std::string& text) {
  if (text == "notch") return TargetClass::kNotch;
  if (text == "catalan") return TargetClass::kGeneralizedCatalan;
  if (text == "lpm-notch") return TargetClass::kLpmAndNotch;
  throw DomainError("unknown target class '" + text + "'");
}

std::string_view TargetText(TargetClass t) {
  switch (t) {
    case TargetClass::kNotch:
      return "notch";
    case TargetClass::kGeneralizedCatalan:
      return "catalan";
    case TargetClass::kLpmAndNotch:
      return "lpm-notch";
  }
  return "?";
}

void PrintPairClasses(const BoundingPair& pair, std::ostream& out) {
  out << "lpm=true\n";
  out << "catalan=" << Bool(IsGeneralizedCatalan(pair)) << "\n";
  out << "notch=" << Bool(IsNotch(pair)) << "\n";
}

void PrintNotLpm(std::ostream& out) {
  out << "lpm=false\ncatalan=false\nnotch=false\n";
}

int CmdClass(const Input& input, const std::vector<std::string>& catalog,
             bool verify, const std::string& target, std::istream& in,
             std::ostream& out) {
  RequireOne(input, true, !catalog.empty());
  if (verify && catalog.empty()) {
    throw DomainError("--verify applies to --catalog entries");
  }
  if (input.has_pair()) {
    PrintPairClasses(input.Pair(in), out);
    return kOk;
  }
  if (input.has_system()) {
    const RecognitionOutcome outcome = Recognize(input.System(in));
    if (outcome.accepted) {
      PrintPairClasses(outcome.Pair(), out);
    } else {
      PrintNotLpm(out);
    }
    return kOk;
  }
  const CatalogName name = ParseCatalogName(catalog[0]);
  std::vector<int> params;
  for (size_t i = 1; i < catalog.size(); ++i) {
    params.push_back(ParseInt(catalog[i], "parameter"));
  }
  const CatalogEntry entry = Catalog(name, params);
  out << "entry=" << entry.Title() << "\n";
  if (entry.placeholder) {
    out << "status=unresolved\n";
    if (verify) throw DomainError(entry.Title() + " cannot be verified");
    return kOk;
  }
  const RankTable table = entry.Table();
  if (entry.pair) {
    out << "pair=" << entry.pair->lower().ToString() << " "
        << entry.pair->upper().ToString() << "\n";
  }
  if (const auto pair = PairFromTable(table)) {
    PrintPairClasses(*pair, out);
  } else {
    PrintNotLpm(out);
  }
  if (!verify) return kOk;
  const TargetClass cls =
      !target.empty() ? ParseTarget(target)
      : name == CatalogName::kPn ? TargetClass::kGeneralizedCatalan
                                 : TargetClass::kNotch;
  const ExcludedMinorReport report = VerifyExcludedMinor(entry, cls);
  out << "target=" << TargetText(cls) << "\n";
  out << "outside=" << Bool(report.outside) << "\n";
  out << "outside_reason=" << report.outside_reason << "\n";
  out << "minors_inside=" << Bool(report.minors_inside) << "\n";
  for (const std::string& f : report.failures) out << "failure=" << f << "\n";
  out << "verified=" << Bool(report.passed()) << "\n";
  return report.passed() ? kOk : kRejected;
}

struct ListedName {
  CatalogName name;
  const char* params;
  const char* description;
};

constexpr ListedName kListing[] = {
    {CatalogName::kMn, "n>=1", "Catalan matroid M[E^n N^n, (EN)^n]"},
    {CatalogName::kPn, "n>=2", "T_n(U_{n-1,n} + U_{n-1,n})"},
    {CatalogName::kW3, "", "rank-3 wheel"},
    {CatalogName::kWhirl3, "", "rank-3 whirl"},
    {CatalogName::kAn, "n>=3", "rank-n paving, two circuit-hyperplanes"},
    {CatalogName::kBnk, "n k, 2<=k<=n", "T_n(U_{n-1,n} + U_{n-1,n} + U_{k-1,k})"},
    {CatalogName::kCnk, "N k, 2<=k<=N-k", "dual of B_{N-k,k}"},
    {CatalogName::kDn, "n>=3", "free extension of T_{n-1}(U_{n-2,n-1} + U_{n-2,n-1}) + U_{1,1}"},
    {CatalogName::kEn, "n>=3", "dual of D_n"},
    {CatalogName::kFn, "n>=4", "T_n(U_{n-2,n-1} + U_{n-2,n-1})"},
    {CatalogName::kGn, "n>=2", "T_n(U_{n-1,n+1} + U_{n-1,n+1})"},
    {CatalogName::kHn, "n>=3", "T_n(U_{n-2,n-1} + U_{n-1,n+1})"},
    {CatalogName::kPrismDualPair, "1|2", "1: U_{4,6}, 2: the prism"},
    {CatalogName::kSum3U12, "", "U_{1,2} + U_{1,2} + U_{1,2}"},
    {CatalogName::kTruncSumU12, "", "T_2(U_{1,2} + U_{1,1} + U_{1,1}) + U_{1,2}"},
    {CatalogName::kOtherEx1, "", "placeholder, unresolved"},
    {CatalogName::kOtherEx2, "", "placeholder, unresolved"},
};

void CmdCatalogList(std::ostream& out) {
  for (const ListedName& l : kListing) {
    out << CatalogNameText(l.name) << "\tparams=" << l.params << "\t"
        << l.description << "\n";
  }
}

}  // namespace

SetSystem ParseSystemDoc(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ground") || !doc.contains("sets")) {
    throw DomainError("document needs keys 'ground' and 'sets'");
  }
  const json& ground = doc["ground"];
  const json& sets = doc["sets"];
  if (!ground.is_array() || !sets.is_array()) {
    throw DomainError("'ground' and 'sets' must be arrays");
  }
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const json& g : ground) {
    std::string label = LabelOf(g);
    if (!index.emplace(label, static_cast<int>(labels.size())).second) {
      throw DomainError("ground element '" + label + "' repeated");
    }
    labels.push_back(std::move(label));
  }
  std::vector<std::vector<int>> members;
  for (size_t j = 0; j < sets.size(); ++j) {
    if (!sets[j].is_array()) {
      throw DomainError("set " + std::to_string(j + 1) + " is not an array");
    }
    std::vector<int> set;
    for (const json& x : sets[j]) {
      const std::string label = LabelOf(x);
      const auto it = index.find(label);
      if (it == index.end()) {
        throw DomainError("set " + std::to_string(j + 1) + " member '" +
                          label + "' is not in the ground set");
      }
      if (std::find(set.begin(), set.end(), it->second) != set.end()) {
        throw DomainError("set " + std::to_string(j + 1) + " repeats '" +
                          label + "'");
      }
      set.push_back(it->second);
    }
    members.push_back(std::move(set));
  }
  return SetSystem(std::move(labels), std::move(members));
}

std::string SystemDocJson(const SetSystem& system) {
  auto value = [](const std::string& label) -> json {
    int n = 0;
    const auto* end = label.data() + label.size();
    const auto [ptr, ec] = std::from_chars(label.data(), end, n);
    if (ec == std::errc() && ptr == end && std::to_string(n) == label) return n;
    return label;
  };
  json doc;
  doc["ground"] = json::array();
  for (const std::string& l : system.labels()) doc["ground"].push_back(value(l));
  doc["sets"] = json::array();
  for (const auto& s : system.sets()) {
    json set = json::array();
    for (int x : s) set.push_back(value(system.label(x)));
    doc["sets"].push_back(std::move(set));
  }
  return doc.dump();
}

BoundingPair ParsePairText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.size() != 2) {
    throw DomainError("expected two path words, got " +
                      std::to_string(words.size()));
  }
  return BoundingPair::Parse(words[0], words[1]);
}

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice path matroids: structure, recognition, classes",
               "latpath"};
  app.require_subcommand(1);
  app.fallthrough();
  int cap = 0;
  app.add_option("--cap", cap, "brute-force ground-set cap")
      ->check(CLI::Range(1, kHardBruteCap));

  Input info_in, recog_in, trans_in, class_in;
  auto* info = app.add_subcommand("info", "structural report, one key per line");
  info_in.Register(info, true);
  auto* recognize =
      app.add_subcommand("recognize", "decide whether a system presents an LPM");
  recog_in.Register(recognize, true);
  auto* transform = app.add_subcommand("transform", "path surgery on a pair");
  trans_in.Register(transform, false);
  std::string op;
  std::vector<std::string> op_args;
  transform
      ->add_option("op", op,
                   "dual | delete X | contract X | sum FILE | restrict A B | "
                   "canonical | rotate | presentation")
      ->required();
  transform->add_option("args", op_args, "arguments of the operation");
  auto* klass = app.add_subcommand("class", "class membership");
  class_in.Register(klass, true);
  std::vector<std::string> catalog;
  bool verify = false;
  std::string target;
  klass->add_option("--catalog", catalog, "catalog NAME [PARAMS...]")
      ->expected(1, 3);
  klass->add_flag("--verify", verify, "run the excluded-minor checks");
  klass->add_option("--target", target,
                    "notch | catalan | lpm-notch (default: catalan for Pn, "
                    "notch otherwise)");
  auto* list = app.add_subcommand("catalog-list", "list catalog names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const int saved_cap = BruteCap();
  struct Restore {
    int cap;
    ~Restore() { SetBruteCap(cap); }
  } restore{saved_cap};
  try {
    if (cap > 0) SetBruteCap(cap);
    if (info->parsed()) {
      CmdInfo(info_in, in, out);
      return kOk;
    }
    if (recognize->parsed()) return CmdRecognize(recog_in, in, out);
    if (transform->parsed()) {
      CmdTransform(trans_in, op, op_args, in, out);
      return kOk;
    }
    if (klass->parsed()) {
      return CmdClass(class_in, catalog, verify, target, in, out);
    }
    if (list->parsed()) {
      CmdCatalogList(out);
      return kOk;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << " (raise --cap, at most "
        << kHardBruteCap << ")\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace latpath::cli
