#include "latpath/construct.h"

#include <algorithm>

#include "latpath/errors.h"

namespace latpath {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

ExprPtr Make(auto node) {
  return std::make_shared<const ConstructionExpr>(
      ConstructionExpr{std::move(node)});
}

const ConstructionExpr& Deref(const ExprPtr& p) {
  if (!p) throw DomainError("empty construction expression");
  return *p;
}

RankTable BuildPaving(const expr::Paving& p) {
  if (p.rank < 0 || p.size < 0 || p.rank > p.size) {
    throw InvalidPavingError("paving rank must lie in [0, size]");
  }
  CheckBruteCap(p.size, "paving construction");
  const Mask ground = FullMask(p.size);
  for (size_t i = 0; i < p.hyperplanes.size(); ++i) {
    const Mask h = p.hyperplanes[i];
    if (!IsSubset(h, ground)) {
      throw InvalidPavingError("hyperplane " + FormatMask(h) +
                               " leaves the ground set");
    }
    if (PopCount(h) >= p.size && p.size > 0) {
      throw InvalidPavingError("hyperplane " + FormatMask(h) +
                               " is the whole ground set");
    }
    for (size_t j = 0; j < i; ++j) {
      // Two hyperplanes sharing r-1 elements would both contain that set.
      if (PopCount(h & p.hyperplanes[j]) >= p.rank - 1) {
        throw InvalidPavingError("hyperplanes " + FormatMask(h) + " and " +
                                 FormatMask(p.hyperplanes[j]) + " share " +
                                 std::to_string(p.rank - 1) + " elements");
      }
    }
  }
  return RankTable::FromFunction(p.size, [&](Mask x) {
    const int size = PopCount(x);
    for (Mask h : p.hyperplanes) {
      if (IsSubset(x, h)) return std::min(size, p.rank - 1);
    }
    return std::min(size, p.rank);
  });
}

}  // namespace

ExprPtr Uniform(int rank, int size) { return Make(expr::Uniform{rank, size}); }

ExprPtr Sum(ExprPtr first, ExprPtr second) {
  return Make(expr::DirectSum{std::move(first), std::move(second)});
}

ExprPtr Sum(const std::vector<ExprPtr>& parts) {
  if (parts.empty()) return Uniform(0, 0);
  ExprPtr out = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) out = Sum(out, parts[i]);
  return out;
}

ExprPtr TruncateTo(ExprPtr inner, int rank) {
  return Make(expr::Truncate{std::move(inner), rank});
}

ExprPtr FreeExt(ExprPtr inner) { return Make(expr::FreeExt{std::move(inner)}); }

ExprPtr ParallelExt(ExprPtr inner, int element) {
  return Make(expr::ParallelExt{std::move(inner), element});
}

ExprPtr DualOf(ExprPtr inner) { return Make(expr::Dual{std::move(inner)}); }

ExprPtr Relax(ExprPtr inner, Mask hyperplane) {
  return Make(expr::Relax{std::move(inner), hyperplane});
}

ExprPtr Paving(int rank, int size, std::vector<Mask> hyperplanes) {
  return Make(expr::Paving{rank, size, std::move(hyperplanes)});
}

namespace {

RankTable Build(const ConstructionExpr& e);
RankTable Build(const ExprPtr& e) { return Build(Deref(e)); }

RankTable Build(const ConstructionExpr& e) {
  return std::visit(
      Overloaded{
          [](const expr::Uniform& u) {
            if (u.rank < 0 || u.size < 0 || u.rank > u.size) {
              throw DomainError("uniform matroid needs 0 <= r <= n");
            }
            return RankTable::FromFunction(u.size, [&](Mask x) {
              return std::min(PopCount(x), u.rank);
            });
          },
          [](const expr::DirectSum& s) {
            return DirectSum(Build(s.first), Build(s.second));
          },
          [](const expr::Truncate& t) {
            return Truncate(Build(t.inner), t.rank);
          },
          [](const expr::FreeExt& f) {
            return FreeExtension(Build(f.inner));
          },
          [](const expr::ParallelExt& p) {
            return ParallelExtension(Build(p.inner), p.element);
          },
          [](const expr::Dual& d) { return Dual(Build(d.inner)); },
          [](const expr::Relax& r) {
            return RelaxCircuitHyperplane(Build(r.inner), r.hyperplane);
          },
          [](const expr::Paving& p) { return BuildPaving(p); },
      },
      e.node);
}

}  // namespace

// Sums concatenate labels, so the result is relabeled 1..n.
RankTable Construct(const ConstructionExpr& e) {
  RankTable t = Build(e);
  return RankTable(t.size(), t.ranks());
}

RankTable Construct(const ExprPtr& e) { return Construct(Deref(e)); }

std::string Describe(const ConstructionExpr& e) {
  return std::visit(
      Overloaded{
          [](const expr::Uniform& u) {
            return "U(" + std::to_string(u.rank) + "," +
                   std::to_string(u.size) + ")";
          },
          [](const expr::DirectSum& s) {
            return "(" + Describe(Deref(s.first)) + "+" +
                   Describe(Deref(s.second)) + ")";
          },
          [](const expr::Truncate& t) {
            return "T" + std::to_string(t.rank) + Describe(Deref(t.inner));
          },
          [](const expr::FreeExt& f) {
            return "FreeExt(" + Describe(Deref(f.inner)) + ")";
          },
          [](const expr::ParallelExt& p) {
            return "ParallelExt(" + Describe(Deref(p.inner)) + "," +
                   std::to_string(p.element + 1) + ")";
          },
          [](const expr::Dual& d) {
            return "Dual(" + Describe(Deref(d.inner)) + ")";
          },
          [](const expr::Relax& r) {
            return "Relax(" + Describe(Deref(r.inner)) + "," +
                   FormatMask(r.hyperplane) + ")";
          },
          [](const expr::Paving& p) {
            std::string out = "Paving(" + std::to_string(p.rank) + "," +
                              std::to_string(p.size);
            for (Mask h : p.hyperplanes) out += "," + FormatMask(h);
            return out + ")";
          },
      },
      e.node);
}

}  // namespace latpath
