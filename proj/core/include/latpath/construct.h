#ifndef LATPATH_CONSTRUCT_H_
#define LATPATH_CONSTRUCT_H_

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "latpath/rank_table.h"
#include "latpath/subset.h"

namespace latpath {

struct ConstructionExpr;
using ExprPtr = std::shared_ptr<const ConstructionExpr>;

namespace expr {

struct Uniform {
  int rank;
  int size;
};
struct DirectSum {
  ExprPtr first;
  ExprPtr second;
};
struct Truncate {
  ExprPtr inner;
  int rank;
};
// New element appended last, in general position.
struct FreeExt {
  ExprPtr inner;
};
// New element appended last, parallel to `element` (0-based).
struct ParallelExt {
  ExprPtr inner;
  int element;
};
struct Dual {
  ExprPtr inner;
};
struct Relax {
  ExprPtr inner;
  Mask hyperplane;
};
// Rank-r paving matroid: a set has rank min(|X|, r-1) when it lies in a
// listed hyperplane and min(|X|, r) otherwise.
struct Paving {
  int rank;
  int size;
  std::vector<Mask> hyperplanes;
};

}  // namespace expr

struct ConstructionExpr {
  std::variant<expr::Uniform, expr::DirectSum, expr::Truncate, expr::FreeExt,
               expr::ParallelExt, expr::Dual, expr::Relax, expr::Paving>
      node;
};

ExprPtr Uniform(int rank, int size);
ExprPtr Sum(ExprPtr first, ExprPtr second);
ExprPtr Sum(const std::vector<ExprPtr>& parts);
ExprPtr TruncateTo(ExprPtr inner, int rank);
ExprPtr FreeExt(ExprPtr inner);
ExprPtr ParallelExt(ExprPtr inner, int element);
ExprPtr DualOf(ExprPtr inner);
ExprPtr Relax(ExprPtr inner, Mask hyperplane);
ExprPtr Paving(int rank, int size, std::vector<Mask> hyperplanes);

// Evaluates the expression. Throws InvalidRelaxationError,
// InvalidPavingError, DomainError on bad parameters and ResourceError above
// the brute-force cap.
RankTable Construct(const ConstructionExpr& e);
RankTable Construct(const ExprPtr& e);

// Human-readable term, e.g. "T3(U(2,3)+U(2,3))".
std::string Describe(const ConstructionExpr& e);

}  // namespace latpath

#endif  // LATPATH_CONSTRUCT_H_
