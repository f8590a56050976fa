#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "nolag/series.hpp"
#include "nolag/smoothing.hpp"

namespace nolag {

struct ExprNode;

// Immutable description of a linear operator on sequences, built from base
// smoothers (identity, weighted MA, EMA) by composition, linear combination
// and polynomial application. Copies share structure.
//
// Evaluation is compositional: every stage applies its own warm-up rule to
// whatever its input is, so all input samples contribute to every output.
class OperatorExpr {
 public:
  struct Term;

  static OperatorExpr identity();
  static OperatorExpr weighted_ma(Weights w);
  static OperatorExpr ema(EmaParam param);
  // outer after inner.
  static OperatorExpr compose(OperatorExpr outer, OperatorExpr inner);
  // sum_i c_i * op_i. At least one term.
  static OperatorExpr lin_comb(std::vector<Term> terms);
  // sum_k a_k * operand^k with operand^0 the identity. At least one coefficient.
  static OperatorExpr poly(std::vector<double> coeffs, OperatorExpr operand);

  Series operator()(const Series& x) const;

  const ExprNode& node() const noexcept { return *node_; }

  // Number of leading output samples affected by warm-up. From this index
  // on the output is a fixed finite convolution of the input. nullopt when
  // the expression contains an EMA (infinite memory).
  std::optional<std::size_t> warmup() const;

 private:
  explicit OperatorExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const ExprNode> node_;
};

struct OperatorExpr::Term {
  double coefficient;
  OperatorExpr operand;
};

namespace expr {

struct Identity {};

struct WeightedMa {
  Weights weights;
};

struct Ema {
  EmaParam param;
};

struct Compose {
  OperatorExpr outer;
  OperatorExpr inner;
};

struct LinComb {
  std::vector<OperatorExpr::Term> terms;
};

struct Poly {
  std::vector<double> coeffs;  // a_0 .. a_d
  OperatorExpr operand;
};

}  // namespace expr

struct ExprNode {
  std::variant<expr::Identity, expr::WeightedMa, expr::Ema, expr::Compose, expr::LinComb, expr::Poly> value;
};

Series eval(const OperatorExpr& op, const Series& x);

}  // namespace nolag
