#include "nolag/operator_expr.hpp"

#include <algorithm>
#include <cmath>

#include "nolag/error.hpp"

namespace nolag {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Index of the highest nonzero coefficient, or 0.
std::size_t degree(const std::vector<double>& coeffs) {
  std::size_t d = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0.0) {
      d = k;
    }
  }
  return d;
}

}  // namespace

OperatorExpr OperatorExpr::identity() {
  return OperatorExpr(std::make_shared<const ExprNode>(ExprNode{expr::Identity{}}));
}

OperatorExpr OperatorExpr::weighted_ma(Weights w) {
  return OperatorExpr(std::make_shared<const ExprNode>(ExprNode{expr::WeightedMa{std::move(w)}}));
}

OperatorExpr OperatorExpr::ema(EmaParam param) {
  return OperatorExpr(std::make_shared<const ExprNode>(ExprNode{expr::Ema{param}}));
}

OperatorExpr OperatorExpr::compose(OperatorExpr outer, OperatorExpr inner) {
  return OperatorExpr(
      std::make_shared<const ExprNode>(ExprNode{expr::Compose{std::move(outer), std::move(inner)}}));
}

OperatorExpr OperatorExpr::lin_comb(std::vector<Term> terms) {
  if (terms.empty()) {
    throw InvalidArgument("lin_comb: at least one term required");
  }
  for (const auto& t : terms) {
    if (!std::isfinite(t.coefficient)) {
      throw InvalidArgument("lin_comb: coefficients must be finite");
    }
  }
  return OperatorExpr(std::make_shared<const ExprNode>(ExprNode{expr::LinComb{std::move(terms)}}));
}

OperatorExpr OperatorExpr::poly(std::vector<double> coeffs, OperatorExpr operand) {
  if (coeffs.empty()) {
    throw InvalidArgument("poly: at least one coefficient required");
  }
  for (double a : coeffs) {
    if (!std::isfinite(a)) {
      throw InvalidArgument("poly: coefficients must be finite");
    }
  }
  return OperatorExpr(
      std::make_shared<const ExprNode>(ExprNode{expr::Poly{std::move(coeffs), std::move(operand)}}));
}

Series OperatorExpr::operator()(const Series& x) const { return eval(*this, x); }

std::optional<std::size_t> OperatorExpr::warmup() const {
  return std::visit(
      overloaded{
          [](const expr::Identity&) -> std::optional<std::size_t> { return 0; },
          [](const expr::WeightedMa& m) -> std::optional<std::size_t> { return m.weights.periods() - 1; },
          [](const expr::Ema&) -> std::optional<std::size_t> { return std::nullopt; },
          [](const expr::Compose& c) -> std::optional<std::size_t> {
            auto a = c.outer.warmup();
            auto b = c.inner.warmup();
            if (!a || !b) return std::nullopt;
            return *a + *b;
          },
          [](const expr::LinComb& l) -> std::optional<std::size_t> {
            std::size_t w = 0;
            for (const auto& t : l.terms) {
              if (t.coefficient == 0.0) continue;
              auto tw = t.operand.warmup();
              if (!tw) return std::nullopt;
              w = std::max(w, *tw);
            }
            return w;
          },
          [](const expr::Poly& p) -> std::optional<std::size_t> {
            const std::size_t d = degree(p.coeffs);
            if (d == 0) return 0;
            auto w = p.operand.warmup();
            if (!w) return std::nullopt;
            return d * *w;
          },
      },
      node_->value);
}

Series eval(const OperatorExpr& op, const Series& x) {
  return std::visit(
      overloaded{
          [&](const expr::Identity&) { return x; },
          [&](const expr::WeightedMa& m) { return weighted_ma(m.weights, x); },
          [&](const expr::Ema& e) { return ema(e.param, x); },
          [&](const expr::Compose& c) { return eval(c.outer, eval(c.inner, x)); },
          // Both combinations accumulate c_k (y_k - r) against a reference r and
          // add (sum c_k) r last. With coefficients summing to 1 a constant
          // input is then reproduced exactly.
          [&](const expr::LinComb& l) {
            const Series ref = eval(l.terms.front().operand, x);
            std::vector<double> acc(x.size(), 0.0);
            double total = l.terms.front().coefficient;
            for (std::size_t k = 1; k < l.terms.size(); ++k) {
              const auto& t = l.terms[k];
              total += t.coefficient;
              const Series y = eval(t.operand, x);
              for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] += t.coefficient * (y[i] - ref[i]);
              }
            }
            for (std::size_t i = 0; i < acc.size(); ++i) {
              acc[i] += total * ref[i];
            }
            return x.with_values(std::move(acc));
          },
          [&](const expr::Poly& p) {
            std::vector<double> acc(x.size(), 0.0);
            double total = p.coeffs[0];
            const std::size_t d = degree(p.coeffs);
            Series power = x;
            for (std::size_t k = 1; k <= d; ++k) {
              power = eval(p.operand, power);
              const double a = p.coeffs[k];
              if (a == 0.0) continue;
              total += a;
              for (std::size_t i = 0; i < acc.size(); ++i) {
                acc[i] += a * (power[i] - x[i]);
              }
            }
            for (std::size_t i = 0; i < acc.size(); ++i) {
              acc[i] += total * x[i];
            }
            return x.with_values(std::move(acc));
          },
      },
      op.node().value);
}

}  // namespace nolag
