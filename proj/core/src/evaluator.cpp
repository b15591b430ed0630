#include <type_traits>

#include "krein/mcatalog.hpp"

namespace krein {

MEvaluator::MEvaluator(EvaluatorKind kind, Side side) : kind_(std::move(kind)), side_(side) {
  if (auto* n = std::get_if<NumericKind>(&kind_)) n->problem.side = side;
  if (auto* d = std::get_if<DecayingABKind>(&kind_)) d->problem.side = side;
  if (auto* p = std::get_if<PowerWeightKind>(&kind_)) power_constant(p->alpha);  // validates alpha
}

cplx MEvaluator::m(cplx lambda) const {
  return std::visit(
      [&](const auto& k) -> cplx {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, NumericKind>) {
          return m_numeric(k.problem, lambda, k.options).m;
        } else if constexpr (std::is_same_v<K, FreeKind>) {
          return cplx(0.0, 1.0) / sqrt_cut(lambda);
        } else if constexpr (std::is_same_v<K, PowerWeightKind>) {
          return m_power(k.alpha, lambda);
        } else if constexpr (std::is_same_v<K, ExampleQ0Kind>) {
          return m_example_q0(lambda);
        } else if constexpr (std::is_same_v<K, ExampleA1Kind>) {
          return m_example_A1(lambda);
        } else if constexpr (std::is_same_v<K, PeriodicKind>) {
          return m_periodic(k.data, lambda, side_);
        } else if constexpr (std::is_same_v<K, FiniteZoneKind>) {
          return m_finitezone(k.data, k.poly, lambda, side_);
        } else if constexpr (std::is_same_v<K, InfiniteZoneKind>) {
          return m_infzone_truncated(*k.truncation, lambda, side_);
        } else {
          return m_decaying_ab(k.problem, lambda, k.options);
        }
      },
      kind_);
}

cplx MEvaluator::M(cplx lambda) const {
  const double s = sign_of(side_);
  return s * m(s * lambda);
}

std::string MEvaluator::name() const {
  static const char* names[] = {"numeric",  "free",          "power_weight",
                                "example_q0", "example_a1",  "periodic",
                                "finite_zone", "infinite_zone", "decaying_ab"};
  return std::string(names[kind_.index()]) + (side_ == Side::Plus ? "+" : "-");
}

EvaluatorPair make_pair(const EvaluatorKind& kind) {
  return {MEvaluator(kind, Side::Plus), MEvaluator(kind, Side::Minus)};
}

EvaluatorPair make_pair(const EvaluatorKind& plus_kind, const EvaluatorKind& minus_kind) {
  return {MEvaluator(plus_kind, Side::Plus), MEvaluator(minus_kind, Side::Minus)};
}

}  // namespace krein
