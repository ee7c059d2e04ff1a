#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core/algebra.hpp"
#include "core/ranges.hpp"
#include "core/values.hpp"

namespace ftopa {

struct ParseError : std::runtime_error {
  int line = 0;
  explicit ParseError(const std::string& message, int line_number = 0)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + message
                               : message),
        line(line_number) {}
};

// One knowledge-base entry: the symbolic e-index used by algebra backends
// and the numeric value used by the real backend.
struct KbEntry {
  int symbol_index = 0;
  double real_value = 0.0;
};

// Priors and conditionals of the four-event smoke-alarm network: fire and
// tampering are root causes, smoke depends on fire alone, alarm on both.
struct KnowledgeBase {
  KbEntry fire;
  KbEntry tampering;
  KbEntry smoke_given_fire;
  KbEntry smoke_given_not_fire;
  KbEntry alarm_given_fire_tampering;
  KbEntry alarm_given_not_fire_tampering;
  KbEntry alarm_given_fire_not_tampering;
  KbEntry alarm_given_not_fire_not_tampering;
};

// Text format, one entry per line: `p(<event>|<conjunction>) = e<k> , <real>`
// with events fire/tampering/smoke/alarm, negation `~`, conjunction `&`.
// Blank lines and `#` comments are ignored. Throws ParseError with the
// offending line number.
KnowledgeBase parse_knowledge_base(std::string_view text);

const std::string& default_knowledge_base_text();
KnowledgeBase default_knowledge_base();

// A belief calculus: product, inverse and (multi-valued) division over some
// belief carrier, plus the unit and zero beliefs and the lift from a
// knowledge-base entry.
template <class C>
concept BeliefCalculus = requires(const C calc, const typename C::Belief b, const KbEntry e) {
  { calc.prod(b, b) } -> std::same_as<typename C::Belief>;
  { calc.inv(b) } -> std::same_as<typename C::Belief>;
  { calc.div(b, b) } -> std::same_as<typename C::Belief>;
  { calc.unit() } -> std::same_as<typename C::Belief>;
  { calc.zero() } -> std::same_as<typename C::Belief>;
  { calc.from_kb(e) } -> std::same_as<typename C::Belief>;
  { calc.in_carrier(b) } -> std::same_as<bool>;
};

// Beliefs are ranges over a fixed algebra; division is the range solution,
// so results can widen as they flow through an inference chain.
class RangeCalculus {
 public:
  using Belief = PRange;

  explicit RangeCalculus(const Algebra& alg) : alg_(&alg) {}

  const Algebra& algebra() const { return *alg_; }

  Belief prod(const Belief& a, const Belief& b) const { return range_product(*alg_, a, b); }
  Belief inv(const Belief& a) const { return range_inverse(*alg_, a); }
  Belief div(const Belief& a, const Belief& b) const { return range_solve(*alg_, a, b); }
  Belief unit() const { return Belief(PValue{1}); }
  Belief zero() const { return Belief(PValue{alg_->size()}); }

  Belief from_kb(const KbEntry& entry) const { return Belief(alg_->value(entry.symbol_index)); }
  bool in_carrier(const Belief&) const { return true; }

 private:
  const Algebra* alg_;
};

// Ordinary [0, 1] probabilities; the correctness oracle for the inference
// rules, since here the case chain reduces to plain addition.
class RealCalculus {
 public:
  using Belief = double;

  Belief prod(Belief a, Belief b) const { return a * b; }
  Belief inv(Belief a) const { return 1.0 - a; }
  Belief div(Belief a, Belief b) const {
    if (b == 0.0) throw std::domain_error("division by zero evidence");
    return a / b;
  }
  Belief unit() const { return 1.0; }
  Belief zero() const { return 0.0; }

  Belief from_kb(const KbEntry& entry) const { return entry.real_value; }
  bool in_carrier(Belief b) const { return b >= -kSlack && b <= 1.0 + kSlack; }

 private:
  static constexpr double kSlack = 1e-9;
};

// Bayes rule with the product evaluated before the division; the two
// operations do not commute over ranges, so the order is part of the
// contract.
template <BeliefCalculus C>
typename C::Belief bayes(const C& calc, const typename C::Belief& likelihood,
                         const typename C::Belief& prior, const typename C::Belief& evidence) {
  return calc.div(calc.prod(likelihood, prior), evidence);
}

// Combines the case products p(A & B_m | C) without addition: each factor
// f_m is the inverse of the m-th term divided by the running factor
// product, and the result is the inverse of the full factor product. On the
// real backend this telescopes to the exact sum of the terms.
template <BeliefCalculus C>
typename C::Belief sum_cases(const C& calc, const std::vector<typename C::Belief>& terms) {
  if (terms.empty()) throw std::invalid_argument("case combination needs at least one term");
  typename C::Belief factors = calc.inv(terms[0]);
  for (std::size_t m = 1; m < terms.size(); ++m) {
    factors = calc.prod(factors, calc.inv(calc.div(terms[m], factors)));
  }
  typename C::Belief result = calc.inv(factors);
  if (!calc.in_carrier(result)) {
    throw std::domain_error("case terms are inconsistent: combined belief leaves [0, 1]");
  }
  return result;
}

// Two-way split on B with the negated case leading.
template <BeliefCalculus C>
typename C::Belief cases2(const C& calc, const typename C::Belief& pa_given_b,
                          const typename C::Belief& pb,
                          const typename C::Belief& pa_given_not_b,
                          const typename C::Belief& pnot_b) {
  return sum_cases(calc, {calc.prod(pa_given_not_b, pnot_b), calc.prod(pa_given_b, pb)});
}

// The ten smoke-alarm query results; the first four are deductive
// (cause to effect), the rest abductive.
template <class Belief>
struct QueryReport {
  Belief smoke_given_fire;
  Belief alarm_given_fire;
  Belief smoke_given_tampering;
  Belief alarm_given_tampering;
  Belief fire_given_smoke;
  Belief fire_given_alarm;
  Belief fire_given_both;
  Belief tampering_given_smoke;
  Belief tampering_given_alarm;
  Belief tampering_given_both;
};

// Evaluates the ten queries with fixed derivation chains built from the
// rules above; marginals are always derived by cases, never assumed given.
// Case order within every chain: negated cases first. The four-way alarm
// marginal runs (~f&~t), (~f&t), (f&~t), (f&t). Tampering queries mirror
// the fire ones with the same marginal denominators.
template <BeliefCalculus C>
QueryReport<typename C::Belief> run_smoke_alarm(const C& calc, const KnowledgeBase& kb) {
  using B = typename C::Belief;

  const B p_f = calc.from_kb(kb.fire);
  const B p_t = calc.from_kb(kb.tampering);
  const B p_s_f = calc.from_kb(kb.smoke_given_fire);
  const B p_s_nf = calc.from_kb(kb.smoke_given_not_fire);
  const B p_a_ft = calc.from_kb(kb.alarm_given_fire_tampering);
  const B p_a_nft = calc.from_kb(kb.alarm_given_not_fire_tampering);
  const B p_a_fnt = calc.from_kb(kb.alarm_given_fire_not_tampering);
  const B p_a_nfnt = calc.from_kb(kb.alarm_given_not_fire_not_tampering);

  const B p_nf = calc.inv(p_f);
  const B p_nt = calc.inv(p_t);

  // deductive: case splits over the other parent (fire and tampering are
  // independent, so their priors stand in for the conditioned versions)
  const B alarm_given_fire = cases2(calc, p_a_ft, p_t, p_a_fnt, p_nt);
  const B smoke_given_tampering = cases2(calc, p_s_f, p_f, p_s_nf, p_nf);
  const B alarm_given_tampering = cases2(calc, p_a_ft, p_f, p_a_nft, p_nf);

  // marginals
  const B p_s = cases2(calc, p_s_f, p_f, p_s_nf, p_nf);
  const B p_a = sum_cases(
      calc, {calc.prod(calc.prod(p_a_nfnt, p_nf), p_nt), calc.prod(calc.prod(p_a_nft, p_nf), p_t),
             calc.prod(calc.prod(p_a_fnt, p_f), p_nt), calc.prod(calc.prod(p_a_ft, p_f), p_t)});

  // abductive, fire
  const B fire_given_smoke = bayes(calc, p_s_f, p_f, p_s);
  const B fire_given_alarm = bayes(calc, alarm_given_fire, p_f, p_a);
  // smoke is independent of alarm given fire, so p(s|f&a) = p(s|f)
  const B p_s_a = cases2(calc, p_s_f, fire_given_alarm, p_s_nf, calc.inv(fire_given_alarm));
  const B fire_given_both = bayes(calc, p_s_f, fire_given_alarm, p_s_a);

  // abductive, tampering: same shape with the roles of the causes swapped,
  // reusing the marginal chains above
  const B tampering_given_smoke = bayes(calc, smoke_given_tampering, p_t, p_s);
  const B tampering_given_alarm = bayes(calc, alarm_given_tampering, p_t, p_a);
  const B tampering_given_both = bayes(calc, smoke_given_tampering, tampering_given_alarm, p_s_a);

  return QueryReport<B>{p_s_f,
                        alarm_given_fire,
                        smoke_given_tampering,
                        alarm_given_tampering,
                        fire_given_smoke,
                        fire_given_alarm,
                        fire_given_both,
                        tampering_given_smoke,
                        tampering_given_alarm,
                        tampering_given_both};
}

}  // namespace ftopa
