#include "core/experiment.hpp"

#include <algorithm>

namespace ftopa {

char class_label(FireQueryClass cls) {
  switch (cls) {
    case FireQueryClass::IdenticalSingleton:
      return 'a';
    case FireQueryClass::IdenticalRange:
      return 'b';
    case FireQueryClass::Mixed:
      return 'c';
  }
  return '?';
}

int ExperimentReport::count(FireQueryClass cls) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [&](const ExperimentRow& r) { return r.cls == cls; }));
}

FireQueryClass classify_fire_queries(const QueryReport<PRange>& q) {
  if (q.fire_given_smoke == q.fire_given_alarm && q.fire_given_alarm == q.fire_given_both) {
    return q.fire_given_smoke.singleton() ? FireQueryClass::IdenticalSingleton
                                          : FireQueryClass::IdenticalRange;
  }
  return FireQueryClass::Mixed;
}

ExperimentReport run_experiment(int n, const KnowledgeBase& kb) {
  for (const KbEntry* entry :
       {&kb.fire, &kb.tampering, &kb.smoke_given_fire, &kb.smoke_given_not_fire,
        &kb.alarm_given_fire_tampering, &kb.alarm_given_not_fire_tampering,
        &kb.alarm_given_fire_not_tampering, &kb.alarm_given_not_fire_not_tampering}) {
    if (entry->symbol_index < 1 || entry->symbol_index > n) {
      throw std::invalid_argument("knowledge-base index e" +
                                  std::to_string(entry->symbol_index) +
                                  " does not fit an algebra of size " + std::to_string(n));
    }
  }

  ExperimentReport report;
  report.n = n;
  for (AlgebraSpec& spec : enumerate_algebras(n)) {
    Algebra alg(spec);
    RangeCalculus calc(alg);
    QueryReport<PRange> queries = run_smoke_alarm(calc, kb);
    FireQueryClass cls = classify_fire_queries(queries);
    report.rows.push_back(ExperimentRow{std::move(spec), std::move(queries), cls});
  }
  report.real_model = run_smoke_alarm(RealCalculus{}, kb);
  return report;
}

}  // namespace ftopa
