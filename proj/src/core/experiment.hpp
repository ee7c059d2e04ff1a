#pragma once

#include <vector>

#include "core/algebra.hpp"
#include "core/inference.hpp"

namespace ftopa {

// How an algebra behaves on the three abductive fire queries:
//   IdenticalSingleton - all three collapse to one single value
//   IdenticalRange     - all three are the same widened range
//   Mixed              - anything else
enum class FireQueryClass { IdenticalSingleton, IdenticalRange, Mixed };

char class_label(FireQueryClass cls);  // 'a' / 'b' / 'c'

struct ExperimentRow {
  AlgebraSpec spec;
  QueryReport<PRange> queries;
  FireQueryClass cls;
};

struct ExperimentReport {
  int n = 0;
  std::vector<ExperimentRow> rows;       // enumeration order
  QueryReport<double> real_model;

  int count(FireQueryClass cls) const;
};

FireQueryClass classify_fire_queries(const QueryReport<PRange>& queries);

// Runs the ten smoke-alarm queries over every legal algebra of size n and
// over the real model. Knowledge-base symbol indices must fit the size.
ExperimentReport run_experiment(int n, const KnowledgeBase& kb);

}  // namespace ftopa
