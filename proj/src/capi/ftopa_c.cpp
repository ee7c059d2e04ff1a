#include "ftopa/ftopa.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "core/algebra.hpp"
#include "core/axioms.hpp"
#include "core/eval.hpp"
#include "core/experiment.hpp"
#include "core/inference.hpp"
#include "core/metrics.hpp"
#include "core/ranges.hpp"
#include "core/render.hpp"

struct ftopa_algebra {
  ftopa::Algebra impl;
};

struct ftopa_kb {
  ftopa::KnowledgeBase impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// runs `fn`, translating exceptions into status codes and the thread-local
// error message
template <class Fn>
ftopa_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ftopa::UnsupportedSizeError& e) {
    set_error(e.what());
    return FTOPA_ERROR_UNSUPPORTED;
  } catch (const ftopa::ParseError& e) {
    set_error(e.what());
    return FTOPA_ERROR_PARSE;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return FTOPA_ERROR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return FTOPA_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FTOPA_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return FTOPA_ERROR_INTERNAL;
  }
}

ftopa_status require(bool ok, const char* message) {
  if (ok) return FTOPA_OK;
  set_error(message);
  return FTOPA_ERROR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& text) {
  char* raw = static_cast<char*>(std::malloc(text.size() + 1));
  if (raw == nullptr) throw std::bad_alloc();
  std::memcpy(raw, text.c_str(), text.size() + 1);
  return raw;
}

ftopa_range to_c(const ftopa::PRange& r) { return ftopa_range{r.lower.index, r.upper.index}; }

ftopa::PRange from_c(const ftopa::Algebra& alg, ftopa_range r) {
  return ftopa::PRange(alg.value(r.lower), alg.value(r.upper));
}

}  // namespace

extern "C" {

const char* ftopa_version(void) { return "0.1.0"; }

const char* ftopa_last_error(void) { return g_last_error.c_str(); }

void ftopa_string_free(char* text) { std::free(text); }

ftopa_status ftopa_algebra_create(int n, const int* idempotents, int count,
                                  ftopa_algebra** out) {
  if (ftopa_status s = require(out != nullptr, "out must not be NULL")) return s;
  if (ftopa_status s = require(idempotents != nullptr || count == 0,
                               "idempotents must not be NULL")) {
    return s;
  }
  if (ftopa_status s = require(count >= 0, "count must be nonnegative")) return s;
  return guarded([&] {
    ftopa::AlgebraSpec spec;
    spec.n = n;
    spec.idempotents.assign(idempotents, idempotents + count);
    *out = new ftopa_algebra{ftopa::Algebra(std::move(spec))};
    return FTOPA_OK;
  });
}

ftopa_status ftopa_algebra_parse(const char* short_form, ftopa_algebra** out) {
  if (ftopa_status s = require(short_form != nullptr && out != nullptr,
                               "short_form and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = new ftopa_algebra{ftopa::Algebra(ftopa::AlgebraSpec::parse_short_form(short_form))};
    return FTOPA_OK;
  });
}

void ftopa_algebra_destroy(ftopa_algebra* algebra) { delete algebra; }

int ftopa_algebra_size(const ftopa_algebra* algebra) {
  return algebra == nullptr ? 0 : algebra->impl.size();
}

ftopa_status ftopa_algebra_idempotents(const ftopa_algebra* algebra, int* out, int capacity,
                                       int* count) {
  if (ftopa_status s = require(algebra != nullptr && count != nullptr,
                               "algebra and count must not be NULL")) {
    return s;
  }
  return guarded([&] {
    const std::vector<int> idem = ftopa::idempotents_of(algebra->impl);
    *count = static_cast<int>(idem.size());
    if (out == nullptr) return FTOPA_OK;
    if (capacity < *count) {
      set_error("capacity " + std::to_string(capacity) + " below idempotent count " +
                std::to_string(*count));
      return FTOPA_ERROR_INVALID_ARGUMENT;
    }
    std::memcpy(out, idem.data(), idem.size() * sizeof(int));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_algebra_short_form(const ftopa_algebra* algebra, char** out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = copy_out(algebra->impl.spec().short_form());
    return FTOPA_OK;
  });
}

ftopa_status ftopa_product(const ftopa_algebra* algebra, int p, int q, int* out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = algebra->impl.product(algebra->impl.value(p), algebra->impl.value(q)).index;
    return FTOPA_OK;
  });
}

ftopa_status ftopa_inverse(const ftopa_algebra* algebra, int p, int* out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = algebra->impl.inverse(algebra->impl.value(p)).index;
    return FTOPA_OK;
  });
}

ftopa_status ftopa_solve(const ftopa_algebra* algebra, int p, int q, ftopa_range* out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = to_c(algebra->impl.solve(algebra->impl.value(p), algebra->impl.value(q)));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_range_product(const ftopa_algebra* algebra, ftopa_range a, ftopa_range b,
                                 ftopa_range* out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = to_c(ftopa::range_product(algebra->impl, from_c(algebra->impl, a),
                                     from_c(algebra->impl, b)));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_range_solve(const ftopa_algebra* algebra, ftopa_range numerator,
                               ftopa_range denominator, ftopa_range* out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = to_c(ftopa::range_solve(algebra->impl, from_c(algebra->impl, numerator),
                                   from_c(algebra->impl, denominator)));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_range_inverse(const ftopa_algebra* algebra, ftopa_range a, ftopa_range* out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = to_c(ftopa::range_inverse(algebra->impl, from_c(algebra->impl, a)));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_render_tables(const ftopa_algebra* algebra, char** out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = copy_out(ftopa::render_tables(algebra->impl));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_metrics_compute(const ftopa_algebra* algebra, ftopa_metrics* out) {
  if (ftopa_status s = require(algebra != nullptr && out != nullptr,
                               "algebra and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    const ftopa::MetricsRecord rec = ftopa::metrics_of(algebra->impl);
    out->ambiguity = rec.ambiguity;
    out->solution_cells = rec.solution_cells;
    out->relative_num = rec.relative_ambiguity.num;
    out->relative_den = rec.relative_ambiguity.den;
    out->denominator_indifference = rec.denominator_indifference;
    out->mobility = rec.mobility;
    return FTOPA_OK;
  });
}

ftopa_status ftopa_metrics_report_tsv(int n, char** out) {
  if (ftopa_status s = require(out != nullptr, "out must not be NULL")) return s;
  return guarded([&] {
    *out = copy_out(ftopa::render_metrics_tsv(n));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_verify_enumeration(int n, char** out_text, int* passed) {
  if (ftopa_status s = require(passed != nullptr, "passed must not be NULL")) return s;
  return guarded([&] {
    const ftopa::UniquenessCheck check = ftopa::verify_uniqueness(n);
    *passed = check.passed() ? 1 : 0;
    if (out_text != nullptr) *out_text = copy_out(ftopa::render_uniqueness(check));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_eval(const ftopa_algebra* algebra, const char* expression, char** out) {
  if (ftopa_status s = require(algebra != nullptr && expression != nullptr && out != nullptr,
                               "algebra, expression and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = copy_out(ftopa::to_string(ftopa::eval_expression(algebra->impl, expression)));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_kb_parse(const char* text, ftopa_kb** out) {
  if (ftopa_status s = require(text != nullptr && out != nullptr,
                               "text and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = new ftopa_kb{ftopa::parse_knowledge_base(text)};
    return FTOPA_OK;
  });
}

ftopa_status ftopa_kb_default(ftopa_kb** out) {
  if (ftopa_status s = require(out != nullptr, "out must not be NULL")) return s;
  return guarded([&] {
    *out = new ftopa_kb{ftopa::default_knowledge_base()};
    return FTOPA_OK;
  });
}

void ftopa_kb_destroy(ftopa_kb* kb) { delete kb; }

ftopa_status ftopa_experiment_tsv(int n, const ftopa_kb* kb, char** out) {
  if (ftopa_status s = require(kb != nullptr && out != nullptr,
                               "kb and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = copy_out(ftopa::render_experiment_tsv(ftopa::run_experiment(n, kb->impl)));
    return FTOPA_OK;
  });
}

ftopa_status ftopa_experiment_text(int n, const ftopa_kb* kb, char** out) {
  if (ftopa_status s = require(kb != nullptr && out != nullptr,
                               "kb and out must not be NULL")) {
    return s;
  }
  return guarded([&] {
    *out = copy_out(ftopa::render_experiment_text(ftopa::run_experiment(n, kb->impl)));
    return FTOPA_OK;
  });
}

}  // extern "C"
