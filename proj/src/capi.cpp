#include "span2/span2.h"

#include <cstring>
#include <new>
#include <string>

#include "span2/coherence.hpp"
#include "span2/cospan.hpp"
#include "span2/errors.hpp"
#include "span2/json_io.hpp"

struct span2_value {
  span2::io::Value inner;
};

struct span2_reports {
  std::vector<span2::AxiomReport> inner;
};

namespace {

thread_local std::string g_last_error;

span2_status fail(span2_status status, const char* message) {
  g_last_error = message;
  return status;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Translates engine exceptions into status codes, preserving the message.
template <typename Fn>
span2_status guarded(Fn&& fn) {
  try {
    fn();
    return SPAN2_OK;
  } catch (const span2::NotComposable& e) {
    return fail(SPAN2_ERR_NOT_COMPOSABLE, e.what());
  } catch (const span2::CompositionMismatch& e) {
    return fail(SPAN2_ERR_NOT_COMPOSABLE, e.what());
  } catch (const span2::LimitTooLarge& e) {
    return fail(SPAN2_ERR_LIMIT_TOO_LARGE, e.what());
  } catch (const span2::CategoryError& e) {
    return fail(SPAN2_ERR_INVARIANT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(SPAN2_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(SPAN2_ERR_INTERNAL, e.what());
  }
}

std::string dump(const nlohmann::json& j, int indent) {
  std::string out = indent < 0 ? j.dump() : j.dump(indent);
  out.push_back('\n');
  return out;
}

}  // namespace

extern "C" {

const char* span2_status_name(span2_status status) {
  switch (status) {
    case SPAN2_OK:
      return "ok";
    case SPAN2_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SPAN2_ERR_PARSE:
      return "parse error";
    case SPAN2_ERR_INVARIANT:
      return "invariant violation";
    case SPAN2_ERR_NOT_COMPOSABLE:
      return "not composable";
    case SPAN2_ERR_LIMIT_TOO_LARGE:
      return "limit too large";
    case SPAN2_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* span2_last_error(void) { return g_last_error.c_str(); }

span2_status span2_value_parse(const char* json_text, span2_value** out) {
  if (json_text == nullptr || out == nullptr) {
    return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    auto j = nlohmann::json::parse(json_text);
    *out = new span2_value{span2::io::value_from_json(j)};
  });
}

void span2_value_free(span2_value* value) { delete value; }

const char* span2_value_kind(const span2_value* value) {
  if (value == nullptr) return "null";
  if (std::holds_alternative<span2::FinSpan>(value->inner)) return "span";
  if (std::holds_alternative<span2::Cospan>(value->inner)) return "cospan";
  return "two_cell";
}

span2_status span2_value_compose(const span2_value* a, const span2_value* b,
                                 span2_value** out) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    *out = new span2_value{span2::io::compose_values(a->inner, b->inner)};
  });
}

span2_status span2_value_to_json(const span2_value* value, int indent,
                                 char** out) {
  if (value == nullptr || out == nullptr) {
    return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = copy_string(dump(span2::io::to_json(value->inner), indent));
  });
}

span2_status span2_value_to_text(const span2_value* value, char** out) {
  if (value == nullptr || out == nullptr) {
    return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded(
      [&] { *out = copy_string(span2::io::value_to_text(value->inner)); });
}

span2_status span2_limit_json(const char* diagram_json, uint64_t max_apex,
                              int indent, char** out) {
  if (diagram_json == nullptr || out == nullptr) {
    return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto diagram =
        span2::io::diagram_from_json(nlohmann::json::parse(diagram_json));
    span2::LimitResult lim = span2::limit(diagram, max_apex);
    *out = copy_string(dump(span2::io::to_json(lim), indent));
  });
}

span2_status span2_limit_text(const char* diagram_json, uint64_t max_apex,
                              char** out) {
  if (diagram_json == nullptr || out == nullptr) {
    return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto diagram =
        span2::io::diagram_from_json(nlohmann::json::parse(diagram_json));
    span2::LimitResult lim = span2::limit(diagram, max_apex);
    *out = copy_string(span2::io::limit_to_text(lim));
  });
}

span2_status span2_verify(uint64_t seed, uint32_t max_obj, uint32_t trials,
                          span2_reports** out) {
  if (out == nullptr) return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  if (trials == 0) return fail(SPAN2_ERR_INVALID_ARGUMENT, "trials must be >= 1");
  *out = nullptr;
  return guarded([&] {
    *out = new span2_reports{span2::verify_bicategory(seed, max_obj, trials)};
  });
}

span2_status span2_demo(uint64_t seed, uint32_t circles_in,
                        uint32_t circles_out, span2_reports** out) {
  if (out == nullptr) return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new span2_reports{
        span2::demo_cobordism(circles_in, circles_out, seed)};
  });
}

void span2_reports_free(span2_reports* reports) { delete reports; }

size_t span2_reports_count(const span2_reports* reports) {
  return reports == nullptr ? 0 : reports->inner.size();
}

int span2_reports_all_passed(const span2_reports* reports) {
  if (reports == nullptr) return 0;
  for (const auto& r : reports->inner) {
    if (!r.passed) return 0;
  }
  return 1;
}

span2_status span2_reports_to_json(const span2_reports* reports, int indent,
                                   char** out) {
  if (reports == nullptr || out == nullptr) {
    return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = copy_string(dump(span2::io::reports_to_json(reports->inner), indent));
  });
}

span2_status span2_reports_to_text(const span2_reports* reports, char** out) {
  if (reports == nullptr || out == nullptr) {
    return fail(SPAN2_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded(
      [&] { *out = copy_string(span2::io::reports_to_text(reports->inner)); });
}

const char* span2_report_law(const span2_reports* reports, size_t index) {
  return span2::law_name(reports->inner.at(index).law).data();
}

uint64_t span2_report_seed(const span2_reports* reports, size_t index) {
  return reports->inner.at(index).instance_seed;
}

uint32_t span2_report_trial(const span2_reports* reports, size_t index) {
  return reports->inner.at(index).trial;
}

int span2_report_passed(const span2_reports* reports, size_t index) {
  return reports->inner.at(index).passed ? 1 : 0;
}

const char* span2_report_evidence(const span2_reports* reports, size_t index) {
  return reports->inner.at(index).evidence.c_str();
}

void span2_string_free(char* text) { delete[] text; }

}  // extern "C"
