#include "twinlat.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "twinlat/errors.hpp"
#include "twinlat/json_io.hpp"

struct twinlat_session {
  std::string last_error;
  std::size_t ball_cap_override = 0;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

twinlat_status status_of(twinlat::ErrorCode c) {
  switch (c) {
    case twinlat::ErrorCode::InvalidInput: return TWINLAT_INVALID_INPUT;
    case twinlat::ErrorCode::NotPrenilpotent: return TWINLAT_INAPPLICABLE;
    case twinlat::ErrorCode::NotNilpotent: return TWINLAT_INAPPLICABLE;
    case twinlat::ErrorCode::NoNibblingFound: return TWINLAT_BUDGET_EXCEEDED;
    case twinlat::ErrorCode::BudgetExceeded: return TWINLAT_BUDGET_EXCEEDED;
    case twinlat::ErrorCode::Inapplicable: return TWINLAT_INAPPLICABLE;
    case twinlat::ErrorCode::Internal: return TWINLAT_INTERNAL;
  }
  return TWINLAT_INTERNAL;
}

twinlat::InputDocument parse_doc(const twinlat_session* s, const char* input_json) {
  if (!input_json)
    twinlat::fail(twinlat::ErrorCode::InvalidInput, "input document must not be null");
  twinlat::InputDocument doc = twinlat::parse_input_document(input_json);
  if (s->ball_cap_override) doc.budget.ball_cap = s->ball_cap_override;
  return doc;
}

template <typename Fn>
twinlat_status run(twinlat_session* s, char** out_json, Fn&& fn) {
  if (!s) return TWINLAT_USAGE;
  if (!out_json) {
    s->last_error = "out_json must not be null";
    return TWINLAT_USAGE;
  }
  *out_json = nullptr;
  s->last_error.clear();
  try {
    const std::string text = fn();
    *out_json = dup_string(text);
    if (!*out_json) {
      s->last_error = "out of memory";
      return TWINLAT_INTERNAL;
    }
    return TWINLAT_OK;
  } catch (const twinlat::Error& e) {
    s->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return TWINLAT_INTERNAL;
  }
}

} // namespace

extern "C" {

twinlat_session* twinlat_session_new(void) {
  try {
    return new twinlat_session();
  } catch (...) {
    return nullptr;
  }
}

void twinlat_session_free(twinlat_session* session) { delete session; }

twinlat_status twinlat_set_ball_cap(twinlat_session* session, size_t cap) {
  if (!session) return TWINLAT_USAGE;
  session->ball_cap_override = cap;
  return TWINLAT_OK;
}

twinlat_status twinlat_classify(twinlat_session* session, const char* input_json,
                                char** out_json) {
  return run(session, out_json, [&] {
    return twinlat::classify_report(parse_doc(session, input_json)).dump(2);
  });
}

twinlat_status twinlat_growth(twinlat_session* session, const char* input_json, int coeffs,
                              const char* eval_q, char** out_json) {
  return run(session, out_json, [&] {
    std::optional<int> c;
    if (coeffs >= 0) c = coeffs;
    std::optional<twinlat::BigInt> q;
    if (eval_q && *eval_q) {
      try {
        q = twinlat::BigInt(std::string(eval_q));
      } catch (const std::exception&) {
        twinlat::fail(twinlat::ErrorCode::InvalidInput,
                      "the evaluation point must be a decimal integer");
      }
    }
    return twinlat::growth_report(parse_doc(session, input_json), c, q).dump(2);
  });
}

twinlat_status twinlat_verdict(twinlat_session* session, const char* input_json,
                               char** out_json) {
  return run(session, out_json, [&] {
    return twinlat::verdict_report(parse_doc(session, input_json)).dump(2);
  });
}

twinlat_status twinlat_witness(twinlat_session* session, const char* input_json,
                               const char* alpha_literal, const char* beta_literal, int h,
                               char** out_json) {
  return run(session, out_json, [&] {
    const std::string alpha = alpha_literal ? alpha_literal : "";
    const std::string beta = beta_literal ? beta_literal : "";
    return twinlat::witness_report(parse_doc(session, input_json), alpha, beta, h).dump(2);
  });
}

const char* twinlat_last_error(const twinlat_session* session) {
  return session ? session->last_error.c_str() : "null session";
}

void twinlat_string_free(char* str) { std::free(str); }

const char* twinlat_version(void) { return "1.0.0"; }

} // extern "C"
