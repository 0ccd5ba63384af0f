#include "symtau/symtau.h"

#include "symtau/cycles.hpp"
#include "symtau/decompose.hpp"
#include "symtau/engine.hpp"
#include "symtau/spec_json.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <utility>

struct symtau_spec {
  symtau::CurveSpec spec;
};

struct symtau_result {
  symtau::TauResult result;
};

struct symtau_decomposition {
  symtau::Decomposition dec;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) {
    t_last_error = "out of memory";
    return nullptr;
  }
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

symtau_status argument_error(const std::string& message) {
  t_last_error = message;
  return SYMTAU_ERR_ARGUMENT;
}

// Translates the in-flight exception; call from a catch block only.
symtau_status status_from_exception() {
  try {
    throw;
  } catch (const symtau::SpecError& e) {
    t_last_error = e.what();
    return e.kind() == symtau::SpecError::Kind::parse ? SYMTAU_ERR_PARSE : SYMTAU_ERR_VALIDATION;
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return SYMTAU_ERR_NOMEM;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return SYMTAU_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return SYMTAU_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return SYMTAU_ERR_INTERNAL;
  }
}

char* render_or_null(const std::string& text) {
  t_last_error.clear();
  return dup_string(text);
}

}  // namespace

extern "C" {

const char* symtau_version(void) { return "0.1.0"; }

const char* symtau_last_error(void) { return t_last_error.c_str(); }

void symtau_string_free(char* text) { std::free(text); }

symtau_spec* symtau_spec_new(long genus) {
  symtau_spec* spec = new (std::nothrow) symtau_spec;
  if (spec == nullptr) {
    t_last_error = "out of memory";
    return nullptr;
  }
  spec->spec.genus = genus;
  t_last_error.clear();
  return spec;
}

void symtau_spec_free(symtau_spec* spec) { delete spec; }

symtau_status symtau_spec_add_pencil(symtau_spec* spec, long degree, int base_point_free,
                                     const char* gamma_irreducible) {
  if (spec == nullptr) return argument_error("null specification handle");
  symtau::TriState irr = symtau::TriState::unknown;
  if (gamma_irreducible != nullptr) {
    auto parsed = symtau::tri_parse(gamma_irreducible);
    if (!parsed) {
      return argument_error("gamma_irreducible must be \"yes\", \"no\", or \"unknown\"");
    }
    irr = *parsed;
  }
  spec->spec.pencils.push_back({degree, base_point_free != 0, irr});
  t_last_error.clear();
  return SYMTAU_OK;
}

symtau_status symtau_spec_add_cover(symtau_spec* spec, long degree, long target_genus,
                                    int target_has_g12) {
  if (spec == nullptr) return argument_error("null specification handle");
  symtau::CoverDecl cover;
  cover.degree = degree;
  cover.target_genus = target_genus;
  if (target_has_g12 >= 0) cover.target_has_g12 = target_has_g12 != 0;
  spec->spec.covers.push_back(cover);
  t_last_error.clear();
  return SYMTAU_OK;
}

symtau_status symtau_spec_set_flag(symtau_spec* spec, const char* flag, const char* value) {
  if (spec == nullptr) return argument_error("null specification handle");
  if (flag == nullptr || value == nullptr) return argument_error("null flag or value");
  auto parsed = symtau::tri_parse(value);
  if (!parsed) return argument_error("flag value must be \"yes\", \"no\", or \"unknown\"");
  const std::string name(flag);
  if (name == "hyperelliptic") {
    spec->spec.hyperelliptic = *parsed;
  } else if (name == "bielliptic") {
    spec->spec.bielliptic = *parsed;
  } else {
    return argument_error("unknown flag \"" + name + "\"");
  }
  t_last_error.clear();
  return SYMTAU_OK;
}

symtau_status symtau_spec_add_effective_class(symtau_spec* spec, long a, long b) {
  if (spec == nullptr) return argument_error("null specification handle");
  if (a <= 0 || b <= 0) return argument_error("effective class coefficients must be positive");
  spec->spec.effective_classes.emplace_back(a, b);
  t_last_error.clear();
  return SYMTAU_OK;
}

symtau_spec* symtau_spec_parse_json(const char* text) {
  if (text == nullptr) {
    t_last_error = "null document text";
    return nullptr;
  }
  try {
    symtau::CurveSpec parsed = symtau::spec_from_json(text);
    symtau_spec* spec = new symtau_spec{std::move(parsed)};
    t_last_error.clear();
    return spec;
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

char* symtau_spec_to_json(const symtau_spec* spec) {
  if (spec == nullptr) {
    t_last_error = "null specification handle";
    return nullptr;
  }
  try {
    return render_or_null(symtau::spec_to_json(spec->spec));
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

symtau_status symtau_solve(const symtau_spec* spec, symtau_result** out) {
  if (out == nullptr) return argument_error("null output pointer");
  *out = nullptr;
  if (spec == nullptr) return argument_error("null specification handle");
  try {
    symtau::TauResult result = symtau::solve(spec->spec);
    const bool consistent = result.consistent;
    *out = new symtau_result{std::move(result)};
    t_last_error.clear();
    if (consistent) return SYMTAU_OK;
    t_last_error = "the declared data force an empty interval";
    return SYMTAU_ERR_INCONSISTENT;
  } catch (...) {
    return status_from_exception();
  }
}

void symtau_result_free(symtau_result* result) { delete result; }

int symtau_result_exact(const symtau_result* result) {
  return result != nullptr && result->result.exact ? 1 : 0;
}

int symtau_result_consistent(const symtau_result* result) {
  return result != nullptr && result->result.consistent ? 1 : 0;
}

char* symtau_result_value(const symtau_result* result) {
  if (result == nullptr || !result->result.exact) {
    t_last_error = "result has no exact value";
    return nullptr;
  }
  return render_or_null(result->result.lo.str());
}

char* symtau_result_lower(const symtau_result* result) {
  if (result == nullptr) {
    t_last_error = "null result handle";
    return nullptr;
  }
  return render_or_null(result->result.lo.str());
}

char* symtau_result_upper(const symtau_result* result) {
  if (result == nullptr) {
    t_last_error = "null result handle";
    return nullptr;
  }
  return render_or_null(result->result.hi.str());
}

size_t symtau_result_trace_size(const symtau_result* result) {
  return result == nullptr ? 0 : result->result.trace.size();
}

char* symtau_result_trace_line(const symtau_result* result, size_t index) {
  if (result == nullptr || index >= result->result.trace.size()) {
    t_last_error = "trace index out of range";
    return nullptr;
  }
  return render_or_null(symtau::render_trace_entry(result->result.trace[index]));
}

char* symtau_result_render(const symtau_result* result, int with_trace) {
  if (result == nullptr) {
    t_last_error = "null result handle";
    return nullptr;
  }
  try {
    return render_or_null(symtau::render_result(result->result, with_trace != 0));
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

symtau_status symtau_decompose(const symtau_spec* spec, long pencil_degree,
                               symtau_decomposition** out) {
  if (out == nullptr) return argument_error("null output pointer");
  *out = nullptr;
  if (spec == nullptr) return argument_error("null specification handle");
  try {
    symtau::NormalizedSpec normalized = symtau::normalize(spec->spec);
    if (!normalized.has_pencil_degree(pencil_degree)) {
      return argument_error("the specification declares no pencil of degree " +
                            std::to_string(pencil_degree));
    }
    symtau::Decomposition dec =
        symtau::feasible_tau(pencil_degree, normalized.spec.genus, normalized.spec.covers);
    *out = new symtau_decomposition{std::move(dec)};
    t_last_error.clear();
    return SYMTAU_OK;
  } catch (...) {
    return status_from_exception();
  }
}

void symtau_decomposition_free(symtau_decomposition* dec) { delete dec; }

size_t symtau_decomposition_scenarios(const symtau_decomposition* dec) {
  return dec == nullptr ? 0 : dec->dec.scenarios.size();
}

size_t symtau_decomposition_rejections(const symtau_decomposition* dec) {
  return dec == nullptr ? 0 : dec->dec.rejected.size();
}

char* symtau_decomposition_render(const symtau_decomposition* dec, int verbose) {
  if (dec == nullptr) {
    t_last_error = "null decomposition handle";
    return nullptr;
  }
  try {
    return render_or_null(symtau::render_decomposition(dec->dec, verbose != 0));
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

symtau_status symtau_cover_cycle(long degree, long target_genus, long genus, long long out[3]) {
  if (out == nullptr) return argument_error("null output pointer");
  try {
    const symtau::CycleNumbers numbers = symtau::cover_cycle({degree, target_genus}, genus);
    out[0] = numbers.x_deg;
    out[1] = numbers.theta_deg;
    out[2] = numbers.delta_deg;
    t_last_error.clear();
    return SYMTAU_OK;
  } catch (...) {
    return status_from_exception();
  }
}

symtau_status symtau_b_cycle(long degree, long target_genus, long genus, long symmetric_index,
                             long long out[3]) {
  if (out == nullptr) return argument_error("null output pointer");
  try {
    const symtau::CycleNumbers numbers =
        symtau::b_cycle({degree, target_genus}, symmetric_index, genus);
    out[0] = numbers.x_deg;
    out[1] = numbers.theta_deg;
    out[2] = numbers.delta_deg;
    t_last_error.clear();
    return SYMTAU_OK;
  } catch (...) {
    return status_from_exception();
  }
}

char* symtau_table_render(long degree, long target_genus, long genus, long symmetric_index) {
  try {
    const symtau::CoverDatum cover{degree, target_genus};
    const symtau::CycleNumbers sigma = symtau::cover_cycle(cover, genus);
    std::ostringstream out;
    out << "cover of degree " << degree << " over a genus-" << target_genus
        << " target, ambient genus " << genus << "\n";
    out << "Sigma: x = " << sigma.x_deg << ", theta = " << sigma.theta_deg
        << ", delta = " << sigma.delta_deg << "\n";
    if (symmetric_index != 0) {
      const symtau::CycleNumbers b = symtau::b_cycle(cover, symmetric_index, genus);
      out << "B(H) in the symmetric product of index " << symmetric_index << ": x = " << b.x_deg
          << ", theta = " << b.theta_deg << ", delta = " << b.delta_deg << "\n";
    }
    return render_or_null(out.str());
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

}  // extern "C"
