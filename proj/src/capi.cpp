#include "matgrowth/matgrowth.h"

#include <cstring>
#include <new>
#include <string>

#include "average.hpp"
#include "error.hpp"
#include "fastest.hpp"
#include "girth.hpp"
#include "json_out.hpp"
#include "lyapunov.hpp"
#include "mat2.hpp"
#include "report.hpp"
#include "word.hpp"

using matgrowth::Error;
using matgrowth::ErrorCode;
using matgrowth::Mat2;
using matgrowth::Rational;
using matgrowth::Word;
using matgrowth::report::json_of;
namespace fastest = matgrowth::fastest;
namespace average = matgrowth::average;
namespace lyapunov = matgrowth::lyapunov;
namespace girth = matgrowth::girth;
namespace report = matgrowth::report;

struct mg_mat2 {
  Mat2 m;
};
struct mg_word {
  Word w;
};
struct mg_report {
  nlohmann::json body;
  bool is_summary = false;
  std::vector<report::GrowthReport> rows;  // kept for CSV rendering
};
struct mg_summary {
  std::vector<report::PairSpec> pairs;
};

namespace {

thread_local std::string tls_error;

mg_status set_error(mg_status status, const std::string& message) {
  tls_error = message;
  return status;
}

mg_status from_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return MG_ERR_PARSE;
    case ErrorCode::domain: return MG_ERR_DOMAIN;
    case ErrorCode::cap: return MG_ERR_CAP;
    case ErrorCode::unsupported: return MG_ERR_UNSUPPORTED;
    case ErrorCode::io: return MG_ERR_IO;
    case ErrorCode::nonfinite: return MG_ERR_NONFINITE;
    case ErrorCode::internal: return MG_ERR_INTERNAL;
  }
  return MG_ERR_INTERNAL;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
mg_status guarded(Fn&& fn) {
  try {
    fn();
    return MG_OK;
  } catch (const Error& e) {
    return set_error(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MG_ERR_CAP, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MG_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mg_report* make_report(nlohmann::json body) {
  auto* r = new mg_report;
  r->body = std::move(body);
  return r;
}

lyapunov::McParams to_mc(const mg_mc_params* p) {
  lyapunov::McParams mc;
  if (p != nullptr) {
    mc.n = p->n;
    mc.trials = p->trials;
    mc.seed = p->seed;
    mc.norm = p->norm == MG_NORM_L1 ? lyapunov::Norm::l1 : lyapunov::Norm::max_abs;
    mc.threads = p->threads;
  }
  return mc;
}

}  // namespace

#define MG_REQUIRE(cond, msg) \
  do {                        \
    if (!(cond)) return set_error(MG_ERR_INVALID, msg); \
  } while (0)

const char* mg_version(void) { return "0.1.0"; }

const char* mg_status_name(mg_status status) {
  switch (status) {
    case MG_OK: return "ok";
    case MG_ERR_PARSE: return "parse error";
    case MG_ERR_DOMAIN: return "domain error";
    case MG_ERR_CAP: return "resource cap exceeded";
    case MG_ERR_UNSUPPORTED: return "unsupported";
    case MG_ERR_IO: return "io error";
    case MG_ERR_NONFINITE: return "nonfinite result";
    case MG_ERR_INVALID: return "invalid argument";
    case MG_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* mg_last_error(void) { return tls_error.c_str(); }

void mg_string_free(char* s) { delete[] s; }

/* ---- matrices ---- */

mg_status mg_mat2_parse(const char* text, mg_mat2** out) {
  MG_REQUIRE(text && out, "text and out must be non-NULL");
  return guarded([&] { *out = new mg_mat2{Mat2::parse(text)}; });
}

mg_status mg_mat2_identity(mg_mat2** out) {
  MG_REQUIRE(out, "out must be non-NULL");
  return guarded([&] { *out = new mg_mat2{Mat2::identity()}; });
}

void mg_mat2_free(mg_mat2* m) { delete m; }

mg_status mg_mat2_render(const mg_mat2* m, char** out) {
  MG_REQUIRE(m && out, "matrix and out must be non-NULL");
  return guarded([&] { *out = dup_string(m->m.str()); });
}

mg_status mg_mat2_entry(const mg_mat2* m, unsigned row, unsigned col, char** out) {
  MG_REQUIRE(m && out, "matrix and out must be non-NULL");
  MG_REQUIRE(row < 2 && col < 2, "row and col must be 0 or 1");
  return guarded([&] {
    const Rational* entries[2][2] = {{&m->m.a, &m->m.b}, {&m->m.c, &m->m.d}};
    *out = dup_string(entries[row][col]->str());
  });
}

mg_status mg_mat2_mul(const mg_mat2* x, const mg_mat2* y, mg_mat2** out) {
  MG_REQUIRE(x && y && out, "arguments must be non-NULL");
  return guarded([&] { *out = new mg_mat2{x->m * y->m}; });
}

mg_status mg_mat2_mean(const mg_mat2* x, const mg_mat2* y, mg_mat2** out) {
  MG_REQUIRE(x && y && out, "arguments must be non-NULL");
  return guarded([&] { *out = new mg_mat2{mean_matrix(x->m, y->m)}; });
}

mg_status mg_mat2_max_abs_entry(const mg_mat2* m, char** out) {
  MG_REQUIRE(m && out, "matrix and out must be non-NULL");
  return guarded([&] { *out = dup_string(m->m.max_abs_entry().str()); });
}

mg_status mg_mat2_l1_norm(const mg_mat2* m, char** out) {
  MG_REQUIRE(m && out, "matrix and out must be non-NULL");
  return guarded([&] { *out = dup_string(m->m.l1_norm().str()); });
}

mg_status mg_mat2_spectral_radius(const mg_mat2* m, double* out) {
  MG_REQUIRE(m && out, "matrix and out must be non-NULL");
  return guarded([&] { *out = spectral_radius(m->m); });
}

/* ---- words ---- */

mg_status mg_word_parse(const char* text, mg_word** out) {
  MG_REQUIRE(text && out, "text and out must be non-NULL");
  return guarded([&] { *out = new mg_word{Word::parse(text)}; });
}

void mg_word_free(mg_word* w) { delete w; }

mg_status mg_word_render(const mg_word* w, int compressed, char** out) {
  MG_REQUIRE(w && out, "word and out must be non-NULL");
  return guarded(
      [&] { *out = dup_string(compressed ? w->w.str_compressed() : w->w.str()); });
}

mg_status mg_word_length(const mg_word* w, size_t* out) {
  MG_REQUIRE(w && out, "word and out must be non-NULL");
  *out = w->w.size();
  return MG_OK;
}

mg_status mg_eval_word(const mg_word* w, const mg_mat2* a, const mg_mat2* b,
                       mg_mat2** out) {
  MG_REQUIRE(w && a && b && out, "arguments must be non-NULL");
  return guarded([&] { *out = new mg_mat2{eval_word(w->w, a->m, b->m)}; });
}

/* ---- registry ---- */

size_t mg_registry_count(void) { return report::registry().size(); }

const char* mg_registry_name(size_t idx) {
  const auto& table = report::registry();
  if (idx >= table.size()) return nullptr;
  return table[idx].name.c_str();
}

mg_status mg_registry_lookup(const char* name, mg_mat2** a, mg_mat2** b) {
  MG_REQUIRE(name && a && b, "arguments must be non-NULL");
  return guarded([&] {
    auto pair = report::lookup(name);
    if (!pair) throw Error::domain("unknown pair '" + std::string(name) + "'");
    *a = new mg_mat2{pair->a};
    *b = new mg_mat2{pair->b};
  });
}

/* ---- fastest growth ---- */

mg_status mg_maximizers(const mg_mat2* a, const mg_mat2* b, unsigned length,
                        mg_report** out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded([&] {
    *out = make_report(json_of(fastest::max_entry_over_length(a->m, b->m, length)));
  });
}

mg_status mg_jsr(const mg_mat2* a, const mg_mat2* b, unsigned max_len,
                 mg_report** out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded(
      [&] { *out = make_report(json_of(fastest::jsr_estimate(a->m, b->m, max_len))); });
}

mg_status mg_probe_period(const mg_mat2* a, const mg_mat2* b, unsigned max_len,
                          mg_report** out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded([&] {
    *out = make_report(json_of(fastest::periodicity_probe(a->m, b->m, max_len)));
  });
}

mg_status mg_verify_alternation(const char* k, const char* m, unsigned n_max,
                                int force, mg_report** out) {
  MG_REQUIRE(k && m && out, "arguments must be non-NULL");
  return guarded([&] {
    *out = make_report(json_of(fastest::verify_alternation_optimality(
        Rational::parse(k), Rational::parse(m), n_max, force != 0)));
  });
}

mg_status mg_candidates(const mg_mat2* a, const mg_mat2* b, mg_report** out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded(
      [&] { *out = make_report(json_of(fastest::candidate_set_rate(a->m, b->m))); });
}

/* ---- average growth ---- */

mg_status mg_average_rate(const mg_mat2* a, const mg_mat2* b, double* out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded([&] { *out = average::average_growth_rate(a->m, b->m); });
}

mg_status mg_average_report(const mg_mat2* a, const mg_mat2* b, uint64_t n,
                            uint64_t check_trials, uint64_t seed, mg_report** out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded([&] {
    nlohmann::json j;
    j["rate"] = report::snap_real(average::average_growth_rate(a->m, b->m));
    j["recurrence"] = json_of(average::recurrence_spec(a->m, b->m));
    j["n"] = n;
    j["expected"] = json_of(average::expected_entries(a->m, b->m, n));
    j["check"] = check_trials > 0
                     ? json_of(average::empirical_mean_check(a->m, b->m, n,
                                                             check_trials, seed))
                     : nlohmann::json();
    *out = make_report(std::move(j));
  });
}

/* ---- Lyapunov ---- */

void mg_mc_params_init(mg_mc_params* params) {
  if (params == nullptr) return;
  params->n = 1000000;
  params->trials = 16;
  params->seed = 0;
  params->norm = MG_NORM_L1;
  params->threads = 0;
}

mg_status mg_lyapunov(const mg_mat2* a, const mg_mat2* b, const mg_mc_params* params,
                      mg_report** out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded([&] {
    *out = make_report(json_of(lyapunov::mc_estimate(a->m, b->m, to_mc(params))));
  });
}

mg_status mg_bounds(const mg_mat2* a, const mg_mat2* b, const mg_mc_params* params,
                    mg_report** out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded([&] {
    *out = make_report(json_of(lyapunov::bounds_report(a->m, b->m, to_mc(params))));
  });
}

mg_status mg_ave_upper_bound(const mg_mat2* a, const mg_mat2* b, double* out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded([&] { *out = lyapunov::ave_upper_bound(a->m, b->m); });
}

mg_status mg_sturman_thiffeault_bound(double k, double m, double* out) {
  MG_REQUIRE(out, "out must be non-NULL");
  return guarded([&] { *out = lyapunov::sturman_thiffeault_bound(k, m); });
}

mg_status mg_renorm_log_norm(const mg_mat2* a, const mg_mat2* b, const mg_word* w,
                             mg_norm norm, double* out) {
  MG_REQUIRE(a && b && w && out, "arguments must be non-NULL");
  return guarded([&] {
    *out = lyapunov::renormalized_log_norm(
        a->m, b->m, w->w,
        norm == MG_NORM_L1 ? lyapunov::Norm::l1 : lyapunov::Norm::max_abs);
  });
}

/* ---- girth ---- */

mg_status mg_girth_bound(uint64_t p, double s, uint64_t* out) {
  MG_REQUIRE(out, "out must be non-NULL");
  return guarded([&] { *out = girth::girth_bound(p, s); });
}

mg_status mg_girth_search(const mg_mat2* a, const mg_mat2* b, uint32_t p,
                          uint32_t depth_max, mg_report** out) {
  MG_REQUIRE(a && b && out, "arguments must be non-NULL");
  return guarded([&] {
    girth::BfsLimits limits;
    if (depth_max != 0) limits.depth_max = depth_max;
    *out = make_report(json_of(girth::bfs_first_collision(a->m, b->m, p, limits)));
  });
}

mg_status mg_verify_relation(const mg_word* u, const mg_word* v, const mg_mat2* a,
                             const mg_mat2* b, int* equal) {
  MG_REQUIRE(u && v && a && b && equal, "arguments must be non-NULL");
  return guarded(
      [&] { *equal = girth::verify_relation(u->w, v->w, a->m, b->m) ? 1 : 0; });
}

mg_status mg_freeness_sufficient(const char* k, const char* m, int* out) {
  MG_REQUIRE(k && m && out, "arguments must be non-NULL");
  return guarded([&] {
    *out = girth::freeness_sufficient(Rational::parse(k), Rational::parse(m)) ? 1 : 0;
  });
}

mg_status mg_suffix_freeness_check(const mg_word* u, const mg_word* v, int* out) {
  MG_REQUIRE(u && v && out, "arguments must be non-NULL");
  return guarded([&] { *out = girth::suffix_freeness_check(u->w, v->w) ? 1 : 0; });
}

/* ---- summary ---- */

void mg_summary_params_init(mg_summary_params* params) {
  if (params == nullptr) return;
  params->n = 1000000;
  params->trials = 16;
  params->seed = 0;
  params->search_depth = 8;
  params->threads = 0;
}

mg_status mg_summary_new(mg_summary** out) {
  MG_REQUIRE(out, "out must be non-NULL");
  return guarded([&] { *out = new mg_summary; });
}

void mg_summary_free(mg_summary* s) { delete s; }

mg_status mg_summary_add_named(mg_summary* s, const char* name) {
  MG_REQUIRE(s && name, "arguments must be non-NULL");
  return guarded([&] {
    auto pair = report::lookup(name);
    if (!pair) throw Error::domain("unknown pair '" + std::string(name) + "'");
    s->pairs.push_back(std::move(*pair));
  });
}

mg_status mg_summary_add_pair(mg_summary* s, const char* label, const mg_mat2* a,
                              const mg_mat2* b) {
  MG_REQUIRE(s && a && b, "arguments must be non-NULL");
  return guarded([&] {
    s->pairs.push_back({label != nullptr ? label : "", a->m, b->m});
  });
}

mg_status mg_summary_run(const mg_summary* s, const mg_summary_params* params,
                         mg_report** out) {
  MG_REQUIRE(s && out, "arguments must be non-NULL");
  return guarded([&] {
    report::SummaryParams sp;
    if (params != nullptr) {
      sp.mc.n = params->n;
      sp.mc.trials = params->trials;
      sp.mc.seed = params->seed;
      sp.mc.threads = params->threads;
      sp.search_depth = params->search_depth;
    }
    auto rows = report::run_summary(s->pairs, sp);
    auto* r = new mg_report;
    r->body = json_of(rows);
    r->is_summary = true;
    r->rows = std::move(rows);
    *out = r;
  });
}

/* ---- reports ---- */

mg_status mg_report_render(const mg_report* r, mg_format format, char** out) {
  MG_REQUIRE(r && out, "report and out must be non-NULL");
  return guarded([&] {
    if (format == MG_FORMAT_JSON) {
      *out = dup_string(r->body.dump(2) + "\n");
      return;
    }
    if (!r->is_summary)
      throw Error::unsupported("CSV rendering is only defined for summary reports");
    *out = dup_string(report::render(r->rows, report::Format::csv));
  });
}

void mg_report_free(mg_report* r) { delete r; }
