#include "report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "fastest.hpp"
#include "json_out.hpp"

namespace matgrowth::report {

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> table = [] {
    std::vector<RegistryEntry> t;
    auto add = [&](const char* name, const char* a, const char* b, const char* v) {
      t.push_back({name, Mat2::parse(a), Mat2::parse(b), Word::parse(v)});
    };
    add("a1b1", "1,1;0,1", "1,0;1,1", "AB");
    add("a2b2", "1,2;0,1", "1,0;2,1", "AB");
    add("a2bm2", "1,2;0,1", "1,0;-2,1", "AABB");
    add("pollicott", "2,1;1,1", "3,1;2,1", "B");
    add("binary24", "1,1;0,1", "0,1;1,0", "AAAB");
    add("jurga_morris", "3,1;1,3", "5,2;2,5", "B");
    return t;
  }();
  return table;
}

std::optional<PairSpec> lookup(std::string_view name) {
  for (const RegistryEntry& e : registry())
    if (e.name == name) return PairSpec{e.name, e.a, e.b};
  return std::nullopt;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double snap_real(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

namespace {

Provenance classify_witness(const PairSpec& pair, const Word& witness) {
  if (pair.name.empty() || witness.empty()) return Provenance::empirical;
  for (const RegistryEntry& e : registry()) {
    if (e.name != pair.name) continue;
    std::size_t block = e.period_word.size();
    if (block != 0 && witness.size() % block == 0 &&
        witness == e.period_word.power(witness.size() / block))
      return Provenance::closed_form;
  }
  return Provenance::empirical;
}

}  // namespace

std::vector<GrowthReport> run_summary(const std::vector<PairSpec>& pairs,
                                      const SummaryParams& params) {
  std::vector<GrowthReport> out;
  out.reserve(pairs.size());
  for (const PairSpec& pair : pairs) {
    GrowthReport rep;
    rep.pair = pair;
    try {
      auto [lower, witness] =
          fastest::jsr_lower_bound(pair.a, pair.b, params.search_depth);
      rep.s_max = lower;
      rep.s_max_witness = witness;
      rep.s_max_provenance = classify_witness(pair, witness);
      rep.bounds = lyapunov::bounds_report(pair.a, pair.b, params.mc);
      rep.s_ave = rep.bounds.s_ave;
      rep.s_gen = rep.bounds.mc.s_gen;
      rep.lambda = rep.bounds.mc.lambda_mean;
      rep.lambda_stderr = rep.bounds.mc.lambda_stderr;
    } catch (const std::exception& e) {
      rep.error = e.what();
    }
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

std::string render_csv(const std::vector<GrowthReport>& reports) {
  std::string s = "pair,s_max,s_ave,s_gen,lambda\n";
  for (const GrowthReport& r : reports) {
    std::string name = r.pair.name.empty() ? r.pair.a.str() + "|" + r.pair.b.str()
                                           : r.pair.name;
    s += name;
    if (r.error) {
      s += ",,,,\n";  // failed row: name only, fields left blank
      continue;
    }
    for (double v : {r.s_max, r.s_ave, r.s_gen, r.lambda}) s += "," + format_real(v);
    s += "\n";
  }
  return s;
}

}  // namespace

std::string render(const std::vector<GrowthReport>& reports, Format format) {
  if (format == Format::csv) return render_csv(reports);
  return json_of(reports).dump(2) + "\n";
}

void emit_report(const std::vector<GrowthReport>& reports, Format format,
                 std::ostream& out) {
  out << render(reports, format);
  if (!out) throw Error::io("write to stream failed");
}

void emit_report(const std::vector<GrowthReport>& reports, Format format,
                 const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error::io("cannot open '" + path.string() + "' for writing");
  emit_report(reports, format, f);
  f.close();
  if (!f) throw Error::io("write to '" + path.string() + "' failed");
}

// ---- JSON builders ----

nlohmann::json json_of(const Rational& r) { return r.str(); }

nlohmann::json json_of(const Mat2& m) {
  // explicit arrays: brace-init would glue the string pairs into an object
  nlohmann::json rows = nlohmann::json::array();
  rows.push_back(nlohmann::json::array({m.a.str(), m.b.str()}));
  rows.push_back(nlohmann::json::array({m.c.str(), m.d.str()}));
  return {{"text", m.str()}, {"entries", rows}};
}

nlohmann::json json_of(const Word& w) { return w.str(); }

nlohmann::json json_of(const PairSpec& p) {
  nlohmann::json j{{"A", p.a.str()}, {"B", p.b.str()}};
  j["name"] = p.name.empty() ? nlohmann::json() : nlohmann::json(p.name);
  return j;
}

nlohmann::json json_of(const fastest::MaximizerRecord& rec) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Word& w : rec.witnesses) witnesses.push_back(w.str());
  return {{"length", rec.length},
          {"max_value", rec.max_value.str()},
          {"witnesses", witnesses},
          {"witnesses_exhaustive", rec.witnesses_exhaustive}};
}

nlohmann::json json_of(const fastest::JsrEstimate& est) {
  return {{"lower", snap_real(est.lower)},
          {"upper", snap_real(est.upper)},
          {"lower_witness", est.lower_witness.str()},
          {"search_depth", est.search_depth}};
}

nlohmann::json json_of(const fastest::PeriodProbe& probe) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : probe.rows)
    rows.push_back({{"n", row.n},
                    {"max_value", row.max_value.str()},
                    {"lex_least", row.lex_least.str()},
                    {"ties", row.tie_count}});
  nlohmann::json j{{"max_len", probe.max_len}, {"rows", rows}};
  if (probe.period)
    j["period"] = {{"r", probe.period->first}, {"v", probe.period->second.str()}};
  else
    j["period"] = nullptr;
  return j;
}

nlohmann::json json_of(const fastest::AlternationReport& rep) {
  nlohmann::json j{{"k", rep.k.str()},
                   {"m", rep.m.str()},
                   {"n_max", rep.n_max},
                   {"hypothesis_met", rep.hypothesis_met},
                   {"forced", rep.forced},
                   {"verified", rep.verified}};
  if (rep.counterexample) {
    const auto& ce = *rep.counterexample;
    j["counterexample"] = {{"n", ce.n},
                           {"lex_least_maximizer", ce.lex_least_maximizer.str()},
                           {"max_value", ce.max_value.str()},
                           {"alternating_value", ce.alternating_value.str()}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

nlohmann::json json_of(const fastest::CandidateRate& cr) {
  nlohmann::json rates = nlohmann::json::array();
  for (const auto& [w, r] : cr.rates)
    rates.push_back({{"word", w.str()}, {"rate", snap_real(r)}});
  return {{"candidates", rates},
          {"best_word", cr.best_word.str()},
          {"best_rate", snap_real(cr.best_rate)},
          {"in_sl2z_nonneg", cr.in_sl2z_nonneg}};
}

nlohmann::json json_of(const average::RecurrenceSpec& spec) {
  return {{"trace", spec.trace.str()}, {"det", spec.det.str()}};
}

nlohmann::json json_of(const average::MeanCheck& check) {
  return {{"n", check.n},
          {"trials", check.trials},
          {"seed", check.seed},
          {"expected_a", check.expected_a.str()},
          {"sample_mean_a", check.sample_mean_a.str()},
          {"expected_is_zero", check.expected_is_zero},
          {"relative_deviation", snap_real(check.relative_deviation)},
          {"standard_error", snap_real(check.standard_error)}};
}

nlohmann::json json_of(const lyapunov::Estimate& est) {
  nlohmann::json lambdas = nlohmann::json::array();
  for (double l : est.trial_lambdas) lambdas.push_back(snap_real(l));
  return {{"lambda_mean", snap_real(est.lambda_mean)},
          {"lambda_stderr", snap_real(est.lambda_stderr)},
          {"s_gen", snap_real(est.s_gen)},
          {"n", est.n},
          {"trials", est.trials},
          {"seed", est.seed},
          {"norm", est.norm == lyapunov::Norm::l1 ? "l1" : "max_abs"},
          {"rng_algorithm", est.rng_algorithm},
          {"trial_lambdas", lambdas}};
}

namespace {

nlohmann::json opt_real(const std::optional<double>& v) {
  return v ? nlohmann::json(snap_real(*v)) : nlohmann::json();
}

nlohmann::json opt_bool(const std::optional<bool>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json();
}

}  // namespace

nlohmann::json json_of(const lyapunov::BoundsReport& rep) {
  return {{"mc", json_of(rep.mc)},
          {"s_ave", snap_real(rep.s_ave)},
          {"ave_bound", opt_real(rep.ave_bound)},
          {"st_bound", opt_real(rep.st_bound)},
          {"nonnegative_entries", rep.nonnegative_entries},
          {"shear_shape", rep.shear_shape},
          {"ave_bound_respected", opt_bool(rep.ave_bound_respected)},
          {"st_tighter", opt_bool(rep.st_tighter)},
          {"s_gen_above_s_ave", rep.s_gen_above_s_ave}};
}

nlohmann::json json_of(const girth::BfsResult& res) {
  nlohmann::json j{{"p", res.p},
                   {"depth_max", res.depth_max},
                   {"states_visited", res.states_visited}};
  if (res.collision)
    j["collision"] = {{"depth", res.collision->depth},
                      {"u", res.collision->u.str()},
                      {"v", res.collision->v.str()}};
  else
    j["collision"] = nullptr;
  return j;
}

nlohmann::json json_of(const GrowthReport& rep) {
  nlohmann::json j{{"pair", json_of(rep.pair)}};
  if (rep.error) {
    j["error"] = *rep.error;
    return j;
  }
  j["error"] = nullptr;
  j["s_max"] = snap_real(rep.s_max);
  j["s_max_provenance"] =
      rep.s_max_provenance == Provenance::closed_form ? "closed-form" : "empirical";
  j["s_max_witness"] = rep.s_max_witness.str();
  j["s_ave"] = snap_real(rep.s_ave);
  j["s_gen"] = snap_real(rep.s_gen);
  j["lambda"] = snap_real(rep.lambda);
  j["lambda_stderr"] = snap_real(rep.lambda_stderr);
  j["bounds"] = json_of(rep.bounds);
  return j;
}

nlohmann::json json_of(const std::vector<GrowthReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const GrowthReport& r : reports) arr.push_back(json_of(r));
  return arr;
}

}  // namespace matgrowth::report
