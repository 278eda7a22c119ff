// Command-line front end. Links only the public C API.

#include <matgrowth/matgrowth.h>

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

int exit_code(mg_status st) {
  switch (st) {
    case MG_OK:
      return 0;
    case MG_ERR_PARSE:
    case MG_ERR_DOMAIN:
    case MG_ERR_UNSUPPORTED:
    case MG_ERR_IO:
    case MG_ERR_INVALID:
      return 1;
    case MG_ERR_CAP:
      return 2;
    case MG_ERR_NONFINITE:
    case MG_ERR_INTERNAL:
      return 3;
  }
  return 3;
}

[[noreturn]] void fail(mg_status st) {
  std::fprintf(stderr, "error: %s (%s)\n", mg_last_error(), mg_status_name(st));
  std::exit(exit_code(st));
}

[[noreturn]] void fail_usage(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(1);
}

void check(mg_status st) {
  if (st != MG_OK) fail(st);
}

// --pair accepts a registry name ("a2b2") or two matrices joined by '|'
// ("1,2;0,1|1,0;2,1"); --A/--B give the matrices separately.
void resolve_pair(const std::string& pair, const std::string& a_text,
                  const std::string& b_text, mg_mat2** a, mg_mat2** b) {
  if (!pair.empty()) {
    auto bar = pair.find('|');
    if (bar != std::string::npos) {
      check(mg_mat2_parse(pair.substr(0, bar).c_str(), a));
      check(mg_mat2_parse(pair.substr(bar + 1).c_str(), b));
    } else {
      check(mg_registry_lookup(pair.c_str(), a, b));
    }
    return;
  }
  if (!a_text.empty() && !b_text.empty()) {
    check(mg_mat2_parse(a_text.c_str(), a));
    check(mg_mat2_parse(b_text.c_str(), b));
    return;
  }
  fail_usage("need --pair NAME (or 'A|B') or both --A and --B");
}

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::FILE* f = std::fopen(out_path.c_str(), "wb");
  if (f == nullptr) fail_usage("cannot open '" + out_path + "' for writing");
  std::size_t written = std::fwrite(text.data(), 1, text.size(), f);
  bool ok = written == text.size() && std::fclose(f) == 0;
  if (!ok) fail_usage("write to '" + out_path + "' failed");
}

void emit(mg_report* rep, mg_format format, const std::string& out_path) {
  char* text = nullptr;
  check(mg_report_render(rep, format, &text));
  write_text(text, out_path);
  mg_string_free(text);
  mg_report_free(rep);
}

// "trials=T,seed=S" (seed optional)
void parse_check_spec(const std::string& spec, std::uint64_t* trials,
                      std::uint64_t* seed, bool* have_seed) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto eq = spec.find('=', pos);
    if (eq == std::string::npos) fail_usage("--check expects trials=T[,seed=S]");
    std::string key = spec.substr(pos, eq - pos);
    auto comma = spec.find(',', eq);
    std::string value = spec.substr(eq + 1, comma == std::string::npos
                                                ? std::string::npos
                                                : comma - eq - 1);
    char* end = nullptr;
    std::uint64_t parsed = std::strtoull(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0')
      fail_usage("--check: '" + value + "' is not an unsigned integer");
    if (key == "trials") {
      *trials = parsed;
    } else if (key == "seed") {
      *seed = parsed;
      *have_seed = true;
    } else {
      fail_usage("--check: unknown key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
}

std::string json_escapeless(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growth rates of products of two 2x2 rational matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this file (default stdout)");
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--threads", threads, "worker threads, 0 = auto")
      ->capture_default_str();

  std::string pair, a_text, b_text;
  auto add_pair_opts = [&](CLI::App* sub) {
    sub->add_option("--pair", pair, "registry name or 'A|B' matrices");
    sub->add_option("--A", a_text, "left generator, e.g. 1,2;0,1");
    sub->add_option("--B", b_text, "right generator");
  };

  unsigned max_len = 8;
  auto* jsr = app.add_subcommand("jsr", "joint spectral radius bounds");
  add_pair_opts(jsr);
  jsr->add_option("--max-len", max_len, "search depth")->capture_default_str();

  unsigned len = 0;
  auto* maximizers = app.add_subcommand("maximizers", "max-entry words at one length");
  add_pair_opts(maximizers);
  maximizers->add_option("--len", len, "word length")->required();

  unsigned probe_len = 12;
  auto* probe = app.add_subcommand("probe-period", "probe maximizers for periodicity");
  add_pair_opts(probe);
  probe->add_option("--max-len", probe_len, "probe up to this length")
      ->capture_default_str();

  std::string alt_k, alt_m;
  unsigned alt_n_max = 12;
  bool alt_force = false;
  auto* alternation =
      app.add_subcommand("alternation", "check that (AB)^(n/2) maximizes shear pairs");
  alternation->add_option("--k", alt_k, "upper shear parameter")->required();
  alternation->add_option("--m", alt_m, "lower shear parameter")->required();
  alternation->add_option("--n-max", alt_n_max, "largest even length")
      ->capture_default_str();
  alternation->add_flag("--force", alt_force, "run outside the proven hypothesis");

  auto* candidates =
      app.add_subcommand("candidates", "rates of the short candidate words");
  add_pair_opts(candidates);

  std::uint64_t ave_n = 10;
  std::string check_spec;
  auto* average = app.add_subcommand("average", "mean-matrix growth");
  add_pair_opts(average);
  average->add_option("--n", ave_n, "power for exact expected entries")
      ->capture_default_str();
  average->add_option("--check", check_spec, "empirical check, trials=T[,seed=S]");

  mg_mc_params mc;
  mg_mc_params_init(&mc);
  std::uint64_t mc_n = mc.n;
  unsigned mc_trials = mc.trials;
  std::string norm = "l1";
  auto add_mc_opts = [&](CLI::App* sub) {
    sub->add_option("--n", mc_n, "letters per trial")->capture_default_str();
    sub->add_option("--trials", mc_trials, "independent trials")->capture_default_str();
    sub->add_option("--norm", norm, "renormalization norm")
        ->check(CLI::IsMember({"l1", "maxabs"}))
        ->capture_default_str();
  };
  auto* lyapunov = app.add_subcommand("lyapunov", "Monte-Carlo Lyapunov exponent");
  add_pair_opts(lyapunov);
  add_mc_opts(lyapunov);

  auto* bounds = app.add_subcommand("bounds", "Lyapunov estimate with analytic bounds");
  add_pair_opts(bounds);
  add_mc_opts(bounds);

  std::uint64_t prime = 0;
  unsigned depth_max = 25;
  auto* girth = app.add_subcommand("girth", "shortest relation mod p via BFS");
  add_pair_opts(girth);
  girth->add_option("--p", prime, "prime modulus")->required();
  girth->add_option("--depth-max", depth_max, "BFS depth limit")->capture_default_str();

  std::string u_text, v_text;
  auto* verify = app.add_subcommand("verify", "exact relation check u(A,B) = v(A,B)");
  add_pair_opts(verify);
  verify->add_option("--u", u_text, "left word")->required();
  verify->add_option("--v", v_text, "right word")->required();

  double bound_s = 0.0;
  auto* bound = app.add_subcommand("bound", "predicted girth ceil(log p / log s)");
  bound->add_option("--p", prime, "prime modulus")->required();
  bound->add_option("--s", bound_s, "growth rate")->required();

  std::vector<std::string> summary_pairs;
  unsigned search_depth = 8;
  auto* summary = app.add_subcommand("summary", "growth-rate table for named pairs");
  summary->add_option("--pair", summary_pairs,
                      "registry names (repeatable; default: all)");
  summary->add_option("--n", mc_n, "letters per trial")->capture_default_str();
  summary->add_option("--trials", mc_trials, "independent trials")
      ->capture_default_str();
  summary->add_option("--search-depth", search_depth, "jsr search depth")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  mg_format fmt = format == "csv" ? MG_FORMAT_CSV : MG_FORMAT_JSON;
  mc.n = mc_n;
  mc.trials = mc_trials;
  mc.seed = seed;
  mc.norm = norm == "maxabs" ? MG_NORM_MAX_ABS : MG_NORM_L1;
  mc.threads = threads;

  mg_mat2* a = nullptr;
  mg_mat2* b = nullptr;
  mg_report* rep = nullptr;

  if (jsr->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    check(mg_jsr(a, b, max_len, &rep));
    emit(rep, fmt, out_path);
  } else if (maximizers->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    check(mg_maximizers(a, b, len, &rep));
    emit(rep, fmt, out_path);
  } else if (probe->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    check(mg_probe_period(a, b, probe_len, &rep));
    emit(rep, fmt, out_path);
  } else if (alternation->parsed()) {
    check(mg_verify_alternation(alt_k.c_str(), alt_m.c_str(), alt_n_max,
                                alt_force ? 1 : 0, &rep));
    emit(rep, fmt, out_path);
  } else if (candidates->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    check(mg_candidates(a, b, &rep));
    emit(rep, fmt, out_path);
  } else if (average->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    std::uint64_t check_trials = 0;
    std::uint64_t check_seed = seed;
    bool have_seed = false;
    if (!check_spec.empty())
      parse_check_spec(check_spec, &check_trials, &check_seed, &have_seed);
    check(mg_average_report(a, b, ave_n, check_trials, check_seed, &rep));
    emit(rep, fmt, out_path);
  } else if (lyapunov->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    check(mg_lyapunov(a, b, &mc, &rep));
    emit(rep, fmt, out_path);
  } else if (bounds->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    check(mg_bounds(a, b, &mc, &rep));
    emit(rep, fmt, out_path);
  } else if (girth->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    if (prime > 0xffffffffULL) fail_usage("--p exceeds the 32-bit modulus limit");
    check(mg_girth_search(a, b, static_cast<std::uint32_t>(prime), depth_max, &rep));
    emit(rep, fmt, out_path);
  } else if (verify->parsed()) {
    resolve_pair(pair, a_text, b_text, &a, &b);
    if (fmt == MG_FORMAT_CSV) fail_usage("CSV output is only available for summary");
    mg_word* u = nullptr;
    mg_word* v = nullptr;
    check(mg_word_parse(u_text.c_str(), &u));
    check(mg_word_parse(v_text.c_str(), &v));
    int equal = 0;
    check(mg_verify_relation(u, v, a, b, &equal));
    size_t ulen = 0, vlen = 0;
    check(mg_word_length(u, &ulen));
    check(mg_word_length(v, &vlen));
    char* u_plain = nullptr;
    char* v_plain = nullptr;
    check(mg_word_render(u, 0, &u_plain));
    check(mg_word_render(v, 0, &v_plain));
    std::string text = "{\n  \"u\": " + json_escapeless(u_plain) +
                       ",\n  \"v\": " + json_escapeless(v_plain) +
                       ",\n  \"u_length\": " + std::to_string(ulen) +
                       ",\n  \"v_length\": " + std::to_string(vlen) +
                       ",\n  \"equal\": " + (equal ? "true" : "false") + "\n}\n";
    write_text(text, out_path);
    mg_string_free(u_plain);
    mg_string_free(v_plain);
    mg_word_free(u);
    mg_word_free(v);
  } else if (bound->parsed()) {
    if (fmt == MG_FORMAT_CSV) fail_usage("CSV output is only available for summary");
    std::uint64_t predicted = 0;
    check(mg_girth_bound(prime, bound_s, &predicted));
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "{\n  \"p\": %llu,\n  \"s\": %.12g,\n  \"girth_bound\": %llu\n}\n",
                  static_cast<unsigned long long>(prime), bound_s,
                  static_cast<unsigned long long>(predicted));
    write_text(buf, out_path);
  } else if (summary->parsed()) {
    mg_summary* s = nullptr;
    check(mg_summary_new(&s));
    if (summary_pairs.empty())
      for (size_t i = 0; i < mg_registry_count(); ++i)
        summary_pairs.emplace_back(mg_registry_name(i));
    for (const std::string& name : summary_pairs) {
      auto bar = name.find('|');
      if (bar == std::string::npos) {
        check(mg_summary_add_named(s, name.c_str()));
      } else {
        mg_mat2* pa = nullptr;
        mg_mat2* pb = nullptr;
        check(mg_mat2_parse(name.substr(0, bar).c_str(), &pa));
        check(mg_mat2_parse(name.substr(bar + 1).c_str(), &pb));
        check(mg_summary_add_pair(s, "", pa, pb));
        mg_mat2_free(pa);
        mg_mat2_free(pb);
      }
    }
    mg_summary_params params;
    mg_summary_params_init(&params);
    params.n = mc_n;
    params.trials = mc_trials;
    params.seed = seed;
    params.search_depth = search_depth;
    params.threads = threads;
    check(mg_summary_run(s, &params, &rep));
    mg_summary_free(s);
    emit(rep, fmt, out_path);
  }

  mg_mat2_free(a);
  mg_mat2_free(b);
  return 0;
}
