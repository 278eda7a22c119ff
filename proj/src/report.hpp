#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lyapunov.hpp"
#include "mat2.hpp"
#include "word.hpp"

namespace matgrowth::report {

struct PairSpec {
  std::string name;  // empty for anonymous pairs
  Mat2 a, b;
};

struct RegistryEntry {
  std::string name;
  Mat2 a, b;
  // Repeating block of the believed/proven s_max-optimal periodic word; a
  // jsr witness that is a power of this block gets the closed-form tag.
  Word period_word;
};

const std::vector<RegistryEntry>& registry();
std::optional<PairSpec> lookup(std::string_view name);

enum class Provenance { closed_form, empirical };

struct GrowthReport {
  PairSpec pair;
  double s_max = 0.0;
  Provenance s_max_provenance = Provenance::empirical;
  Word s_max_witness;
  double s_ave = 0.0;
  double s_gen = 0.0;
  double lambda = 0.0;
  double lambda_stderr = 0.0;
  lyapunov::BoundsReport bounds;
  // Set when this row failed; the numeric fields are then meaningless.
  std::optional<std::string> error;
};

struct SummaryParams {
  lyapunov::McParams mc;
  unsigned search_depth = 8;
};

// One row per pair: s_max from the depth-limited jsr lower bound, s_ave
// exact-then-rounded, s_gen and lambda from the Monte-Carlo run. A failing
// row records its error and the remaining rows still run.
std::vector<GrowthReport> run_summary(const std::vector<PairSpec>& pairs,
                                      const SummaryParams& params = {});

enum class Format { json, csv };

std::string render(const std::vector<GrowthReport>& reports, Format format);
void emit_report(const std::vector<GrowthReport>& reports, Format format,
                 std::ostream& out);
// Overwrites; never appends.
void emit_report(const std::vector<GrowthReport>& reports, Format format,
                 const std::filesystem::path& path);

// Doubles pass through a 12-significant-digit round trip before emission
// so golden files stay stable.
std::string format_real(double x);
double snap_real(double x);

}  // namespace matgrowth::report
