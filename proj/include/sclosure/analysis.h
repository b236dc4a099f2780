#ifndef SCLOSURE_ANALYSIS_H
#define SCLOSURE_ANALYSIS_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sclosure/corpus.h"
#include "sclosure/lie_predictor.h"
#include "sclosure/strong_closure.h"
#include "sclosure/sylow.h"

namespace sclosure
{

struct SubgroupInfo
{
  BigInt order;
  std::vector<std::string> generators;
};

SubgroupInfo describe(GeneratedGroup const &H);

struct FusionInfo
{
  /// "N_G(S)" or "N_G(A)" with A given by its order.
  std::string against;
  BigInt against_order;
  FusionMode mode = FusionMode::Element;
  bool controls = true;
  std::optional<FusionWitness> witness;
};

struct ClosedInfo
{
  SubgroupInfo A;
  std::optional<SubgroupInfo> script_O;
  std::optional<BigInt> normalizer_order;
  std::optional<FusionInfo> fusion;
};

struct SylowSummary
{
  BigInt order;
  bool abelian = true;
  bool special = false;
  std::uint64_t exponent = 1;
  BigInt center_order, omega1_order, frattini_order, derived_order;
  std::vector<std::uint64_t> invariants;
  std::optional<Homocyclic> homocyclic;
};

struct CrosscheckReport
{
  std::string spec;
  std::uint64_t p = 0;
  SylowShape predicted;
  /// Matrix group used for the brute side, if any.
  std::optional<std::string> realization;
  std::optional<SylowSummary> brute;
  std::string note;
  /// Absent when there was nothing to compare with.
  std::optional<bool> agree;
};

struct AnalysisReport
{
  std::string name;
  std::size_t degree = 0;
  BigInt order;
  std::uint64_t p = 0;
  std::optional<SylowSummary> sylow;
  std::optional<SubgroupInfo> omega_bar;
  std::vector<SubgroupInfo> minimal;
  /// All strongly closed subgroups when |S| is small enough to enumerate.
  std::optional<std::vector<SubgroupInfo>> all_closed;
  /// The subgroups examined in detail: the full list if known, else the
  /// minimal ones together with S.
  std::vector<ClosedInfo> closed;
  std::optional<BigInt> normalizer_S_order;
  std::optional<BigInt> normalizer_Z_order;
  std::optional<FusionInfo> fusion_S;
  std::optional<CrosscheckReport> lie;
  std::optional<Verdict> verdict;
  /// Whether the brute list matches the verdict (simple groups only).
  std::optional<bool> verdict_agrees;
  std::string verdict_note;
  /// Sections skipped because a cap was hit, with the message.
  std::map<std::string, std::string> refused;
  /// Sections that do not apply to this input (e.g. defining characteristic).
  std::map<std::string, std::string> skipped;
  double timing_ms = 0;
};

struct AnalysisOptions
{
  FusionMode mode = FusionMode::Element;
  bool crosscheck = true;
  bool verdict = true;
};

AnalysisReport analyze(LoadedGroup const &G, std::uint64_t p,
                       AnalysisOptions const &opts = {}, Caps const &caps = default_caps());

/// Sylow shape prediction against a brute-force Sylow subgroup of the
/// matrix group realizing the spec (A1, A2, 2A2 and C2/B2 are realizable).
CrosscheckReport crosscheck(LieSpec const &spec, std::uint64_t p,
                            Caps const &caps = default_caps());

/// Compares a prediction with a computed Sylow subgroup.
CrosscheckReport compare_shape(LieSpec const &spec, std::uint64_t p, SylowSummary const &brute);

SylowSummary summarize(PGroupProfile const &prof);

/// Matrix group spec realizing the universal group, if there is one.
std::optional<std::string> realization_of(LieSpec const &spec);

} // namespace sclosure

#endif // SCLOSURE_ANALYSIS_H
