#include "sclosure/analysis.h"

#include <chrono>
#include <set>

#include "sclosure/matrix_groups.h"
#include "sclosure/sylow.h"

namespace sclosure
{

SubgroupInfo describe(GeneratedGroup const &H)
{
  SubgroupInfo info;
  info.order = H.order();
  for (auto const &g : H.generators())
    info.generators.push_back(g.str());
  return info;
}

SylowSummary summarize(PGroupProfile const &prof)
{
  SylowSummary s;
  s.order = prof.order;
  s.abelian = prof.abelian;
  s.special = prof.special;
  s.exponent = prof.exponent;
  s.center_order = prof.center.order();
  s.omega1_order = prof.omega1.order();
  s.frattini_order = prof.frattini.order();
  s.derived_order = prof.derived.order();
  s.invariants = prof.abelian_invariants;
  s.homocyclic = prof.homocyclic;
  return s;
}

std::optional<std::string> realization_of(LieSpec const &spec)
{
  std::string q = std::to_string(spec.q);
  if (spec.family == 'A' && spec.twist == 1 && spec.rank == 1)
    return "SL(2," + q + ")";
  if (spec.family == 'A' && spec.twist == 1 && spec.rank == 2)
    return "SL(3," + q + ")";
  if (spec.family == 'A' && spec.twist == 2 && spec.rank == 2)
    return "SU(3," + q + ")";
  if ((spec.family == 'B' || spec.family == 'C') && spec.twist == 1 && spec.rank == 2)
    return "Sp(4," + q + ")";
  return std::nullopt;
}

CrosscheckReport compare_shape(LieSpec const &spec, std::uint64_t p, SylowSummary const &brute)
{
  CrosscheckReport r;
  r.spec = spec.name();
  r.p = p;
  r.predicted = sylow_shape(spec, p);
  r.brute = brute;
  auto const &pr = r.predicted;
  bool ok = pr.order == brute.order;
  std::string why;
  if (!ok)
    why = "order differs";
  if (ok && !pr.order_only) {
    if (pr.abelian != brute.abelian) {
      ok = false;
      why = "abelian flag differs";
    } else if (pr.abelian && pr.homocyclic && !pr.special_case) {
      std::vector<std::uint64_t> want;
      for (auto const &e : pr.invariants())
        want.push_back(static_cast<std::uint64_t>(e));
      if (want != brute.invariants) {
        ok = false;
        why = "abelian invariants differ";
      }
    }
  }
  r.agree = ok;
  r.note = ok ? "prediction matches the computed Sylow subgroup" : why;
  return r;
}

CrosscheckReport crosscheck(LieSpec const &spec, std::uint64_t p, Caps const &caps)
{
  auto real = realization_of(spec);
  CrosscheckReport r;
  if (real) {
    try {
      auto G = permutation_image(MatrixGroupSpec::parse(*real), caps);
      auto S = sylow_subgroup(G, p, caps);
      r = compare_shape(spec, p, summarize(p_group_profile(S, p, caps)));
      r.realization = real;
      return r;
    } catch (CapExceeded const &e) {
      r.note = std::string("predictor only: realization refused (") + e.what() + ")";
    }
  } else {
    r.note = "predictor only: no matrix realization for " + spec.name();
  }
  r.spec = spec.name();
  r.p = p;
  r.predicted = sylow_shape(spec, p);
  return r;
}

namespace
{

template <class F>
void section(AnalysisReport &rep, std::string const &name, F &&body)
{
  try {
    body();
  } catch (CapExceeded const &e) {
    rep.refused[name] = e.what();
  } catch (InputError const &e) {
    rep.skipped[name] = e.what();
  }
}

} // namespace

AnalysisReport analyze(LoadedGroup const &LG, std::uint64_t p, AnalysisOptions const &opts,
                       Caps const &caps)
{
  auto t0 = std::chrono::steady_clock::now();
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  GeneratedGroup const &G = LG.group;
  AnalysisReport rep;
  rep.name = LG.entry.name;
  rep.degree = G.degree();
  rep.order = G.order();
  rep.p = p;

  // Sylow and fusion data are needed by everything else, so their refusal is
  // the caller's problem.
  GeneratedGroup S = sylow_subgroup(G, p, caps);
  PGroupProfile prof = p_group_profile(S, p, caps);
  rep.sylow = summarize(prof);
  FusionData F(G, S, p, caps);

  rep.omega_bar = describe(omega_bar(F));
  auto minimal = minimal_strongly_closed(F);
  for (auto const &A : minimal)
    rep.minimal.push_back(describe(A));

  std::vector<GeneratedGroup> closed;
  section(rep, "all_strongly_closed", [&] {
    auto all = all_strongly_closed_brute(F);
    rep.all_closed.emplace();
    for (auto const &A : all)
      rep.all_closed->push_back(describe(A));
    closed = all;
  });
  if (!rep.all_closed) {
    closed = minimal;
    if (!S.is_trivial()
        && std::none_of(closed.begin(), closed.end(),
                        [&](GeneratedGroup const &A) { return A.order() == S.order(); }))
      closed.push_back(S);
  }

  std::optional<std::vector<GeneratedGroup>> normals;
  section(rep, "normal_subgroups", [&] { normals = normal_subgroups(G, caps); });

  for (std::size_t i = 0; i < closed.size(); ++i) {
    auto const &A = closed[i];
    ClosedInfo ci;
    ci.A = describe(A);
    std::string tag = "closed[" + std::to_string(i) + "]";
    if (normals && !A.is_trivial())
      section(rep, tag + ".script_O",
              [&] { ci.script_O = describe(script_O(*normals, A, p, caps)); });
    if (!A.is_trivial())
      section(rep, tag + ".normalizer", [&] {
        auto N = normalizer(G, A, caps);
        ci.normalizer_order = N.order();
        auto v = fusion_control(F, N, opts.mode);
        ci.fusion = FusionInfo{"N_G(A)", N.order(), v.mode, v.controls, v.witness};
      });
    rep.closed.push_back(std::move(ci));
  }

  if (!S.is_trivial())
    section(rep, "normalizers", [&] {
      auto NS = normalizer(G, S, caps);
      auto NZ = normalizer(G, prof.center, caps);
      rep.normalizer_S_order = NS.order();
      rep.normalizer_Z_order = NZ.order();
      auto v = fusion_control(F, NS, opts.mode);
      rep.fusion_S = FusionInfo{"N_G(S)", NS.order(), v.mode, v.controls, v.witness};
    });

  if (opts.crosscheck && LG.entry.lie)
    section(rep, "lie", [&] {
      rep.lie = compare_shape(LieSpec::parse(*LG.entry.lie), p, *rep.sylow);
      rep.lie->realization = LG.entry.source;
    });

  if (opts.verdict && LG.entry.verdict_name)
    section(rep, "verdict", [&] {
      auto v = strongly_closed_verdict(*LG.entry.verdict_name, p);
      bool proper = std::any_of(minimal.begin(), minimal.end(), [&](GeneratedGroup const &A) {
        return A.order() < S.order();
      });
      bool agree = proper == v.has_proper_strongly_closed;
      std::string note = agree ? "existence agrees" : "existence disagrees";
      if (agree && rep.all_closed && !v.shapes.empty()) {
        std::set<BigInt> found, predicted;
        for (auto const &A : *rep.all_closed)
          if (A.order > 1 && A.order < S.order())
            found.insert(A.order);
        for (auto const &sh : v.shapes)
          predicted.insert(sh.order);
        if (found != predicted) {
          agree = false;
          note = "orders of proper strongly closed subgroups differ from the admissible shapes";
        } else {
          note = "existence and orders agree";
        }
      }
      rep.verdict = std::move(v);
      rep.verdict_agrees = agree;
      rep.verdict_note = note;
    });

  rep.timing_ms =
    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

} // namespace sclosure
