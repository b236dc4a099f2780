#include "sclosure/report.h"

#include <limits>
#include <sstream>

namespace sclosure
{

Json big_json(BigInt const &n)
{
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(n);
  return n.str();
}

namespace
{

Json subgroup_json(SubgroupInfo const &s)
{
  return Json{{"order", big_json(s.order)}, {"generators", s.generators}};
}

Json witness_json(FusionWitness const &w)
{
  Json j{{"a", w.a.str()}, {"b", w.b.str()}, {"g", w.g.str()}, {"replays", w.replays()}};
  if (!w.subgroup.empty()) {
    Json sub = Json::array();
    for (auto const &x : w.subgroup)
      sub.push_back(x.str());
    j["subgroup"] = sub;
  }
  return j;
}

Json fusion_json(FusionInfo const &f)
{
  Json j{{"against", f.against},
         {"against_order", big_json(f.against_order)},
         {"mode", to_string(f.mode)},
         {"controls", f.controls}};
  j["witness"] = f.witness ? witness_json(*f.witness) : Json(nullptr);
  return j;
}

Json element_json(ExtensionGroup::Element const &x)
{
  return Json{{"e", x.e}, {"r", x.r.str()}};
}

template <class T>
Json opt(std::optional<T> const &v)
{
  return v ? Json(*v) : Json(nullptr);
}

Json opt_big(std::optional<BigInt> const &v) { return v ? big_json(*v) : Json(nullptr); }

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string orders(std::vector<SubgroupInfo> const &v)
{
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + v[i].order.str();
  return s + "}";
}

} // namespace

Json to_json(SylowSummary const &s)
{
  Json j{{"order", big_json(s.order)},
         {"abelian", s.abelian},
         {"special", s.special},
         {"exponent", s.exponent},
         {"center_order", big_json(s.center_order)},
         {"omega1_order", big_json(s.omega1_order)},
         {"frattini_order", big_json(s.frattini_order)},
         {"derived_order", big_json(s.derived_order)},
         {"invariants", s.invariants}};
  j["homocyclic"] = s.homocyclic ? Json{{"rank", s.homocyclic->rank},
                                        {"exponent", s.homocyclic->exponent}}
                                 : Json(nullptr);
  return j;
}

Json to_json(SylowShape const &s)
{
  Json inv = Json::array();
  if (!s.order_only)
    for (auto const &e : s.invariants())
      inv.push_back(big_json(e));
  return Json{{"p", s.p},
              {"order_only", s.order_only},
              {"m0", s.m0},
              {"exponent", big_json(s.exponent)},
              {"rank", s.rank},
              {"b", s.b},
              {"order", big_json(s.order)},
              {"abelian", s.abelian},
              {"homocyclic", s.homocyclic},
              {"invariants", inv},
              {"special_case", opt(s.special_case)},
              {"description", s.describe()}};
}

Json to_json(Verdict const &v)
{
  Json shapes = Json::array();
  for (auto const &sh : v.shapes)
    shapes.push_back(Json{{"description", sh.description},
                          {"order", big_json(sh.order)},
                          {"rank", sh.rank},
                          {"exponent", big_json(sh.exponent)}});
  return Json{{"input", v.input},
              {"p", v.p},
              {"has_proper_strongly_closed", v.has_proper_strongly_closed},
              {"conclusion", v.conclusion},
              {"shapes", shapes},
              {"annotation", v.annotation},
              {"sylow", v.shape ? to_json(*v.shape) : Json(nullptr)}};
}

Json to_json(CrosscheckReport const &r)
{
  return Json{{"spec", r.spec},
              {"p", r.p},
              {"predicted", to_json(r.predicted)},
              {"realization", opt(r.realization)},
              {"brute", r.brute ? to_json(*r.brute) : Json(nullptr)},
              {"agree", opt(r.agree)},
              {"note", r.note}};
}

Json to_json(AnalysisReport const &r)
{
  Json j;
  j["group"] = Json{{"name", r.name}, {"degree", r.degree}, {"order", big_json(r.order)}};
  j["p"] = r.p;
  j["sylow"] = r.sylow ? to_json(*r.sylow) : Json(nullptr);
  j["omega_bar"] = r.omega_bar ? subgroup_json(*r.omega_bar) : Json(nullptr);
  Json mins = Json::array();
  for (auto const &m : r.minimal)
    mins.push_back(subgroup_json(m));
  j["minimal_strongly_closed"] = mins;
  if (r.all_closed) {
    Json all = Json::array();
    for (auto const &a : *r.all_closed)
      all.push_back(subgroup_json(a));
    j["all_strongly_closed"] = all;
  } else {
    j["all_strongly_closed"] = nullptr;
  }
  Json closed = Json::array();
  for (auto const &c : r.closed) {
    Json cj{{"A", subgroup_json(c.A)}};
    cj["script_O"] = c.script_O ? subgroup_json(*c.script_O) : Json(nullptr);
    cj["normalizer_order"] = opt_big(c.normalizer_order);
    cj["fusion"] = c.fusion ? fusion_json(*c.fusion) : Json(nullptr);
    closed.push_back(cj);
  }
  j["closed"] = closed;
  j["normalizer_S_order"] = opt_big(r.normalizer_S_order);
  j["normalizer_Z_order"] = opt_big(r.normalizer_Z_order);
  j["fusion_S"] = r.fusion_S ? fusion_json(*r.fusion_S) : Json(nullptr);
  j["lie"] = r.lie ? to_json(*r.lie) : Json(nullptr);
  j["verdict"] = r.verdict ? to_json(*r.verdict) : Json(nullptr);
  j["verdict_agrees"] = opt(r.verdict_agrees);
  j["verdict_note"] = r.verdict_note;
  j["refused"] = r.refused;
  j["skipped"] = r.skipped;
  j["timing_ms"] = r.timing_ms;
  return j;
}

Json to_json(Prop41Report const &r)
{
  Json j{{"p", r.p},
         {"R_order", big_json(r.R_order)},
         {"T_order", big_json(r.T_order)},
         {"omega_bar_T_order", big_json(r.omega_bar_T_order)},
         {"kernel_order", big_json(r.kernel_order)},
         {"S_order", big_json(r.S_order)},
         {"omega_bar_S_bound", big_json(r.omega_bar_S_bound)},
         {"generated_by_p_elements", r.generated_by_p_elements},
         {"omega_bar_T_proper", r.omega_bar_T_proper},
         {"quotient_not_p_group", r.quotient_not_p_group},
         {"preconditions", r.preconditions},
         {"failing", r.failing},
         {"fixed_dim", r.fixed_dim}};
  if (r.witness)
    j["witness"] = Json{{"z", r.witness->z},
                        {"r", r.witness->r.str()},
                        {"rz", r.witness->rz},
                        {"a", element_json(r.witness->a)},
                        {"b", element_json(r.witness->b)},
                        {"g", element_json(r.witness->g)},
                        {"replays", r.witness->replays}};
  else
    j["witness"] = nullptr;
  j["ok"] = r.ok;
  return j;
}

Json to_json(Prop42Report const &r)
{
  Json zs = Json::array();
  for (auto const &z : r.z)
    zs.push_back(Json{{"z", z.z.str()},
                      {"conjugate_into_X", z.conjugate_into_X},
                      {"min_order", z.min_order},
                      {"witness", opt(z.witness)},
                      {"witness_replays", z.witness_replays},
                      {"free", z.free},
                      {"regular_orbits", z.regular_orbits}});
  return Json{{"p", r.p},
              {"R_order", big_json(r.R_order)},
              {"dim", r.dim},
              {"cocycle",
               Json{{"triples", r.cocycle.triples},
                    {"failures", r.cocycle.failures},
                    {"exhaustive", r.cocycle.exhaustive},
                    {"normalized", r.cocycle.normalized}}},
              {"min_order_x", r.min_order_x},
              {"C_x_E1_nonzero", r.C_x_E1_nonzero},
              {"E1_dim", r.E1_dim},
              {"E1_expected", r.E1_expected},
              {"E2_regular_orbits", r.E2_regular_orbits},
              {"z", zs},
              {"ok", r.ok}};
}

Json to_json(CorpusEntry const &e)
{
  return Json{{"name", e.name},
              {"source", e.source},
              {"degree", e.degree},
              {"order", big_json(e.expected_order)},
              {"tags", e.tags},
              {"lie", opt(e.lie)},
              {"verdict_name", opt(e.verdict_name)},
              {"large", e.large}};
}

std::string render_text(SylowShape const &s)
{
  std::ostringstream o;
  o << "p = " << s.p << "\n";
  if (s.order_only) {
    o << "order only: " << s.order << "\n";
    return o.str();
  }
  o << "m0 = " << s.m0 << ", exponent " << s.exponent << ", rank " << s.rank << ", b = " << s.b
    << "\n";
  o << "order " << s.order << (s.abelian ? ", abelian" : ", non-abelian")
    << (s.homocyclic ? ", homocyclic" : "") << "\n";
  o << "shape: " << s.describe() << "\n";
  return o.str();
}

std::string render_text(Verdict const &v)
{
  std::ostringstream o;
  o << v.input << " at p = " << v.p << ": ";
  if (!v.has_proper_strongly_closed) {
    o << "no proper nontrivial strongly closed subgroup\n";
  } else {
    o << "case " << v.conclusion << "\n";
    for (auto const &sh : v.shapes)
      o << "  A: " << sh.description
        << (sh.description.rfind("order", 0) == 0 ? "" : ", order " + sh.order.str()) << "\n";
    if (!v.annotation.empty())
      o << "  " << v.annotation << "\n";
  }
  if (v.shape)
    o << "Sylow: " << v.shape->describe() << "\n";
  return o.str();
}

std::string render_text(CrosscheckReport const &r)
{
  std::ostringstream o;
  o << r.spec << " at p = " << r.p << "\n";
  o << "predicted: " << r.predicted.describe() << "\n";
  if (r.brute) {
    o << "computed in " << r.realization.value_or("?") << ": order " << r.brute->order
      << (r.brute->abelian ? ", abelian" : ", non-abelian");
    if (!r.brute->invariants.empty()) {
      o << ", invariants";
      for (auto i : r.brute->invariants)
        o << " " << i;
    }
    o << "\n";
  }
  if (r.agree)
    o << "agree: " << yes(*r.agree) << "\n";
  o << r.note << "\n";
  return o.str();
}

std::string render_text(AnalysisReport const &r)
{
  std::ostringstream o;
  o << r.name << ": degree " << r.degree << ", order " << r.order << ", p = " << r.p << "\n";
  if (r.sylow) {
    auto const &s = *r.sylow;
    o << "S: order " << s.order << ", exponent " << s.exponent
      << (s.abelian ? ", abelian" : ", non-abelian") << (s.special ? ", special" : "")
      << "; |Z(S)| = " << s.center_order << ", |Omega_1(S)| = " << s.omega1_order << "\n";
  }
  if (r.omega_bar)
    o << "omega-bar(S): order " << r.omega_bar->order << "\n";
  o << "minimal strongly closed: " << orders(r.minimal) << "\n";
  if (r.all_closed)
    o << "all strongly closed: " << orders(*r.all_closed) << "\n";
  for (auto const &c : r.closed) {
    o << "  A of order " << c.A.order;
    if (c.script_O)
      o << ": O(A) of order " << c.script_O->order;
    if (c.normalizer_order)
      o << ", |N_G(A)| = " << *c.normalizer_order;
    if (c.fusion)
      o << ", controls fusion: " << yes(c.fusion->controls);
    o << "\n";
  }
  if (r.normalizer_S_order)
    o << "|N_G(S)| = " << *r.normalizer_S_order << ", |N_G(Z(S))| = " << *r.normalizer_Z_order
      << "\n";
  if (r.fusion_S)
    o << "N_G(S) controls fusion (" << to_string(r.fusion_S->mode)
      << "): " << yes(r.fusion_S->controls) << "\n";
  if (r.lie)
    o << "Lie crosscheck: " << r.lie->note << "\n";
  if (r.verdict) {
    o << "verdict: " << render_text(*r.verdict);
    o << "verdict agrees with computation: " << yes(r.verdict_agrees.value_or(false)) << " ("
      << r.verdict_note << ")\n";
  }
  for (auto const &[k, v] : r.refused)
    o << "refused " << k << ": " << v << "\n";
  for (auto const &[k, v] : r.skipped)
    o << "skipped " << k << ": " << v << "\n";
  o << "time: " << r.timing_ms << " ms\n";
  return o.str();
}

std::string render_text(Prop41Report const &r)
{
  std::ostringstream o;
  o << "|R| = " << r.R_order << ", |T| = " << r.T_order << ", |omega-bar(T)| = "
    << r.omega_bar_T_order << ", |S| = " << r.S_order << ", |omega-bar(S)| <= "
    << r.omega_bar_S_bound << "\n";
  o << "preconditions: " << yes(r.preconditions);
  if (!r.failing.empty())
    o << " (" << r.failing << ")";
  o << "\n";
  if (r.witness)
    o << "witness r = " << r.witness->r.str() << ", replays: " << yes(r.witness->replays) << "\n";
  o << "N_G(S) fails to control fusion: " << yes(r.ok) << "\n";
  return o.str();
}

std::string render_text(Prop42Report const &r)
{
  std::ostringstream o;
  o << "|R| = " << r.R_order << ", dim E = " << r.dim << ", p = " << r.p << "\n";
  o << "cocycle: " << r.cocycle.triples << " triples"
    << (r.cocycle.exhaustive ? " (exhaustive)" : "") << ", " << r.cocycle.failures
    << " failures\n";
  o << "min order over the x coset: " << r.min_order_x << "\n";
  o << "E1 dim " << r.E1_dim << " (expected " << r.E1_expected << "), regular orbits "
    << r.E2_regular_orbits << "\n";
  for (auto const &z : r.z)
    o << "  z = " << z.z.str() << ": " << (z.conjugate_into_X ? "conjugate into X, " : "")
      << "min order " << z.min_order << (z.free ? ", free" : "")
      << (z.witness ? (z.witness_replays ? ", witness replays" : ", witness FAILS") : "")
      << "\n";
  o << "ok: " << yes(r.ok) << "\n";
  return o.str();
}

Json without_timing(Json j)
{
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto it = j.begin(); it != j.end(); ++it)
      *it = without_timing(*it);
  } else if (j.is_array()) {
    for (auto &v : j)
      v = without_timing(v);
  }
  return j;
}

} // namespace sclosure
