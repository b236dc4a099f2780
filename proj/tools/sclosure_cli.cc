#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sclosure/analysis.h"
#include "sclosure/corpus.h"
#include "sclosure/extensions.h"
#include "sclosure/fp_module.h"
#include "sclosure/matrix_groups.h"
#include "sclosure/report.h"

using namespace sclosure;

namespace
{

enum Exit
{
  Ok = 0,
  Internal = 1,
  Refused = 2,
  Failed = 3,
  BadInput = 4
};

struct Common
{
  bool json = false;
  bool allow_large = false;
  std::optional<std::uint64_t> max_elements, max_pgroup, max_degree;

  Caps caps() const
  {
    Caps c = Caps::from_env();
    if (max_elements)
      c.max_elements = *max_elements;
    if (max_pgroup)
      c.max_pgroup = *max_pgroup;
    if (max_degree)
      c.max_degree = *max_degree;
    return c;
  }
};

void add_common(CLI::App *cmd, Common &c)
{
  cmd->add_flag("--json", c.json, "JSON output");
  cmd->add_flag("--allow-large", c.allow_large, "allow corpus entries marked large");
  cmd->add_option("--max-elements", c.max_elements, "cap on enumerated elements (SC_MAX_ELEMENTS)");
  cmd->add_option("--max-pgroup", c.max_pgroup, "cap on Sylow subgroup order (SC_MAX_PGROUP)");
  cmd->add_option("--max-degree", c.max_degree, "cap on permutation degree (SC_MAX_DEGREE)");
}

void emit(Common const &c, Json const &j, std::string const &text)
{
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

struct SpecArgs
{
  std::string spec;
  std::string family;
  unsigned ell = 0;
  unsigned twist = 1;
  std::uint64_t q = 0;

  LieSpec get() const
  {
    if (!spec.empty())
      return LieSpec::parse(spec);
    if (family.size() != 1 || ell == 0 || q == 0)
      throw InputError("give a spec such as 2A2(3), or --family, --ell and --q");
    return LieSpec::make(family[0], ell, twist, q);
  }
};

void add_spec(CLI::App *cmd, SpecArgs &s)
{
  cmd->add_option("spec", s.spec, "Lie-type spec, e.g. A10(243) or 2A2(3)");
  cmd->add_option("--family", s.family, "family letter A-G");
  cmd->add_option("--ell", s.ell, "Lie rank");
  cmd->add_option("--twist", s.twist, "1, 2 or 3");
  cmd->add_option("--q", s.q, "field size");
}

Permutation perm_arg(std::string const &text, std::size_t degree)
{
  try {
    return Permutation::parse(text, degree);
  } catch (InputError const &) {
    throw;
  } catch (std::exception const &e) {
    throw InputError("bad permutation '" + text + "': " + e.what());
  }
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Strongly closed subgroups of finite groups"};
  app.require_subcommand(1);
  Common common;

  // analyze
  auto *an = app.add_subcommand("analyze", "strongly closed subgroups of a group at a prime");
  std::string an_group, an_mode = "element";
  std::uint64_t an_p = 0;
  an->add_option("group", an_group, "corpus name, matrix group spec, An/Sn or file")->required();
  an->add_option("--p", an_p, "prime")->required();
  an->add_option("--mode", an_mode, "fusion control mode: element, cyclic or subset");
  add_common(an, common);

  // predict
  auto *pr = app.add_subcommand("predict", "Sylow shape and classification verdict");
  SpecArgs pr_spec;
  std::string pr_name;
  std::uint64_t pr_p = 0;
  add_spec(pr, pr_spec);
  pr->add_option("--name", pr_name, "named simple group for the verdict, e.g. J2, A9, U3(8)");
  pr->add_option("--p", pr_p, "prime")->required();
  add_common(pr, common);

  // crosscheck
  auto *cc = app.add_subcommand("crosscheck", "prediction against a computed Sylow subgroup");
  SpecArgs cc_spec;
  std::uint64_t cc_p = 0;
  add_spec(cc, cc_spec);
  cc->add_option("--p", cc_p, "prime")->required();
  add_common(cc, common);

  // extend
  auto *ex = app.add_subcommand("extend", "split or coinduced extensions E.R");
  std::string ex_kind, ex_R, ex_module = "perm:natural", ex_x;
  std::vector<std::string> ex_z;
  std::uint64_t ex_p = 0, ex_samples = 100000;
  ex->add_option("kind", ex_kind, "split or coinduced")
    ->required()
    ->check(CLI::IsMember({"split", "coinduced"}));
  ex->add_option("--R", ex_R, "the group R")->required();
  ex->add_option("--p", ex_p, "prime")->required();
  ex->add_option("--module", ex_module, "split: perm:natural, perm:blocks or perm:cosets");
  ex->add_option("--x", ex_x, "element of order p (coinduced; cosets of <x> for perm:cosets)");
  ex->add_option("--z", ex_z, "elements of order p to test for splitting (coinduced)");
  ex->add_option("--samples", ex_samples, "random cocycle triples");
  add_common(ex, common);

  // corpus list
  auto *co = app.add_subcommand("corpus", "built-in groups");
  co->require_subcommand(1);
  auto *co_list = co->add_subcommand("list", "list corpus entries");
  add_common(co_list, common);

  // verify-classification
  auto *vc = app.add_subcommand("verify-classification",
                                "compare the classification verdict with brute force");
  std::vector<std::string> vc_groups;
  std::vector<std::uint64_t> vc_primes;
  std::uint64_t vc_max_order = 100000;
  vc->add_option("--group", vc_groups, "corpus entries (default: every simple entry)");
  vc->add_option("--p", vc_primes, "primes (default: every prime dividing the order)");
  vc->add_option("--max-order", vc_max_order, "skip groups larger than this");
  add_common(vc, common);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? Ok : BadInput;
  }

  try {
    Caps caps = common.caps();

    if (*an) {
      auto G = corpus_load(an_group, caps, common.allow_large);
      AnalysisOptions opts;
      opts.mode = parse_fusion_mode(an_mode);
      auto rep = analyze(G, an_p, opts, caps);
      emit(common, to_json(rep), render_text(rep));
      if (rep.verdict_agrees == false)
        return Failed;
      return Ok;
    }

    if (*pr) {
      if (!is_prime(pr_p))
        throw InputError(std::to_string(pr_p) + " is not prime");
      Json j;
      std::string text;
      if (pr_name.empty() || !pr_spec.spec.empty() || !pr_spec.family.empty()) {
        auto spec = pr_spec.get();
        j["spec"] = spec.name();
        if (spec.q % pr_p == 0) {
          j["sylow"] = nullptr;
          text += spec.name() + ": defining characteristic, no torus prediction\n";
        } else {
          auto sh = sylow_shape(spec, pr_p);
          j["sylow"] = to_json(sh);
          text += spec.name() + "\n" + render_text(sh);
        }
        if (pr_name.empty()) {
          try {
            auto v = strongly_closed_verdict(spec, pr_p);
            j["verdict"] = to_json(v);
            text += render_text(v);
          } catch (InputError const &e) {
            j["verdict"] = nullptr;
            j["verdict_error"] = e.what();
            text += std::string("no verdict: ") + e.what() + "\n";
          }
        }
      }
      if (!pr_name.empty()) {
        auto v = strongly_closed_verdict(pr_name, pr_p);
        j["verdict"] = to_json(v);
        text += render_text(v);
      }
      emit(common, j, text);
      return Ok;
    }

    if (*cc) {
      auto rep = crosscheck(cc_spec.get(), cc_p, caps);
      emit(common, to_json(rep), render_text(rep));
      return rep.agree == false ? Failed : Ok;
    }

    if (*ex) {
      if (ex_kind == "coinduced") {
        if (ex_x.empty())
          throw InputError("coinduced extensions need --x");
        auto R = corpus_load(ex_R, caps, common.allow_large).group;
        Permutation x = perm_arg(ex_x, R.degree());
        std::vector<Permutation> zs;
        for (auto const &z : ex_z)
          zs.push_back(perm_arg(z, R.degree()));
        auto rep = verify_prop42(R, x, zs, ex_p, ex_samples, caps);
        emit(common, to_json(rep), render_text(rep));
        return rep.ok ? Ok : Failed;
      }
      std::optional<FpModule> M;
      if (ex_module == "perm:natural") {
        M = natural_perm_module(corpus_load(ex_R, caps, common.allow_large).group, ex_p);
      } else if (ex_module == "perm:blocks") {
        auto spec = MatrixGroupSpec::parse(ex_R);
        auto R = permutation_image(spec, Action::NonzeroVectors, caps);
        M = block_perm_module(R, projective_blocks(spec), ex_p);
      } else if (ex_module == "perm:cosets") {
        auto R = corpus_load(ex_R, caps, common.allow_large).group;
        if (ex_x.empty())
          throw InputError("perm:cosets needs --x");
        GeneratedGroup X(R.degree(), {perm_arg(ex_x, R.degree())});
        M = coset_perm_module(R, X, ex_p);
      } else {
        throw InputError("unknown module '" + ex_module + "'");
      }
      auto rep = verify_prop41(*M, caps);
      emit(common, to_json(rep), render_text(rep));
      if (!rep.preconditions)
        return BadInput;
      return rep.ok ? Ok : Failed;
    }

    if (*co_list) {
      Json j = Json::array();
      std::string text;
      for (auto const &e : corpus_entries()) {
        j.push_back(to_json(e));
        text += e.name + "  degree " + std::to_string(e.degree) + "  order " +
                e.expected_order.str() + "  " + e.source + "\n";
      }
      emit(common, j, text);
      return Ok;
    }

    if (*vc) {
      Json runs = Json::array();
      std::string text;
      bool all_ok = true;
      for (auto const &e : corpus_entries()) {
        if (!e.verdict_name)
          continue;
        if (!vc_groups.empty()
            && std::find(vc_groups.begin(), vc_groups.end(), e.name) == vc_groups.end())
          continue;
        if (e.expected_order > vc_max_order || (e.large && !common.allow_large))
          continue;
        auto G = corpus_load(e.name, caps, common.allow_large);
        auto primes = vc_primes.empty() ? prime_divisors(G.group.order()) : vc_primes;
        for (auto p : primes) {
          AnalysisOptions opts;
          opts.crosscheck = false;
          auto rep = analyze(G, p, opts, caps);
          // no verdict for this prime: nothing to compare, not a failure
          bool skipped = !rep.verdict.has_value();
          bool ok = skipped || rep.verdict_agrees.value_or(false);
          all_ok = all_ok && ok;
          Json r{{"group", e.name},
                 {"p", p},
                 {"verdict", rep.verdict ? to_json(*rep.verdict) : Json(nullptr)},
                 {"minimal_orders", Json::array()},
                 {"agree", skipped ? Json(nullptr) : Json(ok)},
                 {"note", rep.verdict_note}};
          for (auto const &m : rep.minimal)
            r["minimal_orders"].push_back(big_json(m.order));
          if (rep.skipped.count("verdict"))
            r["note"] = rep.skipped.at("verdict");
          runs.push_back(r);
          text += std::string(skipped ? "skipped   " : ok ? "agree     " : "DISAGREE  ") + e.name + " p=" + std::to_string(p) +
                  ": " + r["note"].get<std::string>() + "\n";
        }
      }
      emit(common, Json{{"runs", runs}, {"all_agree", all_ok}}, text);
      return all_ok ? Ok : Failed;
    }
  } catch (CapExceeded const &e) {
    std::cerr << "refused: " << e.what() << "\n";
    return Refused;
  } catch (VerificationFailure const &e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return Failed;
  } catch (InputError const &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return BadInput;
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Internal;
  }
  return Ok;
}
