#include "sclosure/strong_closure.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>
#include <unordered_map>

#include "sclosure/indexed_group.h"
#include "sclosure/sylow.h"

namespace sclosure
{

bool FusionWitness::replays() const { return conjugate(a, g) == b; }

FusionData::FusionData(GeneratedGroup G, GeneratedGroup S, std::uint64_t p, Caps const &caps)
  : G_(std::move(G)), S_(std::move(S)), p_(p), caps_(caps)
{
  if (!S_.is_subgroup_of(G_))
    throw std::invalid_argument("FusionData: S is not a subgroup of G");
  if (!is_p_group(S_, p_))
    throw std::invalid_argument("FusionData: S is not a p-group");
  require_within(S_.order(), caps_.max_pgroup, "Sylow subgroup");
  classes_ = conjugacy_classes(G_, caps_);
  s_elements_ = S_.elements(caps_.max_pgroup);
  by_label_.resize(classes_.representatives.size());
  for (std::size_t i = 0; i < s_elements_.size(); ++i) {
    auto c = static_cast<std::uint32_t>(classes_.locate(G_, s_elements_[i]));
    labels_.push_back(c);
    by_label_[c].push_back(static_cast<std::uint32_t>(i));
  }
}

std::vector<std::uint32_t> const &FusionData::class_in_s(std::uint32_t c) const
{
  return by_label_.at(c);
}

std::vector<std::uint32_t> FusionData::labels_of(GeneratedGroup const &A) const
{
  std::set<std::uint32_t> ls;
  A.for_each_element([&](Permutation const &a) { ls.insert(labels_[*S_.rank(a)]); },
                     caps_.max_pgroup);
  return {ls.begin(), ls.end()};
}

Permutation find_conjugator(GeneratedGroup const &G, Permutation const &a,
                            Permutation const &b, Caps const &caps)
{
  require_within(G.order(), caps.max_elements, "conjugator search");
  std::uint64_t n = G.order_u64();
  for (std::uint64_t r = 0; r < n; ++r) {
    Permutation g = G.unrank(r);
    if (conjugate(a, g) == b)
      return g;
  }
  throw VerificationFailure("no conjugating element found for " + a.str() + " -> " + b.str());
}

ClosureCheck is_strongly_closed(FusionData const &F, GeneratedGroup const &A,
                                bool want_conjugator)
{
  if (!A.is_subgroup_of(F.S()))
    throw std::invalid_argument("is_strongly_closed: A is not contained in S");
  std::map<std::uint32_t, Permutation> first;
  A.for_each_element(
    [&](Permutation const &a) { first.emplace(F.label(*F.S().rank(a)), a); },
    F.caps().max_pgroup);

  ClosureCheck res;
  for (auto const &[label, a] : first)
    for (auto i : F.class_in_s(label)) {
      Permutation const &b = F.s_element(i);
      if (A.contains(b))
        continue;
      res.closed = false;
      FusionWitness w{a, b, Permutation(F.G().degree()), {}};
      if (want_conjugator)
        w.g = find_conjugator(F.G(), a, b, F.caps());
      res.witness = std::move(w);
      return res;
    }
  return res;
}

GeneratedGroup strong_closure(FusionData const &F, std::vector<Permutation> const &X)
{
  GeneratedGroup A = generated(F.S(), X);
  while (true) {
    std::vector<Permutation> fresh;
    for (auto label : F.labels_of(A))
      for (auto i : F.class_in_s(label))
        if (!A.contains(F.s_element(i)))
          fresh.push_back(F.s_element(i));
    if (fresh.empty())
      return A;
    A = A.with(fresh);
  }
}

GeneratedGroup omega_bar(FusionData const &F)
{
  std::vector<Permutation> X;
  for (std::size_t i = 0; i < F.s_size(); ++i)
    if (F.s_element(i).order() == F.p())
      X.push_back(F.s_element(i));
  return strong_closure(F, X);
}

std::vector<GeneratedGroup> minimal_strongly_closed(FusionData const &F)
{
  std::vector<GeneratedGroup> closures;
  std::set<std::uint32_t> done;
  for (std::size_t i = 0; i < F.s_size(); ++i) {
    Permutation const &z = F.s_element(i);
    if (z.order() != F.p() || !done.insert(F.label(i)).second)
      continue;
    GeneratedGroup A = strong_closure(F, {z});
    bool dup = false;
    for (auto const &B : closures)
      if (B.same_group(A))
        dup = true;
    if (!dup)
      closures.push_back(std::move(A));
  }
  std::vector<GeneratedGroup> minimal;
  for (auto const &A : closures) {
    bool has_smaller = false;
    for (auto const &B : closures)
      if (B.order() < A.order() && B.is_subgroup_of(A))
        has_smaller = true;
    if (!has_smaller)
      minimal.push_back(A);
  }
  return minimal;
}

std::vector<GeneratedGroup> all_strongly_closed_brute(FusionData const &F)
{
  require_within(F.S().order(), F.caps().max_subgroup_enum, "subgroup enumeration of S");
  IndexedGroup IS(F.S(), F.caps().max_subgroup_enum);
  std::vector<GeneratedGroup> out;
  for (auto const &H : IS.all_subgroups()) {
    std::set<std::uint32_t> labels;
    for (auto i = H.members.find_first(); i != Subset::npos; i = H.members.find_next(i))
      labels.insert(F.label(i));
    bool closed = true;
    for (auto l : labels) {
      for (auto j : F.class_in_s(l))
        if (!H.members.test(j)) {
          closed = false;
          break;
        }
      if (!closed)
        break;
    }
    if (closed)
      out.push_back(IS.to_group(H.members));
  }
  std::stable_sort(out.begin(), out.end(), [](GeneratedGroup const &a, GeneratedGroup const &b) {
    return a.order() < b.order();
  });
  return out;
}

bool sylow_in(GeneratedGroup const &A, GeneratedGroup const &N, std::uint64_t p,
              Caps const &caps)
{
  return intersection(A, N, caps).order() == p_part(N.order(), p);
}

GeneratedGroup script_O(std::vector<GeneratedGroup> const &normals, GeneratedGroup const &A,
                        std::uint64_t p, Caps const &caps)
{
  if (normals.empty())
    throw std::invalid_argument("script_O: empty normal subgroup list");
  GeneratedGroup res = GeneratedGroup::trivial(A.degree());
  for (auto const &N : normals)
    if (sylow_in(A, N, p, caps))
      res = join(res, N);
  if (!sylow_in(A, res, p, caps))
    throw VerificationFailure("join of qualifying normal subgroups does not qualify");
  return res;
}

GeneratedGroup script_O(GeneratedGroup const &G, GeneratedGroup const &A, std::uint64_t p,
                        Caps const &caps)
{
  if (!A.is_subgroup_of(G) || !is_p_group(A, p))
    throw std::invalid_argument("script_O: A must be a p-subgroup of G");
  return script_O(normal_subgroups(G, caps), A, p, caps);
}

std::string to_string(FusionMode m)
{
  switch (m) {
  case FusionMode::Element: return "element";
  case FusionMode::Cyclic: return "cyclic";
  case FusionMode::Subset: return "subset";
  }
  return "?";
}

FusionMode parse_fusion_mode(std::string const &s)
{
  if (s == "element")
    return FusionMode::Element;
  if (s == "cyclic")
    return FusionMode::Cyclic;
  if (s == "subset")
    return FusionMode::Subset;
  throw InputError("unknown fusion mode '" + s + "'");
}

namespace
{

// H-class label of every element of S
std::vector<std::uint32_t> h_labels(FusionData const &F, GeneratedGroup const &H)
{
  auto table = conjugacy_classes(H, F.caps());
  std::vector<std::uint32_t> out(F.s_size());
  for (std::size_t i = 0; i < F.s_size(); ++i)
    out[i] = static_cast<std::uint32_t>(table.locate(H, F.s_element(i)));
  return out;
}

FusionVerdict element_control(FusionData const &F, GeneratedGroup const &H, FusionMode mode)
{
  FusionVerdict v;
  v.mode = mode;
  auto hl = h_labels(F, H);
  std::vector<bool> seen(F.s_size(), false);
  // cyclic subgroups <a>, a walked in S order; a map <a> -> S is a -> b
  for (std::size_t i = 0; i < F.s_size(); ++i) {
    if (mode == FusionMode::Element && seen[i])
      continue;
    for (auto j : F.class_in_s(F.label(i))) {
      seen[j] = true;
      if (hl[j] == hl[i])
        continue;
      Permutation const &a = F.s_element(i);
      Permutation const &b = F.s_element(j);
      v.controls = false;
      v.witness = FusionWitness{a, b, find_conjugator(F.G(), a, b, F.caps()), {a}};
      return v;
    }
  }
  return v;
}

// distinct conjugation actions of the elements of K on S; -1 marks "leaves S"
std::unordered_map<std::string, Permutation> actions_on(FusionData const &F,
                                                        GeneratedGroup const &K)
{
  std::unordered_map<std::string, Permutation> acts;
  std::string key(F.s_size() * sizeof(std::int32_t), '\0');
  K.for_each_element(
    [&](Permutation const &g) {
      for (std::size_t i = 0; i < F.s_size(); ++i) {
        auto r = F.S().rank(conjugate(F.s_element(i), g));
        std::int32_t v = r ? static_cast<std::int32_t>(*r) : -1;
        std::memcpy(key.data() + i * sizeof(v), &v, sizeof(v));
      }
      acts.emplace(key, g);
    },
    F.caps().max_elements);
  return acts;
}

std::int32_t action_at(std::string const &key, std::size_t i)
{
  std::int32_t v;
  std::memcpy(&v, key.data() + i * sizeof(v), sizeof(v));
  return v;
}

FusionVerdict subset_control(FusionData const &F, GeneratedGroup const &H)
{
  require_within(F.S().order(), F.caps().max_subgroup_enum, "subset-mode fusion check");
  FusionVerdict v;
  v.mode = FusionMode::Subset;
  IndexedGroup IS(F.S(), F.caps().max_subgroup_enum);
  auto subgroups = IS.all_subgroups();
  auto gacts = actions_on(F, F.G());
  auto hacts = actions_on(F, H);

  // order the G-actions deterministically for reproducible witnesses
  std::vector<std::pair<std::string, Permutation>> gs(gacts.begin(), gacts.end());
  std::sort(gs.begin(), gs.end(), [](auto const &x, auto const &y) { return x.second < y.second; });

  for (auto const &P : subgroups) {
    if (P.generators.empty())
      continue;
    auto restrict = [&](std::string const &act) {
      std::vector<std::int32_t> img;
      for (auto g : P.generators) {
        auto x = action_at(act, g);
        if (x < 0)
          return std::vector<std::int32_t>{};
        img.push_back(x);
      }
      return img;
    };
    std::set<std::vector<std::int32_t>> hmaps;
    for (auto const &[act, h] : hacts) {
      auto m = restrict(act);
      if (!m.empty())
        hmaps.insert(std::move(m));
    }
    for (auto const &[act, g] : gs) {
      auto m = restrict(act);
      if (m.empty() || hmaps.count(m))
        continue;
      v.controls = false;
      std::vector<Permutation> pg;
      for (auto i : P.generators)
        pg.push_back(F.s_element(i));
      Permutation a = pg.front();
      v.witness = FusionWitness{a, conjugate(a, g), g, std::move(pg)};
      return v;
    }
  }
  return v;
}

} // namespace

FusionVerdict fusion_control(FusionData const &F, GeneratedGroup const &H, FusionMode mode)
{
  if (!F.S().is_subgroup_of(H) || !H.is_subgroup_of(F.G()))
    throw std::invalid_argument("fusion_control: need S <= H <= G");
  if (mode == FusionMode::Subset)
    return subset_control(F, H);
  return element_control(F, H, mode);
}

} // namespace sclosure
