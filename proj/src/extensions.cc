#include "sclosure/extensions.h"

#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "sclosure/strong_closure.h"
#include "sclosure/sylow.h"

namespace sclosure
{

namespace
{

FpVec zero_vec(std::size_t n) { return FpVec(n, 0); }

FpVec neg(FpVec v, std::uint64_t p)
{
  for (auto &x : v)
    x = static_cast<std::uint32_t>((p - x) % p);
  return v;
}

BigInt bigpow(std::uint64_t p, std::size_t e)
{
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i)
    r *= p;
  return r;
}

std::string element_key(ExtensionGroup::Element const &a, GeneratedGroup const &R)
{
  std::string k(a.e.begin(), a.e.end());
  k += '|';
  k += std::to_string(*R.rank(a.r));
  return k;
}

} // namespace

ExtensionGroup::ExtensionGroup(FpModule M, Cocycle c) : M_(std::move(M)), c_(std::move(c)) {}

BigInt ExtensionGroup::order() const { return bigpow(M_.p, M_.dim) * R().order(); }

FpVec ExtensionGroup::left_act(Permutation const &r, FpVec const &e) const
{
  if (M_.is_permutation_module()) {
    // (r.e)_j = e_{j r}
    Permutation a = M_.point_action(r);
    FpVec out(e.size());
    for (std::size_t j = 0; j < e.size(); ++j)
      out[j] = e[a[static_cast<Point>(j)]];
    return out;
  }
  return vec_mul(e, M_.matrix_of(r.inverse()));
}

FpVec ExtensionGroup::cocycle(Permutation const &r, Permutation const &s) const
{
  if (!c_)
    return zero_vec(M_.dim);
  return c_(r, s);
}

ExtensionGroup::Element ExtensionGroup::identity() const
{
  return {zero_vec(M_.dim), Permutation(R().degree())};
}

ExtensionGroup::Element ExtensionGroup::mul(Element const &a, Element const &b) const
{
  FpVec e = vec_add(a.e, left_act(a.r, b.e), M_.p);
  if (c_)
    e = vec_add(e, c_(a.r, b.r), M_.p);
  return {std::move(e), compose(a.r, b.r)};
}

ExtensionGroup::Element ExtensionGroup::inverse(Element const &a) const
{
  Permutation ri = a.r.inverse();
  FpVec t = a.e;
  if (c_)
    t = vec_add(t, c_(a.r, ri), M_.p);
  return {neg(left_act(ri, t), M_.p), ri};
}

ExtensionGroup::Element ExtensionGroup::pow(Element const &a, std::uint64_t k) const
{
  Element r = identity();
  Element b = a;
  while (k) {
    if (k & 1)
      r = mul(r, b);
    k >>= 1;
    if (k)
      b = mul(b, b);
  }
  return r;
}

ExtensionGroup::Element ExtensionGroup::conjugate(Element const &a, Element const &g) const
{
  return mul(mul(inverse(g), a), g);
}

std::uint64_t ExtensionGroup::element_order(Element const &a) const
{
  std::uint64_t k = a.r.order();
  Element b = pow(a, k);
  return is_zero(b.e) ? k : k * M_.p;
}

bool ExtensionGroup::cocycle_identity(Permutation const &r, Permutation const &s,
                                      Permutation const &t) const
{
  std::uint64_t p = M_.p;
  FpVec lhs = vec_add(left_act(r, cocycle(s, t)), cocycle(r, compose(s, t)), p);
  FpVec rhs = vec_add(cocycle(compose(r, s), t), cocycle(r, s), p);
  return lhs == rhs;
}

std::vector<ExtensionGroup::Element> ExtensionGroup::elements(std::uint64_t cap) const
{
  require_within(order(), cap, "extension group enumeration");
  std::uint64_t nvec = static_cast<std::uint64_t>(bigpow(M_.p, M_.dim));
  std::vector<Element> out;
  R().for_each_element(
    [&](Permutation const &r) {
      for (std::uint64_t code = 0; code < nvec; ++code) {
        FpVec e(M_.dim);
        std::uint64_t c = code;
        for (std::size_t i = M_.dim; i-- > 0; c /= M_.p)
          e[i] = static_cast<std::uint32_t>(c % M_.p);
        out.push_back({std::move(e), r});
      }
    },
    cap);
  return out;
}

ExtensionGroup split_extension(FpModule M) { return ExtensionGroup(std::move(M), nullptr); }

std::pair<std::uint32_t, std::size_t> Transversal::decompose(Permutation const &r) const
{
  std::size_t idx = cosets->index_of(r);
  Permutation y = compose(r, reps()[idx].inverse());
  Permutation xp(x.degree());
  for (std::uint32_t u = 0; u < p; ++u) {
    if (xp == y)
      return {u, idx};
    xp = compose(xp, x);
  }
  throw VerificationFailure("transversal decomposition failed for " + r.str());
}

CosetTable::CosetTable(Transversal t, Caps const &caps) : t_(std::move(t))
{
  n_ = t_.cosets->size();
  std::uint64_t order = t_.R.order_u64();
  require_within(BigInt(order) * n_, 50'000'000, "coset table");
  if (t_.p > 255)
    throw InputError("coset table: p too large");
  image_.resize(order * n_);
  u_.resize(order * n_);
  auto const &reps = t_.reps();
  std::vector<Permutation> rep_inv;
  for (auto const &r : reps)
    rep_inv.push_back(r.inverse());
  std::unordered_map<Permutation, std::uint8_t, PermutationHash> xpow;
  Permutation xp(t_.x.degree());
  for (std::uint64_t u = 0; u < t_.p; ++u) {
    xpow.emplace(xp, static_cast<std::uint8_t>(u));
    xp = compose(xp, t_.x);
  }
  std::uint64_t k = 0;
  t_.R.for_each_element(
    [&](Permutation const &r) {
      for (std::size_t w = 0; w < n_; ++w) {
        Permutation tr = compose(reps[w], r);
        std::size_t idx = t_.cosets->index_of(tr);
        auto it = xpow.find(compose(tr, rep_inv[idx]));
        if (it == xpow.end())
          throw VerificationFailure("coset table: transversal decomposition failed");
        image_[k * n_ + w] = static_cast<std::uint32_t>(idx);
        u_[k * n_ + w] = it->second;
      }
      ++k;
    },
    caps.max_elements);
}

std::uint64_t CosetTable::rank_of(Permutation const &r) const
{
  auto k = t_.R.rank(r);
  if (!k)
    throw std::invalid_argument("coset table: element outside R");
  return *k;
}

std::uint32_t const *CosetTable::image(Permutation const &r) const
{
  return image_.data() + rank_of(r) * n_;
}

std::uint8_t const *CosetTable::exponents(Permutation const &r) const
{
  return u_.data() + rank_of(r) * n_;
}

ShapiroData shapiro_cocycle(GeneratedGroup const &R, Permutation const &x, std::uint64_t p,
                            Caps const &caps)
{
  if (!is_prime(p))
    throw InputError("shapiro_cocycle: p must be prime");
  if (x.order() != p)
    throw InputError("shapiro_cocycle: x must have order p");
  if (!R.contains(x))
    throw InputError("shapiro_cocycle: x is not in R");
  Transversal t;
  t.R = R;
  t.X = GeneratedGroup(R.degree(), {x});
  t.x = x;
  t.p = p;
  t.cosets = std::make_shared<RightCosets const>(R, t.X, caps);
  auto table = std::make_shared<CosetTable const>(std::move(t), caps);

  ShapiroData d;
  d.table = table;
  std::size_t n = table->size();
  d.module = perm_module(
    R, n,
    [table, n](Permutation const &g) {
      std::uint32_t const *img = table->image(g);
      return Permutation::unchecked(std::vector<Point>(img, img + n));
    },
    p);
  for (std::size_t i = 0; i < n; ++i)
    d.module.labels[i] = "X" + table->transversal().reps()[i].str();
  d.cocycle = [table, n, p](Permutation const &s, Permutation const &t) {
    std::uint8_t const *us = table->exponents(s);
    std::uint32_t const *is = table->image(s);
    std::uint8_t const *ut = table->exponents(t);
    FpVec c(n);
    for (std::size_t w = 0; w < n; ++w)
      c[w] = static_cast<std::uint32_t>((us[w] + ut[is[w]]) / p);
    return c;
  };

  ExtensionGroup G(d.module, d.cocycle);
  std::vector<Permutation> probe{Permutation(R.degree())};
  for (auto const &g : R.generators())
    probe.push_back(g);
  for (auto const &r : probe)
    for (auto const &s : probe)
      for (auto const &u : probe)
        if (!G.cocycle_identity(r, s, u))
          throw VerificationFailure("transferred cocycle fails the 2-cocycle identity");
  return d;
}

ExtensionGroup coinduced_extension(ShapiroData const &data)
{
  return ExtensionGroup(data.module, data.cocycle);
}

CosetPower coset_min_order(ExtensionGroup const &G, Permutation const &r)
{
  std::uint64_t p = G.p();
  std::size_t n = G.dim();
  CosetPower res;
  if (r.is_identity()) {
    res.C = zero_vec(n);
    res.witness = zero_vec(n);
    return res;
  }
  if (r.order() != p)
    throw InputError("coset_min_order: " + r.str() + " does not have order p");
  if (!G.R().contains(r))
    throw InputError("coset_min_order: element outside R");

  res.C = zero_vec(n);
  Permutation rk = r;
  for (std::uint64_t k = 1; k < p; ++k) {
    res.C = vec_add(res.C, G.cocycle(rk, r), p);
    rk = compose(rk, r);
  }
  // row i of A is Norm_r(e_i) = sum_k r^k . e_i
  FpMatrix A(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    FpVec e = zero_vec(n);
    e[i] = 1;
    FpVec acc = zero_vec(n);
    Permutation rk2(r.degree());
    for (std::uint64_t k = 0; k < p; ++k) {
      acc = vec_add(acc, G.left_act(rk2, e), p);
      rk2 = compose(rk2, r);
    }
    for (std::size_t j = 0; j < n; ++j)
      A(i, j) = acc[j];
  }
  auto sol = solve_left(A, neg(res.C, p));
  ExtensionGroup::Element probe{sol ? *sol : zero_vec(n), r};
  auto pw = G.pow(probe, p);
  if (sol) {
    if (!(pw == G.identity()))
      throw VerificationFailure("coset_min_order: solution does not give an element of order p");
    res.min_order = p;
    res.witness = *sol;
  } else {
    if (pw == G.identity() || !pw.r.is_identity())
      throw VerificationFailure("coset_min_order: p-th power inconsistent with norm equation");
    res.min_order = p * p;
  }
  return res;
}

CocycleCheck check_cocycle(ExtensionGroup const &G, std::uint64_t samples, std::uint64_t seed,
                           std::uint64_t exhaustive_limit)
{
  CocycleCheck res;
  GeneratedGroup const &R = G.R();
  Permutation one(R.degree());
  auto run = [&](Permutation const &a, Permutation const &b, Permutation const &c) {
    ++res.triples;
    if (!G.cocycle_identity(a, b, c))
      ++res.failures;
  };
  auto normal = [&](Permutation const &a) {
    if (!is_zero(G.cocycle(one, a)) || !is_zero(G.cocycle(a, one)))
      res.normalized = false;
  };

  if (R.order() * R.order() * R.order() <= exhaustive_limit) {
    res.exhaustive = true;
    auto els = R.elements(exhaustive_limit);
    for (auto const &a : els) {
      normal(a);
      for (auto const &b : els)
        for (auto const &c : els)
          run(a, b, c);
    }
    return res;
  }

  std::vector<Permutation> L{one};
  for (auto const &g : R.generators())
    L.push_back(g);
  std::size_t ng = L.size();
  for (std::size_t i = 1; i < ng; ++i)
    for (std::size_t j = 1; j < ng; ++j)
      L.push_back(compose(L[i], L[j]));
  for (auto const &a : L) {
    normal(a);
    for (auto const &b : L)
      for (auto const &c : L)
        run(a, b, c);
  }
  std::mt19937_64 rng(seed);
  std::uint64_t order = R.order_u64();
  for (std::uint64_t k = 0; k < samples; ++k) {
    Permutation a = R.unrank(rng() % order);
    Permutation b = R.unrank(rng() % order);
    Permutation c = R.unrank(rng() % order);
    if (k < 1000)
      normal(a);
    run(a, b, c);
  }
  return res;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(ExtensionGroup const &G,
                                                                  std::uint64_t cap)
{
  std::map<std::uint64_t, std::uint64_t> m;
  for (auto const &a : G.elements(cap))
    ++m[G.element_order(a)];
  return {m.begin(), m.end()};
}

GeneratedGroup regular_realization(ExtensionGroup const &G, std::uint64_t cap)
{
  auto els = G.elements(cap);
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < els.size(); ++i)
    index.emplace(element_key(els[i], G.R()), static_cast<std::uint32_t>(i));
  if (index.size() != els.size())
    throw VerificationFailure("regular realization: duplicate elements");

  std::vector<ExtensionGroup::Element> gens;
  for (auto const &g : G.R().generators())
    gens.push_back({zero_vec(G.dim()), g});
  for (std::size_t i = 0; i < G.dim(); ++i) {
    FpVec e = zero_vec(G.dim());
    e[i] = 1;
    gens.push_back({e, Permutation(G.R().degree())});
  }
  std::vector<Permutation> perms;
  for (auto const &h : gens) {
    std::vector<Point> img(els.size());
    for (std::size_t i = 0; i < els.size(); ++i)
      img[i] = index.at(element_key(G.mul(els[i], h), G.R()));
    perms.push_back(Permutation(std::move(img)));
  }
  GeneratedGroup out(els.size(), perms);
  if (out.order() != G.order())
    throw VerificationFailure("regular realization has the wrong order");
  return out;
}

GeneratedGroup wreath_realization(ExtensionGroup const &G)
{
  FpModule const &M = G.module();
  if (!G.is_split() || !M.is_permutation_module())
    throw InputError("wreath realization needs a split extension of a permutation module");
  std::size_t n = M.dim;
  std::uint64_t p = M.p;
  std::vector<Permutation> point_gens;
  for (auto const &g : G.R().generators())
    point_gens.push_back(M.point_action(g));
  if (GeneratedGroup(n, point_gens).order() != G.R().order())
    throw InputError("wreath realization: R does not act faithfully on the basis");

  std::vector<Permutation> gens;
  for (auto const &a : point_gens) {
    std::vector<Point> img(n * p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint64_t v = 0; v < p; ++v)
        img[i * p + v] = static_cast<Point>(a[static_cast<Point>(i)] * p + v);
    gens.push_back(Permutation(std::move(img)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Point> img(n * p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint64_t v = 0; v < p; ++v)
        img[i * p + v] = static_cast<Point>(i * p + (i == j ? (v + 1) % p : v));
    gens.push_back(Permutation(std::move(img)));
  }
  GeneratedGroup out(n * p, gens);
  if (out.order() != G.order())
    throw VerificationFailure("wreath realization has the wrong order");
  return out;
}

Prop41Report verify_prop41(FpModule const &M, Caps const &caps)
{
  Prop41Report rep;
  GeneratedGroup const &R = M.group;
  std::uint64_t p = M.p;
  rep.p = p;
  rep.R_order = R.order();

  auto classes = conjugacy_classes(R, caps);
  std::vector<Permutation> preps;
  for (auto const &c : classes.representatives)
    if (c.order() == p)
      preps.push_back(c);
  rep.generated_by_p_elements =
    !preps.empty() && normal_closure(R, preps).order() == R.order();

  GeneratedGroup T = sylow_subgroup(R, p, caps);
  rep.T_order = T.order();
  FusionData F(R, T, p, caps);
  rep.omega_bar_T_order = omega_bar(F).order();
  rep.omega_bar_T_proper = rep.omega_bar_T_order < rep.T_order;

  BigInt image_order;
  if (M.is_permutation_module()) {
    std::vector<Permutation> imgs;
    for (auto const &g : R.generators())
      imgs.push_back(M.point_action(g));
    image_order = GeneratedGroup(M.dim, imgs).order();
  } else {
    std::uint64_t kernel = 0;
    FpMatrix I = FpMatrix::identity(M.dim, p);
    R.for_each_element(
      [&](Permutation const &g) {
        if (M.matrix_of(g) == I)
          ++kernel;
      },
      caps.max_elements);
    image_order = R.order() / kernel;
  }
  rep.kernel_order = R.order() / image_order;
  rep.quotient_not_p_group = p_part(image_order, p) != image_order;

  rep.preconditions =
    rep.generated_by_p_elements && rep.omega_bar_T_proper && rep.quotient_not_p_group;
  if (!rep.generated_by_p_elements)
    rep.failing = "R is not generated by elements of order p";
  else if (!rep.omega_bar_T_proper)
    rep.failing = "omega-bar(T) equals T";
  else if (!rep.quotient_not_p_group)
    rep.failing = "R/C_R(E) is a p-group";

  BigInt pd = bigpow(p, M.dim);
  rep.S_order = pd * rep.T_order;
  rep.omega_bar_S_bound = pd * rep.omega_bar_T_order;

  ExtensionGroup G = split_extension(M);
  FpMatrix fixed = fixed_points(M, T);
  rep.fixed_dim = fixed.rows();
  RowSpace fixed_space(M.dim, p);
  for (std::size_t i = 0; i < fixed.rows(); ++i)
    fixed_space.add(fixed.row(i));

  auto try_r = [&](FpVec const &z, Permutation const &r) -> bool {
    FpVec rz = G.left_act(r, z);
    if (fixed_space.contains(rz))
      return false;
    Prop41Witness w;
    w.z = z;
    w.r = r;
    w.rz = rz;
    w.a = {z, Permutation(R.degree())};
    w.b = {rz, Permutation(R.degree())};
    w.g = {zero_vec(M.dim), r.inverse()};
    bool conj = G.conjugate(w.a, w.g) == w.b;
    // a central in S, b not
    bool a_central = true, b_central = true;
    for (auto const &t : T.generators()) {
      ExtensionGroup::Element tt{zero_vec(M.dim), t};
      if (!(G.conjugate(w.a, tt) == w.a))
        a_central = false;
      if (!(G.conjugate(w.b, tt) == w.b))
        b_central = false;
    }
    w.replays = conj && a_central && !b_central;
    rep.witness = std::move(w);
    return true;
  };

  bool found = false;
  for (std::size_t i = 0; i < fixed.rows() && !found; ++i) {
    FpVec z = fixed.row(i);
    for (auto const &g : R.generators())
      if ((found = try_r(z, g)))
        break;
    if (!found) {
      std::uint64_t n = R.order_u64();
      for (std::uint64_t k = 0; k < n && !found; ++k)
        found = try_r(z, R.unrank(k));
    }
  }
  rep.ok = rep.preconditions && rep.witness && rep.witness->replays &&
           rep.omega_bar_S_bound < rep.S_order;
  return rep;
}

Prop42Report verify_prop42(GeneratedGroup const &R, Permutation const &x,
                           std::vector<Permutation> const &zs, std::uint64_t p,
                           std::uint64_t samples, Caps const &caps)
{
  Prop42Report rep;
  rep.p = p;
  rep.R_order = R.order();
  ShapiroData data = shapiro_cocycle(R, x, p, caps);
  ExtensionGroup G = coinduced_extension(data);
  rep.dim = G.dim();
  rep.cocycle = check_cocycle(G, samples);

  CosetPower cx = coset_min_order(G, x);
  rep.min_order_x = cx.min_order;
  RestrictionProfile rx = restriction_profile(data.module, x);
  rep.E1_dim = rx.fixed_basis_points;
  rep.E2_regular_orbits = rx.regular_orbits;
  std::uint32_t const *xi = data.table->image(x);
  for (std::size_t w = 0; w < G.dim(); ++w)
    if (xi[w] == w && cx.C[w] != 0)
      rep.C_x_E1_nonzero = true;
  Transversal const &tv = data.table->transversal();
  for (auto const &t : tv.reps())
    if (tv.X.contains(compose(compose(t, x), t.inverse())))
      ++rep.E1_expected;

  auto classes = conjugacy_classes(R, caps);
  std::set<std::size_t> x_classes;
  for (std::uint64_t k = 1; k < p; ++k)
    x_classes.insert(classes.locate(R, x.pow(static_cast<int>(k))));

  bool ok = rep.cocycle.failures == 0 && rep.cocycle.normalized && rep.min_order_x == p * p &&
            rep.C_x_E1_nonzero && rep.E1_dim == rep.E1_expected &&
            rep.E1_dim + rep.E2_regular_orbits * p == rep.dim;
  for (auto const &z : zs) {
    ZReport zr;
    zr.z = z;
    if (!R.contains(z) || z.order() != p)
      throw InputError("prop42: " + z.str() + " is not an element of order p in R");
    zr.conjugate_into_X = x_classes.count(classes.locate(R, z)) > 0;
    CosetPower cz = coset_min_order(G, z);
    zr.min_order = cz.min_order;
    zr.witness = cz.witness;
    if (cz.witness)
      zr.witness_replays = G.pow({*cz.witness, z}, p) == G.identity();
    RestrictionProfile rz = restriction_profile(data.module, z);
    zr.free = rz.is_free;
    zr.regular_orbits = rz.regular_orbits;
    if (zr.conjugate_into_X)
      ok = ok && zr.min_order == p * p;
    else
      ok = ok && zr.min_order == p && zr.witness_replays && zr.free;
    rep.z.push_back(std::move(zr));
  }
  rep.ok = ok;
  return rep;
}

} // namespace sclosure
