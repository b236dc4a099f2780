#include "sclosure/fp_module.h"

#include <set>

#include "sclosure/sylow.h"

namespace sclosure
{

FpVec FpModule::act(FpVec const &v, Permutation const &g) const
{
  return vec_mul(v, matrix_of(g));
}

std::vector<FpMatrix> FpModule::generator_matrices() const
{
  std::vector<FpMatrix> out;
  for (auto const &g : group.generators())
    out.push_back(matrix_of(g));
  return out;
}

FpModule perm_module(GeneratedGroup R, std::size_t npoints,
                     std::function<Permutation(Permutation const &)> action, std::uint64_t p)
{
  FpModule M;
  M.p = p;
  M.dim = npoints;
  M.group = std::move(R);
  M.point_action = action;
  M.matrix_of = [action, npoints, p](Permutation const &g) {
    Permutation a = action(g);
    FpMatrix m(npoints, npoints, p);
    for (std::size_t i = 0; i < npoints; ++i)
      m(i, a[static_cast<Point>(i)]) = 1;
    return m;
  };
  for (std::size_t i = 0; i < npoints; ++i)
    M.labels.push_back(std::to_string(i));
  return M;
}

FpModule natural_perm_module(GeneratedGroup R, std::uint64_t p)
{
  std::size_t n = R.degree();
  return perm_module(std::move(R), n, [](Permutation const &g) { return g; }, p);
}

FpModule coset_perm_module(GeneratedGroup R, GeneratedGroup const &X, std::uint64_t p)
{
  auto cosets = std::make_shared<RightCosets const>(R, X);
  std::size_t n = cosets->size();
  FpModule M = perm_module(
    std::move(R), n, [cosets](Permutation const &g) { return cosets->action(g); }, p);
  for (std::size_t i = 0; i < n; ++i)
    M.labels[i] = "X" + cosets->representatives()[i].str();
  return M;
}

FpModule block_perm_module(GeneratedGroup R, std::vector<std::uint32_t> const &block_of_point,
                           std::uint64_t p)
{
  std::uint32_t nblocks = 0;
  for (auto b : block_of_point)
    nblocks = std::max(nblocks, b + 1);
  std::vector<Point> rep(nblocks, 0);
  std::vector<bool> seen(nblocks, false);
  for (std::size_t x = 0; x < block_of_point.size(); ++x)
    if (!seen[block_of_point[x]]) {
      seen[block_of_point[x]] = true;
      rep[block_of_point[x]] = static_cast<Point>(x);
    }
  for (auto const &g : R.generators())
    for (std::size_t x = 0; x < block_of_point.size(); ++x)
      if (block_of_point[g[static_cast<Point>(x)]] != block_of_point[g[rep[block_of_point[x]]]])
        throw std::invalid_argument("block_perm_module: partition is not invariant");
  auto blocks = std::make_shared<std::vector<std::uint32_t> const>(block_of_point);
  return perm_module(
    std::move(R), nblocks,
    [blocks, rep](Permutation const &g) {
      std::vector<Point> img(rep.size());
      for (std::size_t b = 0; b < rep.size(); ++b)
        img[b] = (*blocks)[g[rep[b]]];
      return Permutation(std::move(img));
    },
    p);
}

bool respects_products(FpModule const &M, std::vector<Permutation> const &sample)
{
  for (auto const &g : sample)
    for (auto const &h : sample)
      if (M.matrix_of(compose(g, h)) != M.matrix_of(g) * M.matrix_of(h))
        return false;
  return true;
}

FpMatrix fixed_points(FpModule const &M, std::vector<Permutation> const &H)
{
  if (H.empty())
    return FpMatrix::identity(M.dim, M.p);
  // v(M(h) - 1) = 0 for all h: stack the columns side by side
  FpMatrix stacked(M.dim, M.dim * H.size(), M.p);
  FpMatrix I = FpMatrix::identity(M.dim, M.p);
  for (std::size_t k = 0; k < H.size(); ++k) {
    FpMatrix D = M.matrix_of(H[k]) - I;
    for (std::size_t i = 0; i < M.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j)
        stacked(i, k * M.dim + j) = D(i, j);
  }
  return left_kernel(stacked);
}

FpMatrix fixed_points(FpModule const &M, GeneratedGroup const &H)
{
  return fixed_points(M, H.generators());
}

NormData norm_data(FpModule const &M, Permutation const &x)
{
  NormData nd;
  nd.x = x;
  FpMatrix X = M.matrix_of(x);
  FpMatrix pw = FpMatrix::identity(M.dim, M.p);
  nd.norm = FpMatrix(M.dim, M.dim, M.p);
  for (std::uint64_t i = 0; i < M.p; ++i) {
    nd.norm = nd.norm + pw;
    pw = pw * X;
  }
  std::vector<std::size_t> piv;
  FpMatrix R = rref(nd.norm, &piv);
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < piv.size(); ++i)
    rows.push_back(R.row(i));
  nd.image_basis = FpMatrix::from_rows(rows, M.dim, M.p);
  nd.fixed_basis = fixed_points(M, std::vector<Permutation>{x});
  return nd;
}

RestrictionProfile restriction_profile(FpModule const &M, Permutation const &x)
{
  if (x.order() != M.p)
    throw std::invalid_argument("restriction_profile: element order is not p");
  RestrictionProfile rp;
  rp.norm = norm_data(M, x);
  rp.fixed_dim = rp.norm.fixed_basis.rows();
  rp.free_rank = rp.norm.image_basis.rows();
  bool norm_free = rp.free_rank * M.p == M.dim && rp.fixed_dim * M.p == M.dim;
  rp.is_free = norm_free;

  if (M.is_permutation_module()) {
    Permutation a = M.point_action(x);
    std::vector<FpVec> e1;
    for (std::size_t i = 0; i < M.dim; ++i)
      if (a[static_cast<Point>(i)] == i) {
        FpVec v(M.dim, 0);
        v[i] = 1;
        e1.push_back(std::move(v));
      }
    rp.fixed_basis_points = e1.size();
    rp.regular_orbits = (M.dim - e1.size()) / M.p;
    rp.E1_basis = FpMatrix::from_rows(e1, M.dim, M.p);
    bool orbit_free = e1.empty();
    if (orbit_free != norm_free)
      throw VerificationFailure("freeness criteria disagree on a permutation module");
    // fixed space = orbit sums
    if (rp.fixed_dim != rp.fixed_basis_points + rp.regular_orbits)
      throw VerificationFailure("fixed-space dimension differs from the orbit count");
  }
  return rp;
}

SpinResult orbit_and_span(FpModule const &M, FpVec const &v, std::size_t orbit_cap)
{
  SpinResult res;
  auto gens = M.generator_matrices();
  std::set<FpVec> seen{v};
  res.orbit.push_back(v);
  for (std::size_t h = 0; h < res.orbit.size() && res.orbit.size() < orbit_cap; ++h)
    for (auto const &g : gens) {
      FpVec w = vec_mul(res.orbit[h], g);
      if (seen.insert(w).second)
        res.orbit.push_back(std::move(w));
    }

  RowSpace span(M.dim, M.p);
  std::vector<FpVec> queue;
  if (span.add(v))
    queue.push_back(v);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto const &g : gens) {
      FpVec w = vec_mul(queue[h], g);
      if (span.add(w))
        queue.push_back(std::move(w));
    }
  res.spin = FpMatrix::from_rows(span.basis(), M.dim, M.p);
  return res;
}

bool is_irreducible_brute(FpModule const &M)
{
  if (M.dim > 6)
    throw CapExceeded("brute irreducibility limited to dimension 6, got " +
                      std::to_string(M.dim));
  if (M.dim == 0)
    return false;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < M.dim; ++i)
    total *= M.p;
  for (std::uint64_t code = 1; code < total; ++code) {
    FpVec v(M.dim);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < M.dim; ++i, c /= M.p)
      v[i] = static_cast<std::uint32_t>(c % M.p);
    // one vector per line: leading nonzero coordinate 1
    std::size_t lead = 0;
    while (v[lead] == 0)
      ++lead;
    if (v[lead] != 1)
      continue;
    if (orbit_and_span(M, v, 1).spin.rows() < M.dim)
      return false;
  }
  return true;
}

FpVec ConjugationModule::coordinates(Permutation const &v) const
{
  auto it = table->find(v);
  if (it == table->end())
    throw std::invalid_argument("coordinates: element not in the module");
  return it->second;
}

Permutation ConjugationModule::element(FpVec const &c) const
{
  Permutation x(basis.front().degree());
  for (std::size_t i = 0; i < basis.size(); ++i)
    x = compose(x, basis[i].pow(c[i]));
  return x;
}

ConjugationModule conjugation_module(GeneratedGroup const &N, GeneratedGroup const &V,
                                     std::uint64_t p, Caps const &caps)
{
  if (V.is_trivial())
    throw std::invalid_argument("conjugation_module: trivial group");
  if (!is_abelian(V))
    throw std::invalid_argument("conjugation_module: group is not abelian");
  for (auto const &g : V.generators())
    if (g.order() != p)
      throw std::invalid_argument("conjugation_module: exponent is not p");
  for (auto const &n : N.generators())
    for (auto const &g : V.generators())
      if (!V.contains(conjugate(g, n)))
        throw std::invalid_argument("conjugation_module: N does not normalize V");
  require_within(V.order(), caps.max_pgroup, "conjugation module");

  ConjugationModule cm;
  GeneratedGroup H = GeneratedGroup::trivial(V.degree());
  for (auto const &g : V.generators())
    if (!H.contains(g)) {
      cm.basis.push_back(g);
      H = H.with(g);
    }
  V.for_each_element(
    [&](Permutation const &g) {
      if (!H.contains(g)) {
        cm.basis.push_back(g);
        H = H.with(g);
      }
    },
    caps.max_pgroup);

  std::size_t d = cm.basis.size();
  auto table = std::make_shared<std::unordered_map<Permutation, FpVec, PermutationHash>>();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i)
    total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    FpVec c(d);
    std::uint64_t t = code;
    for (std::size_t i = 0; i < d; ++i, t /= p)
      c[i] = static_cast<std::uint32_t>(t % p);
    table->emplace(cm.element(c), c);
  }
  if (table->size() != total)
    throw VerificationFailure("conjugation_module: basis is not independent");
  cm.table = table;

  auto basis = cm.basis;
  cm.module.p = p;
  cm.module.dim = d;
  cm.module.group = N;
  cm.module.matrix_of = [basis, table, p](Permutation const &n) {
    std::size_t d = basis.size();
    FpMatrix m(d, d, p);
    for (std::size_t i = 0; i < d; ++i) {
      auto const &c = table->at(conjugate(basis[i], n));
      for (std::size_t j = 0; j < d; ++j)
        m(i, j) = c[j];
    }
    return m;
  };
  for (auto const &b : cm.basis)
    cm.module.labels.push_back(b.str());
  return cm;
}

} // namespace sclosure
