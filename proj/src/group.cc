#include "sclosure/group.h"

#include <cstdlib>
#include <sstream>

namespace sclosure
{

Caps Caps::from_env()
{
  Caps caps;
  auto read = [](char const *name, std::uint64_t &slot) {
    if (char const *v = std::getenv(name)) {
      char *end = nullptr;
      auto parsed = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && parsed > 0)
        slot = parsed;
    }
  };
  read("SC_MAX_ELEMENTS", caps.max_elements);
  read("SC_MAX_PGROUP", caps.max_pgroup);
  read("SC_MAX_DEGREE", caps.max_degree);
  read("SC_MAX_SUBGROUP_ENUM", caps.max_subgroup_enum);
  return caps;
}

Caps const &default_caps()
{
  static Caps const caps = Caps::from_env();
  return caps;
}

void require_within(BigInt const &size, std::uint64_t cap, std::string const &what)
{
  if (size > cap) {
    std::ostringstream os;
    os << what << ": size " << size << " exceeds cap " << cap;
    throw CapExceeded(os.str());
  }
}

struct GeneratedGroup::Chain
{
  struct Level
  {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse;
    // checked[j][t]: Schreier generator for (orbit[j], gens[t]) already sifted
    std::vector<std::vector<char>> checked;
  };

  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Level> levels;
  std::vector<std::uint64_t> strides;
  BigInt order = 1;

  void new_level(Point b)
  {
    Level lv;
    lv.base_point = b;
    lv.position.assign(degree, -1);
    lv.position[b] = 0;
    lv.orbit.push_back(b);
    lv.transversal.emplace_back(degree);
    lv.inverse.emplace_back(degree);
    lv.checked.emplace_back();
    levels.push_back(std::move(lv));
  }

  void add_generator(std::size_t i, Permutation const &s)
  {
    Level &lv = levels[i];
    std::size_t old_gens = lv.gens.size();
    std::size_t old_orbit = lv.orbit.size();
    lv.gens.push_back(s);
    for (auto &row : lv.checked)
      row.resize(lv.gens.size(), 0);

    for (std::size_t j = 0; j < lv.orbit.size(); ++j) {
      for (std::size_t t = 0; t < lv.gens.size(); ++t) {
        if (j < old_orbit && t < old_gens)
          continue;
        Point gamma = lv.gens[t][lv.orbit[j]];
        if (lv.position[gamma] >= 0)
          continue;
        lv.position[gamma] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(gamma);
        Permutation u = compose(lv.transversal[j], lv.gens[t]);
        lv.inverse.push_back(u.inverse());
        lv.transversal.push_back(std::move(u));
        lv.checked.emplace_back(lv.gens.size(), 0);
      }
    }
  }

  // Sifts g starting at level `from`. Returns the residue and the level at
  // which sifting stopped (levels.size() if it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const
  {
    std::vector<Point> buf(degree);
    for (std::size_t i = from; i < levels.size(); ++i) {
      Level const &lv = levels[i];
      Point beta = g[lv.base_point];
      std::int32_t j = lv.position[beta];
      if (j < 0)
        return {std::move(g), i};
      auto inv = lv.inverse[static_cast<std::size_t>(j)].images();
      auto gi = g.images();
      for (std::size_t x = 0; x < degree; ++x)
        buf[x] = inv[gi[x]];
      g = Permutation::unchecked(buf);
    }
    return {std::move(g), levels.size()};
  }

  static Point first_moved(Permutation const &g)
  {
    for (Point x = 0; x < g.degree(); ++x)
      if (g[x] != x)
        return x;
    return 0;
  }

  void run(std::size_t start)
  {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      std::size_t li = static_cast<std::size_t>(i);
      bool restarted = false;
      for (std::size_t j = 0; j < levels[li].orbit.size() && !restarted; ++j) {
        for (std::size_t t = 0; t < levels[li].gens.size(); ++t) {
          Level &lv = levels[li];
          if (lv.checked[j][t])
            continue;
          lv.checked[j][t] = 1;
          Permutation const &s = lv.gens[t];
          Point gamma = s[lv.orbit[j]];
          auto k = static_cast<std::size_t>(lv.position[gamma]);
          Permutation h = compose(compose(lv.transversal[j], s), lv.inverse[k]);
          if (h.is_identity())
            continue;
          auto [residue, stop] = sift(std::move(h), li + 1);
          if (residue.is_identity())
            continue;
          if (stop == levels.size())
            new_level(first_moved(residue));
          for (std::size_t l = li + 1; l <= stop; ++l)
            add_generator(l, residue);
          i = static_cast<std::ptrdiff_t>(stop);
          restarted = true;
          break;
        }
      }
      if (!restarted)
        --i;
    }
  }

  void insert(Permutation const &g)
  {
    if (sift(g, 0).first.is_identity())
      return;
    generators.push_back(g);
    bool fixes_base = true;
    for (auto const &lv : levels)
      if (g[lv.base_point] != lv.base_point) {
        fixes_base = false;
        break;
      }
    if (fixes_base) {
      // g lies in the last stabilizer; a fresh base point moved by g is needed
      new_level(first_moved(g));
      for (std::size_t l = 0; l + 1 < levels.size(); ++l)
        add_generator(l, g);
      add_generator(levels.size() - 1, g);
      run(levels.size() - 1);
    } else {
      add_generator(0, g);
      run(0);
    }
  }

  void finalize()
  {
    strides.assign(levels.size(), 1);
    order = 1;
    std::uint64_t stride = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      strides[i] = overflow ? 0 : stride;
      order *= levels[i].orbit.size();
      if (!overflow) {
        std::uint64_t sz = levels[i].orbit.size();
        if (stride > UINT64_MAX / sz)
          overflow = true;
        else
          stride *= sz;
      }
    }
  }
};

GeneratedGroup::GeneratedGroup() : GeneratedGroup(0, {}) {}

GeneratedGroup::GeneratedGroup(std::size_t degree,
                               std::vector<Permutation> const &generators)
{
  auto chain = std::make_shared<Chain>();
  chain->degree = degree;
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " +
                                  std::to_string(degree));
    if (!g.is_identity())
      chain->insert(g);
  }
  chain->finalize();
  chain_ = std::move(chain);
}

GeneratedGroup GeneratedGroup::trivial(std::size_t degree)
{
  return GeneratedGroup(degree, {});
}

std::size_t GeneratedGroup::degree() const { return chain_->degree; }

std::vector<Permutation> const &GeneratedGroup::generators() const
{
  return chain_->generators;
}

BigInt const &GeneratedGroup::order() const { return chain_->order; }

std::uint64_t GeneratedGroup::order_u64() const
{
  if (chain_->order > BigInt(UINT64_MAX))
    throw CapExceeded("group order does not fit in 64 bits");
  return static_cast<std::uint64_t>(chain_->order);
}

bool GeneratedGroup::contains(Permutation const &g) const
{
  if (g.degree() != degree())
    return false;
  return chain_->sift(g, 0).first.is_identity();
}

std::optional<std::uint64_t> GeneratedGroup::rank(Permutation const &g) const
{
  if (g.degree() != degree())
    return std::nullopt;
  Chain const &c = *chain_;
  std::uint64_t r = 0;
  std::vector<Point> cur(g.images().begin(), g.images().end());
  std::vector<Point> buf(c.degree);
  for (std::size_t i = 0; i < c.levels.size(); ++i) {
    auto const &lv = c.levels[i];
    std::int32_t j = lv.position[cur[lv.base_point]];
    if (j < 0)
      return std::nullopt;
    r += static_cast<std::uint64_t>(j) * c.strides[i];
    auto inv = lv.inverse[static_cast<std::size_t>(j)].images();
    for (std::size_t x = 0; x < c.degree; ++x)
      buf[x] = inv[cur[x]];
    cur.swap(buf);
  }
  for (std::size_t x = 0; x < c.degree; ++x)
    if (cur[x] != x)
      return std::nullopt;
  return r;
}

Permutation GeneratedGroup::unrank(std::uint64_t r) const
{
  Chain const &c = *chain_;
  if (BigInt(r) >= c.order)
    throw std::out_of_range("rank out of range");
  Permutation g(c.degree);
  for (std::size_t i = c.levels.size(); i-- > 0;) {
    std::uint64_t j = (r / c.strides[i]) % c.levels[i].orbit.size();
    g = compose(g, c.levels[i].transversal[j]);
  }
  return g;
}

std::vector<Point> GeneratedGroup::base() const
{
  std::vector<Point> b;
  for (auto const &lv : chain_->levels)
    b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> GeneratedGroup::transversal_sizes() const
{
  std::vector<std::size_t> s;
  for (auto const &lv : chain_->levels)
    s.push_back(lv.orbit.size());
  return s;
}

std::vector<Point> const &GeneratedGroup::basic_orbit(std::size_t i) const
{
  return chain_->levels.at(i).orbit;
}

void GeneratedGroup::for_each_element(
  std::function<void(Permutation const &)> const &visit, std::uint64_t cap) const
{
  require_within(order(), cap, "element enumeration");
  Chain const &c = *chain_;
  if (c.levels.empty()) {
    visit(Permutation(c.degree));
    return;
  }
  // prefix[i] = product of chosen transversal elements of levels > i
  std::size_t k = c.levels.size();
  std::vector<Permutation> prefix(k + 1, Permutation(c.degree));
  std::vector<std::size_t> idx(k, 0);
  std::vector<Point> buf(c.degree);

  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    auto const &lv = c.levels[level];
    for (std::size_t j = 0; j < lv.orbit.size(); ++j) {
      if (level == 0) {
        auto pi = prefix[1].images();
        auto ti = lv.transversal[j].images();
        for (std::size_t x = 0; x < c.degree; ++x)
          buf[x] = ti[pi[x]];
        visit(Permutation::unchecked(buf));
      } else {
        prefix[level] = compose(prefix[level + 1], lv.transversal[j]);
        rec(level - 1);
      }
    }
  };
  rec(k - 1);
}

std::vector<Permutation> GeneratedGroup::elements(std::uint64_t cap) const
{
  std::vector<Permutation> out;
  require_within(order(), cap, "element enumeration");
  out.reserve(static_cast<std::size_t>(order()));
  for_each_element([&](Permutation const &g) { out.push_back(g); }, cap);
  return out;
}

GeneratedGroup GeneratedGroup::with(Permutation const &g) const
{
  return with(std::vector<Permutation>{g});
}

GeneratedGroup GeneratedGroup::with(std::vector<Permutation> const &gs) const
{
  bool all_in = true;
  for (auto const &g : gs)
    if (!contains(g)) {
      all_in = false;
      break;
    }
  if (all_in)
    return *this;
  auto chain = std::make_shared<Chain>(*chain_);
  for (auto const &g : gs) {
    if (g.degree() != degree())
      throw std::invalid_argument("generator degree mismatch");
    chain->insert(g);
  }
  chain->finalize();
  GeneratedGroup res;
  res.chain_ = std::move(chain);
  return res;
}

bool GeneratedGroup::is_subgroup_of(GeneratedGroup const &other) const
{
  if (degree() != other.degree())
    return false;
  for (auto const &g : generators())
    if (!other.contains(g))
      return false;
  return true;
}

Permutation GeneratedGroup::canonical_coset_rep(Permutation const &g) const
{
  Chain const &c = *chain_;
  Permutation x = g;
  // elements of the coset are n*x; at each level pick the orbit point whose
  // image under x is least, then descend into the stabilizer
  for (auto const &lv : c.levels) {
    std::size_t best = 0;
    Point best_img = x[lv.orbit[0]];
    for (std::size_t j = 1; j < lv.orbit.size(); ++j) {
      Point img = x[lv.orbit[j]];
      if (img < best_img) {
        best_img = img;
        best = j;
      }
    }
    if (best != 0)
      x = compose(lv.transversal[best], x);
  }
  return x;
}

bool GeneratedGroup::same_group(GeneratedGroup const &other) const
{
  return degree() == other.degree() && order() == other.order() &&
         is_subgroup_of(other);
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t r = 1;
  while (n && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

BigInt p_part(BigInt const &n, std::uint64_t p)
{
  BigInt r = 1, m = n;
  while (m != 0 && m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

unsigned valuation(BigInt const &n, std::uint64_t p)
{
  unsigned e = 0;
  BigInt m = n;
  while (m != 0 && m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(BigInt const &n)
{
  std::vector<std::uint64_t> res;
  BigInt m = n;
  for (std::uint64_t d = 2; BigInt(d) * d <= m; ++d) {
    if (m % d == 0) {
      res.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  if (m > 1) {
    if (m > BigInt(UINT64_MAX))
      throw std::overflow_error("prime factor exceeds 64 bits");
    res.push_back(static_cast<std::uint64_t>(m));
  }
  return res;
}

} // namespace sclosure
