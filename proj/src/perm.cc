#include "sclosure/perm.h"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sclosure
{

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(x) +
                                    " exceeds degree " + std::to_string(degree));
      if (used[x])
        throw std::invalid_argument("cycles are not disjoint at point " +
                                    std::to_string(x));
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::vector<Point> current;
  bool open = false;
  std::size_t i = 0;

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (open)
        throw std::invalid_argument("nested '(' in cycle notation");
      open = true;
      current.clear();
      ++i;
    } else if (c == ')') {
      if (!open)
        throw std::invalid_argument("unbalanced ')' in cycle notation");
      open = false;
      if (!current.empty())
        cycles.push_back(current);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open)
        throw std::invalid_argument("point outside of a cycle");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffu)
          throw std::invalid_argument("point index too large");
        ++i;
      }
      current.push_back(static_cast<Point>(v));
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in cycle notation");
    }
  }
  if (open)
    throw std::invalid_argument("unterminated cycle");

  return from_cycles(degree, cycles);
}

Permutation Permutation::unchecked(std::vector<Point> images)
{
  Permutation res;
  res.images_ = std::move(images);
  return res;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  Permutation res;
  res.images_ = std::move(inv);
  return res;
}

Permutation Permutation::pow(std::int64_t e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation res(degree());
  while (n) {
    if (n & 1u)
      res = compose(res, base);
    base = compose(base, base);
    n >>= 1u;
  }
  return res;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    res.push_back(std::move(cycle));
  }
  return res;
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(Permutation const &g, Permutation const &h)
{
  if (g.degree() != h.degree())
    throw std::invalid_argument("degree mismatch in compose: " +
                                std::to_string(g.degree()) + " vs " +
                                std::to_string(h.degree()));
  std::vector<Point> images(g.degree());
  auto gi = g.images();
  auto hi = h.images();
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = hi[gi[i]];
  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(Permutation const &a, Permutation const &g)
{
  if (a.degree() != g.degree())
    throw std::invalid_argument("degree mismatch in conjugate");
  // a^g maps g(x) to g(a(x))
  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[g[static_cast<Point>(x)]] = g[a[static_cast<Point>(x)]];
  return Permutation::unchecked(std::move(images));
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace sclosure
