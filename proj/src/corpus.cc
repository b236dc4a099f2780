#include "sclosure/corpus.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "sclosure/matrix_groups.h"

namespace sclosure
{

namespace
{

BigInt factorial(unsigned n)
{
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

std::vector<CorpusEntry> build_entries()
{
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string source, std::size_t degree, BigInt order,
                 std::vector<std::string> tags, std::optional<std::string> lie = {},
                 std::optional<std::string> verdict = {}) {
    CorpusEntry e;
    e.name = std::move(name);
    e.source = std::move(source);
    e.degree = degree;
    e.expected_order = std::move(order);
    e.tags = std::move(tags);
    e.lie = std::move(lie);
    e.verdict_name = std::move(verdict);
    out.push_back(std::move(e));
  };
  for (unsigned n = 5; n <= 9; ++n)
    add("A" + std::to_string(n), "builtin:alternating", n, factorial(n) / 2,
        {"simple", "alternating"}, {}, "A" + std::to_string(n));
  for (unsigned n = 3; n <= 7; ++n)
    add("S" + std::to_string(n), "builtin:symmetric", n, factorial(n), {"symmetric"});
  for (unsigned q : {7u, 8u, 11u, 13u, 19u}) {
    BigInt order = BigInt(q) * (q * q - 1) / (q % 2 ? 2 : 1);
    add("PSL2_" + std::to_string(q), "builtin:PSL(2," + std::to_string(q) + ")", q + 1, order,
        {"simple", "lie-type"}, {}, "L2(" + std::to_string(q) + ")");
  }
  add("SL2_19", "builtin:SL(2,19)", 360, 6840, {"lie-type"}, "A1(19)");
  add("SL3_4", "builtin:SL(3,4)", 63, 60480, {"lie-type"}, "A2(4)");
  add("PSL3_4", "builtin:PSL(3,4)", 21, 20160, {"simple", "lie-type"}, {}, "L3(4)");
  add("SU3_3", "builtin:SU(3,3)", 728, 6048, {"simple", "lie-type"}, "2A2(3)", "U3(3)");
  add("U3_3", "builtin:SU(3,3):isotropic", 28, 6048, {"simple", "lie-type"}, "2A2(3)",
      "U3(3)");
  add("Sp4_3", "builtin:Sp(4,3)", 80, 51840, {"lie-type"}, "C2(3)");
  add("Sz8", "file:sz8.txt", 65, 29120, {"simple", "lie-type"}, "2B2(8)", "Sz(8)");
  add("M11", "file:m11.txt", 11, 7920, {"simple", "sporadic"}, {}, "M11");
  add("M12", "file:m12.txt", 12, 95040, {"simple", "sporadic"}, {}, "M12");
  return out;
}

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

} // namespace

bool CorpusEntry::has_tag(std::string const &t) const
{
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<CorpusEntry> const &corpus_entries()
{
  static std::vector<CorpusEntry> const entries = build_entries();
  return entries;
}

std::string data_dir()
{
  if (char const *env = std::getenv("SC_DATA_DIR"))
    return env;
#ifdef SCLOSURE_DATA_DIR
  return SCLOSURE_DATA_DIR;
#else
  return "data";
#endif
}

GeneratedGroup alternating_group(std::size_t n)
{
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return GeneratedGroup(n, gens);
}

GeneratedGroup symmetric_group(std::size_t n)
{
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i)
      cyc[i] = static_cast<Point>(i);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  }
  return GeneratedGroup(n, gens);
}

GeneratedGroup parse_group_text(std::string const &text, Caps const &caps)
{
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  static std::regex const deg_re(R"(\s*degree\s+(\d+)\s*)");
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos)
      line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (!degree) {
      std::smatch m;
      if (!std::regex_match(line, m, deg_re))
        throw InputError("group text line " + std::to_string(lineno) +
                         ": expected 'degree N'");
      degree = std::stoul(m[1]);
      require_within(*degree, caps.max_degree, "permutation degree");
      continue;
    }
    try {
      gens.push_back(Permutation::parse(line, *degree));
    } catch (std::exception const &e) {
      throw InputError("group text line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!degree)
    throw InputError("group text: missing 'degree N' line");
  return GeneratedGroup(*degree, gens);
}

GeneratedGroup load_group_file(std::string const &path, Caps const &caps)
{
  std::ifstream f(path);
  if (!f)
    throw InputError("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_group_text(ss.str(), caps);
}

LoadedGroup corpus_load(std::string const &name, Caps const &caps, bool allow_large)
{
  for (auto const &e : corpus_entries()) {
    if (lower(e.name) != lower(name))
      continue;
    if (e.large && !allow_large)
      throw CapExceeded("corpus entry " + e.name + " needs --allow-large");
    require_within(e.degree, caps.max_degree, "permutation degree of " + e.name);
    GeneratedGroup G;
    if (e.source == "builtin:alternating")
      G = alternating_group(e.degree);
    else if (e.source == "builtin:symmetric")
      G = symmetric_group(e.degree);
    else if (e.source.rfind("builtin:", 0) == 0)
      G = permutation_image(MatrixGroupSpec::parse(e.source.substr(8)), caps);
    else
      G = load_group_file((std::filesystem::path(data_dir()) / e.source.substr(5)).string(),
                          caps);
    if (G.degree() != e.degree || G.order() != e.expected_order)
      throw VerificationFailure("corpus entry " + e.name + ": expected degree " +
                                std::to_string(e.degree) + " and order " +
                                e.expected_order.str() + ", got degree " +
                                std::to_string(G.degree()) + " and order " + G.order().str());
    return {std::move(G), e};
  }

  CorpusEntry e;
  e.name = name;
  std::smatch m;
  static std::regex const an(R"(([AS])(\d+))");
  if (std::regex_match(name, m, an)) {
    std::size_t n = std::stoul(m[2]);
    require_within(n, caps.max_degree, "permutation degree");
    bool alt = m[1] == "A";
    e.source = alt ? "builtin:alternating" : "builtin:symmetric";
    e.degree = n;
    e.expected_order = alt && n >= 2 ? factorial(static_cast<unsigned>(n)) / 2
                                     : factorial(static_cast<unsigned>(n));
    GeneratedGroup G = alt ? alternating_group(n) : symmetric_group(n);
    if (G.order() != e.expected_order)
      throw VerificationFailure("order check failed for " + name);
    if (alt && n >= 5) {
      e.tags = {"simple", "alternating"};
      e.verdict_name = name;
    }
    return {std::move(G), e};
  }
  if (std::filesystem::exists(name)) {
    e.source = "file:" + name;
    GeneratedGroup G = load_group_file(name, caps);
    e.degree = G.degree();
    return {std::move(G), e};
  }
  try {
    auto spec = MatrixGroupSpec::parse(name);
    e.source = "builtin:" + name;
    GeneratedGroup G = permutation_image(spec, caps);
    e.degree = G.degree();
    e.expected_order = G.order();
    e.tags = {"lie-type"};
    return {std::move(G), e};
  } catch (InputError const &) {
  }
  throw InputError("unknown group '" + name + "': not a corpus entry, spec or file");
}

} // namespace sclosure
