#ifndef SCLOSURE_CORPUS_H
#define SCLOSURE_CORPUS_H

#include <optional>
#include <string>
#include <vector>

#include "sclosure/group.h"

namespace sclosure
{

struct CorpusEntry
{
  std::string name;
  /// "builtin:<constructor>" or "file:<path relative to the data dir>".
  std::string source;
  std::size_t degree = 0;
  /// Zero for ad-hoc files, whose order is not checked.
  BigInt expected_order = 0;
  std::vector<std::string> tags;
  /// Lie-type name of the universal group realized exactly, e.g. "A1(19)".
  std::optional<std::string> lie;
  /// Name understood by strongly_closed_verdict, for simple groups.
  std::optional<std::string> verdict_name;
  /// Needs --allow-large.
  bool large = false;

  bool has_tag(std::string const &t) const;
};

struct LoadedGroup
{
  GeneratedGroup group;
  CorpusEntry entry;
};

std::vector<CorpusEntry> const &corpus_entries();

/// Data directory: $SC_DATA_DIR if set, else the compiled-in path.
std::string data_dir();

/// Text format: "degree N" first, then one generator per line in 0-based
/// cycle notation; '#' starts a comment.
GeneratedGroup parse_group_text(std::string const &text, Caps const &caps = default_caps());
GeneratedGroup load_group_file(std::string const &path, Caps const &caps = default_caps());

/// A corpus name, a matrix group spec such as "SL(2,19)" or "SU(3,3):isotropic",
/// "An"/"Sn", or a path to a group file. Corpus entries are checked against
/// their expected order; a mismatch throws VerificationFailure.
LoadedGroup corpus_load(std::string const &name, Caps const &caps = default_caps(),
                        bool allow_large = false);

GeneratedGroup alternating_group(std::size_t n);
GeneratedGroup symmetric_group(std::size_t n);

} // namespace sclosure

#endif // SCLOSURE_CORPUS_H
