#ifndef SCLOSURE_REPORT_H
#define SCLOSURE_REPORT_H

#include <string>

#include <json.hpp>

#include "sclosure/analysis.h"
#include "sclosure/extensions.h"

namespace sclosure
{

/// Keys keep insertion order, so dumps are deterministic.
using Json = nlohmann::ordered_json;

/// A number when it fits in 64 bits, else its decimal string.
Json big_json(BigInt const &n);

Json to_json(SylowSummary const &s);
Json to_json(SylowShape const &s);
Json to_json(Verdict const &v);
Json to_json(CrosscheckReport const &r);
Json to_json(AnalysisReport const &r);
Json to_json(Prop41Report const &r);
Json to_json(Prop42Report const &r);
Json to_json(CorpusEntry const &e);

std::string render_text(SylowShape const &s);
std::string render_text(Verdict const &v);
std::string render_text(CrosscheckReport const &r);
std::string render_text(AnalysisReport const &r);
std::string render_text(Prop41Report const &r);
std::string render_text(Prop42Report const &r);

/// Copy without "timing_ms" keys, at any depth.
Json without_timing(Json j);

} // namespace sclosure

#endif // SCLOSURE_REPORT_H
