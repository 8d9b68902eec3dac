#pragma once

// JSON interchange: .hopf.json, .sub.json, .series.json, .group.json and
// .mp.json, plus the deterministic printer used for every report.

#include <optional>
#include <string>

#include <json.hpp>

#include "hopfkit/series.hpp"

namespace hopfkit {

using Json = nlohmann::ordered_json;

/// Values whose compact form fits in a line stay inline; larger objects and
/// arrays get one member per line. Ends with a newline.
std::string dump_json(const Json& j);

/// Throws InputError with the path and the parser's byte offset.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j, const std::string& where);

Json hopf_to_json(const HopfAlgebra& h);
HopfPtr hopf_from_json(const Json& j, const std::string& where = "hopf");
HopfPtr read_hopf_file(const std::string& path);

Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j, const std::string& where = "group");
/// A file path (anything ending in .json) or a name such as "S4".
GroupPtr parse_group_arg(const std::string& arg);

Json matched_pair_to_json(const MatchedPair& mp);
MatchedPair matched_pair_from_json(const Json& j, const Field& f = Field::rationals(),
                                   const std::string& where = "matched pair");

/// What an algebra was built from; enables the subgroup shorthands.
struct Source {
  enum class Kind { generic, group_algebra, dual_group_algebra, extension };
  Kind kind = Kind::generic;
  GroupPtr group;
  std::optional<MatchedPair> pair;
};

/// {"vectors":[[c,...],...]}, {"subgroup":[labels]} or {"gamma_quotient":[labels]};
/// also the strings "whole" and "trivial".
Subspace subspace_from_json(const Json& j, const HopfAlgebra& h, const Source& src,
                            const std::string& where = "subobject");
Json subspace_to_json(const Subspace& s);

SubnormalSeries series_from_json(const Json& j, const HopfAlgebra& h, const Source& src,
                                 const std::string& where = "series");
Json series_to_json(const SubnormalSeries& s);

Json fingerprint_to_json(const IsoFingerprint& f);
Json factor_to_json(const Factor& f);
Json factors_to_json(const std::vector<Factor>& fs);

}  // namespace hopfkit
