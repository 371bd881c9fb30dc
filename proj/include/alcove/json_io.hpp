// JSON wire formats. All numeric payloads are integers or exact rational
// strings "num/den"; parabolic subsets are 1-based in JSON.

#pragma once

#include <nlohmann/json.hpp>

#include "alcove/localsystem.hpp"

namespace alcove {

using json = nlohmann::json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);

json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const json& j);

json jset_to_json(const std::vector<int>& J);             // 0-based -> 1-based
std::vector<int> jset_from_json(const json& j, int rank);  // 1-based -> 0-based

json alcove_to_json(const Alcove& a);
Alcove alcove_from_json(const json& j);

json word_to_json(const BraidWord& w);
BraidWord word_from_json(const json& j);

json group_algebra_to_json(const GroupAlgebraElem& f);

json label_to_json(const CategoryLabel& l);
json functor_to_json(const FunctorExpr& e);

json path_to_json(const Path& p);
Path path_from_json(const json& j);

json cone_to_json(const ConeSpec& c);

json report_to_json(const Report& r);

json verdict_to_json(const EqualityVerdict& v);

}  // namespace alcove
