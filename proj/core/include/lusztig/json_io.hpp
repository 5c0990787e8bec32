#pragma once

// JSON schemas. Positions and minimal pairs are 1-based on the wire.
//
//   word        {"n":3,"word":[1,3,2,1,3,2]}
//   wiring      {"n":..,"word":[..],"crossings":[{"pos":j,"level":i,"strings":[p,q]}],
//                "chambers":[{"pair":[s,s2],"level":i,"set":[..],"above":[[p,q]..],"below":[..]}]}
//   label       {"kind":"simple","root":j} | {"kind":"chamber","pair":[s,s2]}
//   cone matrix {"n":..,"word":[..],"rows":[{"label":label,"row":[..]}]}
//   vector      {"coords":"root","n":n,"values":{"(p,q)":v,..}}
//               {"coords":"position","n":n,"word":[..],"values":[..]}
//   report      {"n":..,"checked":..,"non_unimodular":..,
//                "mismatches":[{"word":[..],"label":label,"expected":[..],"got":[..]}]}
//               expected/got list entries in canonical root order

#include <nlohmann/json.hpp>

#include "lusztig/cone.hpp"
#include "lusztig/pquiver.hpp"
#include "lusztig/spanning.hpp"
#include "lusztig/weyl_words.hpp"
#include "lusztig/wiring.hpp"

namespace lusztig::json {

using nlohmann::json;

json word(const ReducedWord& w);
ReducedWord word_from(const json& j);

json wiring(const WiringDiagram& d);

json label(const RowLabel& l);
RowLabel label_from(const json& j);

json cone(const ConeMatrix& m);
/// Rebuilds the matrix from its rows; throws InputError if they disagree with
/// cone_matrix() of the stored word.
ConeMatrix cone_from(const json& j);

json root_vector(const RootVector& v);
json position_vector(const RootVector& v, const ReducedWord& w);
/// Accepts either tagged form.
RootVector vector_from(const json& j);

json chamber_set(const ChamberSet& s);

json report(const VerificationReport& r);
VerificationReport report_from(const json& j);

}  // namespace lusztig::json
