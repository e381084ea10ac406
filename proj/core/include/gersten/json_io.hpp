#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gersten/category_c.hpp"
#include "gersten/chain.hpp"
#include "gersten/homotopy_nat.hpp"
#include "gersten/k0.hpp"
#include "gersten/zero_map.hpp"

/* JSON wire formats. Keys are emitted in sorted order, elements in their
 * canonical string form, so serialization is deterministic. */
namespace gersten::io {

using Json = nlohmann::json;

Json to_json(const Domain& d);
Json to_json(const RMatrix& m);
Json to_json(const ChainComplex& x);
Json to_json(const ChainMap& f);
Json to_json(const ChainHomotopy& h);
Json to_json(const HSquare& sq);
Json to_json(const CObject& x);
Json to_json(const CMorphism& m);
Json to_json(const IsoChain& c);
Json to_json(const Classified& c);
Json to_json(const FiniteCat& cat);
Json to_json(const FunctorData& F);
Json to_json(const HNatData& d);
Json to_json(const FLModule& m);
Json to_json(const SESWitness& w);
Json to_json(const Decomposition& d);

Domain domain_from_json(const Json& j);
RMatrix matrix_from_json(const Domain& d, const Json& j);
ChainComplex complex_from_json(const Json& j);
ChainMap chain_map_from_json(const Json& j);
CObject cobject_from_json(const Json& j);
CMorphism cmorphism_from_json(const Json& j);

/* strict document parse; throws ParseError on malformed input */
Json parse_text(const std::string& text);

}  // namespace gersten::io
