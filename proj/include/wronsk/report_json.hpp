#pragma once

#include "conformal.hpp"
#include "diffop.hpp"
#include "ncfree.hpp"
#include "shlie.hpp"
#include "wronskian.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace wronsk {

using Json = nlohmann::ordered_json;

Json to_json(const Table6Entry &e);
Json to_json(const Table6Report &r);
Json to_json(const Theorem1Report &r);
Json to_json(const GeneratingFunctionReport &r);
Json to_json(const FactorizationReport &r);
Json to_json(const JacobiatorGridReport &r);
Json to_json(const JacobiKNReport &r);
Json to_json(const Sl2Report &r);
Json to_json(const StructureTable &t);
Json to_json(const TranslationReport &r);
Json to_json(const ConformalReport &r);

/// Header "args,result,coeff"; args joined with ';'.
std::string to_csv(const StructureTable &t);

} // namespace wronsk
