#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "altchar/bigint.hpp"
#include "altchar/characters.hpp"
#include "altchar/classification.hpp"
#include "altchar/global_classes.hpp"
#include "altchar/multiplicities.hpp"
#include "altchar/quad_value.hpp"

namespace altchar {

using Json = nlohmann::ordered_json;

/// A JSON number when the value fits in 64 bits, otherwise a decimal string.
Json bigint_json(const BigInt& x);

/// {"a": a, "b": b, "D": D}.
Json to_json(const QuadValue& x);

/// Array of the m entries.
Json to_json(const MultiplicityVector& v);

/// "m,e_0,...,e_{m-1}".
std::string csv_row(const MultiplicityVector& v);

Json to_json(const BiasResult& r);
Json to_json(const CharacterTable& table);
Json to_json(const GlobalVerdict& verdict);
Json to_json(const ExceptionRule& rule);
Json to_json(const std::vector<SwansonException>& exceptions);

}  // namespace altchar
