#include "altchar/serialize.hpp"

#include <limits>

namespace altchar {

Json bigint_json(const BigInt& x) {
    if (x <= std::numeric_limits<std::int64_t>::max() &&
        x >= std::numeric_limits<std::int64_t>::min()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

Json to_json(const QuadValue& x) {
    return Json{{"a", bigint_json(x.a())}, {"b", bigint_json(x.b())}, {"D", x.discriminant()}};
}

Json to_json(const MultiplicityVector& v) {
    Json out = Json::array();
    for (const auto& e : v.entries) out.push_back(bigint_json(e));
    return out;
}

std::string csv_row(const MultiplicityVector& v) {
    std::string out = std::to_string(v.m);
    for (const auto& e : v.entries) out += "," + e.str();
    return out;
}

Json to_json(const BiasResult& r) {
    Json conditions = Json::array();
    for (const auto& c : r.conditions) {
        conditions.push_back(Json{{"p", c.p},
                                  {"e", c.e},
                                  {"f", c.f},
                                  {"d", c.d},
                                  {"u", c.u},
                                  {"odd_exponent", c.odd_exponent},
                                  {"satisfied", c.satisfied}});
    }
    return Json{{"d", r.value},
                {"abs_d", r.abs_formula},
                {"nonzero", r.nonzero},
                {"conditions", std::move(conditions)}};
}

Json to_json(const CharacterTable& table) {
    Json classes = Json::array();
    for (const auto& c : table.classes) {
        classes.push_back(Json{{"label", c.cls.label()}, {"size", bigint_json(c.size)}});
    }
    Json irreps = Json::array();
    for (const auto& v : table.irreps) {
        irreps.push_back(Json{{"label", v.irrep.label()}, {"dimension", bigint_json(v.dimension)}});
    }
    Json values = Json::array();
    for (const auto& row : table.values) {
        Json jrow = Json::array();
        for (const auto& x : row) jrow.push_back(to_json(x));
        values.push_back(std::move(jrow));
    }
    return Json{{"n", table.n},
                {"classes", std::move(classes)},
                {"irreps", std::move(irreps)},
                {"values", std::move(values)}};
}

Json to_json(const GlobalVerdict& verdict) {
    Json out{{"mu", verdict.mu.to_string()}, {"in_scope", verdict.in_scope}};
    out["is_global"] = verdict.is_global ? Json(*verdict.is_global) : Json(nullptr);
    out["rule"] = verdict.rule;
    if (verdict.witness) {
        out["witness"] = Json{{"irrep", verdict.witness->irrep.label()},
                              {"multiplicity", bigint_json(verdict.witness->multiplicity)}};
    }
    if (!verdict.inner_products.empty()) {
        out["centralizer_order"] = bigint_json(verdict.centralizer_order);
        Json products = Json::array();
        for (const auto& entry : verdict.inner_products) {
            products.push_back(Json{{"irrep", entry.irrep.label()},
                                    {"multiplicity", bigint_json(entry.multiplicity)}});
        }
        out["inner_products"] = std::move(products);
    }
    return out;
}

Json to_json(const ExceptionRule& rule) {
    return Json{{"id", rule.id}, {"description", rule.description}};
}

Json to_json(const std::vector<SwansonException>& exceptions) {
    Json out = Json::array();
    for (const auto& e : exceptions) {
        out.push_back(Json{{"lambda", e.lambda.to_string()}, {"i", e.i}, {"rule", e.rule}});
    }
    return out;
}

}  // namespace altchar
