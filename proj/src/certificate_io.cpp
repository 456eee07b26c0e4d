#include "leontief/certificate_io.hpp"

#include <json.hpp>

namespace leontief {

namespace {

using nlohmann::ordered_json;

ordered_json vector_json(const RationalVector& v)
{
    ordered_json arr = ordered_json::array();
    for (const Rational& value : v) arr.push_back(to_string(value));
    return arr;
}

RationalVector vector_field(const nlohmann::json& doc, const char* key)
{
    if (!doc.contains(key)) throw CertificateParseError(std::string("missing field \"") + key + "\"");
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw CertificateParseError(std::string("field \"") + key + "\" is not an array");
    RationalVector out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string()) {
            throw CertificateParseError(std::string(key) + "[" + std::to_string(i) + "] is not a string");
        }
        try {
            out.push_back(parse_rational(arr[i].get<std::string>()));
        } catch (const std::invalid_argument&) {
            throw CertificateParseError(std::string(key) + "[" + std::to_string(i) + "] is not a rational: \"" +
                                        arr[i].get<std::string>() + "\"");
        }
    }
    return out;
}

}  // namespace

std::string emit_certificate(const Outcome& outcome, const Instance* inst)
{
    ordered_json doc;
    doc["outcome"] = std::string(name(kind_of(outcome)));
    std::visit([&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Optimal>) {
            doc["x"] = vector_json(o.x);
            doc["y"] = vector_json(o.y);
            if (inst) doc["objective"] = to_string(dot(inst->c, o.x));
        } else if constexpr (std::is_same_v<T, PrimalInfeasible>) {
            doc["z"] = vector_json(o.z);
            doc["y"] = vector_json(o.y);
        } else if constexpr (std::is_same_v<T, DualInfeasible>) {
            doc["x"] = vector_json(o.x);
            doc["r"] = vector_json(o.r);
        } else {
            doc["z"] = vector_json(o.z);
            doc["r"] = vector_json(o.r);
        }
    }, outcome);
    return doc.dump(2) + "\n";
}

Outcome parse_certificate(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CertificateParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw CertificateParseError("certificate is not a JSON object");
    if (!doc.contains("outcome") || !doc.at("outcome").is_string()) {
        throw CertificateParseError("missing string field \"outcome\"");
    }
    const std::string tag = doc.at("outcome").get<std::string>();
    const auto kind = parse_outcome_kind(tag);
    if (!kind) throw CertificateParseError("unknown outcome \"" + tag + "\"");
    switch (*kind) {
    case OutcomeKind::optimal:
        return Optimal{vector_field(doc, "x"), vector_field(doc, "y")};
    case OutcomeKind::primal_infeasible:
        return PrimalInfeasible{vector_field(doc, "z"), vector_field(doc, "y")};
    case OutcomeKind::dual_infeasible:
        return DualInfeasible{vector_field(doc, "x"), vector_field(doc, "r")};
    case OutcomeKind::both_infeasible:
        return BothInfeasible{vector_field(doc, "z"), vector_field(doc, "r")};
    }
    throw CertificateParseError("unknown outcome \"" + tag + "\"");
}

}  // namespace leontief
