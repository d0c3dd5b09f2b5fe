#include "tss/certificate.hpp"

#include "tss/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace tss {

using ordered_json = nlohmann::ordered_json;

void add_term(SequenceCertificate& cert, const Int& offset, const TwoSquareRep& rep) {
    CertTerm term;
    term.offset = offset;
    term.value = cert.n + offset;
    term.rep = rep;
    term.nonzero = rep.nonzero();
    cert.terms.push_back(std::move(term));
}

VerifyResult verify_certificate(const SequenceCertificate& cert) {
    auto fail = [](std::string reason) { return VerifyResult{false, std::move(reason)}; };
    if (cert.n < 0) return fail("n is negative");
    if (cert.terms.empty()) return fail("certificate has no terms");
    bool saw_zero_offset = false;
    const Int* previous = nullptr;
    for (const CertTerm& term : cert.terms) {
        if (term.offset == 0) saw_zero_offset = true;
        const std::string where = "term at offset " + to_decimal(term.offset);
        if (previous && !(*previous < term.offset))
            return fail(where + ": offsets not strictly ascending");
        previous = &term.offset;
        if (term.value < 0) return fail(where + ": negative value");
        if (term.value != cert.n + term.offset) return fail(where + ": value != n + offset");
        if (term.rep.value != term.value) return fail(where + ": rep attached to wrong value");
        if (!verify_rep(term.rep))
            return fail(where + ": " + to_decimal(term.rep.a) + "^2 + " + to_decimal(term.rep.b) +
                        "^2 != " + to_decimal(term.value));
        if (term.nonzero != term.rep.nonzero()) return fail(where + ": nonzero flag inconsistent");
    }
    if (!saw_zero_offset) return fail("no term certifies n itself (offset 0 missing)");
    return {};
}

std::string serialize_certificate(const SequenceCertificate& cert, bool pretty) {
    ordered_json doc;
    doc["schema-version"] = kSchemaVersion;
    doc["method"] = cert.method;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : cert.parameters) params[key] = to_decimal(value);
    doc["parameters"] = std::move(params);
    doc["n"] = to_decimal(cert.n);
    ordered_json terms = ordered_json::array();
    static const Int kOffsetLimit = Int(1) << 62;
    for (const CertTerm& term : cert.terms) {
        if (abs(term.offset) > kOffsetLimit)
            throw Error("offset " + to_decimal(term.offset) +
                        " exceeds the document integer range");
        ordered_json t;
        t["offset"] = term.offset.convert_to<long long>();
        t["value"] = to_decimal(term.value);
        t["rep"] = {to_decimal(term.rep.a), to_decimal(term.rep.b)};
        t["nonzero"] = term.nonzero;
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return pretty ? doc.dump(2) : doc.dump();
}

namespace {

Int field_decimal(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw MalformedDocument(std::string("missing or non-string field '") + key + "'");
    try {
        return parse_decimal(j[key].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw MalformedDocument(std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace

SequenceCertificate parse_certificate(const std::string& json_text) {
    ordered_json doc = ordered_json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) throw MalformedDocument("invalid JSON");
    if (!doc.is_object()) throw MalformedDocument("document is not an object");
    if (!doc.contains("schema-version") || doc["schema-version"] != kSchemaVersion)
        throw MalformedDocument("unsupported or missing schema-version");
    if (!doc.contains("method") || !doc["method"].is_string())
        throw MalformedDocument("missing method");

    SequenceCertificate cert;
    cert.method = doc["method"].get<std::string>();
    if (!doc.contains("parameters") || !doc["parameters"].is_object())
        throw MalformedDocument("missing parameters object");
    for (const auto& [key, value] : doc["parameters"].items()) {
        if (!value.is_string()) throw MalformedDocument("parameter '" + key + "' not a string");
        try {
            cert.parameters.emplace_back(key, parse_decimal(value.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw MalformedDocument("parameter '" + key + "': " + e.what());
        }
    }
    cert.n = field_decimal(doc, "n");
    if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty())
        throw MalformedDocument("missing or empty terms array");
    for (const ordered_json& t : doc["terms"]) {
        if (!t.is_object()) throw MalformedDocument("term is not an object");
        if (!t.contains("offset") || !t["offset"].is_number_integer())
            throw MalformedDocument("term offset missing or not an integer");
        CertTerm term;
        term.offset = Int(t["offset"].get<long long>());
        term.value = field_decimal(t, "value");
        if (!t.contains("rep") || !t["rep"].is_array() || t["rep"].size() != 2 ||
            !t["rep"][0].is_string() || !t["rep"][1].is_string())
            throw MalformedDocument("term rep must be a two-element array of strings");
        try {
            term.rep.a = parse_decimal(t["rep"][0].get<std::string>());
            term.rep.b = parse_decimal(t["rep"][1].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw MalformedDocument(std::string("term rep: ") + e.what());
        }
        term.rep.value = term.value;
        if (!t.contains("nonzero") || !t["nonzero"].is_boolean())
            throw MalformedDocument("term nonzero flag missing or not boolean");
        term.nonzero = t["nonzero"].get<bool>();
        cert.terms.push_back(std::move(term));
    }
    return cert;
}

std::string format_certificate(const SequenceCertificate& cert) {
    std::ostringstream out;
    out << cert.method << " certificate, n = " << cert.n << "\n";
    out << "  parameters:";
    for (const auto& [key, value] : cert.parameters) out << " " << key << "=" << value;
    out << "\n";
    for (const CertTerm& term : cert.terms) {
        out << "  " << term.value << " = " << term.rep.a << "^2 + " << term.rep.b << "^2";
        if (!term.nonzero) out << "  (zero component)";
        out << "\n";
    }
    return out.str();
}

}  // namespace tss
