#include "gkm/json_io.hpp"

#include "json_detail.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace gkm {

namespace {

using detail::ordered_json;

IndexId id_from_json(const ordered_json& j) {
    if (j.is_string()) {
        auto parsed = IndexId::parse(j.get<std::string>());
        if (!parsed)
            throw std::invalid_argument("descriptor: bad index id '" + j.get<std::string>() + "'");
        return *parsed;
    }
    return IndexId::plain(detail::int_from_json(j));
}

struct ParsedDatum {
    CartanDatum datum;
    std::optional<MonsterConfig> monster;
};

ParsedDatum datum_from_json(const ordered_json& doc) {
    if (doc.contains("family")) {
        const std::string family = doc.at("family").get<std::string>();
        if (family != "monster")
            throw std::invalid_argument("descriptor: unknown family '" + family + "'");
        ChargeTable charges = ChargeTable::embedded_defaults();
        if (doc.contains("charges")) {
            const auto& cj = doc.at("charges");
            if (cj.is_string()) {
                charges = ChargeTable::load(cj.get<std::string>());
            } else if (cj.is_object()) {
                std::map<Int, Int> merged = charges.levels();
                for (const auto& [key, value] : cj.items())
                    merged[parse_int(key)] = detail::int_from_json(value);
                charges = ChargeTable::from_levels(std::move(merged));
            } else {
                throw std::invalid_argument("descriptor: charges must be a path or an object");
            }
        }
        Int max_level =
            doc.contains("max_level") ? detail::int_from_json(doc.at("max_level")) : charges.max_level();
        MonsterConfig cfg{std::move(charges), std::move(max_level)};
        return {monster_datum(cfg), cfg};
    }

    std::vector<IndexId> indices;
    std::vector<IndexClass> classes;
    for (const auto& entry : doc.at("indices")) {
        indices.push_back(id_from_json(entry.at("id")));
        const std::string cls = entry.at("class").get<std::string>();
        if (cls == "real")
            classes.push_back(IndexClass::real);
        else if (cls == "imaginary")
            classes.push_back(IndexClass::imaginary);
        else
            throw std::invalid_argument("descriptor: class must be 'real' or 'imaginary'");
    }
    std::vector<std::vector<Int>> matrix;
    for (const auto& row : doc.at("matrix")) {
        std::vector<Int> r;
        for (const auto& v : row)
            r.push_back(detail::int_from_json(v));
        matrix.push_back(std::move(r));
    }
    std::optional<std::vector<Int>> syms;
    if (doc.contains("symmetrizers")) {
        syms.emplace();
        for (const auto& v : doc.at("symmetrizers"))
            syms->push_back(detail::int_from_json(v));
    }
    return {CartanDatum::from_matrix(std::move(indices), std::move(classes), std::move(matrix),
                                     std::move(syms)),
            std::nullopt};
}

}  // namespace

LoadedModel load_model(const std::string& datum_json_text, const std::string& iota_json_text) {
    ordered_json datum_doc = ordered_json::parse(datum_json_text);
    ordered_json iota_doc = ordered_json::parse(iota_json_text);

    ParsedDatum parsed = datum_from_json(datum_doc);

    if (iota_doc.contains("monster") && iota_doc.at("monster").get<bool>()) {
        if (!parsed.monster)
            throw std::invalid_argument(
                "descriptor: iota {\"monster\":true} needs the monster family datum");
        return {parsed.datum, monster_iota(*parsed.monster), parsed.monster};
    }

    std::vector<IndexId> prefix, period;
    if (iota_doc.contains("prefix"))
        for (const auto& v : iota_doc.at("prefix"))
            prefix.push_back(id_from_json(v));
    for (const auto& v : iota_doc.at("period"))
        period.push_back(id_from_json(v));
    IotaSequence iota = IotaSequence::periodic(parsed.datum, std::move(prefix), std::move(period));
    return {parsed.datum, std::move(iota), parsed.monster};
}

}  // namespace gkm
