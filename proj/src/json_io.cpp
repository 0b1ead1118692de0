#include "kcob/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kcob {

using nlohmann::json;

json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

Integer integer_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::invalid_argument(where + ": expected an integer, got " + j.dump());
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Integer> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array()) throw std::invalid_argument(where + ": row " + std::to_string(r) + " is not an array");
        if (r == 0) cols = row.size();
        if (row.size() != cols) throw std::invalid_argument(where + ": rows have different lengths");
        for (std::size_t c = 0; c < cols; ++c)
            entries.push_back(integer_from_json(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
    return IntMatrix(rows, cols, std::move(entries));
}

namespace {

DecoratedKnot parse_knot(const json& j, const std::string& where, int depth) {
    if (depth > 32) throw std::invalid_argument(where + ": companions nested too deeply");
    if (!j.is_object()) throw std::invalid_argument(where + ": expected a knot object");
    for (const auto& [key, _] : j.items()) {
        if (key != "name" && key != "seifert" && key != "decorations" && key != "summands")
            throw std::invalid_argument(where + ": unknown field '" + key + "'");
    }
    if (!j.contains("seifert")) throw std::invalid_argument(where + ": missing field 'seifert'");
    DecoratedKnot k;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw std::invalid_argument(where + ".name: expected a string");
        k.name = j["name"].get<std::string>();
    }
    k.seifert = SeifertMatrix(matrix_from_json(j["seifert"], where + ".seifert"));
    if (j.contains("summands")) k.summands = integer_from_json(j["summands"], where + ".summands");
    if (j.contains("decorations")) {
        const json& ds = j["decorations"];
        if (!ds.is_array()) throw std::invalid_argument(where + ".decorations: expected an array");
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const std::string at = where + ".decorations[" + std::to_string(i) + "]";
            const json& d = ds[i];
            if (!d.is_object() || !d.contains("band") || !d.contains("companion"))
                throw std::invalid_argument(at + ": expected {band, companion, copies}");
            BandDecoration deco;
            Integer band = integer_from_json(d["band"], at + ".band");
            if (sgn(band) < 0 || !band.fits_ulong_p()) throw std::invalid_argument(at + ".band: out of range");
            deco.band = band.get_ui();
            if (d.contains("copies")) deco.copies = integer_from_json(d["copies"], at + ".copies");
            const json& c = d["companion"];
            if (c.is_string()) {
                auto b = builtin_knot(c.get<std::string>());
                if (!b) throw std::invalid_argument(at + ".companion: unknown built-in knot '" + c.get<std::string>() + "'");
                deco.companion = std::make_shared<const DecoratedKnot>(std::move(*b));
            } else {
                deco.companion = std::make_shared<const DecoratedKnot>(parse_knot(c, at + ".companion", depth + 1));
            }
            k.decorations.push_back(std::move(deco));
        }
    }
    k.validate();
    return k;
}

}  // namespace

DecoratedKnot knot_from_json(const json& j) { return parse_knot(j, "knot", 0); }

json knot_to_json(const DecoratedKnot& k) {
    json out;
    out["name"] = k.name;
    out["seifert"] = matrix_to_json(k.seifert.matrix());
    json decos = json::array();
    for (const auto& d : k.decorations) {
        decos.push_back({{"band", d.band}, {"companion", knot_to_json(*d.companion)}, {"copies", integer_to_json(d.copies)}});
    }
    out["decorations"] = std::move(decos);
    out["summands"] = integer_to_json(k.summands);
    return out;
}

DecoratedKnot load_knot(const std::string& ref) {
    const std::string prefix = "builtin:";
    if (ref.rfind(prefix, 0) == 0) {
        auto k = builtin_knot(ref.substr(prefix.size()));
        if (!k) throw std::invalid_argument("unknown built-in knot '" + ref.substr(prefix.size()) + "'");
        return *k;
    }
    std::ifstream in(ref);
    if (!in) throw std::invalid_argument("cannot open knot file '" + ref + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + ref + "': " + e.what());
    }
    return knot_from_json(j);
}

}  // namespace kcob
