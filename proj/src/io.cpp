#include "convextri/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace convextri {

namespace {

ConvexInstance parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("document must be an object with an integer field \"n\"");
    int n = doc["n"].get<int>();
    std::vector<Chord> chords;
    if (doc.contains("forbidden")) {
        if (!doc["forbidden"].is_array())
            throw ParseError("field \"forbidden\" must be an array of [i,j] pairs");
        for (const auto& item : doc["forbidden"]) {
            if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
                !item[1].is_number_integer())
                throw ParseError("forbidden entries must be [i,j] integer pairs");
            int a = item[0].get<int>(), b = item[1].get<int>();
            if (a < 0 || b < 0 || a >= n || b >= n || a == b)
                throw InvalidChord("chord [" + std::to_string(a) + "," + std::to_string(b) +
                                   "] invalid for n=" + std::to_string(n));
            chords.emplace_back(a, b);
        }
    }
    return ConvexInstance(n, std::move(chords));
}

ConvexInstance parse_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Chord> chords;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (tok == "n") {
            if (n >= 0) throw ParseError("duplicate n directive" + where());
            if (!(ls >> n) || n < 3) throw ParseError("n needs an integer >= 3" + where());
        } else if (tok == "e") {
            if (n < 0) throw ParseError("e before n" + where());
            int a, b;
            if (!(ls >> a >> b)) throw ParseError("e needs two vertex indices" + where());
            if (a < 0 || b < 0 || a >= n || b >= n || a == b)
                throw InvalidChord("chord [" + std::to_string(a) + "," + std::to_string(b) +
                                   "] invalid for n=" + std::to_string(n) + where());
            chords.emplace_back(a, b);
        } else {
            throw ParseError("unknown directive '" + tok + "'" + where());
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens" + where());
    }
    if (n < 0) throw ParseError("missing n directive");
    return ConvexInstance(n, std::move(chords));
}

} // namespace

ConvexInstance parse_instance(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json(text);
        break;
    }
    return parse_lines(text);
}

std::string serialize_instance(const ConvexInstance& inst) {
    nlohmann::json doc;
    doc["n"] = inst.n();
    auto arr = nlohmann::json::array();
    for (const Chord& c : inst.forbidden()) arr.push_back({c.a, c.b});
    doc["forbidden"] = arr;
    return doc.dump();
}

} // namespace convextri
