#include "wirtlab/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wirtlab/errors.hpp"

namespace wirtlab {

Json code_to_json(const GaussCode& code) {
    Json visits = Json::array();
    for (const auto& v : code.visits())
        visits.push_back(Json{{"id", v.id}, {"pass", v.pass == Pass::Over ? "O" : "U"}, {"sign", v.sign}});
    return Json{{"visits", visits}};
}

GaussCode code_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("visits") || !j["visits"].is_array())
        throw Error(ErrorKind::Syntax, "code document needs a \"visits\" array");
    std::vector<Visit> out;
    for (const auto& v : j["visits"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("pass") || !v.contains("sign"))
            throw Error(ErrorKind::Syntax, "visit needs id, pass and sign");
        if (!v["id"].is_number_integer() || !v["sign"].is_number_integer() || !v["pass"].is_string())
            throw Error(ErrorKind::Syntax, "visit fields have the wrong types");
        const std::string pass = v["pass"].get<std::string>();
        if (pass != "O" && pass != "U") throw Error(ErrorKind::Syntax, "pass must be \"O\" or \"U\"");
        out.push_back({v["id"].get<int>(), pass == "O" ? Pass::Over : Pass::Under, v["sign"].get<int>()});
    }
    return GaussCode(std::move(out));
}

Json presentation_to_json(const GroupPresentation& p) {
    Json rels = Json::array();
    for (const auto& r : p.relators) {
        Json w = Json::array();
        for (const auto& l : r.letters()) w.push_back(Json::array({l.gen, l.exp}));
        rels.push_back(w);
    }
    Json j{{"generators", p.generators}, {"relators", rels}};
    j["twist"] = p.twist ? Json(*p.twist) : Json(nullptr);
    if (!p.meridian_map.empty()) j["meridian_map"] = p.meridian_map;
    if (!p.notes.empty()) j["notes"] = p.notes;
    return j;
}

GroupPresentation presentation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
        throw Error(ErrorKind::Syntax, "presentation needs generators and relators");
    GroupPresentation p;
    try {
        p.generators = j["generators"].get<std::vector<int>>();
        for (const auto& r : j["relators"]) {
            std::vector<Letter> ls;
            for (const auto& l : r) {
                if (!l.is_array() || l.size() != 2) throw Error(ErrorKind::Syntax, "letters are [generator, exponent]");
                ls.push_back({l[0].get<int>(), l[1].get<int>()});
            }
            p.relators.emplace_back(ls);
        }
        if (j.contains("twist") && !j["twist"].is_null()) p.twist = j["twist"].get<int>();
        if (j.contains("meridian_map")) p.meridian_map = j["meridian_map"].get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Syntax, std::string("presentation: ") + e.what());
    }
    for (const auto& r : p.relators)
        for (const auto& l : r.letters())
            if (!p.has_generator(l.gen))
                throw Error(ErrorKind::UnknownGenerator, "relator uses undeclared generator " + std::to_string(l.gen));
    return p;
}

Json graph_to_json(const CoxeterGraph& g) {
    Json edges = Json::array();
    for (const auto& [u, v, k] : g.edges())
        edges.push_back(Json::array({g.vertices()[static_cast<std::size_t>(u)], g.vertices()[static_cast<std::size_t>(v)], k}));
    return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

CoxeterGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices")) throw Error(ErrorKind::Syntax, "graph needs vertices");
    try {
        std::vector<std::string> vs;
        for (const auto& v : j["vertices"]) vs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        std::vector<std::tuple<std::string, std::string, int>> es;
        if (j.contains("edges"))
            for (const auto& e : j["edges"]) {
                if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Syntax, "edges are [u, v, weight]");
                auto name = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
                es.emplace_back(name(e[0]), name(e[1]), e[2].get<int>());
            }
        return CoxeterGraph(vs, es);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Syntax, std::string("graph: ") + e.what());
    }
}

std::string read_text_arg(const std::string& arg) {
    std::error_code ec;
    if (!arg.empty() && arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw Error(ErrorKind::Io, "cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    const bool looks_like_path = arg.find('/') != std::string::npos || arg.ends_with(".json") ||
                                 arg.ends_with(".gc") || arg.ends_with(".txt");
    if (looks_like_path && arg.find('{') == std::string::npos)
        throw Error(ErrorKind::Io, "cannot read " + arg);
    return arg;
}

namespace {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Syntax, std::string("JSON: ") + e.what());
    }
}

bool is_json(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] == '{';
}

}  // namespace

GaussCode load_code(const std::string& arg) {
    const std::string text = read_text_arg(arg);
    if (is_json(text)) return code_from_json(parse_json(text));
    return parse_gauss_code(text);
}

GroupPresentation load_presentation(const std::string& arg) {
    const std::string text = read_text_arg(arg);
    if (is_json(text)) {
        Json j = parse_json(text);
        if (j.contains("visits")) return wirtinger_presentation(code_from_json(j));
        return presentation_from_json(j);
    }
    return wirtinger_presentation(parse_gauss_code(text));
}

CoxeterGraph load_graph(const std::string& arg) { return graph_from_json(parse_json(read_text_arg(arg))); }

}  // namespace wirtlab
