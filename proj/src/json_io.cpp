#include "hodgechase/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

namespace hodgechase {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error("scenario json: " + what); }

void expect_keys(const json& j, const std::set<std::string>& allowed,
                 const std::string& where) {
    if (!j.is_object())
        fail(where + " is not an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            fail("unknown key \"" + key + "\" in " + where);
}

json rational_to_json(const Rational& r) {
    if (r.is_integer())
        return r.as_integer();
    return r.str();
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (!j.is_string())
        fail(where + " is neither an integer nor an \"a/b\" string");
    const std::string s = j.get<std::string>();
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(where + ": cannot parse rational \"" + s + "\"");
    }
}

json bigraded_to_json(const BigradedDims& b) {
    json out = json::array();
    for (const auto& [pq, d] : b.entries())
        out.push_back(json::array({pq.p, pq.q, d}));
    return out;
}

BigradedDims bigraded_from_json(const json& j, const std::string& where) {
    if (!j.is_array())
        fail(where + " is not an array of [p, q, dim] triples");
    BigradedDims out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3)
            fail(where + " entry is not a [p, q, dim] triple");
        out.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long>());
    }
    return out;
}

json profile_to_json(const SurfaceProfile& p) {
    return json{{"name", p.name},
                {"h1", bigraded_to_json(p.h1)},
                {"h2_edge", bigraded_to_json(p.h2_edge)},
                {"h2_pure", p.h2_pure},
                {"chi", p.chi}};
}

SurfaceProfile profile_from_json(const json& j) {
    expect_keys(j, {"name", "h1", "h2_edge", "h2_pure", "chi"}, "profile");
    SurfaceProfile p;
    p.name = j.at("name").get<std::string>();
    p.h1 = bigraded_from_json(j.at("h1"), "profile.h1");
    p.h2_edge = bigraded_from_json(j.at("h2_edge"), "profile.h2_edge");
    p.h2_pure = j.at("h2_pure").get<bool>();
    p.chi = j.at("chi").get<long>();
    p.validate();
    return p;
}

json curve_to_json(const CurveData& c) {
    json components = json::array();
    for (const auto& comp : c.components)
        components.push_back(json{{"label", comp.label}, {"genus", comp.genus}});
    json nodes = json::array();
    for (const auto& [a, b] : c.nodes)
        nodes.push_back(json::array({a, b}));
    return json{{"components", components}, {"nodes", nodes}};
}

CurveData curve_from_json(const json& j, const std::string& where) {
    expect_keys(j, {"components", "nodes"}, where);
    CurveData c;
    for (const auto& e : j.at("components")) {
        expect_keys(e, {"label", "genus"}, where + " component");
        c.components.push_back({e.at("label").get<std::string>(), e.at("genus").get<long>()});
    }
    for (const auto& e : j.at("nodes")) {
        if (!e.is_array() || e.size() != 2)
            fail(where + " node is not a pair of labels");
        c.nodes.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    c.validate();
    return c;
}

json annotation_to_json(const RankAnnotation& a) {
    json out;
    out["map"] = a.map_index;
    if (a.component)
        out["component"] = json::array({a.component->p, a.component->q});
    else
        out["component"] = "all";
    if (std::holds_alternative<long>(a.rank))
        out["rank"] = std::get<long>(a.rank);
    else
        out["rank"] = to_string(a.rank);
    return out;
}

RankAnnotation annotation_from_json(const json& j) {
    expect_keys(j, {"map", "component", "rank"}, "annotation");
    RankAnnotation a;
    a.map_index = j.at("map").get<std::size_t>();
    const json& comp = j.at("component");
    if (comp.is_string()) {
        if (comp.get<std::string>() != "all")
            fail("annotation component must be [p, q] or \"all\"");
    } else if (comp.is_array() && comp.size() == 2) {
        a.component = PQ{comp.at(0).get<int>(), comp.at(1).get<int>()};
    } else {
        fail("annotation component must be [p, q] or \"all\"");
    }
    const json& rank = j.at("rank");
    if (rank.is_number_integer()) {
        a.rank = rank.get<long>();
    } else if (rank.is_string()) {
        const std::string s = rank.get<std::string>();
        if (s == "injective")
            a.rank = RankRule::Injective;
        else if (s == "surjective")
            a.rank = RankRule::Surjective;
        else if (s == "zero")
            a.rank = RankRule::Zero;
        else
            fail("unknown rank rule \"" + s + "\"");
    } else {
        fail("annotation rank must be a number or a rule name");
    }
    return a;
}

json annotations_to_json(const std::vector<RankAnnotation>& v) {
    json out = json::array();
    for (const auto& a : v)
        out.push_back(annotation_to_json(a));
    return out;
}

std::vector<RankAnnotation> annotations_from_json(const json& j) {
    std::vector<RankAnnotation> out;
    for (const auto& e : j)
        out.push_back(annotation_from_json(e));
    return out;
}

json piece_to_json(const NormalizationPiece& p) {
    if (const auto* smooth = std::get_if<SmoothPiece>(&p))
        return json{{"type", "smooth"}, {"profile", profile_to_json(smooth->profile)}};
    const auto& resolved = std::get<ResolvedPiece>(p);
    json exceptional = json::array();
    for (const auto& c : resolved.exceptional)
        exceptional.push_back(curve_to_json(c));
    json out{{"type", "resolved"},
             {"resolution", profile_to_json(resolved.resolution)},
             {"exceptional", exceptional}};
    if (!resolved.overrides.empty())
        out["overrides"] = annotations_to_json(resolved.overrides);
    return out;
}

NormalizationPiece piece_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        fail("piece without a \"type\" key");
    const std::string type = j.at("type").get<std::string>();
    if (type == "smooth") {
        expect_keys(j, {"type", "profile"}, "smooth piece");
        return SmoothPiece{profile_from_json(j.at("profile"))};
    }
    if (type != "resolved")
        fail("unknown piece type \"" + type + "\"");
    expect_keys(j, {"type", "resolution", "exceptional", "overrides"}, "resolved piece");
    ResolvedPiece p;
    p.resolution = profile_from_json(j.at("resolution"));
    for (const auto& e : j.at("exceptional"))
        p.exceptional.push_back(curve_from_json(e, "exceptional curve"));
    if (j.contains("overrides"))
        p.overrides = annotations_from_json(j.at("overrides"));
    return p;
}

json numerics_to_json(const TripleNumerics& t) {
    return json{{"chi_xbar", t.chi_xbar},
                {"chi_dbar", t.chi_dbar},
                {"chi_d", t.chi_d},
                {"lc_flag", t.lc_flag},
                {"diff_invariant_flag", t.diff_invariant_flag},
                {"log_canonical_square", rational_to_json(t.log_canonical_square)}};
}

TripleNumerics numerics_from_json(const json& j) {
    expect_keys(j,
                {"chi_xbar", "chi_dbar", "chi_d", "lc_flag", "diff_invariant_flag",
                 "log_canonical_square"},
                "numerics");
    TripleNumerics t;
    t.chi_xbar = j.at("chi_xbar").get<long>();
    t.chi_dbar = j.at("chi_dbar").get<long>();
    t.chi_d = j.at("chi_d").get<long>();
    t.lc_flag = j.at("lc_flag").get<bool>();
    t.diff_invariant_flag = j.at("diff_invariant_flag").get<bool>();
    t.log_canonical_square =
        rational_from_json(j.at("log_canonical_square"), "numerics.log_canonical_square");
    return t;
}

json cover_to_json(const CoverData& c) {
    return json{{"deg_d", c.deg_d},
                {"deg_g", c.deg_g},
                {"g_d", c.g_d},
                {"branch_on_d", rational_to_json(c.branch_on_d)},
                {"vertex_on_d", c.vertex_on_d},
                {"branch_points_used", c.branch_points_used},
                {"dbar_genus", c.dbar_genus.genera}};
}

CoverData cover_from_json(const json& j) {
    expect_keys(j,
                {"deg_d", "deg_g", "g_d", "branch_on_d", "vertex_on_d", "branch_points_used",
                 "dbar_genus"},
                "cover");
    CoverData c;
    c.deg_d = j.at("deg_d").get<long>();
    c.deg_g = j.at("deg_g").get<long>();
    c.g_d = j.at("g_d").get<long>();
    c.branch_on_d = rational_from_json(j.at("branch_on_d"), "cover.branch_on_d");
    c.vertex_on_d = j.at("vertex_on_d").get<bool>();
    c.branch_points_used = j.at("branch_points_used").get<long>();
    c.dbar_genus.genera = j.at("dbar_genus").get<std::vector<long>>();
    return c;
}

}  // namespace

json scenario_to_json(const Scenario& s) {
    json out;
    out["id"] = s.id;
    out["citation"] = s.citation;
    if (const auto* normal = std::get_if<NormalScenario>(&s.kind)) {
        out["kind"] = "normal";
        out["piece"] = piece_to_json(normal->piece);
    } else {
        const auto& nn = std::get<NonNormalScenario>(s.kind);
        out["kind"] = "nonnormal";
        json pieces = json::array();
        for (const auto& p : nn.pieces)
            pieces.push_back(piece_to_json(p));
        out["pieces"] = pieces;
        out["d"] = curve_to_json(nn.d);
        out["dbar"] = curve_to_json(nn.dbar);
        if (!nn.overrides.empty())
            out["overrides"] = annotations_to_json(nn.overrides);
    }
    if (s.expected)
        out["expected"] = json::array({s.expected->r, s.expected->s});
    if (s.numerics)
        out["numerics"] = numerics_to_json(*s.numerics);
    if (s.cover)
        out["cover"] = cover_to_json(*s.cover);
    if (s.h11)
        out["h11"] = *s.h11;
    return out;
}

Scenario scenario_from_json(const json& j) {
    expect_keys(j,
                {"id", "citation", "kind", "piece", "pieces", "d", "dbar", "overrides",
                 "expected", "numerics", "cover", "h11"},
                "scenario");
    Scenario s;
    s.id = j.at("id").get<std::string>();
    s.citation = j.value("citation", std::string{});
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "normal") {
        s.kind = NormalScenario{piece_from_json(j.at("piece"))};
    } else if (kind == "nonnormal") {
        NonNormalScenario nn;
        for (const auto& e : j.at("pieces"))
            nn.pieces.push_back(piece_from_json(e));
        nn.d = curve_from_json(j.at("d"), "d");
        nn.dbar = curve_from_json(j.at("dbar"), "dbar");
        if (j.contains("overrides"))
            nn.overrides = annotations_from_json(j.at("overrides"));
        s.kind = std::move(nn);
    } else {
        fail("unknown scenario kind \"" + kind + "\"");
    }
    if (j.contains("expected")) {
        const json& e = j.at("expected");
        if (!e.is_array() || e.size() != 2)
            fail("expected type must be an [r, s] pair");
        s.expected = make_hodge_type(e.at(0).get<int>(), e.at(1).get<int>());
    }
    if (j.contains("numerics"))
        s.numerics = numerics_from_json(j.at("numerics"));
    if (j.contains("cover"))
        s.cover = cover_from_json(j.at("cover"));
    if (j.contains("h11"))
        s.h11 = j.at("h11").get<long>();
    return s;
}

json chain_to_json(const DegenerationChain& c) {
    return json{{"id", c.id}, {"scenarios", c.scenario_ids}};
}

DegenerationChain chain_from_json(const json& j) {
    expect_keys(j, {"id", "scenarios"}, "chain");
    return DegenerationChain{j.at("id").get<std::string>(),
                             j.at("scenarios").get<std::vector<std::string>>()};
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
    try {
        return scenario_from_json(j);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    } catch (const Error& e) {
        throw Error(path + ": " + std::string(e.what()));
    }
}

void dump_catalog(const Catalog& cat, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto write = [](const fs::path& path, const json& j) {
        std::ofstream out(path);
        if (!out)
            throw Error("cannot write " + path.string());
        out << j.dump(2) << "\n";
    };
    for (const auto& s : cat.scenarios)
        write(fs::path(dir) / (s.id + ".json"), scenario_to_json(s));
    json chains = json::array();
    for (const auto& c : cat.chains)
        chains.push_back(chain_to_json(c));
    write(fs::path(dir) / "chains.json", json{{"chains", chains}});
}

Catalog load_catalog(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw Error("not a catalog directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json" && entry.path().filename() != "chains.json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    Catalog cat;
    for (const auto& f : files)
        cat.scenarios.push_back(load_scenario(f.string()));
    const fs::path chains_path = fs::path(dir) / "chains.json";
    if (fs::exists(chains_path)) {
        std::ifstream in(chains_path);
        json j;
        try {
            in >> j;
            for (const auto& e : j.at("chains"))
                cat.chains.push_back(chain_from_json(e));
        } catch (const json::exception& e) {
            throw Error(chains_path.string() + ": " + e.what());
        }
    }
    return cat;
}

}  // namespace hodgechase
