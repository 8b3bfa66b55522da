#include "bridgecalc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bridgecalc/errors.hpp"

namespace bridgecalc {

namespace {

template <typename T>
T get_field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string(what) + " is missing '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string(what) + " field '" + key + "' has the wrong type");
    }
}

json arcs_to_json(const std::vector<Arc>& arcs) {
    json out = json::array();
    for (const auto& a : arcs) out.push_back(json::array({a.first, a.second}));
    return out;
}

std::vector<Arc> arcs_from_json(const json& j, const char* what) {
    std::vector<Arc> out;
    if (j.is_null()) return out;
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of pairs");
    for (const auto& a : j) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
            throw SchemaError(std::string(what) + " entries must be [id, id]");
        out.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
    return out;
}

}  // namespace

json half_to_json(Half h) {
    if (h.is_integer()) return h.twice() / 2;
    return h.str();
}

Half half_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Half(j.get<std::int64_t>());
        if (j.is_string()) return Half::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("expected an integer or a \"p/2\" string");
}

json state_to_json(const PairState& s) {
    json surfaces = json::array();
    for (const auto& surf : s.surfaces) {
        json punctures = json::array();
        for (const auto& p : surf.punctures) punctures.push_back({{"id", p.id}, {"weight", p.weight}});
        json rec = {{"id", surf.id}, {"role", role_name(surf.role)}, {"genus", surf.genus}, {"punctures", punctures}};
        if (surf.role == Role::thick || surf.role == Role::thin)
            rec["direction"] = surf.direction;
        else
            rec["direction"] = nullptr;
        surfaces.push_back(std::move(rec));
    }
    json vpcs = json::array();
    for (const auto& v : s.vpcs) {
        vpcs.push_back({{"id", v.id},
                        {"positive", v.positive},
                        {"negatives", v.negatives},
                        {"tangle", tangle_to_json(v.tangle)}});
    }
    return {{"surfaces", surfaces},
            {"vpcs", vpcs},
            {"flags", {{"everySphereSeparates", s.flags.everySphereSeparates}, {"irreducible", s.flags.irreducible}}}};
}

PairState state_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("state must be a JSON object");
    PairState s;
    auto surfaces = get_field<json>(j, "surfaces", "state");
    auto vpcs = get_field<json>(j, "vpcs", "state");
    if (!surfaces.is_array() || !vpcs.is_array()) throw SchemaError("'surfaces' and 'vpcs' must be arrays");
    for (const auto& js : surfaces) {
        Surface surf;
        surf.id = get_field<std::string>(js, "id", "surface");
        surf.role = role_from_name(get_field<std::string>(js, "role", "surface"));
        surf.genus = get_field<int>(js, "genus", "surface");
        if (js.contains("punctures")) {
            if (!js["punctures"].is_array()) throw SchemaError("surface punctures must be an array");
            for (const auto& jp : js["punctures"])
                surf.punctures.push_back({get_field<std::string>(jp, "id", "puncture"),
                                          get_field<int>(jp, "weight", "puncture")});
        }
        if (js.contains("direction") && !js["direction"].is_null())
            surf.direction = get_field<std::string>(js, "direction", "surface");
        s.surfaces.push_back(std::move(surf));
    }
    for (const auto& jv : vpcs) {
        Vpc v;
        v.id = get_field<std::string>(jv, "id", "vpc");
        v.positive = get_field<std::string>(jv, "positive", "vpc");
        if (jv.contains("negatives")) v.negatives = get_field<std::vector<std::string>>(jv, "negatives", "vpc");
        if (jv.contains("tangle")) v.tangle = tangle_from_json(jv["tangle"]);
        s.vpcs.push_back(std::move(v));
    }
    if (j.contains("flags")) {
        const json& f = j["flags"];
        if (f.contains("everySphereSeparates"))
            s.flags.everySphereSeparates = get_field<bool>(f, "everySphereSeparates", "flags");
        if (f.contains("irreducible")) s.flags.irreducible = get_field<bool>(f, "irreducible", "flags");
    }
    return s;
}

json tangle_to_json(const Tangle& t) {
    return {{"bridge", arcs_to_json(t.bridge)},
            {"vertical", arcs_to_json(t.vertical)},
            {"ghost", arcs_to_json(t.ghost)},
            {"coreLoops", t.coreLoops}};
}

Tangle tangle_from_json(const json& t) {
    if (!t.is_object()) throw SchemaError("tangle must be an object");
    Tangle out;
    out.bridge = arcs_from_json(t.value("bridge", json()), "bridge arcs");
    out.vertical = arcs_from_json(t.value("vertical", json()), "vertical arcs");
    out.ghost = arcs_from_json(t.value("ghost", json()), "ghost arcs");
    if (t.contains("coreLoops")) out.coreLoops = get_field<int>(t, "coreLoops", "tangle");
    return out;
}

namespace {

template <typename T>
T optional_field(const json& j, const char* key, T fallback, const char* what) {
    if (!j.contains(key) || j.at(key).is_null()) return fallback;
    return get_field<T>(j, key, what);
}

std::vector<std::string> strings(const json& j, const char* key, const char* what) {
    return optional_field<std::vector<std::string>>(j, key, {}, what);
}

}  // namespace

json disc_to_json(const DiscSpec& d) {
    json out = {{"vpc", d.vpc}, {"p", d.p}, {"scarWeight", d.scarWeight}, {"separating", d.separating}};
    if (d.arc) out["arc"] = json::array({d.arc->first, d.arc->second});
    if (d.separating)
        out["split"] = {{"genus", d.split.genus},
                        {"punctures", d.split.punctures},
                        {"negatives", d.split.negatives},
                        {"coreLoops", d.split.coreLoops}};
    if (!d.within.empty()) out["within"] = d.within;
    if (!d.outcome.empty()) {
        json o = json::object();
        for (const auto& [id, t] : d.outcome) o[id] = tangle_to_json(t);
        out["outcome"] = o;
    }
    return out;
}

DiscSpec disc_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("disc must be an object");
    DiscSpec d;
    d.vpc = get_field<std::string>(j, "vpc", "disc");
    d.p = optional_field<int>(j, "p", 0, "disc");
    d.scarWeight = optional_field<int>(j, "scarWeight", 1, "disc");
    d.separating = optional_field<bool>(j, "separating", false, "disc");
    if (j.contains("arc") && !j["arc"].is_null()) {
        auto arcs = arcs_from_json(json::array({j["arc"]}), "disc arc");
        d.arc = arcs.front();
    }
    if (j.contains("split")) {
        const json& sp = j["split"];
        d.split.genus = optional_field<int>(sp, "genus", 0, "split");
        d.split.punctures = strings(sp, "punctures", "split");
        d.split.negatives = strings(sp, "negatives", "split");
        d.split.coreLoops = optional_field<int>(sp, "coreLoops", 0, "split");
    }
    d.within = optional_field<std::string>(j, "within", "", "disc");
    if (j.contains("outcome")) {
        if (!j["outcome"].is_object()) throw SchemaError("disc outcome must be an object");
        for (const auto& [id, t] : j["outcome"].items()) d.outcome[id] = tangle_from_json(t);
    }
    return d;
}

json crush_spec_to_json(const CrushSpec& c) {
    return {{"vpc", c.vpc}, {"d1", c.d1}, {"d2", c.d2}, {"pi1", c.pi1},
            {"pi2", c.pi2}, {"inside", c.inside}, {"omega", c.omega}};
}

CrushSpec crush_spec_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("crush spec must be an object");
    CrushSpec c;
    c.vpc = get_field<std::string>(j, "vpc", "crush spec");
    c.d1 = strings(j, "d1", "crush spec");
    c.d2 = strings(j, "d2", "crush spec");
    c.pi1 = strings(j, "pi1", "crush spec");
    c.pi2 = strings(j, "pi2", "crush spec");
    c.inside = strings(j, "inside", "crush spec");
    c.omega = get_field<int>(j, "omega", "crush spec");
    return c;
}

json move_to_json(const MoveOp& op) {
    json out = {{"op", op.op}};
    if (op.op == "consolidate") {
        out["thick"] = op.thick;
        out["thin"] = op.thin;
    } else if (op.op == "untelescope" || op.op == "elementary") {
        const auto& u = op.untelescoping;
        out["thick"] = u.thick;
        out["discs"] = {{"plus", disc_to_json(u.plus)}, {"minus", disc_to_json(u.minus)}};
        if (u.joint) out["joint"] = {{"genus", u.joint->genus}, {"punctures", u.joint->punctures}};
    } else if (op.op == "amalgamate") {
        out["vpcs"] = json::array({op.vpc1, op.vpc2});
    } else if (op.op == "crush") {
        out["spec"] = crush_spec_to_json(op.crush);
    }
    return out;
}

MoveOp move_from_json(const json& j) {
    MoveOp op;
    op.op = get_field<std::string>(j, "op", "move");
    if (op.op == "consolidate") {
        op.thick = get_field<std::string>(j, "thick", "consolidate move");
        op.thin = get_field<std::string>(j, "thin", "consolidate move");
    } else if (op.op == "untelescope" || op.op == "elementary") {
        auto& u = op.untelescoping;
        u.thick = get_field<std::string>(j, "thick", "untelescope move");
        auto discs = get_field<json>(j, "discs", "untelescope move");
        u.plus = disc_from_json(get_field<json>(discs, "plus", "discs"));
        u.minus = disc_from_json(get_field<json>(discs, "minus", "discs"));
        if (j.contains("joint") && !j["joint"].is_null())
            u.joint = JointSplit{optional_field<int>(j["joint"], "genus", 0, "joint"), strings(j["joint"], "punctures", "joint")};
    } else if (op.op == "amalgamate") {
        auto ids = get_field<std::vector<std::string>>(j, "vpcs", "amalgamate move");
        if (ids.size() != 2) throw SchemaError("amalgamate move needs exactly two VPC ids");
        op.vpc1 = ids[0];
        op.vpc2 = ids[1];
    } else if (op.op == "crush") {
        op.crush = crush_spec_from_json(get_field<json>(j, "spec", "crush move"));
    } else {
        throw SchemaError("unknown move '" + op.op + "'");
    }
    return op;
}

json script_to_json(const MoveScript& script) {
    json out = json::array();
    for (const auto& op : script) out.push_back(move_to_json(op));
    return out;
}

MoveScript script_from_json(const json& j) {
    const json& list = j.is_object() ? get_field<json>(j, "moves", "script") : j;
    if (!list.is_array()) throw SchemaError("a move script is an array of moves");
    MoveScript out;
    for (const auto& m : list) out.push_back(move_from_json(m));
    return out;
}

json trace_record_to_json(const TraceRecord& r) {
    return {{"step", r.step}, {"op", r.op}, {"complexity", r.complexity.entries}, {"bundle", bundle_to_json(r.bundle)}};
}

json word_to_json(const AnnulusWord& w) {
    json annuli = json::array();
    for (const auto& a : w.annuli) {
        json r = {{"type", annulus_type_name(a.type)}, {"levels", json::array({a.levelIn, a.levelOut})}};
        if (a.side != BridgeSide::none) r["side"] = bridge_side_name(a.side);
        json nest = json::object();
        if (!a.nestIn.empty()) nest["in"] = a.nestIn;
        if (!a.nestOut.empty()) nest["out"] = a.nestOut;
        if (!nest.empty()) r["nest"] = nest;
        if (!a.vpc.empty()) r["vpc"] = a.vpc;
        if (a.insulated) r["insulated"] = true;
        if (a.bridgeDisc) r["bridgeDisc"] = true;
        annuli.push_back(r);
    }
    json forests = json::object();
    for (const auto& [level, f] : w.forests) {
        json jf = json::object();
        for (const auto& [tok, parent] : f) jf[tok] = parent.empty() ? json(nullptr) : json(parent);
        forests[level] = jf;
    }
    json out = {{"annuli", annuli}, {"forests", forests}};
    if (!w.thick.empty()) out["thick"] = w.thick;
    return out;
}

AnnulusWord word_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("a word must be an object");
    AnnulusWord w;
    auto annuli = get_field<json>(j, "annuli", "word");
    if (!annuli.is_array()) throw SchemaError("word annuli must be an array");
    for (const auto& r : annuli) {
        if (!r.is_object()) throw SchemaError("annulus must be an object");
        AnnulusRec a;
        a.type = annulus_type_from_name(get_field<std::string>(r, "type", "annulus"));
        a.side = bridge_side_from_name(optional_field<std::string>(r, "side", "none", "annulus"));
        auto levels = get_field<std::vector<std::string>>(r, "levels", "annulus");
        if (levels.size() != 2) throw SchemaError("annulus levels must be a pair");
        a.levelIn = levels[0];
        a.levelOut = levels[1];
        if (r.contains("nest")) {
            const json& nest = r["nest"];
            if (!nest.is_object()) throw SchemaError("annulus nest must be an object");
            a.nestIn = optional_field<std::string>(nest, "in", "", "nest");
            a.nestOut = optional_field<std::string>(nest, "out", "", "nest");
        }
        a.vpc = optional_field<std::string>(r, "vpc", "", "annulus");
        a.insulated = optional_field<bool>(r, "insulated", false, "annulus");
        a.bridgeDisc = optional_field<bool>(r, "bridgeDisc", false, "annulus");
        w.annuli.push_back(std::move(a));
    }
    if (j.contains("forests")) {
        if (!j["forests"].is_object()) throw SchemaError("word forests must be an object");
        for (const auto& [level, jf] : j["forests"].items()) {
            if (!jf.is_object()) throw SchemaError("forest of " + level + " must be an object");
            auto& f = w.forests[level];
            for (const auto& [tok, parent] : jf.items()) {
                if (!parent.is_null() && !parent.is_string()) throw SchemaError("forest parent must be a token or null");
                f[tok] = parent.is_null() ? "" : parent.get<std::string>();
            }
        }
    }
    w.thick = strings(j, "thick", "word");
    return w;
}

json bundle_to_json(const InvariantBundle& b) {
    json netxm = json::object();
    for (const auto& [m, x] : b.netx_m) netxm[std::to_string(m)] = half_to_json(x);
    return {{"netchi", half_to_json(b.netchi)},
            {"netg", half_to_json(b.netg)},
            {"netw", half_to_json(b.netw)},
            {"netx", half_to_json(b.netx)},
            {"netx_m", netxm}};
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

PairState read_state_file(const std::string& path) { return state_from_json(read_json_file(path)); }

std::string state_text(const PairState& s) { return state_to_json(s).dump(); }

}  // namespace bridgecalc
