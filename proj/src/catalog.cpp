#include "bridgecalc/catalog.hpp"

#include <stdexcept>

namespace bridgecalc {

namespace {

Surface thick(std::string id, int genus, std::string direction) {
    Surface s;
    s.id = std::move(id);
    s.role = Role::thick;
    s.genus = genus;
    s.direction = std::move(direction);
    return s;
}

std::string pid(const std::string& surface, int i) { return surface + "." + std::to_string(i); }

}  // namespace

PairState bridge_sphere(int bridges, const std::vector<int>& weights) {
    PairState s;
    Surface h = thick("H", 0, "A");
    Vpc a{"A", "H", {}, {}}, b{"B", "H", {}, {}};
    for (int i = 0; i < bridges; ++i) {
        int w = i < static_cast<int>(weights.size()) ? weights[i] : 1;
        std::string p = pid("H", 2 * i + 1), q = pid("H", 2 * i + 2);
        h.punctures.push_back({p, w});
        h.punctures.push_back({q, w});
        a.tangle.bridge.push_back({p, q});
        b.tangle.bridge.push_back({p, q});
    }
    s.surfaces.push_back(std::move(h));
    s.vpcs = {a, b};
    return s;
}

PairState unknot_1bridge(int weight) { return bridge_sphere(1, {weight}); }

PairState two_bridge_unknot() {
    PairState s = bridge_sphere(2);
    s.vpcs[0].tangle.bridge = {{"H.1", "H.3"}, {"H.2", "H.4"}};
    return s;
}

PairState empty_surface(int genus) {
    PairState s;
    s.surfaces.push_back(thick("H", genus, "A"));
    s.vpcs = {{"A", "H", {}, {}}, {"B", "H", {}, {}}};
    return s;
}

PairState handlebody_with_core_loop(int genus) {
    PairState s = empty_surface(genus);
    s.vpcs[1].tangle.coreLoops = 1;
    return s;
}

PairState torus_with_core_loop() { return handlebody_with_core_loop(1); }

PairState torus_1bridge(int weight) {
    PairState s = empty_surface(1);
    s.surfaces[0].punctures = {{"H.1", weight}, {"H.2", weight}};
    for (auto& v : s.vpcs) v.tangle.bridge = {{"H.1", "H.2"}};
    return s;
}

PairState twin_handlebody_composite(int t) {
    PairState s;
    Surface h1 = thick("H1", t + 1, "C1");
    Surface h2 = thick("H2", t + 1, "X2");
    Surface sphere;
    sphere.id = "S";
    sphere.role = Role::thin;
    sphere.punctures = {{"S.1", 1}, {"S.2", 1}};
    sphere.direction = "C2";
    s.surfaces = {h1, sphere, h2};
    Vpc x1{"X1", "H1", {}, {}};
    Vpc c1{"C1", "H1", {"S"}, {}};
    c1.tangle.ghost = {{"S.1", "S.2"}};
    Vpc c2{"C2", "H2", {"S"}, {}};
    c2.tangle.ghost = {{"S.1", "S.2"}};
    Vpc x2{"X2", "H2", {}, {}};
    s.vpcs = {x1, c1, c2, x2};
    return s;
}

PairState theta_graph(const std::vector<int>& weights) {
    if (weights.size() < 3) throw std::invalid_argument("theta graph needs at least three edges");
    PairState s;
    Surface h = thick("H", 0, "A");
    Surface v1, v2;
    v1.id = "v1";
    v2.id = "v2";
    v1.role = v2.role = Role::vertex;
    Vpc a{"A", "H", {"v1"}, {}}, b{"B", "H", {"v2"}, {}};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        h.punctures.push_back({pid("H", n), weights[i]});
        v1.punctures.push_back({pid("v1", n), weights[i]});
        v2.punctures.push_back({pid("v2", n), weights[i]});
        a.tangle.vertical.push_back({pid("H", n), pid("v1", n)});
        b.tangle.vertical.push_back({pid("H", n), pid("v2", n)});
    }
    s.surfaces = {h, v1, v2};
    s.vpcs = {a, b};
    return s;
}

PairState torus_stack(int k, int punctures, bool coreLoop) {
    if (k < 1 || punctures % 2 != 0) throw std::invalid_argument("torus stack needs k >= 1 and an even puncture count");
    PairState s;
    auto hid = [](int i) { return "H" + std::to_string(i); };
    auto fid = [](int i) { return "F" + std::to_string(i); };
    auto yid = [](int i) { return "Y" + std::to_string(i); };
    auto zid = [](int i) { return "Z" + std::to_string(i); };
    auto punct = [&](const std::string& sid) {
        std::vector<Puncture> ps;
        for (int j = 1; j <= punctures; ++j) ps.push_back({pid(sid, j), 1});
        return ps;
    };
    auto ends = [&](const std::string& sid) {
        std::vector<Arc> arcs;
        for (int j = 1; j + 1 <= punctures; j += 2) arcs.push_back({pid(sid, j), pid(sid, j + 1)});
        return arcs;
    };

    Vpc bottom{"X0", hid(1), {}, {}};
    bottom.tangle.bridge = ends(hid(1));
    if (coreLoop) bottom.tangle.coreLoops = 1;
    s.vpcs.push_back(bottom);
    for (int i = 1; i <= k; ++i) {
        std::string up = i < k ? yid(i) : "X" + std::to_string(k);
        Surface h = thick(hid(i), 1, up);
        h.punctures = punct(hid(i));
        s.surfaces.push_back(h);
        if (i == k) break;
        Surface f;
        f.id = fid(i);
        f.role = Role::thin;
        f.genus = 1;
        f.punctures = punct(fid(i));
        f.direction = zid(i);
        s.surfaces.push_back(f);
        Vpc y{yid(i), hid(i), {fid(i)}, {}};
        Vpc z{zid(i), hid(i + 1), {fid(i)}, {}};
        for (int j = 1; j <= punctures; ++j) {
            y.tangle.vertical.push_back({pid(hid(i), j), pid(fid(i), j)});
            z.tangle.vertical.push_back({pid(hid(i + 1), j), pid(fid(i), j)});
        }
        s.vpcs.push_back(y);
        s.vpcs.push_back(z);
    }
    Vpc top{"X" + std::to_string(k), hid(k), {}, {}};
    top.tangle.bridge = ends(hid(k));
    s.vpcs.push_back(top);
    return s;
}

}  // namespace bridgecalc
