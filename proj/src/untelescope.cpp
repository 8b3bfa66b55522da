#include <algorithm>
#include <set>

#include "bridgecalc/classify.hpp"
#include "bridgecalc/complexity.hpp"
#include "bridgecalc/moves.hpp"
#include "move_checks.hpp"
#include "strands.hpp"

namespace bridgecalc {

namespace {

struct Piece {
    int genus = 0;
    std::set<std::string> punctures;
};

// How the two disc boundaries cut the thick surface. Curve c+ meets pieces plusA and plusB
// (equal for a curve inside one piece); side "a" of a separating curve is the one holding plusA.
struct Layout {
    std::vector<Piece> pieces;
    int plusA = 0, plusB = 0, minusA = 0, minusB = 0;
};

std::set<std::string> all_punctures(const Surface& h) {
    std::set<std::string> out;
    for (const auto& p : h.punctures) out.insert(p.id);
    return out;
}

std::set<std::string> minus_set(const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

Piece side_piece(const Surface& h, int genus, const std::vector<std::string>& punctures, const std::string& what) {
    Piece p{genus, {punctures.begin(), punctures.end()}};
    if (p.punctures.size() != punctures.size()) throw MoveRejected(what + " lists a puncture twice");
    for (const auto& id : p.punctures)
        if (!h.has_puncture(id)) throw MoveRejected(what + " names '" + id + "', which is not on '" + h.id + "'");
    if (genus < 0 || genus > h.genus) throw MoveRejected(what + " has genus out of range");
    return p;
}

Piece complement(const Surface& h, const Piece& a) {
    return {h.genus - a.genus, minus_set(all_punctures(h), a.punctures)};
}

void require_nontrivial(const Piece& p, const std::string& what) {
    if (p.genus == 0 && p.punctures.empty()) throw MoveRejected(what + " cuts off a disc");
}

Layout one_separating(const Surface& h, const DiscSpec& sep, const DiscSpec& other, bool sepIsPlus) {
    Piece a = side_piece(h, sep.split.genus, sep.split.punctures, "split");
    Piece b = complement(h, a);
    require_nontrivial(a, "split");
    require_nontrivial(b, "split");
    Layout l;
    l.pieces = {a, b};
    int w;
    if (other.within == "a")
        w = 0;
    else if (other.within == "b")
        w = 1;
    else
        throw MoveRejected("a non-separating disc next to a separating one needs within = a or b");
    if (--l.pieces[w].genus < 0) throw MoveRejected("side " + other.within + " has no genus for a non-separating curve");
    if (sepIsPlus) {
        l.plusA = 0, l.plusB = 1, l.minusA = l.minusB = w;
    } else {
        l.minusA = 0, l.minusB = 1, l.plusA = l.plusB = w;
    }
    return l;
}

Layout both_separating(const Surface& h, const DiscSpec& plus, const DiscSpec& minus) {
    Piece pa = side_piece(h, plus.split.genus, plus.split.punctures, "plus split");
    Piece pb = complement(h, pa);
    Piece ma = side_piece(h, minus.split.genus, minus.split.punctures, "minus split");
    Piece mb = complement(h, ma);
    for (const auto* p : {&pa, &pb, &ma, &mb}) require_nontrivial(*p, "split");
    // (plus end is side a, minus end is side a)
    const std::pair<bool, bool> order[] = {{false, true}, {false, false}, {true, true}, {true, false}};
    for (auto [plusEndA, minusEndA] : order) {
        const Piece& endPlus = plusEndA ? pa : pb;
        const Piece& endMinus = minusEndA ? ma : mb;
        std::set<std::string> both;
        std::set_intersection(endPlus.punctures.begin(), endPlus.punctures.end(), endMinus.punctures.begin(),
                              endMinus.punctures.end(), std::inserter(both, both.end()));
        int midGenus = h.genus - endPlus.genus - endMinus.genus;
        if (!both.empty() || midGenus < 0) continue;
        Piece mid{midGenus, minus_set(minus_set(all_punctures(h), endPlus.punctures), endMinus.punctures)};
        Layout l;
        l.pieces = {endPlus, mid, endMinus};
        l.plusA = plusEndA ? 0 : 1;
        l.plusB = 1 - l.plusA;
        l.minusA = minusEndA ? 2 : 1;
        l.minusB = 3 - l.minusA;
        return l;
    }
    throw MoveRejected("the two separating splits cannot be nested");
}

Layout make_layout(const Surface& h, const Untelescoping& u) {
    const auto& plus = u.plus;
    const auto& minus = u.minus;
    if (plus.separating && minus.separating) {
        if (u.joint) throw MoveRejected("a joint split needs two non-separating discs");
        return both_separating(h, plus, minus);
    }
    if (plus.separating || minus.separating) {
        if (u.joint) throw MoveRejected("a joint split needs two non-separating discs");
        return plus.separating ? one_separating(h, plus, minus, true) : one_separating(h, minus, plus, false);
    }
    Layout l;
    if (u.joint) {
        Piece a = side_piece(h, u.joint->genus, u.joint->punctures, "joint split");
        Piece b = complement(h, a);
        if (--b.genus < 0) throw MoveRejected("joint split leaves no genus for the two curves");
        l.pieces = {a, b};
        l.plusA = l.minusA = 0;
        l.plusB = l.minusB = 1;
        return l;
    }
    if (h.genus < 2) throw MoveRejected("two non-separating discs on one side each need genus at least 2");
    l.pieces = {Piece{h.genus - 2, all_punctures(h)}};
    return l;
}

// Components of the pieces glued along one curve, listed so that the component of `first` comes first.
std::vector<std::vector<int>> glue(const Layout& l, int a, int b, int first) {
    std::vector<int> comp(l.pieces.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
    int lo = std::min(comp[a], comp[b]);
    comp[a] = comp[b] = lo;
    std::vector<std::vector<int>> out;
    std::vector<int> seen;
    auto add = [&](int root) {
        if (std::find(seen.begin(), seen.end(), root) != seen.end()) return;
        seen.push_back(root);
        std::vector<int> members;
        for (std::size_t i = 0; i < comp.size(); ++i)
            if (comp[i] == root) members.push_back(static_cast<int>(i));
        out.push_back(members);
    };
    add(comp[first]);
    for (int c : comp) add(c);
    return out;
}

int component_of(const std::vector<std::vector<int>>& comps, int piece) {
    for (std::size_t k = 0; k < comps.size(); ++k)
        if (std::find(comps[k].begin(), comps[k].end(), piece) != comps[k].end()) return static_cast<int>(k);
    return -1;
}

std::string numbered(const std::string& base, std::size_t k) {
    return k == 0 ? base : base + std::to_string(k + 1);
}

struct SideBuild {
    const DiscSpec* disc = nullptr;
    const Vpc* old = nullptr;
    int a = 0, b = 0;                    // pieces met by this side's curve
    std::vector<std::vector<int>> comps;  // pieces of each new thick component on this side
    std::string suffix;
    std::string scar1, scar2;    // on the new thick surfaces
    std::string fscar1, fscar2;  // on the thin surfaces
    std::vector<std::string> thickIds, yIds, zIds;

    bool holds(std::size_t k, int piece) const {
        return std::find(comps[k].begin(), comps[k].end(), piece) != comps[k].end();
    }
};

struct Untelescoped {
    PairState state;
    std::set<std::string> thick, thin, zs;
};

SideBuild make_side(const Surface& h, const PairState& s, const DiscSpec& d, const Layout& l, bool plus) {
    SideBuild sb;
    sb.disc = &d;
    sb.old = s.find_vpc(d.vpc);
    sb.a = plus ? l.plusA : l.minusA;
    sb.b = plus ? l.plusB : l.minusB;
    sb.comps = plus ? glue(l, l.minusA, l.minusB, l.plusA) : glue(l, l.plusA, l.plusB, l.minusA);
    if (sb.comps.size() != (d.separating ? 2u : 1u)) throw IdentityFailure("untelescoping layout is inconsistent");
    sb.suffix = plus ? "u" : "d";
    std::string tag = plus ? ":p" : ":m";
    sb.scar1 = h.id + tag + "1";
    sb.scar2 = h.id + tag + "2";
    sb.fscar1 = sb.scar1 + "f";
    sb.fscar2 = sb.scar2 + "f";
    for (std::size_t k = 0; k < sb.comps.size(); ++k) {
        sb.thickIds.push_back(numbered(h.id + sb.suffix, k));
        sb.zIds.push_back(numbered(h.id + "~" + sb.suffix, k));
        sb.yIds.push_back(sb.comps.size() == 1 ? sb.old->id : sb.old->id + (k == 0 ? "a" : "b"));
    }
    return sb;
}

Surface thick_component(const Surface& h, const Layout& l, const SideBuild& sb, const SideBuild& other,
                        std::size_t k) {
    Surface t;
    t.id = sb.thickIds[k];
    t.role = Role::thick;
    for (int i : sb.comps[k]) t.genus += l.pieces[i].genus;
    // the other curve lies inside one piece of this component
    if (other.a == other.b && sb.holds(k, other.a)) ++t.genus;
    for (const auto& p : h.punctures)
        for (int i : sb.comps[k])
            if (l.pieces[i].punctures.count(p.id)) t.punctures.push_back({p.id + sb.suffix, p.weight});
    if (sb.disc->p == 1) {
        if (sb.holds(k, sb.a)) t.punctures.push_back({sb.scar1, sb.disc->scarWeight});
        if (sb.holds(k, sb.b)) t.punctures.push_back({sb.scar2, sb.disc->scarWeight});
    }
    return t;
}

Surface thin_piece(const Surface& h, const Layout& l, const SideBuild& plus, const SideBuild& minus, int i) {
    Surface f;
    f.id = numbered(h.id + "f", i);
    f.role = Role::thin;
    f.genus = l.pieces[i].genus;
    for (const auto& p : h.punctures)
        if (l.pieces[i].punctures.count(p.id)) f.punctures.push_back(p);
    for (const auto* sb : {&plus, &minus}) {
        if (sb->disc->p != 1) continue;
        if (sb->a == i) f.punctures.push_back({sb->fscar1, sb->disc->scarWeight});
        if (sb->b == i) f.punctures.push_back({sb->fscar2, sb->disc->scarWeight});
    }
    return f;
}

// The VPCs left after cutting the old VPC along its disc.
std::vector<Vpc> cut_side(const PairState& s, const Surface& h, const Layout& l, const SideBuild& sb,
                          const std::map<std::string, PunctureInfo>& idx) {
    const DiscSpec& d = *sb.disc;
    const Vpc& c = *sb.old;
    auto oldIdx = puncture_index(s);
    std::vector<Vpc> ys(sb.comps.size());
    for (std::size_t k = 0; k < ys.size(); ++k) {
        ys[k].id = sb.yIds[k];
        ys[k].positive = sb.thickIds[k];
    }
    const auto& splitNegs = d.split.negatives;
    auto inSplit = [&](const std::string& sid) {
        return std::find(splitNegs.begin(), splitNegs.end(), sid) != splitNegs.end();
    };
    if (d.separating) {
        for (const auto& n : splitNegs)
            if (!c.has_negative(n)) throw MoveRejected("split names '" + n + "', which does not bound '" + c.id + "'");
        if (d.split.coreLoops < 0 || d.split.coreLoops > c.tangle.coreLoops)
            throw MoveRejected("split core loop count is out of range");
        for (const auto& n : c.negatives) ys[inSplit(n) ? 0 : 1].negatives.push_back(n);
        ys[0].tangle.coreLoops = d.split.coreLoops;
        ys[1].tangle.coreLoops = c.tangle.coreLoops - d.split.coreLoops;
    } else {
        ys[0].negatives = c.negatives;
        ys[0].tangle.coreLoops = c.tangle.coreLoops;
    }

    std::set<std::string> sideA;
    for (int i : sb.comps[0]) sideA.insert(l.pieces[i].punctures.begin(), l.pieces[i].punctures.end());
    auto side_of = [&](const std::string& pid) -> int {
        if (!d.separating) return 0;
        if (h.has_puncture(pid)) return sideA.count(pid) ? 0 : 1;
        return inSplit(oldIdx.at(pid).surface) ? 0 : 1;
    };
    auto rename = [&](const std::string& pid) { return h.has_puncture(pid) ? pid + sb.suffix : pid; };

    bool cut = false;
    for (auto arc : all_arcs(c.tangle)) {
        if (d.p == 1 && !cut && (arc == *d.arc || arc == Arc{d.arc->second, d.arc->first})) {
            cut = true;
            auto [x, y] = *d.arc;
            if (oldIdx.at(x).weight != d.scarWeight)
                throw MoveRejected("scar weight does not match the weight of the cut arc");
            int sx = side_of(x), sy = side_of(y);
            std::string scarX = sb.scar1, scarY = sb.scar2;
            if (d.separating) {
                if (sx == sy) throw MoveRejected("the cut arc does not cross the separating disc");
                if (sx == 1) std::swap(scarX, scarY);
            }
            detail::place_arc(ys[sx], rename(x), scarX, idx);
            detail::place_arc(ys[sy], scarY, rename(y), idx);
            continue;
        }
        int sa = side_of(arc.first);
        if (sa != side_of(arc.second))
            throw MoveRejected("arc (" + arc.first + ", " + arc.second + ") crosses the separating disc");
        detail::place_arc(ys[sa], rename(arc.first), rename(arc.second), idx);
    }
    if (d.p == 1 && !cut) throw MoveRejected("the cut arc is not an arc of '" + c.id + "'");
    return ys;
}

std::vector<Vpc> product_side(const Surface& h, const Layout& l, const SideBuild& sb, const SideBuild& other,
                              const std::map<std::string, PunctureInfo>& idx) {
    std::vector<Vpc> zs(sb.comps.size());
    for (std::size_t k = 0; k < zs.size(); ++k) {
        Vpc& z = zs[k];
        z.id = sb.zIds[k];
        z.positive = sb.thickIds[k];
        for (int i : sb.comps[k]) z.negatives.push_back(numbered(h.id + "f", i));
        for (const auto& p : h.punctures)
            for (int i : sb.comps[k])
                if (l.pieces[i].punctures.count(p.id)) z.tangle.vertical.push_back({p.id + sb.suffix, p.id});
        if (sb.disc->p == 1) {
            if (sb.holds(k, sb.a)) z.tangle.vertical.push_back({sb.scar1, sb.fscar1});
            if (sb.holds(k, sb.b)) z.tangle.vertical.push_back({sb.scar2, sb.fscar2});
        }
        if (other.disc->p == 1 && sb.holds(k, other.a)) z.tangle.ghost.push_back({other.fscar1, other.fscar2});
        for (const auto& arc : all_arcs(z.tangle))
            if (!idx.count(arc.first) || !idx.count(arc.second))
                throw IdentityFailure("product region refers to a missing puncture");
    }
    return zs;
}

void check_disc(const DiscSpec& d, const std::vector<std::string>& adjacent) {
    if (std::find(adjacent.begin(), adjacent.end(), d.vpc) == adjacent.end())
        throw MoveRejected("disc VPC '" + d.vpc + "' is not next to the thick surface");
    if (d.p != 0 && d.p != 1) throw MoveRejected("a disc meets the graph at most once");
    if (d.p == 1 && !d.arc) throw MoveRejected("a cut disc needs the arc it meets");
    if (d.p == 0 && d.arc) throw MoveRejected("a compressing disc meets no arc");
    if (d.scarWeight < 1) throw MoveRejected("scar weight must be positive");
}

Untelescoped untelescope_impl(const PairState& s, const Untelescoping& u) {
    const Surface* hp = s.find_surface(u.thick);
    if (!hp || hp->role != Role::thick) throw MoveRejected("'" + u.thick + "' is not a thick surface");
    const Surface& h = *hp;
    auto adjacent = s.adjacent_vpcs(h.id);
    check_disc(u.plus, adjacent);
    check_disc(u.minus, adjacent);
    if (u.plus.vpc == u.minus.vpc) throw MoveRejected("the two discs must lie on opposite sides");

    Layout l = make_layout(h, u);
    SideBuild plus = make_side(h, s, u.plus, l, true);
    SideBuild minus = make_side(h, s, u.minus, l, false);

    Untelescoped res;
    PairState& out = res.state;
    out.flags = s.flags;
    std::vector<Surface> fresh;
    for (std::size_t k = 0; k < plus.comps.size(); ++k) fresh.push_back(thick_component(h, l, plus, minus, k));
    for (std::size_t i = 0; i < l.pieces.size(); ++i)
        fresh.push_back(thin_piece(h, l, plus, minus, static_cast<int>(i)));
    for (std::size_t k = 0; k < minus.comps.size(); ++k) fresh.push_back(thick_component(h, l, minus, plus, k));

    bool plusHead = h.direction == plus.old->id;
    for (auto& surf : fresh) {
        res.thick.insert(surf.id);
        for (std::size_t k = 0; k < plus.comps.size(); ++k)
            if (surf.id == plus.thickIds[k]) surf.direction = plusHead ? plus.yIds[k] : plus.zIds[k];
        for (std::size_t k = 0; k < minus.comps.size(); ++k)
            if (surf.id == minus.thickIds[k]) surf.direction = plusHead ? minus.zIds[k] : minus.yIds[k];
        if (surf.role == Role::thin) {
            res.thick.erase(surf.id);
            res.thin.insert(surf.id);
            int i = 0;
            while (numbered(h.id + "f", i) != surf.id) ++i;
            surf.direction = plusHead ? plus.zIds[component_of(plus.comps, i)]
                                      : minus.zIds[component_of(minus.comps, i)];
        }
        if (s.find_surface(surf.id)) throw MoveRejected("new surface id '" + surf.id + "' is already in use");
    }
    for (const auto& surf : s.surfaces) {
        if (surf.id != h.id) {
            out.surfaces.push_back(surf);
            continue;
        }
        out.surfaces.insert(out.surfaces.end(), fresh.begin(), fresh.end());
    }
    auto idx = puncture_index(out);

    std::vector<Vpc> made;
    for (auto& v : cut_side(s, h, l, plus, idx)) made.push_back(std::move(v));
    for (auto& v : product_side(h, l, plus, minus, idx)) made.push_back(std::move(v));
    for (auto& v : product_side(h, l, minus, plus, idx)) made.push_back(std::move(v));
    for (auto& v : cut_side(s, h, l, minus, idx)) made.push_back(std::move(v));
    std::set<std::string> madeIds;
    for (const auto& v : made) {
        if (!madeIds.insert(v.id).second) throw MoveRejected("new VPC id '" + v.id + "' is used twice");
        if (v.id != plus.old->id && v.id != minus.old->id && s.find_vpc(v.id))
            throw MoveRejected("new VPC id '" + v.id + "' is already in use");
    }
    for (const auto* d : {&u.plus, &u.minus})
        for (const auto& [id, tangle] : d->outcome) {
            auto it = std::find_if(made.begin(), made.end(), [&](const Vpc& v) { return v.id == id; });
            if (it == made.end()) throw MoveRejected("outcome names '" + id + "', which is not a new VPC");
            it->tangle = tangle;
        }
    res.zs.insert(plus.zIds.begin(), plus.zIds.end());
    res.zs.insert(minus.zIds.begin(), minus.zIds.end());

    for (const auto& v : s.vpcs) {
        if (v.id == plus.old->id)
            out.vpcs.insert(out.vpcs.end(), made.begin(), made.end());
        else if (v.id != minus.old->id)
            out.vpcs.push_back(v);
    }
    for (auto& surf : out.surfaces) {
        if (res.thick.count(surf.id) || res.thin.count(surf.id)) continue;
        for (const auto* sb : {&plus, &minus}) {
            if (surf.direction != sb->old->id || surf.role == Role::thick) continue;
            for (const auto& id : sb->yIds)
                if (out.vpc(id).has_negative(surf.id)) surf.direction = id;
        }
    }

    detail::require_move_valid(out, "untelescoping");
    detail::require_same_invariants(s, out, "untelescoping");
    if (compare_complexity(complexity(out), complexity(s)) >= 0)
        throw MoveRejected("untelescoping did not lower the complexity");
    return res;
}

}  // namespace

PairState untelescope(const PairState& s, const Untelescoping& u) { return untelescope_impl(s, u).state; }

ElementaryResult elementary_thinning(const PairState& s, const Untelescoping& u) {
    auto res = untelescope_impl(s, u);
    ElementaryResult out{std::move(res.state), 0};
    bool again = true;
    while (again) {
        again = false;
        for (const auto& z : res.zs) {
            const Vpc* v = out.state.find_vpc(z);
            if (!v || !res.thick.count(v->positive)) continue;
            auto cls = classify_vpc(out.state, z);
            if (cls.kind != VpcKind::product && cls.kind != VpcKind::punctured_product) continue;
            if (!res.thin.count(cls.partner)) continue;
            out.state = consolidate(out.state, v->positive, cls.partner);
            ++out.consolidations;
            again = true;
            break;
        }
    }
    int separating = (u.plus.separating ? 1 : 0) + (u.minus.separating ? 1 : 0);
    if (out.consolidations != separating)
        throw IdentityFailure("elementary thinning made " + std::to_string(out.consolidations) +
                              " consolidations, expected " + std::to_string(separating));
    return out;
}

}  // namespace bridgecalc
