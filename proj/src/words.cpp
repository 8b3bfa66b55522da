#include "bridgecalc/words.hpp"

#include <algorithm>
#include <set>

namespace bridgecalc {

std::string annulus_type_name(AnnulusType t) {
    switch (t) {
        case AnnulusType::BNN: return "BNN";
        case AnnulusType::BSS: return "BSS";
        case AnnulusType::BNS: return "BNS";
        case AnnulusType::VNN: return "VNN";
        case AnnulusType::VSS: return "VSS";
        case AnnulusType::VNS: return "VNS";
    }
    return "?";
}

AnnulusType annulus_type_from_name(const std::string& name) {
    for (auto t : {AnnulusType::BNN, AnnulusType::BSS, AnnulusType::BNS, AnnulusType::VNN, AnnulusType::VSS,
                   AnnulusType::VNS})
        if (annulus_type_name(t) == name) return t;
    throw SchemaError("unknown annulus type '" + name + "'");
}

std::string bridge_side_name(BridgeSide s) {
    switch (s) {
        case BridgeSide::none: return "none";
        case BridgeSide::curved: return "curved";
        case BridgeSide::nested: return "nested";
    }
    return "?";
}

BridgeSide bridge_side_from_name(const std::string& name) {
    if (name == "none" || name.empty()) return BridgeSide::none;
    if (name == "curved") return BridgeSide::curved;
    if (name == "nested") return BridgeSide::nested;
    throw SchemaError("unknown bridge side '" + name + "'");
}

bool is_bridge(AnnulusType t) {
    return t == AnnulusType::BNN || t == AnnulusType::BSS || t == AnnulusType::BNS;
}

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

// Curve k sits between annulus k-1 and annulus k.
const std::string& curve_level(const AnnulusWord& w, int k) {
    return w.annuli[wrap(k, static_cast<int>(w.annuli.size()))].levelIn;
}

std::string curve_token(const AnnulusWord& w, int k) {
    int n = static_cast<int>(w.annuli.size());
    const auto& here = w.annuli[wrap(k, n)];
    if (!here.nestIn.empty()) return here.nestIn;
    return w.annuli[wrap(k - 1, n)].nestOut;
}

const NestForest* forest_of(const AnnulusWord& w, const std::string& level) {
    auto it = w.forests.find(level);
    return it == w.forests.end() ? nullptr : &it->second;
}

// a is b or an ancestor of b.
bool contains(const NestForest* f, const std::string& a, const std::string& b) {
    if (!f || a.empty() || b.empty()) return false;
    std::string cur = b;
    for (std::size_t steps = 0; steps <= f->size(); ++steps) {
        if (cur == a) return true;
        auto it = f->find(cur);
        if (it == f->end() || it->second.empty()) return false;
        cur = it->second;
    }
    return false;
}

bool comparable(const NestForest* f, const std::string& a, const std::string& b) {
    return contains(f, a, b) || contains(f, b, a);
}

struct Run {
    int from = 0, to = 0, length = 0;
};

std::vector<int> bridge_indices(const AnnulusWord& w) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(w.annuli.size()); ++i)
        if (is_bridge(w.annuli[i].type)) out.push_back(i);
    return out;
}

std::vector<Run> vertical_runs(const AnnulusWord& w) {
    int n = static_cast<int>(w.annuli.size());
    auto b = bridge_indices(w);
    std::vector<Run> out;
    int m = static_cast<int>(b.size());
    for (int j = 0; j < m; ++j) {
        int from = b[j], to = b[(j + 1) % m];
        int len = m == 1 ? n - 1 : wrap(to - from - 1, n);
        out.push_back({from, to, len});
    }
    return out;
}

// Thick/thin by level, or empty when the kinds conflict.
std::map<std::string, bool> level_kinds(const AnnulusWord& w, std::vector<Violation>* out) {
    std::map<std::string, bool> kind;
    bool conflict = false;
    auto set = [&](const std::string& level, bool thick) {
        auto [it, fresh] = kind.emplace(level, thick);
        if (!fresh && it->second != thick) conflict = true;
        return fresh;
    };
    for (const auto& a : w.annuli)
        if (is_bridge(a.type)) {
            set(a.levelIn, true);
            set(a.levelOut, true);
        }
    for (const auto& t : w.thick) set(t, true);
    while (true) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& a : w.annuli) {
                if (is_bridge(a.type)) continue;
                auto in = kind.find(a.levelIn), outIt = kind.find(a.levelOut);
                if (in != kind.end() && outIt != kind.end()) {
                    if (in->second == outIt->second) conflict = true;
                } else if (in != kind.end()) {
                    changed |= set(a.levelOut, !in->second);
                } else if (outIt != kind.end()) {
                    changed |= set(a.levelIn, !outIt->second);
                }
            }
        }
        std::string unresolved;
        for (const auto& a : w.annuli)
            for (const auto* l : {&a.levelIn, &a.levelOut})
                if (!kind.count(*l) && (unresolved.empty() || *l < unresolved)) unresolved = *l;
        if (unresolved.empty()) break;
        set(unresolved, true);
    }
    if (conflict) {
        if (out) out->push_back({"word-level-kind", "a vertical annulus must join a thick level to a thin level"});
        return {};
    }
    return kind;
}

// 'S', 'N', or '?' for an undetermined end of a BNS annulus.
std::vector<std::pair<char, char>> end_labels(const AnnulusWord& w, const std::map<std::string, bool>& kinds) {
    std::vector<std::pair<char, char>> lab;
    for (const auto& a : w.annuli) {
        switch (a.type) {
            case AnnulusType::BNN:
            case AnnulusType::VNN: lab.push_back({'N', 'N'}); break;
            case AnnulusType::BSS:
            case AnnulusType::VSS: lab.push_back({'S', 'S'}); break;
            case AnnulusType::VNS: {
                bool inThick = kinds.count(a.levelIn) ? kinds.at(a.levelIn) : true;
                lab.push_back(inThick ? std::pair{'N', 'S'} : std::pair{'S', 'N'});
                break;
            }
            case AnnulusType::BNS:
                if (!a.nestIn.empty() && a.nestOut.empty()) lab.push_back({'S', 'N'});
                else if (a.nestIn.empty() && !a.nestOut.empty()) lab.push_back({'N', 'S'});
                else lab.push_back({'?', '?'});
                break;
        }
    }
    return lab;
}

bool resolve_labels(std::vector<std::pair<char, char>>& lab) {
    int n = static_cast<int>(lab.size());
    auto flip = [](char c) { return c == 'S' ? 'N' : 'S'; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            auto& cur = lab[i];
            if (cur.first != '?') continue;
            char prev = lab[wrap(i - 1, n)].second, next = lab[wrap(i + 1, n)].first;
            if (prev != '?') cur = {prev, flip(prev)};
            else if (next != '?') cur = {flip(next), next};
            else continue;
            changed = true;
        }
        if (!changed)
            for (auto& l : lab)
                if (l.first == '?') {
                    l = {'N', 'S'};
                    changed = true;
                    break;
                }
    }
    for (int i = 0; i < n; ++i)
        if (lab[i].second != lab[wrap(i + 1, n)].first) return false;
    return true;
}

std::vector<std::string> effective_vpcs(const AnnulusWord& w) {
    int n = static_cast<int>(w.annuli.size());
    std::map<std::string, std::vector<int>> curvesOn;
    for (int k = 0; k < n; ++k) curvesOn[curve_level(w, k)].push_back(k);
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) {
        const auto& a = w.annuli[i];
        if (!a.vpc.empty()) {
            out[i] = a.vpc;
        } else if (is_bridge(a.type)) {
            const auto& ks = curvesOn[a.levelIn];
            auto pos = std::find(ks.begin(), ks.end(), i) - ks.begin();
            out[i] = a.levelIn + ":" + std::to_string(pos % 2);
        } else {
            out[i] = std::min(a.levelIn, a.levelOut) + "|" + std::max(a.levelIn, a.levelOut);
        }
    }
    return out;
}

std::string pair_types(const AnnulusWord& w, const MatchedPair& p) {
    return annulus_type_name(w.annuli[p.curved].type) + "/" + annulus_type_name(w.annuli[p.nested].type);
}

}  // namespace

ValidationReport validate_word(const AnnulusWord& w) {
    ValidationReport rep;
    auto& v = rep.violations;
    int n = static_cast<int>(w.annuli.size());
    if (n == 0) {
        v.push_back({"word-empty", "a word needs at least one annulus"});
        return rep;
    }
    for (int i = 0; i < n; ++i) {
        const auto& a = w.annuli[i];
        std::string at = "annulus " + std::to_string(i);
        if (a.levelIn.empty() || a.levelOut.empty()) v.push_back({"word-level", at + " is missing a level"});
        if (is_bridge(a.type) == (a.side == BridgeSide::none))
            v.push_back({"word-side", at + ": curved/nested is set exactly on bridge annuli"});
        if (is_bridge(a.type) && a.levelIn != a.levelOut)
            v.push_back({"word-bridge-level", at + " is a bridge annulus with ends on two levels"});
        if (!is_bridge(a.type) && a.levelIn == a.levelOut)
            v.push_back({"word-vertical-level", at + " is a vertical annulus with both ends on one level"});
        if (a.levelOut != w.annuli[wrap(i + 1, n)].levelIn)
            v.push_back({"word-adjacency", at + " and its successor do not share a level"});
    }
    if (!rep.ok()) return rep;

    for (const auto& r : vertical_runs(w)) {
        if (r.length == 0) continue;
        std::string at = "vertical run after annulus " + std::to_string(r.from);
        if (r.from != r.to && r.length % 2 != 0) v.push_back({"word-run-parity", at + " has odd length"});
        std::set<std::string> seen{w.annuli[r.from].levelOut};
        for (int t = 1; t <= r.length; ++t)
            if (!seen.insert(w.annuli[wrap(r.from + t, n)].levelOut).second) {
                v.push_back({"word-run-revisit", at + " crosses a level twice"});
                break;
            }
    }

    auto kinds = level_kinds(w, &v);
    if (kinds.empty()) return rep;

    for (const auto& [level, f] : w.forests)
        for (const auto& [tok, parent] : f) {
            if (!parent.empty() && !f.count(parent))
                v.push_back({"word-forest", "token " + tok + " on " + level + " has an unknown parent"});
            std::string cur = tok;
            for (std::size_t steps = 0; !cur.empty(); ++steps) {
                if (steps > f.size()) {
                    v.push_back({"word-forest", "nesting on " + level + " has a cycle through " + tok});
                    break;
                }
                auto it = f.find(cur);
                cur = it == f.end() ? "" : it->second;
            }
        }

    auto labels = end_labels(w, kinds);
    for (int i = 0; i < n; ++i) {
        const auto& a = w.annuli[i];
        std::string at = "annulus " + std::to_string(i);
        for (int e = 0; e < 2; ++e) {
            const std::string& tok = e == 0 ? a.nestIn : a.nestOut;
            const std::string& level = e == 0 ? a.levelIn : a.levelOut;
            char lab = e == 0 ? labels[i].first : labels[i].second;
            if (tok.empty()) continue;
            if (lab == 'N') v.push_back({"word-token", at + " has a token on a nonseparating end"});
            const NestForest* f = forest_of(w, level);
            if (!f || !f->count(tok)) v.push_back({"word-token", at + ": token " + tok + " is not in the forest of " + level});
        }
        const auto& next = w.annuli[wrap(i + 1, n)];
        if (!a.nestOut.empty() && !next.nestIn.empty() && a.nestOut != next.nestIn)
            v.push_back({"word-token", at + " and its successor give the shared curve different tokens"});
    }
    if (!resolve_labels(labels))
        v.push_back({"word-curve-label", "neighbouring annuli disagree on whether a shared curve separates"});
    return rep;
}

std::vector<MatchedPair> find_matched_pairs(const AnnulusWord& w) {
    std::map<std::pair<int, int>, MatchedPair> best;
    for (const auto& r : vertical_runs(w)) {
        if (r.from == r.to) continue;
        BridgeSide a = w.annuli[r.from].side, b = w.annuli[r.to].side;
        MatchedPair p;
        if (a == BridgeSide::curved && b == BridgeSide::nested) p = {r.from, r.to, r.length, r.from};
        else if (a == BridgeSide::nested && b == BridgeSide::curved) p = {r.to, r.from, r.length, r.from};
        else continue;
        auto [it, fresh] = best.emplace(std::pair{p.curved, p.nested}, p);
        if (!fresh && p.length < it->second.length) it->second = p;
    }
    std::vector<MatchedPair> out;
    for (const auto& [key, p] : best) out.push_back(p);
    return out;
}

bool matching_length_parity(const AnnulusWord& w) {
    for (const auto& r : vertical_runs(w)) {
        if (r.from == r.to) continue;
        BridgeSide a = w.annuli[r.from].side, b = w.annuli[r.to].side;
        if (a != b && r.length % 2 != 0) return false;
    }
    return true;
}

Cancellation is_cancellable(const AnnulusWord& w, const MatchedPair& p) {
    auto pairs = find_matched_pairs(w);
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) return {};
    int n = static_cast<int>(w.annuli.size());
    const auto& a = w.annuli[p.curved];
    const auto& b = w.annuli[p.nested];
    bool allVss = true;
    for (int t = 1; t <= p.length; ++t)
        if (w.annuli[wrap(p.from + t, n)].type != AnnulusType::VSS) allVss = false;
    auto both = [&](AnnulusType x, AnnulusType y) {
        return (a.type == x && b.type == y) || (a.type == y && b.type == x);
    };
    if (allVss && both(AnnulusType::BSS, AnnulusType::BSS)) return {true, 1};
    if (allVss && both(AnnulusType::BNS, AnnulusType::BSS)) return {true, 2};
    if (both(AnnulusType::BNN, AnnulusType::BNN) && ((a.insulated && b.bridgeDisc) || (b.insulated && a.bridgeDisc)))
        return {true, 3};
    return {};
}

std::vector<CrushCandidate> detect_crushable(const AnnulusWord& w,
                                             const std::map<std::string, std::vector<std::string>>& discPunctures,
                                             int omega) {
    std::vector<CrushCandidate> out;
    auto vpcs = effective_vpcs(w);
    int n = static_cast<int>(w.annuli.size());
    for (int i = 0; i < n; ++i) {
        const auto& a = w.annuli[i];
        if (a.type != AnnulusType::BSS || a.nestIn.empty() || a.nestOut.empty()) continue;
        const std::string& h = a.levelIn;
        const NestForest* f = forest_of(w, h);
        if (a.nestIn == a.nestOut || comparable(f, a.nestIn, a.nestOut)) continue;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            if (j == i || vpcs[j] != vpcs[i]) continue;
            const auto& b = w.annuli[j];
            for (const auto* disc : {&a.nestIn, &a.nestOut}) {
                bool touches = (b.levelIn == h && contains(f, *disc, b.nestIn)) ||
                               (b.levelOut == h && contains(f, *disc, b.nestOut));
                if (!touches) continue;
                bool inside = b.levelIn == h && b.levelOut == h && contains(f, *disc, b.nestIn) &&
                              contains(f, *disc, b.nestOut);
                if (!inside || !comparable(f, b.nestIn, b.nestOut)) ok = false;
            }
        }
        if (!ok) continue;
        CrushCandidate c{i, h, vpcs[i], a.nestIn, a.nestOut, {}};
        auto lookup = [&](const std::string& t) {
            auto it = discPunctures.find(t);
            return it == discPunctures.end() ? std::vector<std::string>{} : it->second;
        };
        c.spec.vpc = vpcs[i];
        c.spec.d1 = c.spec.pi1 = lookup(a.nestIn);
        c.spec.d2 = c.spec.pi2 = lookup(a.nestOut);
        c.spec.omega = omega;
        out.push_back(std::move(c));
    }
    return out;
}

std::string torus_outcome_name(TorusOutcome o) {
    switch (o) {
        case TorusOutcome::TwoTowers: return "TwoTowers";
        case TorusOutcome::TwoBSSplusVSS: return "TwoBSSplusVSS";
        case TorusOutcome::HasCrushableCandidate: return "HasCrushableCandidate";
        case TorusOutcome::HasCancellablePair: return "HasCancellablePair";
        case TorusOutcome::Other: return "Other";
    }
    return "?";
}

bool is_two_towers(const AnnulusWord& w) {
    int n = static_cast<int>(w.annuli.size());
    std::vector<int> bnn;
    for (int i = 0; i < n; ++i) {
        auto t = w.annuli[i].type;
        if (t == AnnulusType::BNN) bnn.push_back(i);
        else if (t != AnnulusType::VNN) return false;
    }
    if (bnn.size() != 2) return false;
    for (int b : bnn) {
        int onLevel = 0;
        for (int k = 0; k < n; ++k)
            if (curve_level(w, k) == w.annuli[b].levelIn) ++onLevel;
        if (onLevel == 2) return true;
    }
    return false;
}

bool is_two_bss_plus_vss(const AnnulusWord& w) {
    int bss = 0;
    for (const auto& a : w.annuli) {
        if (a.type == AnnulusType::VSS) continue;
        if (a.type != AnnulusType::BSS) return false;
        ++bss;
        if (a.nestIn.empty() || a.nestOut.empty() || a.nestIn == a.nestOut) return false;
        if (!comparable(forest_of(w, a.levelIn), a.nestIn, a.nestOut)) return false;
    }
    return bss == 2;
}

bool has_cancellable_pair(const AnnulusWord& w) {
    for (const auto& p : find_matched_pairs(w))
        if (is_cancellable(w, p).cancellable) return true;
    return false;
}

TorusClass classify_torus_config(const AnnulusWord& w) {
    if (is_two_towers(w)) return {TorusOutcome::TwoTowers, "two towers"};
    if (is_two_bss_plus_vss(w)) return {TorusOutcome::TwoBSSplusVSS, "two BSS annuli, each with nested ends"};
    auto crush = detect_crushable(w);
    if (!crush.empty())
        return {TorusOutcome::HasCrushableCandidate, "crushable handle at annulus " + std::to_string(crush[0].annulus)};
    auto pairs = find_matched_pairs(w);
    for (const auto& p : pairs) {
        auto c = is_cancellable(w, p);
        if (c.cancellable)
            return {TorusOutcome::HasCancellablePair, "cancellable " + pair_types(w, p) + " pair at " +
                                                          std::to_string(p.curved) + "," + std::to_string(p.nested)};
    }
    if (!pairs.empty())
        return {TorusOutcome::Other, "matched pair " + pair_types(w, pairs[0]) + " at " + std::to_string(pairs[0].curved) +
                                         "," + std::to_string(pairs[0].nested) + " is not cancellable"};
    for (int i = 0; i < static_cast<int>(w.annuli.size()); ++i) {
        auto t = w.annuli[i].type;
        if (t == AnnulusType::BNS || t == AnnulusType::VNS)
            return {TorusOutcome::Other, annulus_type_name(t) + " annulus at " + std::to_string(i)};
    }
    if (bridge_indices(w).empty()) return {TorusOutcome::Other, "no bridge annuli"};
    return {TorusOutcome::Other, "no matched pair and no crushable handle"};
}

std::string run_label_name(RunLabel l) {
    switch (l) {
        case RunLabel::tube: return "tube";
        case RunLabel::tower: return "tower";
        case RunLabel::neither: return "neither";
    }
    return "?";
}

RunLabel label_long_annulus(const AnnulusWord& w, int first, int count) {
    int n = static_cast<int>(w.annuli.size());
    if (n == 0 || count < 1 || count > n) throw PreconditionError("long annulus out of range");
    std::vector<const AnnulusRec*> run;
    for (int t = 0; t < count; ++t) run.push_back(&w.annuli[wrap(first + t, n)]);
    int bnn = 0, bss = 0;
    bool nnOnly = true, ssOnly = true;
    std::set<BridgeSide> sides;
    for (const auto* a : run) {
        if (a->type == AnnulusType::BNN) ++bnn;
        if (a->type == AnnulusType::BSS) ++bss;
        if (a->type != AnnulusType::BNN && a->type != AnnulusType::VNN) nnOnly = false;
        if (a->type != AnnulusType::BSS && a->type != AnnulusType::VSS) ssOnly = false;
        if (is_bridge(a->type)) sides.insert(a->side);
    }
    if (nnOnly && bnn == 1 && curve_level(w, first) == curve_level(w, first + count)) return RunLabel::tower;
    if (!ssOnly || bss == 0 || sides.size() != 1) return RunLabel::neither;
    bool curved = *sides.begin() == BridgeSide::curved;
    int curves = count == n ? count : count + 1;
    for (int s = 0; s < curves; ++s) {
        std::string ts = curve_token(w, first + s);
        if (ts.empty()) return RunLabel::neither;
        for (int u = s + 1; u < curves; ++u) {
            if (curve_level(w, first + s) != curve_level(w, first + u)) continue;
            std::string tu = curve_token(w, first + u);
            if (!curved || ts == tu || comparable(forest_of(w, curve_level(w, first + s)), ts, tu))
                return RunLabel::neither;
        }
    }
    return RunLabel::tube;
}

std::vector<LevelRun> tube_and_tower_report(const AnnulusWord& w) {
    int n = static_cast<int>(w.annuli.size());
    std::map<std::string, std::vector<int>> curvesOn;
    for (int k = 0; k < n; ++k) curvesOn[curve_level(w, k)].push_back(k);
    std::vector<LevelRun> out;
    for (const auto& [level, ks] : curvesOn) {
        int m = static_cast<int>(ks.size());
        for (int j = 0; j < m; ++j) {
            int first = ks[j];
            int count = m == 1 ? n : wrap(ks[(j + 1) % m] - first, n);
            out.push_back({level, first, count, label_long_annulus(w, first, count)});
        }
    }
    return out;
}

const std::vector<Letter>& word_letters() {
    static const std::vector<Letter> letters = [] {
        std::vector<Letter> out;
        for (auto side : {BridgeSide::curved, BridgeSide::nested}) {
            out.push_back({AnnulusType::BNN, side, false, false, true, true});
            out.push_back({AnnulusType::BSS, side, true, true, true, true});
            out.push_back({AnnulusType::BNS, side, false, true, true, true});
            out.push_back({AnnulusType::BNS, side, true, false, true, true});
        }
        out.push_back({AnnulusType::VNN, BridgeSide::none, false, false, true, false});
        out.push_back({AnnulusType::VNN, BridgeSide::none, false, false, false, true});
        out.push_back({AnnulusType::VSS, BridgeSide::none, true, true, true, false});
        out.push_back({AnnulusType::VSS, BridgeSide::none, true, true, false, true});
        out.push_back({AnnulusType::VNS, BridgeSide::none, false, true, true, false});
        out.push_back({AnnulusType::VNS, BridgeSide::none, true, false, false, true});
        return out;
    }();
    return letters;
}

AnnulusWord canonical_word(const std::vector<Letter>& letters, ForestMode mode) {
    int n = static_cast<int>(letters.size());
    if (n == 0) throw PreconditionError("empty letter cycle");
    for (int i = 0; i < n; ++i) {
        const auto& a = letters[i];
        const auto& b = letters[wrap(i + 1, n)];
        if (a.sepOut != b.sepIn || a.thickOut != b.thickIn)
            throw PreconditionError("letters " + std::to_string(i) + " and " + std::to_string(wrap(i + 1, n)) +
                                    " disagree on their shared curve");
    }
    std::vector<std::string> curve(n);
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (is_bridge(letters[i].type) && !is_bridge(letters[wrap(i - 1, n)].type)) start = i;
    bool anyBridge = std::any_of(letters.begin(), letters.end(), [](const Letter& l) { return is_bridge(l.type); });
    if (!anyBridge) {
        for (int k = 0; k < n; ++k) curve[k] = letters[k].thickIn ? "H0" : "F0";
    } else if (start < 0) {
        std::fill(curve.begin(), curve.end(), "H0");
    } else {
        int group = -1, fresh = 0;
        for (int t = 0; t < n; ++t) {
            int i = wrap(start + t, n);
            if (is_bridge(letters[i].type)) {
                if (!is_bridge(letters[wrap(i - 1, n)].type)) ++group;
                curve[i] = curve[wrap(i + 1, n)] = "H" + std::to_string(group);
            } else if (!is_bridge(letters[wrap(i + 1, n)].type)) {
                curve[wrap(i + 1, n)] = (letters[i].thickOut ? "L" : "F") + std::to_string(fresh++);
            }
        }
    }
    AnnulusWord w;
    std::map<std::string, std::string> lastToken;
    std::vector<std::string> token(n);
    for (int k = 0; k < n; ++k) {
        if (!letters[k].sepIn) continue;
        token[k] = "t" + std::to_string(k);
        auto& f = w.forests[curve[k]];
        f[token[k]] = mode == ForestMode::chain ? lastToken[curve[k]] : "";
        lastToken[curve[k]] = token[k];
    }
    for (int i = 0; i < n; ++i) {
        AnnulusRec a;
        a.type = letters[i].type;
        a.side = letters[i].side;
        a.levelIn = curve[i];
        a.levelOut = curve[wrap(i + 1, n)];
        a.nestIn = token[i];
        a.nestOut = token[wrap(i + 1, n)];
        w.annuli.push_back(std::move(a));
    }
    return w;
}

EnumerationStats enumerate_words(int maxLength, const std::function<void(const AnnulusWord&)>& visit) {
    const auto& letters = word_letters();
    int L = static_cast<int>(letters.size());
    EnumerationStats stats;
    std::vector<int> seq;
    auto minimal_rotation = [&] {
        int n = static_cast<int>(seq.size());
        for (int r = 1; r < n; ++r)
            for (int t = 0; t < n; ++t) {
                int a = seq[t], b = seq[(t + r) % n];
                if (b < a) return false;
                if (b > a) break;
            }
        return true;
    };
    auto emit = [&] {
        if (!minimal_rotation()) return;
        ++stats.cycles;
        std::vector<Letter> ls;
        for (int i : seq) ls.push_back(letters[i]);
        for (auto mode : {ForestMode::flat, ForestMode::chain}) {
            AnnulusWord w = canonical_word(ls, mode);
            if (!validate_word(w).ok()) {
                ++stats.invalid;
                continue;
            }
            ++stats.visited;
            visit(w);
        }
    };
    std::function<void(int)> grow = [&](int target) {
        const Letter& last = letters[seq.back()];
        if (static_cast<int>(seq.size()) == target) {
            const Letter& first = letters[seq.front()];
            if (last.sepOut == first.sepIn && last.thickOut == first.thickIn) emit();
            return;
        }
        for (int c = seq.front(); c < L; ++c) {
            if (letters[c].sepIn != last.sepOut || letters[c].thickIn != last.thickOut) continue;
            seq.push_back(c);
            grow(target);
            seq.pop_back();
        }
    };
    for (int len = 1; len <= maxLength; ++len)
        for (int c = 0; c < L; ++c) {
            seq = {c};
            grow(len);
        }
    return stats;
}

}  // namespace bridgecalc
