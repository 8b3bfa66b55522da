#pragma once

// Hand-built annulus words shared by the unit tests and the acceptance run.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bridgecalc/words.hpp"

namespace word_fixtures {

using namespace bridgecalc;

inline AnnulusRec rec(const std::string& type, const std::string& side, const std::string& in, const std::string& out,
                      const std::string& nestIn = "", const std::string& nestOut = "", const std::string& vpc = "") {
    AnnulusRec a;
    a.type = annulus_type_from_name(type);
    a.side = bridge_side_from_name(side);
    a.levelIn = in;
    a.levelOut = out;
    a.nestIn = nestIn;
    a.nestOut = nestOut;
    a.vpc = vpc;
    return a;
}

// Space separated letters: "BSS/c", "BNS/n/SN" (separating in-end), "VSS/d" (thick to thin), "VNN/u".
inline AnnulusWord spell(const std::string& text, ForestMode mode) {
    std::vector<Letter> out;
    std::istringstream in(text);
    std::string item;
    while (in >> item) {
        std::vector<std::string> parts;
        std::istringstream ps(item);
        for (std::string p; std::getline(ps, p, '/');) parts.push_back(p);
        AnnulusType t = annulus_type_from_name(parts.at(0));
        bool found = false;
        for (const auto& l : word_letters()) {
            if (l.type != t) continue;
            if (is_bridge(t)) {
                BridgeSide s = parts.at(1) == "c" ? BridgeSide::curved : BridgeSide::nested;
                if (l.side != s) continue;
                if (t == AnnulusType::BNS && l.sepIn != (parts.at(2) == "SN")) continue;
            } else if (l.thickIn != (parts.at(1) == "d")) {
                continue;
            }
            out.push_back(l);
            found = true;
            break;
        }
        if (!found) throw std::invalid_argument("no letter " + item);
    }
    return canonical_word(out, mode);
}

// Curved and nested BSS joined by two runs of four VSS.
inline AnnulusWord length_four_pair() {
    AnnulusWord w;
    w.annuli = {rec("BSS", "curved", "H0", "H0", "t0", "t1"), rec("VSS", "", "H0", "F1", "t1", "f1"),
                rec("VSS", "", "F1", "H1", "f1", "h1"),        rec("VSS", "", "H1", "F2", "h1", "f2"),
                rec("VSS", "", "F2", "H2", "f2", "u0"),        rec("BSS", "nested", "H2", "H2", "u0", "u1"),
                rec("VSS", "", "H2", "F3", "u1", "f3"),        rec("VSS", "", "F3", "H3", "f3", "h3"),
                rec("VSS", "", "H3", "F4", "h3", "f4"),        rec("VSS", "", "F4", "H0", "f4", "t0")};
    w.forests = {{"H0", {{"t0", ""}, {"t1", ""}}}, {"H1", {{"h1", ""}}}, {"H2", {{"u0", ""}, {"u1", "u0"}}},
                 {"H3", {{"h3", ""}}},             {"F1", {{"f1", ""}}}, {"F2", {{"f2", ""}}},
                 {"F3", {{"f3", ""}}},             {"F4", {{"f4", ""}}}};
    return w;
}

// Two adjacent BNN, the first with a second long annulus ending on it, the second with a bridge disc.
inline AnnulusWord zero_length_bnn_pair() {
    auto w = spell("BNN/c BNN/n VNN/d VNN/u BNN/c BNN/n VNN/d VNN/u", ForestMode::chain);
    w.annuli[0].insulated = true;
    w.annuli[1].bridgeDisc = true;
    return w;
}

inline AnnulusWord bns_bss_pair() {
    return spell("BNS/c/NS VSS/d VSS/u BSS/n VSS/d VSS/u BNS/n/SN VNN/d VNN/u", ForestMode::chain);
}

inline AnnulusWord bnn_bns_pair() {
    return spell("BNN/c VNN/d VNN/u BNS/n/NS VSS/d VSS/u BNS/c/SN VNN/d VNN/u", ForestMode::chain);
}

// A BSS in VPC C whose ends bound disjoint discs d1, d2 on H; the only other annulus of C
// has both ends inside d1, one disc containing the other.
inline AnnulusWord outer_handle() {
    AnnulusWord w;
    w.annuli = {rec("BSS", "curved", "H", "H", "d1", "d2", "C"),  rec("VSS", "", "H", "F", "d2", "f1", "C'"),
                rec("VSS", "", "F", "K", "f1", "h1", "Y"),          rec("BSS", "curved", "K", "K", "h1", "h2", "X"),
                rec("VSS", "", "K", "F", "h2", "f2", "Y"),          rec("VSS", "", "F", "H", "f2", "e", "C'"),
                rec("BSS", "nested", "H", "H", "e", "e2", "C"),     rec("VSS", "", "H", "F", "e2", "f3", "C'"),
                rec("VSS", "", "F", "K", "f3", "h3", "Y"),          rec("BSS", "curved", "K", "K", "h3", "h4", "X"),
                rec("VSS", "", "K", "F", "h4", "f4", "Y"),          rec("VSS", "", "F", "H", "f4", "d1", "C'")};
    w.forests = {{"H", {{"d1", ""}, {"d2", ""}, {"e", "d1"}, {"e2", "e"}}},
                 {"F", {{"f1", ""}, {"f2", ""}, {"f3", ""}, {"f4", ""}}},
                 {"K", {{"h1", ""}, {"h2", "h1"}, {"h3", ""}, {"h4", "h3"}}}};
    return w;
}

// VNN BNN VNN VNN BNN VNN with both vertical runs through the same thin level F.
inline AnnulusWord two_towers_shared_thin() {
    AnnulusWord w;
    w.annuli = {rec("VNN", "", "F", "H0"), rec("BNN", "curved", "H0", "H0"), rec("VNN", "", "H0", "F"),
                rec("VNN", "", "F", "H1"), rec("BNN", "curved", "H1", "H1"), rec("VNN", "", "H1", "F")};
    return w;
}

// Curved long annulus over four thick levels returning to H0, where the last curve bounds a
// disc inside the disc of the first.
inline AnnulusWord long_tube() {
    AnnulusWord w;
    w.annuli = {rec("BSS", "curved", "H0", "H0", "t0", "t1"), rec("VSS", "", "H0", "F1", "t1", "s2"),
                rec("VSS", "", "F1", "H1", "s2", "t3"),        rec("BSS", "curved", "H1", "H1", "t3", "t4"),
                rec("VSS", "", "H1", "F2", "t4", "s5"),        rec("VSS", "", "F2", "H2", "s5", "t6"),
                rec("BSS", "curved", "H2", "H2", "t6", "t7"),  rec("VSS", "", "H2", "F3", "t7", "s8"),
                rec("VSS", "", "F3", "H3", "s8", "t9"),        rec("BSS", "curved", "H3", "H3", "t9", "t10"),
                rec("VSS", "", "H3", "F4", "t10", "s11"),      rec("VSS", "", "F4", "H0", "s11", "t12"),
                rec("BSS", "curved", "H0", "H0", "t12", "t0")};
    w.forests = {{"H0", {{"t0", ""}, {"t1", ""}, {"t12", "t0"}}},
                 {"H1", {{"t3", ""}, {"t4", ""}}},
                 {"H2", {{"t6", ""}, {"t7", ""}}},
                 {"H3", {{"t9", ""}, {"t10", ""}}},
                 {"F1", {{"s2", ""}}},
                 {"F2", {{"s5", ""}}},
                 {"F3", {{"s8", ""}}},
                 {"F4", {{"s11", ""}}}};
    return w;
}

}  // namespace word_fixtures
