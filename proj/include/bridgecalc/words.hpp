#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bridgecalc/crush.hpp"
#include "bridgecalc/errors.hpp"

namespace bridgecalc {

// B = bridge annulus (both ends on one thick level), V = vertical (thick end, thin end).
// The two letters after it say whether each end is a separating (S) or nonseparating (N) curve.
enum class AnnulusType { BNN, BSS, BNS, VNN, VSS, VNS };
enum class BridgeSide { none, curved, nested };

std::string annulus_type_name(AnnulusType t);
AnnulusType annulus_type_from_name(const std::string& name);
std::string bridge_side_name(BridgeSide s);
BridgeSide bridge_side_from_name(const std::string& name);
bool is_bridge(AnnulusType t);

struct AnnulusRec {
    AnnulusType type = AnnulusType::VNN;
    BridgeSide side = BridgeSide::none;
    // Levels of the end shared with the previous annulus and of the end shared with the next.
    std::string levelIn, levelOut;
    // Nesting tokens of separating ends; empty when the end is nonseparating or unknown.
    std::string nestIn, nestOut;
    std::string vpc;
    // A second vertical long annulus, disjoint from the matching sequence, ends at this annulus.
    bool insulated = false;
    // This annulus admits a bridge disc disjoint from that second long annulus.
    bool bridgeDisc = false;
    bool operator==(const AnnulusRec&) const = default;
};

// token -> parent token ("" for a root)
using NestForest = std::map<std::string, std::string>;

struct AnnulusWord {
    std::vector<AnnulusRec> annuli;  // cyclic
    std::map<std::string, NestForest> forests;  // by level
    std::vector<std::string> thick;  // optional hint for levels touched only by vertical annuli
    bool operator==(const AnnulusWord&) const = default;
};

ValidationReport validate_word(const AnnulusWord& w);

struct MatchedPair {
    int curved = 0;
    int nested = 0;
    int length = 0;  // number of vertical annuli between them
    int from = 0;    // the bridge annulus the vertical run starts after
    bool operator==(const MatchedPair&) const = default;
};

// One pair per (curved, nested), through the shortest run between them.
std::vector<MatchedPair> find_matched_pairs(const AnnulusWord& w);
// Every vertical run between a curved and a nested bridge annulus has even length.
bool matching_length_parity(const AnnulusWord& w);

struct Cancellation {
    bool cancellable = false;
    int kind = 0;  // 1: BSS/BSS, 2: BNS/BSS, 3: BNN/BNN
};
Cancellation is_cancellable(const AnnulusWord& w, const MatchedPair& p);

struct CrushCandidate {
    int annulus = 0;
    std::string level;
    std::string vpc;
    std::string disc1, disc2;  // tokens
    CrushSpec spec;
};
// discPunctures maps a token to the punctures inside its disc, used to fill the specs.
std::vector<CrushCandidate> detect_crushable(const AnnulusWord& w,
                                             const std::map<std::string, std::vector<std::string>>& discPunctures = {},
                                             int omega = 1);

enum class TorusOutcome { TwoTowers, TwoBSSplusVSS, HasCrushableCandidate, HasCancellablePair, Other };
std::string torus_outcome_name(TorusOutcome o);

struct TorusClass {
    TorusOutcome outcome = TorusOutcome::Other;
    std::string report;
};

bool is_two_towers(const AnnulusWord& w);
bool is_two_bss_plus_vss(const AnnulusWord& w);
bool has_cancellable_pair(const AnnulusWord& w);
// Assumes a valid word.
TorusClass classify_torus_config(const AnnulusWord& w);

enum class RunLabel { tube, tower, neither };
std::string run_label_name(RunLabel l);

// Annuli first, first+1, ..., first+count-1 (cyclically) as one long annulus.
RunLabel label_long_annulus(const AnnulusWord& w, int first, int count);

struct LevelRun {
    std::string level;
    int first = 0;
    int count = 0;
    RunLabel label = RunLabel::neither;
};
// For every level, the pieces of the word cut at the curves on that level.
std::vector<LevelRun> tube_and_tower_report(const AnnulusWord& w);

// Flat: every separating curve bounds its own disc. Chain: on each level the discs are
// nested in order of appearance.
enum class ForestMode { flat, chain };

struct Letter {
    AnnulusType type = AnnulusType::VNN;
    BridgeSide side = BridgeSide::none;
    bool sepIn = false;   // in-end separating
    bool sepOut = false;  // out-end separating
    bool thickIn = true;  // in-end on a thick level
    bool thickOut = true;
};

// The 14 oriented letters; a cyclic sequence is consistent iff consecutive letters agree on
// the shared curve's label and level kind.
const std::vector<Letter>& word_letters();

// Levels, tokens and VPC ids for a consistent letter cycle. Throws PreconditionError when the
// letters are inconsistent.
AnnulusWord canonical_word(const std::vector<Letter>& letters, ForestMode mode);

struct EnumerationStats {
    long cycles = 0;    // rotation classes of consistent letter cycles
    long invalid = 0;   // rejected by validate_word
    long visited = 0;   // words passed to the callback
};

// Every rotation class of consistent letter cycles of length 1..maxLength, in both forest
// modes. Invalid words are counted and skipped.
EnumerationStats enumerate_words(int maxLength, const std::function<void(const AnnulusWord&)>& visit);

}  // namespace bridgecalc
