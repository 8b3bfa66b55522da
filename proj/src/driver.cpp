#include "bridgecalc/driver.hpp"

#include "bridgecalc/errors.hpp"
#include "bridgecalc/validate.hpp"

namespace bridgecalc {

PairState apply_move(const PairState& s, const MoveOp& op) {
    if (op.op == "consolidate") return consolidate(s, op.thick, op.thin);
    if (op.op == "untelescope") return untelescope(s, op.untelescoping);
    if (op.op == "elementary") return elementary_thinning(s, op.untelescoping).state;
    if (op.op == "amalgamate") return amalgamate(s, op.vpc1, op.vpc2);
    if (op.op == "crush") return crush(s, op.crush).state;
    throw SchemaError("unknown move '" + op.op + "'");
}

namespace {

class Run {
public:
    Run(const PairState& s, bool monotone) : monotone_(monotone) {
        require_valid(s);
        res_.state = s;
        record("start");
    }

    bool step(const MoveOp& op) {
        try {
            res_.state = apply_move(res_.state, op);
        } catch (const MoveRejected& e) {
            return stop(op.op, e.what());
        } catch (const PreconditionError& e) {
            return stop(op.op, e.what());
        }
        record(op.op);
        return true;
    }

    bool stop(const std::string& op, const std::string& why) {
        res_.error = "step " + std::to_string(res_.trace.size()) + " (" + op + "): " + why;
        return false;
    }

    void consolidate_all() {
        while (true) {
            auto pairs = consolidation_candidates(res_.state);
            if (pairs.empty()) return;
            res_.state = consolidate(res_.state, pairs.front().first, pairs.front().second);
            record("consolidate");
        }
    }

    DriverResult finish(bool completed) {
        res_.completed = completed;
        res_.locallyThinRelScript = completed && consolidation_candidates(res_.state).empty();
        return std::move(res_);
    }

private:
    void record(const std::string& op) {
        TraceRecord r{static_cast<int>(res_.trace.size()), op, complexity(res_.state), net_invariants(res_.state)};
        if (monotone_ && !res_.trace.empty() && compare_complexity(r.complexity, res_.trace.back().complexity) >= 0)
            throw IdentityFailure("complexity did not drop at step " + std::to_string(r.step));
        res_.trace.push_back(std::move(r));
    }

    bool monotone_;
    DriverResult res_;
};

}  // namespace

DriverResult thin_driver(const PairState& s, const MoveScript& script, bool greedy) {
    Run run(s, true);
    if (greedy) run.consolidate_all();
    for (const auto& op : script) {
        if (op.op == "amalgamate" || op.op == "crush") {
            run.stop(op.op, "not a thinning move");
            return run.finish(false);
        }
        if (!run.step(op)) return run.finish(false);
        if (greedy) run.consolidate_all();
    }
    return run.finish(true);
}

DriverResult apply_script(const PairState& s, const MoveScript& script) {
    Run run(s, false);
    for (const auto& op : script)
        if (!run.step(op)) return run.finish(false);
    return run.finish(true);
}

}  // namespace bridgecalc
