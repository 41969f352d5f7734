#include "orthoradial/validity.hpp"

namespace orthoradial {

const char* monotone_kind_name(MonotoneKind kind) {
    return kind == MonotoneKind::Increasing ? "increasing" : "decreasing";
}

CycleClass classify_cycle(const CycleLabeling& labeling) {
    bool positive = false, negative = false;
    for (int l : labeling.labels) {
        positive = positive || l > 0;
        negative = negative || l < 0;
    }
    if (!positive && !negative)
        return CycleClass::AllZero;
    if (!negative)
        return CycleClass::Decreasing;
    if (!positive)
        return CycleClass::Increasing;
    return CycleClass::Mixed;
}

std::vector<Cond1Violation> check_condition1(const Representation& rep) {
    return rep.cond1_violations();
}

std::vector<Cond2Violation> check_condition2(const Representation& rep) {
    return rep.cond2_violations();
}

ValidityReport validate(const Representation& rep, const ValidateOptions& options) {
    ValidityReport report;
    report.cond1_violations = rep.cond1_violations();
    report.cond2_violations = rep.cond2_violations();
    if (!report.cond1_violations.empty() || !report.cond2_violations.empty()) {
        report.valid = false;
        return report;
    }

    std::vector<EssentialCycle> cycles;
    try {
        cycles = enumerate_essential_cycles(rep.graph(), {options.max_cycles});
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CycleLimitExceeded)
            throw;
        // A capped search must never report "valid".
        report.inconclusive = true;
        report.valid = false;
        return report;
    }

    for (const EssentialCycle& cycle : cycles) {
        CycleLabeling l = labeling(rep, cycle);
        CycleClass cls = classify_cycle(l);
        if (!is_monotone(cls))
            continue;
        MonotoneKind kind =
            cls == CycleClass::Increasing ? MonotoneKind::Increasing : MonotoneKind::Decreasing;
        if (static_cast<int>(report.monotone_cycles.size()) < options.max_certificates)
            report.monotone_cycles.push_back({cycle, kind, std::move(l)});
    }

    report.valid = report.monotone_cycles.empty();
    return report;
}

} // namespace orthoradial
