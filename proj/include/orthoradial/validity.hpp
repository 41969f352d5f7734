#pragma once

#include <vector>

#include "orthoradial/cycles.hpp"

namespace orthoradial {

enum class MonotoneKind { Increasing, Decreasing };

const char* monotone_kind_name(MonotoneKind kind);

// Classification of an essential cycle by its labels.  AllZero and Mixed
// satisfy Condition 3; monotone cycles violate it.
enum class CycleClass { AllZero, Increasing, Decreasing, Mixed };

CycleClass classify_cycle(const CycleLabeling& labeling);

inline bool is_monotone(CycleClass c) {
    return c == CycleClass::Increasing || c == CycleClass::Decreasing;
}

struct MonotoneCertificate {
    EssentialCycle cycle;
    MonotoneKind kind;
    CycleLabeling labeling;
};

struct ValidityReport {
    std::vector<Cond1Violation> cond1_violations;
    std::vector<Cond2Violation> cond2_violations;
    std::vector<MonotoneCertificate> monotone_cycles;
    // The cycle enumeration hit its cap before the search finished; the
    // instance is then neither confirmed valid nor invalid.
    bool inconclusive = false;
    bool valid = false;

    bool invalid() const { return !valid && !inconclusive; }
};

struct ValidateOptions {
    std::int64_t max_cycles = 100000;
    int max_certificates = 10;
};

// Thrown by operations that require a valid representation; carries the full
// report so callers can show the certificates.
class NotValidError : public Error {
public:
    explicit NotValidError(ValidityReport report)
        : Error(ErrorCode::NotValid, "representation is not valid"),
          report_(std::move(report)) {}

    const ValidityReport& report() const { return report_; }

private:
    ValidityReport report_;
};

std::vector<Cond1Violation> check_condition1(const Representation& rep);
std::vector<Cond2Violation> check_condition2(const Representation& rep);

// Full Definition-1 check: Conditions 1 and 2, then a monotone-cycle search
// over all simple essential cycles.  The search only runs when Conditions
// 1-2 hold (labels are undefined otherwise).
ValidityReport validate(const Representation& rep, const ValidateOptions& options = {});

} // namespace orthoradial
