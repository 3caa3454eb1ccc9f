#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistedmoyal/numeric.hpp"

#include <nlohmann/json_fwd.hpp>

namespace tmoyal {

inline constexpr const char* kEngineVersion = "0.1.0";

struct UnknownSuite : AlgebraError {
    using AlgebraError::AlgebraError;
};

enum class Verdict { PASS, FAIL, INFO };

struct NumericRecord {
    std::complex<double> expected{0, 0};
    std::complex<double> actual{0, 0};
    double abs_error = 0.0;
    double rel_error = 0.0;
    int nodes = 0;
};

// One audited identity.  `required` marks engine self-consistency checks whose
// failure means the engine is broken; paper-conformance cases are audits and a
// FAIL there is a finding about the paper, carried with its exact residual.
struct ConformanceCase {
    std::string id;
    std::string paper_anchor;
    Verdict status = Verdict::INFO;
    bool required = false;
    std::optional<TwistedElement> residual;
    std::optional<NumericRecord> numeric;
    std::string note;
};

struct SuiteConfig {
    int max_level = 8;
    std::uint64_t seed = 20100527;
    double theta = 1.0;
    std::complex<double> omega{0.0, 0.0};
    int nodes = 48;
};

struct Report {
    std::string suite;
    std::string engine_version = kEngineVersion;
    SuiteConfig config;
    std::vector<ConformanceCase> cases;

    int count(Verdict v) const;
    int required_failures() const;
    bool ok() const { return required_failures() == 0; }

    std::string to_text() const;
    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
};

std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const SuiteConfig& cfg);

ConformanceCase jacobi_check();

struct SpectrumRow {
    int level = 0;
    TwistedElement engine;    // bracket-method eigenvalue
    TwistedElement paper;     // printed Prop 2.1/2.2 energy
    TwistedElement residual;  // engine - paper
    TwistedElement limit;     // omega -> 0 value
};

struct SpectrumTable {
    StateSide side = StateSide::right;
    bool omega_zero = false;
    std::vector<SpectrumRow> rows;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

SpectrumTable spectrum_table(StateSide side, int max_level, bool omega_zero);

}  // namespace tmoyal
