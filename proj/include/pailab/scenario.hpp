#pragma once

#include "pailab/bignum.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Deterministic scenario runner behind the CLI. A scenario wires honest
// parties and an attacker together, logs every exchanged message to a
// transcript, and produces a report that pits each recovered value against
// ground truth held by the orchestrator.
//
// Ground truth never flows through attack code: the orchestrator plays the
// omniscient observer, keeping its own copies of every secret it deals out,
// and the report checks recovered values by plain equality against those
// copies. An attack that quietly returned garbage would show up as a
// mismatched entry, not as a passing run.

namespace pailab {

enum class ScenarioKind {
    Selftest,  // keygen plus encryption-forgery sweep
    Capss,     // pub/sub protocol end to end, then subscription recovery
    Lpride,    // ride hailing end to end, then key and location recovery
};

std::string scenario_name(ScenarioKind kind);

struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::Selftest;
    unsigned bits = 512;        // modulus size for every keygen in the run
    std::uint64_t seed = 42;    // drives a single SeededRng for the whole run
    unsigned ell = 8;           // attribute / coordinate bit width
    unsigned kappa = 64;        // taxi blind bit width (lpride)
    unsigned omega = 8;         // coordinate dimensions (lpride)
    unsigned contexts = 2;      // capss
    unsigned subscribers = 10;  // capss
    unsigned publishers = 5;    // capss
    unsigned riders = 5;        // lpride
    unsigned taxis = 10;        // lpride
    unsigned zones = 2;         // lpride
    unsigned trials = 100;      // selftest forgery trials (ignored under tiny-key)
    bool per_coordinate_moduli = false;
    bool rsp_disguise = false;  // lpride: attack events appear under the rsp actor
    bool tiny_key = false;      // forces the 35-element key (p=5, q=7, g_p=2)
};

// Rejects configurations the scenarios cannot run: zero contexts, a tiny-key
// run whose bits field disagrees with the fixed tiny modulus, an lpride run
// with no riders, no taxis, or a zone that could never hold a taxi.
// Parameter bounds of the underlying modules (ell against the modulus, kappa
// against N) are enforced by those modules themselves.
void validate_config(const ScenarioConfig& cfg);

// One logged protocol message. Payload values are lowercase big-endian hex
// strings for ring elements and plain JSON numbers or strings for scalars.
struct TranscriptRecord {
    std::uint64_t seq = 0;
    std::string actor;
    std::string event;
    nlohmann::ordered_json payload;
};

// Append-only message log. Serializes to JSON Lines, one record per line,
// with sequence numbers assigned in append order. Two runs with the same
// seed and config serialize to identical bytes.
class Transcript {
public:
    void append(std::string actor, std::string event, nlohmann::ordered_json payload);

    const std::vector<TranscriptRecord>& records() const { return records_; }

    std::string to_jsonl() const;
    void write_file(const std::string& path) const;

private:
    std::vector<TranscriptRecord> records_;
};

// One verified claim: what the attack (or the broker) produced next to what
// the orchestrator knows to be true. exact_match is computed here from the
// two stored strings, never taken from the code under test.
struct ClaimEntry {
    std::string claim;
    std::string ground_truth;
    std::string recovered;
    bool exact_match = false;
};

struct ScenarioReport {
    ScenarioConfig config;
    std::vector<ClaimEntry> entries;
    std::vector<std::string> notes;
    std::uint64_t duration_ms = 0;

    std::size_t claims() const { return entries.size(); }
    std::size_t matches() const;

    // True when every entry matched. A run with no entries verifies
    // vacuously; the CLI still reports 0/0 rather than pretending success.
    bool all_verified() const { return matches() == claims(); }

    nlohmann::ordered_json to_json() const;
    std::string to_string() const;  // pretty-printed JSON, trailing newline
};

ScenarioReport run_selftest(const ScenarioConfig& cfg, Transcript& transcript);
ScenarioReport run_capss(const ScenarioConfig& cfg, Transcript& transcript);
ScenarioReport run_lpride(const ScenarioConfig& cfg, Transcript& transcript);

// Dispatches on cfg.scenario.
ScenarioReport run_scenario(const ScenarioConfig& cfg, Transcript& transcript);

}  // namespace pailab
