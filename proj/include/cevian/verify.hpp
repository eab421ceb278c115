#pragma once

#include "cevian/constructions.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cevian {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

/// Named exact values establishing or refuting a claim, in insertion order.
using Witness = std::vector<std::pair<std::string, std::string>>;

using AnyPoint = std::variant<ProjPoint<Rational>, ProjPoint<QuadExt>>;

std::string point_str(const AnyPoint& p);
/// Square-free radicand of the coordinate field (1 for Q).
long point_field(const AnyPoint& p);
/// Inverse of point_str: rational triples parse over Q, anything with a
/// radical over Q(sqrt d).
AnyPoint parse_any_point(const std::string& text);

/// One input of the suite: a labelled point P.
struct Configuration {
    std::string label;
    AnyPoint p;
};

struct CheckResult {
    std::string check_id;
    Status status = Status::Pass;
    std::string reason;  // skip reason or failed assertions
    Witness witness;
    std::string config_label;
    std::string p;   // exact string of P
    long field = 1;  // radicand of the field of P
};

/// P with its construction (or the error that prevented it).
template <ExactField S>
struct Prepared {
    ProjPoint<S> p;
    std::optional<ConstructionSet<S>> cs;
    std::string construct_error;
};

using AnyPrepared = std::variant<Prepared<Rational>, Prepared<QuadExt>>;

AnyPrepared prepare(const AnyPoint& p);

struct Outcome {
    Status status = Status::Pass;
    std::string reason;
    Witness witness;
};

struct CheckDef {
    std::string id;
    std::string claim;
    std::function<Outcome(const AnyPrepared&)> fn;
};

using Registry = std::vector<CheckDef>;

/// Every theorem check, sorted by id.
const Registry& default_registry();
std::vector<std::string> check_ids(const Registry& registry = default_registry());

/// Same check with Pass and Fail swapped; used to exercise the harness.
CheckDef negated(CheckDef def);

CheckResult run_check(const std::string& check_id, const AnyPoint& p, const Registry& registry = default_registry());
CheckResult run_check(const CheckDef& def, const Configuration& config, const AnyPrepared& prepared);

struct Tally {
    int pass = 0, fail = 0, skipped = 0;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<std::string> checks;
    std::vector<Configuration> configurations;
    std::map<std::string, Tally> tallies;
    /// Sorted by check id, then configuration order.
    std::vector<CheckResult> results;
    double elapsed_seconds = 0.0;

    [[nodiscard]] int failures() const;
};

/// The fixed configurations run after the sampled ones.
std::vector<Configuration> fixed_configurations();
std::vector<Configuration> sampled_configurations(std::uint64_t seed, int count);

/// Runs `only` (all when empty) on `count` sampled points and the fixed
/// configurations. Throws UnknownCheck for an unregistered id.
SuiteReport run_suite(std::uint64_t seed, int count, const std::vector<std::string>& only = {},
                      const Registry& registry = default_registry());
SuiteReport run_suite(const std::vector<Configuration>& configs, const std::vector<std::string>& only,
                      const Registry& registry);

}  // namespace cevian
