#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "artin/field.hpp"

namespace artin {

/// Inclusive integer range; accepts "a..b" or a bare "a".
struct Range {
    long lo;
    long hi;
};

Range parse_range(const std::string& text);

/// "Q" or "F<q>" with q an odd prime.
FieldDescriptor parse_field(const std::string& text);

struct VerifyOptions {
    long p = 3;
    long k = 5;
    std::string field = "Q";
    std::optional<long> precision;
    std::string format = "table";  // table | json
};

struct DiophOptions {
    Range p{4, 4};
    Range k{3, 8};
    std::string field = "Q";
    std::string format = "csv";  // csv | table
    std::optional<std::string> out;
};

struct ObstructionOptions {
    long p = 3;
    std::string field = "Q";
    std::optional<long> max_order;  // default p + 2
    std::string method = "both";    // greedy | exhaustive | both
    unsigned long long budget = 10'000'000ULL;
    std::string format = "table";  // table | json
};

struct BetaBoundOptions {
    Range i{8, 12};
    std::string field = "Q";
    std::string format = "table";  // table | csv
    std::optional<std::string> out;
};

struct EstimateOptions {
    std::string poly = "X";
    int N = 1;
    int n = 1;
    std::string field = "F3";
    Range i{0, 0};
    std::optional<long> jet_order;  // default i + 2
    std::optional<long> horizon;    // default jet_order + 1
    std::string oracle = "lift";    // lift | origin | empty | square
    unsigned long long budget = 10'000'000ULL;
    int jobs = 1;
    std::optional<std::string> out;
};

// Each command writes its report to `os` (or to --out when set) and returns
// the exit status: 0 all checks pass, 1 a measured value contradicts the
// predicted one. Usage problems and budget blowups are thrown and mapped by
// run_command.
int cmd_verify_counterexample(const VerifyOptions& o, std::ostream& os);
int cmd_dioph_table(const DiophOptions& o, std::ostream& os);
int cmd_square_obstruction(const ObstructionOptions& o, std::ostream& os);
int cmd_beta_bound(const BetaBoundOptions& o, std::ostream& os);
int cmd_artin_estimate(const EstimateOptions& o, std::ostream& os);

/// Runs `body` and maps exceptions onto the exit-code contract:
/// 0 pass, 1 violation (includes NoSuchB and indeterminate orders),
/// 2 usage, 3 budget.
int run_command(const std::function<int()>& body, std::ostream& err);

}  // namespace artin
