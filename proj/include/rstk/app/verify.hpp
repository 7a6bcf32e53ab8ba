#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rstk/app/table.hpp"
#include "rstk/qcalc.hpp"

namespace rstk::app {

using Params = std::vector<std::pair<std::string, double>>;

struct VerifyRecord {
    std::string id;
    std::string eq;
    Params params;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string error;  // exception text when the check could not run
};

struct VerifyConfig {
    std::optional<std::string> only;  // matches a check id or its eq tag
    std::vector<double> q_list{0.3, 0.6, 0.9};
    std::optional<double> tol;        // replaces every default tolerance
};

struct Measurement {
    Params params;
    double residual = 0.0;
};

struct CheckSpec {
    std::string id;
    std::string eq;
    double tol = 0.0;
    bool per_q = true;
    bool in_default_set = true;
    std::function<Measurement(const QParameter*)> run;
};

const std::vector<CheckSpec>& check_registry();

// throws ConfigError for q outside (0,1), a negative tolerance, or an unknown --only value
std::vector<VerifyRecord> run_verify(const VerifyConfig& cfg);
bool all_passed(const std::vector<VerifyRecord>& records);

Table verify_table(const std::vector<VerifyRecord>& records);
void write_verify_json(const std::vector<VerifyRecord>& records, std::ostream& os);

}  // namespace rstk::app
