#pragma once

#include <string>
#include <vector>

#include "rstk/app/table.hpp"

namespace rstk::app {

struct Mu2Range {
    double first = 0.0;
    double last = 0.0;
    int steps = 1;

    std::vector<double> values() const;
};

struct SweepConfig {
    std::string quantity;
    std::vector<double> q_list;
    Mu2Range mu2;
    double theta = 0.0;
    int n_max = 40;  // excitation only
};

// "a:b:steps", steps >= 1 points from a to b inclusive
Mu2Range parse_mu2_range(const std::string& text);
// comma-separated reals
std::vector<double> parse_q_list(const std::string& text);

const std::vector<std::string>& sweep_quantities();

// q,mu2,theta,value rows (excitation: q,mu2,theta,n,probability); ConfigError on bad input
Table sweep_table(const SweepConfig& cfg);

}  // namespace rstk::app
