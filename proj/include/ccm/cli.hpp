#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ccm::cli {

/// Outcome of a verification-style command.
struct RunReport {
    std::string command;
    std::vector<unsigned> n_values;
    enum class Status { ok, mismatch, error } status = Status::ok;
    struct Mismatch {
        std::string location;
        std::string expected;
        std::string got;
    };
    std::vector<Mismatch> mismatches;
    double elapsed_seconds = 0.0;
};

/// Exit codes: 0 ok, 2 usage/domain, 3 verification mismatch, 4 I/O,
/// 5 resource/convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccm::cli
