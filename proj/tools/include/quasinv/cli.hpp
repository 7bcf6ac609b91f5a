#pragma once

#include "quasinv/json_io.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace quasinv::cli {

using quasinv::to_json;

enum ExitCode { kOk = 0, kParse = 1, kDomain = 2, kInconclusive = 3, kReplayFailed = 4 };

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Assertion {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReplayResult {
    std::string suite;
    std::string reference;  // the result the suite replays
    std::vector<Assertion> assertions;
    bool all_pass() const;
};

const std::vector<std::string>& replay_suites();
// Throws ParseError for an unknown suite.
ReplayResult replay(const std::string& suite);
Json to_json(const ReplayResult& r);

} // namespace quasinv::cli
