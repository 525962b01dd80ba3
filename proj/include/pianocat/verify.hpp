#pragma once
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pianocat/cyclic.hpp"
#include "pianocat/signed.hpp"

namespace pianocat {

struct CheckOptions {
    long window = 6;
    int length = 8;
    std::optional<InitialChoice> choice;
    // require the projective at the predecessor in positive degree instead of its radical
    bool literal = false;
    int max_witnesses = 20;
};

struct CheckResult {
    std::string check;
    int n = 0;
    long instances = 0;
    long checked = 0;
    long failures = 0;
    std::vector<nlohmann::json> witnesses;
    nlohmann::json extra = nlohmann::json::object();
    bool pass() const { return failures == 0; }
    nlohmann::json summary() const;
};

extern const std::vector<std::string> kCheckNames;

// runs one named check over the given generators of size n; bijection also
// compares against the full enumeration when all_of_size is set
CheckResult run_check(const std::string &which, int n, const std::vector<ArcSet> &gens, const CheckOptions &opt,
                      bool all_of_size);

}  // namespace pianocat
