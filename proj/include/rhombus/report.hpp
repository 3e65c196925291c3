#pragma once

#include <string>

#include <json.hpp>

namespace rhombus {

// Outcome of one machine check. Failing reports always carry a concrete
// witness (the first mismatching cell or value). Reports are pure
// functions of their inputs; serializing twice gives identical bytes.
struct VerificationReport {
    enum class Status { pass, fail, inconclusive };

    std::string check;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::pass;
    nlohmann::json witness;   // null unless failing
    nlohmann::json expected;
    nlohmann::json actual;

    bool passed() const { return status == Status::pass; }

    nlohmann::json to_json() const;
    std::string summary() const;  // one human-readable line
};

const char* to_string(VerificationReport::Status s);

}  // namespace rhombus
