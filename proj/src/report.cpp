#include "rhombus/report.hpp"

#include <sstream>
#include <stdexcept>

namespace rhombus {

const char* to_string(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::pass: return "pass";
        case VerificationReport::Status::fail: return "fail";
        case VerificationReport::Status::inconclusive: return "inconclusive";
    }
    throw std::invalid_argument("unknown status");
}

nlohmann::json VerificationReport::to_json() const {
    return nlohmann::json{{"check", check},     {"params", params},
                          {"status", to_string(status)}, {"witness", witness},
                          {"expected", expected},        {"actual", actual}};
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << check;
    if (!params.empty()) {
        os << ' ';
        bool first = true;
        for (auto it = params.begin(); it != params.end(); ++it) {
            if (!first) os << ' ';
            os << it.key() << '=' << it.value().dump();
            first = false;
        }
    }
    os << ": " << to_string(status);
    if (!expected.is_null()) {
        os << " (expected " << expected.dump() << ", actual " << actual.dump() << ')';
    }
    if (!witness.is_null()) os << " witness " << witness.dump();
    return os.str();
}

}  // namespace rhombus
