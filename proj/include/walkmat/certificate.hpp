#pragma once

#include "walkmat/bigint.hpp"

#include <json.hpp>

#include <string>

namespace walkmat {

using json = nlohmann::json;

// Machine-readable verification record. lhs/rhs hold either one decimal
// string, or an array of decimal strings (coefficient lists and sampled
// values). observed_sign is +1/-1 when a |lhs| = |rhs| comparison had
// rhs != 0, and 0 (serialized as null) otherwise.
struct Certificate {
    std::string identity;
    json params = json::object();
    json lhs;
    json rhs;
    int observed_sign = 0;
    bool pass = false;
    double elapsed_ms = 0.0;

    json to_json() const {
        return json{{"identity", identity},
                    {"params", params},
                    {"lhs", lhs},
                    {"rhs", rhs},
                    {"sign", observed_sign == 0 ? json(nullptr) : json(observed_sign)},
                    {"pass", pass},
                    {"ms", elapsed_ms}};
    }

    std::string to_jsonl() const { return to_json().dump(); }
};

} // namespace walkmat
