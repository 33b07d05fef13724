#pragma once

#include <string>

#include <json.hpp>

namespace scherk::io {

// CLI result envelope.  Numeric outputs are emitted as JSON numbers, which
// nlohmann serializes with round-trip (full double) precision.
struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    nlohmann::json diagnostics = nlohmann::json::object();
    std::string status = "ok";
    std::string message;

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
    std::string serialize(int indent = 2) const;
    static Report parse(const std::string& text);
};

}  // namespace scherk::io
