#include "scherk/report.hpp"

namespace scherk::io {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["diagnostics"] = diagnostics;
    j["status"] = status;
    if (!message.empty()) j["message"] = message;
    return j;
}

Report Report::from_json(const nlohmann::json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.value("inputs", nlohmann::json::object());
    r.outputs = j.value("outputs", nlohmann::json::object());
    r.diagnostics = j.value("diagnostics", nlohmann::json::object());
    r.status = j.at("status").get<std::string>();
    r.message = j.value("message", "");
    return r;
}

std::string Report::serialize(int indent) const { return to_json().dump(indent); }

Report Report::parse(const std::string& text) {
    return from_json(nlohmann::json::parse(text));
}

}  // namespace scherk::io
