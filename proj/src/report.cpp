#include "goodlab/report.hpp"

#include <cstdio>

namespace goodlab {

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::add_input(const std::string& name, const std::string& path,
                       std::string_view contents) {
    inputs_[name] = Json{{"path", path}, {"fnv1a64", fnv1a64_hex(contents)}};
}

Report::Json Report::to_json() const {
    Json out = Json::object();
    out["command"] = command_;
    out["params"] = params_;
    if (!inputs_.empty()) out["inputs"] = inputs_;
    if (seed_) out["seed"] = *seed_;
    out["result"] = result_;
    if (wall_time_ms_) out["wall_time_ms"] = *wall_time_ms_;
    return out;
}

std::string Report::json_text() const { return to_json().dump(2) + "\n"; }

namespace {

bool is_scalar_array(const Report::Json& node) {
    for (const auto& item : node) {
        if (item.is_structured()) return false;
    }
    return true;
}

void flatten(const Report::Json& node, const std::string& key, std::string& out) {
    if (node.is_object()) {
        for (const auto& [name, child] : node.items()) {
            flatten(child, key.empty() ? name : key + "." + name, out);
        }
        return;
    }
    if (node.is_array() && !is_scalar_array(node)) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            flatten(node[i], key + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    out += key;
    out += ": ";
    if (node.is_string()) {
        const auto& s = node.get_ref<const std::string&>();
        out += s.find('\n') == std::string::npos ? s : node.dump();
    } else {
        out += node.dump();
    }
    out += '\n';
}

}  // namespace

std::string Report::human_text() const {
    std::string out;
    flatten(to_json(), "", out);
    return out;
}

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : data) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace goodlab
