#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clifford/ito.hpp"

namespace clifford {

using Json = nlohmann::ordered_json;

// --- JSON codecs for the wire formats ---

Json grid_to_json(const TimeGrid& grid);
TimeGrid grid_from_json(const Json& j);

/// {"degree": n, "slots": d, "width": w, "entries": [{"idx": [...], "re": x, "im": y}, ...]}
/// with strictly increasing idx tuples; the loader validates.
Json tensor_to_json(const AntiTensor& f);
AntiTensor tensor_from_json(const Json& j);

/// {"grid": {...}, "levels": [{"degree": n, "tensor": {...}}, ...]}
Json element_to_json(const CliffordElement& f);
CliffordElement element_from_json(const Json& j);

/// {"grid": {...}, "slots": [{"k": k, "element": {...}}, ...]}
Json process_to_json(const ProcessElement& u);
ProcessElement process_from_json(const Json& j);

// --- report emission ---

struct Assertion {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

struct Report {
    Json inputs = Json::object();
    Json quantities = Json::object();
    std::vector<Assertion> assertions;

    void check(const std::string& name, double lhs, double rhs, double tol) {
        assertions.push_back({name, lhs, rhs, std::abs(lhs - rhs) <= tol});
    }
    void check_le(const std::string& name, double lhs, double rhs) {
        assertions.push_back({name, lhs, rhs, lhs <= rhs});
    }
    void check_true(const std::string& name, bool ok) {
        assertions.push_back({name, ok ? 1.0 : 0.0, 1.0, ok});
    }

    [[nodiscard]] bool all_pass() const {
        for (const auto& a : assertions)
            if (!a.pass) return false;
        return true;
    }
};

/// Serialize a JSON document with numbers rendered at 17 significant digits
/// and fields in insertion order, so identical configs produce identical
/// bytes.
std::string dump_json(const Json& j, int indent = 2);

/// JSON ({inputs, quantities, assertions: [...]}) or CSV (one assertion per
/// row) rendering of a report.
std::string emit_report(const Report& report, const std::string& format);

Json report_to_json(const Report& report);

}  // namespace clifford
