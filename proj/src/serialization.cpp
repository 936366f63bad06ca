#include "clifford/serialization.hpp"

#include <cmath>
#include <cstdio>

namespace clifford {

Json grid_to_json(const TimeGrid& grid) {
    return Json{{"slots", grid.slots()}, {"width", grid.width()}};
}

TimeGrid grid_from_json(const Json& j) {
    return TimeGrid(j.at("slots").get<int>(), j.at("width").get<double>());
}

Json tensor_to_json(const AntiTensor& f) {
    Json entries = Json::array();
    for (const auto& [m, c] : f.coeffs()) {
        Json idx = Json::array();
        for (int k = 1; k <= 62; ++k)
            if ((m >> (k - 1)) & 1) idx.push_back(k);
        entries.push_back(Json{{"idx", idx}, {"re", c.real()}, {"im", c.imag()}});
    }
    return Json{{"degree", f.degree()},
                {"slots", f.grid().slots()},
                {"width", f.grid().width()},
                {"entries", entries}};
}

AntiTensor tensor_from_json(const Json& j) {
    const TimeGrid grid(j.at("slots").get<int>(), j.at("width").get<double>());
    const int degree = j.at("degree").get<int>();
    AntiTensor f(grid, degree);
    for (const Json& e : j.at("entries")) {
        const auto& idx = e.at("idx");
        if (static_cast<int>(idx.size()) != degree)
            throw std::invalid_argument("tensor_from_json: idx arity mismatch");
        Mask m = 0;
        int prev = 0;
        for (const Json& v : idx) {
            const int k = v.get<int>();
            if (k <= prev) throw std::invalid_argument(
                "tensor_from_json: idx must be strictly increasing");
            if (k > grid.slots())
                throw std::invalid_argument("tensor_from_json: idx beyond grid");
            prev = k;
            m |= Mask(1) << (k - 1);
        }
        f.add(m, Complex(e.at("re").get<double>(), e.at("im").get<double>()));
    }
    return f;
}

Json element_to_json(const CliffordElement& f) {
    Json levels = Json::array();
    for (const auto& [n, t] : f.levels())
        levels.push_back(Json{{"degree", n}, {"tensor", tensor_to_json(t)}});
    return Json{{"grid", grid_to_json(f.grid())}, {"levels", levels}};
}

CliffordElement element_from_json(const Json& j) {
    const TimeGrid grid = grid_from_json(j.at("grid"));
    CliffordElement f(grid);
    for (const Json& level : j.at("levels")) {
        AntiTensor t = tensor_from_json(level.at("tensor"));
        if (t.degree() != level.at("degree").get<int>())
            throw std::invalid_argument("element_from_json: level degree mismatch");
        require_same_grid(grid, t.grid(), "element_from_json");
        f.set_level(t);
    }
    return f;
}

Json process_to_json(const ProcessElement& u) {
    Json slots = Json::array();
    for (int k = 1; k <= u.grid().slots(); ++k)
        slots.push_back(Json{{"k", k}, {"element", element_to_json(u.at(k))}});
    return Json{{"grid", grid_to_json(u.grid())}, {"slots", slots}};
}

ProcessElement process_from_json(const Json& j) {
    const TimeGrid grid = grid_from_json(j.at("grid"));
    ProcessElement u(grid);
    for (const Json& s : j.at("slots"))
        u.set(s.at("k").get<int>(), element_from_json(s.at("element")));
    return u;
}

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void escape_string(const std::string& s, std::string& out) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                escape_string(it.key(), out);
                out += ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            bool first = true;
            for (const Json& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_rec(v, out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::string:
            escape_string(j.get<std::string>(), out);
            return;
        case Json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case Json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            return;
        case Json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            return;
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += "null";
            return;
    }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

Json report_to_json(const Report& report) {
    Json assertions = Json::array();
    for (const auto& a : report.assertions)
        assertions.push_back(
            Json{{"name", a.name}, {"lhs", a.lhs}, {"rhs", a.rhs}, {"pass", a.pass}});
    return Json{{"inputs", report.inputs},
                {"quantities", report.quantities},
                {"assertions", assertions}};
}

std::string emit_report(const Report& report, const std::string& format) {
    if (format == "json") return dump_json(report_to_json(report));
    if (format == "csv") {
        std::string out = "name,lhs,rhs,pass\n";
        for (const auto& a : report.assertions) {
            out += a.name;
            out += ',';
            out += format_double(a.lhs);
            out += ',';
            out += format_double(a.rhs);
            out += ',';
            out += a.pass ? "true" : "false";
            out += '\n';
        }
        return out;
    }
    throw std::invalid_argument("emit_report: unknown format '" + format + "'");
}

}  // namespace clifford
