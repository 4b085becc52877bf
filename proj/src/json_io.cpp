#include "sugeno/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sugeno::json_io {

namespace {

[[noreturn]] void bad(const std::string& message, const std::string& path) {
    throw Error(ErrorCode::BadInstance, message, path);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) bad("expected an object", path);
    const auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key '") + key + "'", path + "/" + key);
    return *it;
}

double number(const Json& j, const std::string& path) {
    if (!j.is_number()) bad("expected a number", path);
    return j.get<double>();
}

std::size_t count(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad("expected a non-negative integer", path);
    return j.get<std::size_t>();
}

std::string text(const Json& j, const std::string& path) {
    if (!j.is_string()) bad("expected a string", path);
    return j.get<std::string>();
}

std::vector<double> numbers(const Json& j, const std::string& path) {
    if (!j.is_array()) bad("expected an array of numbers", path);
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "/" + std::to_string(i)));
    return out;
}

// Attaches `path` to library errors raised while building from JSON.
template <typename F>
auto located(const std::string& path, F&& build) {
    try {
        return build();
    } catch (Error& e) {
        if (e.location().empty()) e.set_location(path);
        throw;
    }
}

}  // namespace

FiniteSpace space_from_json(const Json& j, const std::string& path) {
    const std::size_t n = j.is_object() ? count(member(j, "n", path), path + "/n") : count(j, path);
    return located(path, [n] { return FiniteSpace(n); });
}

Semicopula semicopula_from_json(const Json& j, const std::string& path) {
    if (j.is_string()) {
        return located(path, [&] { return Semicopula::builtin(j.get<std::string>()); });
    }
    const std::string kind = text(member(j, "kind", path), path + "/kind");
    if (kind != "table") {
        return located(path + "/kind", [&] { return Semicopula::builtin(kind); });
    }
    const Json& grid_json = member(j, "grid", path);
    if (!grid_json.is_array()) bad("expected an array of rows", path + "/grid");
    std::vector<std::vector<double>> grid;
    for (std::size_t i = 0; i < grid_json.size(); ++i) {
        grid.push_back(numbers(grid_json[i], path + "/grid/" + std::to_string(i)));
    }
    if (j.contains("resolution")) {
        const std::size_t n = count(j["resolution"], path + "/resolution");
        if (n + 1 != grid.size()) {
            bad("resolution " + std::to_string(n) + " needs " + std::to_string(n + 1) + " grid rows",
                path + "/grid");
        }
    }
    return located(path + "/grid", [&] { return Semicopula::table(grid); });
}

std::optional<FiniteSpace> capacity_space_hint(const Json& j, const std::string& path) {
    if (!j.is_object()) return std::nullopt;
    if (j.contains("n")) return space_from_json(j["n"], path + "/n");
    const std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if ((kind == "possibility" || kind == "additive") && j.contains("weights") && j["weights"].is_array()) {
        return located(path + "/weights", [&] { return FiniteSpace(j["weights"].size()); });
    }
    if (kind == "distortion" && j.contains("base")) return capacity_space_hint(j["base"], path + "/base");
    if (kind == "table" && j.contains("values") && j["values"].is_array()) {
        const std::size_t len = j["values"].size();
        if (len >= 2 && (len & (len - 1)) == 0) {
            std::size_t n = 0;
            while ((std::size_t{1} << n) < len) ++n;
            return located(path + "/values", [n] { return FiniteSpace(n); });
        }
    }
    return std::nullopt;
}

Capacity capacity_from_json(const Json& j, std::optional<FiniteSpace> space, const std::string& path) {
    const std::string kind = text(member(j, "kind", path), path + "/kind");
    const auto hint = capacity_space_hint(j, path);
    if (space && hint && !(*space == *hint)) {
        throw Error(ErrorCode::SpaceMismatch,
                    "capacity declares " + std::to_string(hint->size()) + " points, space has " +
                        std::to_string(space->size()),
                    path);
    }
    if (!space) space = hint;
    if (!space) bad("cannot determine the space size of the capacity", path);

    if (kind == "table") {
        auto values = numbers(member(j, "values", path), path + "/values");
        return located(path + "/values", [&] { return Capacity::from_table(*space, std::move(values)); });
    }
    if (kind == "possibility") {
        const auto w = numbers(member(j, "weights", path), path + "/weights");
        return located(path + "/weights", [&] { return Capacity::from_possibility(*space, w); });
    }
    if (kind == "additive") {
        const auto w = numbers(member(j, "weights", path), path + "/weights");
        return located(path + "/weights", [&] { return Capacity::from_additive(*space, w); });
    }
    if (kind == "distortion") {
        const Capacity base = capacity_from_json(member(j, "base", path), space, path + "/base");
        const auto g = numbers(member(j, "g", path), path + "/g");
        return located(path + "/g", [&] { return Capacity::from_distortion(base, g); });
    }
    bad("unknown capacity kind '" + kind + "'", path + "/kind");
}

MeasurableFn function_from_json(const Json& j, const FiniteSpace& space, const std::string& path) {
    const bool wrapped = j.is_object();
    const std::string where = wrapped ? path + "/values" : path;
    auto values = numbers(wrapped ? member(j, "values", path) : j, where);
    return located(where, [&] { return MeasurableFn(space, std::move(values)); });
}

FnSequence sequence_from_json(const Json& j, const FiniteSpace& space,
                              std::optional<std::size_t> default_horizon, const std::string& path) {
    const std::string kind = text(member(j, "kind", path), path + "/kind");
    if (kind == "constant-rate") {
        const Rate rate = located(path + "/rate", [&] { return Rate::parse(text(member(j, "rate", path), path + "/rate")); });
        std::optional<std::size_t> horizon = default_horizon;
        if (j.contains("horizon")) horizon = count(j["horizon"], path + "/horizon");
        if (!horizon) bad("constant-rate sequence needs a horizon", path + "/horizon");
        return located(path, [&] { return counterexample_constant(space, rate, *horizon); });
    }
    if (kind == "explicit") {
        const Json& terms_json = member(j, "terms", path);
        if (!terms_json.is_array()) bad("expected an array of terms", path + "/terms");
        std::vector<MeasurableFn> terms;
        for (std::size_t i = 0; i < terms_json.size(); ++i) {
            terms.push_back(function_from_json(terms_json[i], space, path + "/terms/" + std::to_string(i)));
        }
        MeasurableFn limit = j.contains("limit") ? function_from_json(j["limit"], space, path + "/limit")
                                                 : MeasurableFn::zero(space);
        std::string provenance = j.contains("provenance") ? text(j["provenance"], path + "/provenance")
                                                          : std::string("explicit");
        return located(path, [&] {
            return FnSequence(space, std::move(terms), std::move(limit), std::move(provenance));
        });
    }
    bad("unknown sequence kind '" + kind + "'", path + "/kind");
}

CheckParams params_from_json(const Json& j, const std::string& path) {
    CheckParams p;
    if (j.is_null()) return p;
    if (!j.is_object()) bad("expected an object", path);
    if (j.contains("epsilon")) {
        p.epsilon = number(j["epsilon"], path + "/epsilon");
        if (!(p.epsilon >= 0.0)) bad("epsilon must be non-negative", path + "/epsilon");
    }
    if (j.contains("tail_start")) p.tail_start = count(j["tail_start"], path + "/tail_start");
    if (j.contains("t_grid")) p.t_grid = numbers(j["t_grid"], path + "/t_grid");
    return p;
}

Json to_json(const IntegralResult& r) {
    Json j;
    j["value"] = r.value;
    j["argmax_t"] = r.argmax_threshold;
    j["candidates_inspected"] = r.candidates_inspected;
    return j;
}

Json to_json(const SemicopulaValidation& v) {
    Json j;
    j["verdict"] = v.pass() ? "pass" : "fail";
    j["resolution"] = v.resolution;
    j["points_checked"] = v.points_checked;
    j["violation_count"] = v.violation_count;
    Json counts = Json::object();
    for (std::size_t k = 0; k < v.counts.size(); ++k) {
        counts[std::string(to_string(static_cast<AxiomViolation>(k)))] = v.counts[k];
    }
    j["counts"] = counts;
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses) {
        witnesses.push_back({{"kind", std::string(to_string(w.kind))},
                             {"a", w.a},
                             {"b", w.b},
                             {"value", w.value},
                             {"expected", w.expected}});
    }
    j["witnesses"] = witnesses;
    return j;
}

Json to_json(const CapacityValidation& v) {
    Json j;
    j["valid"] = v.valid();
    j["violation_count"] = v.violation_count;
    Json list = Json::array();
    for (const auto& x : v.violations) {
        Json item;
        item["code"] = std::string(to_string(x.kind));
        item["set"] = x.set;
        if (x.point >= 0) item["point"] = x.point;
        item["value"] = x.value;
        item["bound"] = x.bound;
        item["message"] = x.describe();
        list.push_back(item);
    }
    j["violations"] = list;
    return j;
}

Json to_json(const ConvergenceReport& r) {
    Json j;
    j["mode"] = std::string(to_string(r.mode));
    j["verdict"] = std::string(to_string(r.verdict));
    j["horizon"] = r.horizon;
    j["tail_start"] = r.tail_start;
    j["epsilon"] = r.epsilon;
    j["tail_sup"] = r.tail_sup;
    j["tail_argmax"] = r.tail_argmax;
    if (r.mode == Mode::InMean) j["semicopula"] = r.semicopula;
    j["terms"] = r.terms;
    if (r.mode == Mode::InCapacity) {
        Json t = Json::array();
        for (const auto& w : r.thresholds) {
            t.push_back({{"t", w.t},
                         {"tail_sup", w.tail_sup},
                         {"tail_argmax", w.tail_argmax},
                         {"verdict", std::string(to_string(w.verdict))}});
        }
        j["thresholds"] = t;
    }
    return j;
}

Json to_json(const ImplicationReport& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["consistency_violation"] = r.consistency_violation;
    j["refutes_converse"] = r.refutes_converse;
    j["termwise_violations"] = r.termwise_violations;
    j["hypothesis"] = to_json(r.hypothesis);
    j["conclusion"] = to_json(r.conclusion);
    return j;
}

Json to_json(const CheckParams& p, std::size_t horizon) {
    Json j;
    j["horizon"] = horizon;
    j["epsilon"] = p.epsilon;
    j["tail_start"] = p.resolved_tail_start(horizon);
    j["t_grid"] = p.resolved_t_grid();
    return j;
}

namespace {

void write_number(std::ostringstream& os, double x) {
    if (!std::isfinite(x)) {
        os << "null";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << buf;
}

bool is_scalar_array(const Json& j) {
    for (const auto& x : j) {
        if (x.is_structured()) return false;
    }
    return true;
}

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case Json::value_t::number_float:
            write_number(os, j.get<double>());
            return;
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            if (is_scalar_array(j)) {
                os << '[';
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << (indent > 0 ? ", " : ",");
                    write(os, j[i], indent, depth + 1);
                }
                os << ']';
                return;
            }
            os << '[' << nl;
            for (std::size_t i = 0; i < j.size(); ++i) {
                os << pad;
                write(os, j[i], indent, depth + 1);
                if (i + 1 < j.size()) os << ',';
                os << nl;
            }
            os << close_pad << ']';
            return;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{' << nl;
            std::size_t i = 0;
            for (const auto& [key, value] : j.items()) {
                os << pad << Json(key).dump() << (indent > 0 ? ": " : ":");
                write(os, value, indent, depth + 1);
                if (++i < j.size()) os << ',';
                os << nl;
            }
            os << close_pad << '}';
            return;
        }
        default:
            os << j.dump();
    }
}

}  // namespace

std::string dump(const Json& j, int indent) {
    std::ostringstream os;
    write(os, j, indent, 0);
    return os.str();
}

}  // namespace sugeno::json_io
