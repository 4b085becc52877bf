#include "sugeno/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "sugeno/json_io.hpp"

namespace sugeno::cli {

namespace {

using json_io::Json;
using json_io::dump;

struct Options {
    std::uint64_t seed = 0;
    std::string csv_path;

    std::string instance_path;

    std::size_t grid_points = 100001;
    std::size_t resolution = 100;
    std::string builtin;

    int theorem = 0;
    std::string rate = "1/n";
    std::size_t horizon = 100;
    std::size_t space_size = 4;
    std::string semicopula = "min";
    std::optional<double> epsilon;
    std::optional<std::size_t> tail_start;

    std::size_t random_count = 0;
};

Json error_object(std::string_view code, const std::string& message, const std::string& location) {
    Json e;
    e["code"] = std::string(code);
    e["message"] = message;
    e["location"] = location;
    Json j;
    j["error"] = e;
    return j;
}

Json read_document(const std::string& path) {
    std::string content;
    if (path == "-") {
        content.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'", path);
        content.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Parse, e.what(), path + "@byte " + std::to_string(e.byte));
    }
}

// An instance document, or a bare spec of the named section.
const Json& section(const Json& doc, const char* key) {
    if (doc.is_object() && doc.contains(key)) return doc[key];
    return doc;
}

FiniteSpace instance_space(const Json& doc) {
    if (doc.contains("space")) return json_io::space_from_json(doc["space"]);
    if (doc.contains("capacity")) {
        if (auto hint = json_io::capacity_space_hint(doc["capacity"])) return *hint;
    }
    throw Error(ErrorCode::BadInstance, "instance needs a space", "/space");
}

Semicopula instance_semicopula(const Json& doc) {
    if (doc.contains("semicopula")) return json_io::semicopula_from_json(doc["semicopula"]);
    return Semicopula::min();
}

const Json& required(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw Error(ErrorCode::BadInstance, std::string("instance needs '") + key + "'", std::string("/") + key);
    }
    return doc[key];
}

void emit(std::ostream& out, const Json& j) { out << dump(j) << '\n'; }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Columns: n, strict_value, mean_value, survival_at_t_min.
void write_csv(const std::string& path, const Capacity& c, const Semicopula& s,
               const FnSequence& seq, double t_min) {
    std::ofstream csv(path, std::ios::binary);
    if (!csv) throw Error(ErrorCode::Usage, "cannot write CSV '" + path + "'", path);
    csv << "n,strict_value,mean_value,survival_at_t_min\n";
    for (std::size_t n = 1; n <= seq.horizon(); ++n) {
        const auto r = seq.residual_at(n);
        csv << n << ',' << fmt(c.measure(strict_support(r))) << ',' << fmt(integrate(s, c, r).value)
            << ',' << fmt(survival(c, r, t_min)) << '\n';
    }
}

int cmd_integrate(const Options& o, std::ostream& out) {
    const Json doc = read_document(o.instance_path);
    const FiniteSpace space = instance_space(doc);
    const Capacity c = json_io::capacity_from_json(required(doc, "capacity"), space);
    const MeasurableFn f = json_io::function_from_json(required(doc, "function"), space);
    const Semicopula s = instance_semicopula(doc);
    const auto result = integrate(s, c, f);
    Json j;
    j["value"] = result.value;
    j["argmax_t"] = result.argmax_threshold;
    j["method"] = "exact";
    j["semicopula"] = std::string(s.name());
    j["candidates_inspected"] = result.candidates_inspected;
    emit(out, j);
    return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const Json doc = read_document(o.instance_path);
    const FiniteSpace space = instance_space(doc);
    const Capacity c = json_io::capacity_from_json(required(doc, "capacity"), space);
    const MeasurableFn f = json_io::function_from_json(required(doc, "function"), space);
    const Semicopula s = instance_semicopula(doc);
    const double value = integrate_grid_oracle(s, c, f, o.grid_points);
    const double exact = integrate(s, c, f).value;
    Json j;
    j["value"] = value;
    j["argmax_t"] = nullptr;
    j["method"] = "grid";
    j["semicopula"] = std::string(s.name());
    j["grid_points"] = o.grid_points;
    j["exact_value"] = exact;
    j["gap"] = exact - value;
    emit(out, j);
    return kOk;
}

int cmd_check_semicopula(const Options& o, std::ostream& out) {
    Semicopula s = Semicopula::min();
    if (!o.builtin.empty()) {
        s = Semicopula::builtin(o.builtin);
    } else if (!o.instance_path.empty()) {
        const Json doc = read_document(o.instance_path);
        s = json_io::semicopula_from_json(section(doc, "semicopula"),
                                          doc.contains("semicopula") ? "/semicopula" : "");
    } else {
        throw Error(ErrorCode::Usage, "check-semicopula needs a file or --builtin", "");
    }
    const auto report = validate_semicopula(s, o.resolution);
    Json j;
    j["semicopula"] = std::string(s.name());
    const Json details = json_io::to_json(report);
    for (const auto& [k, v] : details.items()) j[k] = v;
    emit(out, j);
    return report.pass() ? kOk : kVerdictFail;
}

bool capacity_constraint(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotNormalized:
        case ErrorCode::NotMonotone:
        case ErrorCode::OutOfRange:
        case ErrorCode::BadLength:
        case ErrorCode::MaxNotOne:
        case ErrorCode::BadWeights:
        case ErrorCode::BadDistortion:
            return true;
        default:
            return false;
    }
}

int cmd_check_capacity(const Options& o, std::ostream& out) {
    const Json doc = read_document(o.instance_path);
    const bool wrapped = doc.is_object() && doc.contains("capacity");
    const Json& spec = section(doc, "capacity");
    const std::string path = wrapped ? "/capacity" : "";
    std::optional<FiniteSpace> space;
    if (doc.is_object() && doc.contains("space")) space = json_io::space_from_json(doc["space"]);

    Json j;
    try {
        const Capacity c = json_io::capacity_from_json(spec, space, path);
        const auto report = validate_capacity_table(c.space(), c.table());
        j["n"] = c.space().size();
        const Json details = json_io::to_json(report);
        for (const auto& [k, v] : details.items()) j[k] = v;
        emit(out, j);
        return report.valid() ? kOk : kVerdictFail;
    } catch (const CapacityError& e) {
        j["valid"] = false;
        j["code"] = std::string(to_string(e.code()));
        j["message"] = e.what();
        j["location"] = e.location();
        const Json details = json_io::to_json(e.validation());
        j["violation_count"] = details["violation_count"];
        j["violations"] = details["violations"];
    } catch (const Error& e) {
        if (!capacity_constraint(e.code())) throw;
        j["valid"] = false;
        j["code"] = std::string(to_string(e.code()));
        j["message"] = e.what();
        j["location"] = e.location();
        j["violation_count"] = 1;
        j["violations"] = Json::array();
    }
    emit(out, j);
    return kVerdictFail;
}

Json sequence_summary(const FnSequence& seq) {
    Json j;
    j["provenance"] = seq.provenance();
    j["horizon"] = seq.horizon();
    j["space"] = seq.space().size();
    return j;
}

int cmd_converge(const Options& o, std::ostream& out) {
    const Json doc = read_document(o.instance_path);
    const FiniteSpace space = instance_space(doc);
    const Capacity c = json_io::capacity_from_json(required(doc, "capacity"), space);
    const Semicopula s = instance_semicopula(doc);
    const Json params_json = doc.contains("params") ? doc["params"] : Json();
    std::optional<std::size_t> horizon;
    if (params_json.is_object() && params_json.contains("horizon")) {
        if (!params_json["horizon"].is_number_unsigned()) {
            throw Error(ErrorCode::BadInstance, "expected a non-negative integer", "/params/horizon");
        }
        horizon = params_json["horizon"].get<std::size_t>();
    }
    const CheckParams params = json_io::params_from_json(params_json);
    const FnSequence seq = json_io::sequence_from_json(required(doc, "sequence"), space, horizon);

    const std::size_t tail = params.resolved_tail_start(seq.horizon());
    const auto grid = params.resolved_t_grid();
    auto with_location = [](const char* loc, auto&& f) {
        try {
            return f();
        } catch (Error& e) {
            if (e.location().empty()) e.set_location(loc);
            throw;
        }
    };
    const auto in_capacity = with_location("/params", [&] { return check_in_capacity(c, seq, grid, params.epsilon, tail); });
    const auto strict = check_strict(c, seq, params.epsilon, tail);
    const auto in_mean = check_in_mean(s, c, seq, params.epsilon, tail);

    Json j;
    j["sequence"] = sequence_summary(seq);
    j["params"] = json_io::to_json(params, seq.horizon());
    j["reports"] = Json::array({json_io::to_json(in_capacity), json_io::to_json(strict), json_io::to_json(in_mean)});
    emit(out, j);
    if (!o.csv_path.empty()) write_csv(o.csv_path, c, s, seq, *std::min_element(grid.begin(), grid.end()));
    const bool all_pass = in_capacity.passed() && strict.passed() && in_mean.passed();
    return all_pass ? kOk : kVerdictFail;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
    std::optional<Capacity> capacity;
    FiniteSpace space(o.space_size);
    Semicopula s = Semicopula::builtin(o.semicopula);
    if (!o.instance_path.empty()) {
        const Json doc = read_document(o.instance_path);
        space = instance_space(doc);
        capacity = json_io::capacity_from_json(required(doc, "capacity"), space);
        if (doc.contains("semicopula")) s = json_io::semicopula_from_json(doc["semicopula"]);
    } else {
        capacity = Capacity::uniform_additive(space);
    }
    const Rate rate = Rate::parse(o.rate);
    const FnSequence seq = counterexample_constant(space, rate, o.horizon);

    // The truncation cannot resolve thresholds at or below a_{tail_start},
    // so the defaults sit just above it.
    CheckParams params;
    params.tail_start = o.tail_start.value_or(default_tail_start(seq.horizon()));
    if (*params.tail_start < 1 || *params.tail_start > seq.horizon()) {
        throw Error(ErrorCode::BadParams, "tail_start must be in [1, horizon]", "--tail-start");
    }
    const double tail_rate = rate.value(*params.tail_start);
    ImplicationReport audit;
    if (o.theorem == 1) {
        params.epsilon = o.epsilon.value_or(0.0);
        for (double t : default_t_grid()) {
            if (t > tail_rate) params.t_grid.push_back(t);
        }
        if (params.t_grid.empty()) {
            throw Error(ErrorCode::BadParams, "no default threshold lies above a_tail_start; raise --tail-start",
                        "--tail-start");
        }
        audit = theorem1_audit(*capacity, seq, params);
    } else {
        params.epsilon = o.epsilon.value_or(tail_rate);
        audit = theorem2_audit(s, *capacity, seq, params);
    }

    Json j;
    j["theorem"] = o.theorem;
    j["sequence"] = sequence_summary(seq);
    if (o.theorem == 2) j["semicopula"] = std::string(s.name());
    j["params"] = json_io::to_json(params, seq.horizon());
    const bool reproduced = audit.refutes_converse && !audit.consistency_violation;
    j["reproduced"] = reproduced;
    j["audit"] = json_io::to_json(audit);
    emit(out, j);
    if (!o.csv_path.empty()) write_csv(o.csv_path, *capacity, s, seq, params.resolved_t_grid().front());
    return reproduced ? kOk : kVerdictFail;
}

int cmd_audit(const Options& o, std::ostream& out) {
    if (o.random_count == 0) {
        if (o.instance_path.empty()) throw Error(ErrorCode::Usage, "audit needs an instance or --random", "");
        const Json doc = read_document(o.instance_path);
        const FiniteSpace space = instance_space(doc);
        const Capacity c = json_io::capacity_from_json(required(doc, "capacity"), space);
        const Semicopula s = instance_semicopula(doc);
        const Json params_json = doc.contains("params") ? doc["params"] : Json();
        std::optional<std::size_t> horizon;
        if (params_json.is_object() && params_json.contains("horizon") && params_json["horizon"].is_number_unsigned()) {
            horizon = params_json["horizon"].get<std::size_t>();
        }
        const CheckParams params = json_io::params_from_json(params_json);
        const FnSequence seq = json_io::sequence_from_json(required(doc, "sequence"), space, horizon);
        const auto t1 = theorem1_audit(c, seq, params);
        const auto t2 = theorem2_audit(s, c, seq, params);
        Json j;
        j["sequence"] = sequence_summary(seq);
        j["params"] = json_io::to_json(params, seq.horizon());
        j["consistency_violations"] = int(t1.consistency_violation) + int(t2.consistency_violation);
        j["theorem1"] = json_io::to_json(t1);
        j["theorem2"] = json_io::to_json(t2);
        emit(out, j);
        return t1.consistency_violation || t2.consistency_violation ? kVerdictFail : kOk;
    }

    std::mt19937_64 rng(o.seed);
    const FiniteSpace space(o.space_size);
    std::vector<Semicopula> semicopulas;
    if (o.semicopula == "all") {
        semicopulas.assign(Semicopula::builtins().begin(), Semicopula::builtins().end());
    } else {
        semicopulas.push_back(Semicopula::builtin(o.semicopula));
    }
    CheckParams params;
    if (o.epsilon) params.epsilon = *o.epsilon;
    params.tail_start = o.tail_start.value_or(default_tail_start(o.horizon));

    std::size_t audits = 0, violations = 0, hypothesis_pass = 0, conclusion_pass = 0;
    Json first_violation = nullptr;
    for (std::size_t k = 0; k < o.random_count; ++k) {
        const Capacity c = random_capacity(space, rng, CapacityFamily::Mixed);
        const FnSequence seq = random_strictly_convergent(c, o.horizon, *params.tail_start, rng);
        auto tally = [&](const ImplicationReport& r, std::string_view label) {
            ++audits;
            hypothesis_pass += r.hypothesis.passed();
            conclusion_pass += r.conclusion.passed();
            if (r.consistency_violation) {
                ++violations;
                if (first_violation.is_null()) {
                    first_violation = {{"case", k}, {"audit", std::string(label)}, {"report", json_io::to_json(r)}};
                }
            }
        };
        tally(theorem1_audit(c, seq, params), "theorem1");
        for (const auto& s : semicopulas) tally(theorem2_audit(s, c, seq, params), "theorem2/" + std::string(s.name()));
    }
    Json j;
    j["mode"] = "random";
    j["seed"] = o.seed;
    j["cases"] = o.random_count;
    j["space"] = space.size();
    j["horizon"] = o.horizon;
    j["tail_start"] = *params.tail_start;
    j["epsilon"] = params.epsilon;
    j["audits"] = audits;
    j["hypothesis_pass"] = hypothesis_pass;
    j["conclusion_pass"] = conclusion_pass;
    j["consistency_violations"] = violations;
    j["first_violation"] = first_violation;
    emit(out, j);
    return violations == 0 ? kOk : kVerdictFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Seminormed Sugeno integrals and convergence in capacity on finite spaces", "sugeno"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Seed for randomized generators");
    app.add_option("--csv", o.csv_path, "Write per-n CSV to this path (converge, counterexample)");

    auto* integrate_cmd = app.add_subcommand("integrate", "Exact generalized Sugeno integral of an instance");
    integrate_cmd->add_option("instance", o.instance_path, "Instance JSON ('-' for stdin)")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Grid brute-force integral of an instance");
    oracle_cmd->add_option("instance", o.instance_path, "Instance JSON ('-' for stdin)")->required();
    oracle_cmd->add_option("--grid-points", o.grid_points, "Uniform grid size on [0,1]")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

    auto* semi_cmd = app.add_subcommand("check-semicopula", "Lattice check of the semicopula axioms");
    semi_cmd->add_option("file", o.instance_path, "Semicopula or instance JSON");
    semi_cmd->add_option("--builtin", o.builtin, "Check a builtin by name instead of a file");
    semi_cmd->add_option("--resolution", o.resolution, "Lattice resolution")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000}));

    auto* cap_cmd = app.add_subcommand("check-capacity", "Validate a capacity specification");
    cap_cmd->add_option("file", o.instance_path, "Capacity or instance JSON")->required();

    auto* conv_cmd = app.add_subcommand("converge", "Check the three convergence modes on a sequence");
    conv_cmd->add_option("instance", o.instance_path, "Instance JSON ('-' for stdin)")->required();

    auto* cex_cmd = app.add_subcommand("counterexample", "Reproduce the constant-sequence counterexample");
    cex_cmd->add_option("--theorem", o.theorem, "1 (strict vs in capacity) or 2 (strict vs in mean)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    cex_cmd->add_option("--rate", o.rate, "1/n, 1/2^n or 1/log(n+2)");
    cex_cmd->add_option("--horizon", o.horizon, "Number of terms")->check(CLI::PositiveNumber);
    cex_cmd->add_option("--n", o.space_size, "Space size for the default uniform capacity");
    cex_cmd->add_option("--semicopula", o.semicopula, "Builtin semicopula for theorem 2");
    cex_cmd->add_option("--epsilon", o.epsilon, "Tail tolerance");
    cex_cmd->add_option("--tail-start", o.tail_start, "First n of the checked tail");
    cex_cmd->add_option("instance", o.instance_path, "Optional instance supplying space and capacity");

    auto* audit_cmd = app.add_subcommand("audit", "Audit the strict-convergence implications");
    audit_cmd->add_option("instance", o.instance_path, "Instance JSON");
    audit_cmd->add_option("--random", o.random_count, "Audit this many random strictly convergent sequences");
    audit_cmd->add_option("--n", o.space_size, "Space size for random cases");
    audit_cmd->add_option("--horizon", o.horizon, "Horizon for random cases")->check(CLI::PositiveNumber);
    audit_cmd->add_option("--semicopula", o.semicopula, "Builtin name or 'all'");
    audit_cmd->add_option("--epsilon", o.epsilon, "Tail tolerance");
    audit_cmd->add_option("--tail-start", o.tail_start, "First n of the checked tail");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        emit(out, error_object("Usage", e.what(), ""));
        return kInputError;
    }

    try {
        if (integrate_cmd->parsed()) return cmd_integrate(o, out);
        if (oracle_cmd->parsed()) return cmd_oracle(o, out);
        if (semi_cmd->parsed()) return cmd_check_semicopula(o, out);
        if (cap_cmd->parsed()) return cmd_check_capacity(o, out);
        if (conv_cmd->parsed()) return cmd_converge(o, out);
        if (cex_cmd->parsed()) return cmd_counterexample(o, out);
        if (audit_cmd->parsed()) return cmd_audit(o, out);
    } catch (const Error& e) {
        emit(out, error_object(to_string(e.code()), e.what(), e.location()));
        return kInputError;
    } catch (const std::exception& e) {
        emit(out, error_object("Internal", e.what(), ""));
        err << "sugeno: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace sugeno::cli
