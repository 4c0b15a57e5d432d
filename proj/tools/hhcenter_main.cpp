// Command-line front end; talks to the library through the C API only.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhcenter.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitViolation = 4;

int exit_code_for(hhc_status st) {
    switch (st) {
        case HHC_OK:
            return kExitOk;
        case HHC_PARSE_ERROR:
        case HHC_INVALID_ARGUMENT:
        case HHC_UNSUPPORTED:
            return kExitInput;
        case HHC_DEGENERATE:
            return kExitDegenerate;
        default:
            return kExitInternal;
    }
}

[[noreturn]] void die(hhc_status st) {
    std::cerr << "error: " << hhc_last_error() << "\n";
    std::exit(exit_code_for(st));
}

std::string own_string(char* s) {
    std::string out = s ? s : "";
    hhc_free_string(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(kExitInput);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct GaugeSpec {
    std::string phi = "power";
    double alpha = 1.0;
    bool alpha_given = false;
    std::string knots;  // "t:y,t:y,..." for pwl-convex
};

json gauge_json(const GaugeSpec& spec) {
    if (spec.alpha_given && spec.phi != "power") {
        std::cerr << "error: --alpha is only meaningful with --phi power\n";
        std::exit(kExitInput);
    }
    if (spec.phi == "power") return {{"type", "power"}, {"alpha", spec.alpha}};
    if (spec.phi == "exp") return {{"type", "exp"}};
    if (spec.phi == "exp-square") return {{"type", "exp-square"}};
    if (spec.phi == "pwl-convex") {
        json knots = json::array();
        std::stringstream ss(spec.knots);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) {
                std::cerr << "error: --gauge-knots expects t:y pairs separated by commas\n";
                std::exit(kExitInput);
            }
            knots.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
        }
        if (knots.empty()) {
            std::cerr << "error: pwl-convex gauge needs --gauge-knots\n";
            std::exit(kExitInput);
        }
        return {{"type", "pwl-convex"}, {"knots", knots}};
    }
    std::cerr << "error: unknown gauge '" << spec.phi << "'\n";
    std::exit(kExitInput);
}

hhc_gauge* parse_gauge_or_die(const GaugeSpec& spec) {
    hhc_gauge* g = nullptr;
    hhc_status st = hhc_gauge_parse(gauge_json(spec).dump().c_str(), &g);
    if (st != HHC_OK) die(st);
    return g;
}

hhc_body* parse_body_or_die(const std::string& path) {
    hhc_body* b = nullptr;
    hhc_status st = hhc_body_parse(read_file(path).c_str(), &b);
    if (st != HHC_OK) die(st);
    return b;
}

hhc_function* parse_function_or_die(const std::string& path) {
    hhc_function* f = nullptr;
    hhc_status st = hhc_function_parse(read_file(path).c_str(), &f);
    if (st != HHC_OK) die(st);
    return f;
}

std::vector<double> parse_point(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

void print_kv_table(const json& j, const std::string& prefix = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            print_kv_table(value, prefix + key + ".");
        } else {
            std::cout << prefix << key << ": " << value.dump() << "\n";
        }
    }
}

void emit(const json& j, const std::string& format) {
    if (format == "table")
        print_kv_table(j);
    else
        std::cout << j.dump(2) << "\n";
}

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    long cap = hw == 0 ? 1 : static_cast<long>(hw);
    if (const char* env = std::getenv("HHC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) cap = std::min(cap, v);
    }
    return static_cast<int>(cap);
}

int run_center(const std::string& body_path, const std::string& fn_path,
               const std::string& start, int knot_count, const std::string& format) {
    hhc_body* body = parse_body_or_die(body_path);
    hhc_function* fn = parse_function_or_die(fn_path);
    std::vector<double> start_pt;
    const double* start_ptr = nullptr;
    if (!start.empty()) {
        start_pt = parse_point(start);
        start_ptr = start_pt.data();
    }
    char* out = nullptr;
    hhc_status st = hhc_find_center(body, fn, start_ptr, knot_count, &out);
    if (st != HHC_OK) die(st);
    emit(json::parse(own_string(out)), format);
    hhc_function_free(fn);
    hhc_body_free(body);
    return kExitOk;
}

int run_bound(const std::string& body_path, const std::string& fn_path, const GaugeSpec& spec,
              bool per_volume, const std::string& trace_csv, int knot_count,
              const std::string& format) {
    hhc_body* body = parse_body_or_die(body_path);
    hhc_function* fn = parse_function_or_die(fn_path);
    hhc_gauge* gauge = parse_gauge_or_die(spec);

    char* center_out = nullptr;
    hhc_status st = hhc_find_center(body, fn, nullptr, knot_count, &center_out);
    if (st != HHC_OK) die(st);
    json center = json::parse(own_string(center_out));

    int dim = 0;
    double c = 0.0;
    if ((st = hhc_body_dim(body, &dim)) != HHC_OK) die(st);
    if ((st = hhc_volume(body, &c)) != HHC_OK) die(st);
    double f0 = center["f_at_center"].get<double>();

    char* report_out = nullptr;
    if ((st = hhc_reduced_bound(dim, c, f0, gauge, &report_out)) != HHC_OK) die(st);
    json report = json::parse(own_string(report_out));

    if (!trace_csv.empty()) {
        char* csv = nullptr;
        if ((st = hhc_bound_trace_csv(dim, c, f0, gauge, &csv)) != HHC_OK) die(st);
        std::ofstream out(trace_csv, std::ios::binary);
        out << own_string(csv);
    }

    json result;
    result["center"] = std::move(center);
    result["report"] = std::move(report);
    if (per_volume) result["bound_per_volume"] = result["report"]["bound"].get<double>() / c;
    emit(result, format);

    hhc_gauge_free(gauge);
    hhc_function_free(fn);
    hhc_body_free(body);
    return kExitOk;
}

int run_verify(const std::string& seeds, int dim, const GaugeSpec& spec,
               const std::string& format) {
    auto dots = seeds.find("..");
    if (dots == std::string::npos) {
        std::cerr << "error: --seeds expects a range A..B\n";
        return kExitInput;
    }
    std::uint64_t lo = 0, hi = 0;
    try {
        lo = std::stoull(seeds.substr(0, dots));
        hi = std::stoull(seeds.substr(dots + 2));
    } catch (const std::exception&) {
        std::cerr << "error: --seeds expects a range A..B of nonnegative integers\n";
        return kExitInput;
    }
    if (hi < lo) {
        std::cerr << "error: empty seed range\n";
        return kExitInput;
    }
    hhc_gauge* gauge = parse_gauge_or_die(spec);
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::string> records(count);
    std::vector<hhc_status> codes(count, HHC_OK);

    int threads = std::min<int>(thread_budget(), static_cast<int>(count));
    auto worker = [&](int tid) {
        for (std::size_t i = static_cast<std::size_t>(tid); i < count;
             i += static_cast<std::size_t>(threads)) {
            std::uint64_t seed = lo + i;
            char* body_json = nullptr;
            char* fn_json = nullptr;
            hhc_status st = hhc_random_instance(seed, dim, &body_json, &fn_json);
            if (st != HHC_OK) {
                codes[i] = st;
                records[i] = hhc_last_error();
                continue;
            }
            hhc_body* body = nullptr;
            hhc_function* fn = nullptr;
            if ((st = hhc_body_parse(body_json, &body)) == HHC_OK)
                st = hhc_function_parse(fn_json, &fn);
            hhc_free_string(body_json);
            hhc_free_string(fn_json);
            if (st == HHC_OK) {
                std::ostringstream id;
                id << "seed-" << seed << "-dim" << dim;
                char* rec = nullptr;
                st = hhc_check_inequality(body, fn, gauge, id.str().c_str(), &rec);
                if (st == HHC_OK) {
                    json j = json::parse(own_string(rec));
                    j["seed"] = seed;
                    records[i] = j.dump();
                }
            }
            if (st != HHC_OK) {
                codes[i] = st;
                records[i] = hhc_last_error();
            }
            hhc_function_free(fn);
            hhc_body_free(body);
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::size_t ok = 0, equality = 0, violations = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (codes[i] != HHC_OK) {
            std::cerr << "error: seed " << (lo + i) << ": " << records[i] << "\n";
            hhc_gauge_free(gauge);
            return exit_code_for(codes[i]);
        }
        if (format != "table") std::cout << records[i] << "\n";
        std::string status = json::parse(records[i])["status"].get<std::string>();
        if (status == "violation")
            ++violations;
        else if (status == "equality-within-tol")
            ++equality;
        else
            ++ok;
    }
    std::ostringstream summary;
    summary << "seeds " << lo << ".." << hi << " dim " << dim << " gauge "
            << gauge_json(spec).dump() << ": " << ok << " ok, " << equality
            << " equality-within-tol, " << violations << " violations";
    std::cerr << summary.str() << "\n";
    if (format == "table") std::cout << summary.str() << "\n";
    hhc_gauge_free(gauge);
    return violations > 0 ? kExitViolation : kExitOk;
}

int run_section_bound(const std::string& body_path, const std::string& plane,
                      const std::string& format) {
    hhc_body* body = parse_body_or_die(body_path);
    std::vector<std::string> planes;
    if (plane == "all")
        planes = {"xy", "xz", "yz"};
    else
        planes = {plane};
    bool violation = false;
    for (const auto& pl : planes) {
        char* rec = nullptr;
        hhc_status st = hhc_section_bound_check(body, pl.c_str(), &rec);
        if (st != HHC_OK) die(st);
        json j = json::parse(own_string(rec));
        if (j["status"].get<std::string>() == "violation") violation = true;
        emit(j, format);
    }
    hhc_body_free(body);
    return violation ? kExitViolation : kExitOk;
}

int run_repro(const std::string& format) {
    char* rows_out = nullptr;
    hhc_status st = hhc_repro_table(&rows_out);
    if (st != HHC_OK) die(st);
    json rows = json::parse(own_string(rows_out));
    if (format == "json") {
        std::cout << rows.dump(2) << "\n";
        return kExitOk;
    }
    char line[256];
    std::snprintf(line, sizeof(line), "%-34s | %14s | %14s | %10s | %s", "case", "stated",
                  "computed", "argmax_m", "status");
    std::cout << line << "\n";
    std::cout << std::string(96, '-') << "\n";
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%-34s | %14.7f | %14.7f | %10.6f | %s",
                      row["name"].get<std::string>().c_str(), row["stated"].get<double>(),
                      row["computed"].get<double>(), row["argmax_m"].get<double>(),
                      row["flagged"].get<bool>() ? "FLAG" : "ok");
        std::cout << line << "\n";
        if (row.contains("note"))
            std::cout << "    note: " << row["note"].get<std::string>() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"center points and sharp cone bounds for averages of concave functions"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 2 input error, 3 geometric degeneracy, 4 violation found.\n"
               "HHC_THREADS caps the parallelism of 'verify'.");

    std::string body_path, fn_path, start, format = "json", seeds, plane = "all";
    std::string trace_csv;
    GaugeSpec spec;
    bool per_volume = false;
    int dim = 2, knot_count = 0;

    auto add_gauge_flags = [&](CLI::App* cmd) {
        cmd->add_option("--phi", spec.phi, "gauge: power | exp | exp-square | pwl-convex");
        cmd->add_option("--alpha", spec.alpha, "exponent for the power gauge (alpha >= 1)")
            ->each([&](const std::string&) { spec.alpha_given = true; });
        cmd->add_option("--gauge-knots", spec.knots, "pwl-convex knots as t:y,t:y,...");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json | table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* center = app.add_subcommand("center", "compute the center point of (body, f)");
    center->add_option("--body", body_path, "body JSON file")->required();
    center->add_option("--function", fn_path, "function JSON file")->required();
    center->add_option("--start-point", start, "supporting-affine start point x,y[,z]");
    center->add_option("--knot-count", knot_count, "profile knots (default 1025)");
    add_format(center);

    CLI::App* bound = app.add_subcommand("bound", "center followed by the cone upper bound");
    bound->add_option("--body", body_path, "body JSON file")->required();
    bound->add_option("--function", fn_path, "function JSON file")->required();
    add_gauge_flags(bound);
    bound->add_flag("--per-volume", per_volume, "also report bound / volume");
    bound->add_option("--trace-csv", trace_csv, "write the (m, F(m)) scan to this CSV file");
    bound->add_option("--knot-count", knot_count, "profile knots (default 1025)");
    add_format(bound);

    CLI::App* verify = app.add_subcommand("verify", "seeded random-instance inequality sweep");
    verify->add_option("--seeds", seeds, "inclusive seed range A..B")->required();
    verify->add_option("--dim", dim, "instance dimension (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    add_gauge_flags(verify);
    add_format(verify);

    CLI::App* section = app.add_subcommand("section-bound", "shadow/fiber volume bound check");
    section->add_option("--body", body_path, "polytope3 JSON file")->required();
    section->add_option("--plane", plane, "xy | xz | yz | all")
        ->check(CLI::IsMember({"xy", "xz", "yz", "all"}));
    add_format(section);

    CLI::App* repro = app.add_subcommand("repro", "constants reproduction table");
    format = "json";
    std::string repro_format = "table";
    repro->add_option("--format", repro_format, "output format: table | json")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (center->parsed()) return run_center(body_path, fn_path, start, knot_count, format);
        if (bound->parsed())
            return run_bound(body_path, fn_path, spec, per_volume, trace_csv, knot_count, format);
        if (verify->parsed()) return run_verify(seeds, dim, spec, format);
        if (section->parsed()) return run_section_bound(body_path, plane, format);
        if (repro->parsed()) return run_repro(repro_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
