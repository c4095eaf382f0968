// Command-line front end: JSON requests in, JSON reports out.
//
//   twistor classify-point < point.json
//   twistor orbit-equal --in pair.json --out report.json
//   twistor batch requests.json
//
// Exit codes: 0 success, 1 malformed input / unknown command / unreadable
// file, 2 domain error (a failed mathematical precondition).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "twistor/twistor.hpp"

namespace {

struct Options {
    std::string in_path;
    std::string out_path;
    double tolerance = twistor::kDefaultTol;
    uint64_t seed = 0;
    bool tolerance_set = false;
    bool seed_set = false;
};

int write_output(const Options& opts, const twistor::Json& report) {
    const std::string text = report.dump(2) + "\n";
    if (opts.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(opts.out_path);
    if (!out) {
        std::cerr << "cannot open output file: " << opts.out_path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

bool read_payload(const Options& opts, twistor::Json& payload) {
    try {
        if (opts.in_path.empty()) {
            payload = twistor::Json::parse(std::cin);
        } else {
            std::ifstream in(opts.in_path);
            if (!in) {
                std::cerr << "cannot open input file: " << opts.in_path << "\n";
                return false;
            }
            payload = twistor::Json::parse(in);
        }
        return true;
    } catch (const std::exception& e) {
        std::cerr << "invalid JSON input: " << e.what() << "\n";
        return false;
    }
}

int run_command(const std::string& command, const Options& opts) {
    twistor::Json payload;
    if (!read_payload(opts, payload)) return 1;

    twistor::Json request;
    if (command == "run") {
        request = payload;  // payload is already a full request object
    } else {
        request = twistor::Json{{"command", command}, {"payload", payload}};
    }
    if (opts.tolerance_set) request["tolerance"] = opts.tolerance;
    if (opts.seed_set) request["seed"] = opts.seed;

    const twistor::RunResult res = twistor::run_request(request);
    const int io = write_output(opts, res.report);
    if (io != 0) return io;
    switch (res.status) {
        case twistor::RunStatus::Ok: return 0;
        case twistor::RunStatus::Invalid: return 1;
        case twistor::RunStatus::Error: return 2;
    }
    return 1;
}

int run_batch_command(const Options& opts) {
    twistor::Json requests;
    if (!read_payload(opts, requests)) return 1;
    if (!requests.is_array()) {
        std::cerr << "batch input must be a JSON array of requests\n";
        return 1;
    }
    twistor::Json reports = twistor::Json::array();
    for (const auto& item : requests) {
        twistor::Json request = item;
        if (request.is_object()) {
            if (opts.tolerance_set && !request.contains("tolerance")) {
                request["tolerance"] = opts.tolerance;
            }
            if (opts.seed_set && !request.contains("seed")) {
                request["seed"] = opts.seed;
            }
        }
        reports.push_back(twistor::run_request(request).report);
    }
    return write_output(opts, reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Twistor lifts of slice-regular quaternionic polynomials: orbit "
        "classification, planarity, and normal forms"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--in", opts.in_path, "read JSON input from a file")
        ->group("I/O");
    app.add_option("--out", opts.out_path, "write the JSON report to a file")
        ->group("I/O");
    auto* tol_opt = app.add_option("--tolerance", opts.tolerance,
                                   "numerical tolerance (default 1e-9)");
    auto* seed_opt =
        app.add_option("--seed", opts.seed, "seed for witness sampling");
    app.set_version_flag("--version",
                         std::string("twistor ") + twistor::kVersion +
                             " (schema " +
                             std::to_string(twistor::kSchemaVersion) + ")");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"classify-point", "orbit type of a point of CP^5"},
        {"classify-hyperplane", "orbit type of a hyperplane via its pole"},
        {"lift", "twistor lift of a polynomial at a sample point"},
        {"planarity", "planarity rank and annihilator basis"},
        {"hyperplane-family",
         "hyperplane families through a planar lift, with witnesses"},
        {"normal-form", "monic zero-constant normal form and witness"},
        {"orbit-equal", "orbit equivalence of two polynomials"},
        {"act", "apply a lower-triangular element to a polynomial"},
        {"admissible", "admissibility of an element for a polynomial"},
        {"run", "execute a full request object"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help);
    }
    auto* batch =
        app.add_subcommand("batch", "execute a JSON array of requests");
    std::string batch_path;
    batch->add_option("path", batch_path, "file with the request array");

    CLI11_PARSE(app, argc, argv);

    opts.tolerance_set = tol_opt->count() > 0;
    opts.seed_set = seed_opt->count() > 0;

    const auto* sub = app.get_subcommands().front();
    if (sub->get_name() == "batch") {
        if (!batch_path.empty()) opts.in_path = batch_path;
        return run_batch_command(opts);
    }
    return run_command(sub->get_name(), opts);
}
