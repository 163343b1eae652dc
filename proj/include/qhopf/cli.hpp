#pragma once

#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qhopf/haar.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/io.hpp"
#include "qhopf/report.hpp"

namespace qhopf::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kSizeGuard = 3 };

struct CliConfig {
    enum class Command { Analyze, Example, Haar, Verify };
    Command command = Command::Analyze;
    std::vector<std::string> input_paths;
    std::string example_name;
    std::optional<std::uint64_t> example_m;
    std::optional<std::uint64_t> example_n;
    std::string verify_kind;
    std::string format = "json";
    std::size_t margin = 2;
    std::size_t degree = 2;
    std::uint64_t max_k = 256;
    std::uint64_t precision_bits = 64;
    bool approx = false;
};

// A verification hit its size guard; reported with exit code 3.
struct SizeGuardHit {
    Error error;
};

struct Input {
    BEPresentation presentation;
    json description;
};

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::UnreadableFile, "unreadable file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::MalformedJson, "malformed JSON in '" + path + "': " + e.what());
    }
}

inline Input load_file(const std::string& path)
{
    ExactMatrix e = parse_matrix(read_json_file(path));
    json desc{{"source", path}, {"matrix", to_json(e)}};
    return {BEPresentation(std::move(e), path), std::move(desc)};
}

inline Input load_example(const CliConfig& cfg)
{
    auto need = [&](const std::optional<std::uint64_t>& v, const char* flag) {
        if (!v)
            throw Error(ErrorCode::InvalidParameter,
                        "example '" + cfg.example_name + "' requires " + flag);
        return *v;
    };
    std::optional<BEPresentation> p;
    json desc{{"example", cfg.example_name}};
    if (cfg.example_name == "prop2") {
        desc["m"] = need(cfg.example_m, "--m");
        p.emplace(prop2(*cfg.example_m));
    } else if (cfg.example_name == "remark4") {
        desc["m"] = need(cfg.example_m, "--m");
        p.emplace(remark4(*cfg.example_m));
    } else if (cfg.example_name == "remark5") {
        p.emplace(remark5());
    } else if (cfg.example_name == "example7") {
        desc["n"] = need(cfg.example_n, "--n");
        p.emplace(example7(*cfg.example_n));
    } else {
        throw Error(ErrorCode::InvalidParameter, "unknown example '" + cfg.example_name + "'");
    }
    desc["matrix"] = to_json(p->e());
    return {std::move(*p), std::move(desc)};
}

inline json analysis_json(const Input& in, const CliConfig& cfg)
{
    const AnalysisReport r = analyze(in.presentation, cfg.max_k);
    return report_json(in.presentation, r, in.description, {cfg.approx, cfg.precision_bits});
}

inline void emit(std::ostream& out, const json& doc, const CliConfig& cfg)
{
    if (cfg.format == "json") {
        out << doc.dump(2) << "\n";
        return;
    }
    if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i)
            out << (i ? "\n" : "") << report_text(doc[i]);
        return;
    }
    out << report_text(doc);
}

inline int report_error(std::ostream& out, std::ostream& err, const CliConfig& cfg,
                        std::string_view code, const std::string& message, int exit_code)
{
    if (cfg.format == "json")
        out << json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
    else
        err << "error [" << code << "]: " << message << "\n";
    return exit_code;
}

inline int execute(const CliConfig& cfg, std::ostream& out)
{
    switch (cfg.command) {
    case CliConfig::Command::Analyze: {
        if (cfg.input_paths.size() == 1) {
            emit(out, analysis_json(load_file(cfg.input_paths.front()), cfg), cfg);
            return kOk;
        }
        // Independent files share no state; run them concurrently and keep input order.
        std::vector<std::future<json>> jobs;
        for (const auto& path : cfg.input_paths)
            jobs.push_back(std::async(std::launch::async,
                                      [&cfg, path] { return analysis_json(load_file(path), cfg); }));
        json all = json::array();
        for (auto& job : jobs)
            all.push_back(job.get());
        emit(out, all, cfg);
        return kOk;
    }
    case CliConfig::Command::Example:
        emit(out, analysis_json(load_example(cfg), cfg), cfg);
        return kOk;
    case CliConfig::Command::Haar: {
        const Input in = load_file(cfg.input_paths.front());
        json doc = to_json(HaarMomentTable(in.presentation));
        if (cfg.format == "json") {
            json full{{"input", in.description}};
            full.update(doc);
            out << full.dump(2) << "\n";
        } else {
            out << "denominator: " << in.presentation.trace_f().to_string() << "\n";
            for (const auto& rec : doc["moments"])
                out << "h(a[" << rec["k"] << "," << rec["l"] << "]a[" << rec["i"] << "," << rec["j"]
                    << "]) = " << cyclo_from_json(rec["value"]).to_string() << "\n";
        }
        return kOk;
    }
    case CliConfig::Command::Verify: {
        const Input in = load_file(cfg.input_paths.front());
        json report = analysis_json(in, cfg);
        try {
            if (cfg.verify_kind == "axioms")
                report["checks"] = {{"axioms", to_json(verify_hopf_axioms(in.presentation, cfg.margin, cfg.degree))}};
            else
                report["checks"] = {{"invariance", to_json(invariance_check(in.presentation, cfg.margin, cfg.degree))}};
        } catch (const Error& e) {
            if (e.code() == ErrorCode::UnsupportedSize || e.code() == ErrorCode::TruncationTooLarge)
                throw SizeGuardHit{e};
            throw;
        }
        emit(out, report, cfg);
        return kOk;
    }
    }
    return kOk;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    CLI::App app{"Exact analyzer for the Hopf algebras B(E) of a bilinear form", "qhopf"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-k", cfg.max_k, "Power bound for non-diagonal projective order")->check(CLI::PositiveNumber);
    app.add_option("--precision-bits", cfg.precision_bits, "Bits for approximate values")->check(CLI::Range(8, 1 << 20));
    app.add_flag("--approx", cfg.approx, "Add an approximate numeric section to reports");

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze B(E) for one or more matrix files");
    analyze_cmd->add_option("--file", cfg.input_paths, "Matrix JSON file (repeatable)")->required();

    auto* example_cmd = app.add_subcommand("example", "Analyze a built-in worked example");
    example_cmd->add_option("name", cfg.example_name, "prop2 | remark4 | remark5 | example7")
        ->required()
        ->check(CLI::IsMember({"prop2", "remark4", "remark5", "example7"}));
    auto* m_opt = example_cmd->add_option("--m", cfg.example_m, "Root of unity order");
    auto* n_opt = example_cmd->add_option("--n", cfg.example_n, "Odd size parameter for example7");
    m_opt->excludes(n_opt);

    auto* haar_cmd = app.add_subcommand("haar", "Print the degree-2 Haar moment table");
    haar_cmd->add_option("--file", cfg.input_paths, "Matrix JSON file")->required()->expected(1);

    auto* verify_cmd = app.add_subcommand("verify", "Symbolic verification via the relation ideal");
    verify_cmd->add_option("kind", cfg.verify_kind, "axioms | invariance")
        ->required()
        ->check(CLI::IsMember({"axioms", "invariance"}));
    verify_cmd->add_option("--file", cfg.input_paths, "Matrix JSON file")->required()->expected(1);
    verify_cmd->add_option("--degree", cfg.degree, "Truncation degree (>= 2)");
    verify_cmd->add_option("--margin", cfg.margin, "Closure margin above the truncation degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        return report_error(out, err, cfg, "bad_arguments", e.what(), kInputError);
    }

    if (analyze_cmd->parsed())
        cfg.command = CliConfig::Command::Analyze;
    else if (example_cmd->parsed())
        cfg.command = CliConfig::Command::Example;
    else if (haar_cmd->parsed())
        cfg.command = CliConfig::Command::Haar;
    else
        cfg.command = CliConfig::Command::Verify;

    try {
        return execute(cfg, out);
    } catch (const SizeGuardHit& hit) {
        return report_error(out, err, cfg, error_code_name(hit.error.code()), hit.error.what(), kSizeGuard);
    } catch (const Error& e) {
        const int code = e.code() == ErrorCode::TruncationTooLarge ? kSizeGuard : kInputError;
        return report_error(out, err, cfg, error_code_name(e.code()), e.what(), code);
    }
}

} // namespace qhopf::cli
