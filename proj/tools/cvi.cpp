// Command-line front end. Talks to the library exclusively through the C
// API in coverideal.h; JSON shaping and argument parsing happen here.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <sys/stat.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "coverideal.h"

namespace {

using nlohmann::json;

// ---- logging (COVERIDEAL_LOG=debug|info|warn|off, default warn) ----------

int log_level() {
    static int level = [] {
        const char* env = std::getenv("COVERIDEAL_LOG");
        std::string v = env ? env : "warn";
        if (v == "debug") return 3;
        if (v == "info") return 2;
        if (v == "off") return 0;
        return 1;
    }();
    return level;
}

void log_msg(int level, const std::string& msg) {
    static const char* names[] = {"", "warn", "info", "debug"};
    if (log_level() >= level) std::fprintf(stderr, "[cvi:%s] %s\n", names[level], msg.c_str());
}

// ---- small helpers --------------------------------------------------------

struct CliError {
    int code; // process exit code: 1 domain, 2 budget, 3 io
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

[[noreturn]] void fail_status(cvi_status st) {
    fail(static_cast<int>(st), cvi_last_error());
}

std::string owned(char* s) {
    std::string out = s ? s : "";
    cvi_string_free(s);
    return out;
}

struct GraphDeleter {
    void operator()(cvi_graph* g) const { cvi_graph_free(g); }
};
struct IdealDeleter {
    void operator()(cvi_ideal* a) const { cvi_ideal_free(a); }
};
using GraphPtr = std::unique_ptr<cvi_graph, GraphDeleter>;
using IdealPtr = std::unique_ptr<cvi_ideal, IdealDeleter>;

struct Job {
    std::string command;
    std::string format = "json";
    std::string out_path;
    std::string input_bytes; // everything read, for the report hash
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

Job* g_job = nullptr;

/// Input arguments are file paths, inline JSON (leading '{'), or "-" for stdin.
std::string read_input(const std::string& arg) {
    std::string content;
    if (!arg.empty() && arg[0] == '{') {
        content = arg;
    } else if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        content = buf.str();
    } else {
        std::ifstream in(arg, std::ios::binary);
        if (!in) fail(3, "cannot read " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        content = buf.str();
    }
    g_job->input_bytes += content;
    return content;
}

std::string input_hash(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

GraphPtr load_graph(const std::string& arg) {
    std::string text = read_input(arg);
    cvi_graph* g = nullptr;
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    cvi_status st = (pos != std::string::npos && text[pos] == '{')
                        ? cvi_graph_from_spec(text.c_str(), &g)
                        : cvi_graph_from_edge_list(text.c_str(), &g);
    if (st != CVI_OK) fail_status(st);
    return GraphPtr(g);
}

IdealPtr load_ideal(const std::string& arg) {
    std::string text = read_input(arg);
    cvi_ideal* a = nullptr;
    if (auto st = cvi_ideal_from_json(text.c_str(), &a)) fail_status(st);
    return IdealPtr(a);
}

void write_output(const std::string& text) {
    if (g_job->out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(g_job->out_path, std::ios::binary);
    if (!out) fail(3, "cannot write " + g_job->out_path);
    out << text;
}

/// Emits the machine report (or the plain text payload) and exits.
[[noreturn]] void finish(const std::string& outcome, const json& result,
                         const std::string& text_payload, int exit_code = 0) {
    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - g_job->start).count();
    if (g_job->format == "text") {
        write_output(text_payload);
    } else {
        json report{{"command", g_job->command},
                    {"version", cvi_version()},
                    {"input_hash", input_hash(g_job->input_bytes)},
                    {"outcome", outcome},
                    {"wall_time_secs", wall}};
        report[outcome == "error" ? "error" : "result"] = result;
        write_output(report.dump(2));
    }
    std::exit(exit_code);
}

json parse_owned_json(const std::string& s) { return json::parse(s); }

// ---- command bodies --------------------------------------------------------

struct Options {
    int k = 1;
    int field = 2;
    unsigned long long budget_nodes = 10'000'000ull;
    double budget_secs = 600.0;
    unsigned threads = 1;
};

[[noreturn]] void emit_graph(const GraphPtr& g) {
    char* js = nullptr;
    if (auto st = cvi_graph_to_json(g.get(), &js)) fail_status(st);
    std::string j = owned(js);
    char* el = nullptr;
    if (auto st = cvi_graph_to_edge_list(g.get(), &el)) fail_status(st);
    finish("value", parse_owned_json(j), owned(el));
}

[[noreturn]] void emit_ideal(const IdealPtr& a) {
    char* js = nullptr;
    if (auto st = cvi_ideal_to_json(a.get(), &js)) fail_status(st);
    std::string j = owned(js);
    char* txt = nullptr;
    if (auto st = cvi_ideal_render(a.get(), &txt)) fail_status(st);
    finish("value", parse_owned_json(j), owned(txt));
}

[[noreturn]] void run_check(const std::string& pred, const std::string& input, const Options& opt) {
    GraphPtr g;
    IdealPtr a;
    if (pred == "vd" || pred == "seqcm")
        g = load_graph(input);
    else
        a = load_ideal(input);
    char* js = nullptr;
    if (auto st = cvi_check(pred.c_str(), g.get(), a.get(), opt.field, opt.budget_nodes,
                            opt.budget_secs, opt.threads, &js))
        fail_status(st);
    json report = parse_owned_json(owned(js));
    std::string outcome, text;
    int code = 0;
    if (report.contains("value")) {
        bool v = report.at("value").get<bool>();
        outcome = "value";
        text = pred + ": " + (v ? "true" : "false");
    } else {
        std::string oc = report.at("outcome").get<std::string>();
        outcome = oc == "certified" ? "certificate" : oc == "refuted" ? "refutation" : oc;
        text = pred + ": " + oc + " (" +
               std::to_string(report.at("nodes_explored").get<unsigned long long>()) + " nodes)";
        if (oc == "budget-exceeded") code = 2;
    }
    finish(outcome, report, text, code);
}

[[noreturn]] void run_verify(const std::string& suite, const std::string& data_dir,
                             const Options& opt) {
    std::string dir = data_dir;
    if (dir.empty()) {
        struct stat sb {};
        if (stat("paper", &sb) == 0 && S_ISDIR(sb.st_mode)) dir = "paper";
    }
    log_msg(2, "verify suite=" + suite + " data_dir=" + (dir.empty() ? "(none)" : dir));
    char* js = nullptr;
    if (auto st = cvi_verify(suite.c_str(), opt.budget_nodes, opt.budget_secs, opt.threads,
                             dir.empty() ? nullptr : dir.c_str(), &js))
        fail_status(st);
    json suites = parse_owned_json(owned(js));
    bool all_passed = true;
    std::string text;
    for (const auto& s : suites) {
        bool p = s.at("passed").get<bool>();
        all_passed = all_passed && p;
        char line[128];
        std::snprintf(line, sizeof line, "%-10s %s  (%zu checks, %.2fs)\n",
                      s.at("suite").get<std::string>().c_str(), p ? "PASS" : "FAIL",
                      s.at("checks").size(), s.at("seconds").get<double>());
        text += line;
        if (!p)
            for (const auto& c : s.at("checks"))
                if (!c.at("passed").get<bool>())
                    text += "  FAIL " + c.at("name").get<std::string>() + "\n";
    }
    finish("value", suites, text, all_passed ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    Job job;
    g_job = &job;
    for (int i = 1; i < argc; ++i) job.command += std::string(i > 1 ? " " : "") + argv[i];

    CLI::App app{"cover ideals of graphs: symbolic powers, certificates, regularity"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", job.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--out", job.out_path, "Write output to this path instead of stdout");

    auto add_common = [&](CLI::App* cmd, bool budgeted = false) {
        cmd->add_option("--field", opt.field, "Prime field characteristic")->capture_default_str();
        cmd->add_option("--threads", opt.threads, "Worker cap for parallel kernels")
            ->capture_default_str();
        if (budgeted) {
            cmd->add_option("--budget-nodes", opt.budget_nodes, "Search node cap")
                ->capture_default_str();
            cmd->add_option("--budget-secs", opt.budget_secs, "Search time cap in seconds")
                ->capture_default_str();
        }
    };

    std::string input, input2, pred, suite = "all", data_dir;

    auto* graph = app.add_subcommand("graph", "Construct and inspect graphs");
    graph->require_subcommand(1);
    auto* graph_gen = graph->add_subcommand("gen", "Build a graph from a family spec or file");
    graph_gen->add_option("spec", input, "Spec file, inline JSON, or - for stdin")->required();
    auto* graph_info = graph->add_subcommand("info", "Summarize a graph");
    graph_info->add_option("graph", input)->required();

    auto* ideal = app.add_subcommand("ideal", "Monomial ideal operations");
    ideal->require_subcommand(1);
    const char* unary_graph_ops[] = {"cover", "edge", "symbolic-power"};
    for (const char* name : unary_graph_ops) {
        auto* c = ideal->add_subcommand(name);
        c->add_option("graph", input)->required();
        if (std::string(name) == "symbolic-power")
            c->add_option("--k", opt.k, "Symbolic power exponent")->capture_default_str();
    }
    auto* ideal_power = ideal->add_subcommand("power");
    ideal_power->add_option("ideal", input)->required();
    ideal_power->add_option("--k", opt.k, "Power exponent")->capture_default_str();
    auto* ideal_intersect = ideal->add_subcommand("intersect");
    ideal_intersect->add_option("ideal1", input)->required();
    ideal_intersect->add_option("ideal2", input2)->required();
    for (const char* name : {"polarize", "dual"})
        ideal->add_subcommand(name)->add_option("ideal", input)->required();

    auto* check = app.add_subcommand("check", "Tri-state predicate checks");
    check->require_subcommand(1);
    for (const char* name : {"lq", "vd", "cwl", "linres", "seqcm"}) {
        auto* c = check->add_subcommand(name);
        c->add_option(std::string(name) == "vd" || std::string(name) == "seqcm" ? "graph" : "ideal",
                      input)
            ->required();
        add_common(c, true);
    }

    auto* betti = app.add_subcommand("betti", "Graded Betti table of an ideal");
    betti->add_option("ideal", input)->required();
    add_common(betti);
    auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of an ideal");
    reg->add_option("ideal", input)->required();
    add_common(reg);

    auto* validate = app.add_subcommand("validate", "Re-check a serialized certificate");
    validate->add_option("certificate", input)->required();

    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("suite", suite, "Suite id or 'all'")->capture_default_str();
    verify->add_option("--data-dir", data_dir, "Instance file directory (default: ./paper)");
    add_common(verify, true);

    // Let the global --format/--out flags appear after any subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        log_msg(3, "command: " + job.command);
        if (graph_gen->parsed()) emit_graph(load_graph(input));
        if (graph_info->parsed()) {
            GraphPtr g = load_graph(input);
            char* js = nullptr;
            if (auto st = cvi_graph_info(g.get(), &js)) fail_status(st);
            json info = parse_owned_json(owned(js));
            finish("value", info, info.dump(2));
        }
        if (ideal->parsed()) {
            auto* sub = ideal->get_subcommands().front();
            const std::string name = sub->get_name();
            cvi_ideal* raw = nullptr;
            cvi_status st = CVI_OK;
            if (name == "cover")
                st = cvi_cover_ideal(load_graph(input).get(), &raw);
            else if (name == "edge")
                st = cvi_edge_ideal(load_graph(input).get(), &raw);
            else if (name == "symbolic-power")
                st = cvi_symbolic_power(load_graph(input).get(), opt.k, &raw);
            else if (name == "power")
                st = cvi_ideal_power(load_ideal(input).get(), opt.k, &raw);
            else if (name == "intersect")
                st = cvi_ideal_intersect(load_ideal(input).get(), load_ideal(input2).get(), &raw);
            else if (name == "polarize")
                st = cvi_ideal_polarize(load_ideal(input).get(), &raw);
            else if (name == "dual")
                st = cvi_ideal_dual(load_ideal(input).get(), &raw);
            if (st != CVI_OK) fail_status(st);
            emit_ideal(IdealPtr(raw));
        }
        if (check->parsed()) run_check(check->get_subcommands().front()->get_name(), input, opt);
        if (betti->parsed()) {
            IdealPtr a = load_ideal(input);
            char* js = nullptr;
            if (auto st = cvi_betti(a.get(), opt.field, opt.threads, &js)) fail_status(st);
            std::string table = owned(js);
            char* txt = nullptr;
            if (auto st = cvi_betti_render(table.c_str(), &txt)) fail_status(st);
            finish("value", parse_owned_json(table), owned(txt));
        }
        if (reg->parsed()) {
            IdealPtr a = load_ideal(input);
            long long r = 0;
            if (auto st = cvi_regularity(a.get(), opt.field, opt.threads, &r)) fail_status(st);
            finish("value", json{{"regularity", r}, {"field", opt.field}}, std::to_string(r));
        }
        if (validate->parsed()) {
            std::string cert = read_input(input);
            int valid = 0;
            if (auto st = cvi_validate_certificate(cert.c_str(), &valid)) fail_status(st);
            finish("value", json{{"valid", valid != 0}}, valid ? "valid" : "INVALID",
                   valid ? 0 : 1);
        }
        if (verify->parsed()) run_verify(suite, data_dir, opt);
        fail(1, "no command");
    } catch (const CliError& e) {
        log_msg(1, e.message);
        finish("error", json{{"code", e.code}, {"message", e.message}}, "error: " + e.message,
               e.code);
    } catch (const std::exception& e) {
        log_msg(1, e.what());
        finish("error", json{{"code", 1}, {"message", e.what()}},
               std::string("error: ") + e.what(), 1);
    }
}
