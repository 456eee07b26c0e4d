// leontief: solve, verify and generate Leontief substitution LPs with exact
// certificates.

#include "leontief/certificate_io.hpp"
#include "leontief/certify.hpp"
#include "leontief/generators.hpp"
#include "leontief/instance_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace leontief;

namespace {

enum Exit : int { kOk = 0, kInvalidInput = 2, kNotGainfree = 3, kVerifyFailed = 4 };

struct SolveFlags {
    bool no_gainfree_check = false;
    bool json = false;
    bool trace = false;
};

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::optional<Instance> load_instance(const fs::path& path, std::ostream& err)
{
    try {
        return parse_instance(slurp(path));
    } catch (const std::exception& e) {
        err << path.string() << ": " << e.what() << "\n";
    }
    return std::nullopt;
}

std::string cycle_json(const CycleWitness& w)
{
    nlohmann::ordered_json doc;
    doc["error"] = "not_gainfree";
    auto& cycle = doc["cycle"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        cycle.push_back({{"vertex", w.vertices[i] + 1}, {"column", w.arcs[i] + 1}});
    }
    doc["gain"] = to_string(w.gain());
    return doc.dump(2) + "\n";
}

void summarize(std::ostream& err, const Instance& inst, const Outcome& outcome)
{
    err << "outcome: " << name(kind_of(outcome)) << "\n";
    if (const auto* o = std::get_if<Optimal>(&outcome)) err << "objective: " << to_string(dot(inst.c, o->x)) << "\n";
    err << "certificates verified\n";
}

/// Solves one instance; certificate text goes to `out`, diagnostics to `err`.
int solve_one(const fs::path& path, const SolveFlags& flags, std::ostream& out, std::ostream& err)
{
    auto inst = load_instance(path, err);
    if (!inst) return kInvalidInput;
    try {
        const SolveReport report = solve_detailed(*inst, SolveOptions{!flags.no_gainfree_check});
        if (flags.trace) write_trace(err, report.trace);
        out << emit_certificate(report.outcome, &*inst);
        if (!flags.json) summarize(err, *inst, report.outcome);
        return kOk;
    } catch (const InvalidInstance& e) {
        err << path.string() << ": " << e.what() << "\n";
        return kInvalidInput;
    } catch (const NotGainfree& e) {
        err << path.string() << ": " << e.what() << "\n";
        if (flags.json) out << cycle_json(e.witness());
        return kNotGainfree;
    } catch (const InternalError& e) {
        err << path.string() << ": " << e.what() << "\n";
        return kVerifyFailed;
    }
}

void write_atomically(const fs::path& target, const std::string& text)
{
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
}

int solve_batch(const fs::path& dir, const SolveFlags& flags)
{
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".llp") files.push_back(entry.path());
    }
    if (ec) {
        std::cerr << dir.string() << ": " << ec.message() << "\n";
        return kInvalidInput;
    }
    std::sort(files.begin(), files.end());

    std::atomic<std::size_t> next{0};
    std::atomic<int> worst{kOk};
    std::mutex err_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < files.size(); k = next++) {
            std::ostringstream out, err;
            int code = solve_one(files[k], flags, out, err);
            if (code == kOk) {
                fs::path target = files[k];
                target += ".cert.json";
                try {
                    write_atomically(target, out.str());
                } catch (const std::exception& e) {
                    err << e.what() << "\n";
                    code = kInvalidInput;
                }
            }
            {
                std::lock_guard lock(err_mutex);
                std::cerr << err.str();
                if (!flags.json) std::cerr << files[k].string() << ": exit " << code << "\n";
            }
            int prev = worst.load();
            while (code > prev && !worst.compare_exchange_weak(prev, code)) {
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return worst.load();
}

int cmd_verify(const fs::path& instance_path, const fs::path& certificate_path)
{
    auto inst = load_instance(instance_path, std::cerr);
    if (!inst) return kInvalidInput;
    Outcome outcome;
    try {
        outcome = parse_certificate(slurp(certificate_path));
    } catch (const std::exception& e) {
        std::cerr << certificate_path.string() << ": " << e.what() << "\n";
        return kInvalidInput;
    }
    try {
        const Verdict verdict = verify_outcome(*inst, outcome);
        if (!verdict) {
            std::cout << "invalid: " << verdict.failure << "\n";
            return kVerifyFailed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << certificate_path.string() << ": " << e.what() << "\n";
        return kInvalidInput;
    }
    std::cout << "valid " << name(kind_of(outcome)) << "\n";
    return kOk;
}

int cmd_gainfree(const fs::path& path)
{
    auto inst = load_instance(path, std::cerr);
    if (!inst) return kInvalidInput;
    if (auto violations = validate(*inst); !violations.empty()) {
        std::cerr << path.string() << ": " << InvalidInstance(std::move(violations)).what() << "\n";
        return kInvalidInput;
    }
    const Hypergraph h = build_hypergraph(normalize(*inst).instance);
    if (auto witness = check_gainfree(h)) {
        std::cout << NotGainfree(*witness).what() << "\n";
        return kNotGainfree;
    }
    std::cout << "gainfree\n";
    if (auto gain = max_cycle_gain(h)) {
        std::cout << "max cycle gain: " << to_string(*gain) << "\n";
    } else {
        std::cout << "no directed cycles\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact certifying solver for gainfree Leontief substitution LPs"};
    app.require_subcommand(1);

    SolveFlags flags;
    std::string solve_path;
    std::string batch_dir;
    auto* solve = app.add_subcommand("solve", "Solve an instance and print verified certificates");
    solve->add_option("instance", solve_path, "Instance file");
    solve->add_option("--batch", batch_dir, "Solve every .llp file in a directory, writing <file>.cert.json");
    solve->add_flag("--no-gainfree-check", flags.no_gainfree_check, "Skip the gainfree check");
    solve->add_flag("--json", flags.json, "Machine output only");
    solve->add_flag("--trace", flags.trace, "Dump the y/r iteration history to stderr");

    std::string verify_instance, verify_cert;
    auto* verify = app.add_subcommand("verify", "Check a certificate file against an instance");
    verify->add_option("instance", verify_instance, "Instance file")->required();
    verify->add_option("certificate", verify_cert, "Certificate JSON file")->required();

    std::string gainfree_path;
    auto* gainfree = app.add_subcommand("gainfree", "Check that every directed cycle has gain at most 1");
    gainfree->add_option("instance", gainfree_path, "Instance file")->required();

    std::size_t dc_vars = 5, dc_constraints = 8;
    std::int64_t dc_wmin = -3, dc_wmax = 9;
    std::uint64_t seed = 1;
    auto* gen_dc_cmd = app.add_subcommand("gen-dc", "Generate a difference-constraint instance");
    gen_dc_cmd->add_option("--vars", dc_vars, "Number of variables")->check(CLI::Range(2, 1 << 20));
    gen_dc_cmd->add_option("--constraints", dc_constraints, "Number of difference constraints");
    gen_dc_cmd->add_option("--wmin", dc_wmin, "Smallest weight");
    gen_dc_cmd->add_option("--wmax", dc_wmax, "Largest weight");
    gen_dc_cmd->add_option("--seed", seed, "Seed");

    std::uint64_t exp_a = 1;
    auto* gen_exp_cmd = app.add_subcommand("gen-exp", "Generate the two-variable family with gains (a+1)/a, a/(a+1)");
    gen_exp_cmd->add_option("--a", exp_a, "Positive integer parameter")->check(CLI::PositiveNumber);

    std::size_t rnd_m = 4, rnd_n = 8;
    double rnd_density = 0.35;
    auto* gen_random_cmd = app.add_subcommand("gen-random", "Generate a random gainfree instance");
    gen_random_cmd->add_option("--m", rnd_m, "Rows")->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--n", rnd_n, "Columns")->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--density", rnd_density, "Tail probability per entry")->check(CLI::Range(0.0, 1.0));
    gen_random_cmd->add_option("--seed", seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    if (*solve) {
        if (batch_dir.empty() == solve_path.empty()) {
            std::cerr << "solve: give exactly one of an instance file or --batch <dir>\n";
            return kInvalidInput;
        }
        if (!batch_dir.empty()) return solve_batch(batch_dir, flags);
        return solve_one(solve_path, flags, std::cout, std::cerr);
    }
    if (*verify) return cmd_verify(verify_instance, verify_cert);
    if (*gainfree) return cmd_gainfree(gainfree_path);
    if (*gen_dc_cmd) {
        if (dc_wmin > dc_wmax) {
            std::cerr << "gen-dc: --wmin exceeds --wmax\n";
            return kInvalidInput;
        }
        std::cout << emit_instance(gen_dc(dc_vars, dc_constraints, dc_wmin, dc_wmax, seed));
        return kOk;
    }
    if (*gen_exp_cmd) {
        std::cout << emit_instance(gen_expfamily(exp_a));
        return kOk;
    }
    if (*gen_random_cmd) {
        std::cout << emit_instance(gen_random_gainfree(rnd_m, rnd_n, seed, rnd_density));
        return kOk;
    }
    return kInvalidInput;
}
