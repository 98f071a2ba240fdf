#include "gfh/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <system_error>

#include "CLI11.hpp"

#include "gfh/atlas.hpp"
#include "gfh/hypermap.hpp"
#include "gfh/verify.hpp"

namespace gfh::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format default_format(Command c) { return c == Command::Atlas ? Format::Json : Format::Plain; }

std::string render_classes(const Atlas& atlas, Command cmd, Format fmt) {
    switch (fmt) {
        case Format::Json: return atlas_to_json(atlas);
        case Format::Csv: return atlas_to_csv(atlas);
        case Format::Latex:
            if (cmd != Command::Equations && cmd != Command::Atlas)
                throw Error(Errc::InvalidArgument, "latex output is only available for equations and atlas");
            return atlas_to_latex(atlas);
        case Format::Plain: {
            PlainView view;
            view.orbits = cmd == Command::Orbits;
            view.fields = cmd == Command::Fields || cmd == Command::Equations || cmd == Command::Atlas;
            view.equations = cmd == Command::Equations || cmd == Command::Atlas;
            return atlas_to_plain(atlas, view);
        }
    }
    return {};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output)
        write_atomically(*cfg.output, text);
    else
        out << text;
}

int run_verify_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<GroupParams> grid;
    if (cfg.p || cfg.e || cfg.f) {
        if (!cfg.p || !cfg.e || !cfg.f) {
            err << "error: verify needs all of --p, --e, --f or none of them\n";
            return kInvalidParams;
        }
        grid.push_back(GroupParams::make(*cfg.p, *cfg.e, *cfg.f));
    } else {
        grid = default_verify_grid();
    }
    VerifyOptions opts;
    if (cfg.oracle_bound) opts.oracle_max_n = *cfg.oracle_bound;
    if (cfg.workers) opts.workers = *cfg.workers;

    std::ostringstream report;
    bool ok = true;
    std::string first_failure;
    auto line = [&](const std::string& label, const SuiteResult& r) {
        const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
        report << status << "  " << label << r.name;
        if (!r.detail.empty()) report << "  (" << r.detail << ")";
        report << '\n';
        if (!r.skipped && !r.passed) {
            ok = false;
            if (first_failure.empty()) first_failure = label + r.name;
        }
    };
    for (const auto& gp : grid) {
        const std::string label =
            "(" + std::to_string(gp.p()) + "," + std::to_string(gp.e()) + "," + std::to_string(gp.f()) + ") ";
        for (const auto& r : run_verify(gp, opts)) line(label, r);
    }
    line("", verify_r_grid());
    emit(cfg, report.str(), out);
    if (!ok) {
        err << "oracle failure in suite " << first_failure << '\n';
        return kOracleFailure;
    }
    return kOk;
}

std::string rotation_dump(const Atlas& atlas) {
    std::ostringstream os;
    for (const auto& e : atlas.entries) {
        os << "# X(" << atlas.gp.f() << ";" << e.cls.triple[0] << "," << e.cls.triple[1] << "," << e.cls.triple[2]
           << ") lift " << e.lift.u << "," << e.lift.v << "," << e.lift.w << '\n';
        const auto epi = normalized_epi(atlas.gp, static_cast<i64>(e.lift.u), static_cast<i64>(e.lift.v));
        dump_rotation_system(Dessin::build(atlas.gp, epi), os);
    }
    return os.str();
}

}  // namespace

void write_atomically(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open " + tmp.string() + " for writing");
        os << content;
        os.flush();
        if (!os) throw IoError("failed writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path);
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == Command::Verify) return run_verify_command(cfg, out, err);
        if (!cfg.p || !cfg.e || !cfg.f) {
            err << "error: --p, --e and --f are required\n";
            return kInvalidParams;
        }
        const auto gp = GroupParams::make(*cfg.p, *cfg.e, *cfg.f);
        AtlasOptions opts;
        opts.with_equations = cfg.command == Command::Equations || cfg.command == Command::Atlas;
        if (cfg.workers) opts.workers = *cfg.workers;
        const Atlas atlas = build_atlas(gp, opts);
        emit(cfg, render_classes(atlas, cfg.command, cfg.format.value_or(default_format(cfg.command))), out);
        if (cfg.dump_rotation) write_atomically(*cfg.dump_rotation, rotation_dump(atlas));
        return kOk;
    } catch (const IoError& ex) {
        err << "error: " << ex.what() << '\n';
        return kIoFailure;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return ex.code() == Errc::Internal ? kOracleFailure : kInvalidParams;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Census of regular hypermaps on K_{n,n} for odd prime powers n = p^e"};
    app.require_subcommand(1);

    RunConfig cfg;
    u64 p = 0;
    unsigned e = 0, f = 0, workers = 1;
    u64 oracle_bound = 0;
    std::string format, output, dump;

    const std::map<std::string, Format> formats{
        {"json", Format::Json}, {"csv", Format::Csv}, {"latex", Format::Latex}, {"plain", Format::Plain}};
    const std::vector<std::pair<std::string, Command>> commands{
        {"enumerate", Command::Enumerate}, {"orbits", Command::Orbits}, {"fields", Command::Fields},
        {"equations", Command::Equations}, {"verify", Command::Verify}, {"atlas", Command::Atlas}};
    const std::map<std::string, std::string> blurbs{
        {"enumerate", "list the isomorphism classes"},
        {"orbits", "group the classes into Galois orbits"},
        {"fields", "classes with fields of definition, automorphism orders and genus"},
        {"equations", "classes with explicit models (Weil quotient when 2f < e)"},
        {"verify", "run the brute-force oracle suites (default grid without --p/--e/--f)"},
        {"atlas", "write the full census as JSON"}};

    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& [name, cmd] : commands) {
        CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
        sub->add_option("--p", p, "odd prime p");
        sub->add_option("--e", e, "exponent e, n = p^e");
        sub->add_option("--f", f, "group index f, 1 <= f <= e");
        sub->add_option("--format", format, "json|csv|latex|plain")->check(CLI::IsMember({"json", "csv", "latex", "plain"}));
        sub->add_option("--output", output, "write to this file (atomically) instead of stdout");
        sub->add_option("--oracle-bound", oracle_bound, "largest n for exhaustive oracles");
        sub->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--dump-rotation", dump, "write the rotation system of every class lift to this file");
        subs.emplace_back(sub, cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return kInvalidParams;
    }

    for (const auto& [sub, cmd] : subs) {
        if (!sub->parsed()) continue;
        cfg.command = cmd;
        if (sub->count("--p")) cfg.p = p;
        if (sub->count("--e")) cfg.e = e;
        if (sub->count("--f")) cfg.f = f;
        if (sub->count("--format")) cfg.format = formats.at(format);
        if (sub->count("--output")) cfg.output = output;
        if (sub->count("--oracle-bound")) cfg.oracle_bound = oracle_bound;
        if (sub->count("--workers")) cfg.workers = workers;
        if (sub->count("--dump-rotation")) cfg.dump_rotation = dump;
    }
    return run(cfg, out, err);
}

}  // namespace gfh::cli
