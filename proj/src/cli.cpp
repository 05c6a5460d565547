#include "oacodes/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oacodes/codes.hpp"
#include "oacodes/construct.hpp"
#include "oacodes/quantum.hpp"
#include "oacodes/reproduce.hpp"
#include "oacodes/threads.hpp"

namespace oacodes {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const std::string& format, const json& doc, const std::string& text) {
    if (format == "json")
        out << doc.dump(2) << '\n';
    else
        out << text << '\n';
}

std::string levels_summary(const OrthogonalArray& A) {
    // run-length rendering, e.g. 4^4 2^1
    std::string s;
    int c = 0;
    while (c < A.cols) {
        int e = c;
        while (e < A.cols && A.levels[e] == A.levels[c]) ++e;
        if (!s.empty()) s += ' ';
        s += std::to_string(A.levels[c]) + "^" + std::to_string(e - c);
        c = e;
    }
    return s;
}

int write_constructed(std::ostream& out, const std::string& format, const std::string& path,
                      const OrthogonalArray& A) {
    write_oa_file(path, A);
    json doc{{"schema", "oa-codes/1"},
             {"type", "construct_report"},
             {"file", path},
             {"runs", A.runs},
             {"columns", A.cols},
             {"levels", A.levels}};
    if (A.verified_strength) doc["verified_strength"] = *A.verified_strength;
    emit(out, format, doc,
         "wrote OA(" + std::to_string(A.runs) + "," + std::to_string(A.cols) + "," + levels_summary(A) +
             (A.verified_strength ? "," + std::to_string(*A.verified_strength) : "") + ") to " + path);
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orthogonal arrays, exact verification, code classification and quantum certificates"};
    app.require_subcommand(1);

    int threads = 0;
    std::string format = "text";
    app.add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::function<int()> action;

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build an array and write it as an OA file");
    construct->require_subcommand(1);
    struct {
        int s = 0, k = 0, n = 0, m = 0, col = -1;
        std::string a, b, in, output, cert;
    } c;

    auto* ic = construct->add_subcommand("ic", "saturated strength-2 array over GF(s)");
    ic->add_option("--s", c.s, "field order")->required();
    ic->add_option("--m", c.m, "message dimension")->required();
    ic->add_option("-o,--out", c.output, "output OA file")->required();
    ic->callback([&]() {
        action = [&]() { return write_constructed(out, format, c.output, linear_oa(ic_saturated_columns(c.s, c.m))); };
    });

    auto* vdm = construct->add_subcommand("vandermonde", "strength-k moment-curve array, md = n-k+1");
    vdm->add_option("--s", c.s, "field order")->required();
    vdm->add_option("--k", c.k, "strength / dimension")->required();
    vdm->add_option("--n", c.n, "columns, k <= n <= s+1")->required();
    vdm->add_option("-o,--out", c.output, "output OA file")->required();
    vdm->callback([&]() {
        action = [&]() {
            return write_constructed(out, format, c.output, linear_oa(vandermonde_columns(c.s, c.k, c.n)));
        };
    });

    auto* rep = construct->add_subcommand("repetition", "s rows (i,i,...,i); strength 1, md = n");
    rep->add_option("--s", c.s, "level count")->required();
    rep->add_option("--n", c.n, "columns")->required();
    rep->add_option("-o,--out", c.output, "output OA file")->required();
    rep->callback([&]() { action = [&]() { return write_constructed(out, format, c.output, repetition_oa(c.s, c.n)); }; });

    auto* kron = construct->add_subcommand("kronecker", "level-wise product of two equal-width arrays");
    kron->add_option("--a", c.a, "first OA file")->required();
    kron->add_option("--b", c.b, "second OA file")->required();
    kron->add_option("-o,--out", c.output, "output OA file")->required();
    kron->callback([&]() {
        action = [&]() {
            return write_constructed(out, format, c.output, kronecker_product(read_oa_file(c.a), read_oa_file(c.b)));
        };
    });

    auto* repl = construct->add_subcommand("replace", "expansive replacement of one column by an array");
    repl->add_option("--a", c.a, "parent OA file")->required();
    repl->add_option("--col", c.col, "column to replace")->required();
    repl->add_option("--b", c.b, "replacement OA file, one row per level")->required();
    repl->add_option("-o,--out", c.output, "output OA file")->required();
    repl->callback([&]() {
        action = [&]() {
            return write_constructed(out, format, c.output,
                                     expansive_replace(read_oa_file(c.a), c.col, read_oa_file(c.b)));
        };
    });

    auto* fold = construct->add_subcommand("fold", "map one even-level column through l mod 2");
    fold->add_option("--in", c.in, "input OA file")->required();
    fold->add_option("--col", c.col, "column to fold, default last");
    fold->add_option("-o,--out", c.output, "output OA file")->required();
    fold->callback([&]() {
        action = [&]() {
            OrthogonalArray A = read_oa_file(c.in);
            const int col = c.col < 0 ? A.cols - 1 : c.col;
            return write_constructed(out, format, c.output, fold_mod2(A, col));
        };
    });

    auto* nq = construct->add_subcommand("nqmds", "((2k+1,1,k+1)) construction over s^(2k) 2^1, even s");
    nq->add_option("--s", c.s, "even level count")->required();
    nq->add_option("--k", c.k, "strength")->required();
    nq->add_option("-o,--out", c.output, "output OA file")->required();
    nq->add_option("--cert", c.cert, "also write the certificate JSON here");
    nq->callback([&]() {
        action = [&]() {
            auto [A, cert] = build_nqmds(c.s, c.k);
            write_oa_file(c.output, A);
            if (!c.cert.empty()) {
                std::ofstream cf(c.cert, std::ios::binary);
                if (!cf) throw ParseError("cannot open '" + c.cert + "' for writing");
                cf << cert.to_json().dump(2) << '\n';
            }
            json doc{{"schema", "oa-codes/1"},
                     {"type", "construct_report"},
                     {"file", c.output},
                     {"runs", A.runs},
                     {"columns", A.cols},
                     {"levels", A.levels},
                     {"certificate", cert.to_json()}};
            emit(out, format, doc,
                 "wrote OA(" + std::to_string(A.runs) + "," + std::to_string(A.cols) + "," + levels_summary(A) + "," +
                     std::to_string(c.k) + ") to " + c.output + "; certified ((" + std::to_string(cert.n) + ",1," +
                     std::to_string(cert.distance) + ")) " + cert.verdict_name());
            return 0;
        };
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "exhaustive checks on an OA file");
    verify->require_subcommand(1);
    struct {
        std::string file, partition, route = "auto";
        int t = 0, k = 0;
        int64_t budget = kDefaultPairBudget;
    } v;

    auto* vstr = verify->add_subcommand("strength", "is every t-column projection a balanced factorial?");
    vstr->add_option("file", v.file, "OA file")->required();
    vstr->add_option("--t", v.t, "strength to test")->required();
    vstr->callback([&]() {
        action = [&]() {
            OrthogonalArray A = read_oa_file(v.file);
            const std::vector<int> bad = find_strength_violation(A, v.t);
            const bool ok = bad.empty();
            json doc{{"schema", "oa-codes/1"}, {"type", "verify_report"}, {"check", "strength"}, {"t", v.t}, {"ok", ok}};
            std::string text = "strength " + std::to_string(v.t) + ": " + (ok ? "PASS" : "FAIL");
            if (!ok) {
                doc["violating_columns"] = bad;
                text += " (columns";
                for (int col : bad) text += " " + std::to_string(col);
                text += " are unbalanced)";
            }
            emit(out, format, doc, text);
            return ok ? 0 : 1;
        };
    });

    auto* vmax = verify->add_subcommand("max-strength", "largest t passing the strength check");
    vmax->add_option("file", v.file, "OA file")->required();
    vmax->callback([&]() {
        action = [&]() {
            OrthogonalArray A = read_oa_file(v.file);
            const int t = max_strength(A);
            emit(out, format,
                 json{{"schema", "oa-codes/1"}, {"type", "verify_report"}, {"check", "max_strength"}, {"t", t}},
                 "max strength: " + std::to_string(t));
            return 0;
        };
    });

    auto* vmd = verify->add_subcommand("md", "minimum Hamming distance over distinct row pairs");
    vmd->add_option("file", v.file, "OA file")->required();
    vmd->add_option("--pair-budget", v.budget, "row-pair budget for the scan")->capture_default_str();
    vmd->callback([&]() {
        action = [&]() {
            OrthogonalArray A = read_oa_file(v.file);
            const int md = min_distance(A, v.budget);
            const bool dup = has_duplicate_rows(A);
            emit(out, format,
                 json{{"schema", "oa-codes/1"},
                      {"type", "verify_report"},
                      {"check", "md"},
                      {"md", md},
                      {"duplicate_rows", dup}},
                 "md: " + std::to_string(md) + (dup ? " (duplicate rows present)" : ""));
            return 0;
        };
    });

    auto* vir = verify->add_subcommand("irredundant", "rows distinct on every (n-k)-column projection");
    vir->add_option("file", v.file, "OA file")->required();
    vir->add_option("--k", v.k, "strength k of the IrOA condition")->required();
    vir->add_option("--route", v.route, "auto|projection|distance")->check(CLI::IsMember({"auto", "projection", "distance"}));
    vir->callback([&]() {
        action = [&]() {
            OrthogonalArray A = read_oa_file(v.file);
            IrRoute route = v.route == "projection" ? IrRoute::projection
                            : v.route == "distance" ? IrRoute::distance
                                                    : IrRoute::automatic;
            const bool ok = is_irredundant(A, v.k, route);
            emit(out, format,
                 json{{"schema", "oa-codes/1"}, {"type", "verify_report"}, {"check", "irredundant"}, {"k", v.k}, {"ok", ok}},
                 "irredundant at k=" + std::to_string(v.k) + ": " + (ok ? "PASS" : "FAIL"));
            return ok ? 0 : 1;
        };
    });

    auto* vpart = verify->add_subcommand("partition", "blocks split the rows into equal strength-k0 sub-arrays");
    vpart->add_option("file", v.file, "OA file")->required();
    vpart->add_option("--partition", v.partition, "partition file")->required();
    vpart->callback([&]() {
        action = [&]() {
            OrthogonalArray A = read_oa_file(v.file);
            OrthogonalPartition P = read_partition_file(v.partition);
            const bool ok = verify_partition(A, P);
            emit(out, format,
                 json{{"schema", "oa-codes/1"},
                      {"type", "verify_report"},
                      {"check", "partition"},
                      {"blocks", P.blocks.size()},
                      {"k0", P.block_strength},
                      {"ok", ok}},
                 "partition (" + std::to_string(P.blocks.size()) + " blocks, k0=" + std::to_string(P.block_strength) +
                     "): " + (ok ? "PASS" : "FAIL"));
            return ok ? 0 : 1;
        };
    });

    // ---- classify ----
    struct {
        std::string file;
    } cl;
    auto* classify_cmd = app.add_subcommand("classify", "extract the linear code of an OA file and classify it");
    classify_cmd->add_option("file", cl.file, "OA file whose rows form a linear code")->required();
    classify_cmd->callback([&]() {
        action = [&]() {
            OrthogonalArray A = read_oa_file(cl.file);
            CodeReport r = classify(generator_from_array(A));
            emit(out, format, r.to_json(),
                 "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "]_" +
                     std::to_string(r.s) + " " + r.classification() + (r.almost_extremal ? ", almost extremal" : "") +
                     (r.self_dual ? ", self-dual" : "") + " (dual d = " + std::to_string(r.dual_d) + ")");
            return 0;
        };
    });

    // ---- certify ----
    struct {
        std::string file, partition;
        int64_t budget = kDefaultPairBudget;
    } ce;
    auto* certify_cmd = app.add_subcommand("certify", "quantum certificate from an OA file and a partition");
    certify_cmd->add_option("file", ce.file, "OA file")->required();
    certify_cmd->add_option("--partition", ce.partition, "partition file; default is the trivial partition");
    certify_cmd->add_option("--pair-budget", ce.budget, "row-pair budget for md")->capture_default_str();
    certify_cmd->callback([&]() {
        action = [&]() {
            OrthogonalArray A = read_oa_file(ce.file);
            OrthogonalPartition P =
                ce.partition.empty() ? trivial_partition(A, max_strength(A)) : read_partition_file(ce.partition);
            QuantumCertificate cert = certify_qecc(A, P, ce.budget);
            emit(out, format, cert.to_json(),
                 "((" + std::to_string(cert.n) + "," + std::to_string(cert.dimension) + "," +
                     std::to_string(cert.distance) + ")) over " + levels_summary(A) + ": " + cert.verdict_name() +
                     " (bound " + std::to_string(cert.singleton_bound) + ", md " + std::to_string(cert.array_md) +
                     ", k0 " + std::to_string(cert.partition_strength) + ")");
            return 0;
        };
    });

    // ---- reproduce ----
    struct {
        std::string target;
        bool print_report = false;
    } rp;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "rebuild a published artifact and diff the report");
    reproduce_cmd->add_option("target", rp.target, "one of: all, example1..3, table2:k1..k5")->required();
    reproduce_cmd->add_flag("--print-report", rp.print_report, "print the regenerated report instead of diffing");
    reproduce_cmd->callback([&]() {
        action = [&]() {
            std::vector<std::string> targets =
                rp.target == "all" ? reproduce_targets() : std::vector<std::string>{rp.target};
            if (rp.print_report) {
                for (const auto& t : targets) out << build_target_report(t).dump(2) << '\n';
                return 0;
            }
            int status = 0;
            for (const auto& t : targets) {
                ReproduceResult res = run_reproduce(t);
                if (format == "json") {
                    json doc{{"schema", "oa-codes/1"}, {"type", "reproduce_report"}, {"target", t}, {"ok", res.ok}};
                    if (!res.ok) {
                        doc["mismatch"] = res.mismatch;
                        doc["report"] = res.report;
                        doc["expected"] = res.expected;
                    }
                    out << doc.dump(2) << '\n';
                } else {
                    out << t << ": " << (res.ok ? "PASS" : "FAIL (" + res.mismatch + ")") << '\n';
                }
                if (!res.ok) status = 1;
            }
            return status;
        };
    });

    // let --format / --threads appear anywhere on the line
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        for (CLI::App* sub : node->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    args.insert(args.begin(), "oacodes");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    set_thread_count(threads);
    try {
        return action ? action() : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace oacodes
