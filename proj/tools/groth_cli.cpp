#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "groth/harness.hpp"

namespace {

// exit codes: 0 ok/pass, 1 math precondition or verification failure,
// 2 usage, 3 internal invariant breach
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::vector<int> parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("bad partition: " + text);
        parts.push_back(std::stoi(item));
    }
    return parts;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

int run_compute(const std::string& target, const std::string& zs, const std::string& ws,
                const std::string& mus, int n, const std::string& format,
                const std::string& outpath) {
    using namespace groth;
    std::string text;
    bool json = format == "json";
    if (target == "groth") {
        MultiPoly p = grothendieck(parse_permutation(ws));
        text = json ? to_json(p) : to_text(p);
    } else if (target == "invgroth") {
        MultiPoly p = invgroth(parse_involution(zs));
        text = json ? to_json(p) : to_text(p);
    } else if (target == "ortho") {
        MultiPoly p = ortho_groth(parse_involution(zs));
        text = json ? to_json(p) : to_text(p);
    } else if (target == "symp") {
        Involution z = parse_involution(zs);
        int nn = z.max_support() + (z.max_support() % 2);
        auto [poly, exp] = symp_groth(FpfInvolution(std::max(nn, 2), z));
        if (json) {
            text = std::string("{\"poly\":") + to_json(poly) + ",\"expansion\":" + to_json(exp) + "}";
        } else {
            text = to_text(poly) + "\n= " + to_text(exp);
        }
    } else if (target == "gco") {
        GrothExpansion e = expand(ortho_groth(parse_involution(zs)));
        text = json ? to_json(e) : to_text(e);
    } else if (target == "ivex") {
        Involution z = parse_involution(zs);
        MultiPoly p = ivex_formula(z);
        if (json) {
            text = std::string("{\"poly\":") + to_json(p) +
                   ",\"shiftable\":" + shiftable_to_json(shiftable_data(z)) + "}";
        } else {
            text = to_text(p);
        }
    } else if (target == "igrass") {
        auto mu = parse_partition(mus);
        auto terms = igrass_expansion(mu, n);
        if (json) {
            std::ostringstream os;
            os << "[";
            bool first = true;
            for (const auto& t : terms) {
                if (!first) os << ",";
                first = false;
                os << "{\"lambda\":[";
                for (std::size_t i = 0; i < t.lambda.size(); ++i)
                    os << (i ? "," : "") << t.lambda[i];
                os << "],\"sign\":" << t.sign << ",\"beta_pow\":" << t.beta_pow
                   << ",\"varpi\":" << to_json(t.varpi)
                   << ",\"conjugate\":" << to_json(t.conjugate) << "}";
            }
            os << "]";
            text = os.str();
        } else {
            std::ostringstream os;
            for (const auto& t : terms) {
                os << (t.sign > 0 ? "+ " : "- ") << "b^" << t.beta_pow << " * (" << to_text(t.varpi)
                   << ") * Ghat[" << t.conjugate.str() << "]\n";
            }
            text = os.str();
        }
    } else {
        throw CLI::ValidationError("unknown compute target: " + target);
    }
    write_out(outpath, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Grothendieck, involution, orthogonal and "
                 "symplectic Grothendieck polynomials"};
    app.require_subcommand(1);

    std::string zs, ws, mus, format = "text", outpath, target, theorem, kind;
    int n = 0, n_max = 4, jobs = 1;
    bool long_run = false;

    auto* compute = app.add_subcommand("compute", "compute a single object");
    compute->add_option("target", target, "groth|invgroth|ortho|symp|gco|ivex|igrass")->required();
    compute->add_option("--z", zs, "involution, cycles \"(1,4)(2,5)\" or one-line");
    compute->add_option("--w", ws, "permutation one-line, e.g. 132 or 2,4,5,1,3");
    compute->add_option("--mu", mus, "strict partition, e.g. 3,2");
    compute->add_option("--n", n, "Grassmannian parameter n");
    compute->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", outpath, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "sweep a theorem or conjecture");
    verify->add_option("theorem", theorem, "theorem id, see --list")->required();
    verify->add_option("--n-max", n_max, "sweep bound");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* census = app.add_subcommand("census", "tables and counts");
    census->add_option("kind", kind, "values_table|equality_census|lnc_counts|wij")->required();
    census->add_option("--n", n, "size parameter")->required();
    census->add_option("--jobs", jobs, "worker threads");
    census->add_flag("--long-run", long_run, "allow the slow parameter ranges");

    auto* exportc = app.add_subcommand("export", "deterministic file exports");
    exportc->add_option("kind", kind, "binv_plus_dot|binv_plus_json|poly_json")->required();
    exportc->add_option("--z", zs, "involution input");
    exportc->add_option("--w", ws, "permutation input");
    exportc->add_option("--out", outpath, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        using namespace groth;
        if (compute->parsed()) {
            return run_compute(target, zs, ws, mus, n, format, outpath);
        }
        if (verify->parsed()) {
            SweepReport report = run_verify(theorem, n_max, jobs);
            std::cout << (format == "json" ? report_json(report) : report_text(report)) << "\n";
            return report.passed() ? kOk : kFail;
        }
        if (census->parsed()) {
            if (kind == "values_table") {
                if (n > 6 && !long_run) {
                    std::cerr << "values_table with n > 6 needs --long-run\n";
                    return kUsage;
                }
                auto values = values_table(n);
                std::cout << "n=" << n << ":";
                for (const auto& v : values) std::cout << " " << v.str();
                std::cout << "\n";
            } else if (kind == "equality_census") {
                if (n > 7 && !long_run) {
                    std::cerr << "equality_census with n > 7 needs --long-run\n";
                    return kUsage;
                }
                auto c = equality_census(n, jobs, [](long done, long total) {
                    if (done % 25 == 0 || done == total)
                        std::cerr << "progress " << done << "/" << total << "\n";
                });
                std::cout << "dominant: " << c.dominant_equal << "/" << c.dominant_total
                          << ", vexillary: " << c.vexillary_equal << "/" << c.vexillary_total
                          << "\n";
            } else if (kind == "lnc_counts") {
                auto c = lnc_counts(n);
                std::cout << "vexillary:";
                for (long v : c.vexillary) std::cout << " " << v;
                std::cout << "\nfixing_one:";
                for (long v : c.fixing_one) std::cout << " " << v;
                std::cout << "\n";
            } else if (kind == "wij") {
                // observational: conjectured support equality for w_ij
                if (n > 7 && !long_run) {
                    std::cerr << "census wij with n > 7 needs --long-run\n";
                    return kUsage;
                }
                for (const auto& row : wij_report(n, jobs)) {
                    std::cout << "w_" << row.i << "," << row.j
                              << " predicted=" << (row.predicted ? "equal" : "open")
                              << " supp==binv+:" << (row.equal ? "yes" : "no")
                              << (row.predicted == row.equal ? "" : "  <- differs") << "\n";
                }
            } else {
                std::cerr << "unknown census kind: " << kind << "\n";
                return kUsage;
            }
            return kOk;
        }
        if (exportc->parsed()) {
            if (kind == "binv_plus_dot") {
                write_out(outpath, export_binv_plus_dot(parse_involution(zs)));
            } else if (kind == "binv_plus_json") {
                write_out(outpath, export_binv_plus_json(parse_involution(zs)));
            } else if (kind == "poly_json") {
                write_out(outpath, to_json(grothendieck(parse_permutation(ws))));
            } else {
                std::cerr << "unknown export kind: " << kind << "\n";
                return kUsage;
            }
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const groth::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    } catch (const groth::InternalError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
