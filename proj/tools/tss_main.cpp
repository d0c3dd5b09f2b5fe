// tss - construct and verify certificates for finite sequences of integers
// that are sums of two squares.
#include "tss/certificate.hpp"
#include "tss/errors.hpp"
#include "tss/families.hpp"
#include "tss/littlewood.hpp"
#include "tss/pell.hpp"
#include "tss/two_squares.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

struct Options {
    bool json = false;
    bool quiet = false;
};

tss::Int parse_int_arg(const std::string& text, const std::string& name) {
    try {
        return tss::Int(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError(name, "'" + text + "' is not an integer");
    }
}

std::uint64_t factor_budget() {
    if (const char* env = std::getenv("TSS_FACTOR_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed TSS_FACTOR_BUDGET\n";
        }
    }
    return tss::kDefaultFactorBudget;
}

// Verify, then print. Exit 1 if the construction produced anything invalid.
int emit_certificate(const tss::SequenceCertificate& cert, const Options& opt,
                     bool streaming = false) {
    tss::VerifyResult check = tss::verify_certificate(cert);
    if (!check.ok) {
        std::cerr << "internal verification failure: " << check.reason << "\n";
        return kExitVerifyFailed;
    }
    if (opt.json) {
        std::cout << tss::serialize_certificate(cert, /*pretty=*/!streaming) << "\n";
    } else if (!opt.quiet) {
        std::cout << tss::format_certificate(cert);
        if (streaming) std::cout << "\n";
    }
    return kExitOk;
}

int run_check(const std::string& n_text, bool decompose, const Options& opt) {
    tss::Int n;
    try {
        n = tss::parse_decimal(n_text);
    } catch (const std::exception&) {
        std::cerr << "error: '" << n_text << "' is not a nonnegative decimal integer\n";
        return kExitUsage;
    }
    if (n < 0) {
        std::cerr << "error: n must be nonnegative\n";
        return kExitUsage;
    }
    try {
        std::uint64_t budget = factor_budget();
        bool yes = tss::is_sum_of_two_squares(n, budget);
        if (opt.json) {
            nlohmann::ordered_json doc;
            doc["n"] = tss::to_decimal(n);
            doc["sum_of_two_squares"] = yes;
            if (decompose) {
                nlohmann::ordered_json reps = nlohmann::ordered_json::array();
                for (const tss::TwoSquareRep& rep : tss::two_square_decompositions(n, budget))
                    reps.push_back({tss::to_decimal(rep.a), tss::to_decimal(rep.b)});
                doc["decompositions"] = std::move(reps);
            }
            std::cout << doc.dump(2) << "\n";
        } else if (!opt.quiet) {
            std::cout << n << (yes ? " is a sum of two squares\n"
                                   : " is not a sum of two squares\n");
            if (decompose && yes) {
                for (const tss::TwoSquareRep& rep : tss::two_square_decompositions(n, budget))
                    std::cout << "  " << n << " = " << rep.a << "^2 + " << rep.b << "^2\n";
            }
        }
        return kExitOk;
    } catch (const tss::FactorizationTimeout& e) {
        std::cerr << "error: factorization timed out (" << e.what()
                  << "); for certified values use verify-cert, which needs no factorization\n";
        return kExitTimeout;
    }
}

int run_verify_cert(const std::string& path, const Options& opt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    tss::SequenceCertificate cert;
    try {
        cert = tss::parse_certificate(buffer.str());
    } catch (const tss::MalformedDocument& e) {
        std::cerr << "malformed certificate document: " << e.what() << "\n";
        return kExitUsage;
    }
    tss::VerifyResult check = tss::verify_certificate(cert);
    if (!check.ok) {
        if (!opt.quiet) std::cout << "FAIL: " << check.reason << "\n";
        return kExitVerifyFailed;
    }
    if (!opt.quiet) {
        std::cout << "OK: " << cert.method << " certificate, n = " << cert.n << ", "
                  << cert.terms.size() << " terms verified\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite sequences of integers expressible as sums of two squares:\n"
                 "constructions with exact, independently checkable certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    // --h is a real option on `triple`, so help must not claim -h
    app.set_help_flag("--help", "print help");

    Options opt;
    app.add_flag("--json", opt.json, "emit machine-readable JSON");
    app.add_flag("--quiet", opt.quiet, "suppress human-readable output");

    std::string h_text, k_text, p_text = "0", q_text = "0", r_text = "0", m_text = "0";
    std::string n_text, cert_path;
    std::size_t count = 1;
    bool decompose = false;

    CLI::App* triple = app.add_subcommand(
        "triple", "n, n+h, n+k all sums of two squares, from parameters (p,q,r)");
    triple->add_option("--h", h_text, "first offset h (nonzero, != k)")->required();
    triple->add_option("--k", k_text, "second offset k (nonzero, != h)")->required();
    triple->add_option("--p", p_text, "free parameter p");
    triple->add_option("--q", q_text, "free parameter q");
    triple->add_option("--r", r_text, "free parameter r");
    bool strip_squares = false;
    triple->add_flag("--strip-squares", strip_squares,
                     "strip the largest common square divisor of (h,k) first");

    CLI::App* consecutive = app.add_subcommand(
        "consecutive", "three consecutive integers n-1, n, n+1, all sums of two squares");
    consecutive->add_option("--p", p_text, "free parameter p");
    consecutive->add_option("--q", q_text, "free parameter q");
    consecutive->add_option("--r", r_text, "free parameter r");

    CLI::App* quad =
        app.add_subcommand("quad", "n, n+1, n+2, n+4 all sums of two squares, n = x^2");
    quad->add_option("--m", m_text, "free parameter m");
    quad->add_option("--r", r_text, "free parameter r");

    CLI::App* quint = app.add_subcommand(
        "quint", "n, n+1, n+2, n+4, n+5 all sums of two nonzero squares (Pell-generated)");
    quint->add_option("--count", count, "number of certificates")->check(CLI::PositiveNumber);

    CLI::App* ap16 = app.add_subcommand(
        "ap16", "progression n, n+4, ..., n+16 all sums of two nonzero squares");
    ap16->add_option("--count", count, "number of certificates")->check(CLI::PositiveNumber);

    CLI::App* check = app.add_subcommand("check", "test whether n is a sum of two squares");
    check->add_option("n", n_text, "nonnegative integer (decimal)")->required();
    check->add_flag("--decompose", decompose, "list all representations");

    CLI::App* verify = app.add_subcommand("verify-cert",
                                          "verify a certificate document by exact arithmetic");
    verify->add_option("path", cert_path, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (triple->parsed()) {
            return emit_certificate(
                tss::littlewood::construct(
                    parse_int_arg(h_text, "--h"), parse_int_arg(k_text, "--k"),
                    parse_int_arg(p_text, "--p"), parse_int_arg(q_text, "--q"),
                    parse_int_arg(r_text, "--r"), strip_squares),
                opt);
        }
        if (consecutive->parsed()) {
            return emit_certificate(
                tss::families::consecutive_triple(parse_int_arg(p_text, "--p"),
                                                  parse_int_arg(q_text, "--q"),
                                                  parse_int_arg(r_text, "--r")),
                opt);
        }
        if (quad->parsed()) {
            return emit_certificate(tss::families::quad_n124(parse_int_arg(m_text, "--m"),
                                                             parse_int_arg(r_text, "--r")),
                                    opt);
        }
        if (quint->parsed()) {
            for (const tss::SequenceCertificate& cert : tss::pell::quint_certificates(count)) {
                if (int rc = emit_certificate(cert, opt, /*streaming=*/true)) return rc;
            }
            return kExitOk;
        }
        if (ap16->parsed()) {
            for (const tss::SequenceCertificate& cert : tss::pell::ap_certificates(count)) {
                if (int rc = emit_certificate(cert, opt, /*streaming=*/true)) return rc;
            }
            return kExitOk;
        }
        if (check->parsed()) return run_check(n_text, decompose, opt);
        if (verify->parsed()) return run_verify_cert(cert_path, opt);
    } catch (const tss::DegenerateOffsets& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tss::SingularParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tss::FactorizationTimeout& e) {
        std::cerr << "error: factorization timed out: " << e.what() << "\n";
        return kExitTimeout;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tss::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
