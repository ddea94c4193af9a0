#pragma once

// Command-line front end. Exit codes: 0 success/feasible, 1 negative but proven (or a failed
// verification), 2 usage, 3 inconclusive, 4 table integrity.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "harbourne/criteria.hpp"
#include "harbourne/geometry.hpp"
#include "harbourne/incidence.hpp"
#include "harbourne/pipeline.hpp"
#include "harbourne/serialize.hpp"
#include "harbourne/tspace.hpp"

namespace harbourne::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kInconclusive = 3, kIntegrity = 4 };

inline constexpr int kSchemaVersion = 1;

/// "2/3 (0.666667)".
inline std::string exact_with_decimal(const BigRational& v) { return v.to_string() + " (" + v.to_decimal(6) + ")"; }

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline Json candidate_json(const CandidateStatus& st) {
    Json j;
    j["tvector"] = st.T.to_string();
    j["q"] = st.q.to_string();
    j["q_decimal"] = st.q.to_decimal(6);
    j["status"] = to_string(st.kind);
    j["criterion"] = st.kind == CandidateStatus::Kind::excluded ? st.verdict.criterion : "";
    j["detail"] = st.kind == CandidateStatus::Kind::excluded ? st.verdict.detail : st.note;
    j["nodes_explored"] = st.nodes_explored;
    j["exhausted"] = st.exhausted;
    j["witnesses"] = st.witnesses;
    j["field"] = st.field ? st.field->name() : "";
    return j;
}

inline std::string candidate_line(const CandidateStatus& st) {
    std::ostringstream os;
    os << std::left << std::setw(22) << st.T.to_string() << " q=" << std::setw(8) << st.q.to_string() << " "
       << to_string(st.kind);
    switch (st.kind) {
        case CandidateStatus::Kind::excluded: os << " [" << st.verdict.criterion << "] " << st.verdict.detail; break;
        case CandidateStatus::Kind::combinatorially_infeasible:
            os << " (exhausted after " << st.nodes_explored << " nodes)";
            break;
        case CandidateStatus::Kind::realized:
            os << " over " << (st.field ? st.field->name() : "?") << " by";
            for (const auto& w : st.witnesses) os << " " << w;
            break;
        case CandidateStatus::Kind::inconclusive: os << ": " << st.note; break;
    }
    return os.str();
}

inline void render_table_text(std::ostream& out, const std::vector<TableRow>& rows, Mode mode, bool audit) {
    out << (mode == Mode::absolute ? "Absolute linear Harbourne constants H_L(d)"
                                   : "Complex linear Harbourne constants H_L(C,d)")
        << "\n";
    std::vector<std::string> heads, values;
    for (const auto& r : rows) {
        heads.push_back(std::to_string(r.d));
        values.push_back(r.value ? r.value->to_string() : "?");
    }
    const std::string label = mode == Mode::absolute ? "H_L(d)" : "H_L(C,d)";
    std::ostringstream top, bottom;
    top << std::left << std::setw(static_cast<int>(label.size())) << "d";
    bottom << label;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int w = static_cast<int>(std::max(heads[i].size(), values[i].size()));
        top << " | " << std::right << std::setw(w) << heads[i];
        bottom << " | " << std::right << std::setw(w) << values[i];
    }
    out << top.str() << "\n" << bottom.str() << "\n\n";

    for (const auto& r : rows) {
        out << "d=" << std::left << std::setw(3) << r.d;
        if (r.value) {
            out << std::setw(24) << exact_with_decimal(*r.value) << " T*=" << std::setw(20) << r.minimizer->to_string()
                << " witness:";
            for (const auto& w : r.witnesses) out << " " << w;
        } else {
            out << "no value";
        }
        if (!r.integrity_ok) out << "  INTEGRITY FAILURE: " << r.failure;
        out << "\n";
        if (audit)
            for (const auto& st : r.audit) out << "      " << candidate_line(st) << "\n";
    }
}

inline void render_table_csv(std::ostream& out, const std::vector<TableRow>& rows, bool audit) {
    if (!audit) {
        out << "d,mode,value,decimal,tvector,witnesses,integrity_ok\n";
        for (const auto& r : rows) {
            std::string witnesses;
            for (const auto& w : r.witnesses) witnesses += (witnesses.empty() ? "" : ";") + w;
            out << r.d << "," << to_string(r.mode) << "," << (r.value ? r.value->to_string() : "") << ","
                << (r.value ? r.value->to_decimal(6) : "") << ","
                << csv_quote(r.minimizer ? r.minimizer->to_string() : "") << "," << witnesses << ","
                << (r.integrity_ok ? "true" : "false") << "\n";
        }
        return;
    }
    out << "d,mode,tvector,q,decimal,status,criterion,detail\n";
    for (const auto& r : rows)
        for (const auto& st : r.audit) {
            const bool ex = st.kind == CandidateStatus::Kind::excluded;
            out << r.d << "," << to_string(r.mode) << "," << csv_quote(st.T.to_string()) << "," << st.q << ","
                << st.q.to_decimal(6) << "," << to_string(st.kind) << "," << (ex ? st.verdict.criterion : "") << ","
                << csv_quote(ex ? st.verdict.detail : st.note) << "\n";
        }
}

inline Json table_json(const std::vector<TableRow>& rows, Mode mode, const std::vector<int>& primes) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["mode"] = to_string(mode);
    j["fields"] = primes;
    Json out_rows = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["d"] = r.d;
        row["value"] = r.value ? r.value->to_string() : "";
        row["value_decimal"] = r.value ? r.value->to_decimal(6) : "";
        row["value_mixed"] = r.value ? r.value->to_mixed() : "";
        row["tvector"] = r.minimizer ? r.minimizer->to_string() : "";
        row["witnesses"] = r.witnesses;
        row["integrity_ok"] = r.integrity_ok;
        row["failure"] = r.failure;
        Json audit = Json::array();
        for (const auto& st : r.audit) audit.push_back(candidate_json(st));
        row["audit"] = std::move(audit);
        out_rows.push_back(std::move(row));
    }
    j["rows"] = std::move(out_rows);
    return j;
}

namespace detail {

inline std::string replace_unicode_minus(std::string s) {
    const std::string minus = "−";
    for (auto pos = s.find(minus); pos != std::string::npos; pos = s.find(minus)) s.replace(pos, minus.size(), "-");
    return s;
}

/// Glues "--below X" into "--below=X" so that negative fractions are not read as flags.
inline std::vector<std::string> preprocess(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = replace_unicode_minus(argv[i]);
        if (a == "--below" && i + 1 < argc) {
            args.push_back("--below=" + replace_unicode_minus(argv[++i]));
            continue;
        }
        args.push_back(std::move(a));
    }
    return args;
}

struct UsageError : Error {
    using Error::Error;
};

inline TVector parse_tvector(int d, const std::string& text) {
    TVector T;
    try {
        T = TVector::parse(d, text);
    } catch (const Error& e) {
        throw UsageError(std::string("bad -t: ") + e.what());
    }
    if (!check_combinatorial_identity(T))
        throw UsageError("-t " + text + " violates the pair count: sum t_k*C(k,2) = " +
                         std::to_string(binomial2(d) - combinatorial_imbalance(T)) + " but C(" + std::to_string(d) +
                         ",2) = " + std::to_string(binomial2(d)) + " (imbalance " +
                         std::to_string(combinatorial_imbalance(T)) + ")");
    return T;
}

inline void check_degree(int d, std::ostream& err) {
    if (d < 2) throw UsageError("-d must be at least 2");
    if (d > kSoftMaxDegree) err << "warning: d=" << d << " is beyond the supported range 2..10\n";
}

inline int parse_field(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'f' && text[0] != 'F')) throw UsageError("--field expects fP, e.g. f3");
    int p = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw UsageError("--field expects fP, e.g. f3");
        p = p * 10 + (text[i] - '0');
        if (p > 1000) break;
    }
    if (!is_supported_prime(p)) throw UsageError("unsupported field " + text + " (supported: f2 f3 f5 f7 f11 f13)");
    return p;
}

inline std::vector<int> parse_fields(const std::string& text) {
    std::vector<int> primes;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty() && (item[0] == 'f' || item[0] == 'F')) item.erase(0, 1);
        int p = 0;
        try {
            p = std::stoi(item);
        } catch (const std::exception&) {
            throw UsageError("bad --fields entry '" + item + "'");
        }
        if (!is_supported_prime(p)) throw UsageError("unsupported prime " + item + " in --fields");
        primes.push_back(p);
    }
    return primes;
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text << "\n";
}

inline std::uint64_t resolve_budget(std::uint64_t flag) { return flag ? flag : node_budget_from_env(); }

}  // namespace detail

/// Runs one CLI invocation; `argv[0]` is the program name.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using detail::UsageError;

    CLI::App app{"Exact linear Harbourne constants of line configurations (d <= 10)", "harbourne"};
    app.require_subcommand(1);

    int d = 0;
    std::string tvec, format = "table", below, mode_name = "absolute", field_name, out_path, fields = "2,3";
    std::string builtin, export_path, cert_path;
    std::uint64_t budget = 0;
    bool audit = false, list = false;
    int max_d = 10, jobs = 1;

    auto* enumerate = app.add_subcommand("enumerate", "List all T-vectors for d lines by ascending q(T)");
    enumerate->add_option("-d", d, "Number of lines")->required();
    enumerate->add_option("--below", below, "Keep only q(T) <= this rational, e.g. -34/15");
    enumerate->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));

    auto* filter = app.add_subcommand("filter", "Run the exclusion criteria on one T-vector");
    filter->add_option("-d", d, "Number of lines")->required();
    filter->add_option("-t", tvec, "T-vector t2,...,td")->required();
    filter->add_option("--mode", mode_name, "absolute or complex")->check(CLI::IsMember({"absolute", "complex"}));
    filter->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    auto* feasible = app.add_subcommand("feasible", "Search for a clique partition of K_d with sizes T");
    feasible->add_option("-d", d, "Number of lines")->required();
    feasible->add_option("-t", tvec, "T-vector t2,...,td")->required();
    feasible->add_option("--budget", budget, "Node budget (default 1e9 or HARB_NODE_BUDGET)");
    feasible->add_option("--out", out_path, "Write the witness JSON here instead of stdout");

    auto* realize = app.add_subcommand("realize", "Search PG(2,p) for lines with T-vector T");
    realize->add_option("-d", d, "Number of lines")->required();
    realize->add_option("-t", tvec, "T-vector t2,...,td")->required();
    realize->add_option("--field", field_name, "f2, f3, f5, f7, f11 or f13")->required();
    realize->add_option("--budget", budget, "Node budget (default 1e9 or HARB_NODE_BUDGET)");
    realize->add_option("--out", out_path, "Write the certificate JSON here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Verify a certificate file or a built-in certificate");
    verify->add_option("path", cert_path, "Certificate JSON file");
    verify->add_option("--builtin", builtin, "Verify the built-in certificate with this label");
    verify->add_option("--export", export_path, "Also write the verified certificate JSON to this file");
    verify->add_flag("--list", list, "List built-in certificate labels");

    auto* table = app.add_subcommand("table", "Compute the Harbourne constant table for d = 2..N");
    table->add_option("--max-d", max_d, "Largest d (<= 10)");
    table->add_option("--mode", mode_name, "absolute or complex")->check(CLI::IsMember({"absolute", "complex"}));
    table->add_option("--fields", fields, "Primes searched in absolute mode, e.g. 2,3,5");
    table->add_flag("--audit", audit, "Append per-candidate dispositions");
    table->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    table->add_option("--budget", budget, "Node budget per search (default 1e9 or HARB_NODE_BUDGET)");
    table->add_option("--jobs", jobs, "Compute rows concurrently")->check(CLI::PositiveNumber);

    auto args = detail::preprocess(argc, argv);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    const Mode mode = mode_name == "complex" ? Mode::complex : Mode::absolute;

    try {
        if (*enumerate) {
            detail::check_degree(d, err);
            std::optional<BigRational> ceiling;
            if (!below.empty()) {
                try {
                    ceiling = BigRational::parse(below);
                } catch (const Error& e) {
                    throw UsageError(std::string("bad --below: ") + e.what());
                }
            }
            const auto list_T = enumerate_tvectors(d, ceiling);
            if (format == "json") {
                Json j;
                j["schema_version"] = kSchemaVersion;
                j["d"] = d;
                j["below"] = ceiling ? Json(ceiling->to_string()) : Json(nullptr);
                Json sols = Json::array();
                for (const auto& T : list_T) {
                    const auto q = combinatorial_quotient(T);
                    sols.push_back(Json{{"tvector", T.to_string()},
                                        {"q", q.value.to_string()},
                                        {"q_decimal", q.decimal},
                                        {"q_mixed", q.mixed}});
                }
                j["solutions"] = std::move(sols);
                out << j.dump(2) << "\n";
            } else if (format == "csv") {
                out << "tvector,q,q_decimal\n";
                for (const auto& T : list_T) {
                    const auto q = combinatorial_quotient(T);
                    out << csv_quote(T.to_string()) << "," << q.value << "," << q.decimal << "\n";
                }
            } else {
                out << "d=" << d << ": " << list_T.size() << " solution(s)";
                if (ceiling) out << " with q(T) <= " << *ceiling;
                out << "\n";
                for (const auto& T : list_T) {
                    const auto q = combinatorial_quotient(T);
                    out << std::left << std::setw(2 * d + 2) << T.to_string() << " q = "
                        << exact_with_decimal(q.value) << "\n";
                }
            }
            return kOk;
        }

        if (*filter) {
            detail::check_degree(d, err);
            const auto T = detail::parse_tvector(d, tvec);
            const auto v = apply_all(T, mode);
            if (format == "json") {
                Json j;
                j["schema_version"] = kSchemaVersion;
                j["tvector"] = T.to_string();
                j["mode"] = to_string(mode);
                j["verdict"] = to_json(v);
                out << j.dump(2) << "\n";
            } else {
                out << (v.excluded() ? "excluded" : "passed");
                if (v.excluded()) out << " by " << v.criterion << ": " << v.detail;
                out << "\n";
            }
            return v.excluded() ? kNegative : kOk;
        }

        if (*feasible) {
            detail::check_degree(d, err);
            const auto T = detail::parse_tvector(d, tvec);
            const auto res = feasible_arrangement(T, detail::resolve_budget(budget));
            err << to_string(res.result) << " after " << res.nodes_explored << " nodes"
                << (res.exhausted ? " (search exhausted)" : "") << "\n";
            if (res.feasible()) {
                detail::write_output(out_path, to_json(*res.witness).dump(), out);
                return kOk;
            }
            out << to_string(res.result) << "\n";
            return res.infeasible() ? kNegative : kInconclusive;
        }

        if (*realize) {
            detail::check_degree(d, err);
            const int p = detail::parse_field(field_name);
            const auto T = detail::parse_tvector(d, tvec);
            if (d > p * p + p + 1)
                throw UsageError("PG(2," + std::to_string(p) + ") has only " + std::to_string(p * p + p + 1) +
                                 " lines");
            const auto res = realize_over_prime_field(T, p, detail::resolve_budget(budget));
            if (res.found()) {
                auto cert = certificate_from_configuration("realized-f" + std::to_string(p) + "-d" +
                                                               std::to_string(d) + "-" + T.to_string(),
                                                           *res.configuration);
                verify_certificate(cert);
                detail::write_output(out_path, to_json(cert).dump(2), out);
                err << "found after " << res.nodes_explored << " nodes\n";
                return kOk;
            }
            if (res.exhausted) {
                out << "not found: exhausted after " << res.nodes_explored << " nodes\n";
                return kNegative;
            }
            out << "not found: budget exceeded after " << res.nodes_explored << " nodes (inconclusive)\n";
            return kInconclusive;
        }

        if (*verify) {
            if (list) {
                const auto db = builtin_certificates();
                for (const auto& e : db.entries())
                    out << std::left << std::setw(28) << e.certificate.label << " " << std::setw(5)
                        << e.certificate.field.name() << " T=" << e.report.tvector.to_string()
                        << "  H=" << exact_with_decimal(e.report.value) << "\n";
                return kOk;
            }
            if (builtin.empty() == cert_path.empty()) throw UsageError("verify needs exactly one of PATH or --builtin");
            Certificate cert;
            if (!builtin.empty()) {
                const auto db = builtin_certificates();
                const auto* e = db.find(builtin);
                if (!e) throw UsageError("no built-in certificate '" + builtin + "' (see verify --list)");
                cert = e->certificate;
            } else {
                std::ifstream f(cert_path);
                if (!f) throw UsageError("cannot open " + cert_path);
                Json j;
                try {
                    j = Json::parse(f);
                } catch (const Json::parse_error& e) {
                    err << "verification failed: /: invalid JSON: " << e.what() << "\n";
                    return kNegative;
                }
                try {
                    cert = certificate_from_json(j);
                } catch (const VerificationError& e) {
                    err << "verification failed: " << e.what() << "\n";
                    return kNegative;
                }
            }
            VerificationReport report;
            try {
                report = verify_certificate(cert);
            } catch (const VerificationError& e) {
                err << "verification failed: " << e.what() << "\n";
                return kNegative;
            }
            if (!export_path.empty()) detail::write_output(export_path, to_json(cert).dump(2), out);
            out << "label: " << cert.label << "\n"
                << "field: " << cert.field.name() << "\n"
                << "d: " << report.d << "\n"
                << "s: " << report.s << "\n"
                << "T: " << report.tvector.to_string() << "\n"
                << "H: " << exact_with_decimal(report.value) << "\n";
            return kOk;
        }

        if (*table) {
            if (max_d < 2 || max_d > kSoftMaxDegree) throw UsageError("--max-d must be in 2..10");
            const auto primes = detail::parse_fields(fields);
            const auto db = builtin_certificates();
            SearchOptions opts;
            opts.incidence_budget = opts.realization_budget = detail::resolve_budget(budget);
            const auto rows = compute_table(max_d, mode, primes, db, opts, jobs);
            if (format == "json")
                out << table_json(rows, mode, primes).dump(2) << "\n";
            else if (format == "csv")
                render_table_csv(out, rows, audit);
            else
                render_table_text(out, rows, mode, audit);
            if (const auto* bad = first_integrity_failure(rows)) {
                err << "table integrity error at d=" << bad->d << ": " << bad->failure << "\n";
                return kIntegrity;
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidDegree& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kNegative;
    }
    return kUsage;
}

}  // namespace harbourne::cli
