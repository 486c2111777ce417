#include "invsub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "invsub/json_io.hpp"
#include "invsub/verifier.hpp"

namespace invsub {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::pair<std::int64_t, int> parse_field_arg(const std::string& text) {
    const auto caret = text.find('^');
    if (caret != std::string::npos) {
        const std::int64_t p = std::stoll(text.substr(0, caret));
        const int f = std::stoi(text.substr(caret + 1));
        if (!is_prime(p) || f < 1) throw UsageError("--field " + text + ": need prime^degree");
        return {p, f};
    }
    const std::int64_t q = std::stoll(text);
    if (q < 2) throw UsageError("--field " + text + ": not a prime power");
    std::int64_t p = q;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int f = 0;
    std::int64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++f;
    }
    if (rest != 1) throw UsageError("--field " + text + ": not a prime power");
    return {p, f};
}

std::vector<std::vector<std::int64_t>> parse_basis_rows(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::stringstream rows_in(text);
    std::string row;
    while (std::getline(rows_in, row, ';')) {
        std::vector<std::int64_t> coeffs;
        std::stringstream row_in(row);
        std::string item;
        while (std::getline(row_in, item, ',')) coeffs.push_back(std::stoll(item));
        if (!coeffs.empty()) rows.push_back(std::move(coeffs));
    }
    return rows;
}

/// All prime powers p^f <= limit, ascending by order.
std::vector<std::pair<std::int64_t, int>> default_field_list(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, std::pair<std::int64_t, int>>> items;
    for (std::int64_t p = 2; static_cast<std::uint64_t>(p) <= limit; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = static_cast<std::uint64_t>(p);
        int f = 1;
        while (q <= limit) {
            items.push_back({q, {p, f}});
            if (q > limit / static_cast<std::uint64_t>(p)) break;
            q *= static_cast<std::uint64_t>(p);
            ++f;
        }
    }
    std::sort(items.begin(), items.end());
    std::vector<std::pair<std::int64_t, int>> out;
    out.reserve(items.size());
    for (auto& it : items) out.push_back(it.second);
    return out;
}

std::vector<std::shared_ptr<const FieldSpec>> resolve_fields(const RunConfig& cfg, bool default_sweep) {
    std::vector<std::shared_ptr<const FieldSpec>> specs;
    if (!cfg.modulus.empty()) {
        if (cfg.fields.size() != 1)
            throw UsageError("--modulus requires exactly one --field giving the characteristic");
        const auto [p, f] = parse_field_arg(cfg.fields[0]);
        if (static_cast<std::size_t>(f) + 1 != cfg.modulus.size())
            throw UsageError("--modulus degree does not match --field");
        specs.push_back(FieldSpec::make(p, cfg.modulus));
        return specs;
    }
    if (cfg.fields.empty()) {
        if (!default_sweep) throw UsageError("a --field is required");
        for (const auto& [p, f] : default_field_list(512)) specs.push_back(FieldSpec::make(p, f));
        return specs;
    }
    for (const std::string& text : cfg.fields) {
        const auto [p, f] = parse_field_arg(text);
        specs.push_back(FieldSpec::make(p, f));
    }
    return specs;
}

AdditiveSubgroup subgroup_from_config(const std::shared_ptr<const FieldSpec>& spec, const RunConfig& cfg) {
    if (cfg.basis.empty()) throw UsageError("--basis is required");
    std::vector<FieldElement> gens;
    for (const auto& row : parse_basis_rows(cfg.basis)) gens.push_back(spec->element(row));
    return AdditiveSubgroup::span(*spec, gens);
}

std::string csv_basis(const AdditiveSubgroup& A) {
    std::string out;
    const auto rows = A.basis_coeffs();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(rows[i][j]);
        }
    }
    return out;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void emit_error(const std::string& kind, const std::string& detail) {
    std::cerr << Json{{"error", kind}, {"detail", detail}}.dump() << "\n";
}

// ---------------------------------------------------------------- verify --

void print_report_table(std::ostream& os, const VerificationReport& r) {
    const FieldSpec& E = *r.spec;
    os << "field GF(" << E.order() << ") = GF(" << E.p() << "^" << E.f() << "), modulus";
    for (auto c : E.modulus()) os << " " << c;
    os << "\n  subspaces scanned: " << r.subspaces_scanned << "\n  inverse-closed (non-trivial): " << r.found
       << " (predicted " << r.predicted << ")\n";
    for (const auto& cs : r.inverse_closed) {
        os << "    dim " << cs.subgroup.dim() << "  " << to_string(cs.result.kind);
        if (cs.result.kind == SubgroupKind::kSubfield || cs.result.kind == SubgroupKind::kTraceZeroKernel)
            os << "(" << cs.result.r << ")";
        os << "  basis " << csv_basis(cs.subgroup) << "\n";
    }
    for (const auto& v : r.violations) os << "    VIOLATION [" << v.kind << "] " << v.detail << "\n";
}

int cmd_verify(const RunConfig& cfg) {
    const auto specs = resolve_fields(cfg, /*default_sweep=*/true);
    Output out(cfg.out_path);
    bool all_ok = true;
    if (cfg.format == "csv") out.stream() << "p,f,dim,kind,r,basis\n";
    for (const auto& spec : specs) {
        VerificationReport report = verify_theorem_finite(spec, cfg.budget, cfg.workers);
        all_ok = all_ok && report.ok();
        if (cfg.format == "json") {
            out.stream() << report_to_json(report).dump() << "\n";
        } else if (cfg.format == "csv") {
            for (const auto& cs : report.inverse_closed)
                out.stream() << spec->p() << "," << spec->f() << "," << cs.subgroup.dim() << ","
                             << to_string(cs.result.kind) << "," << cs.result.r << ",\"" << csv_basis(cs.subgroup)
                             << "\"\n";
        } else {
            print_report_table(out.stream(), report);
        }
        std::cerr << "GF(" << spec->order() << "): " << report.subspaces_scanned << " subspaces, "
                  << report.found << "/" << report.predicted << " inverse-closed, "
                  << (report.ok() ? "ok" : "VIOLATIONS") << ", " << report.wall_seconds << "s\n";
    }
    if (!all_ok) {
        emit_error("verification_failed", "census mismatch or violations; see report");
        return 1;
    }
    return 0;
}

// -------------------------------------------------------------- classify --

int cmd_classify(const RunConfig& cfg) {
    const auto specs = resolve_fields(cfg, /*default_sweep=*/false);
    if (specs.size() != 1) throw UsageError("classify expects exactly one --field");
    const AdditiveSubgroup A = subgroup_from_config(specs[0], cfg);
    const ClassificationResult cls = classify(A, cfg.budget);
    const LinearizedPolynomial fa = subspace_polynomial(A, cfg.budget);
    Output out(cfg.out_path);
    if (cfg.format == "csv") {
        out.stream() << "p,f,dim,kind,r,basis\n"
                     << specs[0]->p() << "," << specs[0]->f() << "," << A.dim() << "," << to_string(cls.kind) << ","
                     << cls.r << ",\"" << csv_basis(A) << "\"\n";
    } else if (cfg.format == "table") {
        out.stream() << "GF(" << specs[0]->order() << ") subgroup dim " << A.dim() << ": " << to_string(cls.kind);
        if (cls.kind == SubgroupKind::kSubfield || cls.kind == SubgroupKind::kTraceZeroKernel)
            out.stream() << "(" << cls.r << ")";
        out.stream() << "\n";
    } else {
        Json j{{"field", field_spec_to_json(*specs[0])},
               {"subgroup", subgroup_to_json(A)},
               {"classification", classification_to_json(cls)},
               {"subspace_polynomial", linearized_to_json(fa)},
               {"subspace_polynomial_dense", dense_poly_to_json(fa.to_dense())}};
        out.stream() << j.dump(2) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- hua --

int cmd_hua(const RunConfig& cfg) {
    Output out(cfg.out_path);
    std::uint64_t violated = 0;
    if (cfg.format == "csv") out.stream() << "target,scanned,holds,degenerate,violated\n";
    auto emit = [&](const std::string& target, const HuaTally& t) {
        violated += t.violated;
        if (cfg.format == "csv") {
            out.stream() << target << "," << t.scanned << "," << t.holds << "," << t.degenerate << ","
                         << t.violated << "\n";
        } else if (cfg.format == "table") {
            out.stream() << target << ": " << t.scanned << " pairs, " << t.holds << " hold, " << t.degenerate
                         << " degenerate, " << t.violated << " violated\n";
        } else {
            out.stream() << Json{{"target", target},
                                 {"scanned", t.scanned},
                                 {"holds", t.holds},
                                 {"degenerate", t.degenerate},
                                 {"violated", t.violated}}
                                .dump()
                         << "\n";
        }
    };
    if (cfg.rationals) {
        emit("rationals", hua_random_rationals(cfg.trials, cfg.seed));
    } else {
        const auto specs = resolve_fields(cfg, /*default_sweep=*/false);
        for (const auto& spec : specs) emit("GF(" + std::to_string(spec->order()) + ")", hua_exhaustive(*spec));
    }
    if (violated) {
        emit_error("hua_identity_violated", std::to_string(violated) + " pairs violated the identity");
        return 1;
    }
    return 0;
}

// ------------------------------------------------------------------ poly --

int cmd_poly(const RunConfig& cfg) {
    const auto specs = resolve_fields(cfg, /*default_sweep=*/false);
    if (specs.size() != 1) throw UsageError("poly expects exactly one --field");
    const AdditiveSubgroup A = subgroup_from_config(specs[0], cfg);
    const LinearizedPolynomial fa = subspace_polynomial(A, cfg.budget);
    const DensePoly<FieldElement> dense = fa.to_dense();
    std::vector<FieldElement> shifted(dense.coeffs().begin() + 1, dense.coeffs().end());
    const DensePoly<FieldElement> fa_over_x(std::move(shifted));
    const DensePoly<FieldElement> recip = reciprocal(fa_over_x);
    const bool self_recip = is_self_reciprocal(fa_over_x);

    Output out(cfg.out_path);
    if (cfg.format == "csv") {
        out.stream() << "p,f,dim,self_reciprocal,basis\n"
                     << specs[0]->p() << "," << specs[0]->f() << "," << A.dim() << "," << (self_recip ? 1 : 0)
                     << ",\"" << csv_basis(A) << "\"\n";
    } else if (cfg.format == "table") {
        out.stream() << "GF(" << specs[0]->order() << ") subgroup dim " << A.dim() << ": f_A has q-degree "
                     << fa.qdegree() << ", f_A(x)/x " << (self_recip ? "is" : "is NOT") << " self-reciprocal\n";
    } else {
        Json j{{"field", field_spec_to_json(*specs[0])},
               {"subgroup", subgroup_to_json(A)},
               {"f_A", linearized_to_json(fa)},
               {"f_A_dense", dense_poly_to_json(dense)},
               {"f_A_over_x", dense_poly_to_json(fa_over_x)},
               {"reciprocal_of_f_A_over_x", dense_poly_to_json(recip)},
               {"self_reciprocal", self_recip}};
        out.stream() << j.dump(2) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- enumerate --

int cmd_enumerate(const RunConfig& cfg) {
    const auto specs = resolve_fields(cfg, /*default_sweep=*/false);
    if (specs.size() != 1) throw UsageError("enumerate expects exactly one --field");
    const auto& spec = specs[0];
    std::vector<int> dims;
    if (cfg.dim >= 0)
        dims.push_back(cfg.dim);
    else
        for (int d = 0; d <= spec->f(); ++d) dims.push_back(d);

    Output out(cfg.out_path);
    if (cfg.format == "csv") out.stream() << "dim,basis\n";
    for (int d : dims) {
        SubgroupIterator it = enumerate_subspaces(spec, d, cfg.budget);
        while (auto A = it.next()) {
            if (cfg.format == "csv")
                out.stream() << A->dim() << ",\"" << csv_basis(*A) << "\"\n";
            else if (cfg.format == "table")
                out.stream() << "dim " << A->dim() << "  basis " << csv_basis(*A) << "\n";
            else
                out.stream() << subgroup_to_json(*A).dump() << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"inverse-closed additive subgroups of finite fields: construction, classification and exhaustive verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--field", cfg.fields, "field as p^f (e.g. 2^8) or a prime-power order (e.g. 256); repeatable")
            ->envname("INVSUB_FIELD");
        cmd->add_option("--modulus", cfg.modulus,
                        "explicit monic modulus, coefficients constant term first (c0,c1,...,1)")
            ->delimiter(',')
            ->envname("INVSUB_MODULUS");
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->envname("INVSUB_FORMAT");
        cmd->add_option("--workers", cfg.workers, "worker threads for the enumeration sweeps")
            ->envname("INVSUB_WORKERS");
        cmd->add_option("--seed", cfg.seed, "seed for randomized suites")->envname("INVSUB_SEED");
        cmd->add_option("--max-field-size", cfg.budget.max_field_size, "largest field order scanned elementwise")
            ->envname("INVSUB_MAX_FIELD_SIZE");
        cmd->add_option("--max-subspaces", cfg.budget.max_subspaces, "largest per-field subspace count enumerated")
            ->envname("INVSUB_MAX_SUBSPACES");
        cmd->add_option("--out", cfg.out_path, "write output to this file instead of stdout")
            ->envname("INVSUB_OUT");
    };

    CLI::App* verify = app.add_subcommand("verify", "enumerate and classify every subspace of the given fields "
                                                    "(default: all prime powers up to 512)");
    add_common(verify);

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a user-supplied subgroup");
    add_common(classify_cmd);
    classify_cmd->add_option("--basis", cfg.basis, "basis rows, e.g. \"1,0;0,2\"")->envname("INVSUB_BASIS");

    CLI::App* hua = app.add_subcommand("hua", "Hua identity sweep over fields (exhaustive) or rationals (random)");
    add_common(hua);
    hua->add_flag("--rationals", cfg.rationals, "run over seeded random exact rationals")
        ->envname("INVSUB_RATIONALS");
    hua->add_option("--trials", cfg.trials, "number of random rational pairs")->envname("INVSUB_TRIALS");

    CLI::App* poly = app.add_subcommand("poly", "subspace polynomial, f_A(x)/x and its reciprocal");
    add_common(poly);
    poly->add_option("--basis", cfg.basis, "basis rows, e.g. \"1,0;0,2\"")->envname("INVSUB_BASIS");

    CLI::App* enumerate = app.add_subcommand("enumerate", "stream every subspace in canonical echelon order");
    add_common(enumerate);
    enumerate->add_option("--dim", cfg.dim, "restrict to one dimension")->envname("INVSUB_DIM");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error("usage", e.what());
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(cfg);
        if (app.got_subcommand(hua)) return cmd_hua(cfg);
        if (app.got_subcommand(poly)) return cmd_poly(cfg);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg);
    } catch (const BudgetExceeded& e) {
        emit_error("budget_exceeded", e.what());
        return 3;
    } catch (const TheoremViolation& e) {
        emit_error("theorem_violation", e.what());
        return 4;
    } catch (const UsageError& e) {
        emit_error("usage", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("invalid_argument", e.what());
        return 2;
    }
    return 2;
}

}  // namespace invsub
