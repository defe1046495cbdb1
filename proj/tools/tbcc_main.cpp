// Command line front end: characteristic-matrix inspection, trellis
// reduction search, reduction verification, dual-encoder reduction, the
// section-length bound, and TBGM expansion.
#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "tbcc/errors.hpp"
#include "tbcc/json_io.hpp"

namespace {

using namespace tbcc;

constexpr int kExitNegative = 1;  // ran fine, answer is "no"
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;  // input rejected by the library

PolyMatrix load_encoder(const std::string& octal, const std::string& poly) {
    if (!octal.empty() && !poly.empty()) {
        throw ParseError("give either --octal or --poly, not both");
    }
    if (!octal.empty()) return octal_decode(octal);
    if (!poly.empty()) return PolyMatrix::parse(poly);
    throw ParseError("an encoder is required: --octal or --poly");
}

std::string encoder_line(const PolyMatrix& g) {
    std::string out = g.to_string();
    if (g.rows() == 1) out += "  octal " + octal_encode(g);
    return out;
}

std::string int_list(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

void print_characteristic(std::ostream& os, const CharacteristicMatrix& cm) {
    SpanAnalysis analysis = analyze_spans(cm);
    os << "characteristic matrix: n0=" << cm.n0 << " k0=" << cm.k0
       << " N=" << cm.N << " (n=" << cm.n() << ", k=" << cm.k() << ")\n";
    for (std::size_t r = 0; r < cm.x.rows(); ++r) {
        os << "  " << span_to_string(cm.spans[r]) << "  "
           << cm.x.row(r).to_string() << "\n";
    }
    os << "basic spans: " << span_list_to_string(analysis.basic) << "\n";
    os << "theta=" << analysis.theta
       << "  symmetric variants=" << analysis.symmetric_count
       << "  per-block variants=" << analysis.total_count << "\n";
    os << "basic span length sum=" << analysis.ell << " (formula "
       << analysis.ell_formula << ")\n";
    os << "single-basis fast path: "
       << (cm.corollary_fast_path ? "yes" : "no")
       << "  shift repaired: " << (cm.shift_repaired ? "yes" : "no") << "\n";
}

void print_outcome(std::ostream& os, const CandidateOutcome& out) {
    os << "  [" << out.index << "] variant " << out.variant_index
       << " starts " << int_list(out.basic_starts);
    if (!out.generates) {
        os << "  does not generate the code\n";
        return;
    }
    if (!out.extractable) {
        os << "  rows are not block shifts of one encoder\n";
        return;
    }
    os << "  encoder " << out.encoder.to_string() << "  nu "
       << out.nu_selected << " -> " << out.nu_reduced << " via division "
       << int_list(out.division) << "\n";
}

void print_report(std::ostream& os, const ReductionReport& rep,
                  bool all_variants, bool partial_division) {
    os << "original: " << encoder_line(rep.original) << "  nu=" << rep.nu
       << "  N=" << rep.N << "\n";
    os << "section bound: N <= " << rep.bound.max_n
       << (rep.bound.within ? " (within)" : " (exceeded)") << "\n";
    os << "variants=" << rep.variant_count << " (theta=" << rep.theta
       << "), selections per variant=" << rep.outcomes.size() /
              std::max<std::size_t>(rep.variant_count, 1)
       << "\n";
    if (all_variants) {
        for (const CandidateOutcome& out : rep.outcomes) {
            print_outcome(os, out);
        }
    }
    if (!rep.found_valid) {
        os << "status: exhausted (no selection generates the code)\n";
        return;
    }
    os << "best: variant " << rep.best.variant_index << ", starts "
       << int_list(rep.best.basic_starts) << ", encoder "
       << rep.best.encoder.to_string() << "\n";
    if (partial_division) {
        os << "division exploration for " << rep.best.encoder.to_string()
           << ":\n";
        for (const DivisionOption& opt : rep.best.sweep) {
            os << "  p=" << int_list(opt.division) << "  nu=" << opt.nu
               << (opt.division == rep.best.division ? "  <- chosen" : "")
               << "\n";
        }
    }
    os << "division " << int_list(rep.best.division) << ", shifts "
       << int_list(rep.best.shifts) << ", reduced encoder "
       << encoder_line(rep.best.reduced) << "\n";
    os << "status: " << (rep.reduced ? "reduced" : "exhausted") << " (nu "
       << rep.nu << " -> " << rep.best.nu_reduced
       << "), verification: " << rep.verification << "\n";
}

void print_simultaneous(std::ostream& os, const SimultaneousReport& rep) {
    os << "simultaneous reduction: nu " << rep.nu_before << " -> "
       << rep.nu_after << ", shifts " << int_list(rep.shifts) << "\n";
    for (const SimultaneousStep& st : rep.trace) {
        os << "  " << st.op;
        if (!st.detail.empty()) os << " (" << st.detail << ")";
        os << ": G = " << st.g.to_string() << "  H = " << st.h.to_string()
           << "\n";
    }
    os << "  final: G = " << rep.g_out.to_string()
       << "  H = " << rep.h_out.to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tail-biting convolutional code trellis tools"};
    app.require_subcommand(1);

    std::string octal, poly;
    int N = 0;
    bool as_json = false;
    int jobs = 1;
    bool force = false;
    bool all_variants = false;
    bool partial_division = false;
    bool full_mode = false;

    auto add_encoder_opts = [&](CLI::App* cmd, bool need_n) {
        cmd->add_option("--octal", octal,
                        "single-row encoder as an octal tuple, e.g. (7,5)");
        cmd->add_option("--poly", poly,
                        "encoder rows 'a,b;c,d' with entries like 1+D+D^2");
        auto* n_opt = cmd->add_option("-N,--sections", N,
                                      "number of tail-biting sections");
        if (need_n) n_opt->required();
    };

    CLI::App* characteristic =
        app.add_subcommand("characteristic",
                           "compute the characteristic matrix and its spans");
    add_encoder_opts(characteristic, true);
    characteristic->add_flag("--json", as_json, "emit JSON");
    characteristic->add_flag("--enumerate", all_variants,
                             "list every variant matrix");
    characteristic->add_flag("--full", full_mode,
                             "vary blocks independently when enumerating");

    CLI::App* reduce =
        app.add_subcommand("reduce", "search for a reduced encoder");
    add_encoder_opts(reduce, true);
    reduce->add_flag("--json", as_json, "emit JSON");
    reduce->add_flag("--all-variants", all_variants,
                     "report every candidate, not only the best");
    reduce->add_flag("--partial-division", partial_division,
                     "print the column-division exploration table");
    reduce->add_option("--jobs", jobs, "worker threads for the search");
    reduce->add_flag("--force", force, "proceed past a non-canonical input");
    bool simultaneous = false;
    reduce->add_flag("--simultaneous", simultaneous,
                     "also reduce generator and check matrix together");

    CLI::App* verify = app.add_subcommand(
        "verify", "check a reduced encoder against the original by "
                  "enumerating both codes");
    std::string reduced_octal, reduced_poly, shift_text;
    add_encoder_opts(verify, true);
    verify->add_option("--reduced-octal", reduced_octal,
                       "reduced encoder, octal tuple");
    verify->add_option("--reduced-poly", reduced_poly,
                       "reduced encoder, polynomial rows");
    verify
        ->add_option("--shifts", shift_text,
                     "per-position branch shifts, e.g. -2,0")
        ->required();

    CLI::App* dual = app.add_subcommand(
        "dual", "reduce through the dual-code encoder (high-rate route)");
    add_encoder_opts(dual, true);
    dual->add_flag("--json", as_json, "emit JSON");
    dual->add_flag("--all-variants", all_variants,
                   "report every dual-side candidate");
    dual->add_option("--jobs", jobs, "worker threads for the search");
    dual->add_flag("--force", force, "proceed past a non-canonical input");
    bool dual_simultaneous = false;
    dual->add_flag("--simultaneous", dual_simultaneous,
                   "follow up with simultaneous generator/check reduction");

    CLI::App* bound = app.add_subcommand(
        "bound", "section-length criterion for plausible reduction");
    add_encoder_opts(bound, false);
    int bound_n0 = 0, bound_k0 = 0, bound_nu = -1;
    bound->add_option("--n0", bound_n0, "output symbols per section");
    bound->add_option("--k0", bound_k0, "input symbols per section");
    bound->add_option("--nu", bound_nu, "constraint length");

    CLI::App* expand = app.add_subcommand(
        "expand", "print the scalar tail-biting generator matrix");
    add_encoder_opts(expand, true);
    bool with_trellis = false, with_profile = false;
    expand->add_flag("--trellis", with_trellis,
                     "emit the tail-biting trellis as JSON");
    expand->add_flag("--profile", with_profile,
                     "print the state-space profile of one module");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        VariantMode mode = full_mode ? VariantMode::kFull
                                     : VariantMode::kShiftSymmetric;
        if (*characteristic) {
            PolyMatrix g = load_encoder(octal, poly);
            CharacteristicMatrix cm = assemble_characteristic(g, N);
            if (as_json) {
                std::cout << characteristic_to_json(cm) << "\n";
            } else {
                print_characteristic(std::cout, cm);
            }
            if (all_variants) {
                std::vector<CharacteristicMatrix> variants =
                    enumerate_variants(cm, mode);
                Tbgm tb = build_tbgm(g, N);
                for (std::size_t v = 0; v < variants.size(); ++v) {
                    CharacteristicCheck check =
                        verify_characteristic(variants[v], tb.m);
                    std::cout << "variant " << v
                              << (check.ok() ? " (valid)" : " (invalid)")
                              << "\n";
                    for (std::size_t r = 0; r < variants[v].x.rows(); ++r) {
                        std::cout << "  "
                                  << span_to_string(variants[v].spans[r])
                                  << "  "
                                  << variants[v].x.row(r).to_string() << "\n";
                    }
                }
            }
            return 0;
        }
        if (*reduce) {
            PolyMatrix g = load_encoder(octal, poly);
            ReductionReport rep =
                search_reduction(g, N, VariantMode::kShiftSymmetric, jobs,
                                 force);
            bool high_rate = 2 * g.rows() > g.cols();
            if (as_json) {
                std::cout << reduction_report_to_json(rep, all_variants)
                          << "\n";
            } else {
                print_report(std::cout, rep, all_variants, partial_division);
            }
            bool any_reduced = rep.reduced;
            if (high_rate) {
                DualReport dual_rep =
                    dual_procedure(g, N, VariantMode::kShiftSymmetric, jobs,
                                   force);
                any_reduced = any_reduced || dual_rep.search.reduced;
                if (as_json) {
                    std::cout << dual_report_to_json(dual_rep, all_variants)
                              << "\n";
                } else {
                    std::cout << "dual route (rate above 1/2):\n";
                    std::cout << "check matrix: "
                              << dual_rep.check.to_string() << "\n";
                    std::cout << "dual encoder: "
                              << dual_rep.reciprocal.to_string() << "\n";
                    print_report(std::cout, dual_rep.search, all_variants,
                                 partial_division);
                    if (dual_rep.valid) {
                        std::cout << "reduced check matrix: "
                                  << dual_rep.reduced_check.to_string()
                                  << "\n";
                    }
                    if (simultaneous && dual_rep.valid &&
                        rep.found_valid) {
                        SimultaneousReport sim = simultaneous_reduce(
                            rep.best.encoder, dual_rep.reduced_check, N);
                        print_simultaneous(std::cout, sim);
                        any_reduced =
                            any_reduced || sim.nu_after < sim.nu_before;
                    }
                }
            } else if (simultaneous && rep.found_valid) {
                PolyMatrix h = compute_check_matrix(rep.best.encoder);
                SimultaneousReport sim =
                    simultaneous_reduce(rep.best.encoder, h, N);
                if (as_json) {
                    std::cout << simultaneous_report_to_json(sim) << "\n";
                } else {
                    print_simultaneous(std::cout, sim);
                }
                any_reduced = any_reduced || sim.nu_after < sim.nu_before;
            }
            return any_reduced ? 0 : kExitNegative;
        }
        if (*verify) {
            PolyMatrix g = load_encoder(octal, poly);
            PolyMatrix r = load_encoder(reduced_octal, reduced_poly);
            std::vector<int> shifts;
            std::string token;
            for (char c : shift_text + ",") {
                if (c == ',') {
                    if (!token.empty()) shifts.push_back(std::stoi(token));
                    token.clear();
                } else if (!isspace(static_cast<unsigned char>(c))) {
                    token += c;
                }
            }
            CodeSet original = enumerate_code(build_tbgm(g, N).m);
            CodeSet shifted = shift_code(original, g.cols(), shifts);
            CodeSet reduced_code = enumerate_code(build_tbgm(r, N).m);
            bool pass = codes_equal(shifted, reduced_code);
            std::cout << (pass ? "pass" : "fail") << ": " << original.size()
                      << " codewords compared\n";
            return pass ? 0 : kExitNegative;
        }
        if (*dual) {
            PolyMatrix g = load_encoder(octal, poly);
            DualReport rep = dual_procedure(
                g, N, VariantMode::kShiftSymmetric, jobs, force);
            if (as_json) {
                std::cout << dual_report_to_json(rep, all_variants) << "\n";
            } else {
                std::cout << "check matrix: " << rep.check.to_string()
                          << "\n";
                std::cout << "dual encoder: " << rep.reciprocal.to_string()
                          << "\n";
                print_report(std::cout, rep.search, all_variants, false);
                if (rep.valid) {
                    std::cout << "reduced check matrix: "
                              << rep.reduced_check.to_string() << "\n";
                }
            }
            if (dual_simultaneous && rep.valid) {
                ReductionReport primal = search_reduction(
                    g, N, VariantMode::kShiftSymmetric, jobs, force);
                if (primal.found_valid) {
                    SimultaneousReport sim = simultaneous_reduce(
                        primal.best.encoder, rep.reduced_check, N);
                    if (as_json) {
                        std::cout << simultaneous_report_to_json(sim) << "\n";
                    } else {
                        print_simultaneous(std::cout, sim);
                    }
                }
            }
            return rep.search.reduced ? 0 : kExitNegative;
        }
        if (*bound) {
            int n0 = bound_n0, k0 = bound_k0, nu = bound_nu;
            if (!octal.empty() || !poly.empty()) {
                PolyMatrix g = load_encoder(octal, poly);
                n0 = g.cols();
                k0 = g.rows();
                nu = metrics(g).nu;
            }
            if (n0 <= 0 || k0 <= 0 || nu < 0) {
                throw ParseError(
                    "bound needs an encoder or --n0/--k0/--nu values");
            }
            SectionBound b = section_bound(n0, k0, nu, N > 0 ? N : 1);
            std::cout << "rate " << k0 << "/" << n0 << ", nu=" << nu
                      << ": reduction plausible for N <= " << b.max_n << "\n";
            if (N > 0) {
                std::cout << "N=" << N << " is "
                          << (b.within ? "within" : "beyond")
                          << " the bound\n";
                return b.within ? 0 : kExitNegative;
            }
            return 0;
        }
        if (*expand) {
            PolyMatrix g = load_encoder(octal, poly);
            Tbgm tb = build_tbgm(g, N);
            if (with_trellis) {
                std::cout << trellis_to_json(build_tb_trellis(g, N)) << "\n";
                return 0;
            }
            SpanList spans = natural_spans(tb);
            for (std::size_t r = 0; r < tb.m.rows(); ++r) {
                std::cout << "  " << span_to_string(spans[r]) << "  "
                          << tb.m.row(r).to_string() << "\n";
            }
            if (tbgm_rank_deficient(tb)) {
                std::cout << "warning: rows are linearly dependent at N="
                          << N << "\n";
            }
            if (with_profile) {
                std::vector<int> profile = state_profile(g);
                std::cout << "module state profile: " << int_list(profile)
                          << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
