// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: structure-constant presentations in, axiom
// reports, duals, base changes and diamond algebras out.
//
// Exit codes: 0 all checks pass, 1 a check fails (report on stdout),
// 2 usage or parse error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ihopf/axioms.hpp"
#include "ihopf/base_change.hpp"
#include "ihopf/catalog.hpp"
#include "ihopf/duality.hpp"
#include "ihopf/ihopf.hpp"
#include "ihopf/serialize.hpp"

using namespace ihopf;

namespace {

bool use_color() {
    const char* v = std::getenv("IHOPF_COLOR");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void print_report(const AxiomReport& r) {
    std::string line = r.to_line();
    if (use_color()) {
        const char* code = r.holds ? "\033[32m" : "\033[31m";
        std::cout << code << line << "\033[0m\n";
    } else {
        std::cout << line << '\n';
    }
}

PresentationFile load_or_exit(const std::string& path) {
    try {
        return load(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::exit(2);
    }
}

void emit(const PresentationFile& f, const std::string& out_path) {
    if (out_path.empty())
        std::cout << serialize(f);
    else
        save(f, out_path);
}

FieldSpec parse_field_arg(const std::string& s) {
    if (s == "rational") return FieldSpec::rationals();
    if (s.rfind("prime:", 0) == 0) return FieldSpec::prime_field(std::stoull(s.substr(6)));
    if (s.rfind("cyclotomic:", 0) == 0)
        return FieldSpec::cyclotomic(static_cast<unsigned>(std::stoul(s.substr(11))));
    throw DomainError("bad field '" + s + "': use rational, prime:<p> or cyclotomic:<n>");
}

// scalar lists: semicolon-separated; comma-separated accepted when no
// semicolon occurs (cyclotomic scalar texts contain commas)
std::vector<Scalar> parse_scalar_list(const FieldSpec& f, const std::string& s) {
    char sep = s.find(';') != std::string::npos ? ';' : ',';
    std::vector<Scalar> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        std::string piece =
            next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        out.push_back(Scalar::parse(f, piece));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

AbelianGroupSpec parse_group_arg(const std::string& s) {
    AbelianGroupSpec g;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find('x', pos);
        std::string piece = next == std::string::npos ? s.substr(pos) : s.substr(pos, next - pos);
        unsigned long v = std::strtoul(piece.c_str(), nullptr, 10);
        if (v == 0) throw DomainError("bad group spec '" + s + "': use e.g. 4 or 2x2");
        g.cyclic_factors.push_back(static_cast<unsigned>(v));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return g;
}

int run_checks(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports) print_report(r);
    return all_hold(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant computations for bialgebras, self-dual Hopf algebras "
                 "and their diamond algebras"};
    app.require_subcommand(1);

    std::string in_path, out_path, matrix_path, witness_name = "selfdual";
    std::string element_arg, scaled_arg, field_arg;
    int jobs = 1;
    unsigned order = 0;
    bool simple_flag = false;

    auto* check = app.add_subcommand("check", "run every axiom check on a presentation file");
    check->add_option("file", in_path)->required();
    check->add_option("--jobs", jobs, "worker threads for the heavy verifiers (default 1)");

    auto* dual = app.add_subcommand("dual", "emit the dual presentation");
    dual->add_option("file", in_path)->required();
    dual->add_option("-o,--output", out_path, "output file (stdout when omitted)");

    auto* basechange = app.add_subcommand("basechange", "transport a presentation to a new basis");
    basechange->add_option("file", in_path)->required();
    basechange->add_option("--matrix", matrix_path, "matrix file with the transition matrix")
        ->required();
    basechange->add_option("-o,--output", out_path);

    auto* selfdual =
        app.add_subcommand("selfdual", "verify a named witness against both isomorphism checks");
    selfdual->add_option("file", in_path)->required();
    selfdual->add_option("--witness", witness_name, "witness key in the file (default 'selfdual')");

    auto* ihopf_cmd =
        app.add_subcommand("ihopf", "construct the diamond algebra of a presentation");
    ihopf_cmd->add_option("file", in_path)->required();
    ihopf_cmd->add_option("--witness", witness_name);
    ihopf_cmd->add_flag("--simple", simple_flag, "use the F = G construction");
    ihopf_cmd->add_option("--scaled", scaled_arg,
                          "scaling vector a1;...;an for the scaled construction");
    ihopf_cmd->add_option("-o,--output", out_path, "write the diamond algebra file here");
    ihopf_cmd->add_option("--jobs", jobs);

    auto* witness_iso = app.add_subcommand(
        "witness-iso", "certify a cyclic generator of a diamond algebra file");
    witness_iso->add_option("file", in_path)->required();
    witness_iso->add_option("--element", element_arg, "coordinates, semicolon-separated")
        ->required();
    witness_iso->add_option("--order", order, "expected cyclic order (= dimension)")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "emit a built-in family, or list them");
    std::vector<std::string> catalog_args;
    catalog_cmd->add_option("family", catalog_args,
                            "list | group <spec> | taft <n> | tensordual-group <spec> | "
                            "tensordual-taft <n>");
    catalog_cmd->add_option("--field", field_arg, "rational | prime:<p> | cyclotomic:<n>");
    catalog_cmd->add_option("-o,--output", out_path);

    auto* table = app.add_subcommand("table", "render the multiplication table of a file");
    table->add_option("file", in_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            PresentationFile f = load_or_exit(in_path);
            if (f.kind == FileKind::presentation)
                return run_checks(verify_all(f.to_presentation(), jobs));
            if (f.kind == FileKind::ialgebra) {
                IAlgebra I = f.to_ialgebra();
                std::vector<AxiomReport> reports;
                reports.push_back(verify_associativity(I.iF, jobs));
                reports.push_back(verify_unit(I.iF, I.lambda));
                return run_checks(reports);
            }
            std::cerr << "error: matrix files have nothing to check\n";
            return 2;
        }

        if (dual->parsed()) {
            PresentationFile f = load_or_exit(in_path);
            BialgebraPresentation D = dualize(f.to_presentation());
            emit(make_file(D, {}, f.note ? "dual of: " + *f.note : "dual"), out_path);
            return 0;
        }

        if (basechange->parsed()) {
            PresentationFile f = load_or_exit(in_path);
            PresentationFile m = load_or_exit(matrix_path);
            if (m.kind != FileKind::matrix) {
                std::cerr << "error: --matrix wants a matrix file\n";
                return 2;
            }
            if (m.field != f.field || m.dim != f.dim) {
                std::cerr << "error: matrix file field/dim does not match the presentation\n";
                return 2;
            }
            BialgebraPresentation out =
                transform_presentation(f.to_presentation(), TransitionData{*m.matrix});
            emit(make_file(out, {}, "base change"), out_path);
            return 0;
        }

        if (selfdual->parsed()) {
            PresentationFile f = load_or_exit(in_path);
            BialgebraPresentation P = f.to_presentation();
            auto it = f.witnesses.find(witness_name);
            if (it == f.witnesses.end()) {
                std::cerr << "error: no witness named \"" << witness_name << "\" in " << in_path
                          << '\n';
                return 2;
            }
            DualityWitness W{it->second};
            bool sym = is_symmetric(W);
            std::cout << (sym ? "PASS" : "FAIL") << " witness_symmetric\n";
            AxiomReport a = verify_selfdual_algebra(P, W);
            AxiomReport c = verify_selfdual_coalgebra(P, W);
            print_report(a);
            print_report(c);
            if (auto anti = verify_selfdual_antipode(P, W)) print_report(*anti);
            return (sym && a.holds && c.holds) ? 0 : 1;
        }

        if (ihopf_cmd->parsed()) {
            PresentationFile f = load_or_exit(in_path);
            BialgebraPresentation P = f.to_presentation();
            int modes = int(simple_flag) + int(!scaled_arg.empty()) +
                        int(ihopf_cmd->count("--witness") > 0);
            if (modes != 1) {
                std::cerr << "error: pick exactly one of --simple, --scaled, --witness\n";
                return 2;
            }
            std::vector<Scalar> scaling;
            if (!scaled_arg.empty()) scaling = parse_scalar_list(P.field, scaled_arg);
            IAlgebra I;
            try {
                if (simple_flag) {
                    I = i_construct_simple(P, jobs);
                } else if (!scaled_arg.empty()) {
                    I = i_construct_scaled(P, scaling, jobs);
                } else {
                    auto it = f.witnesses.find(witness_name);
                    if (it == f.witnesses.end()) {
                        std::cerr << "error: no witness named \"" << witness_name << "\" in "
                                  << in_path << '\n';
                        return 2;
                    }
                    I = i_construct_general(P, DualityWitness{it->second}, jobs);
                }
            } catch (const DomainError& e) {
                std::cout << "FAIL construction: " << e.what() << '\n';
                return 1;
            }
            std::cout << render_table(I.iF, I.basis_labels);
            if (!out_path.empty()) save(make_file(I), out_path);
            return 0;
        }

        if (witness_iso->parsed()) {
            PresentationFile f = load_or_exit(in_path);
            if (f.kind != FileKind::ialgebra) {
                std::cerr << "error: witness-iso wants a diamond algebra file (kind ialgebra)\n";
                return 2;
            }
            IAlgebra I = f.to_ialgebra();
            Element x{parse_scalar_list(I.field, element_arg)};
            if (x.coords.size() != I.dim) {
                std::cerr << "error: element has " << x.coords.size() << " coordinates, want "
                          << I.dim << '\n';
                return 2;
            }
            AxiomReport r = verify_cyclic_witness(I, x, order);
            print_report(r);
            return r.holds ? 0 : 1;
        }

        if (catalog_cmd->parsed()) {
            if (catalog_args.empty() || catalog_args[0] == "list") {
                std::cout << "group <n1>x<n2>x...   abelian group algebra, character witness "
                             "when the field has the roots\n"
                          << "taft <n>              Taft algebra H_n(q), dim n^2; explicit "
                             "witness for n = 2\n"
                          << "tensordual-group <s>  group algebra tensored with its dual\n"
                          << "tensordual-taft <n>   Taft algebra tensored with its dual\n";
                return 0;
            }
            if (catalog_args.size() != 2) {
                std::cerr << "error: catalog wants a family and one parameter\n";
                return 2;
            }
            const std::string& family = catalog_args[0];
            const std::string& param = catalog_args[1];
            bool tensordual = family.rfind("tensordual-", 0) == 0;
            std::string base = tensordual ? family.substr(11) : family;

            BialgebraPresentation P;
            std::map<std::string, Matrix> witnesses;
            std::string note;
            if (base == "group") {
                AbelianGroupSpec g = parse_group_arg(param);
                FieldSpec fld = !field_arg.empty() ? parse_field_arg(field_arg)
                                : g.exponent() <= 2 ? FieldSpec::rationals()
                                                    : FieldSpec::cyclotomic(g.exponent());
                P = group_algebra(g, fld);
                try {
                    witnesses.emplace("selfdual", group_selfdual_witness(g, fld).S);
                } catch (const DomainError&) {
                    // field lacks the roots of unity; ship the algebra without a witness
                }
                note = "catalog: group " + param + " over " + fld.to_string();
            } else if (base == "taft") {
                unsigned n = static_cast<unsigned>(std::strtoul(param.c_str(), nullptr, 10));
                FieldSpec fld = !field_arg.empty() ? parse_field_arg(field_arg)
                                : n == 2           ? FieldSpec::rationals()
                                                   : FieldSpec::cyclotomic(n);
                P = taft(n, fld);
                if (n == 2) witnesses.emplace("selfdual", taft2_witness(fld).S);
                note = "catalog: taft " + param + " over " + fld.to_string();
            } else {
                std::cerr << "error: unknown family '" << family << "' (try: catalog list)\n";
                return 2;
            }
            if (tensordual) {
                P = tensor_with_dual(P);
                witnesses.clear();  // no witness is known for A (x) A*; none is guessed
                note = "catalog: " + family + " " + param;
            }
            emit(make_file(P, std::move(witnesses), note), out_path);
            return 0;
        }

        if (table->parsed()) {
            PresentationFile f = load_or_exit(in_path);
            if (f.kind == FileKind::matrix) {
                std::cerr << "error: matrix files have no multiplication table\n";
                return 2;
            }
            std::cout << render_table(f.F, f.basis_labels);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
