// axbsolve: exact solver CLI for the matrix equation A*X*B = C and
// related systems. Matrices live in plain text files (one row per line,
// rational entries); reports go to stdout with every annotation line
// prefixed by '#', so each printed matrix block re-parses as-is.
//
// Exit codes: 0 = success / affirmative verdict, 1 = negative verdict
// (inconsistent equation, failed check), 2 = usage or input error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "axbsolve/axbsolve.hpp"

namespace {

using axb::AffineMatMap;
using axb::Mat;

struct Report {
    std::string command;
    std::ostringstream body;
    int exit_code = 0;

    void kv(const std::string& key, const std::string& value) {
        body << "# " << key << ": " << value << "\n";
    }
    void matrix(const std::string& name, const Mat& m) {
        body << "# " << name << " (" << m.rows() << "x" << m.cols() << ")\n"
             << axb::format_matrix(m);
    }
    int print() const {
        std::cout << "# command: " << command << "\n" << body.str();
        return exit_code;
    }
};

const char* reason_name(axb::ReproReason reason) {
    switch (reason) {
        case axb::ReproReason::LinearPartNotIdempotent: return "LinearPartNotIdempotent";
        case axb::ReproReason::ShiftNotFixed: return "ShiftNotFixed";
        case axb::ReproReason::Reproductive: return "Reproductive";
    }
    return "?";
}

void write_family(Report& rep, const AffineMatMap& fam,
                  const std::string& particular_name = "particular") {
    rep.matrix(particular_name, fam.shift());
    axb::AffineSet image = fam.image();
    rep.kv("solution dimension", std::to_string(image.dim()));
    for (std::size_t i = 0; i < image.basis.size(); ++i)
        rep.matrix("basis[" + std::to_string(i) + "]",
                   axb::unvec(image.basis[i], fam.out_rows(), fam.out_cols()));
}

void write_reproductivity(Report& rep, const AffineMatMap& fam) {
    axb::ReproReport rr = axb::reproductivity_of(fam);
    rep.kv("reproductive", rr.is_reproductive ? "true" : "false");
    if (!rr.is_reproductive) {
        rep.kv("reason", reason_name(rr.reason));
        rep.matrix("witness", *rr.witness);
    }
}

int run_rnf(const std::string& a_path) {
    Mat a = axb::read_matrix_file(a_path);
    Report rep;
    rep.command = "rnf";
    rep.matrix("input A", a);
    axb::RankNormalForm rnf = axb::rank_normal_form(a);
    rep.kv("rank", std::to_string(rnf.rank));
    rep.matrix("Q", rnf.Q);
    rep.matrix("P", rnf.P);
    rep.matrix("E_a", rnf.Q * a * rnf.P);
    return rep.print();
}

int run_oneinv(const std::string& a_path, bool use_seed, std::uint64_t seed) {
    Mat a = axb::read_matrix_file(a_path);
    Report rep;
    rep.command = "oneinv";
    rep.matrix("input A", a);
    axb::OneInverseFamily fam(a);
    rep.kv("rank", std::to_string(fam.rank()));
    rep.kv("parameters", std::to_string(fam.parameter_count()));
    rep.matrix("G", use_seed ? fam.sample(seed) : fam.zero());
    return rep.print();
}

int run_check(const std::string& method, const std::string& a_path, const std::string& b_path,
              const std::string& c_path) {
    Mat a = axb::read_matrix_file(a_path);
    Mat b = axb::read_matrix_file(b_path);
    Mat c = axb::read_matrix_file(c_path);
    Report rep;
    rep.command = "check " + method;
    rep.matrix("input A", a);
    rep.matrix("input B", b);
    rep.matrix("input C", c);
    bool verdict = false;
    if (method == "penrose") {
        Mat a1 = axb::OneInverseFamily(a).zero();
        Mat b1 = axb::OneInverseFamily(b).zero();
        verdict = axb::penrose_check(a, b, c, a1, b1);
    } else if (method == "structural") {
        verdict = axb::structural_check(a, b, c);
    } else {
        verdict = axb::is_consistent(a, b, c);
    }
    rep.kv("verdict", verdict ? "consistent" : "inconsistent");
    rep.exit_code = verdict ? 0 : 1;
    return rep.print();
}

int run_solve_axbc(const std::string& a_path, const std::string& b_path,
                   const std::string& c_path, const std::string& x0_path) {
    Mat a = axb::read_matrix_file(a_path);
    Mat b = axb::read_matrix_file(b_path);
    Mat c = axb::read_matrix_file(c_path);
    Report rep;
    rep.command = "solve axbc";
    rep.matrix("input A", a);
    rep.matrix("input B", b);
    rep.matrix("input C", c);

    if (!axb::is_consistent(a, b, c)) {
        rep.kv("consistent", "false");
        rep.exit_code = 1;
        return rep.print();
    }
    rep.kv("consistent", "true");

    if (x0_path.empty()) {
        AffineMatMap fam = axb::general_solution(a, b, c);
        write_family(rep, fam);
        write_reproductivity(rep, fam);
        return rep.print();
    }

    Mat x0 = axb::read_matrix_file(x0_path);
    rep.matrix("input X0", x0);
    AffineMatMap fam = axb::solution_from_particular(a, b, c, x0);
    write_family(rep, fam);
    write_reproductivity(rep, fam);
    axb::Certificate cert = axb::representability_certificate(a, b, c, x0);
    rep.kv("certificate", cert.verdict == axb::ReprVerdict::ProvenNotRepresentable
                              ? "ProvenNotRepresentable"
                              : "Inconclusive");
    rep.kv("rank X0", std::to_string(cert.rank_x0));
    rep.kv("rank bound", std::to_string(cert.bound));
    return rep.print();
}

int run_solve_two_sided(const std::string& a_path, const std::string& b_path,
                        const std::string& d_path, const std::string& e_path) {
    Mat a = axb::read_matrix_file(a_path);
    Mat b = axb::read_matrix_file(b_path);
    Mat d = axb::read_matrix_file(d_path);
    Mat e = axb::read_matrix_file(e_path);
    Report rep;
    rep.command = "solve two-sided";
    rep.matrix("input A", a);
    rep.matrix("input B", b);
    rep.matrix("input D", d);
    rep.matrix("input E", e);
    auto families = axb::two_sided_solve(a, b, d, e);
    if (!families) {
        rep.kv("consistent", "false");
        rep.exit_code = 1;
        return rep.print();
    }
    rep.kv("consistent", "true");
    write_family(rep, families->general);
    rep.matrix("reproductive shift", families->reproductive.shift());
    write_reproductivity(rep, families->reproductive);
    return rep.print();
}

int run_solve_commuting(const std::string& a_path) {
    Mat a = axb::read_matrix_file(a_path);
    Report rep;
    rep.command = "solve commuting";
    rep.matrix("input A", a);
    auto sol = axb::commuting_system_solve(a);
    if (!sol) {
        rep.kv("consistent", "false");
        rep.exit_code = 1;
        return rep.print();
    }
    rep.kv("consistent", "true");
    rep.matrix("commuting inverse", sol->commuting_inverse);
    write_family(rep, sol->family);
    write_reproductivity(rep, sol->family);
    return rep.print();
}

int run_solve_presic(const std::string& a_path, const std::string& eq, bool haveric) {
    Mat a = axb::read_matrix_file(a_path);
    Report rep;
    rep.command = "solve presic";
    rep.matrix("input A", a);
    rep.kv("equation", eq);
    rep.kv("variant", haveric ? "haveric" : "presic");

    AffineMatMap fam = [&]() -> AffineMatMap {
        if (haveric) {
            if (eq == "E3") return axb::haveric_family(a, axb::HavericEq::E3);
            if (eq == "E4") return axb::haveric_family(a, axb::HavericEq::E4);
            if (eq == "E5") return axb::haveric_family(a, axb::HavericEq::E5);
            // E1/E2 coincide in both variants
        }
        if (eq == "E1") return axb::presic_family(a, axb::PresicEq::E1);
        if (eq == "E2") return axb::presic_family(a, axb::PresicEq::E2);
        if (eq == "E3") return axb::presic_family(a, axb::PresicEq::E3);
        if (eq == "E4") return axb::presic_family(a, axb::PresicEq::E4);
        return axb::presic_family(a, axb::PresicEq::E5);
    }();
    write_family(rep, fam);
    write_reproductivity(rep, fam);
    return rep.print();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational solver for the linear matrix equation A*X*B = C"};
    app.require_subcommand(1);

    int rc = 0;

    // rnf
    std::string rnf_a;
    CLI::App* rnf = app.add_subcommand("rnf", "Rank normal form Q*A*P = E_a");
    rnf->add_option("A", rnf_a, "matrix file")->required();
    rnf->callback([&] { rc = run_rnf(rnf_a); });

    // oneinv
    std::string oneinv_a;
    std::uint64_t oneinv_seed = 0;
    bool oneinv_zero = false;
    CLI::App* oneinv = app.add_subcommand("oneinv", "A {1}-inverse of A");
    oneinv->add_option("A", oneinv_a, "matrix file")->required();
    CLI::Option* seed_opt =
        oneinv->add_option("--seed", oneinv_seed, "sample parameter blocks from this seed");
    oneinv->add_flag("--zero", oneinv_zero, "use zero parameter blocks (default)")
        ->excludes(seed_opt);
    oneinv->callback([&] { rc = run_oneinv(oneinv_a, seed_opt->count() > 0, oneinv_seed); });

    // check
    std::string check_method, check_a, check_b, check_c;
    CLI::App* check = app.add_subcommand("check", "Consistency of A*X*B = C");
    check->add_option("method", check_method, "penrose | structural | oracle")
        ->required()
        ->check(CLI::IsMember({"penrose", "structural", "oracle"}));
    check->add_option("A", check_a, "matrix file")->required();
    check->add_option("B", check_b, "matrix file")->required();
    check->add_option("C", check_c, "matrix file")->required();
    check->callback([&] { rc = run_check(check_method, check_a, check_b, check_c); });

    // solve
    CLI::App* solve = app.add_subcommand("solve", "Solution families");
    solve->require_subcommand(1);

    std::string axbc_a, axbc_b, axbc_c, axbc_x0;
    CLI::App* axbc = solve->add_subcommand("axbc", "General solution of A*X*B = C");
    axbc->add_option("A", axbc_a, "matrix file")->required();
    axbc->add_option("B", axbc_b, "matrix file")->required();
    axbc->add_option("C", axbc_c, "matrix file")->required();
    axbc->add_option("--particular", axbc_x0, "anchor the family at this particular solution");
    axbc->callback([&] { rc = run_solve_axbc(axbc_a, axbc_b, axbc_c, axbc_x0); });

    std::string ts_a, ts_b, ts_d, ts_e;
    CLI::App* two_sided = solve->add_subcommand("two-sided", "A*X = B together with X*D = E");
    two_sided->add_option("A", ts_a, "matrix file")->required();
    two_sided->add_option("B", ts_b, "matrix file")->required();
    two_sided->add_option("D", ts_d, "matrix file")->required();
    two_sided->add_option("E", ts_e, "matrix file")->required();
    two_sided->callback([&] { rc = run_solve_two_sided(ts_a, ts_b, ts_d, ts_e); });

    std::string comm_a;
    CLI::App* commuting =
        solve->add_subcommand("commuting", "A*X*A = A together with A*X = X*A");
    commuting->add_option("A", comm_a, "matrix file")->required();
    commuting->callback([&] { rc = run_solve_commuting(comm_a); });

    std::string presic_a, presic_eq;
    bool presic_haveric = false;
    CLI::App* presic = solve->add_subcommand("presic", "Families for AX=0, XA=0, AXA=A, AX=A, XA=A");
    presic->add_option("A", presic_a, "matrix file")->required();
    presic->add_option("--eq", presic_eq, "E1 | E2 | E3 | E4 | E5")
        ->required()
        ->check(CLI::IsMember({"E1", "E2", "E3", "E4", "E5"}));
    presic->add_flag("--haveric", presic_haveric, "use the reproductive variant");
    presic->callback([&] { rc = run_solve_presic(presic_a, presic_eq, presic_haveric); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const axb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const axb::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
