// toricsym command line.  Exit codes: 0 ok, 2 parse error, 3 validation/domain error, 4 invariant violation.
#include "toricsym/chain.hpp"
#include "toricsym/demazure.hpp"
#include "toricsym/io.hpp"
#include "toricsym/lattice_count.hpp"
#include "toricsym/report.hpp"
#include "toricsym/stability.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace toricsym;

namespace {

constexpr int kParse = 2, kValidation = 3, kInvariant = 4;

bool is_polytope_file(const std::string& path) {
    return path.size() > 5 && path.compare(path.size() - 5, 5, ".poly") == 0;
}

// .poly files hold polytopes directly; everything else is a fan
Polytope load_polytope(const std::string& path) {
    if (is_polytope_file(path)) return parse_polytope_file(path);
    return polytope_from_fan(parse_fan_file(path));
}

std::string matrix_text(const IntMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += ",";
        IntVector row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        s += to_string(row);
    }
    return s + "]";
}

void print_roots(const char* label, const std::vector<Root>& rs) {
    std::cout << label << " (" << rs.size() << "):";
    for (const auto& r : rs) std::cout << ' ' << to_string(r.m) << "@" << r.ray;
    std::cout << '\n';
}

void print_summary(const AnalysisReport& r) {
    std::cout << r.name << "  hash " << r.hash << '\n';
    std::cout << "  dim " << r.fan.dim << ", rays " << r.fan.rays << ", cones " << r.fan.cones
              << (r.fan.complete ? ", complete" : "") << (r.fan.smooth ? ", smooth" : "")
              << (r.fan.fano ? ", Fano" : "") << '\n';
    if (r.polytope)
        std::cout << "  volume " << to_string(r.polytope->volume) << ", Bc " << to_string(r.polytope->barycenter) << '\n';
    for (const auto& [k, b] : r.quantized_barycenters) std::cout << "  Bc_" << k << " " << to_string(b) << '\n';
    if (r.ehrhart) std::cout << "  ehrhart " << to_string(RatVector(*r.ehrhart)) << '\n';
    if (r.roots)
        std::cout << "  roots: " << r.roots->semisimple.size() << " semisimple, " << r.roots->unipotent.size()
                  << " unipotent\n";
    if (r.symmetry) {
        std::cout << "  |Aut| " << r.symmetry->aut_order;
        if (r.symmetry->aut0_order) std::cout << ", |Aut_0| " << *r.symmetry->aut0_order;
        std::cout << ", central " << r.symmetry->centrally_symmetric << ", bs " << r.symmetry->bs_symmetric
                  << ", lattice " << r.symmetry->centrally_lattice_symmetric << '\n';
    }
    if (r.stability)
        std::cout << "  delta " << to_string(r.stability->delta) << ", alpha " << to_string(r.stability->alpha.at("full"))
                  << ", ke " << r.stability->ke_exists << ", reductive " << r.stability->reductive << '\n';
    if (r.demazure)
        std::cout << "  dim Aut_0 X " << r.demazure->dim_aut0 << ", unipotent " << r.demazure->unipotent_dim << '\n';
    if (r.chain) {
        std::cout << "  chain: " << r.chain->violations.size() << " violations";
        for (const auto& w : r.chain->strict_witnesses) std::cout << "; " << w;
        std::cout << '\n';
    }
    for (const auto& [stage, msg] : r.errors) std::cout << "  [" << stage << "] " << msg << '\n';
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw ValidationError("cannot write " + path);
}

int verify_chain(std::vector<std::string> paths, long budget) {
    std::sort(paths.begin(), paths.end());
    int worst = 0;
    for (const auto& path : paths) {
        try {
            Fan f = parse_fan_file(path);
            auto c = verify_implication_chain(f, budget);
            metric_verdicts(f, budget);  // asserts delta/Bc agreement
            std::cout << path << ": " << (c.consistent() ? "consistent" : "VIOLATED");
            for (const auto& w : c.strict_witnesses) std::cout << "; " << w;
            std::cout << '\n';
            for (const auto& v : c.violations) std::cout << "  violation: " << v << '\n';
            if (!c.consistent()) worst = std::max(worst, kInvariant);
        } catch (const ParseError& e) {
            std::cout << path << ": parse error: " << e.what() << '\n';
            worst = std::max(worst, kParse);
        } catch (const InvariantViolation& e) {
            std::cout << path << ": invariant violation: " << e.what() << '\n';
            worst = std::max(worst, kInvariant);
        } catch (const Error& e) {
            std::cout << path << ": " << e.what() << '\n';
            worst = std::max(worst, kValidation);
        }
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout << std::boolalpha;
    CLI::App app{"Symmetry and stability invariants of toric Fano varieties"};
    app.require_subcommand(1);

    std::string file;
    long k = 0, k_max = 3, k_budget = 3, n1 = 0, n2 = 0;
    bool skip_demazure = false, skip_ehrhart = false;
    std::string json_out, subgroup = "full", out;
    std::vector<std::string> files;

    auto* analyze_cmd = app.add_subcommand("analyze", "run the whole pipeline on a fan file");
    analyze_cmd->add_option("file", file)->required();
    analyze_cmd->add_option("--k-max", k_max, "largest k for quantized barycenters")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");
    analyze_cmd->add_flag("--skip-demazure", skip_demazure);
    analyze_cmd->add_flag("--skip-ehrhart", skip_ehrhart);

    auto* bc_cmd = app.add_subcommand("bc", "quantized barycenter Bc_k");
    bc_cmd->add_option("file", file)->required();
    bc_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);

    auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Ehrhart polynomial coefficients, constant term first");
    ehrhart_cmd->add_option("file", file)->required();

    auto* roots_cmd = app.add_subcommand("roots", "semisimple and unipotent roots");
    roots_cmd->add_option("file", file)->required();

    auto* aut_cmd = app.add_subcommand("aut", "lattice automorphisms acting on M");
    aut_cmd->add_option("file", file)->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "alpha invariant for a symmetry subgroup");
    alpha_cmd->add_option("file", file)->required();
    alpha_cmd->add_option("--subgroup", subgroup)->check(CLI::IsMember({"full", "aut0", "trivial"}));

    auto* delta_cmd = app.add_subcommand("delta", "delta invariant, or delta_k with --k");
    delta_cmd->add_option("file", file)->required();
    delta_cmd->add_option("--k", k)->check(CLI::PositiveNumber);

    auto* verdicts_cmd = app.add_subcommand("verdicts", "KE, reductivity and balanced-k verdicts");
    verdicts_cmd->add_option("file", file)->required();
    verdicts_cmd->add_option("--k-budget", k_budget)->check(CLI::PositiveNumber);

    auto* demazure_cmd = app.add_subcommand("demazure", "class group, Demazure roots and dim Aut_0 X");
    demazure_cmd->add_option("file", file)->required();

    auto* chain_cmd = app.add_subcommand("verify-chain", "check the symmetry implication chain on many files");
    chain_cmd->add_option("files", files)->required();
    chain_cmd->add_option("--k-budget", k_budget)->check(CLI::PositiveNumber);

    auto* futaki_cmd = app.add_subcommand("futaki", "write the two-subspace blow-up fan");
    futaki_cmd->add_option("--n1", n1)->required();
    futaki_cmd->add_option("--n2", n2)->required();
    futaki_cmd->add_option("--out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParse;
    }

    try {
        if (*analyze_cmd) {
            auto r = analyze_file(file, {k_max, skip_demazure, skip_ehrhart});
            if (json_out != "-") print_summary(r);
            if (!json_out.empty()) write_text(json_out, serialize(r));
            return r.invariant_violation ? kInvariant : 0;
        }
        if (*bc_cmd) {
            std::cout << to_string(quantized_barycenter(load_polytope(file), k)) << '\n';
        } else if (*ehrhart_cmd) {
            auto e = ehrhart_polynomial(load_polytope(file));
            std::cout << to_string(RatVector(e.coefficients)) << '\n';
        } else if (*roots_cmd) {
            auto rd = roots(parse_fan_file(file));
            print_roots("semisimple", rd.semisimple);
            print_roots("unipotent", rd.unipotent);
        } else if (*aut_cmd) {
            auto g = symmetry_group_on_m(parse_fan_file(file));
            std::cout << "order " << g.order() << '\n';
            for (const auto& m : g.elements) std::cout << matrix_text(m) << '\n';
        } else if (*alpha_cmd) {
            Fan f = parse_fan_file(file);
            Polytope p = polytope_from_fan(f);
            auto g = polytope_automorphisms(p);
            if (subgroup == "aut0") g = aut0_subgroup(p);
            if (subgroup == "trivial") g = generated_subgroup(g, {});
            std::cout << to_string(alpha_invariant(f, g)) << '\n';
        } else if (*delta_cmd) {
            Fan f = parse_fan_file(file);
            std::cout << to_string(k > 0 ? delta_k(f, k) : delta_invariant(f)) << '\n';
        } else if (*verdicts_cmd) {
            auto v = metric_verdicts(parse_fan_file(file), k_budget);
            std::cout << "ke_exists " << v.ke_exists << "\nreductive " << v.reductive << "\ndelta " << to_string(v.delta)
                      << "\nalpha " << to_string(v.alpha.at("full")) << '\n';
            for (const auto& [kk, b] : v.balanced_k) std::cout << "balanced_" << kk << ' ' << b << '\n';
        } else if (*demazure_cmd) {
            auto d = demazure_report(parse_fan_file(file));
            std::cout << "class group Z^" << d.class_group.free_rank;
            for (const auto& t : d.class_group.torsion) std::cout << " + Z/" << t.get_str();
            std::cout << "\nclasses";
            for (std::size_t i = 0; i < d.classes.size(); ++i)
                std::cout << ' ' << to_string(d.classes[i].degree) << 'x' << d.classes[i].rays.size() << "(dim "
                          << d.graded_dims[i] << ')';
            std::cout << "\nG_s factors";
            for (auto s : d.gs_factor_sizes) std::cout << " GL" << s;
            std::cout << "\nunipotent_dim " << d.unipotent_dim << "\ndim_aut0 " << d.dim_aut0 << "\nreductive "
                      << d.is_reductive << '\n';
            if (d.weyl_order) std::cout << "weyl_order " << *d.weyl_order << '\n';
            if (d.component_group_order) std::cout << "component_group_order " << *d.component_group_order << '\n';
        } else if (*chain_cmd) {
            return verify_chain(files, k_budget);
        } else if (*futaki_cmd) {
            Fan f = generate_futaki(n1, n2);
            write_text(out, format_fan(f, "blow-up of P^" + std::to_string(n1 + n2 + 1) + " along two subspaces, n1=" +
                                              std::to_string(n1) + " n2=" + std::to_string(n2)));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return 0;
}
