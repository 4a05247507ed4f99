// Command-line surface of the splitting-type workbench: classification,
// Hermitian-metric existence, the Nakamura cohomology tables, and the
// lattice certificates, with deterministic JSON output.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "stc/classify.hpp"
#include "stc/hermitian.hpp"
#include "stc/lattice.hpp"
#include "stc/nakamura.hpp"
#include "stc/salamon.hpp"
#include "stc/samples.hpp"

using json = nlohmann::ordered_json;
using namespace stc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitParse = 2;

Gaussian parse_complex_or_die(const std::string& text, const std::string& flag) {
    auto g = parse_gaussian(text);
    if (!g) throw CLI::ValidationError(flag, "expected a complex scalar like 1/2+3/4*i or i/2");
    return *g;
}

std::string label_text(const CatalogLabel& l) { return l.name(); }

json matrix_to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_text(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json quadratic_matrix_to_json(const Matrix<Quadratic>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_text(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json bigraded_to_json(const std::vector<std::vector<int>>& dims) {
    json out = json::array();
    for (int p = 0; p < int(dims.size()); ++p)
        for (int q = 0; q < int(dims[p].size()); ++q)
            out.push_back(json{{"p", p}, {"q", q}, {"dim", dims[p][q]}});
    return out;
}

json bigraded_with_generators(const std::vector<std::vector<int>>& dims,
                              const DoubleComplex& dc) {
    json out = json::array();
    for (int p = 0; p < int(dims.size()); ++p)
        for (int q = 0; q < int(dims[p].size()); ++q) {
            json cell{{"p", p}, {"q", q}, {"dim", dims[p][q]}};
            cell["generators"] = dc.basis_labels(p, q);
            out.push_back(cell);
        }
    return out;
}

std::string params_text(const SplittingParams& p) {
    if (p.family == SplittingParams::Family::KT)
        return "KT, eps=" + std::to_string(p.eps);
    return "A=" + to_text(p.A) + ", B=" + to_text(p.B) + ", eps=" + std::to_string(p.eps);
}

json params_to_json(const SplittingParams& p) {
    json j;
    j["family"] = p.family == SplittingParams::Family::KT ? "KT" : "C2";
    if (p.family == SplittingParams::Family::C2) {
        j["A"] = to_text(p.A);
        j["B"] = to_text(p.B);
    }
    j["eps"] = p.eps;
    return j;
}

// --- tables --all -----------------------------------------------------------

json classification_table_json() {
    json rows = json::array();
    for (const auto& [name, params] : classification_row_samples()) {
        ClassificationResult r = classify(params);
        rows.push_back(json{{"row", name},
                            {"sample", params_to_json(params)},
                            {"label", label_text(r.label)},
                            {"provenance", r.provenance}});
    }
    return rows;
}

json metric_table_json() {
    json rows = json::array();
    for (int k = 1; k <= 12; ++k) {
        json row;
        row["algebra"] = "s" + std::to_string(k);
        json cells;
        for (MetricKind kind : existence_table_columns()) {
            bool feasible = true;
            for (const auto& p : algebra_samples(k))
                feasible = feasible && exists_metric(kind, p).feasible;
            cells[name_of(kind)] = feasible;
        }
        row["exists"] = cells;
        rows.push_back(row);
    }
    return rows;
}

json dolbeault_tables_json() {
    json out = json::array();
    for (const auto& cls : nakamura_c_classes())
        for (const auto& c : cls) {
            NakamuraColumn col = dolbeault_column(c);
            json j;
            j["C"] = to_text(c);
            j["theory"] = "dolbeault";
            j["dims"] = bigraded_to_json(col.h_dolbeault);
            j["betti"] = col.betti;
            out.push_back(j);
        }
    return out;
}

json deformation_table_json() {
    json out = json::array();
    auto emit = [&](const Gaussian& t) {
        DeformationSummary s = deformation_summary(Gaussian(rat(0), rat(1)), t);
        json j;
        j["C"] = to_text(s.C);
        j["t"] = to_text(s.t);
        j["betti"] = s.betti;
        j["dolbeault"] = bigraded_to_json(s.h_dbar);
        j["bott-chern"] = bigraded_to_json(s.h_bc);
        out.push_back(j);
    };
    emit(Gaussian(0));
    for (const auto& t : deformation_t_samples()) emit(t);
    return out;
}

json representatives_json() {
    json out;
    NakamuraComplexes t0 = build_complexes(NakamuraParams(Gaussian(rat(0), rat(1))));
    NakamuraComplexes th =
        build_complexes(NakamuraParams(Gaussian(rat(0), rat(1)), Gaussian(rat(1, 2))));
    out["dolbeault t=0"] = verify_nakamura_representatives(t0.b, CohomologyTheory::dolbeault, false);
    out["bott-chern t=0"] = verify_nakamura_representatives(t0.c, CohomologyTheory::bott_chern, false);
    out["dolbeault t!=0"] = verify_nakamura_representatives(th.b, CohomologyTheory::dolbeault, true);
    out["bott-chern t!=0"] = verify_nakamura_representatives(th.c, CohomologyTheory::bott_chern, true);
    return out;
}

int run_tables(bool as_json, const std::string& fixtures_dir) {
    json doc;
    doc["classification"] = classification_table_json();
    doc["metrics"] = metric_table_json();
    doc["dolbeault"] = dolbeault_tables_json();
    doc["deformation"] = deformation_table_json();
    doc["representatives"] = representatives_json();

    if (!fixtures_dir.empty()) {
        std::filesystem::create_directories(fixtures_dir);
        for (const auto& [key, value] : doc.items()) {
            std::ofstream out(std::filesystem::path(fixtures_dir) / (key + ".json"));
            out << value.dump(2) << "\n";
        }
    }
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "== classification rows ==\n";
    for (const auto& row : doc["classification"])
        std::cout << "  " << row["row"].get<std::string>() << " -> "
                  << row["label"].get<std::string>() << "\n";
    std::cout << "\n== Hermitian metric existence (rows s1..s12) ==\n";
    std::cout << "  algebra  kahler  h-sympl  skt  1-gaud  balanced  sG\n";
    for (const auto& row : doc["metrics"]) {
        std::cout << "  " << row["algebra"].get<std::string>() << ":";
        for (MetricKind kind : existence_table_columns())
            std::cout << "  " << (row["exists"][name_of(kind)].get<bool>() ? "+" : "-");
        std::cout << "\n";
    }
    std::cout << "\n== Dolbeault dimensions of B_Gamma per C ==\n";
    for (const auto& col : doc["dolbeault"]) {
        std::cout << "  C = " << col["C"].get<std::string>() << ":  betti =";
        for (const auto& b : col["betti"]) std::cout << " " << b.get<int>();
        std::cout << "\n    h:";
        for (const auto& cell : col["dims"])
            std::cout << " " << cell["dim"].get<int>();
        std::cout << "\n";
    }
    std::cout << "\n== deformation summary (C in the i/(2k+1) class) ==\n";
    for (const auto& col : doc["deformation"]) {
        std::cout << "  t = " << col["t"].get<std::string>() << ": h_dbar(1,1) = ";
        for (const auto& cell : col["dolbeault"])
            if (cell["p"] == 1 && cell["q"] == 1) std::cout << cell["dim"].get<int>();
        std::cout << ", h_bc(2,2) = ";
        for (const auto& cell : col["bott-chern"])
            if (cell["p"] == 2 && cell["q"] == 2) std::cout << cell["dim"].get<int>();
        std::cout << "\n";
    }
    std::cout << "\n== harmonic representative verification ==\n";
    for (const auto& [key, value] : doc["representatives"].items())
        std::cout << "  " << key << ": " << (value.get<bool>() ? "verified" : "FAILED") << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for splitting-type complex structures on 6d solvmanifolds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // algebra
    auto* algebra = app.add_subcommand("algebra", "parse and check a Salamon-notation algebra");
    std::string algebra_text;
    bool algebra_check = false;
    algebra->add_option("--parse", algebra_text, "structure constants, e.g. (e^{23},e^{34},-e^{24},0,0,0)")
        ->required();
    algebra->add_flag("--check", algebra_check, "run Jacobi/unimodularity and CE Betti numbers");

    // classify
    auto* cls = app.add_subcommand("classify", "catalog label of a splitting structure");
    std::string cls_a = "0", cls_b = "0", cls_family = "c2";
    int cls_eps = 0;
    cls->add_option("--A", cls_a);
    cls->add_option("--B", cls_b);
    cls->add_option("--eps", cls_eps)->check(CLI::Range(0, 1));
    cls->add_option("--family", cls_family)->check(CLI::IsMember({"c2", "kt"}));

    // metrics
    auto* met = app.add_subcommand("metrics", "Hermitian metric predicates and existence");
    std::string met_a = "0", met_b = "0", met_kind, met_u = "0", met_v = "0", met_z = "0";
    std::string met_r2 = "1", met_s2 = "1", met_t2 = "1", met_family = "c2";
    int met_eps = 0;
    bool met_exists = false;
    met->add_option("--A", met_a);
    met->add_option("--B", met_b);
    met->add_option("--eps", met_eps)->check(CLI::Range(0, 1));
    met->add_option("--family", met_family)->check(CLI::IsMember({"c2", "kt"}));
    met->add_option("--kind", met_kind);
    met->add_flag("--exists", met_exists, "decide existence instead of testing one metric");
    met->add_option("--r2", met_r2);
    met->add_option("--s2", met_s2);
    met->add_option("--t2", met_t2);
    met->add_option("--u", met_u);
    met->add_option("--v", met_v);
    met->add_option("--z", met_z);

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "dimensions of the Nakamura complexes");
    std::string coh_c = "i", coh_t = "0", coh_theory = "dolbeault";
    coh->add_option("--C", coh_c)->required();
    coh->add_option("--t", coh_t);
    coh->add_option("--theory", coh_theory)
        ->check(CLI::IsMember({"dolbeault", "bott-chern", "aeppli", "de-rham"}));

    // nakamura
    auto* nak = app.add_subcommand("nakamura", "del-dbar lemma and deformations");
    std::string nak_c = "i", nak_t = "0";
    long nak_k = 0;
    bool nak_ddbar = false, nak_deform = false;
    nak->add_option("--C", nak_c);
    nak->add_flag("--ddbar", nak_ddbar, "decide the del-dbar lemma for X_C");
    nak->add_flag("--deform", nak_deform, "deformed family (X_k)_t");
    nak->add_option("--k", nak_k, "the X_k family index (C = i/(2k+1))");
    nak->add_option("--t", nak_t, "deformation parameter");

    // lattice
    auto* lat = app.add_subcommand("lattice", "lattice certificate for G_5^{alpha_{s,n}}");
    long lat_s = 0, lat_n = 0;
    lat->add_option("--s", lat_s)->required();
    lat->add_option("--n", lat_n)->required();

    // tables
    auto* tab = app.add_subcommand("tables", "regenerate the classification and cohomology tables");
    bool tab_all = false;
    std::string fixtures_dir;
    tab->add_flag("--all", tab_all);
    tab->add_option("--fixtures", fixtures_dir, "write regression fixtures into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    const bool as_json = format == "json";
    try {
        if (*algebra) {
            RealLieAlgebra g;
            try {
                g = parse_salamon(algebra_text);
            } catch (const SalamonError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitParse;
            }
            json j;
            j["canonical"] = render_salamon(g);
            j["dim"] = g.dim;
            if (algebra_check) {
                bool jac = jacobi_check(g);
                j["jacobi"] = jac;
                j["unimodular"] = jac ? unimodular_check(g) : false;
                if (jac) j["ce_betti"] = ce_cohomology(g);
            }
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "canonical: " << j["canonical"].get<std::string>() << "\n";
                if (algebra_check) {
                    std::cout << "jacobi: " << (j["jacobi"].get<bool>() ? "yes" : "no") << "\n";
                    std::cout << "unimodular: " << (j["unimodular"].get<bool>() ? "yes" : "no") << "\n";
                    if (j.contains("ce_betti")) {
                        std::cout << "CE Betti:";
                        for (const auto& b : j["ce_betti"]) std::cout << " " << b.get<int>();
                        std::cout << "\n";
                    }
                }
            }
            return kExitOk;
        }

        if (*cls) {
            SplittingParams p =
                cls_family == "kt"
                    ? SplittingParams::kt(cls_eps)
                    : SplittingParams::c2(parse_complex_or_die(cls_a, "--A"),
                                          parse_complex_or_die(cls_b, "--B"), cls_eps);
            ClassificationResult r = classify(p);
            if (as_json) {
                json j;
                j["input"] = params_to_json(p);
                j["label"] = label_text(r.label);
                j["provenance"] = r.provenance;
                j["basis_change"] = matrix_to_json(r.basis_change);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "label: " << label_text(r.label) << "\n";
                std::cout << "row: " << r.provenance << "\n";
                std::cout << "basis change (catalog basis in terms of the alpha-frame):\n";
                for (int i = 0; i < 6; ++i) {
                    std::cout << "  e" << i + 1 << " =";
                    for (int j2 = 0; j2 < 6; ++j2)
                        if (r.basis_change(i, j2) != 0)
                            std::cout << " + (" << to_text(r.basis_change(i, j2)) << ") a"
                                      << j2 + 1;
                    std::cout << "\n";
                }
            }
            return kExitOk;
        }

        if (*met) {
            SplittingParams p =
                met_family == "kt"
                    ? SplittingParams::kt(met_eps)
                    : SplittingParams::c2(parse_complex_or_die(met_a, "--A"),
                                          parse_complex_or_die(met_b, "--B"), met_eps);
            if (met_exists) {
                std::vector<MetricKind> kinds;
                if (!met_kind.empty()) {
                    auto k = metric_kind_from_name(met_kind);
                    if (!k) {
                        std::cerr << "unknown metric kind: " << met_kind << "\n";
                        return kExitParse;
                    }
                    kinds.push_back(*k);
                } else {
                    for (MetricKind k : existence_table_columns()) kinds.push_back(k);
                    kinds.push_back(MetricKind::gauduchon);
                }
                json out = json::array();
                bool any_infeasible = false;
                for (MetricKind k : kinds) {
                    ExistenceCertificate cert = exists_metric(k, p);
                    any_infeasible = any_infeasible || !cert.feasible;
                    json j;
                    j["kind"] = name_of(k);
                    j["feasible"] = cert.feasible;
                    if (cert.witness) {
                        j["witness"] = {{"r2", to_text(cert.witness->r2)},
                                        {"s2", to_text(cert.witness->s2)},
                                        {"t2", to_text(cert.witness->t2)},
                                        {"u", to_text(cert.witness->u)},
                                        {"v", to_text(cert.witness->v)},
                                        {"z", to_text(cert.witness->z)}};
                    } else {
                        j["obstruction"] = cert.obstruction;
                    }
                    out.push_back(j);
                }
                if (as_json) {
                    std::cout << out.dump(2) << "\n";
                } else {
                    for (const auto& j : out) {
                        std::cout << j["kind"].get<std::string>() << ": "
                                  << (j["feasible"].get<bool>() ? "exists" : "does not exist");
                        if (j.contains("obstruction"))
                            std::cout << "  [" << j["obstruction"].get<std::string>() << "]";
                        std::cout << "\n";
                    }
                }
                return (!met_kind.empty() && any_infeasible) ? kExitInfeasible : kExitOk;
            }
            // predicate mode
            auto k = metric_kind_from_name(met_kind);
            if (!k) {
                std::cerr << "predicate mode requires --kind\n";
                return kExitParse;
            }
            auto pr = [&](const std::string& s, const char* flag) {
                auto r = parse_rational(s);
                if (!r) throw CLI::ValidationError(flag, "expected a rational");
                return *r;
            };
            HermitianMetric m(pr(met_r2, "--r2"), pr(met_s2, "--s2"), pr(met_t2, "--t2"),
                              parse_complex_or_die(met_u, "--u"), parse_complex_or_die(met_v, "--v"),
                              parse_complex_or_die(met_z, "--z"));
            bool holds = metric_predicate(*k, m, splitting_coframe(p));
            if (as_json)
                std::cout << json{{"kind", name_of(*k)}, {"holds", holds}}.dump(2) << "\n";
            else
                std::cout << name_of(*k) << ": " << (holds ? "holds" : "fails") << "\n";
            return holds ? kExitOk : kExitInfeasible;
        }

        if (*coh) {
            NakamuraParams params(parse_complex_or_die(coh_c, "--C"),
                                  parse_complex_or_die(coh_t, "--t"));
            NakamuraComplexes nc = build_complexes(params);
            json j;
            j["C"] = to_text(params.C);
            j["t"] = to_text(params.t);
            j["theory"] = coh_theory;
            if (coh_theory == "de-rham") {
                j["betti"] = de_rham_dims(nc.c.complex);
            } else if (coh_theory == "dolbeault") {
                j["complex"] = "B_Gamma";
                j["dims"] = bigraded_with_generators(
                    cohomology(nc.b.complex, CohomologyTheory::dolbeault).dims, nc.b.complex);
            } else {
                j["complex"] = "C_Gamma";
                CohomologyTheory th = coh_theory == "bott-chern" ? CohomologyTheory::bott_chern
                                                                 : CohomologyTheory::aeppli;
                j["dims"] = bigraded_with_generators(cohomology(nc.c.complex, th).dims,
                                                     nc.c.complex);
            }
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "C = " << j["C"].get<std::string>() << ", t = "
                          << j["t"].get<std::string>() << ", theory = " << coh_theory << "\n";
                if (j.contains("betti")) {
                    std::cout << "betti:";
                    for (const auto& b : j["betti"]) std::cout << " " << b.get<int>();
                    std::cout << "\n";
                } else {
                    for (const auto& cell : j["dims"])
                        if (cell["dim"].get<int>() != 0)
                            std::cout << "  h^{" << cell["p"].get<int>() << ","
                                      << cell["q"].get<int>() << "} = " << cell["dim"].get<int>()
                                      << "\n";
                }
            }
            return kExitOk;
        }

        if (*nak) {
            if (nak_ddbar) {
                Gaussian c = parse_complex_or_die(nak_c, "--C");
                NakamuraComplexes nc = build_complexes(NakamuraParams(c));
                DdbarReport rep = ddbar_lemma_report(nc.c.complex);
                json j;
                j["C"] = to_text(c);
                j["ddbar_lemma"] = rep.holds;
                if (!rep.holds) j["failing_bidegree"] = {rep.p, rep.q};
                if (as_json)
                    std::cout << j.dump(2) << "\n";
                else {
                    std::cout << "X_C with C = " << to_text(c) << ": del-dbar lemma "
                              << (rep.holds ? "holds" : "fails") << "\n";
                    if (!rep.holds)
                        std::cout << "counterexample bidegree: (" << rep.p << "," << rep.q << ")\n";
                }
                return rep.holds ? kExitOk : kExitInfeasible;
            }
            if (nak_deform) {
                Gaussian t = parse_complex_or_die(nak_t, "--t");
                // C = i/(2k+1) for the X_k family
                Gaussian c(rat(0), rat(1, 2 * nak_k + 1));
                DeformationSummary s = deformation_summary(c, t);
                json j;
                j["k"] = nak_k;
                j["C"] = to_text(c);
                j["t"] = to_text(t);
                j["betti"] = s.betti;
                j["dolbeault"] = bigraded_to_json(s.h_dbar);
                j["bott-chern"] = bigraded_to_json(s.h_bc);
                NakamuraComplexes nc = build_complexes(NakamuraParams(c, t));
                j["ddbar_lemma"] = ddbar_lemma(nc.c.complex);
                if (as_json)
                    std::cout << j.dump(2) << "\n";
                else {
                    std::cout << "X_" << nak_k << " at t = " << to_text(t) << ": del-dbar lemma "
                              << (j["ddbar_lemma"].get<bool>() ? "holds" : "fails") << "\n";
                }
                return kExitOk;
            }
            std::cerr << "nakamura requires --ddbar or --deform\n";
            return kExitParse;
        }

        if (*lat) {
            LatticeCertificate cert = certificate(lat_s, lat_n);
            json j;
            j["s"] = cert.s;
            j["n"] = cert.n;
            j["D"] = cert.d;
            j["exp_ad"] = quadratic_matrix_to_json(cert.m);
            j["B_s"] = matrix_to_json(cert.bs);
            j["Q"] = quadratic_matrix_to_json(cert.q);
            json cp = json::array();
            for (const auto& c : cert.charpoly_coeffs) cp.push_back(c.get_str());
            j["charpoly_low_to_high"] = cp;
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "G_5 lattice certificate for (s,n) = (" << cert.s << "," << cert.n
                          << "), D = " << cert.d << "\n";
                std::cout << "charpoly coefficients (low to high):";
                for (const auto& c : cert.charpoly_coeffs) std::cout << " " << c.get_str();
                std::cout << "\nconjugation Q exp(tau ad) Q^-1 = B_s verified exactly\n";
            }
            return kExitOk;
        }

        if (*tab) {
            if (!tab_all && fixtures_dir.empty()) {
                std::cerr << "tables requires --all and/or --fixtures=DIR\n";
                return kExitParse;
            }
            return run_tables(as_json, fixtures_dir);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return kExitOk;
}
