// Command-line front end: radius computation, parameter-grid tables, the
// verification matrix, and plot-data export.
//
// Exit codes: 0 ok, 1 usage, 2 parameter, 3 no root, 4 verification failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starlike/extremal.hpp"
#include "starlike/radius_poly.hpp"
#include "starlike/records.hpp"
#include "starlike/verify.hpp"

namespace {

using namespace starlike;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParameter = 2;
constexpr int kExitNoRoot = 3;
constexpr int kExitVerification = 4;

struct GridSpec {
    double lo = 0.0, hi = 0.0, step = 1.0;

    std::vector<double> values() const {
        std::vector<double> vals;
        for (double x = lo; x <= hi + 1e-12; x += step) vals.push_back(x);
        return vals;
    }
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &g.lo, &g.hi, &g.step) != 3 ||
        g.step <= 0.0 || g.hi < g.lo) {
        throw CLI::ValidationError("--grid", "grid must be lo:hi:step with step > 0");
    }
    return g;
}

ClassSpec make_spec(const std::string& cls_name, double b, std::optional<double> c) {
    const FunctionClass cls = class_from_name(cls_name);
    if (cls == FunctionClass::K1) {
        if (c) throw ParameterError("K1 takes no c parameter");
        return normalize(cls, b);
    }
    if (!c) throw ParameterError(cls_name + " requires --c");
    return normalize(cls, b, c);
}

std::optional<bool> try_certify(const ClassSpec& spec, const RegionKind& region,
                                double rho, double tol) {
    if (spec.cls == FunctionClass::K3 || !spec.b || *spec.b == 0.0) return std::nullopt;
    try {
        return certify_sharpness(spec, region, rho, tol).passed;
    } catch (const Error&) {
        return std::nullopt;
    }
}

OutputRecord make_record(const ClassSpec& spec, const RegionKind& region,
                         RootMethod method, double sharp_tol) {
    RadiusResult res = method == RootMethod::Polynomial
                           ? smallest_root_in_unit(build_polynomial(spec, region))
                           : radius_by_margin(spec, region);
    OutputRecord rec;
    rec.cls = class_name(spec.cls);
    rec.b = spec.b;
    rec.c = spec.c;
    rec.p1 = spec.p1;
    if (spec.cls != FunctionClass::K1) rec.p2 = spec.p2;
    rec.region = region_name(region);
    if (region.tag == Region::Order) rec.alpha = region.alpha;
    rec.rho = res.rho;
    rec.residual = res.residual;
    rec.method = method == RootMethod::Polynomial ? "polynomial" : "margin_oracle";
    rec.sharp = try_certify(spec, region, res.rho, sharp_tol);
    return rec;
}

void print_record(const OutputRecord& rec) {
    std::cout << "class=" << rec.cls;
    if (rec.b) std::cout << " b=" << format_g9(*rec.b);
    if (rec.c) std::cout << " c=" << format_g9(*rec.c);
    if (rec.cls == "K1") {
        std::cout << " ntilde=" << format_g9(rec.p1);
    } else if (rec.cls == "K2") {
        std::cout << " m=" << format_g9(rec.p1) << " n=" << format_g9(*rec.p2);
    } else {
        std::cout << " u=" << format_g9(rec.p1) << " v=" << format_g9(*rec.p2);
    }
    std::cout << " region=" << rec.region;
    if (rec.alpha) std::cout << " alpha=" << format_g9(*rec.alpha);
    std::cout << " rho=" << format_g9(rec.rho) << " residual=" << format_g9(rec.residual)
              << " method=" << rec.method;
    if (rec.sharp) std::cout << " sharp=" << (*rec.sharp ? "yes" : "no");
    std::cout << "\n";
}

void write_table(const std::vector<OutputRecord>& records, const std::string& path,
                 const std::string& format) {
    std::ofstream out(path, std::ios::binary);  // binary: pin LF endings
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    try {
        if (format == "csv") {
            out << csv_header() << "\n";
            for (const auto& rec : records) out << to_csv_row(rec) << "\n";
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& rec : records) arr.push_back(to_json(rec));
            out << arr.dump(2) << "\n";
        }
        out.flush();
        if (!out) throw std::ios_base::failure("write failed: " + path);
    } catch (...) {
        out.close();
        std::remove(path.c_str());
        throw;
    }
}

void write_curve_csv(const std::string& path, const std::vector<double>& thetas,
                     const std::vector<Complex>& points) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out << "theta,u,v\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << format_g9(thetas[i]) << ',' << format_g9(points[i].real()) << ','
            << format_g9(points[i].imag()) << "\n";
    }
    if (!out.flush()) {
        out.close();
        std::remove(path.c_str());
        throw std::ios_base::failure("write failed: " + path);
    }
}

int run_radius(const std::string& cls_name, double b, std::optional<double> c,
               const std::string& region_name_arg, double alpha,
               const std::string& method_name) {
    const ClassSpec spec = make_spec(cls_name, b, c);
    const RegionKind region = region_from_name(region_name_arg, alpha);
    const RootMethod method = method_name == "margin" ? RootMethod::MarginOracle
                                                      : RootMethod::Polynomial;
    print_record(make_record(spec, region, method, 1e-6));
    return kExitOk;
}

int run_table(const std::string& cls_name, const std::string& b_grid,
              const std::string& c_grid, const std::vector<std::string>& region_names,
              double alpha, const std::string& out_path, const std::string& format) {
    const FunctionClass cls = class_from_name(cls_name);
    const std::vector<double> bs = parse_grid(b_grid).values();
    std::vector<std::optional<double>> cs;
    if (cls == FunctionClass::K1) {
        cs.push_back(std::nullopt);
    } else {
        if (c_grid.empty()) throw ParameterError(cls_name + " requires --c-grid");
        for (double c : parse_grid(c_grid).values()) cs.emplace_back(c);
    }

    std::vector<RegionKind> regions;
    if (region_names.empty() || (region_names.size() == 1 && region_names[0] == "all")) {
        regions = all_regions(alpha);
    } else {
        for (const auto& name : region_names) regions.push_back(region_from_name(name, alpha));
    }

    std::vector<OutputRecord> records;
    for (double b : bs) {
        for (const auto& c : cs) {
            ClassSpec spec;
            try {
                spec = make_spec(cls_name, b, c);
            } catch (const ParameterError&) {
                continue;  // grid point outside the class hypotheses
            }
            for (const auto& region : regions) {
                records.push_back(make_record(spec, region, RootMethod::Polynomial, 1e-6));
            }
        }
    }
    sort_records(records);
    write_table(records, out_path, format);
    std::cout << "wrote " << records.size() << " rows to " << out_path << "\n";
    return kExitOk;
}

nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["case"] = rep.case_id;
    j["class"] = class_name(rep.cls);
    j["b"] = rep.b ? nlohmann::json(*rep.b) : nlohmann::json(nullptr);
    j["c"] = rep.c ? nlohmann::json(*rep.c) : nlohmann::json(nullptr);
    j["p1"] = rep.p1;
    j["p2"] = rep.p2 ? nlohmann::json(*rep.p2) : nlohmann::json(nullptr);
    j["region"] = rep.region;
    j["alpha"] = rep.alpha ? nlohmann::json(*rep.alpha) : nlohmann::json(nullptr);
    j["rho_poly"] = rep.rho_poly;
    j["rho_margin"] = rep.rho_margin;
    j["abs_diff"] = rep.abs_diff;
    j["agreement"] = rep.agreement_pass;
    j["containment"] = rep.containment_pass;
    j["sharpness"] =
        rep.sharpness_pass ? nlohmann::json(*rep.sharpness_pass) : nlohmann::json(nullptr);
    j["notes"] = rep.notes;
    return j;
}

int run_verify(double tol, const std::string& out_path, const std::string& tamper_text,
               bool lemma_mode, std::optional<double> lemma_b,
               std::optional<double> lemma_alpha, int trials, std::uint64_t seed) {
    if (lemma_mode) {
        if (!lemma_b || !lemma_alpha) {
            std::cerr << "--lemma needs --b and --alpha\n";
            return kExitUsage;
        }
        try {
            const LemmaReport rep = check_lemma_bound(*lemma_b, *lemma_alpha, trials, seed);
            std::cout << "lemma check b=" << format_g9(rep.b)
                      << " alpha=" << format_g9(rep.alpha) << " trials=" << rep.trials
                      << " seed=" << rep.seed << " min_slack=" << format_g9(rep.min_slack)
                      << " violations=0\n";
            return kExitOk;
        } catch (const ViolationError& err) {
            std::cerr << "lemma check FAILED: " << err.what() << "\n";
            return kExitVerification;
        }
    }

    MatrixOptions options;
    options.tol = tol;
    if (!tamper_text.empty()) options.tamper = parse_tamper(tamper_text);

    const auto reports = full_matrix(default_matrix_cells(), default_matrix_regions(), options);
    std::size_t failed = 0;
    double worst_diff = 0.0;
    for (const auto& rep : reports) {
        worst_diff = std::max(worst_diff, rep.abs_diff);
        if (!rep.passed()) {
            ++failed;
            std::cout << "FAIL " << rep.case_id << ": " << rep.notes << "\n";
        }
    }
    std::cout << "verification matrix: " << reports.size() << " cells, "
              << (reports.size() - failed) << " passed, " << failed
              << " failed, worst route diff " << format_g9(worst_diff) << "\n";

    if (!out_path.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reports) arr.push_back(report_to_json(rep));
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot open output file: " + out_path);
        out << arr.dump(2) << "\n";
    }
    return failed == 0 ? kExitOk : kExitVerification;
}

int run_plot_data(const std::string& region_name_arg, double alpha,
                  const std::string& cls_name, std::optional<double> b,
                  std::optional<double> c, const std::string& prefix, int samples) {
    const RegionKind region = region_from_name(region_name_arg, alpha);

    const auto boundary = boundary_curve(region, samples);
    std::vector<double> thetas(boundary.size());
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        thetas[i] = 2.0 * std::numbers::pi * static_cast<double>(i) /
                    static_cast<double>(boundary.size() - 1);
    }
    write_curve_csv(prefix + "_region.csv", thetas, boundary);
    std::cout << "wrote " << prefix << "_region.csv\n";
    if (cls_name.empty()) return kExitOk;

    if (!b) throw ParameterError("image overlay requires --b");
    const ClassSpec spec = make_spec(cls_name, *b, c);
    const double rho = smallest_root_in_unit(build_polynomial(spec, region)).rho;
    const SharpnessSelection sel =
        sharpness_point(spec.cls, region, *b, spec.c.value_or(0.0));

    std::vector<double> image_thetas;
    std::vector<Complex> image;
    for (int k = 0; k <= samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / samples;
        image_thetas.push_back(theta);
        image.push_back(logderiv(sel.kind, std::polar(rho, theta)));
    }
    write_curve_csv(prefix + "_image.csv", image_thetas, image);

    const SharpnessPoint touch{sel.direction, rho};
    const Complex w = logderiv(sel.kind, touch.z());
    write_curve_csv(prefix + "_touch.csv", {std::arg(touch.z())}, {w});
    std::cout << "wrote " << prefix << "_image.csv and " << prefix
              << "_touch.csv (touch at z = " << direction_name(sel.direction)
              << ", rho = " << format_g9(rho) << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp radii of starlikeness for three classes of analytic functions"};
    app.require_subcommand(1);

    // radius
    auto* radius_cmd = app.add_subcommand("radius", "compute one radius");
    std::string cls_name, region_arg, method_name = "polynomial";
    double b = 0.0, alpha = 0.0;
    std::optional<double> c;
    radius_cmd->add_option("--class", cls_name, "K1 | K2 | K3")->required();
    radius_cmd->add_option("--b", b, "second-coefficient parameter b")->required();
    radius_cmd->add_option("--c", c, "second parameter c (K2, K3)");
    radius_cmd->add_option("--region", region_arg, "target region")->required();
    radius_cmd->add_option("--alpha", alpha, "order parameter (order region)");
    radius_cmd->add_option("--method", method_name, "polynomial | margin")
        ->check(CLI::IsMember({"polynomial", "margin"}));

    // table
    auto* table_cmd = app.add_subcommand("table", "sweep a parameter grid");
    std::string b_grid, c_grid, out_path, format = "csv";
    std::vector<std::string> region_names;
    table_cmd->add_option("--class", cls_name, "K1 | K2 | K3")->required();
    table_cmd->add_option("--b-grid", b_grid, "b grid lo:hi:step")->required();
    table_cmd->add_option("--c-grid", c_grid, "c grid lo:hi:step (K2, K3)");
    table_cmd->add_option("--regions", region_names, "region names or 'all'");
    table_cmd->add_option("--alpha", alpha, "order parameter");
    table_cmd->add_option("--out", out_path, "output file")->required();
    table_cmd->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification matrix");
    double tol = 1e-8;
    std::string tamper_text;
    bool lemma_mode = false;
    std::optional<double> lemma_b, lemma_alpha;
    int trials = 10000;
    std::uint64_t seed = 1;
    verify_cmd->add_option("--tol", tol, "route agreement tolerance");
    verify_cmd->add_option("--out", out_path, "machine-readable JSON report");
    verify_cmd->add_option("--tamper", tamper_text,
                           "fault injection CLASS:REGION:cIDX:DELTA (test hook)");
    verify_cmd->add_flag("--lemma", lemma_mode, "Monte Carlo derivative-bound check");
    verify_cmd->add_option("--b", lemma_b, "lemma parameter b");
    verify_cmd->add_option("--alpha", lemma_alpha, "lemma parameter alpha");
    verify_cmd->add_option("--trials", trials, "Monte Carlo trials");
    verify_cmd->add_option("--seed", seed, "RNG seed");

    // plot-data
    auto* plot_cmd = app.add_subcommand("plot-data", "export boundary/image curves");
    std::string plot_cls, prefix;
    int samples = 720;
    plot_cmd->add_option("--region", region_arg, "target region")->required();
    plot_cmd->add_option("--alpha", alpha, "order parameter");
    plot_cmd->add_option("--class", plot_cls, "K1 | K2 for the sharpness overlay");
    plot_cmd->add_option("--b", lemma_b, "b for the overlay");
    plot_cmd->add_option("--c", c, "c for the overlay (K2)");
    plot_cmd->add_option("--out-prefix", prefix, "output file prefix")->required();
    plot_cmd->add_option("--samples", samples, "curve samples")->check(CLI::Range(16, 1 << 20));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (radius_cmd->parsed()) {
            return run_radius(cls_name, b, c, region_arg, alpha, method_name);
        }
        if (table_cmd->parsed()) {
            return run_table(cls_name, b_grid, c_grid, region_names, alpha, out_path, format);
        }
        if (verify_cmd->parsed()) {
            return run_verify(tol, out_path, tamper_text, lemma_mode, lemma_b, lemma_alpha,
                              trials, seed);
        }
        if (plot_cmd->parsed()) {
            return run_plot_data(region_arg, alpha, plot_cls, lemma_b, c, prefix, samples);
        }
    } catch (const ParameterError& err) {
        std::cerr << "parameter error: " << err.what() << "\n";
        return kExitParameter;
    } catch (const DomainError& err) {
        std::cerr << "parameter error: " << err.what() << "\n";
        return kExitParameter;
    } catch (const UnsupportedError& err) {
        std::cerr << "unsupported: " << err.what() << "\n";
        return kExitParameter;
    } catch (const NoRootError& err) {
        std::cerr << "no root: " << err.what() << "\n";
        return kExitNoRoot;
    } catch (const ValidityError& err) {
        std::cerr << "no root in validity window: " << err.what() << "\n";
        return kExitNoRoot;
    } catch (const ViolationError& err) {
        std::cerr << "verification failure: " << err.what() << "\n";
        return kExitVerification;
    } catch (const CLI::ValidationError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
