// Command-line front end: exact chord-length and point-distance
// distributions for triangles and glued triangle pairs, plus the matching
// samplers.  Output is CSV with a header row, values printed with six
// significant digits; identical invocations produce identical bytes.

#include "tridist/chord_dist.hpp"
#include "tridist/closed_forms.hpp"
#include "tridist/decompose.hpp"
#include "tridist/errors.hpp"
#include "tridist/geometry.hpp"
#include "tridist/montecarlo.hpp"
#include "tridist/piecewise.hpp"
#include "tridist/point_dist.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

constexpr double kKsThreshold = 0.02;

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw tridist::Error("cannot open output file '" + out_path + "'");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.good()) {
        throw tridist::Error("failed writing output file '" + out_path + "'");
    }
}

std::vector<double> make_grid(double max_value, int points) {
    if (points < 2) {
        throw tridist::ParseError("--grid needs at least 2 points");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = max_value * static_cast<double>(i) / (points - 1);
    }
    return grid;
}

// Emitted cumulative columns must still look like a CDF; a violation means
// an internal evaluation bug, reported as a runtime failure.
void check_cdf_column(const std::vector<double>& values) {
    constexpr double kSlack = 1e-9;
    double prev = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (!std::isfinite(v) || v < -kSlack || v > 1 + kSlack ||
            (i > 0 && v < prev - kSlack)) {
            throw tridist::NotACdf("emitted cumulative column is not a CDF (row " +
                                   std::to_string(i + 1) + ", value " + std::to_string(v) + ")");
        }
        prev = v;
    }
}

std::string render_rows(const std::string& header, const std::vector<double>& xs,
                        const std::vector<double>& ys) {
    std::string text = header;
    text.push_back('\n');
    for (std::size_t i = 0; i < xs.size(); ++i) {
        text += fmt6(xs[i]);
        text.push_back(',');
        text += fmt6(ys[i]);
        text.push_back('\n');
    }
    return text;
}

// Piecewise-linear CDF table from a two-column CSV (optional header row).
std::function<double(double)> load_cdf_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw tridist::ParseError("cannot open CDF table '" + path + "'");
    }
    std::vector<double> xs, ys;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw tridist::ParseError("CDF table needs two comma-separated columns (line " +
                                      std::to_string(line_no) + ")");
        }
        double x = 0.0, y = 0.0;
        try {
            std::size_t used = 0;
            x = std::stod(line.substr(0, comma), &used);
            if (used != comma) {
                throw std::invalid_argument("trailing characters");
            }
            const std::string rest = line.substr(comma + 1);
            y = std::stod(rest, &used);
            if (used != rest.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            if (line_no == 1) {
                continue; // header row
            }
            throw tridist::ParseError("bad number in CDF table line " + std::to_string(line_no));
        }
        xs.push_back(x);
        ys.push_back(y);
    }
    if (xs.size() < 2) {
        throw tridist::ParseError("CDF table needs at least two data rows");
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (!(xs[i] < xs[i + 1])) {
            throw tridist::ParseError("CDF table distances must be strictly increasing");
        }
        if (ys[i + 1] < ys[i] - 1e-9) {
            throw tridist::ParseError("CDF table values must be nondecreasing");
        }
    }
    return [xs = std::move(xs), ys = std::move(ys)](double d) {
        if (d <= xs.front()) {
            return ys.front();
        }
        if (d >= xs.back()) {
            return ys.back();
        }
        const auto it = std::lower_bound(xs.begin(), xs.end(), d);
        const std::size_t j = static_cast<std::size_t>(it - xs.begin());
        const double t = (d - xs[j - 1]) / (xs[j] - xs[j - 1]);
        return ys[j - 1] + t * (ys[j] - ys[j - 1]);
    };
}

struct CrossTarget {
    std::function<double(double)> cdf;
    std::function<double(double)> pdf;
    double diameter = 0.0;
};

CrossTarget resolve_cross(const std::string& config, const std::string& t1_spec,
                          const std::string& t2_spec, const std::string& table_path,
                          double shared_side, double diameter) {
    CrossTarget target;
    if (!config.empty()) {
        tridist::PairGeometry pair = tridist::named_pair(config);
        target.cdf = pair.cross_cdf;
        target.pdf = pair.cross_pdf;
        target.diameter = pair.diameter;
        return target;
    }
    if (t1_spec.empty() || t2_spec.empty() || table_path.empty()) {
        throw tridist::ParseError(
            "cross needs --config, or --t1/--t2/--whole-cdf (with --shared-side and --diameter)");
    }
    if (!(shared_side > 0) || !(diameter > 0)) {
        throw tridist::ParseError("custom pairs need positive --shared-side and --diameter");
    }
    const tridist::Triangle t1 = tridist::parse_triangle_spec(t1_spec);
    const tridist::Triangle t2 = tridist::parse_triangle_spec(t2_spec);
    const tridist::TrianglePairConfig cfg =
        tridist::make_pair_config(t1, t2, tridist::PairShape::Convex, load_cdf_table(table_path),
                                  diameter, shared_side);
    target.cdf = tridist::cross_cdf_convex(cfg);
    target.diameter = diameter;
    const auto cdf = target.cdf;
    const double h = 1e-6 * diameter;
    // No closed density for a tabulated union; differentiate the cross CDF.
    target.pdf = [cdf, h](double d) { return (cdf(d + h) - cdf(d - h)) / (2 * h); };
    return target;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chord-length and point-distance distributions for triangles"};
    app.require_subcommand(1);

    std::string tri_spec, out_path;
    int grid = 200;
    bool want_pdf = false, want_cdf = false;

    auto add_common = [&](CLI::App* cmd, bool with_kind) {
        cmd->add_option("--grid", grid, "number of evaluation points (default 200)");
        cmd->add_option("-o,--output", out_path, "write CSV here instead of stdout");
        if (with_kind) {
            cmd->add_flag("--pdf", want_pdf, "emit the density");
            cmd->add_flag("--cdf", want_cdf, "emit the cumulative function (default)");
        }
    };

    CLI::App* cld = app.add_subcommand("cld", "chord-length CDF of a triangle on a grid");
    cld->add_option("--triangle", tri_spec, "angles:<a>,<b>,<g>@a=<len> or sides:<a>,<b>,<c>")
        ->required();
    add_common(cld, false);

    CLI::App* pdist = app.add_subcommand("pdist", "point-distance density/CDF of a triangle");
    pdist->add_option("--triangle", tri_spec, "triangle spec")->required();
    add_common(pdist, true);

    std::string config, t1_spec, t2_spec, table_path;
    double shared_side = 0.0, diameter = 0.0;
    CLI::App* cross =
        app.add_subcommand("cross", "distance density/CDF between two glued triangles");
    cross->add_option("--config", config, "named pair: rhombus-pi6 or concave-pi6");
    cross->add_option("--t1", t1_spec, "first triangle spec (custom convex pair)");
    cross->add_option("--t2", t2_spec, "second triangle spec (custom convex pair)");
    cross->add_option("--whole-cdf", table_path, "CSV d,cdf table for the union's distances");
    cross->add_option("--shared-side", shared_side, "length of the common side");
    cross->add_option("--diameter", diameter, "diameter of the union");
    add_common(cross, true);

    double dtheta = -1.0, dd = -1.0;
    CLI::App* sweep = app.add_subcommand("sweep", "rotational-scan chord sampler");
    sweep->add_option("--triangle", tri_spec, "triangle spec")->required();
    sweep->add_option("--dtheta", dtheta, "direction step in radians (default pi/180)");
    sweep->add_option("--dd", dd, "offset step (default 1e-3)");
    sweep->add_option("-o,--output", out_path, "write CSV here instead of stdout");

    std::uint64_t seed = 0;
    std::size_t pairs = 0;
    CLI::App* simulate = app.add_subcommand("simulate", "sample point-pair distances");
    simulate->add_option("--triangle", tri_spec, "triangle spec (both points in it)");
    simulate->add_option("--config", config, "named pair (one point per triangle)");
    simulate->add_option("--pairs", pairs, "number of point pairs")->required();
    simulate->add_option("--seed", seed, "RNG seed (default 0)");
    simulate->add_option("-o,--output", out_path, "write CSV here instead of stdout");

    CLI::App* verify =
        app.add_subcommand("verify", "KS test of the sampler against the exact CDF");
    verify->add_option("--triangle", tri_spec, "triangle spec");
    verify->add_option("--config", config, "named pair id");
    verify->add_option("--pairs", pairs, "number of point pairs")->required();
    verify->add_option("--seed", seed, "RNG seed (default 0)");

    try {
        app.parse(argc, argv);

        if (*cld) {
            const tridist::Triangle t = tridist::parse_triangle_spec(tri_spec);
            const tridist::PiecewiseFn f = tridist::chord_cdf(t);
            const std::vector<double> xs = make_grid(t.a, grid);
            std::vector<double> ys;
            ys.reserve(xs.size());
            for (double x : xs) {
                ys.push_back(f(x));
            }
            check_cdf_column(ys);
            write_output(render_rows("l,F", xs, ys), out_path);
        } else if (*pdist) {
            if (want_pdf && want_cdf) {
                throw tridist::ParseError("choose one of --pdf/--cdf");
            }
            const tridist::Triangle t = tridist::parse_triangle_spec(tri_spec);
            const tridist::PointDistances dist = tridist::point_distances(t);
            for (const std::string& note : dist.fallback_notes) {
                std::cerr << "note: " << note << "\n";
            }
            const std::vector<double> xs = make_grid(t.a, grid);
            std::vector<double> ys;
            ys.reserve(xs.size());
            const tridist::PiecewiseFn& f = want_pdf ? dist.pdf : dist.cdf;
            for (double x : xs) {
                ys.push_back(f(x));
            }
            if (!want_pdf) {
                check_cdf_column(ys);
            }
            write_output(render_rows(want_pdf ? "d,pdf" : "d,cdf", xs, ys), out_path);
        } else if (*cross) {
            if (want_pdf && want_cdf) {
                throw tridist::ParseError("choose one of --pdf/--cdf");
            }
            const CrossTarget target =
                resolve_cross(config, t1_spec, t2_spec, table_path, shared_side, diameter);
            const std::vector<double> xs = make_grid(target.diameter, grid);
            std::vector<double> ys;
            ys.reserve(xs.size());
            const auto& f = want_pdf ? target.pdf : target.cdf;
            for (double x : xs) {
                ys.push_back(f(x));
            }
            if (!want_pdf) {
                check_cdf_column(ys);
            }
            write_output(render_rows(want_pdf ? "d,pdf" : "d,cdf", xs, ys), out_path);
        } else if (*sweep) {
            const tridist::Triangle t = tridist::parse_triangle_spec(tri_spec);
            std::vector<tridist::ChordSample> samples;
            const double use_dtheta = dtheta > 0 ? dtheta : std::numbers::pi / 180.0;
            const double use_dd = dd > 0 ? dd : 1e-3;
            samples = tridist::chord_sweep(t, use_dtheta, use_dd);
            std::string text = "theta,length\n";
            for (const auto& s : samples) {
                text += fmt6(s.theta);
                text.push_back(',');
                text += fmt6(s.length);
                text.push_back('\n');
            }
            write_output(text, out_path);
        } else if (*simulate) {
            if (tri_spec.empty() == config.empty()) {
                throw tridist::ParseError("simulate needs exactly one of --triangle/--config");
            }
            const tridist::RunSpec spec{seed, pairs};
            std::vector<double> samples;
            if (!tri_spec.empty()) {
                samples =
                    tridist::pair_distance_samples(tridist::parse_triangle_spec(tri_spec), spec);
            } else {
                const tridist::PairGeometry pair = tridist::named_pair(config);
                samples = tridist::cross_distance_samples(pair.p1, pair.p2, spec);
            }
            std::string text = "distance\n";
            for (double s : samples) {
                text += fmt6(s);
                text.push_back('\n');
            }
            write_output(text, out_path);
        } else if (*verify) {
            if (tri_spec.empty() == config.empty()) {
                throw tridist::ParseError("verify needs exactly one of --triangle/--config");
            }
            const tridist::RunSpec spec{seed, pairs};
            double ks = 0.0;
            if (!tri_spec.empty()) {
                const tridist::Triangle t = tridist::parse_triangle_spec(tri_spec);
                const tridist::EmpiricalCDF emp = tridist::sample_pair_distances(t, spec);
                auto cdf = std::make_shared<tridist::PiecewiseFn>(tridist::pdist_cdf(t));
                ks = tridist::ks_statistic(emp, [cdf](double d) { return (*cdf)(d); });
            } else {
                const tridist::PairGeometry pair = tridist::named_pair(config);
                const tridist::EmpiricalCDF emp =
                    tridist::sample_cross_distances(pair.p1, pair.p2, spec);
                ks = tridist::ks_statistic(emp, pair.cross_cdf);
            }
            const bool pass = ks <= kKsThreshold;
            std::printf("ks=%s pass=%s threshold=%s\n", fmt6(ks).c_str(),
                        pass ? "true" : "false", fmt6(kKsThreshold).c_str());
            std::fflush(stdout);
            return pass ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const tridist::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tridist::InvalidAngles& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tridist::DegenerateTriangle& e) {
        std::cerr << "error: degenerate triangle: " << e.what() << "\n";
        return 2;
    } catch (const tridist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
