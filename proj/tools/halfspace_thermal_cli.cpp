// Command-line front end for the half-space transient heat solver.
//
// Subcommands:
//   eval      temperature at one (x, y, t) point
//   slice     fixed-x profile over a y range
//   grid      rectangular field map (optionally multi-threaded)
//   identity  kernel integral residuals against the exact indicator
//   validate  finite-difference cross-check of the semi-analytical field
//
// Exit codes: 0 success, 2 configuration/usage error, 3 numerical failure,
// 4 validation failure.
//
// Set HALFSPACE_THERMAL_LOG=1 (or higher) for progress notes on stderr.

#include <CLI11.hpp>

#include <halfspace_thermal/halfspace_thermal.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ht = halfspace_thermal;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numerical = 3;
constexpr int exit_validation = 4;

struct numerical_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int log_level() {
    static const int level = [] {
        const char* v = std::getenv("HALFSPACE_THERMAL_LOG");
        return v ? std::atoi(v) : 0;
    }();
    return level;
}

void log_note(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[halfspace-thermal] " << msg << "\n";
}

// Fixed 12-significant-digit scientific rendering; identical bytes for
// identical values on every run.
std::string num12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

// "start:end:count" -> uniformly spaced points (count >= 1; end >= start).
std::vector<double> parse_range(const std::string& text, const std::string& flag) {
    double start = 0.0, end = 0.0;
    long count = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &start, &end, &count, &extra) != 3)
        throw ht::config_error(flag + ": expected start:end:count, got '" + text + "'");
    if (!(std::isfinite(start) && std::isfinite(end)))
        throw ht::config_error(flag + ": endpoints must be finite");
    if (count < 1)
        throw ht::config_error(flag + ": empty range (count must be >= 1)");
    if (end < start)
        throw ht::config_error(flag + ": end must be >= start");
    std::vector<double> pts(static_cast<std::size_t>(count));
    if (count == 1) {
        pts[0] = start;
        return pts;
    }
    for (long i = 0; i < count; ++i)
        pts[static_cast<std::size_t>(i)] =
            start + (end - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    return pts;
}

ht::ProblemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ht::config_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ht::parse_problem_config(ss.str());
}

// Output sink: --out path or stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw ht::config_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

struct OutputRow {
    double x, y, t, temperature, error_estimate;
};

void write_rows(std::ostream& os, const std::vector<OutputRow>& rows,
                const std::string& format) {
    if (format == "csv") {
        os << "x,y,t,temperature,error_estimate\n";
        for (const auto& r : rows)
            os << num12(r.x) << ',' << num12(r.y) << ',' << num12(r.t) << ','
               << num12(r.temperature) << ',' << num12(r.error_estimate) << '\n';
        return;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{"x", r.x},
                     {"y", r.y},
                     {"t", r.t},
                     {"temperature", r.temperature},
                     {"error_estimate", r.error_estimate}});
    os << j.dump(2) << '\n';
}

// Shared per-command options.
struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    double rel_tol = 1e-8;
    bool physical = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_config = true) {
    // long-form help only, so single-letter option names like --h stay free
    cmd->set_help_flag("--help", "print this help message and exit");
    auto* cfg = cmd->add_option("--config", o.config_path,
                                "problem configuration JSON file");
    if (needs_config) cfg->required();
    cmd->add_option("--out", o.out_path, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--rel-tol", o.rel_tol,
                    "quadrature relative tolerance, in [1e-14, 1e-2]");
}

ht::QuadratureConfig quad_config(const CommonOpts& o) {
    if (!(o.rel_tol >= 1e-14 && o.rel_tol <= 1e-2))
        throw ht::config_error("--rel-tol must lie in [1e-14, 1e-2]");
    ht::QuadratureConfig q;
    q.rel_tol = o.rel_tol;
    q.abs_tol = std::min(1e-10, o.rel_tol);
    return q;
}

// Evaluate one scaled-or-physical point and convert the output accordingly.
OutputRow evaluate_point(double x, double y, double t, const ht::ProblemConfig& cfg,
                         const ht::QuadratureConfig& quad, bool physical,
                         bool* converged) {
    double xs = x, ys = y, ts = t;
    if (physical) {
        auto sp = ht::nondimensionalize({x, y, t, cfg.scales.T_star}, cfg.scales);
        xs = sp.x;
        ys = sp.y;
        ts = sp.t;
    }
    auto res = ht::temperature_xy(xs, ys, ts, cfg.spec, quad);
    if (!res.converged) *converged = false;
    OutputRow row{x, y, t, res.value, res.error_estimate};
    if (physical) {
        row.temperature = cfg.scales.T_star * (1.0 + res.value);
        row.error_estimate = cfg.scales.T_star * res.error_estimate;
    }
    return row;
}

int finish_field_output(const std::vector<OutputRow>& rows, const CommonOpts& o,
                        bool converged) {
    Sink sink(o.out_path);
    write_rows(sink.stream(), rows, o.format);
    if (!converged) {
        std::cerr << "error: quadrature did not converge for at least one point; "
                     "rerun with a looser --rel-tol\n";
        return exit_numerical;
    }
    return exit_ok;
}

int run_eval(const CommonOpts& o, double x, double y, double t) {
    auto cfg = load_config(o.config_path);
    auto quad = quad_config(o);
    log_note("eval at (" + std::to_string(x) + ", " + std::to_string(y) + ", "
             + std::to_string(t) + ")");
    bool converged = true;
    std::vector<OutputRow> rows{
        evaluate_point(x, y, t, cfg, quad, o.physical, &converged)};
    return finish_field_output(rows, o, converged);
}

int run_slice(const CommonOpts& o, double x, double t, const std::string& y_range) {
    auto cfg = load_config(o.config_path);
    auto quad = quad_config(o);
    auto ys = parse_range(y_range, "--y");
    log_note("slice at x = " + std::to_string(x) + ", " + std::to_string(ys.size())
             + " points");
    bool converged = true;
    std::vector<OutputRow> rows;
    rows.reserve(ys.size());
    for (double y : ys)
        rows.push_back(evaluate_point(x, y, t, cfg, quad, o.physical, &converged));
    return finish_field_output(rows, o, converged);
}

int run_grid(const CommonOpts& o, const std::string& x_range,
             const std::string& y_range, double t, unsigned parallel) {
    auto cfg = load_config(o.config_path);
    auto quad = quad_config(o);
    auto xs = parse_range(x_range, "--x");
    auto ys = parse_range(y_range, "--y");
    if (xs.size() < 2 || ys.size() < 2)
        throw ht::config_error("grid ranges need at least 2 points per axis");
    if (parallel < 1 || parallel > 256)
        throw ht::config_error("--parallel must lie in [1, 256]");
    if (!(xs.front() >= 0.0))
        throw ht::config_error("--x range must start at >= 0 (half-space)");

    // Scaled evaluation window; endpoints map linearly.
    double x0 = xs.front(), x1 = xs.back();
    double y0 = ys.front(), y1 = ys.back();
    double ts = t;
    if (o.physical) {
        auto lo = ht::nondimensionalize({x0, y0, t, cfg.scales.T_star}, cfg.scales);
        auto hi = ht::nondimensionalize({x1, y1, t, cfg.scales.T_star}, cfg.scales);
        x0 = lo.x;
        x1 = hi.x;
        y0 = lo.y;
        y1 = hi.y;
        ts = lo.t;
    }

    const auto start = std::chrono::steady_clock::now();
    auto grid = ht::evaluate_grid(x0, x1, xs.size(), y0, y1, ys.size(), ts,
                                  cfg.spec, quad, parallel);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    log_note("grid " + std::to_string(xs.size()) + "x" + std::to_string(ys.size())
             + " with " + std::to_string(parallel) + " thread(s): "
             + std::to_string(ms) + " ms");

    bool converged = true;
    auto out_value = [&](const ht::FieldResult& c) {
        return o.physical ? cfg.scales.T_star * (1.0 + c.value) : c.value;
    };
    auto out_error = [&](const ht::FieldResult& c) {
        return o.physical ? cfg.scales.T_star * c.error_estimate : c.error_estimate;
    };
    for (const auto& c : grid.cells)
        if (!c.converged) converged = false;

    Sink sink(o.out_path);
    if (o.format == "csv") {
        std::vector<OutputRow> rows;
        rows.reserve(grid.cells.size());
        for (std::size_t iy = 0; iy < ys.size(); ++iy)
            for (std::size_t ix = 0; ix < xs.size(); ++ix) {
                const auto& c = grid.at(ix, iy);
                rows.push_back({xs[ix], ys[iy], t, out_value(c), out_error(c)});
            }
        write_rows(sink.stream(), rows, "csv");
    } else {
        nlohmann::json j;
        j["t"] = t;
        j["x"] = xs;
        j["y"] = ys;
        auto temp = nlohmann::json::array();
        auto err = nlohmann::json::array();
        for (std::size_t iy = 0; iy < ys.size(); ++iy) {
            auto trow = nlohmann::json::array();
            auto erow = nlohmann::json::array();
            for (std::size_t ix = 0; ix < xs.size(); ++ix) {
                trow.push_back(out_value(grid.at(ix, iy)));
                erow.push_back(out_error(grid.at(ix, iy)));
            }
            temp.push_back(std::move(trow));
            err.push_back(std::move(erow));
        }
        j["temperature"] = std::move(temp);
        j["error_estimate"] = std::move(err);
        j["converged"] = converged;
        sink.stream() << j.dump(2) << '\n';
    }
    if (!converged) {
        std::cerr << "error: quadrature did not converge for at least one grid "
                     "cell (flagged in output)\n";
        return exit_numerical;
    }
    return exit_ok;
}

int run_identity(const CommonOpts& o, const std::vector<double>& thetas) {
    constexpr double theta_min = 1e-3;
    for (double th : thetas)
        if (std::abs(th) < theta_min)
            throw ht::config_error("--theta values must satisfy |theta| >= 1e-3");
    if (!(o.rel_tol >= 1e-14 && o.rel_tol <= 1e-2))
        throw ht::config_error("--rel-tol must lie in [1e-14, 1e-2]");

    bool all_converged = true;
    Sink sink(o.out_path);
    std::ostream& os = sink.stream();
    if (o.format == "csv") {
        os << "theta,value,expected,residual,converged\n";
        for (double th : thetas) {
            auto r = ht::identity_integral(th, o.rel_tol);
            const double expected = th < 0.0 ? 1.0 : 0.0;
            os << num12(th) << ',' << num12(r.value) << ',' << num12(expected)
               << ',' << num12(std::abs(r.value - expected)) << ','
               << (r.converged ? 1 : 0) << '\n';
            all_converged = all_converged && r.converged;
        }
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (double th : thetas) {
            auto r = ht::identity_integral(th, o.rel_tol);
            const double expected = th < 0.0 ? 1.0 : 0.0;
            j.push_back({{"theta", th},
                         {"value", r.value},
                         {"expected", expected},
                         {"residual", std::abs(r.value - expected)},
                         {"converged", r.converged}});
            all_converged = all_converged && r.converged;
        }
        os << j.dump(2) << '\n';
    }
    if (!all_converged) {
        std::cerr << "error: identity integral failed to converge for at least "
                     "one theta\n";
        return exit_numerical;
    }
    return exit_ok;
}

int run_validate(const CommonOpts& o, double h, double dt, double t_end,
                 double tol) {
    auto cfg = load_config(o.config_path);
    auto quad = quad_config(o);
    if (!(h >= 1e-3 && h <= 0.25))
        throw ht::config_error("--h must lie in [1e-3, 0.25]");
    if (!(dt >= 1e-6 && dt <= 1e-2))
        throw ht::config_error("--dt must lie in [1e-6, 1e-2]");
    if (!(t_end > 0.0 && t_end <= 0.05))
        throw ht::config_error(
            "--t must lie in (0, 0.05] so the truncated edges stay quiet");

    ht::FdGrid grid;
    grid.h = h;
    grid.dt = dt;
    log_note("validate: solving " + std::to_string(grid.nx()) + "x"
             + std::to_string(grid.ny()) + " reference to t = "
             + std::to_string(t_end));
    const auto start = std::chrono::steady_clock::now();
    auto fd = ht::fd_solve(cfg.spec, grid, t_end);
    const auto fd_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    log_note("validate: reference solve took " + std::to_string(fd_ms) + " ms");

    std::vector<std::pair<double, double>> points;
    for (double x : {0.05, 0.2})
        for (int i = 0; i < 41; ++i)
            points.emplace_back(x, -1.0 + 2.0 * i / 40.0);
    auto st = ht::fd_compare(fd, cfg.spec, points, tol, quad);

    Sink sink(o.out_path);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        nlohmann::json j;
        j["h"] = h;
        j["dt"] = dt;
        j["t"] = t_end;
        j["tolerance"] = tol;
        j["points"] = points.size();
        j["max_diff"] = st.max_diff;
        j["mean_diff"] = st.mean_diff;
        j["worst_point"] = {{"x", points[st.worst_index].first},
                            {"y", points[st.worst_index].second}};
        j["pass"] = st.pass;
        os << j.dump(2) << '\n';
    } else {
        os << "reference grid: h = " << num12(h) << ", dt = " << num12(dt)
           << ", t = " << num12(t_end) << "\n"
           << "sample points:  " << points.size() << " (x in {0.05, 0.2}, y in [-1, 1])\n"
           << "max |semi - fd|:  " << num12(st.max_diff) << " at (x, y) = ("
           << num12(points[st.worst_index].first) << ", "
           << num12(points[st.worst_index].second) << ")\n"
           << "mean |semi - fd|: " << num12(st.mean_diff) << "\n"
           << "tolerance:        " << num12(tol) << "\n"
           << "result:           " << (st.pass ? "PASS" : "FAIL") << "\n";
    }
    return st.pass ? exit_ok : exit_validation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transient heat conduction in a half-space with mixed "
                 "temperature/flux surface conditions: semi-analytical field "
                 "evaluation with built-in finite-difference validation"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    CommonOpts eval_o, slice_o, grid_o, ident_o, val_o;

    auto* eval_cmd = app.add_subcommand("eval", "temperature at one point");
    double ex = 0.0, ey = 0.0, et = 0.0;
    add_common(eval_cmd, eval_o);
    eval_cmd->add_option("--x", ex, "x coordinate (>= 0)")->required();
    eval_cmd->add_option("--y", ey, "y coordinate")->required();
    eval_cmd->add_option("--t", et, "time")->required();
    eval_cmd->add_flag("--physical", eval_o.physical,
                       "coordinates and times in physical units; output "
                       "temperatures in kelvin (config amplitudes stay scaled)");

    auto* slice_cmd = app.add_subcommand("slice", "fixed-x profile over y");
    double sx = 0.0, stt = 0.0;
    std::string s_yrange;
    add_common(slice_cmd, slice_o);
    slice_cmd->add_option("--x", sx, "x coordinate (>= 0)")->required();
    slice_cmd->add_option("--t", stt, "time")->required();
    slice_cmd->add_option("--y", s_yrange, "y range start:end:count")->required();
    slice_cmd->add_flag("--physical", slice_o.physical,
                        "coordinates and times in physical units; output "
                       "temperatures in kelvin (config amplitudes stay scaled)");

    auto* grid_cmd = app.add_subcommand("grid", "rectangular field map");
    std::string g_xrange = "0:0.5:51", g_yrange = "-0.5:0.5:101";
    double gt = 0.0;
    unsigned g_parallel = 1;
    add_common(grid_cmd, grid_o);
    grid_cmd->add_option("--x", g_xrange, "x range start:end:count");
    grid_cmd->add_option("--y", g_yrange, "y range start:end:count");
    grid_cmd->add_option("--t", gt, "time")->required();
    grid_cmd->add_option("--parallel", g_parallel, "worker threads (grid only)");
    grid_cmd->add_flag("--physical", grid_o.physical,
                       "coordinates and times in physical units; output "
                       "temperatures in kelvin (config amplitudes stay scaled)");

    auto* ident_cmd = app.add_subcommand(
        "identity", "kernel integral residuals against the exact indicator");
    std::vector<double> thetas;
    add_common(ident_cmd, ident_o, /*needs_config=*/false);
    ident_cmd->add_option("--theta", thetas, "theta values, |theta| >= 1e-3")
        ->required()
        ->expected(-1);

    auto* val_cmd = app.add_subcommand(
        "validate", "cross-check the field against the built-in reference solver");
    double vh = 0.01, vdt = 1e-4, vt = 0.02, vtol = 0.02;
    add_common(val_cmd, val_o);
    val_cmd->add_option("--h", vh, "reference mesh spacing");
    val_cmd->add_option("--dt", vdt, "reference time step");
    val_cmd->add_option("--t", vt, "comparison time (multiple of --dt)");
    val_cmd->add_option("--tol", vtol, "acceptance threshold on max |semi - fd|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eval_o, ex, ey, et);
        if (slice_cmd->parsed()) return run_slice(slice_o, sx, stt, s_yrange);
        if (grid_cmd->parsed())
            return run_grid(grid_o, g_xrange, g_yrange, gt, g_parallel);
        if (ident_cmd->parsed()) return run_identity(ident_o, thetas);
        if (val_cmd->parsed()) return run_validate(val_o, vh, vdt, vt, vtol);
    } catch (const ht::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const numerical_failure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_config;
}
