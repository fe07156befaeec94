#include "pistonwork/commands.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pistonwork/error.hpp"
#include "pistonwork/interferometer.hpp"
#include "pistonwork/sampler.hpp"
#include "pistonwork/workdist.hpp"

namespace pistonwork::cli {

namespace {

constexpr double kRoundTripLimit = 1e-8;

std::string out_path(const RunConfig& c, const std::string& name) {
    std::filesystem::path dir(c.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw DomainError("cannot create output directory " + c.output_dir);
    return (dir / name).string();
}

std::vector<double> default_grid(const std::string& variable) {
    std::vector<double> g;
    if (variable == "v") {
        for (int k = 1; k <= 15; ++k) g.push_back(0.2 * k);
    } else {
        for (int k = 1; k <= 12; ++k) g.push_back(1.0 + 0.25 * k);
    }
    return g;
}

} // namespace

AmplitudeMatrix matrix_for(const RunConfig& config) {
    if (config.dim) return build_amplitude_matrix(config.params, *config.dim);
    return truncate_to_fidelity(config.params, config.fidelity_threshold);
}

int cmd_amplitudes(const RunConfig& config, std::ostream& log) {
    config.validate();
    const AmplitudeMatrix m = matrix_for(config);
    const std::string path = out_path(config, "amplitudes.json");
    io::write_text_file(path, io::matrix_to_json(m).dump(1) + "\n");
    log << "dim " << m.dim << "\nfidelity " << io::format_double(m.fidelity) << "\nj_max " << m.j_max
        << "\nwrote " << path << '\n';
    return kOk;
}

int cmd_decompose(const RunConfig& config, const std::string& matrix_path, std::ostream& log) {
    const AmplitudeMatrix m = io::matrix_from_json(io::read_json_file(matrix_path));
    const UnitaryProjection proj = unitary_project(m.entries);
    InterferometerProgram prog = clements_decompose(proj.unitary);
    prog.projection_residual = proj.residual;
    const ComplexMatrix back = resynthesize(prog);
    const double round_trip = max_abs_diff(back, proj.unitary);
    const double to_input = max_abs_diff(back, m.entries);

    const std::string path = out_path(config, "program.json");
    io::write_text_file(path, io::program_to_json(prog).dump(1) + "\n");
    log << "gates " << prog.gates.size() << "\nprojection_residual "
        << io::format_double(proj.residual) << "\nround_trip_error " << io::format_double(round_trip)
        << "\ndistance_to_input " << io::format_double(to_input) << "\nwrote " << path << '\n';
    if (!(round_trip <= kRoundTripLimit)) {
        log << "round-trip error exceeds " << kRoundTripLimit << '\n';
        return kNumericalError;
    }
    return kOk;
}

int cmd_workdist(const RunConfig& config, std::ostream& log) {
    config.validate();
    const AmplitudeMatrix m = matrix_for(config);
    const WorkDistribution wd = work_distribution(config.params, m.entries);
    std::ostringstream csv;
    io::write_workdist_csv(csv, wd);
    const std::string path = out_path(config, "workdist.csv");
    io::write_text_file(path, csv.str());
    log << "dim " << m.dim << "\nsupport_points " << wd.support.size() << "\ntotal_mass "
        << io::format_double(wd.total_mass()) << "\nmass_deficit "
        << io::format_double(wd.mass_deficit) << "\ndropped_mass " << io::format_double(wd.dropped_mass)
        << "\njarzynski_deviation " << io::format_double(jarzynski_deviation(wd, config.params))
        << "\nwrote " << path << '\n';
    return kOk;
}

std::vector<io::SweepRow> dimension_sweep(const PistonParams& base, const std::string& variable,
                                          const std::vector<double>& grid, double threshold) {
    if (variable != "v" && variable != "lambda_tau")
        throw DomainError("sweep variable must be 'v' or 'lambda_tau'");
    std::vector<io::SweepRow> rows;
    for (double value : grid) {
        PistonParams p = base;
        if (variable == "v") p.v = value;
        else p.lambda_tau = value;
        rows.push_back({value, truncate_to_fidelity(p, threshold).dim});
    }
    return rows;
}

int cmd_sweep(const RunConfig& config, std::ostream& log) {
    config.validate();
    const std::vector<double> grid =
        config.sweep_grid.empty() ? default_grid(config.sweep_variable) : config.sweep_grid;
    const auto rows = dimension_sweep(config.params, config.sweep_variable, grid, config.fidelity_threshold);
    std::ostringstream csv;
    io::write_sweep_csv(csv, rows);
    const std::string path = out_path(config, "sweep.csv");
    io::write_text_file(path, csv.str());
    log << "variable " << config.sweep_variable << "\npoints " << rows.size() << "\nwrote " << path << '\n';
    return kOk;
}

int cmd_sample(const RunConfig& config, const std::string& program_path, std::ostream& log) {
    config.validate();
    const InterferometerProgram prog = io::program_from_json(io::read_json_file(program_path));
    const ComplexMatrix u = resynthesize(prog);
    const OccupationVector input =
        config.input ? *config.input : OccupationVector::ground(config.params.n_bosons, prog.dim);
    if (input.modes() != prog.dim) throw DomainError("input occupation length must equal the program dimension");

    const OutcomeDistribution dist = output_distribution(u, input);
    const SampleCounts counts = sample_outcomes(dist, config.n_samples, config.seed);
    const std::string path = out_path(config, "counts.json");
    io::write_text_file(path, io::counts_to_json(counts, dist).dump(1) + "\n");
    log << "outcomes " << dist.outcomes.size() << "\ntotal_mass " << io::format_double(dist.total_mass)
        << "\nsamples " << counts.n_samples << "\ntotal_variation "
        << io::format_double(total_variation(dist, counts)) << "\nwrote " << path << '\n';
    return kOk;
}

int cmd_noise(const RunConfig& config, std::ostream& log) {
    config.validate();
    const AmplitudeMatrix m = matrix_for(config);
    const NoiseStudy ns = noise_study(config.params, m.entries, config.epsilon, config.trials,
                                      config.eval_points, config.seed);
    std::ostringstream csv;
    io::write_noise_csv(csv, ns);
    const std::string path = out_path(config, "noise.csv");
    io::write_text_file(path, csv.str());
    log << "dim " << ns.dim << "\ntrials " << config.trials << "\nepsilon "
        << io::format_double(config.epsilon) << "\nprojection_residual "
        << io::format_double(ns.projection_residual) << "\nwrote " << path << '\n';
    return kOk;
}

} // namespace pistonwork::cli
