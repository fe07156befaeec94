#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pistonwork/config.hpp"
#include "pistonwork/io.hpp"

namespace pistonwork::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalError = 3 };

// Each command writes its artifact into config.output_dir and a short report to `log`.
// Exceptions propagate; run_guarded maps them onto exit codes.
int cmd_amplitudes(const RunConfig& config, std::ostream& log);
int cmd_decompose(const RunConfig& config, const std::string& matrix_path, std::ostream& log);
int cmd_workdist(const RunConfig& config, std::ostream& log);
int cmd_sweep(const RunConfig& config, std::ostream& log);
int cmd_sample(const RunConfig& config, const std::string& program_path, std::ostream& log);
int cmd_noise(const RunConfig& config, std::ostream& log);

std::vector<io::SweepRow> dimension_sweep(const PistonParams& base, const std::string& variable,
                                          const std::vector<double>& grid, double threshold);

// Either the fixed `dim` or the fidelity truncation.
AmplitudeMatrix matrix_for(const RunConfig& config);

template <typename F>
int run_guarded(F&& body, std::ostream& err);

} // namespace pistonwork::cli

#include "pistonwork/error.hpp"

template <typename F>
int pistonwork::cli::run_guarded(F&& body, std::ostream& err) {
    try {
        return body();
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalError;
    }
}
