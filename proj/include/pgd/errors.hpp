#pragma once

#include <stdexcept>
#include <string>

namespace pgd {

/// Adaptive quadrature ran out of panel budget before reaching the
/// requested tolerance. Carries the error estimate actually achieved so
/// sweep drivers can report partial results.
class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const std::string& what, double achieved, int panels)
        : std::runtime_error(what), achieved_error(achieved), panels_used(panels) {}

    double achieved_error;
    int panels_used;
};

/// The kernel denominator vanished (deep vacuum): the mean velocity is
/// defined there only as a limit. Callers may substitute a fill value.
class VacuumError : public std::runtime_error {
  public:
    VacuumError(double t, double x)
        : std::runtime_error("vacuum: kernel denominator below floor at t=" +
                             std::to_string(t) + ", x=" + std::to_string(x)),
          t(t), x(x) {}

    double t;
    double x;
};

/// Requested a classical solution at or past the first characteristic
/// crossing time.
class BreakdownError : public std::runtime_error {
  public:
    BreakdownError(double t, double t_star)
        : std::runtime_error("classical solution breaks down at t*=" +
                             std::to_string(t_star) + " (requested t=" +
                             std::to_string(t) + ")"),
          t(t), t_star(t_star) {}

    double t;
    double t_star;
};

/// Scenario-file parse or validation failure, with location diagnostics.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& what, int line = 0, std::string field = {})
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line(line), field(std::move(field)) {}

    int line;
    std::string field;
};

} // namespace pgd
