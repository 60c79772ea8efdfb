#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclekit/errors.hpp"

namespace cyclekit::verify {

/// One check outcome: pass iff residual <= tol.
struct Verdict {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;

    static Verdict of(std::string name, double residual, double tol) {
        return {std::move(name), residual, tol, residual <= tol};
    }
};

struct Options {
    long samples = 0;        // 0: per-check default
    std::uint64_t seed = 20260809;
    double tol = 0.0;        // 0: per-check default; scales the main tolerances
};

struct UnknownSuiteError : Error {
    using Error::Error;
};

std::vector<std::string> suite_names();

/// Runs one of {moebius, fscc, orthogonality, ghosts, metric, spectrum, analytic}.
std::vector<Verdict> run_suite(const std::string& name, const Options& opts = {});

std::vector<Verdict> suite_moebius(const Options& opts);
std::vector<Verdict> suite_fscc(const Options& opts);
std::vector<Verdict> suite_orthogonality(const Options& opts);
std::vector<Verdict> suite_ghosts(const Options& opts);
std::vector<Verdict> suite_metric(const Options& opts);
std::vector<Verdict> suite_spectrum(const Options& opts);
std::vector<Verdict> suite_analytic(const Options& opts);

bool all_pass(const std::vector<Verdict>& verdicts);

}  // namespace cyclekit::verify
