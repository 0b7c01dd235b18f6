#pragma once

#include <filesystem>
#include <string>

#include "ppacf/estimator.hpp"

namespace ppacf {

/// Stem plot of rho_hat against lag as a self-contained static SVG, with a
/// dashed horizontal line at the upper bound when bounds are present.
/// Byte-deterministic for identical input.
std::string figure_svg(const Autocorrelogram& acf);

void emit_figure(const Autocorrelogram& acf,
                 const std::filesystem::path& path);

}  // namespace ppacf
