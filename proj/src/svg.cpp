#include "ppacf/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ppacf/errors.hpp"

namespace ppacf {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 52.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string figure_svg(const Autocorrelogram& acf) {
    const int K = static_cast<int>(acf.rho.size());
    double ymax = 0.0;
    for (double r : acf.rho) ymax = std::max(ymax, r);
    if (acf.upper_bounds && !acf.upper_bounds->empty()) {
        ymax = std::max(ymax, acf.upper_bounds->front());
    }
    ymax = std::max(ymax * 1.1, 0.1);

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double lag) {
        return kLeft + plot_w * lag / (static_cast<double>(K) + 1.0);
    };
    auto sy = [&](double rho) { return kTop + plot_h * (1.0 - rho / ymax); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth)
      << "\" height=\"" << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth)
      << " " << fmt(kHeight) << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    s << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(sy(0.0)) << "\" x2=\""
      << fmt(kWidth - kRight) << "\" y2=\"" << fmt(sy(0.0))
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\""
      << fmt(kLeft) << "\" y2=\"" << fmt(sy(0.0))
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // y ticks
    for (int i = 0; i <= 4; ++i) {
        const double v = ymax * i / 4.0;
        s << "<line x1=\"" << fmt(kLeft - 4.0) << "\" y1=\"" << fmt(sy(v))
          << "\" x2=\"" << fmt(kLeft) << "\" y2=\"" << fmt(sy(v))
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << fmt(kLeft - 8.0) << "\" y=\"" << fmt(sy(v) + 4.0)
          << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
    }
    // x ticks at integer lags, thinned when crowded
    const int step = std::max(1, (K + 19) / 20);
    for (int k = 1; k <= K; k += step) {
        s << "<line x1=\"" << fmt(sx(k)) << "\" y1=\"" << fmt(sy(0.0))
          << "\" x2=\"" << fmt(sx(k)) << "\" y2=\"" << fmt(sy(0.0) + 4.0)
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << fmt(sx(k)) << "\" y=\"" << fmt(sy(0.0) + 18.0)
          << "\" font-size=\"11\" text-anchor=\"middle\">" << k << "</text>\n";
    }

    // stems with markers
    for (int k = 1; k <= K; ++k) {
        const double rho = acf.rho[static_cast<std::size_t>(k - 1)];
        s << "<line class=\"stem\" x1=\"" << fmt(sx(k)) << "\" y1=\""
          << fmt(sy(0.0)) << "\" x2=\"" << fmt(sx(k)) << "\" y2=\""
          << fmt(sy(rho)) << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
        s << "<circle class=\"marker\" cx=\"" << fmt(sx(k)) << "\" cy=\""
          << fmt(sy(rho)) << "\" r=\"3\" fill=\"steelblue\"/>\n";
    }

    // common upper confidence bound, dashed
    if (acf.upper_bounds && !acf.upper_bounds->empty()) {
        const double ub = acf.upper_bounds->front();
        s << "<line class=\"bound\" x1=\"" << fmt(kLeft) << "\" y1=\""
          << fmt(sy(ub)) << "\" x2=\"" << fmt(kWidth - kRight) << "\" y2=\""
          << fmt(sy(ub))
          << "\" stroke=\"firebrick\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    }

    // axis labels
    s << "<text x=\"" << fmt(kLeft + plot_w / 2.0) << "\" y=\""
      << fmt(kHeight - 14.0)
      << "\" font-size=\"13\" text-anchor=\"middle\">lag</text>\n";
    s << "<text x=\"18\" y=\"" << fmt(kTop + plot_h / 2.0)
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << fmt(kTop + plot_h / 2.0) << ")\">rho</text>\n";
    s << "</svg>\n";
    return s.str();
}

void emit_figure(const Autocorrelogram& acf,
                 const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw invalid_argument("cannot open output file: " + path.string());
    }
    out << figure_svg(acf);
    if (!out) {
        throw invalid_argument("failed writing figure to " + path.string());
    }
}

}  // namespace ppacf
