#include "isoprof/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isoprof/certificate.hpp"

namespace isoprof {

void write_profile_csv(std::ostream& os, const ProfileCurve& curve,
                       const std::vector<double>& volumes) {
    os << "volume,area,parameter,branch\n";
    for (const double v : volumes) {
        const ProfileSample s = curve.sample(v);
        os << format_double(s.volume) << "," << format_double(s.area) << ","
           << format_double(s.parameter) << "," << (s.flat ? "flat" : "ball") << "\n";
    }
}

void write_comparison_csv(std::ostream& os, const std::vector<double>& volumes,
                          const std::vector<double>& lhs, const std::vector<double>& rhs) {
    os << "volume,lhs,rhs_scaled,margin\n";
    for (std::size_t i = 0; i < volumes.size(); ++i)
        os << format_double(volumes[i]) << "," << format_double(lhs[i]) << ","
           << format_double(rhs[i]) << "," << format_double(lhs[i] - rhs[i]) << "\n";
}

namespace {

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_svg(std::ostream& os, const std::string& title,
               const std::vector<PlotSeries>& series) {
    const double width = 800, height = 600;
    const double ml = 70, mr = 20, mt = 40, mb = 50;  // margins

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const PlotSeries& s : series) {
        for (const double x : s.x) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
        }
        for (const double y : s.y) {
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmax > xmin)) xmax = xmin + 1;
    if (!(ymax > ymin)) ymax = ymin + 1;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    const auto py = [&](double y) {
        return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
    };

    static const char* kColors[] = {"#1f5fa8", "#c23b22", "#3a7d44", "#7b4b94"};

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
    os << "<!-- isoprof plot -->\n";
    os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    os << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"16\">"
       << title << "</text>\n";
    // axes
    os << "<line x1=\"" << fmt_coord(ml) << "\" y1=\"" << fmt_coord(height - mb) << "\" x2=\""
       << fmt_coord(width - mr) << "\" y2=\"" << fmt_coord(height - mb)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << fmt_coord(ml) << "\" y1=\"" << fmt_coord(height - mb) << "\" x2=\""
       << fmt_coord(ml) << "\" y2=\"" << fmt_coord(mt) << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        os << "<text x=\"" << fmt_coord(px(xv)) << "\" y=\"" << fmt_coord(height - mb + 18)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
           << fmt_tick(xv) << "</text>\n";
        os << "<text x=\"" << fmt_coord(ml - 6) << "\" y=\"" << fmt_coord(py(yv) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_tick(yv)
           << "</text>\n";
    }
    std::size_t ci = 0;
    for (const PlotSeries& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << kColors[ci % 4] << "\" stroke-width=\"1.5\"";
        if (s.dashed) os << " stroke-dasharray=\"7,4\"";
        os << " points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) os << " ";
            os << fmt_coord(px(s.x[i])) << "," << fmt_coord(py(s.y[i]));
        }
        os << "\"/>\n";
        os << "<text x=\"" << fmt_coord(width - mr - 10) << "\" y=\""
           << fmt_coord(mt + 20 + 18 * static_cast<double>(ci)) << "\" text-anchor=\"end\" "
           << "font-family=\"sans-serif\" font-size=\"12\" fill=\"" << kColors[ci % 4] << "\">"
           << s.name << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
}

std::vector<RadialTestFunction> load_test_functions(std::istream& is) {
    std::vector<RadialTestFunction> out;
    std::vector<double> radii, values;
    const auto flush = [&] {
        if (!radii.empty()) {
            out.push_back(RadialTestFunction::cylinder(radii, values));
            radii.clear();
            values.clear();
        }
    };
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double r, v;
        if (ls >> r >> v) {
            radii.push_back(r);
            values.push_back(v);
        } else if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
        } else {
            throw std::runtime_error("test function file: unparsable line: " + line);
        }
    }
    flush();
    return out;
}

void save_test_function(std::ostream& os, const RadialTestFunction& f) {
    for (std::size_t i = 0; i < f.radii().size(); ++i)
        os << format_double(f.radii()[i]) << " " << format_double(f.values()[i]) << "\n";
    os << "\n";
}

}  // namespace isoprof
