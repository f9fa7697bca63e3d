#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "semind/cli.hpp"
#include "semind/profiles.hpp"

namespace semind {

namespace {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct Marker {
  std::string name;
  double x, y;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

Series sample(const std::string& curve, double step) {
  const CurveId id = CurveId::parse(curve);
  const auto [lo, hi] = validity_interval(id);
  Series s{id.name(), {}};
  const long steps = std::lround(1.0 / step);
  for (long i = 0; i <= steps; ++i) {
    const double beta = std::min(1.0, i * step);
    if (beta < lo - 1e-12 || beta > hi + 1e-12) continue;
    try {
      s.points.emplace_back(beta, eval_curve(id, std::clamp(beta, lo, hi)).value);
    } catch (const std::exception&) {
      // Endpoints where the formula degenerates (e.g. no partition at beta = 0).
    }
  }
  return s;
}

Marker mark(const std::string& name, const std::string& curve, double x) {
  return {name, x, eval_curve(CurveId::parse(curve), x).value};
}

std::string to_csv(const std::vector<Series>& series, const std::vector<Marker>& markers) {
  std::string out = "beta,value,curve,flag\n";
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) out += fmt("%.6f", x) + "," + fmt("%.12g", y) + "," + s.name + ",curve\n";
  for (const auto& m : markers) out += fmt("%.12g", m.x) + "," + fmt("%.12g", m.y) + "," + m.name + ",marker\n";
  return out;
}

std::string to_svg(const std::string& title, const std::vector<Series>& series, const std::vector<Marker>& markers) {
  const double W = 640, H = 480, L = 70, R = 170, T = 40, B = 50;
  double ymax = 0;
  for (const auto& s : series)
    for (const auto& p : s.points) ymax = std::max(ymax, p.second);
  ymax = ymax > 0 ? ymax * 1.05 : 1;
  auto px = [&](double x) { return L + x * (W - L - R); };
  auto py = [&](double y) { return H - B - y / ymax * (H - T - B); };
  static const char* colors[] = {"#d62728", "#2ca02c", "#1f77b4", "#9467bd", "#ff7f0e", "#8c564b"};

  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
  o += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  o += "<text x=\"" + fmt("%.1f", (L + W - R) / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">" + title + "</text>\n";
  o += "<g stroke=\"black\" stroke-width=\"1\">\n";
  o += "<line x1=\"" + fmt("%.1f", px(0)) + "\" y1=\"" + fmt("%.1f", py(0)) + "\" x2=\"" + fmt("%.1f", px(1)) +
       "\" y2=\"" + fmt("%.1f", py(0)) + "\"/>\n";
  o += "<line x1=\"" + fmt("%.1f", px(0)) + "\" y1=\"" + fmt("%.1f", py(0)) + "\" x2=\"" + fmt("%.1f", px(0)) +
       "\" y2=\"" + fmt("%.1f", py(ymax)) + "\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = i / 4.0, y = ymax * i / 4.0;
    o += "<line x1=\"" + fmt("%.1f", px(x)) + "\" y1=\"" + fmt("%.1f", py(0)) + "\" x2=\"" + fmt("%.1f", px(x)) +
         "\" y2=\"" + fmt("%.1f", py(0) + 5) + "\"/>\n";
    o += "<line x1=\"" + fmt("%.1f", px(0) - 5) + "\" y1=\"" + fmt("%.1f", py(y)) + "\" x2=\"" + fmt("%.1f", px(0)) +
         "\" y2=\"" + fmt("%.1f", py(y)) + "\"/>\n";
  }
  o += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = i / 4.0, y = ymax * i / 4.0;
    o += "<text x=\"" + fmt("%.1f", px(x)) + "\" y=\"" + fmt("%.1f", py(0) + 18) + "\" text-anchor=\"middle\">" +
         fmt("%.2f", x) + "</text>\n";
    o += "<text x=\"" + fmt("%.1f", px(0) - 8) + "\" y=\"" + fmt("%.1f", py(y) + 4) + "\" text-anchor=\"end\">" +
         fmt("%.3g", y) + "</text>\n";
  }
  o += "<text x=\"" + fmt("%.1f", px(0.5)) + "\" y=\"" + fmt("%.1f", H - 12) +
       "\" text-anchor=\"middle\">&#946;</text>\n</g>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = colors[i % std::size(colors)];
    std::string pts;
    for (const auto& [x, y] : series[i].points) pts += fmt("%.2f", px(x)) + "," + fmt("%.2f", py(y)) + " ";
    if (!pts.empty()) pts.pop_back();
    o += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    const double ly = T + 10 + 18 * i;
    o += "<line x1=\"" + fmt("%.1f", W - R + 15) + "\" y1=\"" + fmt("%.1f", ly) + "\" x2=\"" + fmt("%.1f", W - R + 40) +
         "\" y2=\"" + fmt("%.1f", ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    o += "<text x=\"" + fmt("%.1f", W - R + 46) + "\" y=\"" + fmt("%.1f", ly + 4) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + series[i].name + "</text>\n";
  }
  for (const auto& m : markers) {
    o += "<circle cx=\"" + fmt("%.2f", px(m.x)) + "\" cy=\"" + fmt("%.2f", py(m.y)) + "\" r=\"3.5\" fill=\"black\"/>\n";
    o += "<text x=\"" + fmt("%.2f", px(m.x) + 6) + "\" y=\"" + fmt("%.2f", py(m.y) - 6) +
         "\" font-family=\"sans-serif\" font-size=\"10\">" + m.name + "=" + fmt("%.4f", m.x) + "</text>\n";
  }
  o += "</svg>\n";
  return o;
}

}  // namespace

Figure render_figure(int id, double step) {
  std::vector<Series> series;
  std::vector<Marker> markers;
  std::string title;
  auto add = [&](std::initializer_list<const char*> names) {
    for (const char* n : names) series.push_back(sample(n, step));
  };
  switch (id) {
    case 4:
      title = "AC4: disjoint-clique construction";
      add({"ac4_cliques"});
      markers.push_back(mark("beta", "ac4_cliques", 0.4));
      break;
    case 5:
      title = "P_EENN: clique, co-clique and regular hosts";
      add({"peenn_k", "peenn_kc", "r:2,2"});
      markers.push_back(mark("max", "peenn", 9.0 / 16.0));
      break;
    case 6:
      title = "S_{2,1}: upper-bound pieces";
      add({"prog_s:2,1", "c:2,1", "ell:2,1", "r:2,1", "conj_s21"});
      markers.push_back(mark("y", "prog_s:2,1", s21_threshold()));
      break;
    case 7:
      title = "S_{2,1}: lower-bound pieces";
      add({"cc:2,1", "c:2,1", "ellc:2,1", "prog_cs:2,1", "conj_s21_lower"});
      markers.push_back(mark("x", "c:2,1", s21_lower_crossover()));
      break;
    default:
      throw std::invalid_argument("unsupported figure " + std::to_string(id) + " (expected 4, 5, 6 or 7)");
  }
  return {to_csv(series, markers), to_svg(title, series, markers)};
}

}  // namespace semind
