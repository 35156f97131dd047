#include "tcqed/app.hpp"

#include "tcqed/error.hpp"

#include <array>
#include <numbers>
#include <string>

namespace tcqed {
namespace {

constexpr double pi = std::numbers::pi;

struct Panel {
  const char* name;
  double big_omega;
  double gamma;
  int n;
  std::vector<double> thetas;
  // Which of big_omega / gamma / theta were picked for the panel rather
  // than read from the caption.
  std::vector<std::string> reconstructed;
};

struct Figure {
  const char* id;
  std::vector<std::string> caption;
  std::vector<Panel> panels;
};

const std::vector<Figure>& figures() {
  static const std::vector<Figure> table = {
      {"fig1",
       {"g=1", "big_omega=1", "gamma=0", "n=0"},
       {{"a", 1.0, 0.0, 0, {0.0, pi / 8}, {"theta"}},
        {"b", 1.0, 0.0, 0, {pi / 4, 3 * pi / 8}, {"theta"}},
        {"c", 1.0, 0.0, 0, {0.0, 5 * pi / 8}, {"theta"}},
        {"d", 1.0, 0.0, 0, {3 * pi / 4, 7 * pi / 8}, {"theta"}}}},
      {"fig2",
       {"g=1", "gamma=0", "n=0"},
       {{"a", 0.0, 0.0, 0, {0.0, pi / 8}, {"big_omega", "theta"}},
        {"b", 0.0, 0.0, 0, {pi / 4, 3 * pi / 8}, {"big_omega", "theta"}},
        {"c", 0.5, 0.0, 0, {0.0, pi / 8}, {"big_omega", "theta"}},
        {"d", 0.5, 0.0, 0, {pi / 4, 3 * pi / 8}, {"big_omega", "theta"}}}},
      {"fig3",
       {"g=1", "gamma=0", "n=0"},
       {{"a", 5.0, 0.0, 0, {0.0, pi / 8}, {"big_omega", "theta"}},
        {"b", 5.0, 0.0, 0, {pi / 4, 3 * pi / 8}, {"big_omega", "theta"}},
        {"c", 10.0, 0.0, 0, {0.0, pi / 8}, {"big_omega", "theta"}},
        {"d", 10.0, 0.0, 0, {pi / 4, 3 * pi / 8}, {"big_omega", "theta"}}}},
      {"fig4",
       {"g=1", "n=0"},
       {{"a", 1.0, 0.01, 0, {0.0, pi / 8, 3 * pi / 4}, {"big_omega", "gamma", "theta"}},
        {"b", 1.0, 0.1, 0, {pi / 4, 5 * pi / 8, 3 * pi / 4}, {"big_omega", "gamma", "theta"}},
        {"c", 0.5, 0.1, 0, {0.0, pi / 8}, {"theta"}},
        {"d", 5.0, 0.1, 0, {0.0, pi / 8}, {"theta"}}}},
      {"fig5",
       {"g=1", "n=1", "gamma=0 (a,b)", "gamma=0.1 (c,d)"},
       {{"a", 0.0, 0.0, 1, {0.0}, {"big_omega", "theta"}},
        {"a", 1.0, 0.0, 1, {0.0}, {"big_omega", "theta"}},
        {"b", 1.0, 0.0, 1, {pi / 8, pi / 4}, {"big_omega", "theta"}},
        {"c", 0.0, 0.1, 1, {0.0}, {"big_omega", "theta"}},
        {"c", 1.0, 0.1, 1, {0.0}, {"big_omega", "theta"}},
        {"d", 1.0, 0.1, 1, {pi / 8, pi / 4}, {"big_omega", "theta"}}}},
      {"fig6",
       {"g=1", "gamma=0", "n=0"},
       {{"a", 1.0, 0.0, 0, {0.0, pi / 8}, {"theta"}},
        {"b", 1.0, 0.0, 0, {pi / 4, 3 * pi / 4}, {"theta"}},
        {"c", 0.5, 0.0, 0, {0.0, pi / 8}, {"theta"}},
        {"d", 0.5, 0.0, 0, {pi / 4, 5 * pi / 8}, {"theta"}}}},
      {"fig7",
       {"g=1", "gamma=0.1", "n=0"},
       {{"a", 1.0, 0.1, 0, {0.0, pi / 8, 3 * pi / 4}, {"big_omega", "theta"}},
        {"b", 1.0, 0.1, 0, {pi / 4, 5 * pi / 8}, {"big_omega", "theta"}},
        {"c", 0.5, 0.1, 0, {0.0, pi / 8}, {"big_omega", "theta"}},
        {"d", 5.0, 0.1, 0, {0.0, pi / 8}, {"big_omega", "theta"}}}},
      {"fig8",
       {"g=1", "big_omega=5", "n=0"},
       {{"a", 5.0, 0.0, 0, {0.0, pi / 8, pi / 4, 3 * pi / 4}, {"gamma", "theta"}},
        {"b", 5.0, 0.1, 0, {0.0, pi / 8, pi / 4, 3 * pi / 4}, {"gamma", "theta"}}}},
  };
  return table;
}

const Figure& find_figure(std::string_view id) {
  for (const auto& f : figures())
    if (id == f.id) return f;
  throw Error(Errc::UnknownFigure, "unknown figure '" + std::string(id) + "' (expected fig1 ... fig8)");
}

}  // namespace

std::vector<RunConfig> figure_preset(std::string_view id) {
  const Figure& fig = find_figure(id);
  std::vector<RunConfig> out;
  for (const auto& panel : fig.panels) {
    for (double theta : panel.thetas) {
      RunConfig cfg;
      cfg.params.g = 1.0;
      cfg.params.omega = 0.0;
      cfg.params.big_omega = panel.big_omega;
      cfg.params.gamma = panel.gamma;
      cfg.params.n = panel.n;
      cfg.params.theta = theta;
      cfg.label = std::string(fig.id) + "(" + panel.name + ")";
      cfg.reconstructed = panel.reconstructed;
      out.push_back(std::move(cfg));
    }
  }
  return out;
}

std::vector<std::string> figure_caption_params(std::string_view id) { return find_figure(id).caption; }

}  // namespace tcqed
