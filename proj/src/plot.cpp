#include "lqw/experiment.hpp"

#include <ostream>

namespace lqw {

namespace {

std::string py_string(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\\' || c == '\'') out += '\\';
    out += c;
  }
  return out + "'";
}

std::string legend_label(const std::string& column, const CurveTable& table) {
  // Figure CSVs describe each series in a "series p_x: ..." comment.
  const std::string described = table.comment_value("series " + column);
  if (!described.empty()) {
    const auto cut = described.find(" peak_t=");
    return column + " (" + described.substr(0, cut) + ")";
  }
  return column;
}

}  // namespace

void write_plot_script(std::ostream& out, std::span<const std::filesystem::path> csv_paths) {
  std::vector<CurveTable> tables;
  for (const auto& p : csv_paths) tables.push_back(read_curve_table(p));

  out << "#!/usr/bin/env python3\n"
         "# Success probability vs. step. Usage: python3 script.py [output.png]\n"
         "import sys\n"
         "import matplotlib\n"
         "matplotlib.use('Agg')\n"
         "import matplotlib.pyplot as plt\n\n"
         "STYLES = [('k', '-'), ('r', '--'), ('g', ':'), ('b', '-.')]\n\n"
         "PANELS = [\n";
  for (std::size_t f = 0; f < tables.size(); ++f) {
    const auto& table = tables[f];
    std::string title = table.comment_value("figure");
    if (title.empty()) title = table.comment_value("graph");
    if (title.empty()) title = csv_paths[f].filename().string();
    out << "    {\n        'title': " << py_string(title) << ",\n        't': [";
    for (std::size_t r = 0; r < table.steps.size(); ++r) {
      out << (r ? ", " : "") << table.steps[r];
    }
    out << "],\n        'series': [\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << "            (" << py_string(legend_label(table.columns[c], table)) << ", [";
      for (std::size_t r = 0; r < table.series[c].size(); ++r) {
        out << (r ? ", " : "") << format_probability(table.series[c][r]);
      }
      out << "]),\n";
    }
    out << "        ],\n    },\n";
  }
  out << "]\n\n"
         "fig, axes = plt.subplots(len(PANELS), 1, figsize=(6.4, 4.0 * len(PANELS)), squeeze=False)\n"
         "for ax, panel in zip(axes[:, 0], PANELS):\n"
         "    for i, (label, p) in enumerate(panel['series']):\n"
         "        color, ls = STYLES[i % len(STYLES)]\n"
         "        ax.plot(panel['t'], p, color=color, linestyle=ls, label=label)\n"
         "    ax.set_title(panel['title'])\n"
         "    ax.set_xlabel('t')\n"
         "    ax.set_ylabel('p')\n"
         "    ax.set_xlim(panel['t'][0], panel['t'][-1])\n"
         "    ax.set_ylim(0, 1)\n"
         "    ax.legend(loc='upper right', fontsize='small')\n"
         "fig.tight_layout()\n"
         "fig.savefig(sys.argv[1] if len(sys.argv) > 1 else 'lqw_plot.png', dpi=150)\n";
}

}  // namespace lqw
