#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "lusztig/wiring.hpp"

namespace lusztig {

namespace {

std::string render_ascii(const WiringDiagram& diagram, const std::vector<Chamber>& chamber_list) {
  const int strings = diagram.word().rank().strings();
  const std::size_t k = diagram.word().size();

  std::size_t widest_label = 0;
  for (const Chamber& c : chamber_list) widest_label = std::max(widest_label, c.set.label().size());
  const std::size_t width = std::max<std::size_t>(4, widest_label + 1);
  const std::size_t centre = width / 2;
  const std::size_t margin = std::to_string(strings).size() + 1;

  auto track = [&](int level) { return static_cast<std::size_t>(2 * (level - 1)); };
  const std::size_t rows = static_cast<std::size_t>(2 * strings - 1);
  const std::size_t columns = margin + k * width + 1 + margin;
  std::vector<std::string> canvas(rows + 1, std::string(columns, ' '));

  for (int level = 1; level <= strings; ++level) {
    std::string& row = canvas[track(level)];
    const std::string left = std::to_string(diagram.string_at(0, level));
    const std::string right = std::to_string(diagram.string_at(k, level));
    row.replace(0, left.size(), left);
    std::fill(row.begin() + margin, row.begin() + margin + k * width + 1, '-');
    row.replace(margin + k * width + 2, right.size(), right);
  }

  for (const Crossing& c : diagram.crossings()) {
    const std::size_t x = margin + c.index * width + centre;
    std::string& upper = canvas[track(c.level)];
    std::string& lower = canvas[track(c.level + 1)];
    upper[x - 1] = '\\';
    upper[x] = ' ';
    upper[x + 1] = '/';
    canvas[track(c.level) + 1][x] = 'X';
    lower[x - 1] = '/';
    lower[x] = ' ';
    lower[x + 1] = '\\';
  }

  for (const Chamber& c : chamber_list) {
    const std::string label = c.set.label();
    const std::size_t xs = margin + c.left * width + centre;
    const std::size_t xt = margin + c.right * width + centre;
    const std::size_t start = (xs + xt + 1) / 2 - label.size() / 2;
    canvas[track(c.level) + 1].replace(start, label.size(), label);
  }

  std::string& letters = canvas[rows];
  for (std::size_t j = 0; j < k; ++j) {
    const std::string letter = std::to_string(diagram.word()[j]);
    letters.replace(margin + j * width + centre, letter.size(), letter);
  }

  std::string out;
  for (std::string& row : canvas) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const WiringDiagram& diagram, const std::vector<Chamber>& chamber_list) {
  constexpr int unit = 40;
  constexpr int margin = 30;
  const int strings = diagram.word().rank().strings();
  const int k = static_cast<int>(diagram.word().size());
  const int width = 2 * margin + k * unit;
  const int height = 2 * margin + (strings - 1) * unit + unit;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <title>Chamber ansatz of (" << diagram.word().to_string() << ")</title>\n"
      << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";

  // Row of each string after every prefix of the word.
  std::vector<std::vector<int>> level_of(strings + 1, std::vector<int>(k + 1));
  for (int prefix = 0; prefix <= k; ++prefix)
    for (int level = 1; level <= strings; ++level) level_of[diagram.string_at(prefix, level)][prefix] = level;

  for (int s = 1; s <= strings; ++s) {
    svg << "    <polyline id=\"string-" << s << "\" points=\"";
    for (int prefix = 0; prefix <= k; ++prefix) {
      if (prefix) svg << ' ';
      svg << margin + prefix * unit << ',' << margin + (level_of[s][prefix] - 1) * unit;
    }
    svg << "\"/>\n";
  }
  svg << "  </g>\n"
      << "  <g font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">\n";

  for (int level = 1; level <= strings; ++level) {
    const int y = margin + (level - 1) * unit + 5;
    svg << "    <text x=\"" << margin - 15 << "\" y=\"" << y << "\">" << diagram.string_at(0, level) << "</text>\n";
    svg << "    <text x=\"" << margin + k * unit + 15 << "\" y=\"" << y << "\">" << diagram.string_at(k, level)
        << "</text>\n";
  }
  for (int j = 0; j < k; ++j) {
    svg << "    <text x=\"" << margin + j * unit + unit / 2 << "\" y=\"" << margin + (strings - 1) * unit + unit - 5
        << "\">" << diagram.word()[static_cast<std::size_t>(j)] << "</text>\n";
  }
  for (const Chamber& c : chamber_list) {
    const int x = margin + static_cast<int>(c.left + c.right + 1) * unit / 2;
    const int y = margin + c.level * unit - unit / 2 + 5;
    svg << "    <text class=\"chamber\" x=\"" << x << "\" y=\"" << y << "\" fill=\"#b00\">" << c.set.label()
        << "</text>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace

std::string render(const WiringDiagram& diagram, RenderFormat format) {
  const std::vector<Chamber> chamber_list = chambers(diagram);
  return format == RenderFormat::Ascii ? render_ascii(diagram, chamber_list) : render_svg(diagram, chamber_list);
}

}  // namespace lusztig
