#include "achain/chain_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace achain {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

std::size_t parse_index(std::string_view field, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "bad justification index '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

Chain read_chain(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<BigInt> elements;
  std::vector<std::optional<Step>> steps;
  std::vector<std::size_t> lines;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (!header_seen) {
      if (line != kChainHeader) throw ParseError(line_no, "expected '# chain-v1' header");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 1 && fields.size() != 3) {
      throw ParseError(line_no, "expected '<element>' or '<element> <i> <j>'");
    }
    if (!all_digits(fields[0])) {
      throw ParseError(line_no, "bad element '" + std::string(fields[0]) + "'");
    }
    elements.emplace_back(std::string(fields[0]));
    lines.push_back(line_no);
    if (fields.size() == 3) {
      steps.push_back(Step{parse_index(fields[1], line_no), parse_index(fields[2], line_no)});
    } else {
      steps.push_back(std::nullopt);
    }
  }
  if (!header_seen) throw ParseError(line_no + 1, "missing '# chain-v1' header");
  if (elements.empty()) throw ParseError(line_no + 1, "no elements");

  bool any = false;
  bool all = true;
  for (std::size_t k = 1; k < steps.size(); ++k) {
    any = any || steps[k].has_value();
    all = all && steps[k].has_value();
  }
  if (any && !all) {
    for (std::size_t k = 1; k < steps.size(); ++k) {
      if (!steps[k]) throw ParseError(lines[k], "missing justification");
    }
  }

  try {
    if (any) {
      std::vector<Step> given;
      for (std::size_t k = 1; k < steps.size(); ++k) given.push_back(*steps[k]);
      return Chain::with_steps(std::move(elements), std::move(given));
    }
    return validate(std::move(elements));
  } catch (const ChainError& e) {
    std::size_t at = e.index() < lines.size() ? lines[e.index()] : lines.front();
    throw ParseError(at, e.what());
  }
}

Chain read_chain_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_chain(in);
}

void write_chain(std::ostream& out, const Chain& c, bool with_steps) {
  out << kChainHeader << '\n';
  const auto& a = c.elements();
  out << a[0] << '\n';
  for (std::size_t k = 1; k < a.size(); ++k) {
    out << a[k];
    if (with_steps) out << ' ' << c.step(k).i << ' ' << c.step(k).j;
    out << '\n';
  }
}

std::string to_chain_text(const Chain& c, bool with_steps) {
  std::ostringstream out;
  write_chain(out, c, with_steps);
  return out.str();
}

}  // namespace achain
