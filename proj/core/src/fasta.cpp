#include "mawcmp/fasta.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace mawcmp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<Sequence> parse_multifasta(std::istream& in) {
  std::vector<Sequence> records;
  std::string line;
  std::size_t line_no = 0;

  auto finish = [&]() {
    if (!records.empty() && records.back().data.empty())
      throw Error("record '" + records.back().label + "' has an empty sequence");
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '>') {
      finish();
      const auto header = trim(body.substr(1));
      const auto end = header.find_first_of(" \t");
      records.emplace_back(std::string(header.substr(0, end)), std::string());
      continue;
    }
    if (records.empty()) throw Error("line " + std::to_string(line_no) + ": sequence data before the first header");
    records.back().data.append(body);
  }
  if (records.empty()) throw Error("no FASTA records in input");
  finish();
  return records;
}

std::vector<Sequence> parse_multifasta(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return parse_multifasta(in);
}

void write_multifasta(std::ostream& out, std::span<const Sequence> seqs, std::size_t width) {
  for (const auto& s : seqs) {
    out << '>' << s.label << '\n';
    if (width == 0) {
      out << s.data << '\n';
      continue;
    }
    for (std::size_t p = 0; p < s.data.size(); p += width) out << std::string_view(s.data).substr(p, width) << '\n';
  }
}

}  // namespace mawcmp
