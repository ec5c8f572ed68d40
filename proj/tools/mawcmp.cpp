#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "mawcmp/circular.hpp"
#include "mawcmp/families.hpp"
#include "mawcmp/fasta.hpp"
#include "mawcmp/matrix.hpp"
#include "mawcmp/maw.hpp"
#include "mawcmp/qgram.hpp"

namespace {

using namespace mawcmp;

std::vector<Sequence> read_input(const std::string& path) {
  if (path == "-") return parse_multifasta(std::cin);
  return parse_multifasta(std::filesystem::path(path));
}

/// Writes to `path`, or stdout for "-", failing loudly if the file cannot be opened.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    std::cout.flush();
    if (!std::cout) throw Error("failed to write to stdout");
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  fn(out);
  out.close();
  if (!out) throw Error("failed to write '" + path + "'");
}

void upcase(std::vector<Sequence>& seqs) {
  for (auto& s : seqs)
    for (auto& c : s.data) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare sequences by their minimal absent words"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  RunConfig config;
  bool circular = false;
  std::size_t max_len = 0;

  auto* dist = app.add_subcommand("dist", "Pairwise LW distance matrix in PHYLIP format");
  dist->add_option("-i,--input", input, "MultiFASTA input ('-' for stdin)");
  dist->add_option("-o,--output", output, "PHYLIP output ('-' for stdout)");
  dist->add_flag("--circular", circular, "Treat sequences as circular words");
  dist->add_option("--max-maw-len", max_len, "Only MAWs up to this length contribute")->check(CLI::PositiveNumber);
  dist->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
  dist->add_option("--precision", config.precision, "Decimals per cell")->check(CLI::Range(1, 17));
  dist->add_flag("--relaxed-phylip", config.relaxed_phylip, "Write full labels followed by two spaces");
  dist->add_flag("--uppercase", config.uppercase, "Fold letters to upper case before comparing");
  dist->add_flag("--global-alphabet", config.global_alphabet, "Use the letters of all records for every pair");

  bool maws_circular = false;
  bool maws_upper = false;
  auto* maws = app.add_subcommand("maws", "List the minimal absent words of each record");
  maws->add_option("-i,--input", input, "MultiFASTA input ('-' for stdin)");
  maws->add_option("-o,--output", output, "Output ('-' for stdout)");
  maws->add_flag("--circular", maws_circular, "Circular MAWs");
  maws->add_flag("--uppercase", maws_upper, "Fold letters to upper case");

  auto* qgram = app.add_subcommand("qgram", "Print q, h and t for each record");
  qgram->add_option("-i,--input", input, "MultiFASTA input ('-' for stdin)");
  qgram->add_option("-o,--output", output, "Output ('-' for stdout)");

  std::string family = "binary";
  std::vector<std::size_t> lengths;
  std::size_t sigma = 3;
  auto* gen = app.add_subcommand("gen", "Generate words with many MAWs as MultiFASTA");
  gen->add_option("family", family, "binary or multi")->check(CLI::IsMember({"binary", "multi"}));
  gen->add_option("-n,--length", lengths, "Word lengths")->required();
  gen->add_option("-s,--sigma", sigma, "Alphabet size for the multi family");
  gen->add_option("-o,--output", output, "Output ('-' for stdout)");

  std::string matrix_path;
  bool check_relaxed = false;
  auto* check = app.add_subcommand("check", "Validate a PHYLIP distance matrix");
  check->add_option("matrix", matrix_path, "PHYLIP file")->required();
  check->add_flag("--relaxed-phylip", check_relaxed, "Labels end at the first whitespace");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dist->parsed()) {
      config.mode = circular ? Mode::circular : Mode::linear;
      if (max_len > 0) config.max_maw_length = max_len;
      const auto seqs = read_input(input);
      const auto m = distance_matrix(seqs, config);
      with_output(output, [&](std::ostream& out) { write_phylip(out, m, config.precision, config.relaxed_phylip); });
    } else if (maws->parsed()) {
      auto seqs = read_input(input);
      if (maws_upper) upcase(seqs);
      with_output(output, [&](std::ostream& out) {
        for (const auto& s : seqs) {
          const Alphabet alphabet(s.data);
          const MawSet set = maws_circular ? circular_maws(s.data, alphabet).maws : compute_maws(s.data, alphabet);
          out << '>' << s.label << ' ' << set.size() << '\n' << dump_maws(set);
        }
      });
    } else if (qgram->parsed()) {
      const auto seqs = read_input(input);
      with_output(output, [&](std::ostream& out) {
        out << "label\tq\th\tt\n";
        for (const auto& s : seqs) {
          const auto r = qgram_report(s.data);
          out << s.label << '\t' << r.q << '\t' << r.h << '\t' << (r.t ? std::to_string(*r.t) : "-") << '\n';
        }
      });
    } else if (gen->parsed()) {
      std::vector<Sequence> seqs;
      for (const auto n : lengths) {
        if (family == "binary")
          seqs.emplace_back("binary_n" + std::to_string(n), binary_extremal(n));
        else
          seqs.emplace_back("multi_s" + std::to_string(sigma) + "_n" + std::to_string(n), multiletter_extremal(n, sigma));
      }
      with_output(output, [&](std::ostream& out) { write_multifasta(out, seqs); });
    } else if (check->parsed()) {
      std::ifstream in(matrix_path);
      if (!in) throw Error("cannot open '" + matrix_path + "'");
      const auto m = read_phylip(in, check_relaxed);
      if (const auto problem = validate_matrix(m)) {
        std::cerr << "mawcmp: invalid matrix: " << *problem << '\n';
        return 1;
      }
      std::cout << "ok: " << m.size() << " taxa\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "mawcmp: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
