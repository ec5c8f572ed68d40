#include "mawcmp/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "mawcmp/circular.hpp"
#include "mawcmp/lw.hpp"

namespace mawcmp {

void RunConfig::validate() const {
  if (threads < 1) throw Error("worker count must be at least 1");
  if (precision < 1 || precision > 17) throw Error("precision must be in 1..17");
  if (max_maw_length && *max_maw_length < 1) throw Error("MAW length cap must be positive");
}

DistanceMatrix distance_matrix(std::span<const Sequence> input, const RunConfig& config) {
  config.validate();
  if (input.size() < 2) throw Error("a distance matrix needs at least two sequences");

  std::vector<Sequence> seqs(input.begin(), input.end());
  std::vector<std::string> labels;
  for (auto& s : seqs) {
    if (s.empty()) throw Error("sequence '" + s.label + "' is empty");
    if (config.uppercase)
      std::transform(s.data.begin(), s.data.end(), s.data.begin(),
                     [](char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); });
    labels.push_back(s.label);
  }

  LwOptions base;
  base.max_length = config.max_maw_length;
  if (config.global_alphabet) base.alphabet = infer_alphabet(seqs);

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = i + 1; j < seqs.size(); ++j) jobs.emplace_back(i, j);

  DistanceMatrix m(std::move(labels));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      const auto [i, j] = jobs[k];
      try {
        const auto r = config.mode == Mode::circular ? circular_lw(seqs[i].data, seqs[j].data, base)
                                                     : lw_distance(seqs[i].data, seqs[j].data, base);
        m.at(i, j) = r.value;
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
      }
    }
  };

  const std::size_t workers = std::min(config.threads, std::max<std::size_t>(jobs.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) m.at(i, j) = m.at(j, i);
  return m;
}

void write_phylip(std::ostream& out, const DistanceMatrix& m, int precision, bool relaxed) {
  if (precision < 1 || precision > 17) throw Error("precision must be in 1..17");
  out << m.size() << '\n';
  char buf[64];
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& label = m.labels()[i];
    if (relaxed) {
      out << label << "  ";
    } else {
      std::string name = label.substr(0, 10);
      name.resize(10, ' ');
      out << name << ' ';
    }
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.*f", precision, m.at(i, j));
      if (j > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw Error("failed to write PHYLIP output");
}

DistanceMatrix read_phylip(std::istream& in, bool relaxed) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty PHYLIP input");
  std::size_t n = 0;
  {
    std::istringstream head(line);
    if (!(head >> n) || n == 0) throw Error("PHYLIP header must hold a positive taxa count");
  }
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  while (rows.size() < n && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string label;
    std::string rest;
    if (relaxed) {
      std::istringstream row(line);
      row >> label;
      std::getline(row, rest);
    } else {
      label = line.substr(0, 10);
      label.erase(label.find_last_not_of(' ') + 1);
      rest = line.size() > 10 ? line.substr(10) : std::string();
    }
    std::istringstream values(rest);
    std::vector<double> row;
    double v = 0;
    while (values >> v) row.push_back(v);
    if (row.size() != n) throw Error("PHYLIP row '" + label + "' has " + std::to_string(row.size()) + " values, expected " + std::to_string(n));
    labels.push_back(label);
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) throw Error("PHYLIP input has fewer rows than its taxa count");
  DistanceMatrix m(std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::optional<std::string> validate_matrix(const DistanceMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.at(i, i) != 0.0) return "non-zero diagonal at row " + std::to_string(i);
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double v = m.at(i, j);
      if (!std::isfinite(v) || v < 0.0) return "invalid cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (v != m.at(j, i)) return "asymmetric cells (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  return std::nullopt;
}

}  // namespace mawcmp
