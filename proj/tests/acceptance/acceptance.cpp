// One PASS/FAIL line per acceptance criterion; exit status 1 on any failure.
// An optional argument names the command-line tool for the end-to-end check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "mawcmp/circular.hpp"
#include "mawcmp/families.hpp"
#include "mawcmp/fasta.hpp"
#include "mawcmp/lw.hpp"
#include "mawcmp/matrix.hpp"
#include "mawcmp/maw.hpp"
#include "mawcmp/qgram.hpp"
#include "oracle.hpp"

using namespace mawcmp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& name, const std::function<std::string(bool&)>& body) {
  bool ok = true;
  std::string detail;
  const auto t0 = Clock::now();
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s  %-22s %s (%.2fs)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
}

oracle::WordSet decoded(const MawSet& m) {
  oracle::WordSet out;
  for (const auto& t : m.tuples) out.insert(decode(t, m.source));
  return out;
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

std::string random_dna(std::mt19937_64& rng, std::size_t n) { return oracle::random_word(rng, "acgt", n); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::mt19937_64 rng(20261019);

  report("golden-lw", [](bool& ok) {
    const struct {
      const char* x;
      const char* y;
      double want;
    } cases[] = {{"abaab", "aabbbaa", 11.0 / 18.0}, {"aaa", "bbb", 17.0 / 8.0}, {"aaa", "aaaa", 41.0 / 400.0}};
    double worst_err = 0, worst_ms = 0;
    for (const auto& c : cases) {
      lw_distance(c.x, c.y);  // warm-up
      const auto t0 = Clock::now();
      const double v = lw_distance(c.x, c.y).value;
      worst_ms = std::max(worst_ms, seconds_since(t0) * 1e3);
      worst_err = std::max(worst_err, std::abs(v - c.want));
    }
    ok = worst_err <= 1e-12 && worst_ms < 1.0;
    return fmt("max |err| %.2e, max time %.3f ms", worst_err, worst_ms);
  });

  report("golden-maw-set", [](bool& ok) {
    ok = decoded(compute_maws("abaab", Alphabet("ab"))) == oracle::WordSet{"aaa", "aaba", "bab", "bb"};
    return std::string("abaab over {a,b}");
  });

  report("golden-circular-set", [](bool& ok) {
    const auto c = circular_maws("aabbabb", Alphabet("ab"));
    ok = decoded(c.maws) == oracle::WordSet{"aaa", "aba", "bbb", "aabbaa", "babbab"} && c.linearisation_length == 7;
    return std::string("aabbabb");
  });

  report("golden-q", [](bool& ok) {
    const auto q = compute_q("abaab");
    ok = q == 2;
    return "q(abaab) = " + std::to_string(q);
  });

  report("maw-oracle", [&](bool& ok) {
    const auto t0 = Clock::now();
    std::size_t words = 0;
    const Alphabet ab("ab");
    for (std::size_t len = 1; len <= 12 && ok; ++len)
      for (const auto& w : oracle::all_words("ab", len)) {
        ++words;
        if (decoded(compute_maws(w, ab)) != oracle::brute_force_maws(w, ab)) {
          ok = false;
          return "mismatch on " + w;
        }
      }
    for (int k = 0; k < 200; ++k) {
      const std::string letters = std::string("abcd").substr(0, 2 + k % 3);
      const auto w = oracle::random_word(rng, letters, 1 + rng() % 300);
      const Alphabet sigma(letters);
      ++words;
      if (decoded(compute_maws(w, sigma)) != oracle::brute_force_maws(w, sigma)) {
        ok = false;
        return "mismatch on " + w;
      }
    }
    const double secs = seconds_since(t0);
    ok = ok && secs < 60.0;
    return std::to_string(words) + " words, " + fmt("%.1f s", secs);
  });

  report("lw-oracle", [&](bool& ok) {
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
      const std::string letters = std::string("abcd").substr(0, 2 + k % 3);
      const auto x = oracle::random_word(rng, letters, 1 + rng() % 200);
      const auto y = oracle::random_word(rng, letters, 1 + rng() % 200);
      LwOptions opt;
      if (k < 20) opt.max_length = 2 + rng() % 7;
      const Alphabet sigma = infer_alphabet({x, y});
      const double exact = static_cast<double>(oracle::lw_exact(oracle::brute_force_maws(x, sigma),
                                                                oracle::brute_force_maws(y, sigma), opt.max_length));
      worst = std::max(worst, std::abs(lw_distance(x, y, opt).value - exact));
    }
    ok = worst <= 1e-9;
    return fmt("100 pairs (20 capped), max |err| %.2e", worst);
  });

  report("metric", [&](bool& ok) {
    std::size_t violations = 0;
    for (int k = 0; k < 200; ++k) {
      const std::string letters = k % 2 ? "ab" : "abc";
      const auto x = oracle::random_word(rng, letters, 1 + rng() % 60);
      const auto y = oracle::random_word(rng, letters, 1 + rng() % 60);
      const auto z = oracle::random_word(rng, letters, 1 + rng() % 60);
      LwOptions opt;
      opt.alphabet = Alphabet(letters);
      const double xy = lw_distance(x, y, opt).value, yx = lw_distance(y, x, opt).value;
      const double xz = lw_distance(x, z, opt).value, zy = lw_distance(z, y, opt).value;
      if (xy < 0 || xy != yx || xy > xz + zy + 1e-12) ++violations;
    }
    std::vector<std::string> words;
    for (std::size_t len = 1; len <= 8; ++len)
      for (auto& w : oracle::all_words("ab", len)) words.push_back(std::move(w));
    std::set<oracle::WordSet> distinct;
    LwOptions opt;
    opt.alphabet = Alphabet("ab");
    for (const auto& w : words) {
      distinct.insert(decoded(compute_maws(w, Alphabet("ab"))));
      if (lw_distance(w, w, opt).value != 0.0) ++violations;
    }
    const bool injective = distinct.size() == words.size();
    ok = violations == 0 && injective;
    return std::to_string(violations) + " violations, " + std::to_string(distinct.size()) + "/" +
           std::to_string(words.size()) + " distinct MAW sets";
  });

  report("rotation-invariance", [&](bool& ok) {
    int mismatches = 0;
    for (int k = 0; k < 50; ++k) {
      const auto x = random_dna(rng, 1 + rng() % 300);
      const auto y = random_dna(rng, 1 + rng() % 300);
      const double base = circular_lw(x, y).value;
      const double rot = circular_lw(rotate(x, rng() % x.size()).data, rotate(y, rng() % y.size()).data).value;
      if (rot != base) ++mismatches;
    }
    ok = mismatches == 0;
    return std::to_string(mismatches) + "/50 pairs differ";
  });

  report("q-oracle", [&](bool& ok) {
    std::size_t words = 0, bound_failures = 0;
    auto check = [&](const std::string& w) {
      ++words;
      const auto r = qgram_report(w);
      if (r.q != oracle::brute_force_q(w)) return false;
      if (r.t && (r.q + 1 < r.h || r.q > *r.t + 1)) ++bound_failures;
      return true;
    };
    for (std::size_t len = 2; len <= 14; ++len)
      for (const auto& w : oracle::all_words("ab", len))
        if (!check(w)) {
          ok = false;
          return "mismatch on " + w;
        }
    for (int k = 0; k < 200; ++k) {
      const auto w = oracle::random_word(rng, k % 2 ? "ab" : "abc", 2 + rng() % 149);
      if (!check(w)) {
        ok = false;
        return "mismatch on " + w;
      }
    }
    ok = bound_failures == 0;
    return std::to_string(words) + " words, " + std::to_string(bound_failures) + " bound violations";
  });

  report("extremal-counts", [](bool& ok) {
    std::size_t bad = 0;
    for (std::size_t n = 3; n <= 200; ++n) {
      const auto w = binary_extremal(n);
      const auto c = compute_maws(w, Alphabet("ab")).size();
      if (c + 2 < n || c > 2 * n) ++bad;
    }
    for (std::size_t sigma = 3; sigma <= 5; ++sigma)
      for (std::size_t n = sigma; n <= 200; ++n) {
        const auto w = multiletter_extremal(n, sigma);
        const auto c = compute_maws(w, Alphabet(w)).size();
        if (c < multiletter_maw_lower_bound(n, sigma) || c > sigma * n) ++bad;
      }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });

  report("scaling", [&](bool& ok) {
    auto timed = [&](std::size_t n) {
      const auto x = random_dna(rng, n), y = random_dna(rng, n);
      double best = 1e300;
      for (int rep = 0; rep < 2; ++rep) {
        const auto t0 = Clock::now();
        lw_distance(x, y);
        best = std::min(best, seconds_since(t0));
      }
      return best;
    };
    const double t1 = timed(1'000'000);
    const double t2 = timed(2'000'000);
    ok = t1 < 60.0 && t2 <= 3.0 * t1;
    return fmt("best of 2, 1M: %.2f s, 2M: %.2f s, ratio %.2f", t1, t2, t2 / t1);
  });

  report("cli-end-to-end", [&](bool& ok) {
    std::vector<Sequence> seqs{{"s1", "abaab"}, {"s2", "aabbbaa"}, {"s3", "babbaabab"}, {"s4", "aaaabbbbab"}};
    std::string detail;
    if (argc > 1) {
      const std::filesystem::path dir = std::filesystem::temp_directory_path() / "mawcmp_acceptance";
      std::filesystem::create_directories(dir);
      {
        std::ofstream fa(dir / "in.fa");
        write_multifasta(fa, seqs);
      }
      const std::string tool = argv[1];
      auto run = [&](const std::string& args) { return std::system((tool + " " + args + " >/dev/null 2>&1").c_str()); };
      const auto in = (dir / "in.fa").string();
      const auto o1 = (dir / "t1.phy").string(), o4 = (dir / "t4.phy").string();
      ok = run("dist -i " + in + " -o " + o1 + " --threads 1") == 0 &&
           run("dist -i " + in + " -o " + o4 + " --threads 4") == 0 && run("check " + o1) == 0;
      const auto a = slurp(o1), b = slurp(o4);
      std::istringstream parsed(a);
      const auto m = read_phylip(parsed);
      ok = ok && a == b && !validate_matrix(m) && m.size() == 4 && a.find("0.611111") != std::string::npos;
      std::filesystem::remove_all(dir);
      detail = "tool output ";
    } else {
      RunConfig one, four;
      four.threads = 4;
      std::ostringstream a, b;
      write_phylip(a, distance_matrix(seqs, one), 6);
      write_phylip(b, distance_matrix(seqs, four), 6);
      std::istringstream parsed(a.str());
      ok = a.str() == b.str() && !validate_matrix(read_phylip(parsed)) && a.str().find("0.611111") != std::string::npos;
      detail = "in-process ";
    }
    return detail + (ok ? "byte-identical, valid, contains 0.611111" : "mismatch");
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
