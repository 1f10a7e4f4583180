// Command-line front end for the burnside library.
//
// Commands that take a single WORD read newline-delimited words from standard
// input when the word is omitted and print one line per input line. Exit
// codes: 0 success, 1 negative answer, 2 undecided (equiv only), 64 usage
// error, 65 bad input data.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burnside/classes.hpp"
#include "burnside/error.hpp"
#include "burnside/frames.hpp"
#include "burnside/oracle.hpp"
#include "burnside/pipeline.hpp"
#include "burnside/reductions.hpp"
#include "burnside/word.hpp"

namespace {

  using namespace burnside;

  constexpr int exit_no      = 1;
  constexpr int exit_unknown = 2;
  constexpr int exit_usage   = 64;
  constexpr int exit_data    = 65;

  struct Outcome {
    std::string text;
    int         code = 0;
  };

  Word read_word(std::string const& text) {
    if (text.empty()) {
      throw Error(ErrorCode::empty_input, "empty word");
    }
    return Word::parse(text);
  }

  std::vector<std::string> stdin_lines() {
    std::vector<std::string> lines;
    std::string              line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      lines.push_back(std::move(line));
    }
    return lines;
  }

  // Single-argument mode returns the handler's exit code. Batch mode parses
  // every line before computing anything; a line whose computation fails a
  // precondition prints `error: <code>` in place and makes the batch exit 65.
  int run_lines(std::optional<std::string> const&                        arg,
                std::function<Outcome(std::vector<Word> const&)> const& one,
                std::size_t                                      arity = 1) {
    auto split = [&](std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> fields;
      for (std::string f; in >> f;) {
        fields.push_back(f);
      }
      if (fields.size() != arity) {
        throw Error(ErrorCode::invalid_word,
                    "expected " + std::to_string(arity) + " word(s) per line");
      }
      std::vector<Word> words;
      for (auto const& f : fields) {
        words.push_back(read_word(f));
      }
      return words;
    };

    if (arg) {
      auto const out = one({read_word(*arg)});
      std::cout << out.text << '\n';
      return out.code;
    }

    std::vector<std::vector<Word>> batch;
    for (auto const& line : stdin_lines()) {
      batch.push_back(split(line));
    }
    int status = 0;
    for (auto const& words : batch) {
      try {
        std::cout << one(words).text << '\n';
      } catch (Error const& e) {
        std::cout << "error: " << to_string(e.code()) << '\n';
        std::cerr << e.what() << '\n';
        status = exit_data;
      }
    }
    return status;
  }

  std::string join_letters(std::vector<MaybeLetter> const& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += to_char(xs[i]);
    }
    return out;
  }

  std::string side_name(Side s) {
    return s == Side::left ? "left" : "right";
  }

  std::string tail_kinds(TailReport const& report) {
    if (report.empty()) {
      return "none";
    }
    std::string out;
    for (auto const& t : report.tails) {
      if (!out.empty()) {
        out += ',';
      }
      out += side_name(t.kind.side);
      out += t.kind.letter_class == LetterClass::A ? "-A" : "-B";
    }
    return out;
  }

  std::string format_series(PrimarySeries const& s) {
    return "anc=" + s.anc.str() + " ell=" + std::to_string(s.ell)
           + " L=" + join_letters(s.left) + " R=" + join_letters(s.right)
           + " h=" + join_letters(s.head) + " t=" + join_letters(s.tail)
           + " stop=" + std::string(to_string(s.stop));
  }

  std::string format_step(AncestorStep const& step) {
    std::string out = "k=" + std::to_string(step.k) + " U=" + step.u.str()
                      + " tails=" + tail_kinds(step.tails)
                      + " L=" + to_char(step.left)
                      + " R=" + to_char(step.right)
                      + " h=" + to_char(step.head)
                      + " t=" + to_char(step.tail) + " next=";
    if (step.stop) {
      out += "STOP:" + std::string(to_string(*step.stop));
    } else if (step.next) {
      out += step.next->str();
    }
    return out;
  }

  Outcome check_property(std::string const& property, Word const& w) {
    bool result = false;
    if (property == "overlap-free") {
      result = is_overlap_free(w);
    } else if (property == "almost-overlap-free") {
      result = is_almost_overlap_free(w);
    } else if (property == "cube-free") {
      result = is_cube_free(w);
    } else if (property == "uniform") {
      result = is_uniform(w);
    } else if (property == "letter-alternating") {
      result = is_letter_alternating(w);
    } else if (property == "ab-whole") {
      result = is_ab_whole(w);
    } else {
      result = is_phi_image(w);
    }
    return {result ? "true" : "false", result ? 0 : exit_no};
  }

  Outcome reduce_word(std::string const& mode, Word const& w) {
    if (mode == "r1") {
      return {r1(w).str()};
    }
    if (mode == "r") {
      return {complete_reduction(w).str()};
    }
    return {tail_reduce(w).str()};
  }

  Outcome eqaof_word(Word const& w) {
    auto const v = eqaof(w);
    return v ? Outcome{v->str(), 0} : Outcome{"FALSE", exit_no};
  }

  Outcome equiv_words(Word const& u, Word const& v) {
    auto const verdict = decide_equiv(u, v);
    int const  code    = verdict == Verdict::equivalent       ? 0
                         : verdict == Verdict::not_equivalent ? exit_no
                                                              : exit_unknown;
    return {std::string(to_string(verdict)), code};
  }

  // Median wall-clock seconds of `runs` calls of eqaof on w.
  double median_seconds(Word const& w, int runs) {
    std::vector<double> samples;
    for (int i = 0; i < runs; ++i) {
      auto const start = std::chrono::steady_clock::now();
      auto const out   = eqaof(w);
      auto const stop  = std::chrono::steady_clock::now();
      // Keep the result observable so the call cannot be elided.
      if (out && out->empty()) {
        std::cerr << "";
      }
      samples.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2,
                     samples.end());
    return samples[samples.size() / 2];
  }

  Word random_word(std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin;
    Word                        w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(coin(rng) ? Letter::b : Letter::a);
    }
    return w;
  }

  int bench(std::size_t min_len, std::size_t max_len, bool doubling, int runs,
            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::cout << "input length median_s letters_per_s"
              << (doubling ? " ratio" : "") << '\n';
    for (std::string const input : {"random", "thue-morse"}) {
      double previous = 0;
      for (std::size_t n = min_len; n <= max_len; n *= 2) {
        Word const   w = input == "random" ? random_word(n, rng)
                                           : thue_morse_prefix(n);
        double const t = median_seconds(w, runs);
        std::cout << input << ' ' << n << ' ' << t << ' '
                  << static_cast<double>(n) / t;
        if (doubling) {
          if (previous > 0) {
            std::cout << ' ' << t / previous;
          } else {
            std::cout << " -";
          }
        }
        std::cout << '\n';
        previous = t;
      }
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical forms in the free Burnside semigroup x^2 = x^3"};
  app.require_subcommand(1);

  std::optional<std::string> word;
  std::optional<std::string> other;
  std::function<int()>       action;

  auto* check = app.add_subcommand("check", "test a word property");
  std::string property;
  check
      ->add_option("property", property)
      ->required()
      ->check(CLI::IsMember({"overlap-free", "almost-overlap-free",
                             "cube-free", "uniform", "letter-alternating",
                             "ab-whole", "phi-image"}));
  check->add_option("word", word);
  check->callback([&] {
    action = [&] {
      return run_lines(word, [&](auto const& w) {
        return check_property(property, w[0]);
      });
    };
  });

  auto* reduce = app.add_subcommand("reduce", "apply r1, r or tail reduction");
  std::string mode;
  reduce->add_option("mode", mode)
      ->required()
      ->check(CLI::IsMember({"r1", "r", "rt"}));
  reduce->add_option("word", word);
  reduce->callback([&] {
    action = [&] {
      return run_lines(word, [&](auto const& w) {
        return reduce_word(mode, w[0]);
      });
    };
  });

  auto* tails = app.add_subcommand("tails", "report boundary tails");
  tails->add_option("word", word)->required();
  tails->callback([&] {
    action = [&] {
      Word const w = read_word(*word);
      auto       report = detect_non_uniform_tails(w);
      auto const more   = detect_non_reducible_tails(w);
      report.tails.insert(report.tails.end(), more.tails.begin(),
                          more.tails.end());
      std::cout << report;
      return 0;
    };
  });

  auto* frames = app.add_subcommand("frames", "split a uniform word");
  frames->add_option("word", word);
  frames->callback([&] {
    action = [&] {
      return run_lines(word, [](auto const& w) {
        return Outcome{format_frame(frame(w[0])) + " xi=" + xi(w[0]).str()};
      });
    };
  });

  auto* anc = app.add_subcommand("ancestor", "primary series of a word");
  bool  trace = false;
  anc->add_option("word", word);
  anc->add_flag("--trace", trace, "print one line per level first");
  anc->callback([&] {
    action = [&] {
      return run_lines(word, [&](auto const& w) {
        auto const  series = ancestor(w[0], trace);
        std::string text;
        for (auto const& step : series.steps) {
          text += format_step(step) + '\n';
        }
        return Outcome{text + format_series(series)};
      });
    };
  });

  auto* norm = app.add_subcommand("normalize",
                                  "rebuild from a representative of the "
                                  "ancestor's class");
  std::optional<std::string> seed_word;
  norm->add_option("word", word);
  norm->add_option("--seed", seed_word,
                   "cube-free word equivalent to the ancestor "
                   "(default: its class representative)");
  norm->callback([&] {
    action = [&] {
      std::optional<Word> seed;
      if (seed_word) {
        seed = read_word(*seed_word);
      }
      return run_lines(word, [&](auto const& w) {
        auto const series = ancestor(w[0]);
        auto const from   = seed ? seed : match_S(series.anc);
        if (!from) {
          return Outcome{"FALSE", exit_no};
        }
        return Outcome{normalize(*from, series).str()};
      });
    };
  });

  auto* eq = app.add_subcommand("eqaof",
                                "almost overlap-free equivalent, or FALSE");
  eq->add_option("word", word);
  eq->callback([&] {
    action = [&] {
      return run_lines(word, [](auto const& w) { return eqaof_word(w[0]); });
    };
  });

  auto* equiv = app.add_subcommand("equiv", "decide U ~ V where possible");
  equiv->add_option("u", word);
  equiv->add_option("v", other);
  equiv->callback([&] {
    if (word.has_value() != other.has_value()) {
      throw CLI::ValidationError("equiv", "give both U and V or neither");
    }
    action = [&] {
      if (word) {
        auto const out = equiv_words(read_word(*word), read_word(*other));
        std::cout << out.text << '\n';
        return out.code;
      }
      return run_lines(
          std::nullopt,
          [](auto const& w) { return equiv_words(w[0], w[1]); }, 2);
    };
  });

  auto*       enum_aof = app.add_subcommand("enum-aof",
                                            "list almost overlap-free words");
  std::size_t max_len  = 0;
  enum_aof->add_option("n", max_len)->required();
  enum_aof->callback([&] {
    action = [&] {
      for (auto const& w : enumerate_aof(max_len)) {
        std::cout << w << '\n';
      }
      return 0;
    };
  });

  auto*       clo = app.add_subcommand("closure", "bounded class closure");
  std::size_t length_bound = 0;
  std::size_t step_bound   = default_step_bound;
  bool        r1_only      = false;
  clo->add_option("word", word)->required();
  clo->add_option("--max-len", length_bound)
      ->required()
      ->check(CLI::Range(std::size_t{1}, max_oracle_length));
  clo->add_option("--max-steps", step_bound);
  clo->add_flag("--r1-only", r1_only, "list only r1-reduced members");
  clo->callback([&] {
    action = [&] {
      auto const c = closure(read_word(*word), length_bound, step_bound);
      std::cout << format_closure(c, r1_only);
      return 0;
    };
  });

  auto*       classes = app.add_subcommand("classes", "class pattern table");
  std::string what;
  classes->add_option("what", what)->required()->check(CLI::IsMember({"dump"}));
  classes->callback([&] {
    action = [&] {
      for (auto const& p : pattern_table()) {
        std::cout << p.representative() << ' ' << p.expression() << '\n';
      }
      return 0;
    };
  });

  auto*         b = app.add_subcommand("bench", "eqaof timing by input size");
  std::size_t   bench_min = 1 << 14;
  std::size_t   bench_max = 1 << 20;
  bool          doubling  = false;
  int           runs      = 5;
  std::uint64_t rng_seed  = 1;
  b->add_option("--min", bench_min)->check(CLI::PositiveNumber);
  b->add_option("--max", bench_max)->check(CLI::PositiveNumber);
  b->add_flag("--doubling", doubling, "print time(2n)/time(n)");
  b->add_option("--runs", runs)->check(CLI::Range(1, 1000));
  b->add_option("--seed", rng_seed);
  b->callback([&] {
    action = [&] { return bench(bench_min, bench_max, doubling, runs, rng_seed); };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    return action();
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::bound_too_large ? exit_usage : exit_data;
  }
}
