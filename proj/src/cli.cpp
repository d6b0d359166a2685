#include "braidlab/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "braidlab/burau.hpp"
#include "braidlab/dehornoy.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/exotic_order.hpp"
#include "braidlab/free_group.hpp"
#include "braidlab/probe.hpp"

namespace braidlab::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json braid_json(const BraidWord& w) {
  json letters = json::array();
  for (const auto& l : w.letters()) letters.push_back({l.index, l.exponent});
  return {{"strands", w.strands()}, {"letters", letters}};
}

json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

json burau_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) {
      json entry = json::array();
      for (const auto& [e, coef] : m(r, c).terms()) entry.push_back({e, coefficient_json(coef)});
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  return rows;
}

json verdict_json(const OrderVerdict& v) {
  const char* kind = v.positive() ? "positive" : v.negative() ? "negative" : "trivial";
  json j{{"kind", kind}};
  if (!v.trivial()) j["main_index"] = v.main_index;
  j["verdict"] = to_string(v);
  return j;
}

// Human-readable; the identity shows as "1".
std::string free_text(const FreeWord& w, const ExoticContext& ctx) {
  if (w.empty()) return "1";
  return format_free(w, ctx.is_kn() ? FreeAlphabet::indexed : FreeAlphabet::automatic);
}

// One result of a command: a text line and a JSON value.
struct Output {
  std::string text;
  json value;
};

struct Session {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  bool as_json = false;
  bool use_stdin = false;
  bool word_given = false;

  void emit(const Output& o) const {
    if (as_json) out << o.value.dump() << '\n';
    else out << o.text << '\n';
  }

  // Applies `f` to the positional word, or to each stdin line with --stdin.
  void each_word(const std::string& word, const std::function<Output(const std::string&)>& f) const {
    if (!use_stdin && !word_given) throw UsageError("missing word argument (or use --stdin)");
    if (!use_stdin) {
      emit(f(word));
      return;
    }
    json all = json::array();
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      Output o = f(line);
      if (as_json) all.push_back(std::move(o.value));
      else out << o.text << '\n';
    }
    if (as_json) out << all.dump() << '\n';
  }
};

std::optional<std::uint64_t> budget_from_env() {
  const char* raw = std::getenv("BRAIDLAB_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t v = 0;
  const std::string_view s(raw);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw UsageError("BRAIDLAB_BUDGET must be a positive integer, got '" + std::string(s) + "'");
  return v;
}

int report_error(const Session& s, const std::string& kind, const std::string& message,
                 std::optional<std::size_t> offset, int code) {
  s.err << "error: " << message << '\n';
  if (s.as_json) {
    json e{{"kind", kind}, {"message", message}};
    if (offset) e["offset"] = *offset;
    s.out << json{{"error", e}, {"exit_code", code}}.dump() << '\n';
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Session session{out, err, in};
  // --json must be known even when parsing fails.
  for (std::size_t i = 1; i < args.size(); ++i)
    if (args[i] == "--json") session.as_json = true;

  CLI::App app{"Dehornoy ordering of B3 and the induced left orders of free groups", "braidlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", session.as_json, "Print JSON instead of text");
  app.add_flag("--stdin", session.use_stdin, "Read one word per line from standard input");
  int strands = 3;
  app.add_option("--strands", strands, "Strand count for braid words")->check(CLI::PositiveNumber);

  int exit_code = kExitOk;
  std::function<void()> action;

  // sign
  std::string word1;
  std::string word2;
  auto* sign = app.add_subcommand("sign", "Dehornoy sign of a braid");
  sign->add_option("word", word1, "Braid word");
  sign->callback([&] {
    action = [&] {
      session.each_word(word1, [&](const std::string& text) {
        const BraidWord w = parse_braid(text, strands);
        const OrderVerdict v = dehornoy_sign(w);
        json j{{"word", format_braid(w)}};
        j.update(verdict_json(v));
        return Output{to_string(v), j};
      });
    };
  });

  auto* compare = app.add_subcommand("compare", "Compare two braids in the Dehornoy order");
  compare->add_option("u", word1)->required();
  compare->add_option("v", word2)->required();
  compare->callback([&] {
    action = [&] {
      const BraidWord u = parse_braid(word1, strands);
      const BraidWord v = parse_braid(word2, strands);
      const Ordering o = braid_compare(u, v);
      session.emit({to_string(o), {{"u", format_braid(u)}, {"v", format_braid(v)}, {"result", to_string(o)}}});
    };
  });

  bool trace = false;
  auto* reduce = app.add_subcommand("reduce", "Handle-reduce a braid word");
  reduce->add_option("word", word1);
  reduce->add_flag("--trace", trace, "Print each reduction step as a JSON line");
  reduce->callback([&] {
    action = [&] {
      session.each_word(word1, [&](const std::string& text) {
        const BraidWord w = parse_braid(text, strands);
        ReductionOptions options;
        if (trace) {
          options.trace = [&](const ReductionStep& s) {
            out << json{{"step", s.step},
                        {"handle",
                         {{"start", s.handle.start}, {"end", s.handle.end}, {"index", s.handle.index},
                          {"sign", s.handle.sign}}},
                        {"word", format_braid(s.word)}}
                       .dump()
                << '\n';
          };
        }
        const ReductionResult r = handle_reduce_traced(w, options);
        return Output{format_braid(r.word),
                      {{"input", format_braid(w)}, {"output", format_braid(r.word)}, {"steps", r.steps},
                       {"letters", braid_json(r.word)["letters"]}}};
      });
    };
  });

  auto* burau = app.add_subcommand("burau", "Reduced Burau matrix of a B3 braid (JSON)");
  burau->add_option("word", word1);
  burau->callback([&] {
    action = [&] {
      session.each_word(word1, [&](const std::string& text) {
        const json m = burau_json(burau_matrix(parse_braid(text, 3)));
        return Output{m.dump(), m};
      });
    };
  });

  auto* embed_cmd = app.add_subcommand("embed", "Map an F2 word into [B3, B3]");
  embed_cmd->add_option("word", word1);
  embed_cmd->callback([&] {
    action = [&] {
      session.each_word(word1, [&](const std::string& text) {
        const FreeWord w = parse_free(text, 2);
        const BraidWord bw = embed(w);
        json j{{"free", format_free(w)}, {"braid", format_braid(bw)}};
        j.update(braid_json(bw));
        return Output{format_braid(bw), j};
      });
    };
  });

  auto* unembed = app.add_subcommand("unembed", "Rewrite a braid of exponent sum 0 as an F2 word");
  unembed->add_option("braid", word1);
  unembed->callback([&] {
    action = [&] {
      session.each_word(word1, [&](const std::string& text) {
        const BraidWord bw = parse_braid(text, 3);
        const FreeWord w = commutator_rewrite(bw);
        return Output{format_free(w), {{"braid", format_braid(bw)}, {"free", format_free(w)}}};
      });
    };
  });

  std::string aut_name;
  long long power = 1;
  auto* aut = app.add_subcommand("aut", "Apply phi, psi, delta or id to an F2 word");
  aut->add_option("name", aut_name)->required();
  aut->add_option("word", word1);
  aut->add_option("--power", power, "Number of applications; negative uses the inverse");
  aut->callback([&] {
    action = [&] {
      const GroupAutomorphism a = automorphism_by_name(aut_name);
      session.each_word(word1, [&](const std::string& text) {
        const FreeWord w = parse_free(text, a.rank());
        const FreeWord image = apply_automorphism(a, w, power);
        return Output{format_free(image),
                      {{"automorphism", a.name()}, {"power", power}, {"input", format_free(w)},
                       {"output", format_free(image)}}};
      });
    };
  });

  int n = 0;
  auto* basis = app.add_subcommand("kn-basis", "Free basis of K_n");
  basis->add_option("n", n)->required();
  basis->callback([&] {
    action = [&] {
      const auto words = kn_basis(n);
      json list = json::array();
      std::string text;
      for (std::size_t i = 0; i < words.size(); ++i) {
        list.push_back(format_free(words[i]));
        if (i) text += '\n';
        text += "g" + std::to_string(i + 1) + " = " + format_free(words[i]);
      }
      session.emit({text, {{"n", n}, {"basis", list}}});
    };
  });

  auto* rewrite = app.add_subcommand("kn-rewrite", "Express an element of K_n in its basis");
  rewrite->add_option("n", n)->required();
  rewrite->add_option("word", word1);
  rewrite->callback([&] {
    action = [&] {
      session.each_word(word1, [&](const std::string& text) {
        const FreeWord w = parse_free(text, 2);
        const FreeWord r = kn_rewrite(w, n);
        const std::string s = format_free(r, FreeAlphabet::indexed);
        return Output{s, {{"n", n}, {"input", format_free(w)}, {"output", s}}};
      });
    };
  });

  std::string ctx_text = "f2";
  auto* exotic = app.add_subcommand("exotic-compare", "Compare in the restricted Dehornoy order");
  exotic->add_option("--ctx", ctx_text, "f2 or kn:<n>");
  exotic->add_option("u", word1)->required();
  exotic->add_option("v", word2)->required();
  exotic->callback([&] {
    action = [&] {
      const ExoticContext ctx = ExoticContext::parse(ctx_text);
      const FreeWord u = parse_free(word1, ctx.rank());
      const FreeWord v = parse_free(word2, ctx.rank());
      const Ordering o = exotic_compare(u, v, ctx);
      session.emit({to_string(o),
                    {{"context", ctx.name()}, {"u", free_text(u, ctx)}, {"v", free_text(v, ctx)},
                     {"result", to_string(o)}}});
    };
  });

  std::vector<std::string> gens;
  std::size_t radius = 8;
  std::optional<std::size_t> subgroup_length;
  std::size_t max_elements = ConvexityOptions{}.max_subgroup_elements;
  auto* probe = app.add_subcommand("probe-convexity", "Search for a witness that a subgroup is not convex");
  probe->add_option("--ctx", ctx_text, "f2 or kn:<n>");
  probe->add_option("--gens", gens, "Subgroup generators (repeat or separate with commas)")
      ->required()
      ->delimiter(',');
  probe->add_option("--radius", radius, "Ball radius for candidates");
  probe->add_option("--subgroup-length", subgroup_length, "Longest subgroup element (default 2 x radius)");
  probe->add_option("--max-elements", max_elements, "Cap on enumerated subgroup elements");
  probe->callback([&] {
    action = [&] {
      const ExoticContext ctx = ExoticContext::parse(ctx_text);
      std::vector<FreeWord> words;
      for (const auto& g : gens) words.push_back(parse_free(g, ctx.rank()));
      ConvexityOptions options{radius, subgroup_length, max_elements};
      const ConvexityResult r = convexity_probe(words, ctx, options);
      json j{{"context", ctx.name()}, {"radius", radius},
             {"subgroup_length", subgroup_length.value_or(2 * radius)},
             {"subgroup_elements", r.subgroup_elements}, {"candidates_examined", r.candidates_examined}};
      json gj = json::array();
      for (const auto& w : words) gj.push_back(free_text(w, ctx));
      j["generators"] = gj;
      std::string text;
      if (r.witness) {
        const auto& w = *r.witness;
        const bool valid = witness_is_valid(w, words);
        j["status"] = "witness";
        j["witness"] = {{"c_low", free_text(w.c_low, ctx)}, {"g", free_text(w.g, ctx)},
                        {"c_high", free_text(w.c_high, ctx)}, {"ball_index", r.witness_index},
                        {"rechecked", valid}};
        text = "not convex: " + free_text(w.c_low, ctx) + " < " + free_text(w.g, ctx) + " < " +
               free_text(w.c_high, ctx) + "  (g not in subgroup, ball index " + std::to_string(r.witness_index) +
               ")";
        if (!valid) exit_code = kExitPropertyFailed;
      } else if (r.vacuous) {
        j["status"] = "vacuous";
        text = "convex: the subgroup is trivial or the whole group, so no witness exists";
      } else {
        j["status"] = "inconclusive";
        text = "inconclusive: no witness within radius " + std::to_string(radius);
        exit_code = kExitPropertyFailed;
      }
      session.emit({text, j});
    };
  });

  auto* conrad = app.add_subcommand("probe-conradian", "Search for g, h > 1 with h g^2 < g");
  conrad->add_option("--ctx", ctx_text, "f2 or kn:<n>");
  conrad->add_option("--radius", radius, "Ball radius");
  conrad->callback([&] {
    action = [&] {
      const ExoticContext ctx = ExoticContext::parse(ctx_text);
      const auto r = conradian_violation_search(ctx, radius);
      json j{{"context", ctx.name()}, {"radius", radius}};
      std::string text;
      if (r) {
        j["status"] = "witness";
        j["g"] = free_text(r->first, ctx);
        j["h"] = free_text(r->second, ctx);
        text = "not Conradian: g = " + free_text(r->first, ctx) + ", h = " + free_text(r->second, ctx) +
               ", 1 < g, 1 < h, h g^2 < g";
      } else {
        j["status"] = "inconclusive";
        text = "inconclusive: no violating pair within radius " + std::to_string(radius);
      }
      session.emit({text, j});
    };
  });

  std::uint64_t seed = 1;
  std::size_t trials = 100;
  unsigned threads = 1;
  auto* verify = app.add_subcommand("verify", "Run the seeded verification suite");
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "Worker threads (the report does not depend on this)");
  verify->callback([&] {
    action = [&] {
      SuiteOptions options;
      options.seed = seed;
      options.trials = trials;
      options.threads = std::max(1U, threads);
      const ExperimentReport report = lemma_suite(options);
      if (session.as_json) out << report.to_json().dump(2) << '\n';
      else out << report.to_text();
      if (!report.all_passed()) exit_code = kExitPropertyFailed;
    };
  });

  std::vector<std::string> argv_store = args;
  if (argv_store.empty()) argv_store.emplace_back("braidlab");
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report_error(session, "usage", e.what(), std::nullopt, kExitUsage);
  }
  for (const auto* sub : app.get_subcommands())
    if (const auto* opt = sub->get_option_no_throw("word"); opt && opt->count() > 0) session.word_given = true;
  for (const auto* sub : app.get_subcommands())
    if (const auto* opt = sub->get_option_no_throw("braid"); opt && opt->count() > 0) session.word_given = true;

  try {
    set_step_budget_override(budget_from_env());
    if (action) action();
  } catch (const UsageError& e) {
    return report_error(session, "usage", e.what(), std::nullopt, kExitUsage);
  } catch (const ParseError& e) {
    return report_error(session, "parse", e.what(), e.offset(), kExitUsage);
  } catch (const DomainError& e) {
    return report_error(session, "domain", e.what(), std::nullopt, kExitUsage);
  } catch (const BudgetExceeded& e) {
    return report_error(session, "budget", e.what(), std::nullopt, kExitUsage);
  } catch (const CapExceeded& e) {
    return report_error(session, "cap", e.what(), std::nullopt, kExitUsage);
  } catch (const std::exception& e) {
    return report_error(session, "internal", e.what(), std::nullopt, kExitUsage);
  }
  return exit_code;
}

}  // namespace braidlab::cli
