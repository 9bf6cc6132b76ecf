#include "bsgroup/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "bsgroup/classifier.hpp"
#include "bsgroup/errors.hpp"
#include "bsgroup/invariants.hpp"
#include "bsgroup/normal_form.hpp"

namespace bsgroup::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json big_to_json(const BigInt& value) {
  if (fits_int64(value)) return value.convert_to<std::int64_t>();
  return value.str();
}

json vertices_to_json(const std::vector<Vertex>& vertices) {
  json list = json::array();
  for (const auto& v : vertices) list.push_back(v.to_string());
  return list;
}

std::size_t ball_cap_from_env() {
  const char* raw = std::getenv("BS_BALL_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultBallCap;
  auto parsed = parse_bigint(raw);
  if (!parsed || *parsed < 1 || *parsed > std::numeric_limits<std::uint32_t>::max() * BigInt(1024)) {
    throw UsageError(std::string("BS_BALL_CAP must be a positive integer, got '") + raw + "'");
  }
  return parsed->convert_to<std::size_t>();
}

struct Invocation {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<std::string> words;
  std::string format;
  std::optional<std::size_t> ball_cap;
  std::optional<std::uint64_t> orbit_cap;
  int radius = 0;
  int max_syllables = 3;
  std::optional<std::string> member;
  std::string left;
  std::string right;
  bool soe = false;
};

class Session {
 public:
  Session(const Invocation& inv, CliConfig config, std::ostream& out)
      : inv_(inv), config_(config), out_(out) {}

  BsParams params() const {
    try {
      return make_params(inv_.m, inv_.n);
    } catch (const InvalidParameters& e) {
      throw UsageError(e.what());
    }
  }

  Word word(std::size_t i) const {
    try {
      return parse_word(inv_.words.at(i), params());
    } catch (const ParseError& e) {
      throw UsageError(std::string("cannot parse word '") + inv_.words.at(i) + "': " + e.what());
    }
  }

  OutputFormat format(OutputFormat fallback, std::initializer_list<OutputFormat> allowed) const {
    const OutputFormat f = config_.output_format.value_or(fallback);
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
      throw UsageError("output format not supported by this subcommand");
    }
    return f;
  }

  void emit(const json& doc) { out_ << doc.dump(2) << '\n'; }
  void emit(const std::string& text) { out_ << text << '\n'; }
  void emit(const char* text) { emit(std::string(text)); }

  void reduce() {
    const Word w = word(0);
    const Word r = britton_reduce(w);
    if (format(OutputFormat::Text, {OutputFormat::Text, OutputFormat::Json}) == OutputFormat::Json) {
      emit(json{{"input", w.to_string()}, {"reduced", r.to_string()}, {"identity", r.empty()}});
    } else {
      emit(r.to_string());
    }
  }

  void eq() {
    const bool equal = are_equal(word(0), word(1));
    if (format(OutputFormat::Text, {OutputFormat::Text, OutputFormat::Json}) == OutputFormat::Json) {
      emit(json{{"left", word(0).to_string()}, {"right", word(1).to_string()}, {"equal", equal}});
    } else {
      emit(equal ? "true" : "false");
    }
  }

  void nf() {
    const NormalForm form = normal_form(word(0));
    if (format(OutputFormat::Text, {OutputFormat::Text, OutputFormat::Json}) == OutputFormat::Json) {
      json prefix = json::array();
      for (const auto& e : form.prefix()) prefix.push_back(json::array({e.t_sign, e.residue}));
      emit(json{{"prefix", prefix}, {"tail", big_to_json(form.tail())}, {"word", form.to_string()}});
    } else {
      emit(form.to_string());
    }
  }

  void tree() {
    const Ball b = ball(params(), inv_.radius, config_.ball_cap);
    switch (format(OutputFormat::Dot, {OutputFormat::Dot, OutputFormat::Json, OutputFormat::Text})) {
      case OutputFormat::Dot:
        out_ << to_dot(b);
        break;
      case OutputFormat::Json: {
        json edges = json::array();
        for (std::size_t i = 0; i < b.size(); ++i) {
          for (const auto& nb : neighbors(b.vertices[i])) {
            if (nb.orientation != Orientation::Outgoing) continue;
            if (auto j = b.index_of(nb.vertex)) edges.push_back(json::array({i, *j}));
          }
        }
        emit(json{{"m", b.params.m()},
                  {"n", b.params.n()},
                  {"radius", b.radius},
                  {"vertices", vertices_to_json(b.vertices)},
                  {"depth", b.depth},
                  {"edges", edges}});
        break;
      }
      case OutputFormat::Text:
        for (std::size_t i = 0; i < b.size(); ++i) out_ << b.depth[i] << '\t' << b.vertices[i].to_string() << '\n';
        break;
    }
  }

  void index() {
    const Word g = word(0);
    const IndexReport report = orbit_index(g, config_.orbit_cap);
    if (report.exceeded_cap()) throw CapExceeded("orbit", config_.orbit_cap);
    if (format(OutputFormat::Json, {OutputFormat::Json, OutputFormat::Text}) == OutputFormat::Json) {
      emit(json{{"element", g.to_string()}, {"index", *report.index}, {"orbit", vertices_to_json(report.orbit)}});
    } else {
      emit(std::to_string(*report.index));
    }
  }

  void min_index() {
    const BsParams p = params();
    if (inv_.max_syllables < 1) throw UsageError("--max-syllables must be at least 1");
    const std::uint64_t k = min_index_over_words(p, inv_.max_syllables, config_.orbit_cap);
    if (format(OutputFormat::Json, {OutputFormat::Json, OutputFormat::Text}) == OutputFormat::Json) {
      emit(json{{"m", p.m()}, {"n", p.n()}, {"max_syllables", inv_.max_syllables}, {"min_index", k}});
    } else {
      emit(std::to_string(k));
    }
  }

  void commensurate() {
    const Word g = word(0);
    const std::uint64_t k = commensuration_exponent(g, config_.orbit_cap);
    if (format(OutputFormat::Json, {OutputFormat::Json, OutputFormat::Text}) == OutputFormat::Json) {
      emit(json{{"element", g.to_string()}, {"exponent", k}});
    } else {
      emit(std::to_string(k));
    }
  }

  void kernel() {
    const Word g = word(0);
    const bool trivial = acts_trivially_on_ball(g, inv_.radius, config_.ball_cap);
    if (format(OutputFormat::Json, {OutputFormat::Json, OutputFormat::Text}) == OutputFormat::Json) {
      emit(json{{"element", g.to_string()}, {"radius", inv_.radius}, {"acts_trivially", trivial}});
    } else {
      emit(trivial ? "true" : "false");
    }
  }

  void delta() {
    const Word g = word(0);
    const ModularValue v = modular_delta(g);
    if (format(OutputFormat::Text, {OutputFormat::Text, OutputFormat::Json}) == OutputFormat::Json) {
      emit(json{{"element", g.to_string()}, {"delta", v.to_string()}});
    } else {
      emit(v.to_string());
    }
  }

  void scale() {
    const ScaleSet s = scale_set(params());
    json doc{{"m0", s.m0}, {"n0", s.n0}};
    std::optional<bool> member;
    if (inv_.member) {
      auto value = parse_bigint(*inv_.member);
      if (!value || *value < 1) throw UsageError("--member must be a positive integer");
      member = scale_member(s, *value);
      doc["member"] = *member;
    }
    if (format(OutputFormat::Json, {OutputFormat::Json, OutputFormat::Text}) == OutputFormat::Json) {
      emit(doc);
    } else {
      std::string text = "{" + std::to_string(s.m0) + "^k} u {" + std::to_string(s.n0) + "^k}";
      if (member) text += *member ? "\ntrue" : "\nfalse";
      emit(text);
    }
  }

  void classify() {
    std::string notes;
    auto normalise = [&notes](const std::string& text) {
      std::vector<RawPair> raw;
      try {
        raw = parse_product(text);
      } catch (const ParseError& e) {
        throw UsageError(std::string("cannot parse product '") + text + "': " + e.what());
      }
      std::vector<BsParams> result;
      for (const auto& [m, n] : raw) {
        try {
          result.push_back(make_params(m, n));
        } catch (const InvalidParameters& e) {
          throw UsageError(e.what());
        }
        const BsParams& p = result.back();
        if (p.m() != m || p.n() != n) {
          notes += "(" + std::to_string(m) + "," + std::to_string(n) + ") normalised to " + p.to_string() + "; ";
        }
      }
      return result;
    };
    const auto left = normalise(inv_.left);
    const auto right = normalise(inv_.right);
    const IsoVerdict v = inv_.soe ? soe_conclusion(left, right) : product_isomorphic(left, right);
    const std::string reason = notes + v.reason;

    if (format(OutputFormat::Json, {OutputFormat::Json, OutputFormat::Text}) == OutputFormat::Json) {
      json doc{{"isomorphic", v.isomorphic}};
      doc["sigma"] = v.witness ? json(*v.witness) : json(nullptr);
      doc["kind"] = std::string(to_string(v.kind));
      doc["reason"] = reason;
      emit(doc);
    } else {
      emit(std::string(v.isomorphic ? "isomorphic" : "not isomorphic") + ": " + reason);
    }
  }

 private:
  const Invocation& inv_;
  CliConfig config_;
  std::ostream& out_;
};

void write_error(std::ostream& err, const std::string& kind, const std::string& message,
                 std::optional<std::uint64_t> cap = std::nullopt) {
  json doc{{"error", kind}, {"message", message}};
  if (cap) doc["cap"] = *cap;
  err << doc.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Exact computation in Baumslag-Solitar groups and their relative profinite completions",
               "bsgroup"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "text", "dot"};
  auto add_common = [&](CLI::App* sub, bool needs_params) {
    if (needs_params) {
      sub->add_option("--m", inv.m, "first parameter (nonzero)")->required()->allow_extra_args(false);
      sub->add_option("--n", inv.n, "second parameter (nonzero)")->required()->allow_extra_args(false);
    }
    sub->add_option("--format", inv.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--ball-cap", inv.ball_cap, "maximum number of vertices in a ball")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", inv.orbit_cap, "iteration cap for orbit and exponent searches")
        ->check(CLI::PositiveNumber);
  };
  auto add_words = [&](CLI::App* sub, std::size_t count) {
    sub->add_option("words", inv.words, count == 1 ? "word" : "words")
        ->required()
        ->expected(static_cast<int>(count));
  };

  std::vector<std::pair<CLI::App*, void (Session::*)()>> commands;
  auto command = [&](const char* name, const char* help, void (Session::*handler)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, handler);
    return sub;
  };

  auto* reduce = command("reduce", "Britton-reduce a word", &Session::reduce);
  add_common(reduce, true);
  add_words(reduce, 1);

  auto* eq = command("eq", "decide whether two words are equal", &Session::eq);
  add_common(eq, true);
  add_words(eq, 2);

  auto* nf = command("nf", "canonical normal form of a word", &Session::nf);
  add_common(nf, true);
  add_words(nf, 1);

  auto* tree = command("tree", "ball of the Bass-Serre tree", &Session::tree);
  add_common(tree, true);
  tree->add_option("--radius", inv.radius, "ball radius")->required()->check(CLI::NonNegativeNumber);

  auto* index = command("index", "[<a> : <a> ∩ g<a>g^-1] via the <a>-orbit of g<a>", &Session::index);
  add_common(index, true);
  add_words(index, 1);

  auto* min_index = command("min-index", "minimal index over words outside <a>", &Session::min_index);
  add_common(min_index, true);
  min_index->add_option("--max-syllables", inv.max_syllables, "maximal number of t-letters")
      ->check(CLI::PositiveNumber);

  auto* commensurate =
      command("commensurate", "least k with g a^k g^-1 in <a>", &Session::commensurate);
  add_common(commensurate, true);
  add_words(commensurate, 1);

  auto* kernel = command("kernel", "whether a word fixes a ball pointwise", &Session::kernel);
  add_common(kernel, true);
  add_words(kernel, 1);
  kernel->add_option("--radius", inv.radius, "ball radius")->required()->check(CLI::NonNegativeNumber);

  auto* delta = command("delta", "modular function of a word", &Session::delta);
  add_common(delta, true);
  add_words(delta, 1);

  auto* scale = command("scale", "scale set of G(m,n)", &Session::scale);
  add_common(scale, true);
  scale->add_option("--member", inv.member, "test membership of a positive integer");

  auto* classify = command("classify", "isomorphism of products of completions", &Session::classify);
  add_common(classify, false);
  classify->add_option("--left", inv.left, "product such as \"(2,3)x(4,4)\"")->required();
  classify->add_option("--right", inv.right, "product such as \"(-4,4)x(2,3)\"")->required();
  classify->add_flag("--soe", inv.soe, "report the stable orbit equivalence conclusion");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kExitUsageError;
  }

  try {
    CliConfig config;
    config.ball_cap = inv.ball_cap.value_or(ball_cap_from_env());
    if (inv.orbit_cap) config.orbit_cap = *inv.orbit_cap;
    if (inv.format == "json") config.output_format = OutputFormat::Json;
    if (inv.format == "text") config.output_format = OutputFormat::Text;
    if (inv.format == "dot") config.output_format = OutputFormat::Dot;

    Session session(inv, config, out);
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) (session.*handler)();
    }
    return kExitOk;
  } catch (const UsageError& e) {
    write_error(err, "usage", e.what());
    return kExitUsageError;
  } catch (const CapExceeded& e) {
    write_error(err, "cap-exceeded", e.what(), e.cap());
    return kExitDomainError;
  } catch (const OutOfHypothesis& e) {
    write_error(err, "out-of-hypothesis", e.what());
    return kExitDomainError;
  } catch (const Error& e) {
    write_error(err, "domain", e.what());
    return kExitDomainError;
  }
}

}  // namespace bsgroup::cli
