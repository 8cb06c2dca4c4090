// sumcolour: command-line front end.
//
// Exit codes:
//   0  success / no violations
//   1  monochromatic triples (or a coset-uniqueness failure) found
//   2  hypothesis violated: the group has an element of order 4
//   3  cap or budget exceeded (search verdict "unknown")
//   4  I/O, parse or usage error

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <sumcolour/report_json.hpp>
#include <sumcolour/sumcolour.hpp>

namespace {

using namespace sumcolour;

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kHypothesis = 2,
  kBudget = 3,
  kInputError = 4,
};

constexpr const char* kDefaultSignature = "prufer=3,5;s=2;r=2;mode=rational";

struct Options {
  std::string input;
  std::string output;
  std::string signature;
  std::string free_mode;
  std::string mode = "exhaustive";
  std::string drop_layer;
  std::string group = "4,4";
  std::vector<std::string> elements;
  std::uint64_t seed = 1;
  unsigned prufer_depth = 2;
  long q_bound = 2;
  long q_den_bound = 2;
  std::size_t count = 10000;
  std::size_t cap = kDefaultCap;
  std::uint64_t budget = kDefaultSearchBudget;
  unsigned parallel = 1;
  unsigned colours = 0;
  bool no_timing = false;
};

void emit(const Options& o, const Json& report, const std::string& summary) {
  const std::string text = report.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw std::ios_base::failure("cannot write " + o.output);
  out << text;
  std::cout << summary;
}

std::vector<std::int64_t> parse_orders(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("group order '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

ColourLayers layers_from(const std::string& drop) {
  ColourLayers l;
  if (drop == "d") l.d_profile = false;
  if (drop == "y") l.y_profile = false;
  if (drop == "halvable") l.halvable = false;
  return l;
}

SignaturePtr effective_signature(const Options& o) {
  auto sig = parse_signature(o.signature.empty() ? kDefaultSignature : o.signature);
  if (!o.free_mode.empty()) {
    sig = make_signature(sig->prufer_primes(), sig->s(), sig->r(), parse_free_mode(o.free_mode));
  }
  return sig;
}

FreeMode effective_free_mode(const Options& o) {
  return o.free_mode.empty() ? FreeMode::rational : parse_free_mode(o.free_mode);
}

Json analysis_json(const GroupStructure& g) {
  Json inv = Json::array();
  for (const auto& d : g.invariant_factors()) inv.push_back(d.get_str());
  return {{"generators", g.presentation().n_generators},
          {"relations", g.presentation().relations.size()},
          {"invariant_factors", inv},
          {"decomposition", to_json(g.decomposition())},
          {"has_order_four", has_order_four(g.decomposition())}};
}

int cmd_analyze(const Options& o) {
  GroupStructure g(load_presentation(o.input));
  const bool four = has_order_four(g.decomposition());
  Json r;
  r["command"] = "analyze";
  r["config"] = {{"input", o.input}};
  r["analysis"] = analysis_json(g);
  r["verdict"] = four ? "order-4 present" : "4-free";
  emit(o, r, to_string(g.decomposition()) + ": " + r["verdict"].get<std::string>() + "\n");
  return four ? kHypothesis : kOk;
}

int cmd_embed(const Options& o) {
  GroupStructure g(load_presentation(o.input));
  Json r;
  r["command"] = "embed";
  r["config"] = {{"input", o.input}, {"free_mode", to_string(effective_free_mode(o))}};
  r["analysis"] = analysis_json(g);
  if (has_order_four(g.decomposition())) {
    r["verdict"] = "order-4 present";
    emit(o, r, "refused: " + to_string(g.decomposition()) + " has an element of order 4\n");
    return kHypothesis;
  }
  auto m = build_embedding(g.decomposition(), effective_free_mode(o));
  r["embedding"] = to_json(m);
  Json gens = Json::array();
  for (std::size_t j = 0; j < g.presentation().n_generators; ++j) {
    std::vector<Integer> x(g.presentation().n_generators);
    x[j] = 1;
    gens.push_back(to_text(embed_generators(g, m, x)));
  }
  r["presentation_generator_images"] = gens;
  emit(o, r, "signature " + to_text(*m.signature) + "\n");
  return kOk;
}

int cmd_colour(const Options& o) {
  SignaturePtr sig;
  if (!o.input.empty()) {
    GroupStructure g(load_presentation(o.input));
    sig = build_embedding(g.decomposition(), effective_free_mode(o)).signature;
  } else {
    sig = effective_signature(o);
  }
  Json list = Json::array();
  std::string summary;
  for (const auto& text : o.elements) {
    auto e = parse_element(sig, text);
    auto c = colour_encode(colour(e));
    list.push_back({{"element", to_text(e)}, {"colour", c}});
    summary += to_text(e) + "\t" + c + "\n";
  }
  Json r;
  r["command"] = "colour";
  r["config"] = {{"input", o.input}, {"signature", to_text(*sig)}};
  r["colours"] = list;
  emit(o, r, summary);
  return kOk;
}

int cmd_verify(const Options& o) {
  const SampleMode mode = parse_sample_mode(o.mode);
  Json config = {{"input", o.input},
                 {"mode", to_string(mode)},
                 {"seed", o.seed},
                 {"prufer_depth", o.prufer_depth},
                 {"q_bound", o.q_bound},
                 {"q_den_bound", o.q_den_bound},
                 {"count", o.count},
                 {"cap", o.cap},
                 {"parallel", o.parallel},
                 {"drop_layer", o.drop_layer.empty() ? Json(nullptr) : Json(o.drop_layer)}};
  Json r;
  r["command"] = "verify";

  std::vector<AmbientElement> sample;
  if (!o.input.empty()) {
    GroupStructure g(load_presentation(o.input));
    config["free_mode"] = to_string(effective_free_mode(o));
    r["config"] = config;
    r["analysis"] = analysis_json(g);
    if (has_order_four(g.decomposition())) {
      r["verdict"] = "order-4 present";
      emit(o, r, "refused: " + to_string(g.decomposition()) + " has an element of order 4\n");
      return kHypothesis;
    }
    auto m = build_embedding(g.decomposition(), effective_free_mode(o));
    r["embedding"] = to_json(m);
    r["sample"] = {{"kind", "embedded-image"}, {"signature", to_text(*m.signature)}, {"free_bound", o.q_bound}};
    sample = enumerate_image_sample(m, o.q_bound, mode, o.count, o.seed, o.cap);
  } else {
    SampleSpec spec;
    spec.signature = effective_signature(o);
    spec.prufer_depth = o.prufer_depth;
    spec.q_numerator_bound = o.q_bound;
    spec.q_denominator_bound = o.q_den_bound;
    spec.mode = mode;
    spec.count = o.count;
    spec.seed = o.seed;
    spec.cap = o.cap;
    config["signature"] = to_text(*spec.signature);
    r["config"] = config;
    r["sample"] = to_json(spec);
    r["sample"]["kind"] = "ambient-box";
    sample = enumerate_sample(spec);
  }

  SweepOptions sweep;
  sweep.parallel = o.parallel;
  const auto layers = layers_from(o.drop_layer);
  auto triples = find_mono_triples(
      sample, [&layers](const AmbientElement& a) { return colour(a, layers); }, sweep);
  auto cosets = check_coset_uniqueness(sample);
  r["triples"] = to_json(triples, !o.no_timing);
  r["coset_uniqueness"] = to_json(cosets);
  const bool clean = triples.violation_count == 0 && cosets.passed();
  r["verdict"] = clean ? "no violations" : "violations found";
  std::ostringstream summary;
  summary << "sample " << triples.sample_size << " elements, " << triples.pair_count << " pairs, "
          << triples.violation_count << " violations, coset uniqueness "
          << (cosets.passed() ? "ok" : "FAILED") << "\n";
  emit(o, r, summary.str());
  return clean ? kOk : kViolations;
}

int cmd_demo(const Options& o) {
  FiniteGroup g(parse_orders(o.group));
  auto demo = order4_obstruction_demo(g);
  Json r;
  r["command"] = "demo";
  r["config"] = {{"group", o.group}};
  r["demo"] = to_json(demo, g);
  emit(o, r, demo.transcript);
  return kOk;
}

int cmd_search(const Options& o) {
  FiniteGroup g(parse_orders(o.group));
  Json r;
  r["command"] = "search";
  r["config"] = {{"group", o.group}, {"colours", o.colours == 0 ? Json("min") : Json(o.colours)},
                 {"budget", o.budget}, {"cap", o.cap}};
  r["group"] = g.text();
  r["group_order"] = g.size();
  bool unknown = false;
  std::string summary;
  if (o.colours == 0) {
    auto res = min_colours_avoiding(g, o.budget, o.cap);
    r["min_colours"] = to_json(res, !o.no_timing);
    unknown = !res.colours;
    summary = g.text() + ": minimum colours " + (res.colours ? std::to_string(*res.colours) : "unknown") + "\n";
  } else {
    auto res = all_colourings_forced(g, o.colours, o.budget, o.cap);
    r["forced"] = to_json(res, !o.no_timing);
    unknown = res.verdict == Verdict::unknown;
    summary = g.text() + " with " + std::to_string(o.colours) + " colours: " + to_string(res.verdict) + "\n";
  }
  emit(o, r, summary);
  return unknown ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Countable colourings without monochromatic {2x, 2y, x+y}: analysis, sweeps and searches"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* c) {
    c->add_option("--output,-o", o.output, "Write the JSON report here (default: stdout)");
  };
  auto add_free_mode = [&](CLI::App* c) {
    c->add_option("--free-mode", o.free_mode, "Free part over Q or Z")->check(CLI::IsMember({"rational", "integer"}));
  };
  auto add_timing = [&](CLI::App* c) { c->add_flag("--no-timing", o.no_timing, "Omit timing fields"); };

  auto* analyze = app.add_subcommand("analyze", "Invariant factors and order-4 check of a presentation");
  analyze->add_option("--input,-i", o.input, "Presentation file")->required();
  add_output(analyze);

  auto* embed_cmd = app.add_subcommand("embed", "Embedding of a 4-free presentation into the ambient group");
  embed_cmd->add_option("--input,-i", o.input, "Presentation file")->required();
  add_free_mode(embed_cmd);
  add_output(embed_cmd);

  auto* colour_cmd = app.add_subcommand("colour", "Colour ambient elements given in canonical text form");
  colour_cmd->add_option("--input,-i", o.input, "Presentation file (ambient = its embedding)");
  colour_cmd->add_option("--signature", o.signature, "Ambient signature, e.g. 'prufer=3,5;s=2;r=2'");
  colour_cmd->add_option("elements", o.elements, "Elements, e.g. 'd:{0=1/9};t:00;q:(0,3/2)'")->required();
  add_free_mode(colour_cmd);
  add_output(colour_cmd);

  auto* verify = app.add_subcommand("verify", "Sweep a sample for monochromatic {2a, 2b, a+b}");
  verify->add_option("--input,-i", o.input, "Presentation file (sample its embedded image)");
  verify->add_option("--signature", o.signature, "Ambient signature")->default_str(kDefaultSignature);
  verify->add_option("--seed", o.seed, "Random-mode seed")->capture_default_str();
  verify->add_option("--prufer-depth", o.prufer_depth, "Pruefer denominators up to p^depth")->capture_default_str();
  verify->add_option("--q-bound", o.q_bound, "Free numerators |n| <= B")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--q-den-bound", o.q_den_bound, "Free denominators <= C")->capture_default_str()->check(CLI::PositiveNumber);
  add_free_mode(verify);
  verify->add_option("--mode", o.mode, "Sample mode")->capture_default_str()->check(CLI::IsMember({"exhaustive", "random"}));
  verify->add_option("--count", o.count, "Random-mode sample size")->capture_default_str();
  verify->add_option("--cap", o.cap, "Exhaustive sample cap")->capture_default_str();
  verify->add_option("--parallel", o.parallel, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--drop-layer", o.drop_layer, "Diagnostic: drop one colour layer")
      ->check(CLI::IsMember({"d", "y", "halvable"}));
  add_timing(verify);
  add_output(verify);

  auto* demo = app.add_subcommand("demo", "Order-4 obstruction demo");
  demo->add_option("--group", o.group, "Cyclic orders, comma separated")->capture_default_str();
  add_output(demo);

  auto* search = app.add_subcommand("search", "Exhaustive colouring search on a small finite group");
  search->add_option("--group", o.group, "Cyclic orders, comma separated")->capture_default_str();
  search->add_option("--colours,-c", o.colours, "Colour count (omit for the minimum)");
  search->add_option("--budget", o.budget, "Search node budget")->capture_default_str();
  search->add_option("--cap", o.cap, "Largest group order searched");
  add_timing(search);
  add_output(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  if (search->parsed() && search->count("--cap") == 0) o.cap = kDefaultSearchGroupCap;

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (embed_cmd->parsed()) return cmd_embed(o);
    if (colour_cmd->parsed()) return cmd_colour(o);
    if (verify->parsed()) return cmd_verify(o);
    if (demo->parsed()) return cmd_demo(o);
    if (search->parsed()) return cmd_search(o);
  } catch (const HypothesisViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kHypothesis;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
