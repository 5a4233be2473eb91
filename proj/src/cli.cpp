#include "coxkit/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "coxkit/classify.hpp"
#include "coxkit/deodhar.hpp"
#include "coxkit/error.hpp"
#include "coxkit/isomorph.hpp"
#include "coxkit/rootspace.hpp"
#include "coxkit/structure.hpp"
#include "coxkit/verify.hpp"

namespace coxkit {
namespace {

using nlohmann::json;

struct Globals {
  std::size_t cap = kDefaultGroupCap;
  double eps = 0;
  bool json = false;
  bool verify = false;
  std::uint64_t seed = 1;
};

std::size_t env_cap() {
  if (const char* v = std::getenv("COXKIT_CAP")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return n;
    throw Error("COXKIT_CAP must be a positive integer");
  }
  return kDefaultGroupCap;
}

std::string number(double x) {
  if (std::abs(x) < root_tolerance()) x = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> names_of(const CoxeterGraph& g, VertexSet subset) {
  std::vector<std::string> out;
  for (int v : members(subset)) out.push_back(g.name(v));
  return out;
}

std::vector<std::string> word_names(const EnumeratedGroup& group, ElementId w) {
  std::vector<std::string> out;
  for (int s : group.word(w)) out.push_back(group.graph().name(s));
  return out;
}

std::string word_text(const EnumeratedGroup& group, ElementId w) {
  auto names = word_names(group, w);
  return names.empty() ? "1" : join(names, " ");
}

// Vertex names separated by spaces, commas or dots; "1" or "" is the identity.
ElementId parse_word(const EnumeratedGroup& group, const std::string& text) {
  std::vector<int> word;
  std::string token;
  auto flush = [&] {
    if (!token.empty() && token != "1") word.push_back(group.graph().index(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '.') flush();
    else token += c;
  }
  flush();
  return group.from_word(word);
}

std::string labels_text(const std::vector<TypeLabel>& labels) {
  std::vector<std::string> parts;
  for (TypeLabel t : labels) parts.push_back(t.str());
  return parts.empty() ? "1" : join(parts, " x ");
}

json labels_json(const std::vector<TypeLabel>& labels) {
  json out = json::array();
  for (TypeLabel t : labels) out.push_back(t.str());
  return out;
}

json order_json(const Cardinal& c) { return c.value ? json(c.value->str()) : json(nullptr); }

TypeLabel irreducible_type(const CoxeterGraph& g) {
  auto labels = classify_components(g);
  if (labels.size() != 1) throw Error("expected an irreducible graph, got " + labels_text(labels));
  return labels.front();
}

CommandResult finish(const Globals& opts, int code, std::string text, json payload) {
  CommandResult r;
  r.exit_code = code;
  if (opts.json) {
    r.text = payload.dump(2);
    r.json = std::move(payload);
  } else {
    r.text = std::move(text);
  }
  return r;
}

CommandResult cmd_classify(const Globals& opts, const std::string& path) {
  CoxeterGraph g = load_graph(path);
  auto labels = classify_components(g);
  Cardinal order = group_order(labels);
  if (opts.verify && order.value) {
    EnumeratedGroup group(g, opts.cap);
    if (BigInt(group.order()) != *order.value)
      throw VerificationFailure("enumerated order " + std::to_string(group.order()) +
                                " differs from closed form " + order.str());
  }
  return finish(opts, kExitOk, labels_text(labels) + " (order " + order.str() + ")",
                {{"components", labels_json(labels)}, {"order", order_json(order)}});
}

CommandResult cmd_order(const Globals& opts, const std::string& path) {
  CoxeterGraph g = load_graph(path);
  Cardinal order = group_order(classify_components(g));
  std::string text = order.str();
  if (opts.verify && order.value) {
    EnumeratedGroup group(g, opts.cap);
    if (BigInt(group.order()) != *order.value)
      throw VerificationFailure("enumerated order " + std::to_string(group.order()) +
                                " differs from closed form " + order.str());
    text += " (enumerated)";
  }
  return finish(opts, kExitOk, text, {{"order", order_json(order)}});
}

CommandResult cmd_roots(const Globals& opts, const std::string& path) {
  CoxeterGraph g = load_graph(path);
  RootTable table(g);
  std::ostringstream out;
  json rows = json::array();
  for (RootId r = 0; r < table.size(); ++r) {
    auto v = table.root(r);
    out << r << ":";
    json row = json::array();
    for (int i = 0; i < v.size(); ++i) {
      out << ' ' << number(v[i]);
      row.push_back(std::abs(v[i]) < root_tolerance() ? 0.0 : v[i]);
    }
    out << '\n';
    rows.push_back(row);
  }
  std::string text = out.str();
  if (!text.empty()) text.pop_back();
  return finish(opts, kExitOk, text,
                {{"rank", table.rank()}, {"positive", table.positive_count()}, {"roots", rows}});
}

VertexSet subset_or_all(const CoxeterGraph& g, const std::optional<std::string>& subset) {
  return subset ? parse_subset(g, *subset) : g.vertices();
}

CommandResult cmd_longest(const Globals& opts, const std::string& path,
                          const std::optional<std::string>& subset_text) {
  CoxeterGraph g = load_graph(path);
  EnumeratedGroup group(g, opts.cap);
  VertexSet subset = subset_or_all(g, subset_text);
  LongestElement w0 = longest_element(group, subset);
  std::vector<std::string> sigma;
  json sigma_json = json::object();
  for (int s : members(subset)) {
    sigma.push_back(g.name(s) + "->" + g.name(w0.sigma[s]));
    sigma_json[g.name(s)] = g.name(w0.sigma[s]);
  }
  if (opts.verify) {
    for (int s : members(subset))
      if (group.length(group.multiply(w0.element, group.generator(s))) >= group.length(w0.element))
        throw VerificationFailure("w0 has an ascent at " + g.name(s));
    int inside = 0;
    for (RootId r = 0; r < group.roots().positive_count(); ++r)
      inside += (support(group.roots().root(r)) & ~subset) == 0;
    if (group.length(w0.element) != inside)
      throw VerificationFailure("length of w0 differs from the positive roots of W_I");
  }
  std::string text = "w0(" + format_subset(g, subset) + ") = " + word_text(group, w0.element) +
                     ", length " + std::to_string(group.length(w0.element)) + "\nsigma: " +
                     (sigma.empty() ? "identity" : join(sigma, " "));
  return finish(opts, kExitOk, text,
                {{"subset", names_of(g, subset)},
                 {"word", word_names(group, w0.element)},
                 {"length", group.length(w0.element)},
                 {"sigma", sigma_json}});
}

std::string bracketed(const CoxeterGraph& g, VertexSet subset) {
  return "[" + join(names_of(g, subset), ",") + "]";
}

CommandResult cmd_deodhar(const Globals& opts, const std::string& path,
                          const std::optional<std::string>& subset_text, bool smallest,
                          int variant) {
  CoxeterGraph g = load_graph(path);
  RootTable table(g);
  VertexSet subset = subset_or_all(g, subset_text);
  DeodharOptions options;
  options.choice = smallest ? ComponentChoice::SmallestVertex : ComponentChoice::LargestVertex;
  options.variant = variant;
  ReflectionDecomposition d = deodhar_decompose(g, table, subset, options);
  if (opts.verify) {
    EnumeratedGroup group(g, opts.cap);
    if (reflection_product(group, d) != longest_element(group, subset).element)
      throw VerificationFailure("reflection product differs from w0");
  }
  std::ostringstream out;
  json roots = json::array();
  for (RootId r : d.roots) {
    auto v = table.root(r);
    json row = json::array();
    out << "root";
    for (int i = 0; i < v.size(); ++i) {
      out << ' ' << number(v[i]);
      row.push_back(std::abs(v[i]) < root_tolerance() ? 0.0 : v[i]);
    }
    out << '\n';
    roots.push_back(row);
  }
  std::vector<std::string> seq;
  json seq_json = json::array();
  for (VertexSet k : d.sequence) {
    seq.push_back(bracketed(g, k));
    seq_json.push_back(names_of(g, k));
  }
  out << "sequence: " << join(seq, " ");
  return finish(opts, kExitOk, out.str(), {{"roots", roots}, {"sequence", seq_json}});
}

CommandResult cmd_center_factor(const Globals& opts, const std::string& path) {
  CoxeterGraph g = load_graph(path);
  TypeLabel t = irreducible_type(g);
  CenterFactorDecision d = center_direct_factor(t);
  std::string text;
  json payload = {{"type", t.str()}};
  switch (d.verdict) {
    case CenterVerdict::Yes:
      text = "YES: W = Z(W) x " + d.complement->str();
      payload["verdict"] = "yes";
      payload["complement"] = d.complement->str();
      break;
    case CenterVerdict::No:
      text = "NO";
      payload["verdict"] = "no";
      break;
    case CenterVerdict::CenterTrivial:
      text = "NO: Z(W) = 1";
      payload["verdict"] = "center-trivial";
      break;
  }
  if (opts.verify) {
    EnumeratedGroup group(g, opts.cap);
    CenterFactorSearch brute = center_factor_brute(group);
    if (brute.verdict != d.verdict)
      throw VerificationFailure("closed form disagrees with the index-2 search");
    if (brute.complement) {
      FiniteGroup whole = to_finite_group(group);
      FiniteGroup product =
          direct_product(cyclic_group(2), subgroup_as_group(whole, *brute.complement));
      if (!find_isomorphism(whole, product, opts.cap))
        throw VerificationFailure("W is not isomorphic to Z(W) x complement");
      text += "\nverified: complement of order " + std::to_string(brute.complement->size());
    } else {
      text += "\nverified";
    }
  }
  return finish(opts, d.verdict == CenterVerdict::Yes ? kExitOk : kExitNegative, text, payload);
}

CommandResult cmd_indecomposable(const Globals& opts, const std::string& path) {
  CoxeterGraph g = load_graph(path);
  auto labels = classify_components(g);
  bool answer;
  std::string note;
  if (labels.size() != 1) {
    answer = false;
    note = "W = " + labels_text(labels);
  } else {
    answer = is_directly_indecomposable(labels.front(), &note);
    if (!answer) note = "W = Z(W) x " + center_direct_factor(labels.front()).complement->str();
    if (opts.verify && labels.front().is_finite()) {
      EnumeratedGroup group(g, opts.cap);
      bool brute = center_factor_brute(group).verdict != CenterVerdict::Yes;
      if (brute != answer) throw VerificationFailure("indecomposability disagrees with search");
    }
  }
  json payload = {{"indecomposable", answer}};
  if (!note.empty()) payload["note"] = note;
  return finish(opts, answer ? kExitOk : kExitNegative,
                std::string(answer ? "YES" : "NO") + (note.empty() ? "" : " (" + note + ")"),
                payload);
}

std::string case_text(const SubgroupDescription& d) {
  return d.case_label.starts_with("(") ? "case " + d.case_label : d.case_label;
}

json subgroup_json(const SubgroupDescription& d, const SubgroupHandle& h, bool elements) {
  json out = {{"case", d.case_label}, {"subgroup_order", h.size()}};
  if (elements) out["element_ids"] = h.elements();
  return out;
}

std::string subgroup_text(const CoxeterGraph& g, const SubgroupDescription& d,
                          const SubgroupHandle& h, bool elements) {
  std::string text = case_text(d) + ": " + d.str(g) + ", order " + std::to_string(h.size());
  if (elements) {
    std::vector<std::string> ids;
    for (ElementId x : h.elements()) ids.push_back(std::to_string(x));
    text += "\nelements: " + join(ids, " ");
  }
  return text;
}

CommandResult cmd_core(const Globals& opts, const std::string& path, const std::string& subset_text,
                       bool elements) {
  CoxeterGraph g = load_graph(path);
  EnumeratedGroup group(g, opts.cap);
  SubgroupDescription d = core_of_normalizer(group, parse_subset(g, subset_text), opts.verify);
  SubgroupHandle h = resolve(d, group);
  return finish(opts, kExitOk, subgroup_text(g, d, h, elements), subgroup_json(d, h, elements));
}

CommandResult cmd_centralizer(const Globals& opts, const std::string& path,
                              const std::vector<std::string>& words, bool elements) {
  CoxeterGraph g = load_graph(path);
  EnumeratedGroup group(g, opts.cap);
  std::vector<ElementId> involutions;
  for (const auto& w : words) involutions.push_back(parse_word(group, w));
  SubgroupDescription d = centralizer_of_normal_closure(group, involutions, opts.verify);
  SubgroupHandle h = resolve(d, group);
  return finish(opts, kExitOk, subgroup_text(g, d, h, elements), subgroup_json(d, h, elements));
}

CommandResult cmd_richardson(const Globals& opts, const std::string& path,
                             const std::string& word) {
  CoxeterGraph g = load_graph(path);
  EnumeratedGroup group(g, opts.cap);
  ElementId w = parse_word(group, word);
  RichardsonForm r = richardson_form(group, w);
  if (opts.verify) {
    if (conjugate_by(group, r.conjugator, w) != r.longest ||
        r.longest != longest_element(group, r.subset).element)
      throw VerificationFailure("u w u^-1 differs from w0(I)");
  }
  std::string text = "u = " + word_text(group, r.conjugator) + "\nI = " +
                     format_subset(g, r.subset) + "\nu w u^-1 = w0(I) = " +
                     word_text(group, r.longest);
  return finish(opts, kExitOk, text,
                {{"conjugator", word_names(group, r.conjugator)},
                 {"subset", names_of(g, r.subset)},
                 {"longest", word_names(group, r.longest)}});
}

// A .cox path, or failing that a comma-separated component list.
ComponentMultiset operand(const std::string& arg) {
  if (std::filesystem::exists(arg)) return component_multiset(load_graph(arg));
  return parse_component_list(arg);
}

CommandResult cmd_isomorphic(const Globals& opts, const std::string& a, const std::string& b) {
  ComponentMultiset ma = operand(a), mb = operand(b);
  Verdict v = coxeter_isomorphic(ma, mb);
  std::string text = to_string(v);
  json payload = {{"verdict", to_string(v)}, {"left", ma.str()}, {"right", mb.str()}};
  if (opts.verify) {
    std::string witness;
    if (!ma.infinite_part.empty() || !mb.infinite_part.empty() || !ma.unknown_graphs.empty() ||
        !mb.unknown_graphs.empty()) {
      witness = "not checked (infinite components)";
    } else {
      ProductGroup ga(ma.finite_part, opts.cap), gb(mb.finite_part, opts.cap);
      bool found = ga.group().order() == gb.group().order() &&
                   find_isomorphism(ga.group(), gb.group(), opts.cap).has_value();
      if (found != (v == Verdict::Yes))
        throw VerificationFailure("decider says " + to_string(v) + " but the search " +
                                  (found ? "found" : "found no") + " isomorphism");
      witness = found ? "isomorphism of groups of order " + std::to_string(ga.group().order()) +
                            " found"
                      : "no isomorphism (orders " + std::to_string(ga.group().order()) + " and " +
                            std::to_string(gb.group().order()) + ")";
    }
    text += "\nwitness: " + witness;
    payload["witness"] = witness;
  }
  return finish(opts, v == Verdict::Yes ? kExitOk : kExitNegative, text, payload);
}

CommandResult cmd_aut(const Globals& opts, const std::string& path) {
  ComponentMultiset m = admissible_refinement(component_multiset(load_graph(path)));
  if (!m.infinite_part.empty() || !m.unknown_graphs.empty())
    throw Error("aut needs a finite Coxeter group");
  ProductGroup g(m.finite_part, opts.cap);
  AutBudget b = aut_decomposition(g);
  BigInt total = b.total();
  std::string text = "|Aut(W)| = " + total.str() + "\nfactors: " + labels_text(m.finite_part) +
                     "\nH1 = " + b.h1.str() + ", H2 = " + b.h2.str() + ", H3 = " + b.h3.str() +
                     ", H4 = " + b.h4.str();
  if (opts.verify) {
    if (g.group().order() > opts.cap) throw CapExceeded("group too large to verify");
    std::size_t brute = automorphisms(g.group()).size();
    if (BigInt(brute) != total)
      throw VerificationFailure("brute force gives " + std::to_string(brute) + " automorphisms");
    text += "\nverified by enumeration";
  }
  return finish(opts, kExitOk, text,
                {{"order", total.str()},
                 {"factors", labels_json(m.finite_part)},
                 {"h1", b.h1.str()},
                 {"h2", b.h2.str()},
                 {"h3", b.h3.str()},
                 {"h4", b.h4.str()}});
}

std::vector<int> parse_multiplicities(const std::string& text) {
  std::vector<int> m;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      int k = std::stoi(tok, &used);
      if (used != tok.size() || k < 0) throw Error("");
      m.push_back(k);
    } catch (const std::exception&) {
      throw Error("bad multiplicity '" + tok + "'");
    }
  }
  if (m.empty()) throw Error("--sym needs at least one multiplicity");
  return m;
}

CommandResult cmd_aut_order(const Globals& opts, const std::string& sym) {
  std::vector<int> m = parse_multiplicities(sym);
  BigInt total = aut_order_symproduct(m);
  std::string text = total.str();
  if (opts.verify) {
    std::vector<TypeLabel> factors;
    for (std::size_t i = 1; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) factors.push_back(type_A(static_cast<int>(i)));
    if (!factors.empty()) {
      ProductGroup g(factors, opts.cap);
      std::size_t brute = automorphisms(g.group()).size();
      if (BigInt(brute) != total)
        throw VerificationFailure("brute force gives " + std::to_string(brute) + " automorphisms");
    }
    text += " (verified)";
  }
  return finish(opts, kExitOk, text, {{"order", total.str()}});
}

CommandResult cmd_verify(const Globals& opts, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
      throw Error("unknown suite '" + suite + "'; expected all or one of " +
                  join(suite_names(), ", "));
    names = {suite};
  }
  VerifyOptions options;
  options.seed = opts.seed;
  std::ostringstream out;
  json rows = json::array();
  bool ok = true;
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %-6s %10s %9s %9s", "suite", "result", "checks",
                "failures", "seconds");
  out << line;
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, options);
    ok = ok && r.passed;
    std::snprintf(line, sizeof line, "\n%-14s %-6s %10zu %9zu %9.1f", r.name.c_str(),
                  r.passed ? "PASS" : "FAIL", r.checks, r.failures, r.seconds);
    out << line;
    if (!r.passed) out << "\n  " << r.detail;
    rows.push_back({{"suite", r.name},
                    {"passed", r.passed},
                    {"checks", r.checks},
                    {"failures", r.failures},
                    {"seconds", r.seconds},
                    {"detail", r.detail}});
  }
  return finish(opts, ok ? kExitOk : kExitNegative, out.str(), {{"suites", rows}});
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  Globals opts;
  const double default_eps = root_tolerance();
  CLI::App app{"Coxeter group toolkit", "coxkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::size_t> cap;
  std::optional<double> eps;
  app.add_option("--cap", cap, "Enumeration cap (default $COXKIT_CAP or 10000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--eps", eps, "Root comparison tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--json", opts.json, "Emit JSON");
  app.add_flag("--verify", opts.verify, "Cross-check against brute force");
  app.add_option("--seed", opts.seed, "Seed for randomized suites");

  std::string file, file2, subset, word, sym, suite = "all";
  std::optional<std::string> opt_subset;
  std::vector<std::string> words;
  bool elements = false, smallest = false;
  int variant = 1;

  auto graph_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, ".cox file")->required();
    return sub;
  };
  auto* classify = graph_cmd("classify", "Irreducible components and group order");
  auto* order = graph_cmd("order", "Group order");
  auto* roots = graph_cmd("roots", "Root table (finite types)");
  auto* longest = graph_cmd("longest", "Longest element w0(I)");
  longest->add_option("--subset", opt_subset, "Comma-separated vertex names (default all)");
  auto* deodhar = graph_cmd("deodhar", "Commuting reflection decomposition of w0(I)");
  deodhar->add_option("--subset", opt_subset, "Comma-separated vertex names (default all)");
  deodhar->add_flag("--smallest", smallest, "Pick the component of the smallest vertex");
  deodhar->add_option("--variant", variant, "Highest root variant (1 or 2)")
      ->check(CLI::Range(1, 2));
  auto* center_factor = graph_cmd("center-factor", "Is Z(W) a direct factor?");
  auto* indecomposable = graph_cmd("indecomposable", "Is W directly indecomposable?");
  auto* core = graph_cmd("core", "Core of the normalizer of W_I");
  core->add_option("--subset", subset, "Comma-separated vertex names")->required();
  core->add_flag("--elements", elements, "List element ids");
  auto* centralizer = graph_cmd("centralizer", "Centralizer of the normal closure of involutions");
  centralizer->add_option("--involution", words, "Word in the generators (repeatable)");
  centralizer->add_flag("--elements", elements, "List element ids");
  auto* richardson = graph_cmd("richardson", "Conjugate an involution to some w0(I)");
  richardson->add_option("--element", word, "Word in the generators")->required();
  auto* isomorphic = app.add_subcommand("isomorphic", "Decide W(A) = W(B)");
  isomorphic->add_option("a", file, ".cox file or component list")->required();
  isomorphic->add_option("b", file2, ".cox file or component list")->required();
  auto* aut = graph_cmd("aut", "Order of Aut(W)");
  auto* aut_order = app.add_subcommand("aut-order", "Order of Aut of a product of symmetric groups");
  aut_order->add_option("--sym", sym, "Multiplicities m1,m2,... of Sym_1,Sym_2,...")->required();
  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("--suite", suite, "Suite name or all");

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitError;
    result.text = std::string("error: ") + e.what() + "\nRun with --help for usage.";
    return result;
  }

  try {
    opts.cap = cap ? *cap : env_cap();
    set_root_tolerance(eps ? *eps : default_eps);
    if (classify->parsed()) result = cmd_classify(opts, file);
    else if (order->parsed()) result = cmd_order(opts, file);
    else if (roots->parsed()) result = cmd_roots(opts, file);
    else if (longest->parsed()) result = cmd_longest(opts, file, opt_subset);
    else if (deodhar->parsed()) result = cmd_deodhar(opts, file, opt_subset, smallest, variant);
    else if (center_factor->parsed()) result = cmd_center_factor(opts, file);
    else if (indecomposable->parsed()) result = cmd_indecomposable(opts, file);
    else if (core->parsed()) result = cmd_core(opts, file, subset, elements);
    else if (centralizer->parsed()) result = cmd_centralizer(opts, file, words, elements);
    else if (richardson->parsed()) result = cmd_richardson(opts, file, word);
    else if (isomorphic->parsed()) result = cmd_isomorphic(opts, file, file2);
    else if (aut->parsed()) result = cmd_aut(opts, file);
    else if (aut_order->parsed()) result = cmd_aut_order(opts, sym);
    else if (verify->parsed()) result = cmd_verify(opts, suite);
  } catch (const std::exception& e) {
    result = {};
    result.exit_code = kExitError;
    if (opts.json) {
      result.json = json{{"error", e.what()}};
      result.text = result.json->dump(2);
    } else {
      result.text = std::string("error: ") + e.what();
    }
  }
  set_root_tolerance(default_eps);
  return result;
}

}  // namespace coxkit
