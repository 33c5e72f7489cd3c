#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "smith/suites.hpp"

using namespace smith;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

Json load(const std::string& path) { return parse_json(read_file(path)); }

ArrowObject arrow_or_map(const Json& j) {
  if (j.is_object() && j.contains("f")) return arrow_from_json(j);
  return map_from_json(j);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("SMITH_ARROW_SEED");
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    unsigned long long s = std::stoull(env, &used);
    if (used == std::string(env).size()) return s;
  } catch (const std::exception&) {
  }
  throw ParseError("SMITH_ARROW_SEED", "expected a nonnegative integer");
}

std::pair<int, int> parse_window(const std::string& w) {
  auto colon = w.find(':');
  try {
    if (colon != std::string::npos) {
      std::size_t a = 0, b = 0;
      std::string l = w.substr(0, colon), h = w.substr(colon + 1);
      int lo = std::stoi(l, &a), hi = std::stoi(h, &b);
      if (a == l.size() && b == h.size() && lo <= hi) return {lo, hi};
    }
  } catch (const std::exception&) {
  }
  throw ParseError("--window", "expected lo:hi with lo <= hi");
}

void print_table(const std::vector<std::string>& names, const std::vector<HomologyReport>& hs) {
  int lo = hs[0].lo, hi = hs[0].hi;
  for (const auto& h : hs) lo = std::min(lo, h.lo), hi = std::max(hi, h.hi);
  std::cout << std::setw(6) << "n";
  for (const auto& n : names) std::cout << std::setw(8) << n;
  std::cout << "\n";
  for (int n = hi; n >= lo; --n) {
    std::cout << std::setw(6) << n;
    for (const auto& h : hs) std::cout << std::setw(8) << h.dim(n);
    std::cout << "\n";
  }
}

int validate(const std::string& kind, const std::string& path) {
  Json j = load(path);
  Verdict v;
  try {
    if (kind == "complex")
      v = validate_complex(complex_from_json(j));
    else if (kind == "map") {
      ChainMap f = map_from_json(j);
      v = validate_complex(f.src());
      if (v.ok()) v = validate_complex(f.dst());
      if (v.ok()) v = validate_map(f);
    } else if (kind == "arrow") {
      ArrowObject f = arrow_from_json(j);
      v = validate_complex(f.src());
      if (v.ok()) v = validate_complex(f.dst());
      if (v.ok()) v = validate_map(f);
    } else if (kind == "square")
      v = validate_square(square_from_json(j));
    else if (kind == "dga")
      v = validate_dga(dga_from_json(j));
    else if (kind == "smith")
      v = validate_smith_ideal(smith_from_json(j));
    else if (kind == "module")
      v = validate_smith_module(module_from_json(j));
    else
      throw ParseError(kind, "unknown kind");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    v = Verdict::fail(e.what());
  }
  if (v.ok()) {
    std::cout << "ok\n";
    return kPass;
  }
  std::cout << "invalid: " << v.failure << "\n";
  return kFail;
}

int homology_cmd(const std::string& path) {
  Json j = load(path);
  if (j.is_object() && (j.contains("f") || j.contains("src"))) {
    ArrowObject f = arrow_or_map(j);
    Verdict v = validate_map(f);
    if (!v.ok()) {
      std::cout << "invalid: " << v.failure << "\n";
      return kFail;
    }
    print_table({"src", "dst"}, {homology(f.src()), homology(f.dst())});
    return kPass;
  }
  ChainComplex c = complex_from_json(j);
  Verdict v = validate_complex(c);
  if (!v.ok()) {
    std::cout << "invalid: " << v.failure << "\n";
    return kFail;
  }
  print_table({"H"}, {homology(c)});
  return kPass;
}

int quotient_cmd(const std::string& path, const std::string& out) {
  SmithIdeal s = smith_from_json(load(path));
  Verdict v = validate_smith_ideal(s);
  if (!v.ok()) {
    std::cout << "invalid: " << v.failure << "\n";
    return kFail;
  }
  MonoidHom q = quotient_dga(s);
  if (!out.empty()) write_file(out, print_json(to_json(q.dst)));
  print_table({"R", "I", "R/I"}, {homology(s.alg.carrier), homology(s.ideal.carrier), homology(q.dst.carrier)});
  return kPass;
}

int product_cmd(bool box, const std::string& a, const std::string& b, const std::string& out) {
  ArrowObject f = arrow_or_map(load(a)), g = arrow_or_map(load(b));
  if (f.field() != g.field()) throw ParseError(b, "arrows over different fields");
  ArrowObject h = box ? pushout_product(f, g).arrow : tensor_arrow(f, g);
  std::string text = print_json(arrow_to_json(h));
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return kPass;
}

std::vector<std::string> split_suites(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::size_t start = 0;
    while (start <= a.size()) {
      std::size_t comma = a.find(',', start);
      std::string name = a.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!name.empty() && name != "all") out.push_back(name);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chain-complex and arrow-category computations over F_p", "smith-arrow"};
  app.require_subcommand(1);

  std::string kind, file, file2, out, window, config_path, cex_dir = "counterexamples";
  std::vector<std::string> suite_args;
  std::uint64_t seed = 0;
  int trials = 50, only_trial = -1;
  std::uint32_t p = 2;
  std::size_t max_dim = 6;
  bool with_time = false;

  auto* v = app.add_subcommand("validate", "Validate a JSON instance");
  v->add_option("kind", kind, "complex|map|arrow|square|dga|smith|module")->required();
  v->add_option("file", file)->required();

  auto* h = app.add_subcommand("homology", "Print homology dimensions of a complex");
  h->add_option("file", file)->required();

  auto* q = app.add_subcommand("quotient", "Quotient algebra of a Smith ideal");
  q->add_option("file", file)->required();
  q->add_option("-o,--output", out, "where to write the quotient algebra");

  auto* t = app.add_subcommand("tensor", "Tensor product of two arrows");
  auto* pp = app.add_subcommand("pushout-product", "Pushout product of two arrows");
  for (auto* sub : {t, pp}) {
    sub->add_option("f", file)->required();
    sub->add_option("g", file2)->required();
    sub->add_option("-o,--output", out);
  }

  auto* chk = app.add_subcommand("check", "Run seeded property suites");
  chk->add_option("suites", suite_args, "suite names, comma separated; empty or 'all' runs every suite");
  chk->add_option("--config", config_path, "JSON suite config; flags override it");
  chk->add_option("--counterexamples", cex_dir, "directory for failing trials");
  chk->add_option("--trial", only_trial, "run one trial index only");
  chk->add_flag("--time", with_time, "include wall times in the report");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("kind", kind, "complex|map|arrow|square|dga|smith|module")->required();

  for (auto* sub : {chk, gen}) {
    sub->add_option("--seed", seed);
    sub->add_option("--p", p);
    sub->add_option("--max-dim", max_dim);
    sub->add_option("--window", window, "lo:hi");
  }
  chk->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*v) return validate(kind, file);
    if (*h) return homology_cmd(file);
    if (*q) return quotient_cmd(file, out);
    if (*t) return product_cmd(false, file, file2, out);
    if (*pp) return product_cmd(true, file, file2, out);

    auto* sub = *chk ? chk : gen;
    SuiteConfig c = config_path.empty() ? SuiteConfig{} : suite_config_from_json(load(config_path));
    c.seed = sub->count("--seed") ? seed : (config_path.empty() ? default_seed() : c.seed);
    if (sub->count("--p")) c.p = p;
    if (sub->count("--max-dim")) c.max_dim = max_dim;
    if (!window.empty()) std::tie(c.lo, c.hi) = parse_window(window);

    if (*gen) {
      check_config(c);
      std::cout << print_json(generate_instance(kind, c));
      return kPass;
    }
    if (chk->count("--trials")) c.trials = trials;
    std::vector<std::string> names = split_suites(suite_args);
    if (!names.empty()) c.suites = names;
    if (only_trial >= 0) c.only_trial = only_trial;
    c.counterexample_dir = cex_dir;
    RunReport rep = run_suites(c);
    std::cout << print_json(to_json(rep, with_time));
    for (const auto& s : rep.suites)
      std::cerr << (s.failed ? "FAIL " : "pass ") << s.name << " " << s.passed << "/" << s.passed + s.failed
                << "\n";
    return rep.ok() ? kPass : kFail;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
