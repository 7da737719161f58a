// latrb: command-line front end for the lattice operator library.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "latrb/checks.hpp"
#include "latrb/derived.hpp"
#include "latrb/export.hpp"
#include "latrb/lattice_spec.hpp"
#include "latrb/serialize.hpp"

namespace {

using namespace latrb;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string show_image(std::span<const Element> image) {
  std::string s = "[";
  for (std::size_t i = 0; i < image.size(); ++i) s += (i ? "," : "") + std::to_string(image[i]);
  return s + "]";
}

int lattice_show(const std::string& spec_text, bool dot, bool as_json) {
  const auto spec = LatticeSpec::parse(spec_text);
  const auto l = builtin(spec);
  if (dot) {
    std::cout << export_dot(l);
    return 0;
  }
  if (as_json) {
    auto j = lattice_to_json(l);
    j["spec"] = spec.to_string();
    j["bottom"] = *l.bottom();
    j["top"] = *l.top();
    j["distributive"] = is_distributive(l);
    j["modular"] = is_modular(l);
    j["chain"] = is_chain(l);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "lattice      " << spec.to_string() << '\n'
            << "size         " << l.size() << '\n'
            << "bottom       " << l.label(*l.bottom()) << '\n'
            << "top          " << l.label(*l.top()) << '\n'
            << "distributive " << (is_distributive(l) ? "yes" : "no") << '\n'
            << "modular      " << (is_modular(l) ? "yes" : "no") << '\n'
            << "chain        " << (is_chain(l) ? "yes" : "no") << '\n'
            << "covers      ";
  for (const auto& [lo, hi] : l.covers()) std::cout << ' ' << l.label(lo) << "<" << l.label(hi);
  std::cout << '\n';
  return 0;
}

int run_enumerate(const std::string& spec_text, const std::string& predicate, bool with_classes,
                  bool count_only, const std::string& out_path, const EnumerateOptions& options) {
  const auto spec = LatticeSpec::parse(spec_text);
  const auto p = parse_predicate(predicate);
  const auto l = builtin(spec);
  const auto ops = enumerate(l, p, options);
  std::optional<IsoClassification> classes;
  if (with_classes) classes = classify(l, ops);
  const auto j = enumeration_to_json(spec.to_string(), p, ops, classes ? &*classes : nullptr,
                                     !count_only);
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw BadSpec("cannot write '" + out_path + "'");
    out << j.dump(2) << '\n';
  }
  return 0;
}

void print_table(const std::vector<CheckReport>& reports, bool timing) {
  std::size_t id_w = 5, spec_w = 7;
  for (const auto& r : reports) {
    id_w = std::max(id_w, r.id.size());
    spec_w = std::max(spec_w, r.spec.size());
  }
  for (const auto& r : reports) {
    std::ostringstream counts;
    for (std::size_t i = 0; i < r.counts.size(); ++i) counts << (i ? "," : "") << r.counts[i];
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(int(id_w) + 2) << r.id
              << std::setw(int(spec_w) + 2) << r.spec << "counts=" << counts.str();
    if (timing) std::cout << "  " << r.elapsed.count() << "ms";
    if (r.witness) std::cout << "  witness: " << *r.witness;
    std::cout << '\n';
  }
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const CheckReport& r) { return !r.passed; });
  std::cout << reports.size() - failed << " passed, " << failed << " failed\n";
}

json reports_to_json(const std::vector<CheckReport>& reports, bool timing) {
  json out = json::array();
  for (const auto& r : reports) {
    json j = {{"check", r.id}, {"lattice", r.spec}, {"passed", r.passed}, {"counts", r.counts}};
    if (timing) j["elapsed_ms"] = r.elapsed.count();
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    out.push_back(j);
  }
  return out;
}

int run_verify(const std::string& id, const CheckConfig& config, bool as_json, bool timing) {
  const auto reports = id == "all" ? run_all_checks(config) : run_check(id, config);
  if (as_json) std::cout << reports_to_json(reports, timing).dump(2) << '\n';
  else print_table(reports, timing);
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const CheckReport& r) { return r.passed; });
  return ok ? 0 : kExitFail;
}

int run_families(const std::string& spec_text, const std::string& family_text) {
  const auto spec = LatticeSpec::parse(spec_text);
  const auto l = builtin(spec);
  const auto family = FamilySpec::parse(family_text);
  const auto p = make_family(l, family);
  const auto v = is_rota_baxter(p);
  std::cout << family.to_string() << " on " << spec.to_string() << ": " << show_image(p.image())
            << '\n'
            << "rota-baxter  " << (v ? "yes" : "no");
  if (!v) std::cout << " (" << v.witness->to_string() << ")";
  std::cout << '\n'
            << "isotone      " << (is_isotone(p) ? "yes" : "no") << '\n'
            << "idempotent   " << (is_idempotent(p) ? "yes" : "no") << '\n';
  return 0;
}

int run_pin(const std::string& out_path) {
  const auto ev = generate_expected_values();
  write_expected_values(out_path, ev);
  for (const auto& [key, v] : ev.values) std::cout << key << " = " << v.count << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rota-Baxter operators and derivations on finite lattices"};
  app.require_subcommand(1);

  auto* lattice = app.add_subcommand("lattice", "Inspect a lattice");
  lattice->require_subcommand(1);
  auto* show = lattice->add_subcommand("show", "Describe a lattice");
  std::string spec;
  bool dot = false, as_json = false;
  show->add_option("--spec", spec, "Lattice spec, e.g. m:5 or prod(chain:2,chain:3)")->required();
  show->add_flag("--dot", dot, "Emit Graphviz DOT");
  show->add_flag("--json", as_json, "Emit JSON");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate operators of a class");
  std::string predicate, out_path;
  bool with_classes = false, count_only = false;
  unsigned threads = 1;
  enumerate_cmd->add_option("--spec", spec, "Lattice spec")->required();
  enumerate_cmd->add_option("--predicate", predicate, "rbo, do, ido, ieo, szasz, meet-translation, all")
      ->required();
  enumerate_cmd->add_flag("--classify", with_classes, "Classify up to automorphism");
  enumerate_cmd->add_flag("--count-only", count_only, "Omit the operator list");
  enumerate_cmd->add_option("--out", out_path, "Write JSON to FILE");
  enumerate_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* verify = app.add_subcommand("verify", "Run registered checks");
  std::string check_id, config_path, expected_path;
  std::size_t max_size = 0;
  bool timing = false, list = false;
  verify->add_option("--check", check_id, "Check id or 'all'");
  verify->add_flag("--list", list, "List registered checks");
  verify->add_option("--max-size", max_size, "Skip lattices larger than N");
  verify->add_flag("--json", as_json, "Emit JSON");
  verify->add_flag("--timing", timing, "Include elapsed times");
  verify->add_option("--config", config_path, "JSON config with size limits and catalog")
      ->check(CLI::ExistingFile);
  verify->add_option("--expected", expected_path, "Expected-values file");

  auto* families = app.add_subcommand("families", "Build a named operator family");
  std::string family;
  bool check_flag = false;
  families->add_option("--spec", spec, "Lattice spec")->required();
  families->add_option("--family", family, "e.g. psi:2, phi:3:1, step:2:0")->required();
  families->add_flag("--check", check_flag, "Report Rota-Baxter membership");

  auto* pin = app.add_subcommand("pin", "Regenerate the expected-values file with the oracle");
  pin->add_option("--out", out_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (show->parsed()) return lattice_show(spec, dot, as_json);
    if (enumerate_cmd->parsed()) {
      EnumerateOptions options;
      options.threads = threads;
      return run_enumerate(spec, predicate, with_classes, count_only, out_path, options);
    }
    if (verify->parsed()) {
      if (list) {
        for (const auto& info : check_registry())
          std::cout << std::left << std::setw(34) << info.id << info.lattices << ": " << info.summary
                    << '\n';
        return 0;
      }
      if (check_id.empty()) {
        std::cerr << "verify: --check is required\n";
        return kExitUsage;
      }
      CheckConfig config = config_path.empty() ? CheckConfig{} : load_check_config(config_path);
      if (max_size) config.max_size = max_size;
      if (!expected_path.empty()) config.expected_path = expected_path;
      return run_verify(check_id, config, as_json, timing);
    }
    if (families->parsed()) return run_families(spec, family);
    if (pin->parsed()) return run_pin(out_path);
  } catch (const latrb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
