// surfaut: exact computation of component groups along the automorphism
// ladder Aut_0 < Aut_* < Aut_sharp < Aut_Z < Aut_Q for surface descriptors.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 precondition violation,
// 1 unexpected internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "surfaut/classifier.hpp"
#include "surfaut/serialize.hpp"
#include "surfaut/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace surfaut;

namespace {

struct GlobalOpts {
  std::string format = "text";
  bool verbose = false;
  int jobs = 1;
  long long torsion_bound = 0;  // 0 = auto escalation

  elliptic::NormalizerOptions normalizer() const {
    elliptic::NormalizerOptions o;
    if (torsion_bound > 0) o.forced_bound = torsion_bound;
    return o;
  }
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- classify --

const std::vector<std::string> kDisplayOrder = {
    classifier::slot::aut0,
    classifier::slot::aut_star,
    classifier::slot::aut_sharp,
    classifier::slot::aut_z,
    classifier::slot::aut_q,
    classifier::slot::gamma_star,
    classifier::slot::gamma_sharp_over_star,
    classifier::slot::gamma_z_over_sharp,
    classifier::slot::gamma_q_over_z,
    classifier::slot::gamma_z,
    classifier::slot::gamma_q,
    classifier::slot::order_aut_q,
    classifier::slot::order_aut_z,
    classifier::slot::order_gamma_star,
    classifier::slot::index_q_over_0,
    classifier::slot::index_q_over_z,
};

std::string render_report_text(const classifier::SurfaceDescriptor& desc,
                               const classifier::ClassificationReport& rep) {
  std::ostringstream os;
  os << "surface: " << classifier::descriptor_kind_name(desc) << "\n";
  os << "ladder:\n";
  std::size_t width = 0;
  for (const auto& s : kDisplayOrder) width = std::max(width, s.size());
  for (const auto& s : kDisplayOrder) {
    const auto it = rep.ladder.find(s);
    if (it == rep.ladder.end()) continue;
    os << "  " << s << std::string(width - s.size(), ' ') << " : "
       << classifier::ladder_value_to_string(it->second.value) << "  [";
    for (std::size_t i = 0; i < it->second.rules.size(); ++i)
      os << (i ? "," : "") << it->second.rules[i].rule;
    os << "]\n";
  }
  if (!rep.invariants.empty()) {
    os << "invariants:";
    for (const auto& [k, v] : rep.invariants) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  os << "rules applied:\n";
  for (const auto& r : rep.rules_applied) os << "  " << r.rule << ": " << r.anchor << "\n";
  return os.str();
}

struct FileOutcome {
  std::string path;
  int exit_class = 0;  // 0 ok, 2 parse, 3 precondition
  std::string payload;  // report document or error message
};

FileOutcome classify_file(const fs::path& path, const GlobalOpts& g) {
  FileOutcome out{path.string(), 0, {}};
  try {
    const auto desc = io::descriptor_from_json(read_file(path));
    const auto rep = classifier::classify(desc, {g.normalizer()});
    out.payload = g.format == "json" ? io::report_document(desc, rep)
                                     : render_report_text(desc, rep);
  } catch (const parse_error& e) {
    out.exit_class = 2;
    out.payload = e.what();
  } catch (const precondition_error& e) {
    out.exit_class = 3;
    out.payload = e.what();
  }
  return out;
}

int cmd_classify(const std::string& path_arg, const GlobalOpts& g) {
  const fs::path path(path_arg);
  if (!fs::exists(path)) {
    std::cerr << "surfaut: no such path: " << path_arg << "\n";
    return 2;
  }

  if (!fs::is_directory(path)) {
    const FileOutcome out = classify_file(path, g);
    if (out.exit_class != 0) {
      std::cerr << "surfaut: " << out.payload << "\n";
      return out.exit_class;
    }
    std::cout << out.payload;
    return 0;
  }

  // batch mode: every *.json under the directory, sorted by path
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<FileOutcome> outcomes(files.size());
  const int jobs = std::max(1, g.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      outcomes[i] = classify_file(files[i], g);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bool any_parse = false, any_pre = false;
  if (g.format == "json") {
    ordered_json batch;
    batch["schema"] = io::kBatchSchema;
    batch["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    batch["reports"] = ordered_json::array();
    for (const auto& out : outcomes) {
      ordered_json r;
      r["path"] = out.path;
      if (out.exit_class == 0) {
        r["status"] = "ok";
        r["report"] = ordered_json::parse(out.payload);
      } else {
        r["status"] = "error";
        r["exit_class"] = out.exit_class;
        r["message"] = out.payload;
      }
      batch["reports"].push_back(std::move(r));
    }
    std::cout << batch.dump(2) << "\n";
  } else {
    for (const auto& out : outcomes) {
      std::cout << "== " << out.path << "\n";
      if (out.exit_class == 0)
        std::cout << out.payload;
      else
        std::cout << "error (exit class " << out.exit_class << "): " << out.payload << "\n";
    }
  }
  for (const auto& out : outcomes) {
    any_parse |= out.exit_class == 2;
    any_pre |= out.exit_class == 3;
  }
  return any_parse ? 2 : any_pre ? 3 : 0;
}

// ---------------------------------------------------------------- orbifold --

int cmd_orbifold(long long genus, const std::string& mults_arg, bool do_swap, long long swap_i,
                 long long swap_j, long long base_genus, const GlobalOpts& g) {
  std::vector<long long> mults;
  if (!mults_arg.empty()) {
    std::stringstream ss(mults_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t pos = 0;
        mults.push_back(std::stoll(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw parse_error("bad multiplicity '" + tok + "' in --mults");
      }
    }
  }
  if (do_swap && (swap_i < 1 || swap_j < 1))
    throw parse_error("--swap indices are 1-based and must be positive");

  const orbifold::OrbifoldSignature sig(genus, mults);
  const auto group = orbifold::abelianized_orbifold_group(sig);
  const auto euler = orbifold::orbifold_euler(sig);

  std::optional<orbifold::SwapVerdict> verdict;
  SolveCertificate cert;
  if (do_swap) {
    verdict = orbifold::swap_excluded(sig, base_genus, swap_i, swap_j);
    std::vector<Int> target(sig.count());
    target[swap_i - 1] = 1;
    target[swap_j - 1] = -1;
    cert = solve_integer_certificate(orbifold::multiple_fibre_relations(sig), target);
  }

  if (g.format == "json") {
    ordered_json j;
    j["schema"] = "surfaut-orbifold/1";
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["signature"] = {{"genus", sig.genus}, {"multiplicities", sig.multiplicities}};
    ordered_json factors = ordered_json::array();
    for (const Int& d : group.invariant_factors) factors.push_back(d.str());
    j["abelianized_invariant_factors"] = factors;
    j["abelianized"] = group.to_string();
    j["orbifold_euler"] = to_string(euler);
    if (verdict) {
      ordered_json sj;
      sj["i"] = swap_i;
      sj["j"] = swap_j;
      sj["base_genus"] = base_genus;
      sj["verdict"] = verdict->excluded ? "excluded" : "not-excluded";
      if (verdict->excluded) sj["reason"] = verdict->reason;
      sj["classes_identified"] = cert.solution.has_value();
      if (g.verbose) {
        if (cert.solution) {
          ordered_json w = ordered_json::array();
          for (const Int& c : *cert.solution) w.push_back(c.str());
          sj["witness"] = w;
        } else {
          sj["infeasibility"] = {{"row", *cert.failing_row},
                                 {"value", cert.failing_value.str()},
                                 {"divisor", cert.failing_divisor.str()}};
        }
      }
      j["swap"] = sj;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::ostringstream os;
  os << "signature: " << sig.to_string() << "\n";
  os << "abelianized orbifold group: " << group.to_string() << "\n";
  os << "orbifold Euler number: " << to_string(euler) << "\n";
  if (verdict) {
    os << "swap of fibres " << swap_i << "," << swap_j << " over a genus-" << base_genus
       << " base: " << (verdict->excluded ? "Excluded (" + verdict->reason + ")" : "NotExcluded")
       << "\n";
    if (g.verbose) {
      if (cert.solution) {
        os << "lattice witness (coefficients of m_i e_i columns, then e): [";
        for (std::size_t i = 0; i < cert.solution->size(); ++i)
          os << (i ? " " : "") << (*cert.solution)[i];
        os << "]\n";
      } else {
        os << "infeasibility certificate: (U v)[" << *cert.failing_row << "] = "
           << cert.failing_value << " not divisible by diagonal entry " << cert.failing_divisor
           << "\n";
      }
    }
  }
  std::cout << os.str();
  return 0;
}

// --------------------------------------------------------------------- bdf --

int cmd_bdf(int type, const std::string& curve, const std::string& epsilon_arg,
            const GlobalOpts& g) {
  elliptic::TauClass tau;
  if (curve == "generic") tau = elliptic::TauClass::generic;
  else if (curve == "square") tau = elliptic::TauClass::square;
  else if (curve == "hexagonal") tau = elliptic::TauClass::hexagonal;
  else throw parse_error("--curve must be generic|square|hexagonal");

  std::optional<elliptic::TorsionPoint> eps;
  if (!epsilon_arg.empty()) {
    const auto comma = epsilon_arg.find(',');
    if (comma == std::string::npos) throw parse_error("--epsilon must look like 1/2,0");
    eps = elliptic::TorsionPoint(parse_rational(epsilon_arg.substr(0, comma)),
                                 parse_rational(epsilon_arg.substr(comma + 1)));
  }

  const auto datum = elliptic::BdFDatum::make(type, tau, eps);
  const auto result = elliptic::normalizer_quotient_full(datum, g.normalizer());
  const bool max12 = result.quotient.order == 12;

  if (g.format == "json") {
    ordered_json j;
    j["schema"] = "surfaut-bdf/1";
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["type"] = type;
    j["curve"] = curve;
    if (eps) j["epsilon"] = to_string(eps->x) + "," + to_string(eps->y);
    j["quotient"] = {{"order", result.quotient.order.str()},
                     {"abelian", result.quotient.abelian}};
    if (result.quotient.name) j["quotient"]["name"] = *result.quotient.name;
    j["max_order_12_attained"] = max12;
    j["torsion_bound_used"] = result.torsion_bound_used;
    if (g.verbose) {
      ordered_json elems = ordered_json::array();
      for (const auto& a : result.normalizer_elements) elems.push_back(a.to_string());
      j["normalizer_elements"] = elems;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "N_G/G: " << result.quotient.to_string() << "\n";
  std::cout << "attains the maximum order 12: " << (max12 ? "yes" : "no") << "\n";
  if (g.verbose) {
    std::cout << "torsion bound used: " << result.torsion_bound_used << "\n";
    std::cout << "normalizer N_G (" << result.normalizer_elements.size() << " elements):\n";
    for (const auto& a : result.normalizer_elements) std::cout << "  " << a.to_string() << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ blowup-chain --

int cmd_blowup_chain(long long n, const std::string& point_arg, const GlobalOpts& g) {
  blowup::ChainPoint point;
  if (point_arg == "general") point = blowup::ChainPoint::general;
  else if (point_arg == "fixed-l4") point = blowup::ChainPoint::fixed_on_l4;
  else if (point_arg == "fixed-preve") point = blowup::ChainPoint::fixed_on_prev_e;
  else throw parse_error("--point must be general|fixed-l4|fixed-preve");

  const auto rep = blowup::rational_chain_report(n, point);
  const std::string aut =
      rep.aut_q.full_torus ? "C* (full torus)" : "Z/" + std::to_string(rep.aut_q.n);

  if (g.format == "json") {
    ordered_json j;
    j["schema"] = "surfaut-blowup-chain/1";
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["n"] = rep.n;
    j["point"] = point_arg;
    j["final_weights"] = {rep.final_weights.wu, rep.final_weights.wv};
    j["stabilizer"] = rep.aut_q.to_string();
    j["aut_q"] = aut;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "chain length n+1 = " << n + 1 << ", final chart weights: ("
            << rep.final_weights.wu << ", " << rep.final_weights.wv << ")\n";
  std::cout << "stabilizer of the blown-up point: " << rep.aut_q.to_string() << "\n";
  std::cout << "Aut_Q = Aut_* = " << aut << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact component groups along the automorphism ladder of compact surfaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("-v,--verbose", g.verbose, "print witnesses and element lists");
  app.add_option("--jobs", g.jobs, "worker threads for directory batches")
      ->check(CLI::PositiveNumber);
  app.add_option("--torsion-bound", g.torsion_bound,
                 "fixed torsion modulus for the normalizer search (default: auto-escalation)")
      ->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "classify a descriptor file (or directory)");
  std::string classify_path;
  classify->add_option("path", classify_path, "descriptor file or directory")->required();

  auto* orb = app.add_subcommand("orbifold", "abelianized orbifold group and swap criterion");
  long long genus = 0;
  std::string mults;
  std::vector<long long> swap_ij;
  long long base_genus = 0;
  orb->add_option("--genus", genus, "base orbifold genus")->required();
  orb->add_option("--mults", mults, "comma-separated multiplicities (omit for none)");
  orb->add_option("--swap", swap_ij, "pair of 1-based fibre indices")->expected(2);
  orb->add_option("--base-genus", base_genus, "genus of the base curve for the swap criterion");

  auto* bdf = app.add_subcommand("bdf", "normalizer quotient N_G/G for the seven product types");
  int type = 1;
  std::string curve, epsilon;
  bdf->add_option("--type", type, "type index 1-7")->required();
  bdf->add_option("--curve", curve, "generic|square|hexagonal")->required();
  bdf->add_option("--epsilon", epsilon, "2-torsion translation for type 2, e.g. 1/2,0");

  auto* chain = app.add_subcommand("blowup-chain", "iterated equivariant blow-up of the plane");
  long long n = 0;
  std::string point = "general";
  chain->add_option("--n", n, "chain parameter (n+1 blow-ups)")->required();
  chain->add_option("--point", point, "general|fixed-l4|fixed-preve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(classify_path, g);
    if (orb->parsed()) {
      if (!swap_ij.empty() && swap_ij.size() != 2)
        throw parse_error("--swap needs exactly two indices");
      return cmd_orbifold(genus, mults, !swap_ij.empty(), swap_ij.empty() ? 0 : swap_ij[0],
                          swap_ij.empty() ? 0 : swap_ij[1], base_genus, g);
    }
    if (bdf->parsed()) return cmd_bdf(type, curve, epsilon, g);
    if (chain->parsed()) {
      if (n < 0) throw parse_error("--n must be >= 0");
      return cmd_blowup_chain(n, point, g);
    }
  } catch (const parse_error& e) {
    std::cerr << "surfaut: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "surfaut: precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "surfaut: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "surfaut: internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
