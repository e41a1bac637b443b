// Command-line interface for the discrete Morse theory library: validation,
// critical-cell and persistence reports, strong-connection analysis between
// two functions on a graph, exhaustive theorem sweeps, generation of random
// functions and DOT export.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmt/connectivity.hpp"
#include "dmt/generate.hpp"
#include "dmt/io.hpp"
#include "dmt/morse.hpp"
#include "dmt/persistence.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ResolvedComplex {
  dmt::SimplicialComplex complex;
  const dmt::CorpusEntry* builtin = nullptr;  // set when resolved from the corpus
};

ResolvedComplex resolve_complex(const std::string& spec) {
  ResolvedComplex out;
  std::string name = spec;
  const bool forced_builtin = spec.rfind("builtin:", 0) == 0;
  if (forced_builtin) name = spec.substr(8);
  if (!forced_builtin && std::filesystem::exists(spec)) {
    out.complex = dmt::read_complex_file(spec);
    return out;
  }
  const dmt::CorpusEntry* entry = dmt::find_corpus_entry(name);
  if (entry == nullptr)
    throw dmt::Error(dmt::ErrorKind::parse,
                     "cannot resolve complex '" + spec + "' (no such file or builtin)");
  out.complex = entry->complex;
  out.builtin = entry;
  return out;
}

dmt::MorseFunction resolve_function(const std::string& spec, const ResolvedComplex& rk) {
  if (spec.rfind("builtin:", 0) == 0) {
    const std::string name = spec.substr(8);
    if (rk.builtin == nullptr)
      throw dmt::Error(dmt::ErrorKind::parse,
                       "builtin function '" + name + "' needs a builtin complex");
    const dmt::MorseFunction* f = rk.builtin->function(name);
    if (f == nullptr)
      throw dmt::Error(dmt::ErrorKind::parse, "builtin complex '" + rk.builtin->name +
                                                  "' has no function '" + name + "'");
    return *f;
  }
  return dmt::read_dmf_file(spec, rk.complex);
}

const char* violation_kind(dmt::DmfViolation::Kind kind) {
  switch (kind) {
    case dmt::DmfViolation::Kind::low_cofaces: return "low-cofaces";
    case dmt::DmfViolation::Kind::high_faces: return "high-faces";
    case dmt::DmfViolation::Kind::repeated_value: return "repeated-value";
  }
  return "?";
}

int run_validate(const std::string& kspec, const std::string& fspec) {
  const ResolvedComplex rk = resolve_complex(kspec);
  const dmt::MorseFunction f = resolve_function(fspec, rk);
  const dmt::DmfReport report = dmt::validate_dmf(rk.complex, f);
  if (report.ok) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const dmt::DmfViolation& v : report.violations) {
    std::cout << "violation\t" << violation_kind(v.kind) << '\t' << rk.complex.name(v.simplex);
    for (dmt::SimplexId s : v.offenders) std::cout << '\t' << rk.complex.name(s);
    std::cout << '\n';
  }
  return kExitCheckFailed;
}

int run_critical(const std::string& kspec, const std::string& fspec) {
  const ResolvedComplex rk = resolve_complex(kspec);
  const dmt::SimplicialComplex& K = rk.complex;
  const dmt::MorseFunction f = resolve_function(fspec, rk);
  const dmt::CriticalInfo info = dmt::critical_simplices(K, f);
  std::cout << "simplex\tdim\tvalue\tstatus\n";
  for (dmt::SimplexId s = 0; s < static_cast<dmt::SimplexId>(K.size()); ++s) {
    std::cout << K.name(s) << '\t' << K.dim_of(s) << '\t' << f.value(s).str() << '\t'
              << (info.is_critical[s] ? "critical" : "non-critical") << '\n';
  }
  for (size_t q = 0; q < info.counts_by_dim.size(); ++q)
    std::cout << "C" << q << "=" << info.counts_by_dim[q] << '\n';
  return kExitOk;
}

int run_betti(const std::string& kspec) {
  const ResolvedComplex rk = resolve_complex(kspec);
  const std::vector<int64_t> betti = rk.complex.betti_numbers();
  for (size_t q = 0; q < betti.size(); ++q)
    std::cout << "beta_" << q << '\t' << betti[q] << '\n';
  std::cout << "chi\t" << rk.complex.euler_characteristic() << '\n';
  return kExitOk;
}

int run_pairs(const std::string& kspec, const std::string& fspec) {
  const ResolvedComplex rk = resolve_complex(kspec);
  const dmt::SimplicialComplex& K = rk.complex;
  const dmt::MorseFunction f = resolve_function(fspec, rk);
  const dmt::PersistenceResult result = dmt::persistence_pairs(K, f);

  std::vector<dmt::PersistencePair> rows = result.pairs;
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (result.filtration.entry[a.birth] != result.filtration.entry[b.birth])
      return result.filtration.entry[a.birth] < result.filtration.entry[b.birth];
    return a.birth < b.birth;
  });
  std::cout << "dim\tbirth\tdeath\tbirth_value\tdeath_value\tpersistence\n";
  for (const dmt::PersistencePair& p : rows) {
    const dmt::Rational birth_value = result.filtration.entry[p.birth];
    std::cout << p.dim << '\t' << K.name(p.birth) << '\t'
              << (p.essential() ? "inf" : K.name(p.death)) << '\t' << birth_value.str() << '\t';
    if (p.essential()) {
      std::cout << "inf\tinf\n";
    } else {
      const dmt::Rational death_value = result.filtration.entry[p.death];
      std::cout << death_value.str() << '\t' << (death_value - birth_value).str() << '\n';
    }
  }
  return kExitOk;
}

void print_connection_rows(const dmt::SimplicialComplex& K, const dmt::ConnectionReport& report) {
  for (const dmt::ConnectionEntry& entry : report.entries) {
    const char* direction =
        entry.strong() ? "strong" : (!entry.forward.empty() ? "fwd" : "bwd");
    const auto row = [&](const dmt::GradientPath& path) {
      std::cout << report.q << '\t' << K.name(entry.alpha) << '\t' << K.name(entry.beta) << '\t'
                << direction << '\t';
      for (size_t i = 0; i < path.sequence.size(); ++i) {
        if (i > 0) std::cout << ';';
        std::cout << K.name(path.sequence[i]);
      }
      std::cout << '\n';
    };
    for (const dmt::GradientPath& path : entry.forward) row(path);
    for (const dmt::GradientPath& path : entry.backward) row(path);
  }
}

int run_connect(const std::string& kspec, const std::string& f1spec, const std::string& f2spec,
                std::optional<int> dim_filter) {
  const ResolvedComplex rk = resolve_complex(kspec);
  const dmt::SimplicialComplex& K = rk.complex;
  const dmt::MorseFunction f1 = resolve_function(f1spec, rk);
  const dmt::MorseFunction f2 = resolve_function(f2spec, rk);
  const dmt::GraphView G = dmt::GraphView::of(K);

  const dmt::ConnectionReport r0 = dmt::connection_matrix(K, f1, f2, 0);
  const dmt::ConnectionReport r1 = dmt::connection_matrix(K, f1, f2, 1);
  std::cout << "q\talpha\tbeta\tdirection\twitness_path\n";
  if (!dim_filter || *dim_filter == 0) print_connection_rows(K, r0);
  if (!dim_filter || *dim_filter == 1) print_connection_rows(K, r1);
  const int64_t a0 = r0.strong_pairs, a1 = r1.strong_pairs;
  const bool ok = a0 - a1 == G.euler();
  std::cout << "A0=" << a0 << " A1=" << a1 << " chi=" << G.euler() << " ok="
            << (ok ? "true" : "false") << '\n';
  return kExitOk;
}

int run_check_euler(const std::string& kspec, const std::string& f1spec,
                    const std::string& f2spec) {
  const ResolvedComplex rk = resolve_complex(kspec);
  const dmt::MorseFunction f1 = resolve_function(f1spec, rk);
  const dmt::MorseFunction f2 = resolve_function(f2spec, rk);
  const dmt::EulerCheck check = dmt::verify_euler_theorem(rk.complex, f1, f2);
  std::cout << "A0=" << check.a0 << " A1=" << check.a1 << " chi=" << check.chi << " ok="
            << (check.ok ? "true" : "false") << '\n';
  return check.ok ? kExitOk : kExitCheckFailed;
}

int run_enumerate(const std::string& kspec, const std::string& check) {
  const ResolvedComplex rk = resolve_complex(kspec);
  const dmt::SimplicialComplex& K = rk.complex;
  const std::vector<dmt::GradientVectorField> fields = dmt::enumerate_gvfs(K);

  if (check.empty()) {
    // One field per line; a blank line closes each block. The empty field is
    // a bare "fields" line with no pairs.
    for (const dmt::GradientVectorField& V : fields) {
      bool first = true;
      for (const auto& [lo, hi] : V.pairs()) {
        std::cout << (first ? "" : " ") << "pair " << K.name(lo) << ' ' << K.name(hi) << ';';
        first = false;
      }
      std::cout << "\n\n";
    }
    std::cerr << "enumerated " << fields.size() << " fields\n";
    return kExitOk;
  }

  const dmt::GraphView G = dmt::GraphView::of(K);
  const std::vector<int64_t> betti = K.betti_numbers();
  const bool is_forest = K.dim() < 1 || betti.size() < 2 || betti[1] == 0;

  std::vector<dmt::FieldFlow> flows;
  flows.reserve(fields.size());
  for (const auto& V : fields) flows.push_back(dmt::analyze_flow(G, V));

  bool ok = true;
  size_t pairs_checked = 0;
  for (size_t i = 0; i < fields.size() && ok; ++i) {
    for (size_t j = 0; j < fields.size() && ok; ++j) {
      ++pairs_checked;
      const dmt::EulerCheck euler = dmt::euler_check_fields(G, flows[i], flows[j]);
      if (!euler.ok) {
        std::cerr << "error: Euler identity failed at field pair (" << i << ", " << j << ")\n";
        ok = false;
        break;
      }
      if (check == "all") {
        // Strong partners in dimension 0 are unique in both directions.
        for (dmt::SimplexId v : flows[i].critical_vertices) {
          const dmt::SimplexId partner = flows[j].root[v];
          if (flows[i].root[partner] == v && flows[j].root[v] != partner) ok = false;
        }
        // On forests, witness paths of strong edge pairs are unique.
        if (is_forest) {
          for (dmt::SimplexId e1 : flows[i].critical_edges) {
            for (dmt::SimplexId e2 : flows[j].critical_edges) {
              if (dmt::detail::flow_path_count_edges(G, flows[i], e1, e2) > 1) ok = false;
            }
          }
        }
        if (!ok) std::cerr << "error: uniqueness check failed at (" << i << ", " << j << ")\n";
      }
    }
  }

  if (check == "all") {
    for (const dmt::GradientVectorField& V : fields) {
      if (!(dmt::gradient_field(K, dmt::realize_dmf(K, V)) == V)) {
        std::cerr << "error: realization round-trip failed\n";
        ok = false;
        break;
      }
    }
  }

  std::cout << "fields=" << fields.size() << " pairs=" << pairs_checked << " ok="
            << (ok ? "true" : "false") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int run_gen(const std::string& kspec, uint64_t seed, const std::string& output) {
  const ResolvedComplex rk = resolve_complex(kspec);
  const dmt::MorseFunction f = dmt::random_dmf(rk.complex, seed);
  if (output.empty()) {
    dmt::write_dmf(std::cout, rk.complex, f);
  } else {
    std::ofstream out(output);
    if (!out)
      throw dmt::Error(dmt::ErrorKind::parse, "cannot write to '" + output + "'");
    dmt::write_dmf(out, rk.complex, f);
  }
  return kExitOk;
}

int run_export_dot(const std::string& kspec, const std::string& fspec,
                   const std::string& output) {
  const ResolvedComplex rk = resolve_complex(kspec);
  std::string dot;
  if (fspec.empty()) {
    dot = dmt::to_dot(rk.complex);
  } else {
    const dmt::MorseFunction f = resolve_function(fspec, rk);
    dot = dmt::to_dot(rk.complex, f);
  }
  if (output.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(output);
    if (!out)
      throw dmt::Error(dmt::ErrorKind::parse, "cannot write to '" + output + "'");
    out << dot;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete Morse theory toolkit"};
  app.require_subcommand(1);

  std::string kspec, fspec, f1spec, f2spec, output, check;
  uint64_t seed = 0;
  int dim = -1;

  CLI::App* validate = app.add_subcommand("validate", "check a function against the axioms");
  validate->add_option("-k,--complex", kspec, "complex file or builtin name")->required();
  validate->add_option("-f,--function", fspec, "function file or builtin:<name>")->required();

  CLI::App* critical = app.add_subcommand("critical", "tag critical simplices");
  critical->add_option("-k,--complex", kspec)->required();
  critical->add_option("-f,--function", fspec)->required();

  CLI::App* betti = app.add_subcommand("betti", "Betti numbers and Euler characteristic");
  betti->add_option("-k,--complex", kspec)->required();

  CLI::App* pairs = app.add_subcommand("pairs", "persistence pairs of a function");
  pairs->add_option("-k,--complex", kspec)->required();
  pairs->add_option("-f,--function", fspec)->required();

  CLI::App* connect = app.add_subcommand("connect", "strong connections between two functions");
  connect->add_option("-k,--complex", kspec)->required();
  connect->add_option("--f1", f1spec, "first function")->required();
  connect->add_option("--f2", f2spec, "second function")->required();
  connect->add_option("--dim", dim, "restrict the report to one dimension (0 or 1)");

  CLI::App* check_euler = app.add_subcommand(
      "check-euler", "check A0 - A1 against the Euler characteristic");
  check_euler->add_option("-k,--complex", kspec)->required();
  check_euler->add_option("--f1", f1spec)->required();
  check_euler->add_option("--f2", f2spec)->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate all gradient fields");
  enumerate->add_option("-k,--complex", kspec)->required();
  enumerate->add_option("--check", check, "run checks over all field pairs instead of printing")
      ->check(CLI::IsMember({"euler", "all"}));

  CLI::App* gen = app.add_subcommand("gen", "generate a random valid function");
  gen->add_option("-k,--complex", kspec)->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("-o,--output", output, "output file (default: stdout)");

  CLI::App* export_dot = app.add_subcommand("export-dot", "DOT rendering of a complex");
  export_dot->add_option("-k,--complex", kspec)->required();
  export_dot->add_option("-f,--function", fspec, "overlay gradient arrows of this function");
  export_dot->add_option("-o,--output", output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(kspec, fspec);
    if (critical->parsed()) return run_critical(kspec, fspec);
    if (betti->parsed()) return run_betti(kspec);
    if (pairs->parsed()) return run_pairs(kspec, fspec);
    if (connect->parsed())
      return run_connect(kspec, f1spec, f2spec,
                         dim >= 0 ? std::optional<int>(dim) : std::nullopt);
    if (check_euler->parsed()) return run_check_euler(kspec, f1spec, f2spec);
    if (enumerate->parsed()) return run_enumerate(kspec, check);
    if (gen->parsed()) return run_gen(kspec, seed, output);
    if (export_dot->parsed()) return run_export_dot(kspec, fspec, output);
  } catch (const dmt::Error& e) {
    std::cerr << "error: " << dmt::to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
