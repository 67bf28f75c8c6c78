#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psc/analysis.hpp"
#include "psc/groups.hpp"
#include "psc/io.hpp"
#include "psc/numtheory.hpp"
#include "psc/oracle.hpp"

namespace psc {

namespace {

using groups::GroupSpec;

PrimeComplex complex_from_arg(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return io::load_complex(arg);
  return groups::complex_of(GroupSpec::parse(arg), io::FixtureStore().resolver());
}

GroupSpec::Family parse_family(const std::string& name) {
  if (name == "sym") return GroupSpec::Family::Symmetric;
  if (name == "alt") return GroupSpec::Family::Alternating;
  if (name == "psl2") return GroupSpec::Family::PSL2;
  if (name == "sz") return GroupSpec::Family::Suzuki;
  if (name == "2g2") return GroupSpec::Family::Ree2G2;
  throw InvalidInput("unknown scan family '" + name + "' (want sym|alt|psl2|sz|2g2)");
}

std::pair<u64, u64> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw InvalidInput("range must look like lo..hi, got '" + text + "'");
  try {
    u64 lo = std::stoull(text.substr(0, dots));
    u64 hi = std::stoull(text.substr(dots + 2));
    if (lo > hi) throw InvalidInput("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidInput("range must look like lo..hi, got '" + text + "'");
  }
}

void print_purity(std::ostream& out, const analysis::PurityReport& rep) {
  if (rep.pure) {
    out << "pure (all maximal simplices size " << rep.max_size << ")\n";
  } else {
    out << "impure (max " << rep.max_size << ", min " << rep.min_maximal_size;
    if (rep.witness)
      out << "; witness " << to_string(rep.witness->first) << " vs "
          << to_string(rep.witness->second);
    out << ")\n";
  }
}

void print_spectrum(std::ostream& out, const Spectrum& s) {
  for (std::size_t i = 0; i < s.orders.size(); ++i)
    out << (i ? " " : "") << s.orders[i];
  out << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"prime simplicial complexes of finite groups"};
  app.require_subcommand(1);

  std::string spec_arg, format = "text";
  auto* cmd_complex = app.add_subcommand("complex", "print the complex of a group spec");
  cmd_complex->add_option("spec", spec_arg, "group spec or complex file")->required();
  cmd_complex->add_option("--format", format)
      ->check(CLI::IsMember({"json", "dot", "text"}));

  std::string purity_arg;
  auto* cmd_purity = app.add_subcommand("purity", "purity report for a group spec");
  cmd_purity->add_option("spec", purity_arg)->required();

  std::string scan_family, scan_range;
  auto* cmd_scan = app.add_subcommand("scan", "purity scan over a parameter range");
  cmd_scan->add_option("family", scan_family, "sym|alt|psl2|sz|2g2")->required();
  cmd_scan->add_option("range", scan_range, "lo..hi")->required();

  std::string cmp_a, cmp_b;
  auto* cmd_compare = app.add_subcommand("compare", "compare two complexes");
  cmd_compare->add_option("a", cmp_a)->required();
  cmd_compare->add_option("b", cmp_b)->required();

  std::string allowed_csv;
  auto* cmd_screen = app.add_subcommand("screen", "characteristic screening table");
  cmd_screen->add_option("--allowed", allowed_csv, "comma-separated primes")->required();

  std::string tables_kind, fixtures_dir;
  auto* cmd_tables = app.add_subcommand("tables", "reproduce published tables");
  cmd_tables->add_option("kind", tables_kind)->check(CLI::IsMember({"sporadic"}))->required();
  cmd_tables->add_option("--fixtures", fixtures_dir);

  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force spectra");
  std::string oracle_kind;
  std::vector<u64> oracle_args;
  cmd_oracle->add_option("kind", oracle_kind)
      ->check(CLI::IsMember({"sn", "an", "gl", "sl", "psl"}))
      ->required();
  cmd_oracle->add_option("params", oracle_args)->required();

  auto* cmd_nt = app.add_subcommand("nt", "number theory helpers");
  std::string nt_kind;
  std::vector<std::string> nt_args;
  cmd_nt->add_option("kind", nt_kind)
      ->check(CLI::IsMember({"factor", "order", "ppd", "pn", "consecutive", "sumprimes"}))
      ->required();
  cmd_nt->add_option("args", nt_args)->required();

  std::vector<std::string> argv_like = args;
  argv_like.insert(argv_like.begin(), "psc");
  std::vector<const char*> argv;
  for (const auto& a : argv_like) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  if (*cmd_complex) {
    PrimeComplex c = complex_from_arg(spec_arg);
    if (format == "json")
      out << io::complex_json(c);
    else if (format == "dot")
      out << io::emit_dot(prime_graph(c));
    else
      out << io::complex_text(c);
  } else if (*cmd_purity) {
    auto rep = analysis::purity_report(GroupSpec::parse(purity_arg),
                                       io::FixtureStore().resolver());
    print_purity(out, rep);
  } else if (*cmd_scan) {
    auto [lo, hi] = parse_range(scan_range);
    auto family = parse_family(scan_family);
    if (family == GroupSpec::Family::Ree2G2) {
      for (u64 m = lo; m <= hi; ++m) {
        GroupSpec s;
        s.family = family;
        s.n = m;
        out << s.str() << ": ";
        print_purity(out, analysis::purity_report(s));
      }
    } else {
      for (const auto& rep : analysis::purity_scan(family, lo, hi)) {
        out << rep.spec.str() << ": ";
        print_purity(out, rep);
      }
    }
  } else if (*cmd_compare) {
    PrimeComplex a = complex_from_arg(cmp_a);
    PrimeComplex b = complex_from_arg(cmp_b);
    if (a == b) {
      out << "equal\n";
    } else {
      out << "different\n";
      for (const auto& s : a.maximal())
        if (!b.contains(s)) out << "only first: " << to_string(s) << '\n';
      for (const auto& s : b.maximal())
        if (!a.contains(s)) out << "only second: " << to_string(s) << '\n';
      return 1;
    }
  } else if (*cmd_screen) {
    std::vector<u64> allowed;
    std::stringstream ss(allowed_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) allowed.push_back(std::stoull(tok));
    for (const auto& row : analysis::characteristic_screen(allowed)) {
      out << "i(" << row.p << "," << row.r << ") = " << row.order
          << (row.bad ? " bad" : "") << '\n';
    }
  } else if (*cmd_tables) {
    io::FixtureStore store(fixtures_dir);
    auto rows = analysis::table_sporadic_sizes(store.names(), store.resolver());
    const auto& published = analysis::published_sporadic_sizes();
    for (const auto& row : rows) {
      out << row.group << ": max " << row.max_size << ", min " << row.min_maximal_size;
      auto it = published.find(row.group);
      if (it != published.end()) {
        bool match = it->second == std::make_pair(row.max_size, row.min_maximal_size);
        out << (match ? " (matches published table)"
                      : " (published table says otherwise)");
      }
      out << '\n';
    }
  } else if (*cmd_oracle) {
    if (oracle_kind == "sn" || oracle_kind == "an") {
      if (oracle_args.size() != 1) throw InvalidInput("oracle " + oracle_kind + " takes n");
      unsigned n = unsigned(oracle_args[0]);
      print_spectrum(out, oracle_kind == "sn" ? oracle::sn_spectrum(n) : oracle::an_spectrum(n));
    } else {
      if (oracle_args.size() != 2)
        throw InvalidInput("oracle " + oracle_kind + " takes n and q");
      auto variant = oracle_kind == "gl"   ? oracle::MatrixVariant::GL
                     : oracle_kind == "sl" ? oracle::MatrixVariant::SL
                                           : oracle::MatrixVariant::PSL;
      print_spectrum(out, oracle::matrix_group_spectrum(unsigned(oracle_args[0]),
                                                        unsigned(oracle_args[1]), variant));
    }
  } else if (*cmd_nt) {
    auto want = [&](std::size_t n) {
      if (nt_args.size() != n)
        throw InvalidInput("nt " + nt_kind + " takes " + std::to_string(n) + " argument(s)");
    };
    if (nt_kind == "factor") {
      want(1);
      auto f = nt::factorize(nt::Nat(nt_args[0]));
      for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const auto& [p, e] = f.factors[i];
        out << (i ? " " : "") << p.get_str();
        if (e > 1) out << '^' << e;
      }
      out << '\n';
    } else if (nt_kind == "order") {
      want(2);
      out << nt::multiplicative_order(nt::Nat(nt_args[0]), std::stoull(nt_args[1])) << '\n';
    } else if (nt_kind == "ppd") {
      want(2);
      auto r = nt::primitive_prime_divisors(std::stoull(nt_args[0]),
                                            unsigned(std::stoul(nt_args[1])));
      if (r.exception != nt::PpdException::None) out << "exception";
      for (std::size_t i = 0; i < r.primitive_divisors.size(); ++i)
        out << (i || r.exception != nt::PpdException::None ? " " : "")
            << r.primitive_divisors[i].get_str();
      out << '\n';
    } else if (nt_kind == "pn") {
      want(1);
      auto c = analysis::pn_check(std::stoull(nt_args[0]));
      out << (c.holds ? "holds" : "fails") << " k=" << c.k << " f=" << c.f << '\n';
    } else if (nt_kind == "consecutive") {
      want(1);
      switch (nt::classify_consecutive_prime_powers(std::stoull(nt_args[0]))) {
        case nt::ConsecutiveClass::FermatPair: out << "fermat\n"; break;
        case nt::ConsecutiveClass::MersennePair: out << "mersenne\n"; break;
        case nt::ConsecutiveClass::EightNine: out << "eight-nine\n"; break;
        case nt::ConsecutiveClass::NotBothPrimePowers: out << "not-both-prime-powers\n"; break;
      }
    } else {
      want(1);
      out << nt::sum_primes_upto(std::stoull(nt_args[0])) << '\n';
    }
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const InvalidInput& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace psc
