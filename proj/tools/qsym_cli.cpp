// qsym_cli: command-line front end for the qsym library.
//
//   qsym_cli descent  -f S "-3,4,5,-6,-2,-7,1"
//   qsym_cli expand   -f A --basis F -N 3 "2,1"
//   qsym_cli gamma    -f B -N 4 "-3,2,-1"        (or --poset FILE)
//   qsym_cli multiply -f A -n 2 "1,1" "1,1"
//   qsym_cli table    -f B -n 3 --format csv
//   qsym_cli verify   [--slow]
//   qsym_cli count    -f S -n 4
//
// Results go to stdout, diagnostics to stderr. Exit status is nonzero on bad
// arguments, cap violations and failed verification.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsym/combinatorics.hpp"
#include "qsym/descent_algebra.hpp"
#include "qsym/groups.hpp"
#include "qsym/ppartition.hpp"
#include "qsym/quasisymmetric.hpp"
#include "qsym/verification.hpp"

namespace {

using namespace qsym;
using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Options {
  std::string flavor = "A";
  std::optional<int> degree;
  int truncation = 4;
  std::string format = "text";
  bool json_flag = false;
  std::optional<int> cap_override;
  std::string basis = "F";
  std::string poset_file;
  bool slow = false;
  std::vector<std::string> args;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format output_format(const Options& o) {
  if (o.json_flag) return Format::Json;
  if (o.format == "json") return Format::Json;
  if (o.format == "csv") return Format::Csv;
  return Format::Text;
}

Caps caps_for(const Options& o, Flavor flavor) {
  Caps caps;
  if (o.cap_override) {
    if (*o.cap_override < 1) throw UsageError("--cap-override must be >= 1");
    switch (flavor) {
      case Flavor::A: caps.a = *o.cap_override; break;
      case Flavor::B: caps.b = *o.cap_override; break;
      case Flavor::S: caps.s = *o.cap_override; break;
    }
  }
  return caps;
}

Basis parse_basis(const std::string& text) {
  if (text == "M" || text == "monomial") return Basis::Monomial;
  if (text == "F" || text == "fundamental") return Basis::Fundamental;
  throw UsageError("unknown basis '" + text + "' (expected M or F)");
}

void check_degree(const Options& o, int actual, const std::string& what) {
  if (o.degree && *o.degree != actual) {
    throw UsageError(what + " has degree " + std::to_string(actual) + " but -n is " + std::to_string(*o.degree));
  }
}

int required_degree(const Options& o) {
  if (!o.degree) throw UsageError("this command needs -n/--degree");
  if (*o.degree < 1) throw UsageError("-n/--degree must be >= 1");
  return *o.degree;
}

const std::string& arg(const Options& o, std::size_t i, const char* name) {
  if (o.args.size() <= i) throw UsageError(std::string("missing argument: ") + name);
  return o.args[i];
}

void expect_args(const Options& o, std::size_t n) {
  if (o.args.size() > n) throw UsageError("unexpected extra argument '" + o.args[n] + "'");
}

// Calls f with a default-constructed tag of the index type for the flavor.
template <class F>
auto dispatch(Flavor flavor, F&& f) {
  switch (flavor) {
    case Flavor::A: return f(static_cast<Composition*>(nullptr));
    case Flavor::B: return f(static_cast<PseudoComposition*>(nullptr));
    case Flavor::S: break;
  }
  return f(static_cast<SignedComposition*>(nullptr));
}

void print_series(const Series& s, Format format) {
  if (format == Format::Json) {
    std::cout << s.to_json().dump() << '\n';
  } else {
    std::cout << s.to_string() << '\n';
  }
}

int cmd_descent(const Options& o) {
  const Flavor flavor = parse_flavor(o.flavor);
  const std::string& window = arg(o, 0, "permutation window");
  expect_args(o, 1);
  std::string result;
  if (flavor == Flavor::A) {
    const auto pi = Permutation::parse(window);
    check_degree(o, pi.degree(), "permutation");
    result = descent_composition(pi).to_string();
  } else {
    const auto pi = SignedPermutation::parse(window);
    check_degree(o, pi.degree(), "permutation");
    result = flavor == Flavor::B ? descent_pseudo(pi).to_string() : signed_descent_composition(pi).to_string();
  }
  if (output_format(o) == Format::Json) {
    std::cout << json{{"flavor", to_string(flavor)}, {"permutation", window}, {"descent", result}}.dump() << '\n';
  } else {
    std::cout << result << '\n';
  }
  return 0;
}

int cmd_expand(const Options& o) {
  const Flavor flavor = parse_flavor(o.flavor);
  const Basis basis = parse_basis(o.basis);
  const std::string& text = arg(o, 0, "index");
  expect_args(o, 1);
  const Series s = dispatch(flavor, [&]<class Index>(Index*) {
    const Index alpha = Index::parse(text);
    check_degree(o, alpha.degree(), "index");
    return basis == Basis::Monomial ? expand_monomial(alpha, o.truncation) : expand_fundamental(alpha, o.truncation);
  });
  print_series(s, output_format(o));
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open poset file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_gamma(const Options& o) {
  const Flavor flavor = parse_flavor(o.flavor);
  const int n_trunc = o.truncation;
  Series s;
  if (!o.poset_file.empty()) {
    expect_args(o, 0);
    const std::string text = read_file(o.poset_file);
    if (flavor == Flavor::A) {
      const auto poset = LabeledPoset::parse(text);
      check_degree(o, poset.size(), "poset");
      s = gamma(poset, n_trunc);
    } else {
      const auto poset = TypeBPoset::parse(text);
      check_degree(o, poset.size(), "poset");
      s = flavor == Flavor::B ? gamma_B(poset, n_trunc) : gamma_signed(poset, n_trunc);
    }
  } else {
    const std::string& window = arg(o, 0, "permutation window (or --poset FILE)");
    expect_args(o, 1);
    if (flavor == Flavor::A) {
      const auto pi = Permutation::parse(window);
      check_degree(o, pi.degree(), "permutation");
      s = gamma(pi, n_trunc);
    } else {
      const auto pi = SignedPermutation::parse(window);
      check_degree(o, pi.degree(), "permutation");
      s = flavor == Flavor::B ? gamma_B(pi, n_trunc) : gamma_signed(pi, n_trunc);
    }
  }
  print_series(s, output_format(o));
  return 0;
}

int cmd_multiply(const Options& o) {
  const Flavor flavor = parse_flavor(o.flavor);
  const std::string& a_text = arg(o, 0, "first index");
  const std::string& b_text = arg(o, 1, "second index");
  expect_args(o, 2);
  const Format format = output_format(o);
  dispatch(flavor, [&]<class Index>(Index*) {
    const Index alpha = Index::parse(a_text);
    const Index beta = Index::parse(b_text);
    if (alpha.degree() != beta.degree()) throw UsageError("the two indices have different degrees");
    check_degree(o, alpha.degree(), "index");
    const auto table = compute_structure_constants<Index>(alpha.degree(), caps_for(o, flavor));
    const auto product = decompose_product(table, alpha, beta);
    if (format == Format::Json) {
      json terms = json::array();
      for (const auto& [gamma, c] : product) terms.push_back({{"index", gamma.to_string()}, {"coeff", c}});
      std::cout << json{{"flavor", to_string(flavor)},
                        {"degree", alpha.degree()},
                        {"alpha", alpha.to_string()},
                        {"beta", beta.to_string()},
                        {"terms", terms}}
                       .dump()
                << '\n';
    } else {
      QSymVector<Index> v(alpha.degree(), Basis::Fundamental);
      for (const auto& [gamma, c] : product) v.add(gamma, c);
      std::cout << v.to_string() << '\n';
    }
    return 0;
  });
  return 0;
}

int cmd_table(const Options& o) {
  const Flavor flavor = parse_flavor(o.flavor);
  const int n = required_degree(o);
  expect_args(o, 0);
  const TableFormat format = output_format(o) == Format::Json ? TableFormat::Json : TableFormat::Csv;
  const std::string out = dispatch(flavor, [&]<class Index>(Index*) {
    return export_table(compute_structure_constants<Index>(n, caps_for(o, flavor)), format);
  });
  std::cout << out;
  if (!out.empty() && out.back() != '\n') std::cout << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  expect_args(o, 0);
  VerifyOptions options;
  options.slow = o.slow;
  const auto results = run_acceptance_suite(options);
  bool all = true;
  json records = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    records.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (output_format(o) == Format::Json) {
    std::cout << json{{"passed", all}, {"checks", records}}.dump() << '\n';
  } else {
    for (const auto& r : results) std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
  }
  return all ? 0 : 1;
}

int cmd_count(const Options& o) {
  const Flavor flavor = parse_flavor(o.flavor);
  const int n = required_degree(o);
  expect_args(o, 0);
  const std::size_t count = dispatch(flavor, [&]<class Index>(Index*) { return FlavorTraits<Index>::indices(n).size(); });
  if (output_format(o) == Format::Json) {
    std::cout << json{{"flavor", to_string(flavor)}, {"degree", n}, {"count", count}}.dump() << '\n';
  } else {
    std::cout << count << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasisymmetric functions, P-partitions and descent algebras"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub, bool window_args) {
    sub->add_option("-f,--flavor", o.flavor, "Flavor: A, B or S")->check(CLI::IsMember({"A", "B", "S"}));
    sub->add_option("-n,--degree", o.degree, "Degree");
    sub->add_option("-N,--truncation", o.truncation, "Largest variable index")->check(CLI::Range(1, 64));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--json", o.json_flag, "Same as --format json");
    sub->add_option("--cap-override", o.cap_override, "Raise the brute-force degree cap for the flavor");
    if (window_args) sub->add_option("args", o.args, "Positional arguments")->allow_extra_args();
  };

  struct Verb {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Verb verbs[] = {
      {"descent", "Descent composition of a permutation window", cmd_descent},
      {"expand", "Expand a basis element as a truncated series", cmd_expand},
      {"gamma", "P-partition generating function of a permutation or poset", cmd_gamma},
      {"multiply", "Decompose the product of two class sums", cmd_multiply},
      {"table", "Export the structure-constant table (csv or json)", cmd_table},
      {"verify", "Run the acceptance checks", cmd_verify},
      {"count", "Number of basis indices of degree n", cmd_count},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    common(sub, true);
    if (std::string(v.name) == "expand") sub->add_option("--basis", o.basis, "Basis: M or F");
    if (std::string(v.name) == "gamma") sub->add_option("--poset", o.poset_file, "Poset file instead of a window");
    if (std::string(v.name) == "verify") sub->add_flag("--slow", o.slow, "Include the slow tier");
    sub->callback([&selected, run = v.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return selected(o);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
