#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "idealfact/errors.hpp"
#include "idealfact/factorization.hpp"
#include "idealfact/oracle.hpp"
#include "idealfact/poly_io.hpp"

namespace idealfact::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::uint32_t parse_uint(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  return static_cast<std::uint32_t>(std::stoul(s));
}

Json generators(const RingIdeal& a) {
  Json g = Json::array();
  for (const auto& f : a.canonical_basis()) g.push_back(to_string(f));
  return g;
}

std::string bracket(const Json& gens) {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].get<std::string>();
  return s + ">";
}

struct Options {
  std::string input;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool check_smooth = false;
  bool verify = false;
  unsigned degree = 0;
  std::string operation;
};

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

// "<stage>: <detail>" without repeating a stage prefix already in the message.
std::string describe(const std::string& stage, const std::exception& e) {
  std::string msg = e.what();
  if (msg.rfind(stage + ": ", 0) == 0) msg = msg.substr(stage.size() + 2);
  return stage + ": " + msg;
}

bool same_factorization(const Factorization& a, const Factorization& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].prime == b[i].prime) || a[i].multiplicity != b[i].multiplicity || a[i].degree != b[i].degree)
      return false;
  return true;
}

// Oracle cross-check when every degree is small enough; nullopt if skipped.
std::optional<bool> oracle_check(const RingIdeal& a, const Factorization& f) {
  unsigned maxdeg = 1;
  for (const auto& p : f) maxdeg = std::max(maxdeg, p.degree);
  const auto& k = *a.ring()->field();
  if (!k.is_prime_field() || maxdeg > 4) return std::nullopt;
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < maxdeg; ++i) scale *= k.order();
  if (scale > kOracleScale) return std::nullopt;
  return same_factorization(oracle_factor(a, maxdeg), f);
}

class Driver {
 public:
  Driver(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void load() {
    stage_ = "input";
    problem_ = parse_problem(read_input(opt_.input));
    const ProblemInput& problem = *problem_;
    stage_ = "ring construction";
    ring_ = CurveRing::make(problem.curve, opt_.check_smooth);
    stage_ = "input";
    for (const auto& gens : problem.ideals) ideals_.push_back(RingIdeal::make(ring_, gens));
    report_["field"] = problem.field->name();
    report_["curve"] = to_string(problem.curve);
    report_["input_ideal"] = generators(ideals_.front());
  }

  void factor(bool with_oracle) {
    const RingIdeal& a = ideals_.front();
    stage_ = "factorization";
    std::mt19937_64 rng(opt_.seed);
    const Factorization f = factorize(a, rng);
    stage_ = "verification";
    const bool product_ok = recombine(ring_, f) == a;
    std::optional<bool> oracle;
    if (with_oracle) oracle = oracle_check(a, f);
    Json factors = Json::array();
    for (const auto& p : f)
      factors.push_back({{"generators", generators(p.prime)}, {"multiplicity", p.multiplicity}, {"degree", p.degree}});
    report_["factors"] = factors;
    report_["verified"] = product_ok && oracle.value_or(true);
    if (with_oracle) report_["oracle"] = oracle ? (*oracle ? "agrees" : "disagrees") : "skipped";
    report_["seed"] = opt_.seed;
    if (json()) return emit_json();
    header();
    out_ << "factors:\n";
    for (const auto& p : factors)
      out_ << "  degree " << p["degree"] << ", multiplicity " << p["multiplicity"] << ": "
           << bracket(p["generators"]) << "\n";
    out_ << "product equals input: " << (product_ok ? "true" : "false") << "\n";
    if (with_oracle) out_ << "oracle cross-check: " << report_["oracle"].get<std::string>() << "\n";
    out_ << "seed: " << opt_.seed << "\n";
  }

  void radical() {
    stage_ = "radical decomposition";
    const auto g = radical_decomposition(ideals_.front());
    Json list = Json::array();
    for (std::size_t j = 0; j < g.size(); ++j) list.push_back({{"index", j + 1}, {"generators", generators(g[j])}});
    report_["radical_decomposition"] = list;
    finish_list("radical decomposition", "g", list);
  }

  void ddf() {
    stage_ = "distinct-degree";
    const auto h = distinct_degree(ideals_.front());
    Json list = Json::array();
    for (std::size_t k = 0; k < h.size(); ++k) list.push_back({{"degree", k + 1}, {"generators", generators(h[k])}});
    report_["distinct_degree"] = list;
    finish_list("distinct-degree factors", "h", list);
  }

  void edf() {
    stage_ = "equal-degree";
    std::mt19937_64 rng(opt_.seed);
    EdfOptions eo;
    eo.verify_input = true;
    EdfTranscript log;
    const auto parts = equal_degree(ideals_.front(), opt_.degree, rng, eo, &log);
    Json factors = Json::array();
    for (const auto& p : parts) factors.push_back({{"generators", generators(p)}, {"degree", opt_.degree}});
    report_["factors"] = factors;
    report_["draws"] = log.draws;
    report_["seed"] = opt_.seed;
    if (json()) return emit_json();
    header();
    out_ << "equal-degree factors (degree " << opt_.degree << "):\n";
    for (const auto& p : factors) out_ << "  " << bracket(p["generators"]) << "\n";
    out_ << "draws: " << log.draws << "\nseed: " << opt_.seed << "\n";
  }

  void op() {
    stage_ = "operation " + opt_.operation;
    const RingIdeal& a = ideals_.front();
    report_["operation"] = opt_.operation;
    if (opt_.operation == "radical") {
      report_["result"] = generators(r_radical(a));
    } else {
      if (ideals_.size() < 2) throw std::invalid_argument("needs a second ideal block");
      const RingIdeal& b = ideals_[1];
      report_["second_ideal"] = generators(b);
      if (opt_.operation == "sum")
        report_["result"] = generators(r_sum(a, b));
      else if (opt_.operation == "colon")
        report_["result"] = generators(r_colon(a, b));
      else
        report_["equal"] = a == b;
    }
    if (json()) return emit_json();
    header();
    if (report_.contains("second_ideal")) out_ << "second ideal: " << bracket(report_["second_ideal"]) << "\n";
    if (report_.contains("equal"))
      out_ << "equal: " << (report_["equal"].get<bool>() ? "true" : "false") << "\n";
    else
      out_ << opt_.operation << ": " << bracket(report_["result"]) << "\n";
  }

  const std::string& stage() const { return stage_; }

 private:
  bool json() const { return opt_.format == "json"; }

  void emit_json() { out_ << report_.dump(2) << "\n"; }

  void header() {
    out_ << "field: " << report_["field"].get<std::string>() << "\n"
         << "curve: " << report_["curve"].get<std::string>() << "\n"
         << "input ideal: " << bracket(report_["input_ideal"]) << "\n";
  }

  void finish_list(const char* title, const char* prefix, const Json& list) {
    if (json()) return emit_json();
    header();
    out_ << title << ":\n";
    std::size_t i = 1;
    for (const auto& e : list) out_ << "  " << prefix << i++ << ": " << bracket(e["generators"]) << "\n";
  }

  const Options& opt_;
  std::ostream& out_;
  std::string stage_ = "input";
  std::optional<ProblemInput> problem_;
  RingPtr ring_;
  std::vector<RingIdeal> ideals_;
  Json report_ = Json::object();
};

}  // namespace

FieldPtr parse_field(const std::string& text) {
  std::string s = trim(text), modulus;
  if (const auto m = s.find("modulus"); m != std::string::npos) {
    modulus = trim(s.substr(m + 7));
    s = trim(s.substr(0, m));
  }
  std::uint32_t p = 0, l = 1;
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    p = parse_uint(trim(s.substr(0, caret)), "field characteristic");
    l = parse_uint(trim(s.substr(caret + 1)), "field degree");
  } else {
    p = parse_uint(s, "field order");
  }
  if (!is_prime_number(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (l == 0) throw std::invalid_argument("field degree must be positive");
  if (modulus.empty()) return l == 1 ? FiniteField::prime(p) : FiniteField::extension(p, l);
  // The modulus is written in `a`; parse it as a polynomial in x over F_p.
  for (auto& c : modulus)
    if (c == 'a') c = 'x';
  const MultiPoly m = parse_poly(modulus, FiniteField::prime(p));
  if (m.degree_in(Y) != 0 || m.total_degree() != l || m.leading_coeff() != 1)
    throw std::invalid_argument("field modulus must be monic of degree " + std::to_string(l) + " in a");
  std::vector<std::uint32_t> coeffs(l + 1, 0);
  for (const auto& t : m.terms()) coeffs[t.mono.exp[X]] = t.coeff;
  return FiniteField::extension(p, l, coeffs);
}

ProblemInput parse_problem(const std::string& text) {
  struct Line {
    int number;
    std::string text;
  };
  std::optional<Line> field, curve;
  std::vector<std::vector<Line>> ideals;
  std::vector<int> ideal_lines;
  std::istringstream in(text);
  std::string raw;
  for (int n = 1; std::getline(in, raw); ++n) {
    const std::string body = raw.substr(0, raw.find('#'));
    if (trim(body).empty()) continue;
    const bool indented = body[0] == ' ' || body[0] == '\t';
    if (indented) {
      if (ideals.empty()) throw std::invalid_argument("input line " + std::to_string(n) + ": generator outside an ideal block");
      ideals.back().push_back({n, trim(body)});
      continue;
    }
    const auto colon = body.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("input line " + std::to_string(n) + ": expected 'field:', 'curve:' or 'ideal:'");
    const std::string key = trim(body.substr(0, colon)), value = trim(body.substr(colon + 1));
    if (key == "field") {
      if (field) throw std::invalid_argument("input line " + std::to_string(n) + ": duplicate field");
      field = Line{n, value};
    } else if (key == "curve") {
      if (curve) throw std::invalid_argument("input line " + std::to_string(n) + ": duplicate curve");
      curve = Line{n, value};
    } else if (key == "ideal") {
      ideals.emplace_back();
      ideal_lines.push_back(n);
      if (!value.empty()) ideals.back().push_back({n, value});
    } else {
      throw std::invalid_argument("input line " + std::to_string(n) + ": unknown key '" + key + "'");
    }
  }
  if (!field) throw std::invalid_argument("input has no 'field:' line");
  if (!curve) throw std::invalid_argument("input has no 'curve:' line");
  if (ideals.empty()) throw std::invalid_argument("input has no 'ideal:' block");

  auto poly = [](const FieldPtr& k, const Line& l) {
    try {
      return parse_poly(l.text, k);
    } catch (const ParseError& e) {
      throw std::invalid_argument("input line " + std::to_string(l.number) + ": " + e.what());
    }
  };
  FieldPtr k;
  try {
    k = parse_field(field->text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("input line " + std::to_string(field->number) + ": " + e.what());
  }
  ProblemInput p{k, curve->text, poly(k, *curve), {}};
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i].empty())
      throw std::invalid_argument("input line " + std::to_string(ideal_lines[i]) + ": ideal block has no generators");
    std::vector<MultiPoly> gens;
    for (const auto& l : ideals[i]) gens.push_back(poly(k, l));
    p.ideals.push_back(std::move(gens));
  }
  return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Factor ideals of F_q[x,y]/<F> into primes.", "idealfact"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--input", opt.input, "Problem file ('-' for stdin)")->required();
  app.add_option("--seed", opt.seed, "Seed for the randomized splitting stage")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--check-smooth", opt.check_smooth, "Reject curves with an affine singular point");
  app.add_flag("--verify", opt.verify, "Cross-check factor output against the brute-force oracle");
  auto* factor = app.add_subcommand("factor", "Complete factorization");
  auto* radical = app.add_subcommand("radical-decomp", "Radical decomposition");
  auto* ddf = app.add_subcommand("ddf", "Distinct-degree factorization of a radical ideal");
  auto* edf = app.add_subcommand("edf", "Equal-degree factorization");
  edf->add_option("--degree", opt.degree, "Common degree of the primes")->required()->check(CLI::PositiveNumber);
  auto* op = app.add_subcommand("op", "A single ideal operation");
  op->add_option("operation", opt.operation)->required()->check(CLI::IsMember({"sum", "colon", "radical", "equal"}));
  auto* verify = app.add_subcommand("verify", "Factor, recombine and cross-check with the oracle");

  std::vector<std::string> argv_store{"idealfact"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Driver driver(opt, out);
  try {
    driver.load();
    if (factor->parsed()) driver.factor(opt.verify);
    if (verify->parsed()) driver.factor(true);
    if (radical->parsed()) driver.radical();
    if (ddf->parsed()) driver.ddf();
    if (edf->parsed()) driver.edf();
    if (op->parsed()) driver.op();
  } catch (const InternalError& e) {
    err << "idealfact: internal error in " << describe(driver.stage(), e) << "\n";
    return 2;
  } catch (const ProbabilisticFailure& e) {
    err << "idealfact: probabilistic failure in " << describe(driver.stage(), e) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "idealfact: input error in " << describe(driver.stage(), e) << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "idealfact: input error in " << describe(driver.stage(), e) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "idealfact: error in " << describe(driver.stage(), e) << "\n";
    return 2;
  }
  return 0;
}

}  // namespace idealfact::cli
