#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qclone::cli {
namespace {

const double kTwoSym = 0.5 + 1 / std::sqrt(12.0);
const double kThreeSym = (5 + std::sqrt(17.0)) / 12;
const double kQubitSym = 0.5 + 1 / std::sqrt(8.0);
constexpr double kDefaultTolerance = 1e-9;

AmplitudeMatrix universal_symmetric(std::size_t N) {
  const double n = static_cast<double>(N);
  const double ab = std::sqrt(n / (2 * (1 + n)));
  return build(UniversalParams{ab, ab, N});
}

std::pair<double, double> clone_fidelities(const AmplitudeMatrix& a, const StateVector& psi) {
  const auto o = clone_outputs_mixture(a, psi);
  return {fidelity(psi, o.rho_a), fidelity(psi, o.rho_b)};
}

// Fixed, seed-free test state for the state-independence rows.
StateVector generic_state(std::size_t dim) {
  CVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = std::polar(1.0 + 0.37 * static_cast<double>(k), 0.9 * static_cast<double>(k * k + 1));
  return StateVector::renormalize(v);
}

struct Claim {
  std::string id;
  std::string text;
  double expected;
  std::function<double()> compute;
};

std::vector<Claim> claims() {
  const auto mubs = qutrit_mubs();
  const auto qubits = qubit_mubs();
  return {
      {"two_basis.symmetric", "two-basis symmetric F on |0''>", kTwoSym,
       [=] { return clone_fidelities(build(two_basis_tradeoff(kTwoSym).params), mubs[2][0]).first; }},
      {"two_basis.symmetric_b", "two-basis symmetric F~ on |0'''>", kTwoSym,
       [=] { return clone_fidelities(build(two_basis_tradeoff(kTwoSym).params), mubs[3][0]).second; }},
      {"two_basis.other_bases", "two-basis symmetric F on |0> and |0'>", 0.5 + 1 / (2 * std::sqrt(12.0)),
       [=] {
         const auto a = build(two_basis_tradeoff(kTwoSym).params);
         return std::min(clone_fidelities(a, mubs[0][0]).first, clone_fidelities(a, mubs[1][0]).first);
       }},
      {"two_basis.endpoint", "two-basis F=1 gives F~=1/3", 1.0 / 3.0,
       [=] { return clone_fidelities(build(two_basis_tradeoff(1.0).params), mubs[2][1]).second; }},
      {"three_basis.symmetric", "three-basis symmetric F on equator (0.7, 1.9)", kThreeSym,
       [] {
         return clone_fidelities(build(three_basis_symmetric_optimal().params), equator_state({0.7, 1.9}, 0)).first;
       }},
      {"three_basis.minimum", "three-basis stationary minimum", 1.0 / 6.0,
       [] {
         for (const auto& s : three_basis_symmetric_stationary_points())
           if (std::abs(s.lambda + 0.5) < 1e-12) return s.fidelity;
         return std::nan("");
       }},
      {"universal.n3", "universal qutrit F", 0.75,
       [] { return clone_fidelities(universal_symmetric(3), generic_state(3)).first; }},
      {"universal.n2", "universal qubit F", 5.0 / 6.0,
       [] { return clone_fidelities(universal_symmetric(2), generic_state(2)).first; }},
      {"qubit.symmetric", "phase-covariant qubit F on |0>", kQubitSym,
       [=] { return clone_fidelities(build(qubit_phase_cov_tradeoff(kQubitSym).params), qubits[0][0]).first; }},
      {"qubit.third_basis", "phase-covariant qubit F on sigma_y eigenstate", 0.75,
       [=] { return clone_fidelities(build(qubit_phase_cov_tradeoff(kQubitSym).params), qubits[2][0]).first; }},
      {"qubit.endpoint", "phase-covariant qubit F=1 gives F~=1/2", 0.5,
       [=] { return clone_fidelities(build(qubit_phase_cov_tradeoff(1.0).params), qubits[1][0]).second; }},
  };
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

std::string complex_json(Complex z) { return "[" + format_number(z.real()) + "," + format_number(z.imag()) + "]"; }

std::string matrix_json(const CMatrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? "," : "") + complex_json(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::string matrix_json(const RMatrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? "," : "") + format_number(m(i, j));
    s += "]";
  }
  return s + "]";
}

void matrix_csv(std::ostream& out, const std::string& name, const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out << name << ',' << i << ',' << j << ',' << format_number(m(i, j).real()) << ','
          << format_number(m(i, j).imag()) << '\n';
}

const AmplitudeMatrix* require_one_source(const RunConfig& cfg, std::optional<AmplitudeMatrix>& storage) {
  if (cfg.matrix.empty() == cfg.family.empty())
    throw std::invalid_argument("exactly one of --matrix or --family is required");
  storage = cfg.matrix.empty() ? matrix_from_family(cfg.family) : parse_amplitude_matrix(load_text(cfg.matrix));
  return &*storage;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double tol = cfg.tolerance.value_or(kDefaultTolerance);
  std::vector<std::string> failed;
  const bool json = cfg.format == Format::json;
  out << (json ? "[" : "id,claim,expected,computed,abs_diff,pass\n");
  bool first = true;
  for (const auto& c : claims()) {
    if (!cfg.only.empty() && c.id.find(cfg.only) == std::string::npos) continue;
    const double got = c.compute();
    const double diff = std::abs(got - c.expected);
    const bool pass = diff <= tol;
    if (!pass) failed.push_back(c.id);
    if (json) {
      out << (first ? "" : ",") << "{\"id\":" << quoted(c.id) << ",\"claim\":" << quoted(c.text)
          << ",\"expected\":" << format_number(c.expected) << ",\"computed\":" << format_number(got)
          << ",\"abs_diff\":" << format_number(diff) << ",\"pass\":" << (pass ? "true" : "false") << "}";
    } else {
      out << c.id << ',' << c.text << ',' << format_number(c.expected) << ',' << format_number(got) << ','
          << format_number(diff) << ',' << (pass ? "pass" : "FAIL") << '\n';
    }
    first = false;
  }
  if (json) out << "]\n";
  if (first) {
    err << "error: no verification claim matches --only " << quoted(cfg.only) << '\n';
    return kExitUsage;
  }
  if (!failed.empty()) {
    err << failed.size() << " claim(s) failed at tolerance " << format_number(tol) << ":";
    for (const auto& id : failed) err << ' ' << id;
    err << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  std::optional<AmplitudeMatrix> storage;
  const auto& a = *require_one_source(cfg, storage);
  const std::size_t N = a.dim();
  if (N != 2 && N != 3) throw std::invalid_argument("table: closed-form basis sums exist only for N = 2 and N = 3");
  const auto p = a.probabilities();
  const auto q = fourier_dual(a).probabilities();
  const int bases = N == 3 ? 4 : 3;
  const bool json = cfg.format == Format::json;
  out << (json ? "{\"dim\":" + std::to_string(N) + ",\"rows\":[" : "basis,clone,F,D1,D2\n");
  for (int b = 1; b <= bases; ++b)
    for (char clone : {'A', 'B'}) {
      const auto f = fidelity_in_basis(clone == 'A' ? p : q, b);
      if (json) {
        out << (b == 1 && clone == 'A' ? "" : ",") << "{\"basis\":" << b << ",\"clone\":\"" << clone
            << "\",\"F\":" << format_number(f.f) << ",\"D1\":" << format_number(f.d1)
            << ",\"D2\":" << format_number(f.d2) << "}";
      } else {
        out << b << ',' << clone << ',' << format_number(f.f) << ',' << format_number(f.d1) << ','
            << format_number(f.d2) << '\n';
      }
    }
  if (json) out << "]}\n";
  return kExitOk;
}

int cmd_tradeoff(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw std::invalid_argument("tradeoff: --family is required");
  if (cfg.grid < 2) throw std::invalid_argument("tradeoff: --grid must be at least 2");
  const Family family = family_from_string(cfg.family);
  const auto curve = tradeoff_curve(family, cfg.grid);
  if (cfg.format == Format::csv) {
    write_tradeoff_csv(out, family, curve);
    return kExitOk;
  }
  const auto names = param_names(family);
  out << "{\"family\":" << quoted(std::string(to_string(family))) << ",\"grid\":" << cfg.grid << ",\"points\":[";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto values = param_values(curve[i].params);
    out << (i ? "," : "") << "{\"F\":" << format_number(curve[i].f_a)
        << ",\"F_tilde\":" << format_number(curve[i].f_b) << ",\"params\":{";
    for (std::size_t k = 0; k < names.size(); ++k)
      out << (k ? "," : "") << quoted(names[k]) << ':' << format_number(values[k]);
    out << "}}";
  }
  out << "]}\n";
  return kExitOk;
}

int cmd_clone(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<AmplitudeMatrix> storage;
  const auto& a = *require_one_source(cfg, storage);
  if (cfg.state.empty()) throw std::invalid_argument("clone: --state is required");
  const auto parsed = parse_state(load_text(cfg.state));
  if (parsed.renormalized) err << "warning: input state was not normalized; renormalized\n";
  const auto& psi = parsed.state;
  if (psi.dim() != a.dim())
    throw std::invalid_argument("clone: state dimension " + std::to_string(psi.dim()) +
                                " does not match cloner dimension " + std::to_string(a.dim()));
  const auto o = clone_outputs_mixture(a, psi);
  const double fa = fidelity(psi, o.rho_a), fb = fidelity(psi, o.rho_b);
  const auto ent = entropic_check(o.p, o.q);
  if (cfg.format == Format::json) {
    out << "{\"F_A\":" << format_number(fa) << ",\"F_B\":" << format_number(fb)
        << ",\"rho_a\":" << matrix_json(o.rho_a.entries()) << ",\"rho_b\":" << matrix_json(o.rho_b.entries())
        << ",\"p\":" << matrix_json(o.p.entries()) << ",\"q\":" << matrix_json(o.q.entries())
        << ",\"entropic\":{\"entropy_sum\":" << format_number(ent.entropy_sum)
        << ",\"bound\":" << format_number(ent.bound) << ",\"satisfied\":" << (ent.satisfied ? "true" : "false")
        << "}}\n";
    return kExitOk;
  }
  out << "quantity,i,j,re,im\n";
  out << "F_A,,," << format_number(fa) << ",0\n";
  out << "F_B,,," << format_number(fb) << ",0\n";
  matrix_csv(out, "rho_a", o.rho_a.entries());
  matrix_csv(out, "rho_b", o.rho_b.entries());
  matrix_csv(out, "p", o.p.entries().cast<Complex>());
  matrix_csv(out, "q", o.q.entries().cast<Complex>());
  out << "entropy_sum,,," << format_number(ent.entropy_sum) << ",0\n";
  out << "entropy_bound,,," << format_number(ent.bound) << ",0\n";
  out << "entropic_satisfied,,," << (ent.satisfied ? 1 : 0) << ",0\n";
  return kExitOk;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
  std::optional<AmplitudeMatrix> storage;
  const auto& a = *require_one_source(cfg, storage);
  const auto p = a.probabilities();
  const auto q = fourier_dual(a).probabilities();
  const auto ent = entropic_check(p, q);
  const double hp = shannon_entropy(p.entries()), hq = shannon_entropy(q.entries());
  if (cfg.format == Format::json) {
    out << "{\"H_p\":" << format_number(hp) << ",\"H_q\":" << format_number(hq)
        << ",\"entropy_sum\":" << format_number(ent.entropy_sum) << ",\"bound\":" << format_number(ent.bound)
        << ",\"satisfied\":" << (ent.satisfied ? "true" : "false") << "}\n";
  } else {
    out << "quantity,value\n"
        << "H_p," << format_number(hp) << "\nH_q," << format_number(hq) << "\nentropy_sum,"
        << format_number(ent.entropy_sum) << "\nbound," << format_number(ent.bound) << "\nsatisfied,"
        << (ent.satisfied ? 1 : 0) << '\n';
  }
  return kExitOk;
}

} // namespace

Command command_from_string(const std::string& name) {
  if (name == "verify") return Command::verify;
  if (name == "table") return Command::table;
  if (name == "tradeoff") return Command::tradeoff;
  if (name == "clone") return Command::clone;
  if (name == "entropy") return Command::entropy;
  throw std::invalid_argument("unknown command: " + name);
}

Format format_from_string(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + name);
}

AmplitudeMatrix matrix_from_family(const std::string& spec) {
  if (spec == "identity") return AmplitudeMatrix::identity(3);
  if (spec == "universal_qubit") return universal_symmetric(2);
  if (spec == "two_basis") return build(two_basis_tradeoff(kTwoSym).params);
  if (spec == "three_basis_sym") return build(three_basis_symmetric_optimal().params);
  if (spec == "three_basis_asym") return build(three_basis_asym_tradeoff(kThreeSym).params);
  if (spec == "universal") return universal_symmetric(3);
  if (spec == "qubit_phase_cov") return build(qubit_phase_cov_tradeoff(kQubitSym).params);
  return build(parse_family(load_text(spec)));
}

std::string load_text(const std::string& arg) {
  const auto start = arg.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && (arg[start] == '{' || arg[start] == '[')) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + arg + " (not inline JSON and not a readable file)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string resolve_output_path(const std::string& path) {
  const std::filesystem::path p(path);
  const char* dir = std::getenv("QCLONE_OUTPUT_DIR");
  if (p.is_relative() && dir != nullptr && *dir != '\0') return (std::filesystem::path(dir) / p).string();
  return p.string();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
    case Command::verify: return cmd_verify(cfg, out, err);
    case Command::table: return cmd_table(cfg, out);
    case Command::tradeoff: return cmd_tradeoff(cfg, out);
    case Command::clone: return cmd_clone(cfg, out, err);
    case Command::entropy: return cmd_entropy(cfg, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.position() > 0) err << " (byte " << e.position() << ")";
    err << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.out.empty()) return run(cfg, out, err);
  const auto path = resolve_output_path(cfg.out);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return kExitUsage;
  }
  return run(cfg, file, err);
}

} // namespace qclone::cli
