#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hgterm/errors.hpp"
#include "hgterm/json_io.hpp"
#include "hgterm/log.hpp"

namespace hgterm::cli {

namespace {

struct UsageError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Routes library diagnostics to the caller's error stream while alive.
class SinkGuard {
 public:
  explicit SinkGuard(std::ostream& err) {
    set_log_sink([&err](LogLevel level, const std::string& m) {
      const char* tag = level == LogLevel::warning ? "warning"
                        : level == LogLevel::info  ? "info"
                                                   : "debug";
      err << "hgterm " << tag << ": " << m << '\n';
    });
  }
  ~SinkGuard() { set_log_sink({}); }
  SinkGuard(const SinkGuard&) = delete;
  SinkGuard& operator=(const SinkGuard&) = delete;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: \"" + s + "\"");
  }
  if (used != s.size()) throw UsageError("not an integer: \"" + s + "\"");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string describe(Undefined u) {
  switch (u) {
    case Undefined::measure_zero:
      return "measure-zero";
    case Undefined::uncovered:
      return "uncovered";
    case Undefined::d_zero:
      return "D(z) = 0";
    case Undefined::value_unknown:
      return "value-unknown";
    default:
      return "";
  }
}

std::string form_text(const OreSatoForm& f) {
  std::ostringstream o;
  o << "C = " << f.C.to_string() << "\nD = " << f.D.to_string() << "\ngamma =";
  for (const auto& g : f.gamma) o << ' ' << format_rat(g);
  o << '\n';
  for (const auto& c : f.chains) {
    o << "v = " << format_vec(c.v) << ": a(t) = " << c.a.to_string()
      << ", b(t) = " << c.b.to_string() << '\n';
  }
  return o.str();
}

std::string region_text(const PolyhedralRegion& r) {
  if (r.constraints().empty()) return "Z^" + std::to_string(r.arity());
  std::string s;
  for (const auto& h : r.constraints()) {
    if (!s.empty()) s += ", ";
    s += MultiPoly::linear_form(h.v).to_string() + " > " + std::to_string(h.gt);
  }
  return s;
}

std::string report_text(const CompareReport& r) {
  std::ostringstream o;
  o << "checked " << r.checked << ", equal " << r.equal << ", on H " << r.on_H << ", D zero "
    << r.d_zero << ", blocked " << r.blocked << ", mismatches " << r.mismatches.size() << '\n';
  for (const auto& m : r.mismatches) {
    o << "  " << format_vec(m.z) << ": closed " << format_rat(m.closed) << ", oracle "
      << format_rat(m.oracle) << '\n';
  }
  return o.str();
}

int execute(const Command& cmd, std::ostream& out) {
  TermSpec spec = parse_spec(read_file(cmd.input));
  if (cmd.seed) {
    auto parts = split(*cmd.seed, '=');
    if (parts.size() != 2) throw UsageError("--seed expects \"z1,...,zk=p/q\"");
    spec.seed = Seed{parse_point(parts[0], spec.k), parse_rat(parts[1])};
  }
  const bool text = cmd.text;
  switch (cmd.action) {
    case Action::check: {
      const bool ok = check_compatibility(spec);
      out << (ok ? "compatible" : "incompatible") << '\n';
      return ok ? kSuccess : kMathFailure;
    }
    case Action::decompose: {
      OreSatoForm f = decompose(spec);
      out << (text ? form_text(f) : to_json(f).dump(2) + "\n");
      return kSuccess;
    }
    case Action::structure: {
      PiecewiseStructure ps = build_structure(spec);
      if (text) {
        out << form_text(ps.form) << "H: " << ps.H.size() << " hyperplanes\n";
        for (std::size_t i = 0; i < ps.pieces.size(); ++i) {
          const auto& p = ps.pieces[i];
          out << "piece " << i << ": " << region_text(p.region) << "; z0 = " << format_vec(p.z0)
              << ", f0 = " << (p.f0 ? format_rat(*p.f0) : std::string("unknown")) << '\n';
        }
      } else {
        out << to_json(ps).dump(2) << '\n';
      }
      return kSuccess;
    }
    case Action::factorial:
    case Action::pochhammer: {
      PiecewiseStructure ps = build_structure(spec);
      Json forms = Json::array();
      std::ostringstream summary;
      for (const auto& ff : split_factorial(ps)) {
        if (cmd.action == Action::factorial) {
          forms.push_back(to_json(ff));
          summary << "piece " << ff.piece << " on " << region_text(ff.region) << ":";
          for (const auto& c : ff.chains) {
            summary << " prod_{j=1}^{" << MultiPoly::linear_form(c.w, Rat(static_cast<long>(c.n))).to_string()
                    << "} (" << c.a.to_string("j") << ")/(" << c.b.to_string("j") << ")";
          }
          summary << '\n';
        } else {
          PochhammerForm pf = to_pochhammer(ff);
          forms.push_back(to_json(pf));
          summary << "piece " << pf.piece << " on " << region_text(pf.region) << ": scalar "
                  << format_rat(pf.scalar) << ", gamma";
          for (const auto& g : pf.gamma) summary << ' ' << format_rat(g);
          for (const auto& s : pf.numerator) {
            summary << " * (" << format_rat(s.m) << ")_{"
                    << MultiPoly::linear_form(s.v, Rat(static_cast<long>(s.r))).to_string() << "}";
          }
          for (const auto& s : pf.denominator) {
            summary << " / (" << format_rat(s.m) << ")_{"
                    << MultiPoly::linear_form(s.v, Rat(static_cast<long>(s.r))).to_string() << "}";
          }
          summary << '\n';
        }
      }
      out << (text ? summary.str() : Json{{"forms", forms}}.dump(2) + "\n");
      return kSuccess;
    }
    case Action::eval: {
      if (!cmd.at) throw UsageError("eval needs --at");
      IntVec z = parse_point(*cmd.at, spec.k);
      PiecewiseStructure ps = build_structure(spec);
      ClosedFormValue v = closed_form_eval(ps, z);
      if (!v.value) {
        out << "undefined (" << describe(v.reason) << ")\n";
        return kMathFailure;
      }
      out << format_rat(*v.value) << '\n';
      return kSuccess;
    }
    case Action::compare: {
      if (!spec.seed) throw UsageError("compare needs a seed (in the spec or via --seed)");
      Window w = cmd.window ? parse_window(*cmd.window, spec.k)
                            : Window{IntVec(spec.k, -8), IntVec(spec.k, 8)};
      PiecewiseStructure ps = build_structure(spec);
      CompareReport r = grid_compare(ps, spec, w);
      out << (text ? report_text(r) : to_json(r).dump(2) + "\n");
      return r.mismatches.empty() ? kSuccess : kMathFailure;
    }
  }
  return kUsage;
}

}  // namespace

Window parse_window(const std::string& text, std::size_t k) {
  auto axes = split(text, ',');
  if (axes.size() != k) {
    throw UsageError("--window needs " + std::to_string(k) + " ranges, got " +
                     std::to_string(axes.size()));
  }
  Window w{IntVec(k), IntVec(k)};
  for (std::size_t i = 0; i < k; ++i) {
    auto ends = split(axes[i], ':');
    if (ends.size() != 2) throw UsageError("window range must be lo:hi, got \"" + axes[i] + "\"");
    w.lo[i] = parse_int(ends[0]);
    w.hi[i] = parse_int(ends[1]);
    if (w.lo[i] > w.hi[i]) throw UsageError("window range with lo > hi: \"" + axes[i] + "\"");
  }
  return w;
}

IntVec parse_point(const std::string& text, std::size_t k) {
  auto parts = split(text, ',');
  if (parts.size() != k) {
    throw UsageError("expected a point with " + std::to_string(k) + " coordinates");
  }
  IntVec z;
  for (const auto& p : parts) z.push_back(parse_int(p));
  return z;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  set_log_level(cmd.verbosity >= 2   ? LogLevel::debug
                : cmd.verbosity == 1 ? LogLevel::info
                                     : LogLevel::warning);
  SinkGuard sink(err);
  std::ostringstream buffer;
  int status = kUsage;
  try {
    status = execute(cmd, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CocycleError& e) {
    err << "incompatible: " << e.what() << '\n';
    return kMathFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMathFailure;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (cmd.output) {
    std::ofstream f(*cmd.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *cmd.output << '\n';
      return kUsage;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed forms of multivariate hypergeometric terms", "hgterm"};
  app.require_subcommand(1);
  Command cmd;
  const std::vector<std::pair<std::string, Action>> actions = {
      {"check", Action::check},           {"decompose", Action::decompose},
      {"structure", Action::structure},   {"factorial", Action::factorial},
      {"pochhammer", Action::pochhammer}, {"eval", Action::eval},
      {"compare", Action::compare}};
  const std::map<std::string, std::string> help = {
      {"check", "verify the compatibility of the shift quotients"},
      {"decompose", "print C, D, gamma and the factorial chains"},
      {"structure", "build the piecewise closed form"},
      {"factorial", "emit factorial forms per region"},
      {"pochhammer", "emit Pochhammer forms per region"},
      {"eval", "evaluate the closed form at --at"},
      {"compare", "compare the closed form with recurrence propagation"}};
  for (const auto& [name, action] : actions) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("input", cmd.input, "term spec JSON")->required();
    sub->add_option("-o,--out", cmd.output, "write the result to a file");
    sub->add_option("--seed", cmd.seed, "override the seed, \"z1,...,zk=p/q\"");
    sub->add_flag("--text", cmd.text, "human-readable summary");
    sub->add_flag("-v,--verbose", cmd.verbosity, "more diagnostics (repeatable)");
    if (action == Action::eval) sub->add_option("--at", cmd.at, "point \"z1,...,zk\"")->required();
    if (action == Action::compare) sub->add_option("--window", cmd.window, "ranges \"a:b,c:d,...\"");
    sub->callback([&cmd, action = action] { cmd.action = action; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }
  return run(cmd, out, err);
}

}  // namespace hgterm::cli
