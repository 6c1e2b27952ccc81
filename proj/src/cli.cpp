#include "koszul/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "koszul/bar.hpp"
#include "koszul/corpus.hpp"
#include "koszul/dual.hpp"
#include "koszul/parse.hpp"
#include "koszul/pbw.hpp"

namespace koszul {
namespace {

struct Args {
  std::string cmd;
  std::vector<std::string> pos;
  std::map<std::string, std::string> opt;
};

const char* kUsage =
    "usage:\n"
    "  koszul check FILE [--max-weight W] [--max-arity R] [--records OUT]\n"
    "  koszul dual FILE [--mode kdual|shriek] [-o OUT]\n"
    "  koszul dims FILE --max-arity R [--max-weight W] [--records OUT]\n"
    "  koszul bar FILE --max-weight W --max-arity R [--field Q|F<p>]\n"
    "            [--max-cell-dim N] [--records OUT]\n"
    "  koszul nf FILE --expr \"<poly>\"\n"
    "  koszul shuffles M N I\n"
    "FILE is a path or builtin:<name> with name one of: assoc-ns, assoc, com,\n"
    "lie, poisson, perm, prelie, tot-assoc-3, part-assoc-3, m-dend(m).\n";

int usage_error(std::ostream& err, const std::string& msg) {
  if (!msg.empty()) err << "error: " << msg << "\n";
  err << kUsage;
  return 2;
}

std::optional<Args> parse_args(const std::vector<std::string>& argv, std::ostream& err) {
  static const std::map<std::string, std::vector<std::string>> flags = {
      {"check", {"--max-weight", "--max-arity", "--records"}},
      {"dual", {"--mode", "-o"}},
      {"dims", {"--max-arity", "--max-weight", "--records"}},
      {"bar", {"--max-weight", "--max-arity", "--field", "--max-cell-dim", "--records"}},
      {"nf", {"--expr"}},
      {"shuffles", {}},
  };
  if (argv.empty()) {
    usage_error(err, "missing subcommand");
    return std::nullopt;
  }
  Args a;
  a.cmd = argv[0];
  auto it = flags.find(a.cmd);
  if (it == flags.end()) {
    usage_error(err, "unknown subcommand '" + a.cmd + "'");
    return std::nullopt;
  }
  for (size_t i = 1; i < argv.size(); i++) {
    const std::string& s = argv[i];
    if (!s.empty() && s[0] == '-' && s.size() > 1 && !std::isdigit((unsigned char)s[1])) {
      if (std::find(it->second.begin(), it->second.end(), s) == it->second.end()) {
        usage_error(err, "unknown option '" + s + "' for " + a.cmd);
        return std::nullopt;
      }
      if (i + 1 >= argv.size()) {
        usage_error(err, "option '" + s + "' needs a value");
        return std::nullopt;
      }
      a.opt[s] = argv[++i];
    } else {
      a.pos.push_back(s);
    }
  }
  return a;
}

long int_opt(const Args& a, const std::string& key, long dflt) {
  auto it = a.opt.find(key);
  if (it == a.opt.end()) return dflt;
  return std::stol(it->second);
}

// Largest arity a weight-W monomial can reach, used as the default bound.
int natural_arity(const QuadraticPresentation& p, int w) {
  int amax = 2;
  for (int a : p.module.arities()) amax = std::max(amax, a);
  return w * (amax - 1) + 1;
}

struct RecordFile {
  std::ofstream out;
  bool open(const Args& a, std::ostream& err) {
    auto it = a.opt.find("--records");
    if (it == a.opt.end()) return true;
    out.open(it->second);
    if (!out) {
      err << "error: cannot write records to '" << it->second << "'\n";
      return false;
    }
    return true;
  }
  void line(int s, int r, int d, long value) {
    if (out.is_open()) out << s << " " << r << " " << d << " " << value << "\n";
  }
};

int cmd_check(const Args& a, std::ostream& out, std::ostream& err) {
  QuadraticPresentation p = load_presentation(a.pos.at(0));
  int w = (int)int_opt(a, "--max-weight", 3);
  int r = (int)int_opt(a, "--max-arity", natural_arity(p, w));
  RecordFile rec;
  if (!rec.open(a, err)) return 2;
  RewriteSystem rs = quadratic_split(p);
  PbwReport rep = check_pbw(p, rs, w, r);
  out << "operad " << p.name << "\n";
  if (!rep.split_ok) {
    err << "quadratic split failed: " << rep.split_error << "\n";
    out << "pbw up to weight " << w << ", arity " << r << ": no\n";
    return 1;
  }
  for (auto& [arity, split] : rs.by_arity) {
    out << "arity " << arity << ": " << split.monomials.size() << " monomials, |I|="
        << split.I.size() << " |J|=" << split.J.size() << "\n";
    out << "  basis part:";
    for (int j : split.J) out << " " << split.monomials[j].str(p.module);
    out << "\n";
  }
  for (auto& c : rep.cells) {
    out << "cell s=" << c.s << " r=" << c.r << ": monomials=" << c.monomials
        << " candidates=" << c.candidates << " ideal-rank=" << c.rank << " dim=" << c.dim
        << (c.ok ? "  ok" : "  MISMATCH") << "\n";
    rec.line(c.s, c.r, 0, c.dim);
  }
  bool ok = rep.pbw();
  out << "pbw up to weight " << w << ", arity " << r << ": " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_dual(const Args& a, std::ostream& out, std::ostream& err) {
  QuadraticPresentation p = load_presentation(a.pos.at(0));
  DualMode mode;
  auto mit = a.opt.find("--mode");
  if (mit == a.opt.end()) {
    bool all_binary = true;
    for (int ar : p.module.arities())
      if (ar != 2) all_binary = false;
    mode = all_binary ? DualMode::shriek : DualMode::kdual;
  } else if (mit->second == "kdual") {
    mode = DualMode::kdual;
  } else if (mit->second == "shriek") {
    mode = DualMode::shriek;
  } else {
    return usage_error(err, "--mode must be kdual or shriek");
  }
  RewriteSystem rs = quadratic_split(p);
  if (!rs.ok) {
    err << "quadratic split failed: " << rs.error << "\n";
    return 1;
  }
  DualPresentation d = dual_presentation(p, rs, mode);
  std::string text = print_presentation(d.pres);
  auto oit = a.opt.find("-o");
  if (oit == a.opt.end()) {
    out << text;
  } else {
    std::ofstream f(oit->second);
    if (!f) {
      err << "error: cannot write '" << oit->second << "'\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

int cmd_dims(const Args& a, std::ostream& out, std::ostream& err) {
  QuadraticPresentation p = load_presentation(a.pos.at(0));
  if (!a.opt.count("--max-arity")) return usage_error(err, "dims needs --max-arity");
  int r = (int)int_opt(a, "--max-arity", 0);
  int w = (int)int_opt(a, "--max-weight", r);
  RecordFile rec;
  if (!rec.open(a, err)) return 2;
  RewriteSystem rs = quadratic_split(p);
  if (!rs.ok) {
    err << "quadratic split failed: " << rs.error << "\n";
    return 1;
  }
  auto dims = dimension_table(p, rs, w, r);
  out << "operad " << p.name << "\n";
  for (auto& [sr, dim] : dims) {
    out << "dim weight=" << sr.first << " arity=" << sr.second << " : " << dim << "\n";
    rec.line(sr.first, sr.second, 0, dim);
  }
  return 0;
}

int cmd_bar(const Args& a, std::ostream& out, std::ostream& err) {
  QuadraticPresentation p = load_presentation(a.pos.at(0));
  if (!a.opt.count("--max-weight") || !a.opt.count("--max-arity"))
    return usage_error(err, "bar needs --max-weight and --max-arity");
  int w = (int)int_opt(a, "--max-weight", 0);
  int r = (int)int_opt(a, "--max-arity", 0);
  long cap = int_opt(a, "--max-cell-dim", 200000);
  if (auto fit = a.opt.find("--field"); fit != a.opt.end()) {
    const std::string& f = fit->second;
    if (f == "Q") {
      p.module.field = Field::Q();
    } else if (f.size() > 1 && f[0] == 'F') {
      p.module.field = Field::Fp(std::stoul(f.substr(1)));
    } else {
      return usage_error(err, "--field must be Q or F<p>");
    }
  }
  RecordFile rec;
  if (!rec.open(a, err)) return 2;
  RewriteSystem rs = quadratic_split(p);
  if (!rs.ok) {
    err << "quadratic split failed: " << rs.error << "\n";
    return 1;
  }
  HomologyReport rep = homology(p, rs, w, r, cap);
  out << "operad " << p.name << " over "
      << (p.module.field.modular ? "F" + std::to_string(p.module.field.p) : "Q") << "\n";
  for (auto& c : rep.cells) {
    out << "cell s=" << c.s << " r=" << c.r << ":";
    if (c.aborted) {
      out << " aborted (dimension over cap)\n";
      continue;
    }
    out << " chain dims";
    for (int d = 1; d <= c.s; d++) out << " " << c.chain_dim[d];
    out << " | H ranks";
    for (int d = 1; d <= c.s; d++) {
      out << " " << c.h_rank[d];
      rec.line(c.s, c.r, d, c.h_rank[d]);
    }
    out << " | K dim " << c.kdim << (c.diagonal ? "" : "  OFF-DIAGONAL") << "\n";
  }
  bool ok = rep.all_diagonal && rep.aborted_cells == 0;
  out << "diagonal: " << (rep.all_diagonal ? "yes" : "no");
  if (rep.aborted_cells) out << " (" << rep.aborted_cells << " cells aborted)";
  out << "\n";
  return ok ? 0 : 1;
}

int cmd_nf(const Args& a, std::ostream& out, std::ostream& err) {
  QuadraticPresentation p = load_presentation(a.pos.at(0));
  auto eit = a.opt.find("--expr");
  if (eit == a.opt.end()) return usage_error(err, "nf needs --expr");
  OperadElement x = parse_element(p.module, eit->second);
  RewriteSystem rs = quadratic_split(p);
  if (!rs.ok) {
    err << "quadratic split failed: " << rs.error << "\n";
    return 1;
  }
  OperadElement y = normal_form(p, rs, x);
  out << y.str(p.module) << "\n";
  return 0;
}

int cmd_shuffles(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.pos.size() != 3) return usage_error(err, "shuffles needs M N I");
  int m = std::stoi(a.pos[0]), n = std::stoi(a.pos[1]), i = std::stoi(a.pos[2]);
  if (m < 1 || n < 1 || i < 1 || i > m) return usage_error(err, "need 1 <= I <= M, N >= 1");
  for (const Perm& w : pointed_shuffles(m, n, i)) out << perm_str(w) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(args, err);
  if (!parsed) return 2;
  const Args& a = *parsed;
  if (a.cmd != "shuffles" && a.pos.size() != 1)
    return usage_error(err, a.pos.empty() ? "missing FILE" : "too many arguments");
  try {
    if (a.cmd == "check") return cmd_check(a, out, err);
    if (a.cmd == "dual") return cmd_dual(a, out, err);
    if (a.cmd == "dims") return cmd_dims(a, out, err);
    if (a.cmd == "bar") return cmd_bar(a, out, err);
    if (a.cmd == "nf") return cmd_nf(a, out, err);
    if (a.cmd == "shuffles") return cmd_shuffles(a, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace koszul
