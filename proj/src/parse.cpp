#include "koszul/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace koszul {
namespace {

struct Tok {
  enum Kind { id, num, sym, end };
  Kind kind;
  std::string text;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  if (line > 0) throw ParseError("line " + std::to_string(line) + ": " + msg);
  throw ParseError(msg);
}

std::vector<Tok> lex(const std::string& s, int line) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace((unsigned char)c)) {
      i++;
    } else if (std::isalpha((unsigned char)c) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) j++;
      out.push_back({Tok::id, s.substr(i, j - i)});
      i = j;
    } else if (std::isdigit((unsigned char)c)) {
      size_t j = i;
      while (j < s.size() && std::isdigit((unsigned char)s[j])) j++;
      out.push_back({Tok::num, s.substr(i, j - i)});
      i = j;
    } else if (std::string("()+-*/,=<").find(c) != std::string::npos) {
      out.push_back({Tok::sym, std::string(1, c)});
      i++;
    } else {
      fail(line, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, ""});
  return out;
}

struct Cursor {
  std::vector<Tok> toks;
  size_t i = 0;
  int line = 0;

  const Tok& peek() const { return toks[i]; }
  Tok take() { return toks[i++]; }
  bool at_end() const { return toks[i].kind == Tok::end; }
  bool sym(const char* s) const { return toks[i].kind == Tok::sym && toks[i].text == s; }
  bool eat(const char* s) {
    if (!sym(s)) return false;
    i++;
    return true;
  }
  void expect(const char* s, const std::string& what) {
    if (!eat(s)) fail(line, "expected '" + std::string(s) + "' " + what);
  }
  std::string ident(const std::string& what) {
    if (peek().kind != Tok::id) fail(line, "expected " + what);
    return take().text;
  }
  long integer(const std::string& what) {
    bool neg = eat("-");
    if (peek().kind != Tok::num) fail(line, "expected " + what);
    long v = std::stol(take().text);
    return neg ? -v : v;
  }
};

Rat read_rational(Cursor& c) {
  long num = std::stol(c.take().text);
  if (c.eat("/")) {
    if (c.peek().kind != Tok::num) fail(c.line, "expected denominator");
    long den = std::stol(c.take().text);
    if (den == 0) fail(c.line, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  return Rat(num);
}

TreewiseTensor unit_tensor() {
  TreewiseTensor u;
  u.shape.arity = 1;
  return u;
}

// Parses g(arg,...) recursively into raw, returning the kid encoding of the
// parsed subtree (leaf number or -1-node).
int parse_node(Cursor& c, const GeneratorModule& mod, RawTensor& raw, std::vector<int>& leaves) {
  if (c.peek().kind == Tok::num) {
    int leaf = (int)std::stol(c.take().text);
    if (leaf < 1) fail(c.line, "leaf labels start at 1");
    leaves.push_back(leaf);
    return leaf;
  }
  std::string name = c.ident("a leaf or generator application");
  auto [ga, gi] = mod.find(name);
  if (ga < 0) fail(c.line, "unknown generator '" + name + "'");
  c.expect("(", "after generator '" + name + "'");
  int id = (int)raw.nodes.size();
  raw.nodes.push_back({{}, gi});
  raw.factors.push_back(id);
  std::vector<int> kids;
  kids.push_back(parse_node(c, mod, raw, leaves));
  while (c.eat(",")) kids.push_back(parse_node(c, mod, raw, leaves));
  c.expect(")", "closing generator '" + name + "'");
  if ((int)kids.size() != ga)
    fail(c.line, "generator '" + name + "' has arity " + std::to_string(ga) + ", got " +
                     std::to_string(kids.size()) + " arguments");
  raw.nodes[id].kids = kids;
  return -1 - id;
}

// One signed term of a polynomial, fully canonicalized.
OperadElement parse_term(Cursor& c, const GeneratorModule& mod, Rat sign) {
  Rat coeff = sign;
  bool have_coeff = false;
  if (c.peek().kind == Tok::num) {
    // Lone "1" (optionally after a coefficient and '*') denotes the unit.
    Rat q = read_rational(c);
    if (c.eat("*")) {
      coeff *= q;
      have_coeff = true;
      if (c.peek().kind == Tok::num && c.peek().text == "1") {
        c.take();
        return make_element({{unit_tensor(), coeff}}, mod.field);
      }
    } else if (c.peek().kind == Tok::id) {
      coeff *= q;  // juxtaposed coefficient, "2 m(1,2)"
      have_coeff = true;
    } else {
      return make_element({{unit_tensor(), coeff * q}}, mod.field);
    }
  }
  if (c.peek().kind != Tok::id)
    fail(c.line, have_coeff ? "expected a monomial after the coefficient" : "expected a monomial");
  RawTensor raw;
  std::vector<int> leaves;
  int top = parse_node(c, mod, raw, leaves);
  if (top >= 0) fail(c.line, "a bare leaf is not a monomial");
  raw.root = -1 - top;
  raw.arity = (int)leaves.size();
  std::vector<int> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  for (int l = 1; l <= (int)sorted.size(); l++)
    if (sorted[l - 1] != l)
      fail(c.line, "leaves must be 1.." + std::to_string(leaves.size()) + ", each exactly once");
  return canonicalize(mod, raw, coeff);
}

OperadElement parse_poly(Cursor& c, const GeneratorModule& mod) {
  OperadElement acc;
  bool first = true;
  while (true) {
    Rat sign(1);
    if (c.eat("-")) sign = Rat(-1);
    else if (!c.eat("+") && !first) break;
    OperadElement t = parse_term(c, mod, sign);
    if (!acc.is_zero() && !t.is_zero() && acc.arity() != t.arity())
      fail(c.line, "terms of different arity in one polynomial");
    acc = elem_add(acc, t, mod.field);
    first = false;
    if (c.at_end() || c.sym("=")) break;
  }
  return acc;
}

struct Statement {
  int line;
  std::string keyword;
  Cursor body;  // tokens after the keyword
};

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; d++)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

QuadraticPresentation parse_presentation(const std::string& text) {
  std::vector<Statement> stmts;
  std::vector<std::pair<int, std::string>> raw_names;  // operad lines (rest of line)
  {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      no++;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      while (!line.empty() && (line.back() == '\r' || std::isspace((unsigned char)line.back())))
        line.pop_back();
      size_t b = 0;
      while (b < line.size() && std::isspace((unsigned char)line[b])) b++;
      if (b >= line.size()) continue;
      line = line.substr(b);
      if (line.compare(0, 7, "operad ") == 0 || line == "operad") {
        std::string n = line.size() > 7 ? line.substr(7) : "";
        size_t nb = n.find_first_not_of(" \t");
        raw_names.push_back({no, nb == std::string::npos ? "" : n.substr(nb)});
        continue;
      }
      Cursor c{lex(line, no), 0, no};
      std::string kw = c.ident("a directive");
      stmts.push_back({no, kw, c});
    }
  }

  QuadraticPresentation p;
  p.name = "unnamed";
  if (!raw_names.empty()) {
    if (raw_names.size() > 1) fail(raw_names[1].first, "duplicate operad line");
    if (raw_names[0].second.empty()) fail(raw_names[0].first, "missing operad name");
    p.name = raw_names[0].second;
  }

  auto stmts_of = [&](const std::string& kw) {
    std::vector<Statement*> out;
    for (auto& s : stmts)
      if (s.keyword == kw) out.push_back(&s);
    return out;
  };
  for (auto& s : stmts) {
    static const char* known[] = {"flavor", "field",      "generator", "action",
                                  "order",  "precedence", "relation"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return s.keyword == k; }) == std::end(known))
      fail(s.line, "unknown directive '" + s.keyword + "'");
  }

  auto single = [&](const std::string& kw) -> Statement* {
    auto v = stmts_of(kw);
    if (v.size() > 1) fail(v[1]->line, "duplicate " + kw + " line");
    return v.empty() ? nullptr : v[0];
  };

  if (Statement* s = single("flavor")) {
    std::string f = s->body.ident("'symmetric' or 'nonsymmetric'");
    if (f == "symmetric") p.module.flavor = Flavor::symmetric;
    else if (f == "nonsymmetric") p.module.flavor = Flavor::nonsymmetric;
    else fail(s->line, "flavor must be 'symmetric' or 'nonsymmetric'");
    if (!s->body.at_end()) fail(s->line, "trailing tokens after flavor");
  }

  if (Statement* s = single("field")) {
    std::string f = s->body.ident("'Q' or 'F<p>'");
    if (f == "Q") {
      p.module.field = Field::Q();
    } else if (f.size() > 1 && f[0] == 'F' &&
               std::all_of(f.begin() + 1, f.end(),
                           [](char ch) { return std::isdigit((unsigned char)ch); })) {
      unsigned long q = std::stoul(f.substr(1));
      if (!is_prime(q)) fail(s->line, "field characteristic must be prime");
      p.module.field = Field::Fp(q);
    } else {
      fail(s->line, "field must be 'Q' or 'F<p>'");
    }
    if (!s->body.at_end()) fail(s->line, "trailing tokens after field");
  }

  for (Statement* s : stmts_of("generator")) {
    Cursor& c = s->body;
    c.line = s->line;
    std::string name = c.ident("a generator name");
    if (p.module.find(name).first >= 0) fail(s->line, "duplicate generator '" + name + "'");
    if (c.ident("'arity'") != "arity") fail(s->line, "expected 'arity'");
    long a = c.integer("an arity");
    if (a < 1) fail(s->line, "arity must be at least 1");
    long d = 0;
    if (!c.at_end()) {
      if (c.ident("'degree'") != "degree") fail(s->line, "expected 'degree'");
      d = c.integer("a degree");
      if (!c.at_end()) fail(s->line, "trailing tokens after generator");
    }
    p.module.add_generator(name, (int)a, (int)d);
  }

  for (Statement* s : stmts_of("action")) {
    Cursor& c = s->body;
    c.line = s->line;
    if (p.module.flavor == Flavor::nonsymmetric)
      fail(s->line, "action line in a nonsymmetric presentation");
    std::string name = c.ident("a generator name");
    auto [a, g] = p.module.find(name);
    if (a < 0) fail(s->line, "unknown generator '" + name + "'");
    if (c.ident("'swap'") != "swap") fail(s->line, "expected 'swap'");
    long k = c.integer("a swap position");
    if (k < 1 || k >= a)
      fail(s->line, "swap position must be in 1.." + std::to_string(a - 1));
    c.expect("=", "after the swap position");
    GenCombo combo;
    bool first = true;
    while (!c.at_end()) {
      Rat sign(1);
      if (c.eat("-")) sign = Rat(-1);
      else if (!c.eat("+") && !first) fail(s->line, "expected '+' or '-' between image terms");
      Rat coeff = sign;
      if (c.peek().kind == Tok::num) {
        coeff *= read_rational(c);
        c.eat("*");
      }
      std::string tn = c.ident("a generator in the image");
      auto [ta, tg] = p.module.find(tn);
      if (ta < 0) fail(s->line, "unknown generator '" + tn + "'");
      if (ta != a) fail(s->line, "image generator '" + tn + "' has a different arity");
      c.expect("(", "in the image term");
      for (int l = 1; l <= ta; l++) {
        if (l > 1) c.expect(",", "between image inputs");
        if (c.peek().kind != Tok::num || std::stol(c.peek().text) != l)
          fail(s->line, "image terms must list their inputs in order 1.." + std::to_string(ta));
        c.take();
      }
      c.expect(")", "closing the image term");
      combo.push_back({tg, coeff});
      first = false;
    }
    if (combo.empty()) fail(s->line, "empty action image");
    p.module.set_swap_image(a, (int)k, g, combo);
  }

  p.order.kind = MonomialOrder::Kind::lex;
  if (Statement* s = single("order")) {
    std::string k = s->body.ident("'lex' or 'revlenlex'");
    if (k == "lex") p.order.kind = MonomialOrder::Kind::lex;
    else if (k == "revlenlex") p.order.kind = MonomialOrder::Kind::revlenlex;
    else fail(s->line, "order must be 'lex' or 'revlenlex'");
    if (!s->body.at_end()) fail(s->line, "trailing tokens after order");
  }

  p.order.rank = default_ranks(p.module);
  {
    std::vector<int> seen_arity;
    for (Statement* s : stmts_of("precedence")) {
      Cursor& c = s->body;
      c.line = s->line;
      std::vector<std::pair<int, int>> listed;  // (arity, gen)
      listed.push_back(p.module.find(c.ident("a generator name")));
      if (listed[0].first < 0) fail(s->line, "unknown generator in precedence");
      while (c.eat("<")) {
        auto ag = p.module.find(c.ident("a generator name"));
        if (ag.first < 0) fail(s->line, "unknown generator in precedence");
        listed.push_back(ag);
      }
      if (!c.at_end()) fail(s->line, "trailing tokens after precedence");
      int a = listed[0].first;
      for (auto& [aa, gg] : listed)
        if (aa != a) fail(s->line, "precedence mixes generators of different arities");
      if (std::find(seen_arity.begin(), seen_arity.end(), a) != seen_arity.end())
        fail(s->line, "duplicate precedence for arity " + std::to_string(a));
      seen_arity.push_back(a);
      std::vector<int> seen;
      for (auto& [aa, gg] : listed) {
        if (std::find(seen.begin(), seen.end(), gg) != seen.end())
          fail(s->line, "generator repeated in precedence");
        seen.push_back(gg);
      }
      if ((int)listed.size() != p.module.gen_count(a))
        fail(s->line, "precedence must list every generator of arity " + std::to_string(a));
      for (int r = 0; r < (int)listed.size(); r++) p.order.rank[a][listed[r].second] = r;
    }
  }

  for (Statement* s : stmts_of("relation")) {
    Cursor& c = s->body;
    c.line = s->line;
    OperadElement rel;
    try {
      rel = parse_poly(c, p.module);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(s->line, e.what());
    }
    c.expect("=", "before the closing '= 0'");
    if (c.peek().kind != Tok::num || c.peek().text != "0")
      fail(s->line, "relations must end in '= 0'");
    c.take();
    if (!c.at_end()) fail(s->line, "trailing tokens after relation");
    for (auto& t : rel.terms)
      if (t.mono.weight() != 2)
        fail(s->line, "relations must be quadratic (weight 2), found weight " +
                          std::to_string(t.mono.weight()));
    if (rel.is_zero()) continue;  // vacuous after canonicalization
    p.relations.push_back(rel);
  }

  if (std::string err = p.validate(); !err.empty()) throw ParseError(err);
  return p;
}

OperadElement parse_element(const GeneratorModule& mod, const std::string& text) {
  Cursor c{lex(text, 0), 0, 0};
  if (c.at_end()) fail(0, "empty expression");
  OperadElement x = parse_poly(c, mod);
  if (!c.at_end()) fail(0, "trailing tokens after expression");
  return x;
}

namespace {

std::string combo_str(const GeneratorModule& mod, int arity, const GenCombo& combo) {
  std::string args = "(";
  for (int l = 1; l <= arity; l++) args += (l > 1 ? "," : "") + std::to_string(l);
  args += ")";
  std::string s;
  for (size_t i = 0; i < combo.size(); i++) {
    Rat c = combo[i].c;
    bool neg = sgn(c) < 0;
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    Rat a = abs(c);
    if (a != 1) s += rat_str(a) + "*";
    s += mod.gen(arity, combo[i].gen).name + args;
  }
  return s;
}

}  // namespace

std::string print_presentation(const QuadraticPresentation& p) {
  std::ostringstream o;
  o << "operad " << p.name << "\n";
  o << "flavor " << (p.module.flavor == Flavor::symmetric ? "symmetric" : "nonsymmetric")
    << "\n";
  o << "field " << (p.module.field.modular ? "F" + std::to_string(p.module.field.p) : "Q")
    << "\n";
  for (int a : p.module.arities())
    for (int g = 0; g < p.module.gen_count(a); g++) {
      const Generator& gen = p.module.gen(a, g);
      o << "generator " << gen.name << " arity " << gen.arity;
      if (gen.degree != 0) o << " degree " << gen.degree;
      o << "\n";
    }
  if (p.module.flavor == Flavor::symmetric)
    for (int a : p.module.arities())
      for (int k = 1; k < a; k++)
        for (int g = 0; g < p.module.gen_count(a); g++)
          if (p.module.has_swap(a, k))
            o << "action " << p.module.gen(a, g).name << " swap " << k << " = "
              << combo_str(p.module, a, p.module.swap_matrix(a, k)[g]) << "\n";
  o << "order " << (p.order.kind == MonomialOrder::Kind::lex ? "lex" : "revlenlex") << "\n";
  for (int a : p.module.arities()) {
    int n = p.module.gen_count(a);
    if (n < 2 || a >= (int)p.order.rank.size()) continue;
    std::vector<std::string> by_rank(n);
    for (int g = 0; g < n; g++) by_rank[p.order.rank[a][g]] = p.module.gen(a, g).name;
    o << "precedence";
    for (int r = 0; r < n; r++) o << (r ? " < " : " ") << by_rank[r];
    o << "\n";
  }
  for (auto& r : p.relations) o << "relation " << r.str(p.module) << " = 0\n";
  return o.str();
}

}  // namespace koszul
