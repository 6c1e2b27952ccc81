#include "koszul/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "koszul/dual.hpp"
#include "koszul/parse.hpp"
#include "koszul/pbw.hpp"

namespace koszul {
namespace {

const char* kAssocNs = R"(operad assoc-ns
flavor nonsymmetric
field Q
generator m arity 2
order lex
relation m(m(1,2),3) - m(1,m(2,3)) = 0
)";

const char* kCom = R"(operad com
flavor symmetric
field Q
generator m arity 2
action m swap 1 = m(1,2)
order revlenlex
relation m(m(1,2),3) - m(1,m(2,3)) = 0
)";

const char* kLie = R"(operad lie
flavor symmetric
field Q
generator b arity 2
action b swap 1 = - b(1,2)
order lex
relation b(b(1,2),3) + b(b(2,3),1) + b(b(3,1),2) = 0
)";

const char* kPoisson = R"(operad poisson
flavor symmetric
field Q
# k is the bracket (antisymmetric), m the product (symmetric); m ranks above k
generator k arity 2
generator m arity 2
action k swap 1 = - k(1,2)
action m swap 1 = m(1,2)
order lex
precedence k < m
relation m(m(1,2),3) - m(1,m(2,3)) = 0                 # associativity of m
relation k(k(1,2),3) + k(k(2,3),1) + k(k(3,1),2) = 0   # Jacobi for k
relation k(m(1,2),3) - m(1,k(2,3)) - m(2,k(1,3)) = 0   # k is a derivation of m
)";

const char* kPerm = R"(operad perm
flavor symmetric
field Q
# d(x,y) is the product, dt its transpose d(y,x); d ranks above dt
generator dt arity 2
generator d arity 2
action dt swap 1 = d(1,2)
action d swap 1 = dt(1,2)
order lex
precedence dt < d
relation d(d(1,2),3) - d(1,d(2,3)) = 0    # (xy)z = x(yz)
relation d(1,d(2,3)) - d(1,dt(2,3)) = 0   # x(yz) = x(zy)
)";

const char* kTotAssoc3 = R"(operad tot-assoc-3
flavor nonsymmetric
field Q
generator m arity 3
order lex
relation m(m(1,2,3),4,5) - m(1,m(2,3,4),5) = 0
relation m(1,m(2,3,4),5) - m(1,2,m(3,4,5)) = 0
)";

const char* kPartAssoc3 = R"(operad part-assoc-3
flavor nonsymmetric
field Q
generator m arity 3 degree 1
order revlenlex
relation m(m(1,2,3),4,5) + m(1,m(2,3,4),5) + m(1,2,m(3,4,5)) = 0
)";

// The m-dendriform axioms with o1 the "succ" operation, om the "prec"
// operation and x star y expanded as the two-term sum x prec y + x succ y.
std::string m_dend_text(int m) {
  std::ostringstream o;
  o << "operad m-dend-" << m << "\n";
  o << "flavor nonsymmetric\nfield Q\n";
  for (int i = 1; i <= m; i++) o << "generator o" << i << " arity 2\n";
  o << "order lex\n";
  if (m >= 2) {
    o << "precedence";
    for (int i = 1; i <= m; i++) o << (i > 1 ? " < o" : " o") << i;
    o << "\n";
  }
  auto op = [&](int i) { return "o" + std::to_string(i); };
  std::string pr = op(m), su = op(1);
  // (x prec y) prec z = x prec (y star z), star = prec + succ
  o << "relation " << pr << "(" << pr << "(1,2),3) - " << pr << "(1," << pr << "(2,3)) - "
    << pr << "(1," << su << "(2,3)) = 0\n";
  // (x prec y) dot_i z = x dot_i (y succ z)
  for (int i = 2; i <= m - 1; i++)
    o << "relation " << op(i) << "(" << pr << "(1,2),3) - " << op(i) << "(1," << su
      << "(2,3)) = 0\n";
  // (x succ y) prec z = x succ (y prec z)
  o << "relation " << pr << "(" << su << "(1,2),3) - " << su << "(1," << pr << "(2,3)) = 0\n";
  // (x succ y) dot_i z = x succ (y dot_i z)
  for (int i = 2; i <= m - 1; i++)
    o << "relation " << op(i) << "(" << su << "(1,2),3) - " << su << "(1," << op(i)
      << "(2,3)) = 0\n";
  // (x star y) succ z = x succ (y succ z)
  o << "relation " << su << "(" << pr << "(1,2),3) + " << su << "(" << su << "(1,2),3) - "
    << su << "(1," << su << "(2,3)) = 0\n";
  // (x dot_i y) prec z = x dot_i (y prec z)
  for (int i = 2; i <= m - 1; i++)
    o << "relation " << pr << "(" << op(i) << "(1,2),3) - " << op(i) << "(1," << pr
      << "(2,3)) = 0\n";
  // (x dot_i y) dot_j z = x dot_i (y dot_j z), i < j
  for (int i = 2; i <= m - 1; i++)
    for (int j = i + 1; j <= m - 1; j++)
      o << "relation " << op(j) << "(" << op(i) << "(1,2),3) - " << op(i) << "(1," << op(j)
        << "(2,3)) = 0\n";
  return o.str();
}

}  // namespace

QuadraticPresentation builtin(const std::string& name) {
  if (name == "assoc-ns") return parse_presentation(kAssocNs);
  if (name == "com") return parse_presentation(kCom);
  if (name == "lie") return parse_presentation(kLie);
  if (name == "poisson") return parse_presentation(kPoisson);
  if (name == "perm") return parse_presentation(kPerm);
  if (name == "tot-assoc-3") return parse_presentation(kTotAssoc3);
  if (name == "part-assoc-3") return parse_presentation(kPartAssoc3);
  if (name == "assoc") {
    QuadraticPresentation p = symmetrize(builtin("assoc-ns"));
    p.name = "assoc";
    return p;
  }
  if (name == "prelie") {
    QuadraticPresentation perm = builtin("perm");
    RewriteSystem rs = quadratic_split(perm);
    QuadraticPresentation p = dual_presentation(perm, rs, DualMode::shriek).pres;
    p.name = "prelie";
    return p;
  }
  if (name.rfind("m-dend", 0) == 0) {
    std::string rest = name.substr(6);
    if (!rest.empty() && (rest[0] == '(' || rest[0] == '-')) {
      bool paren = rest[0] == '(';
      rest = rest.substr(1);
      if (paren && !rest.empty() && rest.back() == ')') rest.pop_back();
    }
    if (!rest.empty() &&
        std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit((unsigned char)c); })) {
      int m = std::stoi(rest);
      if (m < 2) throw std::invalid_argument("m-dend needs m >= 2");
      return parse_presentation(m_dend_text(m));
    }
  }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"assoc-ns",    "assoc", "com",          "lie",           "poisson",
          "perm",        "prelie", "tot-assoc-3", "part-assoc-3",  "m-dend(m)"};
}

QuadraticPresentation load_presentation(const std::string& path_or_uri) {
  if (path_or_uri.rfind("builtin:", 0) == 0) return builtin(path_or_uri.substr(8));
  std::ifstream in(path_or_uri);
  if (!in) throw std::runtime_error("cannot open '" + path_or_uri + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace koszul
