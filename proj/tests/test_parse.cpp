#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul/corpus.hpp"
#include "koszul/parse.hpp"

using namespace koszul;

static std::string err_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (ParseError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("printing and reparsing is the identity on every builtin") {
  for (const std::string& name : builtin_names()) {
    std::string n = (name == "m-dend(m)") ? "m-dend-3" : name;
    QuadraticPresentation p = builtin(n);
    std::string text = print_presentation(p);
    QuadraticPresentation q = parse_presentation(text);
    CHECK(q.validate() == "");
    CHECK(q.name == p.name);
    CHECK(q.module.flavor == p.module.flavor);
    CHECK(q.module.field.str() == p.module.field.str());
    CHECK(q.module.arities() == p.module.arities());
    for (int a : p.module.arities()) CHECK(q.module.gen_count(a) == p.module.gen_count(a));
    CHECK(q.relations.size() == p.relations.size());
    // a symmetrized order prints as its base order; the file format only
    // carries lex/revlenlex
    if (p.order.name().find("symmetrized") == std::string::npos)
      CHECK(q.order.name() == p.order.name());
    CHECK(print_presentation(q) == text);
  }
}

TEST_CASE("printed form of poisson") {
  std::string text = print_presentation(builtin("poisson"));
  std::string expect =
      "operad poisson\n"
      "flavor symmetric\n"
      "field Q\n"
      "generator k arity 2\n"
      "generator m arity 2\n"
      "action k swap 1 = -k(1,2)\n"
      "action m swap 1 = m(1,2)\n"
      "order lex\n"
      "precedence k < m\n"
      "relation m(m(1,2),3) - m(1,m(2,3)) = 0\n"
      "relation -k(k(1,3),2) + k(k(1,2),3) - k(1,k(2,3)) = 0\n"
      "relation -m(k(1,3),2) + k(m(1,2),3) - m(1,k(2,3)) = 0\n";
  CHECK(text == expect);
}

TEST_CASE("comments, blank lines and missing headers") {
  QuadraticPresentation p = parse_presentation(
      "# a short presentation\n"
      "operad x # named x\n"
      "\n"
      "flavor nonsymmetric\n"
      "field Q\n"
      "generator m arity 2 # binary\n"
      "order lex\n"
      "relation m(m(1,2),3) - m(1,m(2,3)) = 0 # associativity\n");
  CHECK(p.validate() == "");
  CHECK(p.name == "x");
  CHECK(p.relations.size() == 1);

  // name and order have defaults
  QuadraticPresentation q = parse_presentation(
      "flavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
      "relation m(m(1,2),3) - m(1,m(2,3)) = 0\n");
  CHECK(q.name == "unnamed");
  CHECK(q.order.name() == "lex");
  CHECK(q.validate() == "");
}

TEST_CASE("finite fields in the header") {
  QuadraticPresentation p = parse_presentation(
      "operad x\nflavor nonsymmetric\nfield F5\ngenerator m arity 2\norder lex\n"
      "relation m(m(1,2),3) - m(1,m(2,3)) = 0\n");
  CHECK(p.module.field.str() == "F5");
  CHECK(p.validate() == "");
}

TEST_CASE("errors carry the line number") {
  CHECK(err_of("operad x\nflavour symmetric\n") ==
        "line 2: unknown directive 'flavour'");
  CHECK(err_of("operad x\nflavor symmetric\nfield R\n") ==
        "line 3: field must be 'Q' or 'F<p>'");
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "order widgetwise\n") ==
        "line 5: order must be 'lex' or 'revlenlex'");
}

TEST_CASE("generator and action errors") {
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\n"
               "generator m arity 2\ngenerator m arity 2\norder lex\n") ==
        "line 5: duplicate generator 'm'");
  CHECK(err_of("operad x\nflavor symmetric\nfield Q\ngenerator m arity 2\n"
               "action m swap 2 = m(1,2)\norder lex\n") ==
        "line 5: swap position must be in 1..1");
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "action m swap 1 = m(1,2)\norder lex\n") ==
        "line 5: action line in a nonsymmetric presentation");
  // the image of a swap must keep its inputs in planar order
  CHECK(err_of("operad x\nflavor symmetric\nfield Q\ngenerator m arity 2\n"
               "action m swap 1 = m(2,1)\norder lex\n") ==
        "line 5: image terms must list their inputs in order 1..2");
  // a symmetric generator with no action line fails module validation
  CHECK(err_of("operad x\nflavor symmetric\nfield Q\ngenerator m arity 2\n"
               "order lex\nrelation m(m(1,2),3) - m(1,m(2,3)) = 0\n") ==
        "arity 2: no action given for swap 1");
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "order lex\nprecedence m < q\n") ==
        "line 6: unknown generator in precedence");
}

TEST_CASE("relation errors") {
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "order lex\nrelation m(m(1,2),3) - q(1,m(2,3)) = 0\n") ==
        "line 6: unknown generator 'q'");
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "order lex\nrelation m(m(1,2),4) - m(1,m(2,3)) = 0\n") ==
        "line 6: leaves must be 1..3, each exactly once");
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "order lex\nrelation m(m(1,2),3) - m(1,m(2,3)) = 1\n") ==
        "line 6: relations must end in '= 0'");
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "order lex\nrelation m(m(1,2),3) - m(1,m(2,3))\n") ==
        "line 6: expected '=' before the closing '= 0'");
  // no parenthesized groups: every '(' must follow a generator name
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "order lex\nrelation (m(m(1,2),3) - m(1,m(2,3))) = 0\n") ==
        "line 6: expected a monomial");
  CHECK(err_of("operad x\nflavor nonsymmetric\nfield Q\ngenerator m arity 2\n"
               "generator w arity 3\norder lex\n"
               "relation m(m(1,2),3) - w(1,2,3) = 0\n") ==
        "line 7: relations must be quadratic (weight 2), found weight 1");
}

TEST_CASE("parsing a single element against a module") {
  QuadraticPresentation poisson = builtin("poisson");
  OperadElement e = parse_element(poisson.module, "2*m(m(1,2),3) - k(1,m(2,3))");
  CHECK(e.terms.size() == 2);
  CHECK(e.str(poisson.module) == "2*m(m(1,2),3) - k(1,m(2,3))");

  // fractional coefficients
  OperadElement h = parse_element(poisson.module, "1/2*m(m(1,2),3)");
  CHECK(h.terms.size() == 1);
  CHECK(h.terms[0].c == Rat(1, 2));

  // like terms cancel after canonicalization
  OperadElement z = parse_element(poisson.module, "m(m(1,2),3) - m(m(2,1),3)");
  CHECK(z.terms.empty());
  CHECK(z.str(poisson.module) == "0");

  // the commutative action identifies m(2,1) with m(1,2)
  OperadElement a = parse_element(poisson.module, "m(3,m(1,2))");
  OperadElement b = parse_element(poisson.module, "m(m(1,2),3)");
  CHECK(a.str(poisson.module) == b.str(poisson.module));

  CHECK_THROWS_AS(parse_element(poisson.module, "q(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_element(poisson.module, "m(1,m(2,2))"), ParseError);
}
