#include "pairtopo/formulas.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace pairtopo::formulas {

namespace {

OmegaPoly canonical(const OmegaPoly& p) { return p.canonicalVars(); }

Formula make(Kind kind, OmegaPoly poly, std::vector<Formula> children, std::vector<std::string> vars,
             SourcePos pos) {
  return std::make_shared<const Node>(Node{kind, std::move(poly), std::move(children), std::move(vars), pos});
}

bool isAtom(Kind k) { return k == Kind::Eq || k == Kind::Neq || k == Kind::InU; }
bool isQuantifier(Kind k) { return k == Kind::ExistsU || k == Kind::Exists || k == Kind::Forall; }

}  // namespace

Formula eq(OmegaPoly p, SourcePos pos) { return make(Kind::Eq, canonical(p), {}, {}, pos); }
Formula neq(OmegaPoly p, SourcePos pos) { return make(Kind::Neq, canonical(p), {}, {}, pos); }
Formula inU(OmegaPoly p, SourcePos pos) { return make(Kind::InU, canonical(p), {}, {}, pos); }
Formula conj(std::vector<Formula> parts, SourcePos pos) { return make(Kind::And, {}, std::move(parts), {}, pos); }
Formula disj(std::vector<Formula> parts, SourcePos pos) { return make(Kind::Or, {}, std::move(parts), {}, pos); }
Formula negate(Formula f, SourcePos pos) { return make(Kind::Not, {}, {std::move(f)}, {}, pos); }
Formula existsU(std::vector<std::string> vars, Formula body, SourcePos pos) {
  return make(Kind::ExistsU, {}, {std::move(body)}, std::move(vars), pos);
}

bool equal(const Formula& a, const Formula& b) {
  if (a->kind != b->kind || a->vars != b->vars || a->children.size() != b->children.size()) return false;
  if (isAtom(a->kind) && !(a->poly == b->poly)) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!equal(a->children[i], b->children[i])) return false;
  return true;
}

// ---------------------------------------------------------------- lexer

namespace {

const std::set<std::string> kKeywords = {"and", "or", "not", "exists", "forall", "in", "U"};

struct Token {
  enum Type { Ident, Number, Op, End } type;
  std::string text;
  SourcePos pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Ident, text.substr(i, j - i), pos});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Number, text.substr(i, j - i), pos});
      advance(j - i);
    } else if (c == '!' && i + 1 < text.size() && text[i + 1] == '=') {
      out.push_back({Token::Op, "!=", pos});
      advance(2);
    } else if (std::string("+-*/^()=,.").find(c) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, c), pos});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Token::End, "", {line, col}});
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(const std::string& text, const ParseOptions& options) : toks_(tokenize(text)), opts_(options) {}

  Formula formula() {
    Formula f = parseDisj();
    expectEnd();
    return f;
  }

  OmegaPoly poly() {
    OmegaPoly p = parseSum();
    expectEnd();
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(idx_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }
  bool isOp(const std::string& op, std::size_t ahead = 0) const {
    return peek(ahead).type == Token::Op && peek(ahead).text == op;
  }
  bool isWord(const std::string& w, std::size_t ahead = 0) const {
    return peek(ahead).type == Token::Ident && peek(ahead).text == w;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.pos.line, at.pos.column);
  }
  void expectOp(const std::string& op) {
    if (!isOp(op)) fail("expected '" + op + "'", peek());
    next();
  }
  void expectWord(const std::string& w) {
    if (!isWord(w)) fail("expected '" + w + "'", peek());
    next();
  }
  void expectEnd() {
    if (peek().type != Token::End) fail("unexpected '" + peek().text + "'", peek());
  }

  Formula parseDisj() {
    SourcePos pos = peek().pos;
    std::vector<Formula> parts{parseConj()};
    while (isWord("or")) {
      next();
      parts.push_back(parseConj());
    }
    return parts.size() == 1 ? parts[0] : disj(std::move(parts), pos);
  }

  Formula parseConj() {
    SourcePos pos = peek().pos;
    std::vector<Formula> parts{parseLit()};
    while (isWord("and")) {
      next();
      parts.push_back(parseLit());
    }
    return parts.size() == 1 ? parts[0] : conj(std::move(parts), pos);
  }

  // After the parenthesis at idx_, does an arithmetic or comparison operator
  // follow the matching ')'? Then the group is a polynomial, not a formula.
  bool groupIsPolynomial() const {
    int depth = 0;
    for (std::size_t k = idx_; k < toks_.size(); ++k) {
      if (toks_[k].type == Token::End) return false;
      if (toks_[k].type != Token::Op) continue;
      if (toks_[k].text == "(") ++depth;
      if (toks_[k].text == ")" && --depth == 0) {
        const Token& after = toks_[std::min(k + 1, toks_.size() - 1)];
        return after.type == Token::Op && std::string("+-*/^=!=").find(after.text) != std::string::npos &&
               after.text != "(" && after.text != ")";
      }
    }
    return false;
  }

  Formula parseLit() {
    const Token& t = peek();
    if (isWord("not")) {
      next();
      return negate(parseLit(), t.pos);
    }
    if (isWord("exists") || isWord("forall")) return parseQuantifier();
    if (isOp("(") && !groupIsPolynomial()) {
      next();
      Formula f = parseDisj();
      expectOp(")");
      return f;
    }
    if (isWord("U") && isOp("(", 1)) {
      next();
      next();
      OmegaPoly p = parseSum();
      expectOp(")");
      return inU(p, t.pos);
    }
    OmegaPoly lhs = parseSum();
    if (isOp("=")) {
      next();
      return eq(lhs - parseSum(), t.pos);
    }
    if (isOp("!=")) {
      next();
      return neq(lhs - parseSum(), t.pos);
    }
    fail("expected '=' or '!='", peek());
  }

  Formula parseQuantifier() {
    const Token& q = next();
    std::vector<std::string> vars;
    while (true) {
      const Token& v = peek();
      if (v.type != Token::Ident || kKeywords.count(v.text) || tVarIndex(v.text) >= 0)
        fail("expected a variable name", v);
      if (std::find(vars.begin(), vars.end(), v.text) != vars.end() || isBound(v.text))
        fail("variable '" + v.text + "' is already bound", v);
      vars.push_back(v.text);
      next();
      if (isOp(",")) {
        next();
        continue;
      }
      if (peek().type == Token::Ident && !isWord("in")) continue;
      break;
    }
    bool overU = false;
    if (isWord("in")) {
      next();
      expectWord("U");
      overU = true;
    }
    expectOp(".");
    scopes_.push_back(vars);
    Formula body = parseDisj();
    scopes_.pop_back();
    Kind kind = q.text == "forall" ? Kind::Forall : (overU ? Kind::ExistsU : Kind::Exists);
    // forall ... in U keeps its U marker in the bound list.
    if (kind == Kind::Forall && overU) vars.insert(vars.begin(), "U");
    return make(kind, {}, {body}, vars, q.pos);
  }

  bool isBound(const std::string& name) const {
    for (const auto& s : scopes_)
      if (std::find(s.begin(), s.end(), name) != s.end()) return true;
    return false;
  }

  OmegaPoly parseSum() {
    OmegaPoly acc = parseProduct();
    while (isOp("+") || isOp("-")) {
      bool minus = next().text == "-";
      OmegaPoly rhs = parseProduct();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  OmegaPoly parseProduct() {
    OmegaPoly acc = parseUnary();
    while (isOp("*") || isOp("/")) {
      const Token& op = next();
      const Token& at = peek();
      OmegaPoly rhs = parseUnary();
      if (op.text == "*") {
        acc = acc * rhs;
        continue;
      }
      if (!rhs.isConstant()) fail("division by an expression in variables", at);
      OmegaElement d = rhs.isZero() ? OmegaElement() : rhs.constantValue();
      if (d.isZero()) fail("division by zero", at);
      acc = acc * OmegaPoly::constant(d.inverse());
    }
    return acc;
  }

  OmegaPoly parseUnary() {
    if (isOp("-")) {
      next();
      return -parseUnary();
    }
    if (isOp("+")) {
      next();
      return parseUnary();
    }
    return parsePower();
  }

  OmegaPoly parsePower() {
    OmegaPoly base = parseAtom();
    if (isOp("^")) {
      next();
      const Token& e = peek();
      if (e.type != Token::Number) fail("expected a natural exponent", e);
      if (e.text.size() > 3 || std::stoi(e.text) > 64) fail("exponent too large", e);
      next();
      base = base.pow(static_cast<unsigned>(std::stoi(e.text)));
    }
    return base;
  }

  OmegaPoly parseAtom() {
    const Token& t = peek();
    if (t.type == Token::Number) {
      next();
      return OmegaPoly::constant(OmegaElement(Rat(mpq_class(mpz_class(t.text)))));
    }
    if (isOp("(")) {
      next();
      OmegaPoly p = parseSum();
      expectOp(")");
      return p;
    }
    if (t.type == Token::Ident) {
      if (kKeywords.count(t.text)) fail("unexpected keyword '" + t.text + "'", t);
      next();
      long gi = tVarIndex(t.text);
      if (gi >= 0) return OmegaPoly::constant(OmegaElement::generator(static_cast<std::size_t>(gi)));
      bool known = isBound(t.text) ||
                   std::find(opts_.params.begin(), opts_.params.end(), t.text) != opts_.params.end();
      if (!known && opts_.freeVars &&
          std::find(opts_.freeVars->begin(), opts_.freeVars->end(), t.text) == opts_.freeVars->end())
        fail("unbound variable '" + t.text + "'", t);
      return OmegaPoly::variable(t.text, {t.text});
    }
    if (t.type == Token::End) fail("unexpected end of input", t);
    fail("unexpected '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  const ParseOptions& opts_;
  std::vector<std::vector<std::string>> scopes_;
};

}  // namespace

Formula parse(const std::string& text, const ParseOptions& options) { return Parser(text, options).formula(); }

OmegaPoly parsePoly(const std::string& text, const ParseOptions& options) {
  return Parser(text, options).poly().canonicalVars();
}

OmegaElement parseOmega(const std::string& text) {
  ParseOptions opts;
  opts.freeVars = std::vector<std::string>{};
  OmegaPoly p = parsePoly(text, opts);
  return p.isZero() ? OmegaElement() : p.constantValue();
}

// ---------------------------------------------------------------- printing

std::string print(const Formula& f) {
  auto group = [](const Formula& c, bool parens) { return parens ? "(" + print(c) + ")" : print(c); };
  switch (f->kind) {
    case Kind::Eq:
      return f->poly.toString() + " = 0";
    case Kind::Neq:
      return f->poly.toString() + " != 0";
    case Kind::InU:
      return "U(" + f->poly.toString() + ")";
    case Kind::And:
    case Kind::Or: {
      std::string out;
      for (const auto& c : f->children) {
        bool parens = isQuantifier(c->kind) || c->kind == Kind::Or || (c->kind == Kind::And && f->kind == Kind::And);
        if (!out.empty()) out += f->kind == Kind::And ? " and " : " or ";
        out += group(c, parens);
      }
      return out;
    }
    case Kind::Not: {
      const auto& c = f->children[0];
      return "not " + group(c, !(isAtom(c->kind) || c->kind == Kind::Not));
    }
    case Kind::ExistsU:
    case Kind::Exists:
    case Kind::Forall: {
      std::vector<std::string> vars = f->vars;
      bool overU = f->kind == Kind::ExistsU;
      if (f->kind == Kind::Forall && !vars.empty() && vars[0] == "U") {
        vars.erase(vars.begin());
        overU = true;
      }
      std::string out = f->kind == Kind::Forall ? "forall " : "exists ";
      for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i];
      out += overU ? " in U. " : ". ";
      return out + print(f->children[0]);
    }
  }
  throw InvariantBreach("unknown formula kind");
}

// ---------------------------------------------------------------- traversal

namespace {

void collectFree(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  if (isAtom(f->kind)) {
    for (const auto& v : f->poly.usedVars())
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
    return;
  }
  std::size_t mark = bound.size();
  if (isQuantifier(f->kind)) bound.insert(bound.end(), f->vars.begin(), f->vars.end());
  for (const auto& c : f->children) collectFree(c, bound, out);
  bound.resize(mark);
}

void collectAllNames(const Formula& f, std::set<std::string>& out) {
  if (isAtom(f->kind))
    for (const auto& v : f->poly.usedVars()) out.insert(v);
  out.insert(f->vars.begin(), f->vars.end());
  for (const auto& c : f->children) collectAllNames(c, out);
}

Formula mapAtoms(const Formula& f, const std::function<OmegaPoly(const OmegaPoly&)>& g) {
  if (isAtom(f->kind)) return make(f->kind, canonical(g(f->poly)), {}, {}, f->pos);
  std::vector<Formula> kids;
  for (const auto& c : f->children) kids.push_back(mapAtoms(c, g));
  return make(f->kind, {}, std::move(kids), f->vars, f->pos);
}

OmegaPoly renameVar(const OmegaPoly& p, const std::string& from, const std::string& to) {
  std::vector<std::string> vars = p.vars();
  auto it = std::find(vars.begin(), vars.end(), from);
  if (it == vars.end()) return p;
  *it = to;
  std::vector<OmegaPoly::Term> terms(p.terms().begin(), p.terms().end());
  return OmegaPoly(vars, std::move(terms), p.order());
}

}  // namespace

std::vector<std::string> freeVariables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> names;
  collectFree(f, bound, names);
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(), naturalLess);
  return out;
}

Formula substituteParams(const Formula& f, const std::map<std::string, OmegaElement>& sigma,
                         const std::vector<std::string>& params) {
  auto free = freeVariables(f);
  for (const auto& p : params)
    if (std::find(free.begin(), free.end(), p) != free.end() && !sigma.count(p))
      throw MissingParameter("missing value for parameter '" + p + "'");
  if (sigma.empty()) return f;
  return mapAtoms(f, [&](const OmegaPoly& p) {
    OmegaPoly out = p;
    for (const auto& [name, value] : sigma)
      if (out.involves(name)) out = out.substitute(name, OmegaPoly::constant(value));
    return out;
  });
}

// ---------------------------------------------------------------- blocks

std::string BasicFormulaBlock::toString() const {
  std::vector<std::string> parts;
  if (!(p0.isConstant() && p0.constantValue() == OmegaElement(1))) parts.push_back(p0.toString() + " != 0");
  for (const auto& e : eqs) parts.push_back(e.toString() + " = 0");
  std::string body;
  for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? " and " : "") + parts[i];
  if (body.empty()) body = "true";
  if (boundVars.empty()) return body;
  std::string head = "exists ";
  for (std::size_t i = 0; i < boundVars.size(); ++i) head += (i ? ", " : "") + boundVars[i];
  return head + " in U. " + body;
}

BlockTree BlockTree::leaf(BasicFormulaBlock b) {
  BlockTree t;
  t.op = Op::Leaf;
  t.block = std::move(b);
  return t;
}

BlockTree BlockTree::node(Op op, std::vector<BlockTree> children) {
  BlockTree t;
  t.op = op;
  t.children = std::move(children);
  return t;
}

std::vector<const BasicFormulaBlock*> BlockTree::leaves() const {
  std::vector<const BasicFormulaBlock*> out;
  if (op == Op::Leaf) {
    out.push_back(&block);
    return out;
  }
  for (const auto& c : children) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string BlockTree::toString() const {
  switch (op) {
    case Op::Leaf:
      return "[" + block.toString() + "]";
    case Op::Not:
      return "not " + children[0].toString();
    case Op::And:
    case Op::Or: {
      if (children.empty()) return op == Op::And ? "true" : "false";
      std::string out = "(";
      for (std::size_t i = 0; i < children.size(); ++i)
        out += (i ? (op == Op::And ? " and " : " or ") : "") + children[i].toString();
      return out + ")";
    }
  }
  return "";
}

namespace {

struct Clause {
  std::vector<std::string> bound;
  std::vector<OmegaPoly> eqs;
  std::vector<OmegaPoly> neqs;
};

class BlockBuilder {
 public:
  BlockBuilder(const Formula& root, const BlockOptions& opts) : opts_(opts) {
    collectAllNames(root, used_);
    free_ = opts.freeVars ? *opts.freeVars : freeVariables(root);
    used_.insert(free_.begin(), free_.end());
  }

  BlockTree translate(const Formula& f) {
    if (isRingQF(f)) return fromClauses(dnf(f, false), {});
    switch (f->kind) {
      case Kind::InU: {
        std::string y = fresh("y");
        OmegaPoly yv = OmegaPoly::variable(y, {y});
        return fromClauses({Clause{{y}, {f->poly - yv}, {}}}, {});
      }
      case Kind::ExistsU:
        return fromClauses(dnf(f->children[0], false), f->vars);
      case Kind::And:
      case Kind::Or: {
        std::vector<BlockTree> kids;
        for (const auto& c : f->children) kids.push_back(translate(c));
        return BlockTree::node(f->kind == Kind::And ? BlockTree::Op::And : BlockTree::Op::Or, std::move(kids));
      }
      case Kind::Not:
        return BlockTree::node(BlockTree::Op::Not, {translate(f->children[0])});
      default:
        throw UnsupportedShape("unsupported shape: quantifier outside the U-existential fragment in '" +
                               print(f) + "'");
    }
  }

 private:
  static bool isRingQF(const Formula& f) {
    if (f->kind == Kind::Eq || f->kind == Kind::Neq) return true;
    if (f->kind != Kind::And && f->kind != Kind::Or && f->kind != Kind::Not) return false;
    return std::all_of(f->children.begin(), f->children.end(), isRingQF);
  }

  std::string fresh(const std::string& base) {
    for (std::size_t k = 1;; ++k) {
      std::string name = base + "_" + std::to_string(k);
      if (used_.insert(name).second) return name;
    }
  }

  void checkBudget(std::size_t n) const {
    if (n > opts_.clauseBudget)
      throw BudgetExceeded("DNF exceeds the clause budget of " + std::to_string(opts_.clauseBudget));
  }

  std::vector<Clause> dnf(const Formula& f, bool negated) {
    switch (f->kind) {
      case Kind::Eq:
      case Kind::Neq: {
        bool isEq = (f->kind == Kind::Eq) != negated;
        Clause c;
        (isEq ? c.eqs : c.neqs).push_back(f->poly);
        return {c};
      }
      case Kind::Not:
        return dnf(f->children[0], !negated);
      case Kind::And:
      case Kind::Or: {
        bool product = (f->kind == Kind::And) != negated;
        std::vector<Clause> acc;
        if (product) acc.push_back(Clause{});
        for (const auto& c : f->children) {
          auto sub = dnf(c, negated);
          if (!product) {
            acc.insert(acc.end(), sub.begin(), sub.end());
            checkBudget(acc.size());
            continue;
          }
          checkBudget(acc.size() * sub.size());
          std::vector<Clause> next;
          for (const auto& a : acc) {
            for (const auto& b : sub) {
              Clause m = a;
              m.bound.insert(m.bound.end(), b.bound.begin(), b.bound.end());
              m.eqs.insert(m.eqs.end(), b.eqs.begin(), b.eqs.end());
              m.neqs.insert(m.neqs.end(), b.neqs.begin(), b.neqs.end());
              next.push_back(std::move(m));
            }
          }
          acc = std::move(next);
        }
        return acc;
      }
      case Kind::InU: {
        if (negated) throw UnsupportedShape("unsupported shape: negated U inside a quantifier in 'not " + print(f) + "'");
        std::string y = fresh("y");
        return {Clause{{y}, {f->poly - OmegaPoly::variable(y, {y})}, {}}};
      }
      case Kind::ExistsU: {
        if (negated)
          throw UnsupportedShape("unsupported shape: negated existsU inside a quantifier in 'not (" + print(f) + ")'");
        // Positive nested block: merge its variables into the outer prefix.
        Formula body = f->children[0];
        std::vector<std::string> renamed;
        for (const auto& v : f->vars) {
          std::string n = fresh(v);
          renamed.push_back(n);
          body = mapAtoms(body, [&](const OmegaPoly& p) { return renameVar(p, v, n); });
        }
        auto sub = dnf(body, false);
        for (auto& c : sub) c.bound.insert(c.bound.begin(), renamed.begin(), renamed.end());
        return sub;
      }
      default:
        throw UnsupportedShape("unsupported shape: quantifier outside the U-existential fragment in '" +
                               print(f) + "'");
    }
  }

  std::optional<BasicFormulaBlock> toBlock(const Clause& c, std::vector<std::string> bound) {
    BasicFormulaBlock b;
    b.freeVars = free_;
    bound.insert(bound.end(), c.bound.begin(), c.bound.end());
    b.boundVars = bound;
    std::vector<std::string> all = free_;
    all.insert(all.end(), bound.begin(), bound.end());
    auto place = [&](const OmegaPoly& p) {
      try {
        return p.withVars(all);
      } catch (const DimensionError&) {
        throw UnsupportedShape("unsupported shape: polynomial " + p.toString() +
                               " uses a variable outside the declared free variables");
      }
    };
    OmegaPoly p0 = OmegaPoly::constant(OmegaElement(1), all);
    for (const auto& q : c.neqs) p0 = p0 * place(q);
    if (p0.isZero()) return std::nullopt;
    b.p0 = p0;
    for (const auto& e : c.eqs) {
      if (e.isZero()) continue;
      if (e.isConstant()) return std::nullopt;
      b.eqs.push_back(place(e));
    }
    return b;
  }

  BlockTree fromClauses(const std::vector<Clause>& clauses, const std::vector<std::string>& vars) {
    std::vector<BlockTree> leaves;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      Clause c = clauses[i];
      std::vector<std::string> bound = vars;
      if (clauses.size() > 1 && !vars.empty()) {
        // Each disjunct gets its own copy of the bound variables.
        for (auto& v : bound) {
          std::string n = fresh(v);
          for (auto& e : c.eqs) e = renameVar(e, v, n);
          for (auto& e : c.neqs) e = renameVar(e, v, n);
          v = n;
        }
      }
      if (auto b = toBlock(c, bound)) leaves.push_back(BlockTree::leaf(std::move(*b)));
    }
    if (leaves.size() == 1) return leaves[0];
    return BlockTree::node(BlockTree::Op::Or, std::move(leaves));
  }

  const BlockOptions& opts_;
  std::set<std::string> used_;
  std::vector<std::string> free_;
};

}  // namespace

BlockTree toBlocks(const Formula& f, const BlockOptions& options) { return BlockBuilder(f, options).translate(f); }

}  // namespace pairtopo::formulas
