#include "iol/tptp.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace iol::tptp {

namespace {

enum class Tok {
  end,
  lower_word,
  upper_word,
  single_quoted,
  dollar_word,         // $true, $false, ...
  dollar_dollar_word,  // $$iol, $$norm, $$out1, ...
  lparen,
  rparen,
  lbracket,
  rbracket,
  lbrace,
  rbrace,
  comma,
  period,
  at,
  number,
  identity,  // ==
  tilde,
  ampersand,
  vline,
  implies,      // =>
  backimplies,  // <=
  iff,          // <=>
  bang,
  question,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& source)
      : text_(text), source_(source) {}

  Token next() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.column = column_;
    if (at_end()) return t;
    char c = peek();
    if (c == '(') return take(t, Tok::lparen);
    if (c == ')') return take(t, Tok::rparen);
    if (c == '[') return take(t, Tok::lbracket);
    if (c == ']') return take(t, Tok::rbracket);
    if (c == '{') return take(t, Tok::lbrace);
    if (c == '}') return take(t, Tok::rbrace);
    if (c == ',') return take(t, Tok::comma);
    if (c == '.') return take(t, Tok::period);
    if (c == '@') return take(t, Tok::at);
    if (c == '~') return take(t, Tok::tilde);
    if (c == '&') return take(t, Tok::ampersand);
    if (c == '|') return take(t, Tok::vline);
    if (c == '!') return take(t, Tok::bang);
    if (c == '?') return take(t, Tok::question);
    if (c == '=') {
      advance();
      if (!at_end() && peek() == '>') return take(t, Tok::implies);
      if (!at_end() && peek() == '=') return take(t, Tok::identity);
      fail(t, "stray '='");
    }
    if (c == '<') {
      advance();
      if (!at_end() && peek() == '=') {
        advance();
        if (!at_end() && peek() == '>') return take(t, Tok::iff);
        t.kind = Tok::backimplies;
        return t;
      }
      fail(t, "stray '<'");
    }
    if (c == '\'') {
      advance();
      std::string content;
      while (!at_end() && peek() != '\'') {
        if (peek() == '\\') advance();
        if (at_end()) break;
        content.push_back(peek());
        advance();
      }
      if (at_end()) fail(t, "unterminated quoted atom");
      advance();
      t.kind = Tok::single_quoted;
      t.text = content;
      return t;
    }
    if (c == '$') {
      advance();
      bool doubled = !at_end() && peek() == '$';
      if (doubled) advance();
      std::string word = read_word();
      if (word.empty()) fail(t, "stray '$'");
      t.kind = doubled ? Tok::dollar_dollar_word : Tok::dollar_word;
      t.text = (doubled ? "$$" : "$") + word;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      t.kind = Tok::number;
      t.text = read_number();
      if (t.text == "-") fail(t, "stray '-'");
      return t;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Tok::lower_word;
      t.text = read_word();
      return t;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      t.kind = Tok::upper_word;
      t.text = read_word();
      return t;
    }
    fail(t, std::string("unexpected character '") + c + "'");
    return t;  // unreachable
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    std::ostringstream os;
    os << source_ << ":" << at.line << ":" << at.column << ": " << message;
    throw ParseError(os.str(), at.line, at.column);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  Token take(Token t, Tok kind) {
    advance();
    t.kind = kind;
    return t;
  }

  std::string read_word() {
    std::string w;
    while (!at_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        w.push_back(c);
        advance();
      } else {
        break;
      }
    }
    return w;
  }

  std::string read_number() {
    std::string w;
    if (!at_end() && peek() == '-') {
      w.push_back('-');
      advance();
    }
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '.')) {
      w.push_back(peek());
      advance();
    }
    return w;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        Token start;
        start.line = line_;
        start.column = column_;
        advance();
        advance();
        while (true) {
          if (at_end()) fail(start, "unterminated block comment");
          if (peek() == '*' && pos_ + 1 < text_.size() &&
              text_[pos_ + 1] == '/') {
            advance();
            advance();
            break;
          }
          advance();
        }
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  const std::string& source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_binary(Tok k) {
  return k == Tok::ampersand || k == Tok::vline || k == Tok::implies ||
         k == Tok::backimplies || k == Tok::iff;
}

class Parser {
 public:
  Parser(std::string_view text, std::string source_name)
      : source_(std::move(source_name)), lexer_(text, source_) {
    current_ = lexer_.next();
  }

  Problem parse() {
    Problem problem;
    problem.source_name = source_;
    bool have_spec = false;
    while (current_.kind != Tok::end) {
      if (current_.kind == Tok::lower_word && current_.text == "include")
        fail("include directives are not supported");
      if (current_.kind != Tok::lower_word || current_.text != "tff")
        fail("expected annotated formula 'tff(...)'");
      advance();
      expect(Tok::lparen, "'('");
      std::string name = parse_name();
      expect(Tok::comma, "','");
      Token role_tok = current_;
      std::string role = parse_name();
      expect(Tok::comma, "','");
      if (role == "logic") {
        if (have_spec)
          fail_at(role_tok, "duplicate logic specification");
        have_spec = true;
        problem.spec = parse_logic_spec(problem);
      } else if (role == "axiom") {
        parse_norm(problem, name);
      } else if (role == "hypothesis") {
        problem.input.insert(parse_payload_formula(problem));
      } else if (role == "conjecture") {
        bool duplicate = std::any_of(
            problem.conjectures.begin(), problem.conjectures.end(),
            [&](const auto& c) { return c.first == name; });
        if (duplicate)
          problem.warnings.push_back(
              "duplicate conjecture name '" + name +
              "'; statuses are reported in file order");
        problem.conjectures.emplace_back(name, parse_payload_formula(problem));
      } else {
        fail_at(role_tok, "unknown role '" + role + "'");
      }
      // Optional source and annotations fields are skipped unread.
      while (current_.kind == Tok::comma) {
        advance();
        skip_general_term();
      }
      expect(Tok::rparen, "')'");
      expect(Tok::period, "'.'");
    }
    if (!have_spec) fail("missing logic specification");
    finalize(problem);
    return problem;
  }

  Formula parse_single_formula(AtomTable& atoms) {
    Formula f = parse_formula(atoms);
    if (current_.kind != Tok::end) fail("trailing input after formula");
    return f;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message) const {
    lexer_.fail(current_, message);
  }

  [[noreturn]] void fail_at(const Token& t, const std::string& message) const {
    lexer_.fail(t, message);
  }

  void expect(Tok kind, const std::string& what) {
    if (current_.kind != kind) fail("expected " + what);
    advance();
  }

  std::string parse_name() {
    if (current_.kind != Tok::lower_word &&
        current_.kind != Tok::single_quoted && current_.kind != Tok::number)
      fail("expected a name");
    std::string name = current_.text;
    advance();
    return name;
  }

  // --- classical formulas ------------------------------------------------

  Formula parse_formula(AtomTable& atoms) {
    Formula lhs = parse_unitary(atoms);
    if (!is_binary(current_.kind)) return lhs;
    Tok op = current_.kind;
    if (op == Tok::ampersand || op == Tok::vline) {
      while (current_.kind == op) {
        advance();
        Formula rhs = parse_unitary(atoms);
        lhs = op == Tok::ampersand ? Formula::conjunction(lhs, rhs)
                                   : Formula::disjunction(lhs, rhs);
      }
    } else {
      advance();
      Formula rhs = parse_unitary(atoms);
      if (op == Tok::implies) lhs = Formula::implication(lhs, rhs);
      if (op == Tok::backimplies) lhs = Formula::implication(rhs, lhs);
      if (op == Tok::iff) lhs = Formula::equivalence(lhs, rhs);
    }
    if (is_binary(current_.kind))
      fail("binary connectives do not associate; parenthesize explicitly");
    return lhs;
  }

  Formula parse_unitary(AtomTable& atoms) {
    switch (current_.kind) {
      case Tok::tilde:
        advance();
        return Formula::negation(parse_unitary(atoms));
      case Tok::lparen: {
        advance();
        Formula f = parse_formula(atoms);
        expect(Tok::rparen, "')'");
        return f;
      }
      case Tok::dollar_word: {
        std::string w = current_.text;
        advance();
        if (w == "$true") return Formula::top();
        if (w == "$false") return Formula::bottom();
        fail("unknown defined constant '" + w + "'");
      }
      case Tok::lower_word:
      case Tok::single_quoted: {
        Token t = current_;
        std::string name = current_.text;
        advance();
        if (current_.kind == Tok::lparen)
          fail_at(t, "unsupported fragment: terms with arguments");
        if (!AtomTable::is_lower_word(name))
          fail_at(t, "atom name is not a lower word: '" + name + "'");
        return Formula::atom(atoms.intern(name));
      }
      case Tok::bang:
      case Tok::question:
        fail("unsupported fragment: quantifiers");
      case Tok::upper_word:
        fail("unsupported fragment: variables");
      case Tok::lbrace:
        fail("norm payload outside an axiom");
      default:
        fail("expected a formula");
    }
  }

  // --- payloads ------------------------------------------------------------

  Formula parse_payload_formula(Problem& problem) {
    return parse_formula(problem.atoms);
  }

  void parse_norm(Problem& problem, const std::string& name) {
    int wrapped = 0;
    while (current_.kind == Tok::lparen) {
      advance();
      ++wrapped;
    }
    if (current_.kind != Tok::lbrace)
      fail("role axiom requires a norm payload '{$$norm} @ (body, head)'");
    advance();
    if (current_.kind != Tok::dollar_dollar_word || current_.text != "$$norm")
      fail("expected '$$norm'");
    advance();
    expect(Tok::rbrace, "'}'");
    expect(Tok::at, "'@'");
    expect(Tok::lparen, "'('");
    Formula body = parse_formula(problem.atoms);
    expect(Tok::comma, "','");
    Formula head = parse_formula(problem.atoms);
    expect(Tok::rparen, "')'");
    while (wrapped-- > 0) expect(Tok::rparen, "')'");
    try {
      problem.norms.add(Norm{name, body, head});
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  LogicSpec parse_logic_spec(Problem& problem) {
    int wrapped = 0;
    while (current_.kind == Tok::lparen) {
      advance();
      ++wrapped;
    }
    if (current_.kind != Tok::dollar_dollar_word || current_.text != "$$iol")
      fail("expected logic specification '$$iol == [...]'");
    advance();
    expect(Tok::identity, "'=='");
    expect(Tok::lbracket, "'['");

    std::optional<OutputOperator> op;
    bool throughput = false;
    std::optional<Aggregation> constrained;
    std::optional<ConstraintSpec> constraints;
    std::optional<PreferenceRelation> preference;

    while (true) {
      if (current_.kind != Tok::dollar_dollar_word)
        fail("expected a '$$'-keyed entry in the logic specification");
      Token key_tok = current_;
      std::string key = current_.text;
      advance();
      expect(Tok::identity, "'=='");
      if (key == "$$operator") {
        if (op) fail_at(key_tok, "duplicate $$operator entry");
        op = parse_operator();
      } else if (key == "$$throughput") {
        // An empty value means the default (no throughput).
        if (current_.kind == Tok::dollar_word) {
          if (current_.text == "$true") throughput = true;
          else if (current_.text == "$false") throughput = false;
          else fail("expected $true or $false");
          advance();
        } else if (current_.kind != Tok::comma &&
                   current_.kind != Tok::rbracket) {
          fail("expected $true or $false");
        }
      } else if (key == "$$constrained") {
        if (current_.kind == Tok::dollar_dollar_word) {
          if (current_.text == "$$credulous") constrained = Aggregation::credulous;
          else if (current_.text == "$$skeptical") constrained = Aggregation::skeptical;
          else fail("expected $$credulous or $$skeptical");
          advance();
        } else if (current_.kind != Tok::comma &&
                   current_.kind != Tok::rbracket) {
          fail("expected $$credulous or $$skeptical");
        }
      } else if (key == "$$constraints") {
        if (constraints) fail_at(key_tok, "duplicate $$constraints entry");
        constraints = parse_constraints(problem);
      } else if (key == "$$preference") {
        if (preference) fail_at(key_tok, "duplicate $$preference entry");
        preference = parse_preference();
      } else {
        fail_at(key_tok, "unknown logic specification entry '" + key + "'");
      }
      if (current_.kind == Tok::comma) {
        advance();
        continue;
      }
      break;
    }
    expect(Tok::rbracket, "']'");
    while (wrapped-- > 0) expect(Tok::rparen, "')'");

    if (!op) fail("logic specification is missing $$operator");
    LogicSpec spec;
    spec.op = *op;
    spec.op.throughput = throughput;
    spec.constrained = constrained;
    if (constraints) spec.constraints = std::move(*constraints);
    if (preference) spec.preference = std::move(*preference);
    return spec;
  }

  OutputOperator parse_operator() {
    if (current_.kind != Tok::dollar_dollar_word)
      fail("expected an output operator $$out1..$$out4");
    OutputOperator op;
    if (current_.text == "$$out1") op.base = BaseOperator::out1;
    else if (current_.text == "$$out2") op.base = BaseOperator::out2;
    else if (current_.text == "$$out3") op.base = BaseOperator::out3;
    else if (current_.text == "$$out4") op.base = BaseOperator::out4;
    else fail("unknown output operator '" + current_.text + "'");
    advance();
    return op;
  }

  ConstraintSpec parse_constraints(Problem& problem) {
    if (current_.kind == Tok::dollar_dollar_word && current_.text == "$$input") {
      advance();
      return ConstraintSpec::input_marker();
    }
    expect(Tok::lbracket, "'[' or $$input");
    FormulaSet fs;
    if (current_.kind != Tok::rbracket) {
      while (true) {
        fs.insert(parse_formula(problem.atoms));
        if (current_.kind != Tok::comma) break;
        advance();
      }
    }
    expect(Tok::rbracket, "']'");
    return ConstraintSpec::explicit_set(std::move(fs));
  }

  PreferenceRelation parse_preference() {
    expect(Tok::lbracket, "'['");
    std::vector<std::vector<std::string>> tiers;
    if (current_.kind != Tok::rbracket) {
      while (true) {
        if (current_.kind == Tok::lbracket) {
          advance();
          std::vector<std::string> tier;
          while (true) {
            tier.push_back(parse_name());
            if (current_.kind != Tok::comma) break;
            advance();
          }
          expect(Tok::rbracket, "']'");
          tiers.push_back(std::move(tier));
        } else {
          tiers.push_back({parse_name()});
        }
        if (current_.kind != Tok::comma) break;
        advance();
      }
    }
    expect(Tok::rbracket, "']'");
    try {
      return PreferenceRelation(std::move(tiers));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  // Skips one balanced source/annotations field.
  void skip_general_term() {
    int depth = 0;
    while (true) {
      if (current_.kind == Tok::end) fail("unterminated annotated formula");
      if (depth == 0 &&
          (current_.kind == Tok::comma || current_.kind == Tok::rparen))
        return;
      if (current_.kind == Tok::lparen || current_.kind == Tok::lbracket)
        ++depth;
      if (current_.kind == Tok::rparen || current_.kind == Tok::rbracket)
        --depth;
      advance();
    }
  }

  void finalize(Problem& problem) {
    LogicSpec& spec = problem.spec;
    if (!spec.constrained) {
      bool had_constraints =
          spec.constraints.same_as_input || !spec.constraints.formulas.empty();
      if (had_constraints) {
        problem.warnings.push_back(
            "$$constraints has no effect without $$constrained; ignored");
        spec.constraints = {};
      }
      if (!spec.preference.empty()) {
        problem.warnings.push_back(
            "$$preference has no effect without $$constrained; ignored");
        spec.preference = {};
      }
    }
    try {
      spec.preference.validate(problem.norms);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::string source_;
  Lexer lexer_;
  Token current_;
};

}  // namespace

Problem parse_problem(std::string_view text, std::string source_name) {
  return Parser(text, std::move(source_name)).parse();
}

Formula parse_formula_text(std::string_view text, AtomTable& atoms) {
  Parser p(text, "<formula>");
  return p.parse_single_formula(atoms);
}

}  // namespace iol::tptp
