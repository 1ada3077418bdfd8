#include "boolinv/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace boolinv::io {
namespace {

struct Token {
  enum class Kind { word, symbol, end };
  Kind kind;
  std::string text;
  std::size_t column;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~';
}

// Tokenizes one statement; columns are 1-based positions on the source line.
std::vector<Token> tokenize(std::string_view stmt, std::size_t line, std::size_t col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < stmt.size()) {
    const char c = stmt[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (is_word_char(c)) {
      std::size_t j = i;
      while (j < stmt.size() && is_word_char(stmt[j])) ++j;
      out.push_back({Token::Kind::word, std::string(stmt.substr(i, j - i)), col0 + i});
      i = j;
    } else if (c == '+' || c == '*' || c == '=' || c == '^' || c == ':' || c == ',') {
      out.push_back({Token::Kind::symbol, std::string(1, c), col0 + i});
      ++i;
    } else {
      throw ParseError(line, col0 + i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::end, "", col0 + stmt.size()});
  return out;
}

bool is_identifier(const std::string& s) {
  return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_');
}

class Cursor {
 public:
  Cursor(std::vector<Token> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(const char* symbol) {
    if (peek().kind == Token::Kind::symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const char* symbol) {
    if (!accept(symbol)) fail(peek(), std::string("expected '") + symbol + "'");
  }
  void expect_end() {
    if (peek().kind != Token::Kind::end) fail(peek(), "unexpected '" + peek().text + "'");
  }
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(line_, at.column, message);
  }
  std::size_t line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

Anf parse_anf(Cursor& cur, const VarTable& vars, const Universe& universe) {
  std::vector<Monomial> monomials;
  do {
    Monomial m;
    bool zero = false;
    do {
      const Token& t = cur.next();
      if (t.kind != Token::Kind::word) cur.fail(t, "expected a variable, 0 or 1");
      if (t.text == "1") continue;
      if (t.text == "0") {
        zero = true;
        continue;
      }
      if (!is_identifier(t.text)) cur.fail(t, "malformed token '" + t.text + "'");
      auto v = vars.find(t.text);
      if (!v) cur.fail(t, "undeclared variable '" + t.text + "'");
      m.push_back(*v);
    } while (cur.accept("*"));
    if (!zero) monomials.push_back(std::move(m));
  } while (cur.accept("+"));
  cur.expect_end();
  return Anf::from_monomials(std::move(monomials), universe);
}

std::uint32_t parse_hex(Cursor& cur, const Token& t) {
  std::string digits = t.text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) digits = digits.substr(2);
  if (digits.empty() || digits.size() > 8) cur.fail(t, "bad hex coefficient '" + t.text + "'");
  std::uint32_t value = 0;
  for (char c : digits) {
    if (!std::isxdigit(static_cast<unsigned char>(c))) cur.fail(t, "bad hex coefficient '" + t.text + "'");
    value = value * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c))
                                                        ? c - '0'
                                                        : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
  }
  return value;
}

std::size_t parse_decimal(Cursor& cur, const Token& t, std::size_t max) {
  if (t.kind != Token::Kind::word || t.text.empty() || t.text.size() > 9) cur.fail(t, "expected a number");
  std::size_t value = 0;
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) cur.fail(t, "expected a number");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  if (value > max) cur.fail(t, "number " + t.text + " is too large");
  return value;
}

constexpr std::size_t kMaxPolyDegree = 1U << 20;

struct Builder {
  std::optional<VarTable> vars;
  std::optional<std::size_t> vars_line;
  enum class Kind { unknown, map, system, poly } kind = Kind::unknown;
  std::size_t kind_line = 0;

  std::vector<std::string> targets;
  std::set<std::string> target_set;
  std::vector<Anf> equations;

  std::optional<gf2n::FieldSpec> field;
  std::optional<gf2n::UniPoly> poly;

  void set_kind(Kind k, Cursor& cur, const Token& at) {
    if (kind != Kind::unknown && kind != k) {
      cur.fail(at, "a file holds exactly one problem kind (first fixed on line " +
                       std::to_string(kind_line) + ")");
    }
    if (kind == Kind::unknown) kind_line = cur.line();
    kind = k;
  }

  void vars_statement(Cursor& cur, const Token& head) {
    if (vars) cur.fail(head, "duplicate vars declaration (first on line " + std::to_string(*vars_line) + ")");
    VarTable table;
    while (cur.peek().kind != Token::Kind::end) {
      const Token& t = cur.next();
      if (t.kind == Token::Kind::symbol && t.text == ",") continue;
      if (t.kind != Token::Kind::word || !is_identifier(t.text)) cur.fail(t, "expected a variable name");
      if (table.find(t.text)) cur.fail(t, "variable '" + t.text + "' declared twice");
      table.add(t.text);
    }
    vars = std::move(table);
    vars_line = cur.line();
  }

  void field_statement(Cursor& cur, const Token& head) {
    set_kind(Kind::poly, cur, head);
    if (field) cur.fail(head, "duplicate field declaration");
    std::optional<unsigned> n;
    std::optional<std::uint32_t> modulus;
    const Token* modulus_token = nullptr;
    while (cur.peek().kind != Token::Kind::end) {
      const Token& key = cur.next();
      if (key.kind == Token::Kind::symbol && key.text == ",") continue;
      cur.expect("=");
      const Token& value = cur.next();
      if (key.text == "n") {
        n = static_cast<unsigned>(parse_decimal(cur, value, 64));
      } else if (key.text == "modulus") {
        if (value.kind != Token::Kind::word || value.text.size() > 32 ||
            value.text.find_first_not_of("01") != std::string::npos) {
          cur.fail(value, "modulus must be a binary coefficient string such as 1011");
        }
        modulus = static_cast<std::uint32_t>(std::stoul(value.text, nullptr, 2));
        modulus_token = &value;
      } else {
        cur.fail(key, "unknown field key '" + key.text + "'");
      }
    }
    if (!n) cur.fail(head, "field declaration needs n=<degree>");
    try {
      field = modulus ? gf2n::FieldSpec(*n, *modulus) : gf2n::FieldSpec::with_default_modulus(*n);
    } catch (const std::invalid_argument& e) {
      cur.fail(modulus_token ? *modulus_token : head, e.what());
    }
  }

  void poly_statement(Cursor& cur, const Token& head) {
    set_kind(Kind::poly, cur, head);
    if (poly) cur.fail(head, "duplicate poly line");
    if (!field) cur.fail(head, "poly needs a preceding field declaration");
    std::vector<std::uint32_t> coeffs;
    do {
      const Token& first = cur.next();
      if (first.kind != Token::Kind::word) cur.fail(first, "expected a coefficient or X");
      std::uint32_t coeff = 1;
      const Token* x = &first;
      if (first.text != "X") {
        coeff = parse_hex(cur, first);
        if (coeff >= field->order()) cur.fail(first, "coefficient " + first.text + " does not fit the field");
        if (!cur.accept("*")) {
          x = nullptr;
        } else {
          x = &cur.next();
          if (x->text != "X") cur.fail(*x, "expected X");
        }
      }
      std::size_t exponent = 0;
      if (x) {
        exponent = 1;
        if (cur.accept("^")) exponent = parse_decimal(cur, cur.next(), kMaxPolyDegree);
      }
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
      coeffs[exponent] ^= coeff;
    } while (cur.accept("+"));
    cur.expect_end();
    poly = gf2n::UniPoly(*field, std::move(coeffs));
  }

  void equation(Cursor& cur) {
    const Token& lhs = cur.next();
    if (lhs.kind != Token::Kind::word) cur.fail(lhs, "expected an equation target or a keyword");
    cur.expect("=");
    if (!vars) cur.fail(lhs, "equations need a preceding vars declaration");
    if (lhs.text == "0") {
      set_kind(Kind::system, cur, lhs);
      equations.push_back(parse_anf(cur, *vars, vars->universe()) ^ true);
      return;
    }
    if (!is_identifier(lhs.text)) cur.fail(lhs, "equation target must be 0 or an output name");
    set_kind(Kind::map, cur, lhs);
    if (vars->find(lhs.text)) cur.fail(lhs, "output '" + lhs.text + "' clashes with an input variable");
    if (!target_set.insert(lhs.text).second) cur.fail(lhs, "duplicate equation target '" + lhs.text + "'");
    targets.push_back(lhs.text);
    equations.push_back(parse_anf(cur, *vars, vars->universe()));
  }

  void statement(std::string_view stmt, std::size_t line, std::size_t col0) {
    Cursor cur(tokenize(stmt, line, col0), line);
    const Token& head = cur.peek();
    if (head.kind == Token::Kind::end) return;
    if (head.kind == Token::Kind::word &&
        (head.text == "vars" || head.text == "field" || head.text == "poly")) {
      const Token keyword = cur.next();
      if (cur.accept(":")) {
        if (keyword.text == "vars") {
          vars_statement(cur, keyword);
        } else if (keyword.text == "field") {
          field_statement(cur, keyword);
        } else {
          poly_statement(cur, keyword);
        }
        return;
      }
      cur = Cursor(tokenize(stmt, line, col0), line);
    }
    equation(cur);
  }

  Problem finish() const {
    switch (kind) {
      case Kind::map: {
        const auto& names = vars->names();
        return BoolMap(names.size(), equations, names, targets);
      }
      case Kind::system:
        return SystemProblem{*vars, BoolSystem(equations, vars->universe())};
      case Kind::poly:
        if (!poly) throw ParseError(kind_line, 1, "field declared without a poly line");
        return *poly;
      case Kind::unknown:
        break;
    }
    throw ParseError(1, 1, "no equations or polynomial found");
  }
};

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string binary(std::uint32_t v) {
  std::string out;
  for (; v != 0; v >>= 1) out.insert(out.begin(), (v & 1U) ? '1' : '0');
  return out.empty() ? "0" : out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

}  // namespace

bool SystemProblem::operator==(const SystemProblem& other) const {
  return vars == other.vars && system.universe == other.system.universe &&
         system.factors == other.system.factors;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

Problem parse_problem(std::string_view text) {
  Builder b;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t seg = 0;
    while (seg <= line.size()) {
      std::size_t semi = line.find(';', seg);
      if (semi == std::string_view::npos) semi = line.size();
      b.statement(line.substr(seg, semi - seg), line_no, seg + 1);
      seg = semi + 1;
    }
    start = end + 1;
  }
  return b.finish();
}

Problem read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string print_problem(const Problem& problem) {
  std::ostringstream os;
  if (const auto* map = std::get_if<BoolMap>(&problem)) {
    const VarTable table = map->input_table();
    os << "vars: " << join_names(map->input_names()) << '\n';
    for (std::size_t i = 0; i < map->m_out(); ++i) {
      os << map->output_names()[i] << " = " << to_string(map->coords()[i], table) << '\n';
    }
  } else if (const auto* sys = std::get_if<SystemProblem>(&problem)) {
    os << "vars: " << join_names(sys->vars.names()) << '\n';
    for (const auto& h : sys->system.factors) os << "0 = " << to_string(h ^ true, sys->vars) << '\n';
  } else {
    const auto& p = std::get<gf2n::UniPoly>(problem);
    os << "field: n=" << p.spec().n() << " modulus=" << binary(p.spec().modulus()) << '\n';
    os << "poly: ";
    bool first = true;
    for (std::size_t e = p.coeffs().size(); e-- > 0;) {
      const std::uint32_t c = p.coeffs()[e];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (e == 0) {
        os << hex(c);
        continue;
      }
      if (c != 1) os << hex(c) << '*';
      os << 'X';
      if (e > 1) os << '^' << e;
    }
    if (first) os << '0';
    os << '\n';
  }
  return os.str();
}

const char* kind_name(const Problem& problem) {
  switch (problem.index()) {
    case 0: return "map";
    case 1: return "system";
    default: return "poly";
  }
}

}  // namespace boolinv::io
