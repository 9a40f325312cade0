#pragma once

// Straight-line PV programs.
//
//   program := stmt*
//   stmt    := "sem" IDENT "=" INT
//            | "proc" IDENT "=" op ("." op)*
//   op      := ("P" | "V") IDENT
//
// `#` comments run to end of line. An operator may be written glued to its
// semaphore ("Pa") or separated ("P a").

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pvtopo/error.hpp"

namespace pvtopo {

enum class OpKind : char { P = 'P', V = 'V' };

struct Operation {
  OpKind kind = OpKind::P;
  std::size_t semaphore = 0;
  bool operator==(const Operation&) const = default;
};

struct Semaphore {
  std::string name;
  std::int64_t capacity = 1;
  bool operator==(const Semaphore&) const = default;
};

struct Process {
  std::string name;
  std::vector<Operation> ops;
  bool operator==(const Process&) const = default;
};

struct ProgramSpec {
  std::vector<Semaphore> semaphores;
  std::vector<Process> processes;
  bool operator==(const ProgramSpec&) const = default;
};

namespace detail {

enum class TokKind { Ident, Int, Equals, Dot, End };

struct Token {
  TokKind kind;
  std::string text;
  SourcePos pos;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    SourcePos at = pos_;
    if (i_ >= src_.size()) return {TokKind::End, "", at};
    char c = src_[i_];
    if (c == '=') return single(TokKind::Equals, at);
    if (c == '.') return single(TokKind::Dot, at);
    if (ident_start(c)) {
      std::size_t start = i_;
      while (i_ < src_.size() && ident_char(src_[i_])) advance();
      return {TokKind::Ident, std::string(src_.substr(start, i_ - start)), at};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      std::size_t start = i_;
      advance();
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) advance();
      std::string text(src_.substr(start, i_ - start));
      if (text == "-" || text == "+")
        throw ParseError(ErrorKind::Syntax, at, "expected a digit after '" + text + "'", {"INT"});
      return {TokKind::Int, text, at};
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string("'") + c + "'"
                            : "byte 0x" + hex(static_cast<unsigned char>(c));
    throw ParseError(ErrorKind::Syntax, at, "unexpected character " + shown);
  }

 private:
  static std::string hex(unsigned char b) {
    const char* digits = "0123456789abcdef";
    return {digits[b >> 4], digits[b & 15]};
  }

  Token single(TokKind k, SourcePos at) {
    std::string text(1, src_[i_]);
    advance();
    return {k, text, at};
  }

  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  ProgramSpec parse() {
    while (tok_.kind != TokKind::End) {
      if (tok_.kind == TokKind::Ident && tok_.text == "sem") {
        semaphore();
      } else if (tok_.kind == TokKind::Ident && tok_.text == "proc") {
        process();
      } else {
        fail({"'sem'", "'proc'", "end of input"});
      }
    }
    resolve();
    return std::move(spec_);
  }

 private:
  struct PendingOp {
    std::size_t process;
    OpKind kind;
    std::string name;
    SourcePos pos;
  };

  void bump() { tok_ = lex_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = tok_.kind == TokKind::End ? "end of input" : "'" + tok_.text + "'";
    std::string msg = "unexpected " + found + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      msg += (i == 0 ? "" : (i + 1 == expected.size() ? " or " : ", ")) + expected[i];
    throw ParseError(ErrorKind::Syntax, tok_.pos, msg, std::move(expected));
  }

  Token expect(TokKind k, const char* what) {
    if (tok_.kind != k) fail({what});
    Token t = tok_;
    bump();
    return t;
  }

  void claim_name(const Token& t) {
    if (!names_.emplace(t.text, t.pos).second)
      throw ParseError(ErrorKind::DuplicateName, t.pos, "name '" + t.text + "' is already declared");
  }

  void semaphore() {
    bump();
    Token name = expect(TokKind::Ident, "semaphore name");
    claim_name(name);
    expect(TokKind::Equals, "'='");
    Token value = expect(TokKind::Int, "capacity");
    std::int64_t cap = 0;
    std::string_view digits = value.text;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cap);
    if (ec != std::errc() || p != digits.data() + digits.size())
      throw ParseError(ErrorKind::NonPositiveCapacity, value.pos,
                       "capacity '" + value.text + "' is out of range");
    if (cap < 1)
      throw ParseError(ErrorKind::NonPositiveCapacity, value.pos,
                       "capacity of '" + name.text + "' must be positive, got " + value.text);
    sem_index_.emplace(name.text, spec_.semaphores.size());
    spec_.semaphores.push_back({name.text, cap});
  }

  void process() {
    bump();
    Token name = expect(TokKind::Ident, "process name");
    claim_name(name);
    expect(TokKind::Equals, "'='");
    std::size_t idx = spec_.processes.size();
    spec_.processes.push_back({name.text, {}});
    operation(idx);
    while (tok_.kind == TokKind::Dot) {
      bump();
      operation(idx);
    }
  }

  void operation(std::size_t proc) {
    if (tok_.kind != TokKind::Ident || (tok_.text[0] != 'P' && tok_.text[0] != 'V'))
      fail({"operation (P<sem> or V<sem>)"});
    Token op = tok_;
    bump();
    OpKind kind = op.text[0] == 'P' ? OpKind::P : OpKind::V;
    std::string sem;
    if (op.text.size() > 1) {
      sem = op.text.substr(1);
    } else {
      sem = expect(TokKind::Ident, "semaphore name").text;
    }
    pending_.push_back({proc, kind, sem, op.pos});
    spec_.processes[proc].ops.push_back({kind, 0});
  }

  void resolve() {
    std::vector<std::size_t> cursor(spec_.processes.size(), 0);
    for (const auto& p : pending_) {
      auto it = sem_index_.find(p.name);
      if (it == sem_index_.end())
        throw ParseError(ErrorKind::UndeclaredSemaphore, p.pos,
                         "semaphore '" + p.name + "' is not declared");
      spec_.processes[p.process].ops[cursor[p.process]++].semaphore = it->second;
    }
  }

  Lexer lex_;
  Token tok_;
  ProgramSpec spec_;
  std::unordered_map<std::string, SourcePos> names_;
  std::unordered_map<std::string, std::size_t> sem_index_;
  std::vector<PendingOp> pending_;
};

}  // namespace detail

inline ProgramSpec parse_program(std::string_view text) { return detail::Parser(text).parse(); }

// Canonical text form; parse_program(print_program(s)) == s.
inline std::string print_program(const ProgramSpec& spec) {
  std::string out;
  for (const auto& s : spec.semaphores) out += "sem " + s.name + " = " + std::to_string(s.capacity) + "\n";
  for (const auto& p : spec.processes) {
    out += "proc " + p.name + " =";
    for (std::size_t t = 0; t < p.ops.size(); ++t) {
      out += t == 0 ? " " : ".";
      out += static_cast<char>(p.ops[t].kind);
      out += spec.semaphores.at(p.ops[t].semaphore).name;
    }
    out += "\n";
  }
  return out;
}

struct Warning {
  enum class Kind { NonMatchedPV, OverRelease };
  Kind kind;
  std::size_t process;
  std::size_t semaphore;
  // 1-based index of the offending operation (OverRelease only).
  std::size_t position = 0;
  bool operator==(const Warning&) const = default;
};

inline std::string describe(const ProgramSpec& spec, const Warning& w) {
  const auto& proc = spec.processes.at(w.process).name;
  const auto& sem = spec.semaphores.at(w.semaphore).name;
  if (w.kind == Warning::Kind::NonMatchedPV)
    return "NonMatchedPV(" + proc + ", " + sem + ")";
  return "OverRelease(" + proc + ", " + sem + ", position " + std::to_string(w.position) + ")";
}

// Unbalanced or over-releasing processes. One OverRelease per (process,
// semaphore), at the first operation that drives the count negative.
inline std::vector<Warning> lint_program(const ProgramSpec& spec) {
  std::vector<Warning> out;
  const std::size_t m = spec.semaphores.size();
  for (std::size_t i = 0; i < spec.processes.size(); ++i) {
    std::vector<std::int64_t> held(m, 0);
    std::vector<bool> reported(m, false);
    const auto& ops = spec.processes[i].ops;
    for (std::size_t t = 0; t < ops.size(); ++t) {
      std::size_t j = ops[t].semaphore;
      held[j] += ops[t].kind == OpKind::P ? 1 : -1;
      if (held[j] < 0 && !reported[j]) {
        reported[j] = true;
        out.push_back({Warning::Kind::OverRelease, i, j, t + 1});
      }
    }
    for (std::size_t j = 0; j < m; ++j)
      if (held[j] != 0) out.push_back({Warning::Kind::NonMatchedPV, i, j, 0});
  }
  return out;
}

}  // namespace pvtopo
