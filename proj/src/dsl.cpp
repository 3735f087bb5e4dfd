#include "relrep/dsl.hpp"

#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "relrep/error.hpp"

namespace relrep {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '=') {
      out.push_back({"=", i + 1});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '=' &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

class Parser {
 public:
  FinStructure run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      line_ = line_no;
      auto tokens = tokenize(text.substr(start, end - start));
      if (!tokens.empty()) {
        if (done_) fail(tokens[0], "content after 'end'");
        statement(tokens);
      }
      if (end == text.size()) break;
      start = end + 1;
    }
    if (!done_) throw ParseError(line_no, 1, "missing 'end'");
    return finish();
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    throw ParseError(line_, at.column, what);
  }

  void expect_count(const std::vector<Token>& t, std::size_t n, const char* form) const {
    if (t.size() != n) fail(t.back(), std::string("expected '") + form + "'");
  }

  void expect_eq(const Token& t, const char* form) const {
    if (t.text != "=") fail(t, std::string("expected '=' in '") + form + "'");
  }

  Elem element(const Token& t) const {
    if (!s_) fail(t, "table entry before 'elements'");
    auto e = s_->find(t.text);
    if (!e) fail(t, "unknown element '" + t.text + "'");
    return *e;
  }

  void require_elements(const Token& t) const {
    if (!s_) fail(t, "'" + t.text + "' before 'elements'");
  }

  void statement(const std::vector<Token>& t) {
    const std::string& kw = t[0].text;
    if (kw == "structure") {
      expect_count(t, 2, "structure <name>");
      if (name_) fail(t[0], "duplicate 'structure'");
      name_ = t[1].text;
    } else if (kw == "signature") {
      signature_line(t);
    } else if (kw == "elements") {
      if (!name_) fail(t[0], "'elements' before 'structure'");
      if (!signature_) fail(t[0], "'elements' before 'signature'");
      if (s_) fail(t[0], "duplicate 'elements'");
      if (t.size() < 2) fail(t[0], "'elements' needs at least one id");
      std::vector<std::string> ids;
      std::map<std::string, bool> seen;
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i].text == "=") fail(t[i], "'=' is not a valid element id");
        if (seen[t[i].text]) fail(t[i], "duplicate element '" + t[i].text + "'");
        seen[t[i].text] = true;
        ids.push_back(t[i].text);
      }
      s_.emplace(*name_, *signature_, std::move(ids));
      defined_compose_.assign(s_->size() * s_->size(), false);
    } else if (kw == "domain" || kw == "range" || kw == "converse") {
      require_elements(t[0]);
      expect_count(t, 4, "<op> <x> = <y>");
      expect_eq(t[2], "<op> <x> = <y>");
      Elem x = element(t[1]);
      Elem y = element(t[3]);
      const Signature& sig = s_->signature();
      if (kw == "domain") {
        if (!sig.domain) fail(t[0], "signature has no D");
        set_unary(t, s_->dom(x), y, [&] { s_->set_dom(x, y); });
      } else if (kw == "range") {
        if (!sig.range) fail(t[0], "signature has no R");
        set_unary(t, s_->rng(x), y, [&] { s_->set_rng(x, y); });
      } else {
        if (!sig.converse) fail(t[0], "signature has no converse");
        set_unary(t, s_->conv(x), y, [&] { s_->set_conv(x, y); });
      }
    } else if (kw == "compose") {
      require_elements(t[0]);
      if (!s_->signature().has_composition()) fail(t[0], "signature has no composition");
      expect_count(t, 5, "compose <x> <y> = <z>");
      expect_eq(t[3], "compose <x> <y> = <z>");
      Elem x = element(t[1]);
      Elem y = element(t[2]);
      Elem z = element(t[4]);
      std::size_t cell = static_cast<std::size_t>(x) * s_->size() + y;
      if (defined_compose_[cell] && s_->compose(x, y) != z)
        fail(t[4], "conflicting entry for compose " + t[1].text + " " + t[2].text);
      defined_compose_[cell] = true;
      s_->set_compose(x, y, z);
    } else if (kw == "default") {
      require_elements(t[0]);
      expect_count(t, 4, "default compose = <z>");
      if (t[1].text != "compose") fail(t[1], "expected 'default compose = <z>'");
      expect_eq(t[2], "default compose = <z>");
      if (!s_->signature().has_composition()) fail(t[0], "signature has no composition");
      Elem z = element(t[3]);
      if (default_compose_ && *default_compose_ != z) fail(t[3], "conflicting 'default compose'");
      default_compose_ = z;
    } else if (kw == "le") {
      require_elements(t[0]);
      if (!s_->signature().order) fail(t[0], "signature has no order");
      expect_count(t, 3, "le <x> <y>");
      s_->set_leq(element(t[1]), element(t[2]));
    } else if (kw == "const") {
      require_elements(t[0]);
      expect_count(t, 4, "const <zero|one|id> = <x>");
      expect_eq(t[2], "const <zero|one|id> = <x>");
      Constant c;
      const Signature& sig = s_->signature();
      if (t[1].text == "zero" && sig.zero) {
        c = Constant::zero;
      } else if (t[1].text == "one" && sig.one) {
        c = Constant::one;
      } else if (t[1].text == "id" && sig.identity) {
        c = Constant::identity;
      } else {
        fail(t[1], "constant '" + t[1].text + "' not in signature");
      }
      Elem e = element(t[3]);
      if (auto prev = s_->constant(c); prev && *prev != e) fail(t[3], "conflicting constant " + t[1].text);
      s_->set_constant(c, e);
    } else if (kw == "end") {
      expect_count(t, 1, "end");
      if (!s_) fail(t[0], "'end' before 'elements'");
      done_ = true;
      end_line_ = line_;
    } else {
      fail(t[0], "unknown statement '" + kw + "'");
    }
  }

  template <class Set>
  void set_unary(const std::vector<Token>& t, Elem current, Elem value, Set set) {
    if (current != kUndefined && current != value)
      fail(t[3], "conflicting entry for " + t[0].text + " " + t[1].text);
    set();
  }

  void signature_line(const std::vector<Token>& t) {
    if (signature_) fail(t[0], "duplicate 'signature'");
    Signature sig;
    bool have_compose = false;
    for (std::size_t i = 1; i < t.size(); ++i) {
      const std::string& w = t[i].text;
      if (w == "compose") {
        if (i + 2 >= t.size() || t[i + 1].text != "=") fail(t[i], "expected compose=<angelic|demonic|none>");
        const std::string& kind = t[i + 2].text;
        if (kind == "angelic") {
          sig.composition = CompositionKind::angelic;
        } else if (kind == "demonic") {
          sig.composition = CompositionKind::demonic;
        } else if (kind == "none") {
          sig.composition = CompositionKind::none;
        } else {
          fail(t[i + 2], "unknown composition kind '" + kind + "'");
        }
        have_compose = true;
        i += 2;
      } else if (w == "D") {
        sig.domain = true;
      } else if (w == "R") {
        sig.range = true;
      } else if (w == "conv") {
        sig.converse = true;
      } else if (w == "le") {
        sig.order = true;
      } else if (w == "zero") {
        sig.zero = true;
      } else if (w == "one") {
        sig.one = true;
      } else if (w == "id") {
        sig.identity = true;
      } else {
        fail(t[i], "unknown signature item '" + w + "'");
      }
    }
    if (!have_compose) fail(t[0], "signature needs compose=<kind>");
    try {
      sig.check();
    } catch (const SignatureError& e) {
      fail(t[0], e.what());
    }
    signature_ = sig;
  }

  FinStructure finish() {
    FinStructure& s = *s_;
    const Signature& sig = s.signature();
    const Token at{"end", 1};
    line_ = end_line_;
    const std::size_t n = s.size();
    for (Elem e = 0; e < n; ++e) {
      if (sig.order) s.set_leq(e, e);
      if (sig.domain && s.dom(e) == kUndefined) fail(at, "missing domain " + s.id(e));
      if (sig.range && s.rng(e) == kUndefined) fail(at, "missing range " + s.id(e));
      if (sig.converse && s.conv(e) == kUndefined) fail(at, "missing converse " + s.id(e));
    }
    if (sig.has_composition()) {
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          if (defined_compose_[static_cast<std::size_t>(a) * n + b]) continue;
          if (!default_compose_) fail(at, "missing compose " + s.id(a) + " " + s.id(b));
          s.set_compose(a, b, *default_compose_);
        }
      }
    }
    if (sig.zero && !s.constant(Constant::zero)) fail(at, "missing const zero");
    if (sig.one && !s.constant(Constant::one)) fail(at, "missing const one");
    if (sig.identity && !s.constant(Constant::identity)) fail(at, "missing const id");
    return std::move(s);
  }

  std::size_t line_ = 0;
  std::size_t end_line_ = 0;
  bool done_ = false;
  std::optional<std::string> name_;
  std::optional<Signature> signature_;
  std::optional<FinStructure> s_;
  std::vector<bool> defined_compose_;
  std::optional<Elem> default_compose_;
};

}  // namespace

FinStructure parse_structure(std::string_view text) { return Parser{}.run(text); }

FinStructure parse_structure(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_structure(text);
}

std::string serialize_structure(const FinStructure& s) {
  std::ostringstream out;
  const Signature& sig = s.signature();
  const std::size_t n = s.size();
  out << "structure " << s.name() << "\n";
  out << "signature compose=" << to_string(sig.composition);
  if (sig.domain) out << " D";
  if (sig.range) out << " R";
  if (sig.converse) out << " conv";
  if (sig.order) out << " le";
  if (sig.zero) out << " zero";
  if (sig.one) out << " one";
  if (sig.identity) out << " id";
  out << "\nelements";
  for (const auto& id : s.ids()) out << " " << id;
  out << "\n";
  for (Elem e = 0; e < n; ++e)
    if (sig.domain) out << "domain " << s.id(e) << " = " << s.id(s.dom(e)) << "\n";
  for (Elem e = 0; e < n; ++e)
    if (sig.range) out << "range " << s.id(e) << " = " << s.id(s.rng(e)) << "\n";
  for (Elem e = 0; e < n; ++e)
    if (sig.converse) out << "converse " << s.id(e) << " = " << s.id(s.conv(e)) << "\n";
  if (sig.has_composition()) {
    std::vector<std::size_t> freq(n, 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) ++freq[s.compose(a, b)];
    Elem common = 0;
    for (Elem e = 1; e < n; ++e)
      if (freq[e] > freq[common]) common = e;
    const bool use_default = freq[common] > 1;
    if (use_default) out << "default compose = " << s.id(common) << "\n";
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (!use_default || s.compose(a, b) != common)
          out << "compose " << s.id(a) << " " << s.id(b) << " = " << s.id(s.compose(a, b)) << "\n";
  }
  if (sig.order) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (a != b && s.leq(a, b)) out << "le " << s.id(a) << " " << s.id(b) << "\n";
  }
  if (auto z = s.constant(Constant::zero)) out << "const zero = " << s.id(*z) << "\n";
  if (auto o = s.constant(Constant::one)) out << "const one = " << s.id(*o) << "\n";
  if (auto i = s.constant(Constant::identity)) out << "const id = " << s.id(*i) << "\n";
  out << "end\n";
  return out.str();
}

}  // namespace relrep
