#include "mib/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace mib::io {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), col(c) {}

namespace {

const std::set<std::string> kVectors{"shift", "orders", "abscissas", "weights", "multiplicity"};
const std::set<std::string> kTables{"gamma", "points", "support"};
const std::set<std::string> kScalars{"vars"};

struct Line {
  std::size_t no;
  std::string text;  // comment stripped
};

struct Cursor {
  std::vector<Line> lines;
  std::size_t pos = 0;

  bool done() const { return pos >= lines.size(); }
  const Line& next(std::size_t after_line, const char* what) {
    if (done()) throw ParseError(after_line + 1, 1, std::string("unexpected end of input, expected ") + what);
    return lines[pos++];
  }
};

// Whitespace-separated tokens with their 1-based columns.
std::vector<std::pair<std::string, std::size_t>> tokens(const std::string& s, char extra = ' ') {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == extra)) ++i;
    std::size_t b = i;
    while (i < s.size() && !(s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == extra)) ++i;
    if (i > b) out.push_back({s.substr(b, i - b), b + 1});
  }
  return out;
}

u64 number(const std::string& tok, std::size_t line, std::size_t col) {
  u64 v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(line, col, "expected a nonnegative integer, got '" + tok + "'");
  return v;
}

u64 element(const PrimeField& F, const std::string& tok, std::size_t line, std::size_t col) {
  u64 v = number(tok, line, col);
  if (v >= F.modulus()) throw ParseError(line, col, "entry " + tok + " is not reduced modulo p");
  return v;
}

std::vector<u64> int_line(const Line& l, std::size_t expect) {
  auto t = tokens(l.text);
  if (t.size() != expect)
    throw ParseError(l.no, 1, "expected " + std::to_string(expect) + " integers, got " + std::to_string(t.size()));
  std::vector<u64> v;
  for (auto& [s, c] : t) v.push_back(number(s, l.no, c));
  return v;
}

const PrimeField& need_field(const Document& d, const Line& l) {
  if (!d.field) throw ParseError(l.no, 1, "a 'field p=<prime>' line must come first");
  return *d.field;
}

// Entries split on ';' with the starting column of each.
std::vector<std::pair<std::string, std::size_t>> split_entries(const std::string& s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t b = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ';') {
      out.push_back({s.substr(b, i - b), b + 1});
      b = i + 1;
    }
  return out;
}

}  // namespace

Document parse(const std::string& text) {
  Cursor cur;
  {
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
      ++no;
      auto h = raw.find('#');
      if (h != std::string::npos) raw.erase(h);
      if (tokens(raw).empty()) continue;
      cur.lines.push_back({no, raw});
    }
  }
  Document doc;
  while (!cur.done()) {
    const Line& hl = cur.next(0, "a section");
    auto t = tokens(hl.text);
    const std::string& kw = t[0].first;
    auto arg = [&](std::size_t i) {
      if (t.size() <= i) throw ParseError(hl.no, hl.text.size() + 1, "missing argument for '" + kw + "'");
      return number(t[i].first, hl.no, t[i].second);
    };
    auto arity = [&](std::size_t n) {
      if (t.size() != n + 1) throw ParseError(hl.no, t.size() > n + 1 ? t[n + 1].second : hl.text.size() + 1, "'" + kw + "' takes " + std::to_string(n) + " argument(s)");
    };

    if (kw == "field") {
      if (doc.field) throw ParseError(hl.no, t[0].second, "repeated field line");
      if (t.size() != 2 || t[1].first.rfind("p=", 0) != 0) throw ParseError(hl.no, t[0].second, "expected 'field p=<prime>'");
      u64 p = number(t[1].first.substr(2), hl.no, t[1].second + 2);
      try {
        doc.field = PrimeField(p);
      } catch (const std::invalid_argument& e) {
        throw ParseError(hl.no, t[1].second + 2, e.what());
      }
    } else if (kw == "mat") {
      arity(2);
      const PrimeField& F = need_field(doc, hl);
      std::size_t r = arg(1), c = arg(2);
      Matrix M(F, r, c);
      for (std::size_t i = 0; i < r && c > 0; ++i) {
        const Line& l = cur.next(hl.no, "a matrix row");
        auto v = tokens(l.text);
        if (v.size() != c) throw ParseError(l.no, 1, "expected " + std::to_string(c) + " entries, got " + std::to_string(v.size()));
        for (std::size_t j = 0; j < c; ++j) M(i, j) = element(F, v[j].first, l.no, v[j].second);
      }
      doc.items.push_back(std::move(M));
    } else if (kw == "polymat") {
      arity(2);
      const PrimeField& F = need_field(doc, hl);
      std::size_t r = arg(1), c = arg(2);
      PolyMatrix M(F, r, c);
      for (std::size_t i = 0; i < r && c > 0; ++i) {
        const Line& l = cur.next(hl.no, "a polynomial matrix row");
        auto entries = split_entries(l.text);
        if (entries.size() != c)
          throw ParseError(l.no, 1, "expected " + std::to_string(c) + " entries, got " + std::to_string(entries.size()));
        for (std::size_t j = 0; j < c; ++j) {
          std::vector<u64> co;
          for (auto& [s, col] : tokens(entries[j].first, ',')) co.push_back(element(F, s, l.no, entries[j].second + col - 1));
          M(i, j) = Poly(F, std::move(co));
        }
      }
      doc.items.push_back(std::move(M));
    } else if (kw == "jordan") {
      arity(1);
      std::size_t n = arg(1);
      JordanRep J;
      for (std::size_t i = 0; i < n; ++i) {
        const Line& l = cur.next(hl.no, "a Jordan block");
        auto v = int_line(l, 2);
        if (doc.field && v[0] >= doc.field->modulus()) throw ParseError(l.no, 1, "eigenvalue is not reduced modulo p");
        if (v[1] == 0) throw ParseError(l.no, 1, "block size must be positive");
        J.blocks.push_back({v[0], v[1]});
      }
      doc.items.push_back(std::move(J));
    } else if (kVectors.count(kw)) {
      arity(1);
      std::size_t n = arg(1);
      Vector v{kw, {}};
      if (n > 0)
        for (u64 x : int_line(cur.next(hl.no, "a line of integers"), n)) v.values.push_back(static_cast<Degree>(x));
      doc.items.push_back(std::move(v));
    } else if (kTables.count(kw)) {
      arity(1);
      std::size_t n = arg(1);
      Table tb{kw, {}};
      for (std::size_t i = 0; i < n; ++i) {
        const Line& l = cur.next(hl.no, "a table row");
        std::vector<u64> row;
        for (auto& [s, c] : tokens(l.text)) row.push_back(number(s, l.no, c));
        tb.rows.push_back(std::move(row));
      }
      doc.items.push_back(std::move(tb));
    } else if (kScalars.count(kw)) {
      arity(1);
      doc.items.push_back(Scalar{kw, arg(1)});
    } else {
      throw ParseError(hl.no, t[0].second, "unknown section '" + kw + "'");
    }
  }
  return doc;
}

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string serialize(const Document& doc) {
  std::ostringstream o;
  if (doc.field) o << "field p=" << doc.field->modulus() << '\n';
  for (const Item& it : doc.items) {
    if (auto* M = std::get_if<Matrix>(&it)) {
      o << "mat " << M->rows() << ' ' << M->cols() << '\n';
      for (std::size_t i = 0; i < M->rows() && M->cols(); ++i) {
        for (std::size_t j = 0; j < M->cols(); ++j) o << (j ? " " : "") << (*M)(i, j);
        o << '\n';
      }
    } else if (auto* P = std::get_if<PolyMatrix>(&it)) {
      o << "polymat " << P->rows() << ' ' << P->cols() << '\n';
      for (std::size_t i = 0; i < P->rows() && P->cols(); ++i) {
        for (std::size_t j = 0; j < P->cols(); ++j) {
          const Poly& f = (*P)(i, j);
          // A lone zero entry would be a blank line, so it is spelled out.
          o << (j ? ";" : "") << (f.is_zero() && P->cols() == 1 ? "0" : join(f.coeffs(), ","));
        }
        o << '\n';
      }
    } else if (auto* J = std::get_if<JordanRep>(&it)) {
      o << "jordan " << J->blocks.size() << '\n';
      for (const auto& b : J->blocks) o << b.eigenvalue << ' ' << b.size << '\n';
    } else if (auto* V = std::get_if<Vector>(&it)) {
      o << V->name << ' ' << V->values.size() << '\n';
      if (!V->values.empty()) o << join(V->values, " ") << '\n';
    } else if (auto* T = std::get_if<Table>(&it)) {
      o << T->name << ' ' << T->rows.size() << '\n';
      for (const auto& r : T->rows) o << join(r, " ") << '\n';
    } else if (auto* S = std::get_if<Scalar>(&it)) {
      o << S->name << ' ' << S->value << '\n';
    }
  }
  return o.str();
}

namespace {

template <class T, class Pred>
const T* find_nth(const std::vector<Item>& items, std::size_t nth, Pred pred) {
  for (const Item& it : items)
    if (auto* p = std::get_if<T>(&it); p && pred(*p) && nth-- == 0) return p;
  return nullptr;
}

}  // namespace

const Matrix* Document::matrix(std::size_t nth) const {
  return find_nth<Matrix>(items, nth, [](const Matrix&) { return true; });
}
const PolyMatrix* Document::polymat(std::size_t nth) const {
  return find_nth<PolyMatrix>(items, nth, [](const PolyMatrix&) { return true; });
}
const JordanRep* Document::jordan() const {
  return find_nth<JordanRep>(items, 0, [](const JordanRep&) { return true; });
}
const Vector* Document::vector(const std::string& name, std::size_t nth) const {
  return find_nth<Vector>(items, nth, [&](const Vector& v) { return v.name == name; });
}
std::vector<const Table*> Document::tables(const std::string& name) const {
  std::vector<const Table*> out;
  for (const Item& it : items)
    if (auto* t = std::get_if<Table>(&it); t && t->name == name) out.push_back(t);
  return out;
}
const Scalar* Document::scalar(const std::string& name) const {
  return find_nth<Scalar>(items, 0, [&](const Scalar& s) { return s.name == name; });
}

Document read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(doc);
}

}  // namespace mib::io
